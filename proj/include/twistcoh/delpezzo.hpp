#pragma once

#include <vector>

#include "twistcoh/polynomial.hpp"
#include "twistcoh/matrix.hpp"

namespace twistcoh {

// Picard lattice of the blow-up of the plane in r general points: basis
// E_0 (pullback of a line), E_1..E_r (exceptional divisors), intersection
// form diag(1, -1, ..., -1).
struct PicardLattice {
    int r = 0;

    static PicardLattice make(int r);  // throws unless 0 <= r <= 8
};

// a*E_0 + sum b_j E_j with integer coefficients.
struct DivisorClass {
    long long a = 0;
    std::vector<long long> b;

    bool operator==(const DivisorClass& o) const { return a == o.a && b == o.b; }
};

DivisorClass make_class(const PicardLattice& lat, long long a,
                        std::vector<long long> b);

// a*a' - sum b_j*b_j'
long long intersect(const PicardLattice& lat, const DivisorClass& d1,
                    const DivisorClass& d2);

// K = -3E_0 + sum E_j ; the surface degree is K^2 = 9 - r.
DivisorClass canonical_class(const PicardLattice& lat);
long long surface_degree(const PicardLattice& lat);

// All classes D with D^2 = -1 and D.K = -1 on the blow-up in six points
// (bounded integer search).  There are exactly 27: the six exceptional
// classes, the fifteen E_0 - E_i - E_j, and the six 2E_0 - sum_{j != i} E_j.
std::vector<DivisorClass> enumerate_lines(const PicardLattice& lat);

struct LineFamilies {
    int exceptional = 0;     // a = 0
    int between_points = 0;  // a = 1
    int conics = 0;          // a = 2
};
LineFamilies classify_lines(const std::vector<DivisorClass>& lines);

// Candidate first Chern classes of saturated invertible subsheaves of the
// cotangent bundle of a cubic surface with K.c_1 = 2, run through the
// elimination chain: after the degree constraint (with the pulled-back part
// at least 3), the per-coefficient bounds, and the endgame sum bound, one
// sorted class survives: (-4; 2,2,2,2,1,1).  The explicit four-point form
// rules that class out too; with `apply_form_exclusion` the list is empty.
std::vector<DivisorClass> prop63_search(bool apply_form_exclusion = false);

// True for the classes -4E_0 + 2(E_a+E_b+E_c+E_d) + (extra exceptional
// part): the four-point form below vanishes only at seven points, of which
// no five are in general position, so no saturated subsheaf has this class.
bool excluded_by_form(const DivisorClass& d);

// A twisted one form on the plane, written against the Euler presentation:
// three components (g_0, g_1, g_2) of degree a-1 with sum x_i g_i = 0.
struct ProjectiveOneForm {
    std::vector<HomogeneousPolynomial> g;
    int twist = 0;  // a

    // validates: exactly three components in three variables, common degree,
    // not all zero, and sum x_i g_i = 0
    static ProjectiveOneForm make(std::vector<HomogeneousPolynomial> g);
};

struct OneFormSpace {
    int dimension = 0;
    std::vector<ProjectiveOneForm> basis;
};

// Basis of the twist-a one forms (a >= 0): the kernel of the contraction
// (g_0,g_1,g_2) |-> sum x_i g_i on triples of degree-(a-1) forms.
OneFormSpace projective_one_forms(int a);

// x_0 dx_1 - x_1 dx_0, twist 2: the pencil of lines through [0:0:1].
ProjectiveOneForm pencil_form();

// x_1 x_2 (x_1 - x_2) dx_0 + x_0 x_2 (x_2 - x_0) dx_1 + x_0 x_1 (x_0 - x_1) dx_2,
// twist 4: vanishes exactly at the four standard points and the three
// diagonal points [0:1:1], [1:0:1], [1:1:0].
ProjectiveOneForm four_point_form();

struct PlanePoint {
    std::vector<Rational> coords;  // normalized: first nonzero coordinate 1

    bool operator==(const PlanePoint& o) const { return coords == o.coords; }
};
PlanePoint make_point(Rational x0, Rational x1, Rational x2);

struct ZeroLocusReport {
    std::vector<PlanePoint> points;  // exact zeros found by the bounded search
    int scheme_degree = 0;           // length of the zero scheme
    bool complete = false;           // every zero is reduced, rational, in range
};

// Common zeros of the three components over a bounded rational grid
// (numerators and denominators up to 8), each candidate verified exactly.
// The length of the zero scheme is read off from the stabilized quotient
// dimensions; a zero locus of positive dimension throws.
ZeroLocusReport zeros_of_form(const ProjectiveOneForm& w);

// Length a section with finite zeros must have: a^2 - 3a + 3.
long long one_form_zero_degree(int a);

}  // namespace twistcoh
