#ifndef TWISTCOH_VECTORFIELDS_HPP
#define TWISTCOH_VECTORFIELDS_HPP

#include <optional>
#include <vector>

#include "twistcoh/milnor.hpp"

namespace twistcoh {

/*
 * Twisted vector-field spaces as polynomial linear algebra.  A section of
 * T(t) on P^m is a tuple (s_0..s_m) of degree-(t+1) forms; two tuples agree
 * as sections exactly when they differ by p*(x_0..x_m) for a degree-t form p
 * (Euler relation).  Everything here is H^0 of explicit kernels/quotients in
 * those coordinates.
 */
struct PolyVectorField {
    std::vector<HomogeneousPolynomial> components;  // degree t+1 each
    int twist = -1;

    // Validates component count >= 2, common variable count, degrees t+1
    // (zero components allowed), t >= -1.
    static PolyVectorField make(std::vector<HomogeneousPolynomial> components,
                                int twist);
};

struct SectionSpace {
    int dimension = 0;
    std::vector<PolyVectorField> basis;  // independent representatives
};

// The data of Y = {h = 0} and optionally X = {f = h = 0} inside P^{v-1},
// with the twist under consideration.
struct TangencyProblem {
    HomogeneousPolynomial h;
    std::optional<HomogeneousPolynomial> f;
    int t = 0;
};

// H^0(P^m, T(t)): all tuples modulo Euler multiples.  Dimension
// (m+1)*C(m+t+1, m) - C(m+t, m) for t >= 0, m+1 at t = -1, 0 below.
SectionSpace h0_tangent_projective(int m, int t);

// H^0(Y, T_Y(t)) for Y = {h = 0} smooth: tuples with sum s_i dh/dx_i in <h>,
// modulo Euler multiples and h*(arbitrary tuples).  Throws on singular h
// (certified through the Milnor algebra degree bound).
SectionSpace h0_tangent_hypersurface(const HomogeneousPolynomial& h, int t);

// H^0(X, T_Y(t)|_X) for X = {f = h = 0}: tuples with sum s_i dh/dx_i in
// <f,h> at degree t + deg h, modulo tuples vanishing along X (all
// x_i s_j - x_j s_i in <f,h> at degree t+2).  Validates: f present, h
// smooth, f and h without common factor (exact dimension count), and
// dim X >= 2 (at least 5 variables).
SectionSpace h0_tangent_restricted(const TangencyProblem& tp);

struct RestrictionReport {
    bool surjective = false;
    int dim_on_y = 0;
    int dim_on_x = 0;
    int rank = 0;  // rank of the restriction map between the two spaces
};

// Both section spaces plus the rank of the restriction
// H^0(Y, T_Y(t)) -> H^0(X, T_Y(t)|_X).
RestrictionReport restriction_surjectivity(const TangencyProblem& tp);

// Largest t for which the extension argument below is guaranteed:
// floor((rho + d)/2) - d_h.
int extension_threshold(int rho, int d, int d_h);

// Extends a field s tangent along X to one tangent along Y: writes
// sum s_i dh/dx_i = g*f + p*h, tests g against the Jacobian ideal of h, and
// on success returns s - (g_0 f, ..., g_m f) with g = sum g_i dh/dx_i.
// nullopt means obstructed (g outside the Jacobian ideal) - possible only
// beyond the threshold or for a non-general f.  Throws when s is not
// tangent along X.
std::optional<PolyVectorField> extend_section(const TangencyProblem& tp,
                                              const PolyVectorField& s);

// Seeded draw of a degree-d form certified "general" for the hypersurface of
// ma in the exact sense consumed downstream: multiplication by the draw has
// maximal rank on every graded piece (faithful).  Redraws up to 16 times;
// throws std::runtime_error if no draw passes.
HomogeneousPolynomial general_divisor(const MilnorAlgebra& ma, int d,
                                      unsigned long long seed = kDefaultSeed);

}  // namespace twistcoh

#endif
