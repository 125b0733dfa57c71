#ifndef TWISTCOH_MILNOR_HPP
#define TWISTCOH_MILNOR_HPP

#include <optional>
#include <vector>

#include "twistcoh/graded_quotient.hpp"
#include "twistcoh/matrix.hpp"
#include "twistcoh/polynomial.hpp"

namespace twistcoh {

// Default seed for every "general position" draw in the library.  Seeded
// draws are verified against the exact condition they are supposed to
// satisfy (maximal rank, coprimality, ...) and redrawn on failure, so the
// seed only fixes which verified representative gets picked.
inline constexpr unsigned long long kDefaultSeed = 20260825ULL;

// A hypersurface {h = 0} in P^{num_vars - 1}.
struct HypersurfaceSpec {
    int num_vars = 0;
    int degree_h = 0;
    HomogeneousPolynomial h;

    // Validates: num_vars >= 1, degree >= 2, h nonzero in num_vars variables.
    static HypersurfaceSpec from_polynomial(const HomogeneousPolynomial& h);
    static HypersurfaceSpec fermat(int num_vars, int degree_h);
};

// The partial derivatives dh/dx_i, one per variable, each of degree d-1.
std::vector<HomogeneousPolynomial> jacobian_ideal(const HypersurfaceSpec& spec);

// Degree-k piece of the ideal <gens> inside S_k: a row basis over the
// canonical monomial list of S_k.  Rows of `basis` are independent and span
// the piece; dimension == basis.rows().
struct IdealPiece {
    std::vector<Monomial> ambient_monomials;
    RationalMatrix basis;
    int dimension = 0;
};
IdealPiece ideal_degree_piece(const std::vector<HomogeneousPolynomial>& gens,
                              int k);

// Coefficient list of prod_i (1 + t + ... + t^{tops[i]}).  Used both for the
// generic hypersurface Hilbert series (tops = {d-2, ..., d-2}) and monomial
// complete intersections <x_i^{d_i}> (tops = {d_i - 1}).
std::vector<int> geometric_product_coefficients(const std::vector<int>& tops);

/*
 * The graded algebra Q[x_0..x_{v-1}] / <dh/dx_0, ..., dh/dx_{v-1}>.
 *
 * For smooth h this is a finite-dimensional Gorenstein algebra with top
 * degree rho = (d-2)*v; singularity shows up as a nonzero piece in degree
 * rho+1 and is reported rather than hidden (hilbert_series -> nullopt).
 * Immutable after construction; safe for concurrent readers.
 */
class MilnorAlgebra {
public:
    explicit MilnorAlgebra(
        HypersurfaceSpec spec,
        GradedQuotient::Strategy strategy = GradedQuotient::Strategy::automatic);

    const HypersurfaceSpec& spec() const { return spec_; }
    const std::vector<HomogeneousPolynomial>& jacobian_generators() const {
        return gens_;
    }
    const GradedQuotient& quotient() const { return quotient_; }

    // Nominal top degree (d-2)*num_vars; the actual top degree equals this
    // exactly when h is smooth.
    int rho() const { return rho_; }

    int dimension(int i) const;
    std::vector<Monomial> basis(int i) const;

    // True when the degree-(rho+1) piece vanishes, which certifies the
    // algebra finite-dimensional (degree pieces are zero from then on) and
    // hence h smooth.
    bool artinian_within_bound() const;

    // Dimensions from degree 0 through the last nonzero piece; nullopt when
    // the piece at rho+1 is still nonzero ("not finite within bound").
    std::optional<std::vector<int>> hilbert_series() const;

    // Finite, top degree exactly rho, and dim_i == dim_{rho-i} throughout.
    bool hilbert_symmetric() const;
    // Finite and dimensions rise then fall (used to justify the short
    // faithfulness check below).
    bool hilbert_unimodal() const;

    // Matrix of multiplication by f from degree i to degree i+deg f, in the
    // canonical quotient bases (rows = target dimension, cols = source).
    RationalMatrix multiplication_map(const HomogeneousPolynomial& f,
                                      int i) const;
    int multiplication_rank(const HomogeneousPolynomial& f, int i) const;

    // f of degree j is faithful when x f has maximal rank on every graded
    // piece.  Under symmetry + unimodality this reduces to injectivity for
    // 2i <= rho - j (Gorenstein duality supplies the surjective half), and
    // that short check is what runs; otherwise every rank is checked.
    // Throws if the algebra is not finite within bound.
    bool is_faithful(const HomogeneousPolynomial& f) const;
    // The definition verified literally on every piece 0..rho.
    bool is_faithful_via_all_ranks(const HomogeneousPolynomial& f) const;

    // Pairing M_i x M_{rho-i} -> M_rho = Q via the socle functional; entry
    // (r, c) is the socle coefficient of basis_i[r] * basis_{rho-i}[c].
    RationalMatrix pairing_matrix(int i) const;
    // Full rank means rank == min(dim_i, dim_{rho-i}).
    bool pairing_full_rank(int i) const;

private:
    HypersurfaceSpec spec_;
    std::vector<HomogeneousPolynomial> gens_;
    int rho_;
    GradedQuotient quotient_;
};

// Lefschetz-power certification for the monomial complete intersection
// <x_1^{d_1}, ..., x_r^{d_r}>: find a linear form l such that x l^d has
// maximal rank on every graded piece for every 1 <= d <= power_bound.
struct SlpCheck {
    bool has_slp = false;
    HomogeneousPolynomial witness;  // meaningful only when has_slp
    int attempts = 0;
    int power_bound = 0;
    int socle_degree = 0;
};

SlpCheck check_slp(const std::vector<int>& degrees, int power_bound,
                   unsigned long long seed = kDefaultSeed);

// Cofactors c_i with g = sum c_i * gens[i], or nullopt when g is not in the
// ideal.  Exact linear algebra on the degree piece of g.
std::optional<std::vector<HomogeneousPolynomial>> ideal_membership(
    const HomogeneousPolynomial& g,
    const std::vector<HomogeneousPolynomial>& gens);

}  // namespace twistcoh

#endif
