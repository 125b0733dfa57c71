#ifndef TWISTCOH_GRADED_QUOTIENT_HPP
#define TWISTCOH_GRADED_QUOTIENT_HPP

#include <map>
#include <mutex>
#include <optional>
#include <vector>

#include "twistcoh/matrix.hpp"
#include "twistcoh/polynomial.hpp"

namespace twistcoh {

/*
 * Degreewise toolkit for S/I, S = Q[x0..x_{v-1}], I = <g_1..g_r> homogeneous.
 *
 * Each degree k gets: the monomial basis of S_k, the dimension of I_k, a
 * monomial basis of (S/I)_k chosen greedily (first monomial in canonical
 * order whose class is independent of the ideal piece and the earlier picks),
 * and reduction of arbitrary elements to coordinates in that basis.
 *
 * When every generator is a single term the ideal is monomial and everything
 * is divisibility bookkeeping; otherwise the degree piece is handled by exact
 * elimination on [ideal columns | identity].  The linear-algebra path can be
 * forced (tests cross-check the two paths on monomial inputs).
 *
 * Per-degree results are memoized; const methods are safe to call from
 * several threads.
 */
class GradedQuotient {
public:
    enum class Strategy { automatic, linear_algebra };

    GradedQuotient(int num_vars, std::vector<HomogeneousPolynomial> generators,
                   Strategy strategy = Strategy::automatic);

    int num_vars() const { return num_vars_; }
    const std::vector<HomogeneousPolynomial>& generators() const {
        return generators_;
    }
    bool monomial_path() const { return monomial_; }

    int ideal_dimension(int k) const;
    int quotient_dimension(int k) const;
    std::vector<Monomial> quotient_basis(int k) const;

    // Coordinates of the residue class of p in quotient_basis(p.degree()).
    std::vector<Rational> reduce(const HomogeneousPolynomial& p) const;

    // Matrix of multiplication by f, (S/I)_i -> (S/I)_{i+deg f}, in the chosen
    // bases: rows = quotient_dimension(i + deg f), cols = quotient_dimension(i).
    RationalMatrix multiplication_matrix(const HomogeneousPolynomial& f,
                                         int i) const;
    // Its rank, computed without materializing quotient coordinates.
    int multiplication_rank(const HomogeneousPolynomial& f, int i) const;

    // Cofactors (c_1..c_r) with g = sum c_i g_i, or nullopt when g is not in
    // the ideal.  Zero polynomial cofactors where a generator is unused.
    std::optional<std::vector<HomogeneousPolynomial>> ideal_cofactors(
        const HomogeneousPolynomial& g) const;

    // Spanning columns of I_k as coefficient vectors over the monomials of
    // S_k (one column per generator*multiplier, not linearly independent).
    std::vector<std::vector<Rational>> ideal_span_columns(int k) const;

    // Linear functional on S_rho vanishing on I_rho, normalized to value 1 on
    // the quotient basis monomial; requires quotient_dimension(rho) == 1.
    // Returned as values per monomial of S_rho in canonical order.
    std::vector<Rational> socle_functional(int rho) const;

private:
    struct DegreeData {
        std::vector<Monomial> monomials;
        std::map<Monomial, int> monomial_index;
        std::vector<std::pair<int, Monomial>> columns;  // (generator, multiplier)
        int ideal_dim = 0;
        std::vector<Monomial> basis;
        std::vector<int> basis_rows;       // positions of basis monomials in S_k
        std::vector<bool> row_in_ideal;    // monomial path only
    };

    const DegreeData& data(int k) const;
    DegreeData build(int k) const;
    RationalMatrix ideal_matrix(const DegreeData& d) const;

    int num_vars_;
    std::vector<HomogeneousPolynomial> generators_;
    bool monomial_;

    mutable std::mutex mu_;
    mutable std::map<int, DegreeData> memo_;
};

}  // namespace twistcoh

#endif
