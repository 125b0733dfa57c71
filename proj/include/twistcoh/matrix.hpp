#ifndef TWISTCOH_MATRIX_HPP
#define TWISTCOH_MATRIX_HPP

#include <optional>
#include <vector>

#include "twistcoh/rational.hpp"

namespace twistcoh {

// Dense matrix of exact rationals.  Row-major.
class RationalMatrix {
public:
    RationalMatrix() : rows_(0), cols_(0) {}
    RationalMatrix(int rows, int cols);

    static RationalMatrix from_rows(const std::vector<std::vector<Rational>>& rows);
    static RationalMatrix from_columns(const std::vector<std::vector<Rational>>& cols);
    static RationalMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rational& at(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
    const Rational& at(int i, int j) const {
        return data_[static_cast<size_t>(i) * cols_ + j];
    }

    RationalMatrix transpose() const;
    // columns of `o` appended on the right
    RationalMatrix augmented(const RationalMatrix& o) const;
    std::vector<Rational> column(int j) const;

    RationalMatrix operator*(const RationalMatrix& o) const;
    bool operator==(const RationalMatrix& o) const;

private:
    int rows_, cols_;
    std::vector<Rational> data_;
};

/*
 * Fraction-free row echelon form (Bareiss).  Rationals are cleared to integer
 * rows (multiply each row by the lcm of its denominators, then divide out the
 * content) — both operations preserve rank, and preserve solution sets when
 * the right-hand side sits in the same row.
 *
 * Pivoting walks columns left to right and only columns < pivot_limit may
 * produce pivots; trailing columns (used to carry right-hand sides) are
 * updated but never pivoted.  Row updates use the one-step Bareiss rule
 *     a'_jk = (p * a_jk - a_jc * a_pk) / p_prev
 * whose divisions are exact (entries are minors of the original matrix).
 *
 * Rows whose pivot-column entry is already zero are left alone; they keep the
 * scaling of the last step that touched them and a per-row stage marker.  A
 * row is brought up to the current stage on demand by the exact rescale
 * entry * piv[s] / piv[stage].  On matrices whose columns are near-unit
 * vectors (monomial ideals, contraction maps) this makes elimination cost
 * proportional to the number of nonzero entries instead of rows*cols.
 */
struct EchelonForm {
    std::vector<std::vector<Int>> rows;  // per-row scalar multiples of true rows
    std::vector<int> pivot_cols;         // pivot i sits at (i, pivot_cols[i])
    int total_cols = 0;
    int pivot_limit = 0;

    int rank() const { return static_cast<int>(pivot_cols.size()); }
};

EchelonForm echelon_form(const RationalMatrix& m, int pivot_limit);
EchelonForm echelon_form_integer(std::vector<std::vector<Int>> rows,
                                 int pivot_limit);

int rank(const RationalMatrix& m);

// Solve a x = b.  nullopt when inconsistent; free variables are set to zero.
// Throws std::invalid_argument on dimension mismatch.
std::optional<std::vector<Rational>> solve_linear(const RationalMatrix& a,
                                                  const std::vector<Rational>& b);

// Solve a X = B column by column with one elimination.  Result entry j is
// nullopt when column j of B is outside the column span of a.
std::vector<std::optional<std::vector<Rational>>> solve_many(
    const RationalMatrix& a, const RationalMatrix& b);

// Basis of the right null space { x : m x = 0 }.
std::vector<std::vector<Rational>> nullspace(const RationalMatrix& m);

// Blocks stacked top to bottom; all must share a column count (empty blocks
// with zero rows are skipped).
RationalMatrix vertical_stack(const std::vector<RationalMatrix>& blocks);

}  // namespace twistcoh

#endif
