#include "twistcoh/matrix.hpp"

#include <stdexcept>

namespace twistcoh {

RationalMatrix::RationalMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0)
        throw std::invalid_argument("RationalMatrix: negative dimension");
    data_.assign(static_cast<size_t>(rows) * cols, Rational(0));
}

RationalMatrix RationalMatrix::from_rows(
    const std::vector<std::vector<Rational>>& rows) {
    int r = static_cast<int>(rows.size());
    int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
    RationalMatrix m(r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[i].size()) != c)
            throw std::invalid_argument("from_rows: ragged rows");
        for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

RationalMatrix RationalMatrix::from_columns(
    const std::vector<std::vector<Rational>>& cols) {
    int c = static_cast<int>(cols.size());
    int r = c == 0 ? 0 : static_cast<int>(cols[0].size());
    RationalMatrix m(r, c);
    for (int j = 0; j < c; ++j) {
        if (static_cast<int>(cols[j].size()) != r)
            throw std::invalid_argument("from_columns: ragged columns");
        for (int i = 0; i < r; ++i) m.at(i, j) = cols[j][i];
    }
    return m;
}

RationalMatrix RationalMatrix::identity(int n) {
    RationalMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Rational(1);
    return m;
}

RationalMatrix RationalMatrix::transpose() const {
    RationalMatrix m(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
    return m;
}

RationalMatrix RationalMatrix::augmented(const RationalMatrix& o) const {
    if (o.rows_ != rows_)
        throw std::invalid_argument("augmented: row count mismatch");
    RationalMatrix m(rows_, cols_ + o.cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) m.at(i, j) = at(i, j);
        for (int j = 0; j < o.cols_; ++j) m.at(i, cols_ + j) = o.at(i, j);
    }
    return m;
}

std::vector<Rational> RationalMatrix::column(int j) const {
    std::vector<Rational> v(rows_);
    for (int i = 0; i < rows_; ++i) v[i] = at(i, j);
    return v;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& o) const {
    if (cols_ != o.rows_)
        throw std::invalid_argument("matrix product: inner dimension mismatch");
    RationalMatrix m(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Rational& a = at(i, k);
            if (a.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j) {
                const Rational& b = o.at(k, j);
                if (b.is_zero()) continue;
                m.at(i, j) += a * b;
            }
        }
    return m;
}

bool RationalMatrix::operator==(const RationalMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

namespace {

// Clear denominators and divide out content, row by row.
std::vector<std::vector<Int>> integer_rows(const RationalMatrix& m) {
    std::vector<std::vector<Int>> rows(m.rows());
    for (int i = 0; i < m.rows(); ++i) {
        Int l = 1;
        for (int j = 0; j < m.cols(); ++j)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(i, j).den().get_mpz_t());
        std::vector<Int>& row = rows[i];
        row.resize(m.cols());
        Int g = 0;
        for (int j = 0; j < m.cols(); ++j) {
            const Rational& q = m.at(i, j);
            row[j] = q.num() * (l / q.den());
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), row[j].get_mpz_t());
        }
        if (g > 1)
            for (Int& x : row) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    }
    return rows;
}

}  // namespace

EchelonForm echelon_form_integer(std::vector<std::vector<Int>> rows,
                                 int pivot_limit) {
    EchelonForm ef;
    int nrows = static_cast<int>(rows.size());
    int ncols = nrows == 0 ? 0 : static_cast<int>(rows[0].size());
    ef.total_cols = ncols;
    ef.pivot_limit = pivot_limit;

    std::vector<Int> piv{Int(1)};       // piv[s] = pivot of step s (piv[0] = 1)
    std::vector<int> stage(nrows, 0);   // Bareiss stage each row currently sits at
    Int tmp;

    auto materialize = [&](int r, int s) {
        if (stage[r] == s) return;
        const Int& num = piv[s];
        const Int& den = piv[stage[r]];
        for (Int& x : rows[r]) {
            if (sgn(x) == 0) continue;
            x *= num;
            mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), den.get_mpz_t());
        }
        stage[r] = s;
    };

    int pr = 0;  // next pivot row slot
    for (int col = 0; col < pivot_limit && pr < nrows; ++col) {
        // smallest nonzero entry (by limb size) as pivot; any nonzero is exact
        int best = -1;
        size_t best_sz = 0;
        for (int i = pr; i < nrows; ++i) {
            if (sgn(rows[i][col]) == 0) continue;
            size_t sz = mpz_size(rows[i][col].get_mpz_t());
            if (best < 0 || sz < best_sz) { best = i; best_sz = sz; }
        }
        if (best < 0) continue;

        std::swap(rows[best], rows[pr]);
        std::swap(stage[best], stage[pr]);
        int s = static_cast<int>(piv.size()) - 1;  // pivots found so far
        materialize(pr, s);
        const Int pivot = rows[pr][col];
        const Int& prev = piv[s];

        for (int i = pr + 1; i < nrows; ++i) {
            if (sgn(rows[i][col]) == 0) continue;
            materialize(i, s);
            const Int mult = rows[i][col];
            for (int k = col + 1; k < ncols; ++k) {
                Int& x = rows[i][k];
                if (sgn(x) == 0 && sgn(rows[pr][k]) == 0) continue;
                tmp = mult * rows[pr][k];
                x *= pivot;
                x -= tmp;
                if (sgn(x) != 0)
                    mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), prev.get_mpz_t());
            }
            rows[i][col] = 0;
            stage[i] = s + 1;
        }
        piv.push_back(pivot);
        ef.pivot_cols.push_back(col);
        ++pr;
    }

    ef.rows = std::move(rows);
    return ef;
}

EchelonForm echelon_form(const RationalMatrix& m, int pivot_limit) {
    return echelon_form_integer(integer_rows(m), pivot_limit);
}

int rank(const RationalMatrix& m) {
    return echelon_form(m, m.cols()).rank();
}

namespace {

// Back-substitute one right-hand-side column of an echelon form whose pivot
// columns all lie in [0, pivot_limit).  Rows are arbitrary scalar multiples of
// true rows, which leaves each row equation intact.  Free variables are zero.
std::optional<std::vector<Rational>> back_substitute(const EchelonForm& ef,
                                                     int rhs_col) {
    int n = ef.pivot_limit;
    int nrows = static_cast<int>(ef.rows.size());
    int npiv = ef.rank();
    // consistency: rows below the pivot block are zero on [0, n), so they must
    // be zero in the rhs column too
    for (int i = npiv; i < nrows; ++i)
        if (sgn(ef.rows[i][rhs_col]) != 0) return std::nullopt;

    std::vector<Rational> x(n, Rational(0));
    for (int p = npiv - 1; p >= 0; --p) {
        int c = ef.pivot_cols[p];
        const std::vector<Int>& row = ef.rows[p];
        Rational acc(row[rhs_col]);
        for (int k = c + 1; k < n; ++k) {
            if (sgn(row[k]) == 0 || x[k].is_zero()) continue;
            acc -= Rational(row[k]) * x[k];
        }
        x[c] = acc / Rational(row[c]);
    }
    return x;
}

}  // namespace

std::optional<std::vector<Rational>> solve_linear(const RationalMatrix& a,
                                                  const std::vector<Rational>& b) {
    if (static_cast<int>(b.size()) != a.rows())
        throw std::invalid_argument("solve_linear: rhs length mismatch");
    auto sols = solve_many(a, RationalMatrix::from_columns({b}));
    return sols[0];
}

std::vector<std::optional<std::vector<Rational>>> solve_many(
    const RationalMatrix& a, const RationalMatrix& b) {
    if (a.rows() != b.rows())
        throw std::invalid_argument("solve_many: rhs row count mismatch");
    EchelonForm ef = echelon_form(a.augmented(b), a.cols());
    std::vector<std::optional<std::vector<Rational>>> out;
    out.reserve(b.cols());
    for (int j = 0; j < b.cols(); ++j)
        out.push_back(back_substitute(ef, a.cols() + j));
    return out;
}

RationalMatrix vertical_stack(const std::vector<RationalMatrix>& blocks) {
    int cols = -1, rows = 0;
    for (const RationalMatrix& b : blocks) {
        if (b.rows() == 0) continue;
        if (cols < 0)
            cols = b.cols();
        else if (b.cols() != cols)
            throw std::invalid_argument("vertical_stack: column count mismatch");
        rows += b.rows();
    }
    if (cols < 0) return RationalMatrix(0, 0);
    RationalMatrix m(rows, cols);
    int at_row = 0;
    for (const RationalMatrix& b : blocks) {
        for (int i = 0; i < b.rows(); ++i, ++at_row)
            for (int j = 0; j < cols; ++j) m.at(at_row, j) = b.at(i, j);
    }
    return m;
}

std::vector<std::vector<Rational>> nullspace(const RationalMatrix& m) {
    EchelonForm ef = echelon_form(m, m.cols());
    std::vector<bool> is_pivot(m.cols(), false);
    for (int c : ef.pivot_cols) is_pivot[c] = true;

    std::vector<std::vector<Rational>> basis;
    for (int f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        // x[f] = 1, other free variables 0; solve pivots bottom-up
        std::vector<Rational> x(m.cols(), Rational(0));
        x[f] = Rational(1);
        for (int p = ef.rank() - 1; p >= 0; --p) {
            int c = ef.pivot_cols[p];
            if (c > f) continue;  // row equation involves only columns >= c
            const std::vector<Int>& row = ef.rows[p];
            Rational acc(0);
            for (int k = c + 1; k < m.cols(); ++k) {
                if (sgn(row[k]) == 0 || x[k].is_zero()) continue;
                acc -= Rational(row[k]) * x[k];
            }
            x[c] = acc / Rational(row[c]);
        }
        basis.push_back(std::move(x));
    }
    return basis;
}

}  // namespace twistcoh
