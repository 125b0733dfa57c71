#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "twistcoh/graded_quotient.hpp"
#include "twistcoh/matrix.hpp"
#include "twistcoh/monomial.hpp"
#include "twistcoh/polynomial.hpp"
#include "twistcoh/rational.hpp"

using namespace twistcoh;

namespace {

// Textbook Gaussian elimination over Q, written independently of the Bareiss
// engine under test.  Only used on small matrices.
int oracle_rank(std::vector<std::vector<Rational>> rows) {
    int nr = static_cast<int>(rows.size());
    int nc = nr == 0 ? 0 : static_cast<int>(rows[0].size());
    int rank = 0;
    for (int col = 0; col < nc && rank < nr; ++col) {
        int piv = -1;
        for (int i = rank; i < nr; ++i)
            if (!rows[i][col].is_zero()) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(rows[piv], rows[rank]);
        for (int i = rank + 1; i < nr; ++i) {
            if (rows[i][col].is_zero()) continue;
            Rational m = rows[i][col] / rows[rank][col];
            for (int k = col; k < nc; ++k)
                rows[i][k] -= m * rows[rank][k];
        }
        ++rank;
    }
    return rank;
}

RationalMatrix random_matrix(int r, int c, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> coef(-5, 5);
    RationalMatrix m(r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m.at(i, j) = Rational(coef(rng));
    return m;
}

std::vector<std::vector<Rational>> to_rows(const RationalMatrix& m) {
    std::vector<std::vector<Rational>> rows(m.rows());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) rows[i].push_back(m.at(i, j));
    return rows;
}

std::vector<Rational> mat_apply(const RationalMatrix& m,
                            const std::vector<Rational>& x) {
    std::vector<Rational> y(m.rows(), Rational(0));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) y[i] += m.at(i, j) * x[j];
    return y;
}

}  // namespace

TEST_CASE("rational arithmetic canonicalizes") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-1, -2) == Rational(1, 2));
    CHECK(Rational(3, -6) == Rational(-1, 2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(1, 2) * Rational(2, 3) == Rational(1, 3));
    CHECK(Rational(7, 3).den() == 3);
    CHECK(Rational(-7, 3).num() == -7);
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::invalid_argument);
    CHECK(Rational::parse("22/7") == Rational(22, 7));
    CHECK(Rational::parse("-5") == Rational(-5));
    CHECK(Rational(22, 7).str() == "22/7");
    CHECK(Rational(-3).str() == "-3");
}

TEST_CASE("binomial matches Pascal recurrence") {
    for (long n = 0; n <= 12; ++n) {
        CHECK(binomial(n, 0) == 1);
        CHECK(binomial(n, n) == 1);
        for (long k = 1; k < n; ++k)
            CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
    }
    CHECK(binomial(5, -1) == 0);
    CHECK(binomial(5, 7) == 0);
    CHECK(binomial(-1, 0) == 0);
    CHECK(binomial(7, 3) == 35);
}

TEST_CASE("monomial enumeration: counts and canonical order") {
    auto deg2 = monomials_of_degree(2, 2);
    REQUIRE(deg2.size() == 3);
    CHECK(deg2[0].str() == "x0^2");
    CHECK(deg2[1].str() == "x0*x1");
    CHECK(deg2[2].str() == "x1^2");

    CHECK(monomials_of_degree(4, 0).size() == 1);
    CHECK(monomials_of_degree(4, 0)[0].str() == "1");
    CHECK(monomials_of_degree(5, 3).size() == 35);  // C(7,3)
    CHECK(monomials_of_degree(3, -1).empty());

    // stars-and-bars count for a spread of shapes
    for (int v = 1; v <= 4; ++v)
        for (int d = 0; d <= 5; ++d)
            CHECK(Int(monomials_of_degree(v, d).size()) ==
                  binomial(v + d - 1, d));

    // listing order is strictly increasing in the monomial order
    auto deg3 = monomials_of_degree(3, 3);
    for (size_t i = 0; i + 1 < deg3.size(); ++i) CHECK(deg3[i] < deg3[i + 1]);
}

TEST_CASE("monomial divide / multiply round trip") {
    Monomial a({2, 1, 0});
    Monomial b({1, 0, 3});
    Monomial p = a * b;
    CHECK(p.e == std::vector<int>{3, 1, 3});
    CHECK(a.divides(p));
    CHECK(p.degree() == 7);
    CHECK(a.divide(p) == b);
    CHECK_FALSE(Monomial({0, 2, 0}).divides(p));
}

TEST_CASE("polynomial product, partials, evaluation") {
    int v = 2;
    auto x = HomogeneousPolynomial::variable(v, 0);
    auto y = HomogeneousPolynomial::variable(v, 1);
    CHECK((x + y) * (x - y) == x * x - y * y);

    auto x3 = x * x * x;
    CHECK(x3.partial(0) == (x * x).scaled(Rational(3)));
    CHECK((y * y).partial(0).is_zero());

    auto p = parse_polynomial("x^3 + y^3 - 3*x*y*x", 2);
    CHECK(p.degree() == 3);
    std::vector<Rational> pt{Rational(2), Rational(1, 2)};
    // 8 + 1/8 - 3*4*(1/2) = 8 + 1/8 - 6
    CHECK(p.evaluate(pt) == Rational(17, 8));
}

TEST_CASE("polynomial parser round-trips str()") {
    std::mt19937_64 rng(11);
    for (int v = 1; v <= 4; ++v) {
        for (int d = 1; d <= 3; ++d) {
            for (int trial = 0; trial < 5; ++trial) {
                auto p = random_form(v, d, rng);
                CHECK(parse_polynomial(p.str(), v) == p);
            }
        }
    }
    CHECK_THROWS_AS(parse_polynomial("x0 + x1^2", 2), std::invalid_argument);
    CHECK_THROWS_AS(parse_polynomial("x0 +", 2), std::invalid_argument);
    CHECK_THROWS_AS(parse_polynomial("q0", 2), std::invalid_argument);
}

TEST_CASE("coefficient_vector matches term lookup") {
    auto p = parse_polynomial("x0^2 - 2*x0*x1 + 1/3*x1^2", 2);
    auto basis = monomials_of_degree(2, 2);
    auto c = p.coefficient_vector(basis);
    REQUIRE(c.size() == 3);
    CHECK(c[0] == Rational(1));
    CHECK(c[1] == Rational(-2));
    CHECK(c[2] == Rational(1, 3));
    for (size_t i = 0; i < basis.size(); ++i)
        CHECK(p.coefficient(basis[i]) == c[i]);
}

TEST_CASE("rank: pinned examples") {
    CHECK(rank(RationalMatrix::identity(4)) == 4);
    CHECK(rank(RationalMatrix(3, 5)) == 0);
    auto m = RationalMatrix::from_rows({{Rational(1), Rational(2)},
                                        {Rational(2), Rational(4)},
                                        {Rational(0), Rational(1)}});
    CHECK(rank(m) == 2);
}

TEST_CASE("rank agrees with the naive oracle and is transpose-invariant") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        int r = 1 + static_cast<int>(rng() % 8);
        int c = 1 + static_cast<int>(rng() % 8);
        auto m = random_matrix(r, c, rng);
        int rk = rank(m);
        CHECK(rk == oracle_rank(to_rows(m)));
        CHECK(rk == rank(m.transpose()));
    }
}

TEST_CASE("rank unchanged by scaling a row") {
    std::mt19937_64 rng(13);
    auto m = random_matrix(5, 6, rng);
    int before = rank(m);
    for (int j = 0; j < m.cols(); ++j) m.at(2, j) *= Rational(-7, 3);
    CHECK(rank(m) == before);
}

TEST_CASE("solve_linear: pinned examples") {
    std::vector<Rational> b{Rational(3), Rational(5)};
    auto s = solve_linear(RationalMatrix::identity(2), b);
    REQUIRE(s.has_value());
    CHECK(*s == b);

    RationalMatrix zero(1, 1);
    CHECK_FALSE(solve_linear(zero, {Rational(1)}).has_value());

    auto row = RationalMatrix::from_rows({{Rational(1), Rational(1)}});
    auto u = solve_linear(row, {Rational(2)});
    REQUIRE(u.has_value());
    CHECK((*u)[0] + (*u)[1] == Rational(2));

    CHECK_THROWS_AS(solve_linear(zero, {Rational(1), Rational(2)}),
                    std::invalid_argument);
}

TEST_CASE("solve_linear solves seeded consistent systems exactly") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 30; ++trial) {
        int r = 1 + static_cast<int>(rng() % 7);
        int c = 1 + static_cast<int>(rng() % 7);
        auto a = random_matrix(r, c, rng);
        std::uniform_int_distribution<int> coef(-4, 4);
        std::vector<Rational> x(c);
        for (auto& xi : x) xi = Rational(coef(rng));
        auto b = mat_apply(a, x);
        auto sol = solve_linear(a, b);
        REQUIRE(sol.has_value());
        CHECK(mat_apply(a, *sol) == b);
    }
}

TEST_CASE("solve_linear flags inconsistent systems") {
    // rows 1 and 2 are proportional, right-hand side is not
    auto a = RationalMatrix::from_rows({{Rational(1), Rational(2)},
                                        {Rational(2), Rational(4)}});
    CHECK_FALSE(solve_linear(a, {Rational(1), Rational(3)}).has_value());
    CHECK(solve_linear(a, {Rational(1), Rational(2)}).has_value());
}

TEST_CASE("solve_many matches per-column solve_linear") {
    std::mt19937_64 rng(19);
    for (int trial = 0; trial < 10; ++trial) {
        auto a = random_matrix(5, 4, rng);
        auto b = random_matrix(5, 6, rng);
        auto many = solve_many(a, b);
        REQUIRE(many.size() == 6);
        for (int j = 0; j < 6; ++j) {
            auto one = solve_linear(a, b.column(j));
            CHECK(many[j].has_value() == one.has_value());
            if (many[j]) CHECK(mat_apply(a, *many[j]) == b.column(j));
        }
    }
}

TEST_CASE("nullspace vectors are killed by the matrix; rank-nullity holds") {
    std::mt19937_64 rng(23);
    CHECK(nullspace(RationalMatrix::identity(3)).empty());
    for (int trial = 0; trial < 25; ++trial) {
        int r = 1 + static_cast<int>(rng() % 6);
        int c = 1 + static_cast<int>(rng() % 6);
        auto m = random_matrix(r, c, rng);
        auto ns = nullspace(m);
        CHECK(static_cast<int>(ns.size()) + rank(m) == c);
        std::vector<Rational> zero(r, Rational(0));
        for (const auto& v : ns) CHECK(mat_apply(m, v) == zero);
        // basis vectors are independent
        CHECK(oracle_rank(ns) == static_cast<int>(ns.size()));
    }
}

TEST_CASE("echelon form: pivots strictly increase, rows stay in the row span") {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 15; ++trial) {
        int r = 2 + static_cast<int>(rng() % 5);
        int c = 2 + static_cast<int>(rng() % 5);
        auto m = random_matrix(r, c, rng);
        auto ef = echelon_form(m, c);
        CHECK(ef.rank() == oracle_rank(to_rows(m)));
        for (size_t i = 0; i + 1 < ef.pivot_cols.size(); ++i)
            CHECK(ef.pivot_cols[i] < ef.pivot_cols[i + 1]);
        auto mt = m.transpose();
        for (const auto& row : ef.rows) {
            std::vector<Rational> rv(row.size());
            bool nonzero = false;
            for (size_t k = 0; k < row.size(); ++k) {
                rv[k] = Rational(row[k]);
                nonzero = nonzero || !rv[k].is_zero();
            }
            if (!nonzero) continue;
            // each stored row is a combination of original rows
            CHECK(solve_linear(mt, rv).has_value());
        }
        // below-pivot entries are cleared
        for (size_t i = 0; i < ef.pivot_cols.size(); ++i)
            for (size_t k = i + 1; k < ef.rows.size(); ++k)
                CHECK(ef.rows[k][ef.pivot_cols[i]] == 0);
    }
}

TEST_CASE("echelon pivot_limit keeps trailing columns out of the pivots") {
    auto m = RationalMatrix::from_rows(
        {{Rational(0), Rational(1)}, {Rational(0), Rational(2)}});
    auto ef = echelon_form(m, 1);  // only column 0 may pivot
    CHECK(ef.rank() == 0);
    auto full = echelon_form(m, 2);
    CHECK(full.rank() == 1);
}

TEST_CASE("matrix product: identity, transpose rule, associativity") {
    std::mt19937_64 rng(31);
    auto a = random_matrix(3, 4, rng);
    auto b = random_matrix(4, 5, rng);
    auto c = random_matrix(5, 2, rng);
    CHECK(RationalMatrix::identity(3) * a == a);
    CHECK(a * RationalMatrix::identity(4) == a);
    CHECK((a * b).transpose() == b.transpose() * a.transpose());
    CHECK((a * b) * c == a * (b * c));
}

TEST_CASE("vertical_stack shapes and content") {
    std::mt19937_64 rng(37);
    auto a = random_matrix(2, 3, rng);
    auto b = random_matrix(4, 3, rng);
    auto s = vertical_stack({a, RationalMatrix(0, 3), b});
    REQUIRE(s.rows() == 6);
    REQUIRE(s.cols() == 3);
    for (int j = 0; j < 3; ++j) {
        for (int i = 0; i < 2; ++i) CHECK(s.at(i, j) == a.at(i, j));
        for (int i = 0; i < 4; ++i) CHECK(s.at(2 + i, j) == b.at(i, j));
    }
}

TEST_CASE("graded quotient: dimensions of <x^2, y^2>") {
    GradedQuotient q(2, {parse_polynomial("x^2", 2), parse_polynomial("y^2", 2)});
    CHECK(q.monomial_path());
    CHECK(q.ideal_dimension(2) == 2);
    CHECK(q.ideal_dimension(3) == 4);  // x^3, x^2 y, x y^2, y^3
    CHECK(q.quotient_dimension(0) == 1);
    CHECK(q.quotient_dimension(1) == 2);
    CHECK(q.quotient_dimension(2) == 1);  // xy survives
    CHECK(q.quotient_dimension(3) == 0);
    CHECK(q.quotient_basis(2).size() == 1);
    CHECK(q.quotient_basis(2)[0].str() == "x0*x1");
}

TEST_CASE("graded quotient: monomial and linear-algebra paths agree") {
    auto gens = std::vector<HomogeneousPolynomial>{
        parse_polynomial("x^2", 3), parse_polynomial("y^2", 3),
        parse_polynomial("z^3", 3)};
    GradedQuotient fast(3, gens);
    GradedQuotient slow(3, gens, GradedQuotient::Strategy::linear_algebra);
    CHECK(fast.monomial_path());
    CHECK_FALSE(slow.monomial_path());
    std::mt19937_64 rng(41);
    for (int k = 0; k <= 6; ++k) {
        CHECK(fast.ideal_dimension(k) == slow.ideal_dimension(k));
        CHECK(fast.quotient_dimension(k) == slow.quotient_dimension(k));
        CHECK(fast.quotient_basis(k) == slow.quotient_basis(k));
        if (k >= 1 && fast.quotient_dimension(k) > 0) {
            auto p = random_form(3, k, rng);
            CHECK(fast.reduce(p) == slow.reduce(p));
        }
    }
}

TEST_CASE("graded quotient reduce: ideal elements reduce to zero") {
    GradedQuotient q(2, {parse_polynomial("x^2", 2), parse_polynomial("y^2", 2)});
    auto zero2 = std::vector<Rational>{Rational(0)};
    CHECK(q.reduce(parse_polynomial("x^2", 2)) == zero2);
    CHECK(q.reduce(parse_polynomial("x^2 + 3*y^2", 2)) == zero2);
    // x*y + x^2 reduces to the class of x*y
    CHECK(q.reduce(parse_polynomial("x*y + x^2", 2)) ==
          std::vector<Rational>{Rational(1)});
}

TEST_CASE("multiplication matrices on <x^2, y^2>") {
    GradedQuotient q(2, {parse_polynomial("x^2", 2), parse_polynomial("y^2", 2)});
    auto one = HomogeneousPolynomial::from_terms(
        2, 0, {{Monomial({0, 0}), Rational(1)}});
    auto id = q.multiplication_matrix(one, 1);
    CHECK(id == RationalMatrix::identity(2));

    auto xy = parse_polynomial("x + y", 2);
    auto m0 = q.multiplication_matrix(xy, 0);
    CHECK(m0.rows() == 2);
    CHECK(m0.cols() == 1);
    CHECK(rank(m0) == 1);
    CHECK(q.multiplication_rank(xy, 0) == 1);

    auto sq = xy * xy;  // = x^2 + 2xy + y^2, reduces to 2xy
    auto msq = q.multiplication_matrix(sq, 0);
    CHECK(msq.rows() == 1);
    CHECK(msq.cols() == 1);
    CHECK(msq.at(0, 0) == Rational(2));
    CHECK(q.multiplication_rank(sq, 0) == 1);
}

TEST_CASE("multiplication_rank equals rank of multiplication_matrix") {
    GradedQuotient q(3, {parse_polynomial("x^2", 3), parse_polynomial("y^2", 3),
                         parse_polynomial("z^2", 3)});
    std::mt19937_64 rng(43);
    for (int j = 1; j <= 2; ++j) {
        for (int i = 0; i <= 3; ++i) {
            auto f = random_form(3, j, rng);
            CHECK(q.multiplication_rank(f, i) ==
                  rank(q.multiplication_matrix(f, i)));
        }
    }
}

TEST_CASE("ideal_cofactors recombine to the input") {
    std::vector<HomogeneousPolynomial> gens{parse_polynomial("x^2 + y*z", 3),
                                            parse_polynomial("y^2 - x*z", 3)};
    GradedQuotient q(3, gens);
    auto g = gens[0] * parse_polynomial("z", 3) +
             gens[1] * parse_polynomial("x - 2*y", 3);
    auto cof = q.ideal_cofactors(g);
    REQUIRE(cof.has_value());
    REQUIRE(cof->size() == 2);
    HomogeneousPolynomial acc(3, g.degree());
    for (size_t i = 0; i < gens.size(); ++i) acc = acc + (*cof)[i] * gens[i];
    CHECK(acc == g);
    CHECK_FALSE(q.ideal_cofactors(parse_polynomial("x*y*z", 3)).has_value());
}

TEST_CASE("socle functional of <x^2, y^2>") {
    GradedQuotient q(2, {parse_polynomial("x^2", 2), parse_polynomial("y^2", 2)});
    auto phi = q.socle_functional(2);  // S_2 basis: x^2, xy, y^2
    REQUIRE(phi.size() == 3);
    CHECK(phi[0] == Rational(0));
    CHECK(phi[1] == Rational(1));
    CHECK(phi[2] == Rational(0));
}

TEST_CASE("ideal_span_columns spans the ideal piece") {
    std::vector<HomogeneousPolynomial> gens{parse_polynomial("x^2 - y*z", 3),
                                            parse_polynomial("x*y", 3)};
    GradedQuotient q(3, gens);
    for (int k = 2; k <= 4; ++k) {
        auto cols = q.ideal_span_columns(k);
        CHECK(oracle_rank(cols) == q.ideal_dimension(k));
    }
}
