#ifndef TWISTCOH_MONOMIAL_HPP
#define TWISTCOH_MONOMIAL_HPP

#include <string>
#include <vector>

#include "twistcoh/rational.hpp"

namespace twistcoh {

// Monomial in a fixed number of variables x0..x_{v-1}; exponents are
// non-negative.  Ordering is graded lexicographic read as a listing order:
// lower total degree first, and within a degree the lexicographically larger
// exponent vector first, so degree-2 monomials in two variables list as
// x0^2, x0*x1, x1^2.  std::map keyed by Monomial therefore iterates in
// canonical order.
struct Monomial {
    std::vector<int> e;

    Monomial() = default;
    explicit Monomial(std::vector<int> exps);

    int num_vars() const { return static_cast<int>(e.size()); }
    int degree() const;

    Monomial operator*(const Monomial& o) const;
    bool divides(const Monomial& o) const;
    Monomial divide(const Monomial& o) const;  // o / this, caller checks divides()

    Rational evaluate(const std::vector<Rational>& point) const;

    bool operator==(const Monomial& o) const { return e == o.e; }
    bool operator<(const Monomial& o) const;

    std::string str() const;  // e.g. "x0^2*x1", "1" for the empty product
};

// All monomials of the given total degree in canonical order.
// Size is binom(num_vars + degree - 1, degree); empty for degree < 0.
std::vector<Monomial> monomials_of_degree(int num_vars, int degree);

// Exact binomial coefficient, 0 when k < 0 or k > n (n may be negative only
// through the callers' conventions; here n < 0 returns 0).
Int binomial(long n, long k);

}  // namespace twistcoh

#endif
