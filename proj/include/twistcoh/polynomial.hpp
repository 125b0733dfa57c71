#ifndef TWISTCOH_POLYNOMIAL_HPP
#define TWISTCOH_POLYNOMIAL_HPP

#include <map>
#include <random>
#include <string>
#include <vector>

#include "twistcoh/monomial.hpp"
#include "twistcoh/rational.hpp"

namespace twistcoh {

// Homogeneous polynomial over Q, sparse term map keyed by monomial in
// canonical order.  The zero polynomial is representable at any nominal
// degree (empty term map); all operations accept it.
class HomogeneousPolynomial {
public:
    HomogeneousPolynomial() : num_vars_(0), degree_(0) {}
    HomogeneousPolynomial(int num_vars, int degree);  // zero polynomial

    static HomogeneousPolynomial from_terms(
        int num_vars, int degree,
        const std::vector<std::pair<Monomial, Rational>>& terms);
    static HomogeneousPolynomial variable(int num_vars, int i);  // x_i
    static HomogeneousPolynomial monomial_term(const Monomial& m,
                                               const Rational& c);

    int num_vars() const { return num_vars_; }
    int degree() const { return degree_; }
    bool is_zero() const { return terms_.empty(); }
    int term_count() const { return static_cast<int>(terms_.size()); }
    const std::map<Monomial, Rational>& terms() const { return terms_; }

    Rational coefficient(const Monomial& m) const;

    HomogeneousPolynomial operator+(const HomogeneousPolynomial& o) const;
    HomogeneousPolynomial operator-(const HomogeneousPolynomial& o) const;
    HomogeneousPolynomial operator*(const HomogeneousPolynomial& o) const;
    HomogeneousPolynomial scaled(const Rational& c) const;
    HomogeneousPolynomial pow(int k) const;

    // d/dx_i; degree drops by one (zero polynomial keeps max(degree-1, 0)).
    HomogeneousPolynomial partial(int var) const;

    Rational evaluate(const std::vector<Rational>& point) const;

    // Coefficients in the given monomial basis; throws if a term's monomial is
    // missing from the basis (degree/variable mismatch).
    std::vector<Rational> coefficient_vector(
        const std::vector<Monomial>& basis) const;

    bool operator==(const HomogeneousPolynomial& o) const;

    std::string str() const;

private:
    void add_term(const Monomial& m, const Rational& c);

    int num_vars_;
    int degree_;
    std::map<Monomial, Rational> terms_;
};

// Parser for CLI input.  Grammar: sum of terms; a term is a product of
// integer/rational constants and powers "x3^2" separated by '*' (juxtaposition
// is not supported, '*' is required); variables are x0..x99, with y/z/w
// accepted as aliases for x1/x2/x3 and plain x for x0.  Example:
//   "x0^3 + x1^3 - 3*x0*x1*x2 + 1/2*x2^3"
// Throws std::invalid_argument with a position message on bad input, and if
// the result is not homogeneous.
HomogeneousPolynomial parse_polynomial(const std::string& text, int num_vars);

// Dense-ish random form with small integer coefficients in [-4, 4] (not all
// zero), used for seeded "general" polynomials.  Deterministic in rng state.
HomogeneousPolynomial random_form(int num_vars, int degree,
                                  std::mt19937_64& rng);

// Fermat form x0^d + ... + x_{v-1}^d.
HomogeneousPolynomial fermat_form(int num_vars, int degree);

}  // namespace twistcoh

#endif
