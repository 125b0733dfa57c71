#ifndef TWISTCOH_RATIONAL_HPP
#define TWISTCOH_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <stdexcept>
#include <string>

namespace twistcoh {

using Int = mpz_class;

// Exact rational number, always kept in canonical form: lowest terms,
// denominator > 0.  Thin wrapper over mpq_class; the wrapper exists so the
// canonical-form invariant is enforced at construction (raw mpq_class built
// from num/den is NOT canonical until mpq_canonicalize is called, which is an
// easy bug to ship).
class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}
    Rational(long n) : v_(static_cast<signed long>(n)) {}
    Rational(const Int& n) : v_(n) {}
    Rational(const Int& num, const Int& den) : v_(num, den) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        v_.canonicalize();
    }
    Rational(long num, long den) : Rational(Int(num), Int(den)) {}
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    Int num() const { return v_.get_num(); }
    Int den() const { return v_.get_den(); }
    bool is_zero() const { return sgn(v_) == 0; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { Rational r; r.v_ = -v_; return r; }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::invalid_argument("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    // "a/b", or just "a" for integers.  parse() accepts the same forms.
    std::string str() const {
        if (v_.get_den() == 1) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }
    static Rational parse(const std::string& s) {
        auto slash = s.find('/');
        if (slash == std::string::npos) return Rational(Int(s));
        return Rational(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
    }

    const mpq_class& raw() const { return v_; }

private:
    mpq_class v_;
};

}  // namespace twistcoh

#endif
