#include "twistcoh/monomial.hpp"

#include <numeric>
#include <stdexcept>

namespace twistcoh {

Monomial::Monomial(std::vector<int> exps) : e(std::move(exps)) {
    for (int x : e)
        if (x < 0) throw std::invalid_argument("Monomial: negative exponent");
}

int Monomial::degree() const {
    return std::accumulate(e.begin(), e.end(), 0);
}

Monomial Monomial::operator*(const Monomial& o) const {
    if (e.size() != o.e.size())
        throw std::invalid_argument("Monomial: variable count mismatch");
    Monomial r;
    r.e.resize(e.size());
    for (size_t i = 0; i < e.size(); ++i) r.e[i] = e[i] + o.e[i];
    return r;
}

bool Monomial::divides(const Monomial& o) const {
    if (e.size() != o.e.size()) return false;
    for (size_t i = 0; i < e.size(); ++i)
        if (e[i] > o.e[i]) return false;
    return true;
}

Monomial Monomial::divide(const Monomial& o) const {
    Monomial r;
    r.e.resize(e.size());
    for (size_t i = 0; i < e.size(); ++i) r.e[i] = o.e[i] - e[i];
    return r;
}

Rational Monomial::evaluate(const std::vector<Rational>& point) const {
    if (point.size() != e.size())
        throw std::invalid_argument("Monomial::evaluate: point dimension mismatch");
    Rational r = 1;
    for (size_t i = 0; i < e.size(); ++i)
        for (int k = 0; k < e[i]; ++k) r *= point[i];
    return r;
}

bool Monomial::operator<(const Monomial& o) const {
    int da = degree(), db = o.degree();
    if (da != db) return da < db;
    // within a degree: lexicographically larger exponent vector lists first
    return e > o.e;
}

std::string Monomial::str() const {
    std::string s;
    for (size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += "x" + std::to_string(i);
        if (e[i] > 1) s += "^" + std::to_string(e[i]);
    }
    return s.empty() ? "1" : s;
}

namespace {
void enumerate(int var, int remaining, std::vector<int>& cur,
               std::vector<Monomial>& out) {
    if (var == static_cast<int>(cur.size()) - 1) {
        cur[var] = remaining;
        out.push_back(Monomial(cur));
        return;
    }
    for (int k = remaining; k >= 0; --k) {
        cur[var] = k;
        enumerate(var + 1, remaining - k, cur, out);
    }
}
}  // namespace

std::vector<Monomial> monomials_of_degree(int num_vars, int degree) {
    if (num_vars <= 0 || degree < 0) return {};
    std::vector<int> cur(num_vars, 0);
    std::vector<Monomial> out;
    enumerate(0, degree, cur, out);
    return out;
}

Int binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return r;
}

}  // namespace twistcoh
