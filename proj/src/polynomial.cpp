#include "twistcoh/polynomial.hpp"

#include <cctype>
#include <stdexcept>

namespace twistcoh {

HomogeneousPolynomial::HomogeneousPolynomial(int num_vars, int degree)
    : num_vars_(num_vars), degree_(degree) {
    if (num_vars < 0 || degree < 0)
        throw std::invalid_argument("HomogeneousPolynomial: bad shape");
}

HomogeneousPolynomial HomogeneousPolynomial::from_terms(
    int num_vars, int degree,
    const std::vector<std::pair<Monomial, Rational>>& terms) {
    HomogeneousPolynomial p(num_vars, degree);
    for (const auto& [m, c] : terms) {
        if (m.num_vars() != num_vars || m.degree() != degree)
            throw std::invalid_argument(
                "HomogeneousPolynomial: term shape mismatch");
        p.add_term(m, c);
    }
    return p;
}

HomogeneousPolynomial HomogeneousPolynomial::variable(int num_vars, int i) {
    if (i < 0 || i >= num_vars)
        throw std::invalid_argument("variable index out of range");
    std::vector<int> e(num_vars, 0);
    e[i] = 1;
    HomogeneousPolynomial p(num_vars, 1);
    p.add_term(Monomial(e), Rational(1));
    return p;
}

HomogeneousPolynomial HomogeneousPolynomial::monomial_term(const Monomial& m,
                                                           const Rational& c) {
    HomogeneousPolynomial p(m.num_vars(), m.degree());
    p.add_term(m, c);
    return p;
}

void HomogeneousPolynomial::add_term(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Rational HomogeneousPolynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

HomogeneousPolynomial HomogeneousPolynomial::operator+(
    const HomogeneousPolynomial& o) const {
    if (is_zero() && terms_.empty() && num_vars_ == 0) return o;  // default-constructed
    if (num_vars_ != o.num_vars_)
        throw std::invalid_argument("polynomial add: variable count mismatch");
    if (!is_zero() && !o.is_zero() && degree_ != o.degree_)
        throw std::invalid_argument("polynomial add: degree mismatch");
    HomogeneousPolynomial r(num_vars_, is_zero() ? o.degree_ : degree_);
    r.terms_ = terms_;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

HomogeneousPolynomial HomogeneousPolynomial::operator-(
    const HomogeneousPolynomial& o) const {
    return *this + o.scaled(Rational(-1));
}

HomogeneousPolynomial HomogeneousPolynomial::scaled(const Rational& c) const {
    HomogeneousPolynomial r(num_vars_, degree_);
    if (c.is_zero()) return r;
    for (const auto& [m, v] : terms_) r.terms_.emplace(m, v * c);
    return r;
}

HomogeneousPolynomial HomogeneousPolynomial::operator*(
    const HomogeneousPolynomial& o) const {
    if (num_vars_ != o.num_vars_)
        throw std::invalid_argument("polynomial mul: variable count mismatch");
    HomogeneousPolynomial r(num_vars_, degree_ + o.degree_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) r.add_term(ma * mb, ca * cb);
    return r;
}

HomogeneousPolynomial HomogeneousPolynomial::pow(int k) const {
    if (k < 0) throw std::invalid_argument("polynomial pow: negative exponent");
    HomogeneousPolynomial r =
        monomial_term(Monomial(std::vector<int>(num_vars_, 0)), Rational(1));
    for (int i = 0; i < k; ++i) r = r * *this;
    return r;
}

HomogeneousPolynomial HomogeneousPolynomial::partial(int var) const {
    if (var < 0 || var >= num_vars_)
        throw std::invalid_argument("partial: variable index out of range");
    HomogeneousPolynomial r(num_vars_, degree_ > 0 ? degree_ - 1 : 0);
    for (const auto& [m, c] : terms_) {
        if (m.e[var] == 0) continue;
        Monomial d = m;
        int k = d.e[var]--;
        r.add_term(d, c * Rational(k));
    }
    return r;
}

Rational HomogeneousPolynomial::evaluate(
    const std::vector<Rational>& point) const {
    Rational r = 0;
    for (const auto& [m, c] : terms_) r += c * m.evaluate(point);
    return r;
}

std::vector<Rational> HomogeneousPolynomial::coefficient_vector(
    const std::vector<Monomial>& basis) const {
    std::map<Monomial, int> pos;
    for (size_t i = 0; i < basis.size(); ++i) pos.emplace(basis[i], static_cast<int>(i));
    std::vector<Rational> out(basis.size(), Rational(0));
    for (const auto& [m, c] : terms_) {
        auto it = pos.find(m);
        if (it == pos.end())
            throw std::invalid_argument(
                "coefficient_vector: term not in basis (degree mismatch?)");
        out[it->second] = c;
    }
    return out;
}

bool HomogeneousPolynomial::operator==(const HomogeneousPolynomial& o) const {
    // same terms; nominal degree of zero polynomials is not significant
    return num_vars_ == o.num_vars_ && terms_ == o.terms_;
}

std::string HomogeneousPolynomial::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [m, c] : terms_) {
        Rational a = c;
        if (s.empty()) {
            if (a.sign() < 0) { s += "-"; a = -a; }
        } else {
            s += a.sign() < 0 ? " - " : " + ";
            if (a.sign() < 0) a = -a;
        }
        bool unit = (a == Rational(1)) && m.degree() > 0;
        if (!unit) s += a.str();
        if (m.degree() > 0) {
            if (!unit) s += "*";
            s += m.str();
        }
    }
    return s;
}

// ------------------------------------------------------------------ parsing

namespace {

struct Parser {
    const std::string& text;
    size_t pos = 0;
    int num_vars;

    explicit Parser(const std::string& t, int nv) : text(t), num_vars(nv) {}

    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("parse error at position " +
                                    std::to_string(pos) + ": " + what);
    }
    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) { ++pos; return true; }
        return false;
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    Int integer() {
        skip_ws();
        size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            ++pos;
        if (pos == start) fail("expected integer");
        return Int(text.substr(start, pos - start));
    }

    int variable() {
        skip_ws();
        char c = text[pos];
        int idx = -1;
        if (c == 'x') {
            ++pos;
            if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                size_t start = pos;
                while (pos < text.size() &&
                       std::isdigit(static_cast<unsigned char>(text[pos])))
                    ++pos;
                idx = std::stoi(text.substr(start, pos - start));
            } else {
                idx = 0;
            }
        } else if (c == 'y') { ++pos; idx = 1; }
        else if (c == 'z') { ++pos; idx = 2; }
        else if (c == 'w') { ++pos; idx = 3; }
        else fail("expected variable");
        if (idx >= num_vars) fail("variable index out of range");
        return idx;
    }

    // factor := integer [ '/' integer ] | variable [ '^' integer ]
    // term   := factor ( '*' factor )*
    HomogeneousPolynomial term() {
        Rational coeff = 1;
        std::vector<int> exps(num_vars, 0);
        bool first = true;
        for (;;) {
            skip_ws();
            if (pos >= text.size()) { if (first) fail("expected term"); break; }
            char c = text[pos];
            if (std::isdigit(static_cast<unsigned char>(c))) {
                Int n = integer();
                if (eat('/')) coeff *= Rational(n, integer());
                else coeff *= Rational(n);
            } else if (c == 'x' || c == 'y' || c == 'z' || c == 'w') {
                int idx = variable();
                int e = 1;
                if (eat('^')) e = static_cast<int>(integer().get_si());
                exps[idx] += e;
            } else if (first) {
                fail("expected term");
            }
            first = false;
            if (!eat('*')) break;
        }
        return HomogeneousPolynomial::monomial_term(Monomial(exps), coeff);
    }

    HomogeneousPolynomial sum() {
        bool neg = false;
        if (eat('-')) neg = true;
        else eat('+');
        HomogeneousPolynomial t = term();
        std::vector<HomogeneousPolynomial> parts{neg ? t.scaled(Rational(-1)) : t};
        for (;;) {
            skip_ws();
            if (pos >= text.size()) break;
            if (eat('+')) parts.push_back(term());
            else if (eat('-')) parts.push_back(term().scaled(Rational(-1)));
            else fail("expected '+' or '-'");
        }
        // all parts must share one degree (homogeneous input); zero parts bend
        int degree = -1;
        for (const auto& p : parts)
            if (!p.is_zero()) {
                if (degree < 0) degree = p.degree();
                else if (degree != p.degree())
                    throw std::invalid_argument("polynomial is not homogeneous");
            }
        HomogeneousPolynomial acc(num_vars, degree < 0 ? 0 : degree);
        for (const auto& p : parts)
            if (!p.is_zero()) acc = acc + p;
        return acc;
    }
};

}  // namespace

HomogeneousPolynomial parse_polynomial(const std::string& text, int num_vars) {
    if (num_vars <= 0) throw std::invalid_argument("parse_polynomial: num_vars");
    Parser p(text, num_vars);
    HomogeneousPolynomial r = p.sum();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input");
    return r;
}

HomogeneousPolynomial random_form(int num_vars, int degree,
                                  std::mt19937_64& rng) {
    std::uniform_int_distribution<int> coin(-4, 4);
    for (;;) {
        std::vector<std::pair<Monomial, Rational>> terms;
        for (const Monomial& m : monomials_of_degree(num_vars, degree)) {
            int c = coin(rng);
            if (c != 0) terms.emplace_back(m, Rational(c));
        }
        if (!terms.empty())
            return HomogeneousPolynomial::from_terms(num_vars, degree, terms);
    }
}

HomogeneousPolynomial fermat_form(int num_vars, int degree) {
    std::vector<std::pair<Monomial, Rational>> terms;
    for (int i = 0; i < num_vars; ++i) {
        std::vector<int> e(num_vars, 0);
        e[i] = degree;
        terms.emplace_back(Monomial(e), Rational(1));
    }
    return HomogeneousPolynomial::from_terms(num_vars, degree, terms);
}

}  // namespace twistcoh
