#include "twistcoh/graded_quotient.hpp"

#include <stdexcept>

namespace twistcoh {

GradedQuotient::GradedQuotient(int num_vars,
                               std::vector<HomogeneousPolynomial> generators,
                               Strategy strategy)
    : num_vars_(num_vars), generators_(std::move(generators)) {
    if (num_vars <= 0) throw std::invalid_argument("GradedQuotient: num_vars");
    monomial_ = strategy == Strategy::automatic;
    for (const auto& g : generators_) {
        if (g.num_vars() != num_vars)
            throw std::invalid_argument("GradedQuotient: generator variable count");
        if (g.term_count() > 1) monomial_ = false;
    }
}

const GradedQuotient::DegreeData& GradedQuotient::data(int k) const {
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = memo_.find(k);
        if (it != memo_.end()) return it->second;
    }
    DegreeData d = build(k);
    std::lock_guard<std::mutex> lock(mu_);
    return memo_.emplace(k, std::move(d)).first->second;  // no-op if raced
}

GradedQuotient::DegreeData GradedQuotient::build(int k) const {
    DegreeData d;
    if (k < 0) return d;
    d.monomials = monomials_of_degree(num_vars_, k);
    for (size_t i = 0; i < d.monomials.size(); ++i)
        d.monomial_index.emplace(d.monomials[i], static_cast<int>(i));

    for (size_t g = 0; g < generators_.size(); ++g) {
        const auto& gen = generators_[g];
        if (gen.is_zero() || gen.degree() > k) continue;
        for (const Monomial& m : monomials_of_degree(num_vars_, k - gen.degree()))
            d.columns.emplace_back(static_cast<int>(g), m);
    }

    if (monomial_) {
        d.row_in_ideal.assign(d.monomials.size(), false);
        for (size_t i = 0; i < d.monomials.size(); ++i)
            for (const auto& gen : generators_) {
                if (gen.is_zero() || gen.degree() > k) continue;
                if (gen.terms().begin()->first.divides(d.monomials[i])) {
                    d.row_in_ideal[i] = true;
                    break;
                }
            }
        for (size_t i = 0; i < d.monomials.size(); ++i) {
            if (d.row_in_ideal[i]) {
                ++d.ideal_dim;
            } else {
                d.basis.push_back(d.monomials[i]);
                d.basis_rows.push_back(static_cast<int>(i));
            }
        }
        return d;
    }

    // general path: eliminate [ideal columns | identity]; identity pivots are
    // exactly the greedy quotient basis
    int nrows = static_cast<int>(d.monomials.size());
    int nideal = static_cast<int>(d.columns.size());
    RationalMatrix m(nrows, nideal + nrows);
    for (int j = 0; j < nideal; ++j) {
        const auto& [g, mult] = d.columns[j];
        for (const auto& [mono, c] : generators_[g].terms())
            m.at(d.monomial_index.at(mono * mult), j) = c;
    }
    for (int i = 0; i < nrows; ++i) m.at(i, nideal + i) = Rational(1);

    EchelonForm ef = echelon_form(m, m.cols());
    for (int c : ef.pivot_cols) {
        if (c < nideal) {
            ++d.ideal_dim;
        } else {
            d.basis.push_back(d.monomials[c - nideal]);
            d.basis_rows.push_back(c - nideal);
        }
    }
    return d;
}

RationalMatrix GradedQuotient::ideal_matrix(const DegreeData& d) const {
    RationalMatrix m(static_cast<int>(d.monomials.size()),
                     static_cast<int>(d.columns.size()));
    for (size_t j = 0; j < d.columns.size(); ++j) {
        const auto& [g, mult] = d.columns[j];
        for (const auto& [mono, c] : generators_[g].terms())
            m.at(d.monomial_index.at(mono * mult), static_cast<int>(j)) = c;
    }
    return m;
}

int GradedQuotient::ideal_dimension(int k) const { return data(k).ideal_dim; }

int GradedQuotient::quotient_dimension(int k) const {
    const DegreeData& d = data(k);
    return static_cast<int>(d.basis.size());
}

std::vector<Monomial> GradedQuotient::quotient_basis(int k) const {
    return data(k).basis;
}

std::vector<Rational> GradedQuotient::reduce(
    const HomogeneousPolynomial& p) const {
    if (p.num_vars() != num_vars_)
        throw std::invalid_argument("reduce: variable count mismatch");
    const DegreeData& d = data(p.degree());
    if (monomial_) {
        std::vector<Rational> out(d.basis.size(), Rational(0));
        std::map<Monomial, int> basis_pos;
        for (size_t i = 0; i < d.basis.size(); ++i)
            basis_pos.emplace(d.basis[i], static_cast<int>(i));
        for (const auto& [m, c] : p.terms()) {
            auto it = basis_pos.find(m);
            if (it != basis_pos.end()) out[it->second] = c;
        }
        return out;
    }
    int nideal = static_cast<int>(d.columns.size());
    RationalMatrix sys = ideal_matrix(d);
    RationalMatrix units(static_cast<int>(d.monomials.size()),
                         static_cast<int>(d.basis.size()));
    for (size_t j = 0; j < d.basis_rows.size(); ++j)
        units.at(d.basis_rows[j], static_cast<int>(j)) = Rational(1);
    auto sol = solve_linear(sys.augmented(units),
                            p.coefficient_vector(d.monomials));
    if (!sol)  // ideal columns + basis span S_k by construction
        throw std::logic_error("reduce: degree piece span broken");
    std::vector<Rational> out(sol->begin() + nideal, sol->end());
    return out;
}

RationalMatrix GradedQuotient::multiplication_matrix(
    const HomogeneousPolynomial& f, int i) const {
    std::vector<Monomial> src = quotient_basis(i);
    int k = i + f.degree();
    std::vector<std::vector<Rational>> cols;
    cols.reserve(src.size());
    for (const Monomial& b : src)
        cols.push_back(reduce(f * HomogeneousPolynomial::monomial_term(b, Rational(1))));
    if (src.empty()) return RationalMatrix(quotient_dimension(k), 0);
    return RationalMatrix::from_columns(cols);
}

int GradedQuotient::multiplication_rank(const HomogeneousPolynomial& f,
                                        int i) const {
    std::vector<Monomial> src = quotient_basis(i);
    if (src.empty()) return 0;
    int k = i + f.degree();
    const DegreeData& d = data(k);
    if (monomial_) {
        // projection to non-ideal rows is reduction; rank of the dense block
        RationalMatrix m(static_cast<int>(d.basis.size()),
                         static_cast<int>(src.size()));
        std::map<Monomial, int> basis_pos;
        for (size_t r = 0; r < d.basis.size(); ++r)
            basis_pos.emplace(d.basis[r], static_cast<int>(r));
        for (size_t j = 0; j < src.size(); ++j) {
            HomogeneousPolynomial prod =
                f * HomogeneousPolynomial::monomial_term(src[j], Rational(1));
            for (const auto& [mono, c] : prod.terms()) {
                auto it = basis_pos.find(mono);
                if (it != basis_pos.end()) m.at(it->second, static_cast<int>(j)) = c;
            }
        }
        return rank(m);
    }
    RationalMatrix sys = ideal_matrix(d);
    std::vector<std::vector<Rational>> prod_cols;
    for (const Monomial& b : src) {
        HomogeneousPolynomial prod =
            f * HomogeneousPolynomial::monomial_term(b, Rational(1));
        prod_cols.push_back(prod.coefficient_vector(d.monomials));
    }
    return rank(sys.augmented(RationalMatrix::from_columns(prod_cols))) -
           d.ideal_dim;
}

std::optional<std::vector<HomogeneousPolynomial>> GradedQuotient::ideal_cofactors(
    const HomogeneousPolynomial& g) const {
    if (g.num_vars() != num_vars_)
        throw std::invalid_argument("ideal_cofactors: variable count mismatch");
    int k = g.degree();
    std::vector<HomogeneousPolynomial> cof;
    for (const auto& gen : generators_)
        cof.emplace_back(num_vars_,
                         std::max(0, k - (gen.is_zero() ? 0 : gen.degree())));
    if (g.is_zero()) return cof;

    const DegreeData& d = data(k);
    if (monomial_) {
        for (const auto& [m, c] : g.terms()) {
            bool hit = false;
            for (size_t i = 0; i < generators_.size(); ++i) {
                const auto& gen = generators_[i];
                if (gen.is_zero() || gen.degree() > k) continue;
                const auto& [gm, gc] = *gen.terms().begin();
                if (!gm.divides(m)) continue;
                cof[i] = cof[i] + HomogeneousPolynomial::monomial_term(
                                      gm.divide(m), c / gc);
                hit = true;
                break;
            }
            if (!hit) return std::nullopt;
        }
        return cof;
    }

    auto sol = solve_linear(ideal_matrix(d), g.coefficient_vector(d.monomials));
    if (!sol) return std::nullopt;
    for (size_t j = 0; j < d.columns.size(); ++j) {
        if ((*sol)[j].is_zero()) continue;
        const auto& [gi, mult] = d.columns[j];
        cof[gi] = cof[gi] +
                  HomogeneousPolynomial::monomial_term(mult, (*sol)[j]);
    }
    return cof;
}

std::vector<std::vector<Rational>> GradedQuotient::ideal_span_columns(
    int k) const {
    const DegreeData& d = data(k);
    std::vector<std::vector<Rational>> cols;
    cols.reserve(d.columns.size());
    for (const auto& [g, mult] : d.columns) {
        std::vector<Rational> v(d.monomials.size(), Rational(0));
        for (const auto& [mono, c] : generators_[g].terms())
            v[d.monomial_index.at(mono * mult)] = c;
        cols.push_back(std::move(v));
    }
    return cols;
}

std::vector<Rational> GradedQuotient::socle_functional(int rho) const {
    const DegreeData& d = data(rho);
    if (d.basis.size() != 1)
        throw std::invalid_argument(
            "socle_functional: top quotient piece is not one-dimensional");
    if (monomial_) {
        std::vector<Rational> lambda(d.monomials.size(), Rational(0));
        lambda[d.basis_rows[0]] = Rational(1);
        return lambda;
    }
    auto left = nullspace(ideal_matrix(d).transpose());
    if (left.size() != 1)
        throw std::logic_error("socle_functional: unexpected left kernel size");
    std::vector<Rational> lambda = std::move(left[0]);
    const Rational& pivot = lambda[d.basis_rows[0]];
    if (pivot.is_zero())
        throw std::logic_error("socle_functional: degenerate normalization");
    for (Rational& x : lambda) x /= pivot;
    return lambda;
}

}  // namespace twistcoh
