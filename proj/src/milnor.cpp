#include "twistcoh/milnor.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace twistcoh {

HypersurfaceSpec HypersurfaceSpec::from_polynomial(
    const HomogeneousPolynomial& h) {
    if (h.num_vars() < 1)
        throw std::invalid_argument("HypersurfaceSpec: need at least one variable");
    if (h.is_zero())
        throw std::invalid_argument("HypersurfaceSpec: zero polynomial");
    if (h.degree() < 2)
        throw std::invalid_argument("HypersurfaceSpec: degree must be >= 2");
    return HypersurfaceSpec{h.num_vars(), h.degree(), h};
}

HypersurfaceSpec HypersurfaceSpec::fermat(int num_vars, int degree_h) {
    if (num_vars < 1 || degree_h < 2)
        throw std::invalid_argument("HypersurfaceSpec::fermat: bad parameters");
    return HypersurfaceSpec{num_vars, degree_h, fermat_form(num_vars, degree_h)};
}

std::vector<HomogeneousPolynomial> jacobian_ideal(const HypersurfaceSpec& spec) {
    std::vector<HomogeneousPolynomial> gens;
    gens.reserve(spec.num_vars);
    for (int i = 0; i < spec.num_vars; ++i) gens.push_back(spec.h.partial(i));
    return gens;
}

IdealPiece ideal_degree_piece(const std::vector<HomogeneousPolynomial>& gens,
                              int k) {
    if (gens.empty())
        throw std::invalid_argument("ideal_degree_piece: no generators");
    GradedQuotient q(gens[0].num_vars(), gens);
    IdealPiece out;
    out.ambient_monomials = monomials_of_degree(gens[0].num_vars(), k);
    int width = static_cast<int>(out.ambient_monomials.size());

    std::vector<std::vector<Rational>> cols = q.ideal_span_columns(k);
    if (cols.empty()) {
        out.basis = RationalMatrix(0, width);
        return out;
    }
    EchelonForm ef =
        echelon_form(RationalMatrix::from_columns(cols).transpose(), width);
    out.dimension = ef.rank();
    std::vector<std::vector<Rational>> rows;
    for (int i = 0; i < ef.rank(); ++i) {
        std::vector<Rational> r;
        r.reserve(width);
        for (const Int& x : ef.rows[i]) r.emplace_back(x);
        rows.push_back(std::move(r));
    }
    out.basis = rows.empty() ? RationalMatrix(0, width)
                             : RationalMatrix::from_rows(rows);
    return out;
}

std::vector<int> geometric_product_coefficients(const std::vector<int>& tops) {
    std::vector<int> acc{1};
    for (int top : tops) {
        if (top < 0)
            throw std::invalid_argument("geometric_product_coefficients: top < 0");
        std::vector<int> next(acc.size() + top, 0);
        for (size_t i = 0; i < acc.size(); ++i)
            for (int s = 0; s <= top; ++s) next[i + s] += acc[i];
        acc = std::move(next);
    }
    return acc;
}

MilnorAlgebra::MilnorAlgebra(HypersurfaceSpec spec,
                             GradedQuotient::Strategy strategy)
    : spec_(std::move(spec)),
      gens_(jacobian_ideal(spec_)),
      rho_((spec_.degree_h - 2) * spec_.num_vars),
      quotient_(spec_.num_vars, gens_, strategy) {
    if (spec_.num_vars < 1 || spec_.degree_h < 2 ||
        spec_.h.num_vars() != spec_.num_vars ||
        spec_.h.degree() != spec_.degree_h || spec_.h.is_zero())
        throw std::invalid_argument("MilnorAlgebra: malformed hypersurface spec");
}

int MilnorAlgebra::dimension(int i) const {
    if (i < 0) return 0;
    return quotient_.quotient_dimension(i);
}

std::vector<Monomial> MilnorAlgebra::basis(int i) const {
    if (i < 0) return {};
    return quotient_.quotient_basis(i);
}

bool MilnorAlgebra::artinian_within_bound() const {
    return dimension(rho_ + 1) == 0;
}

std::optional<std::vector<int>> MilnorAlgebra::hilbert_series() const {
    std::vector<int> dims;
    for (int i = 0; i <= rho_ + 1; ++i) {
        int d = dimension(i);
        if (d == 0) return dims;  // zero stays zero from here on
        dims.push_back(d);
    }
    return std::nullopt;  // still alive at rho+1: not finite within bound
}

bool MilnorAlgebra::hilbert_symmetric() const {
    auto dims = hilbert_series();
    if (!dims) return false;
    if (static_cast<int>(dims->size()) != rho_ + 1) return false;
    for (int i = 0; 2 * i <= rho_; ++i)
        if ((*dims)[i] != (*dims)[rho_ - i]) return false;
    return true;
}

bool MilnorAlgebra::hilbert_unimodal() const {
    auto dims = hilbert_series();
    if (!dims) return false;
    size_t i = 1;
    while (i < dims->size() && (*dims)[i - 1] <= (*dims)[i]) ++i;
    while (i < dims->size() && (*dims)[i - 1] >= (*dims)[i]) ++i;
    return i == dims->size();
}

RationalMatrix MilnorAlgebra::multiplication_map(const HomogeneousPolynomial& f,
                                                 int i) const {
    if (!f.is_zero() && f.num_vars() != spec_.num_vars)
        throw std::invalid_argument("multiplication_map: variable count");
    if (f.is_zero())
        return RationalMatrix(dimension(i + f.degree()), dimension(i));
    return quotient_.multiplication_matrix(f, i);
}

int MilnorAlgebra::multiplication_rank(const HomogeneousPolynomial& f,
                                       int i) const {
    if (!f.is_zero() && f.num_vars() != spec_.num_vars)
        throw std::invalid_argument("multiplication_rank: variable count");
    if (f.is_zero()) return 0;
    return quotient_.multiplication_rank(f, i);
}

bool MilnorAlgebra::is_faithful(const HomogeneousPolynomial& f) const {
    if (!artinian_within_bound())
        throw std::invalid_argument("is_faithful: algebra not finite within bound");
    int j = f.degree();
    if (hilbert_symmetric() && hilbert_unimodal()) {
        for (int i = 0; 2 * i <= rho_ - j; ++i)
            if (multiplication_rank(f, i) != dimension(i)) return false;
        return true;
    }
    return is_faithful_via_all_ranks(f);
}

bool MilnorAlgebra::is_faithful_via_all_ranks(
    const HomogeneousPolynomial& f) const {
    if (!artinian_within_bound())
        throw std::invalid_argument("is_faithful: algebra not finite within bound");
    int j = f.degree();
    for (int i = 0; i <= rho_; ++i) {
        int want = std::min(dimension(i), dimension(i + j));
        if (multiplication_rank(f, i) != want) return false;
    }
    return true;
}

RationalMatrix MilnorAlgebra::pairing_matrix(int i) const {
    if (i < 0 || i > rho_)
        throw std::invalid_argument("pairing_matrix: degree out of range");
    std::vector<Rational> lambda = quotient_.socle_functional(rho_);
    std::vector<Monomial> top_monomials = monomials_of_degree(spec_.num_vars, rho_);
    std::map<Monomial, int> top_index;
    for (size_t t = 0; t < top_monomials.size(); ++t)
        top_index.emplace(top_monomials[t], static_cast<int>(t));

    std::vector<Monomial> left = basis(i);
    std::vector<Monomial> right = basis(rho_ - i);
    RationalMatrix m(static_cast<int>(left.size()),
                     static_cast<int>(right.size()));
    for (size_t r = 0; r < left.size(); ++r)
        for (size_t c = 0; c < right.size(); ++c)
            m.at(static_cast<int>(r), static_cast<int>(c)) =
                lambda[top_index.at(left[r] * right[c])];
    return m;
}

bool MilnorAlgebra::pairing_full_rank(int i) const {
    RationalMatrix m = pairing_matrix(i);
    return rank(m) == std::min(m.rows(), m.cols());
}

SlpCheck check_slp(const std::vector<int>& degrees, int power_bound,
                   unsigned long long seed) {
    if (degrees.empty())
        throw std::invalid_argument("check_slp: empty degree list");
    for (int d : degrees)
        if (d < 1) throw std::invalid_argument("check_slp: degrees must be >= 1");
    if (power_bound < 1)
        throw std::invalid_argument("check_slp: power bound must be >= 1");

    int r = static_cast<int>(degrees.size());
    std::vector<HomogeneousPolynomial> gens;
    int rho = 0;
    for (int i = 0; i < r; ++i) {
        gens.push_back(
            HomogeneousPolynomial::variable(r, i).pow(degrees[i]));
        rho += degrees[i] - 1;
    }
    GradedQuotient q(r, gens);

    SlpCheck out;
    out.power_bound = power_bound;
    out.socle_degree = rho;

    std::mt19937_64 rng(seed);
    const int kAttemptBudget = 16;
    for (int attempt = 1; attempt <= kAttemptBudget; ++attempt) {
        out.attempts = attempt;
        HomogeneousPolynomial ell = random_form(r, 1, rng);
        bool good = true;
        for (int d = 1; good && d <= power_bound; ++d) {
            HomogeneousPolynomial fd = ell.pow(d);
            for (int i = 0; i <= rho; ++i) {
                int want = std::min(q.quotient_dimension(i),
                                    q.quotient_dimension(i + d));
                if (q.multiplication_rank(fd, i) != want) {
                    good = false;
                    break;
                }
            }
        }
        if (good) {
            out.has_slp = true;
            out.witness = ell;
            return out;
        }
    }
    return out;  // has_slp == false: no witness found within budget
}

std::optional<std::vector<HomogeneousPolynomial>> ideal_membership(
    const HomogeneousPolynomial& g,
    const std::vector<HomogeneousPolynomial>& gens) {
    if (gens.empty()) {
        if (g.is_zero()) return std::vector<HomogeneousPolynomial>{};
        return std::nullopt;
    }
    GradedQuotient q(gens[0].num_vars(), gens);
    return q.ideal_cofactors(g);
}

}  // namespace twistcoh
