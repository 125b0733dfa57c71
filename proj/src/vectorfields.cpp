#include "twistcoh/vectorfields.hpp"

#include <stdexcept>

namespace twistcoh {

namespace {

// Coordinates for tuples (s_0..s_{v-1}) of degree-(t+1) forms: slot i holds
// the monomial coordinates of s_i, so index = i*block + monomial position.
struct TupleSpace {
    int v = 0;
    int t = 0;
    std::vector<Monomial> monomials;  // degree t+1
    int block = 0;

    int dim() const { return v * block; }
};

TupleSpace tuple_space(int v, int t) {
    TupleSpace ts;
    ts.v = v;
    ts.t = t;
    ts.monomials = monomials_of_degree(v, t + 1);
    ts.block = static_cast<int>(ts.monomials.size());
    return ts;
}

RationalMatrix columns_matrix(const std::vector<std::vector<Rational>>& cols,
                              int rows) {
    if (cols.empty()) return RationalMatrix(rows, 0);
    return RationalMatrix::from_columns(cols);
}

// Images of the tuple units under s |-> sum s_i dh/dx_i, over the monomial
// coordinates of S_{t + deg h}.
RationalMatrix raw_tangency_columns(const HomogeneousPolynomial& h,
                                    const TupleSpace& ts) {
    std::vector<Monomial> target = monomials_of_degree(ts.v, ts.t + h.degree());
    std::map<Monomial, int> pos;
    for (size_t i = 0; i < target.size(); ++i)
        pos.emplace(target[i], static_cast<int>(i));

    RationalMatrix m(static_cast<int>(target.size()), ts.dim());
    for (int slot = 0; slot < ts.v; ++slot) {
        HomogeneousPolynomial dh = h.partial(slot);
        for (int b = 0; b < ts.block; ++b) {
            int col = slot * ts.block + b;
            for (const auto& [mono, c] : dh.terms())
                m.at(pos.at(mono * ts.monomials[b]), col) = c;
        }
    }
    return m;
}

// For a pair i < j, the map s |-> x_i s_j - x_j s_i into S_{t+2}.
RationalMatrix raw_pair_block(const TupleSpace& ts, int i, int j) {
    std::vector<Monomial> target = monomials_of_degree(ts.v, ts.t + 2);
    std::map<Monomial, int> pos;
    for (size_t r = 0; r < target.size(); ++r)
        pos.emplace(target[r], static_cast<int>(r));

    Monomial xi = HomogeneousPolynomial::variable(ts.v, i).terms().begin()->first;
    Monomial xj = HomogeneousPolynomial::variable(ts.v, j).terms().begin()->first;

    RationalMatrix m(static_cast<int>(target.size()), ts.dim());
    for (int b = 0; b < ts.block; ++b) {
        m.at(pos.at(xi * ts.monomials[b]), j * ts.block + b) += Rational(1);
        m.at(pos.at(xj * ts.monomials[b]), i * ts.block + b) -= Rational(1);
    }
    return m;
}

// R with (quotient coordinates of vec) = R * vec on the degree-k piece.
RationalMatrix reduction_matrix(const GradedQuotient& q, int k) {
    std::vector<Monomial> monos = monomials_of_degree(q.num_vars(), k);
    int n = static_cast<int>(monos.size());
    std::vector<Monomial> basis = q.quotient_basis(k);
    int nb = static_cast<int>(basis.size());
    if (nb == 0) return RationalMatrix(0, n);

    std::map<Monomial, int> pos;
    for (int i = 0; i < n; ++i) pos.emplace(monos[i], i);

    std::vector<std::vector<Rational>> ideal_cols = q.ideal_span_columns(k);
    int nid = static_cast<int>(ideal_cols.size());
    RationalMatrix units(n, nb);
    for (int j = 0; j < nb; ++j) units.at(pos.at(basis[j]), j) = Rational(1);
    RationalMatrix sys = columns_matrix(ideal_cols, n).augmented(units);

    auto sols = solve_many(sys, RationalMatrix::identity(n));
    RationalMatrix r(nb, n);
    for (int j = 0; j < n; ++j) {
        if (!sols[j])
            throw std::logic_error("reduction_matrix: degree piece span broken");
        for (int i = 0; i < nb; ++i) r.at(i, j) = (*sols[j])[nid + i];
    }
    return r;
}

// Candidate columns (by index) independent modulo the span of `fixed`.
std::vector<int> complement_picks(const RationalMatrix& fixed,
                                  const RationalMatrix& cand) {
    if (cand.cols() == 0) return {};
    EchelonForm ef = echelon_form(fixed.augmented(cand),
                                  fixed.cols() + cand.cols());
    std::vector<int> picks;
    for (int c : ef.pivot_cols)
        if (c >= fixed.cols()) picks.push_back(c - fixed.cols());
    return picks;
}

PolyVectorField field_from_vector(const TupleSpace& ts,
                                  const std::vector<Rational>& x) {
    std::vector<HomogeneousPolynomial> comps;
    for (int slot = 0; slot < ts.v; ++slot) {
        std::vector<std::pair<Monomial, Rational>> terms;
        for (int b = 0; b < ts.block; ++b) {
            const Rational& c = x[static_cast<size_t>(slot) * ts.block + b];
            if (!c.is_zero()) terms.emplace_back(ts.monomials[b], c);
        }
        comps.push_back(
            HomogeneousPolynomial::from_terms(ts.v, ts.t + 1, terms));
    }
    return PolyVectorField::make(std::move(comps), ts.t);
}

// Euler multiples p*(x_0..x_{v-1}), p running over S_t.
std::vector<std::vector<Rational>> euler_columns(const TupleSpace& ts) {
    std::vector<std::vector<Rational>> cols;
    if (ts.t < 0) return cols;
    std::map<Monomial, int> pos;
    for (int b = 0; b < ts.block; ++b) pos.emplace(ts.monomials[b], b);
    for (const Monomial& mu : monomials_of_degree(ts.v, ts.t)) {
        std::vector<Rational> col(ts.dim(), Rational(0));
        for (int slot = 0; slot < ts.v; ++slot) {
            Monomial xm =
                HomogeneousPolynomial::variable(ts.v, slot).terms().begin()->first;
            col[static_cast<size_t>(slot) * ts.block + pos.at(xm * mu)] =
                Rational(1);
        }
        cols.push_back(std::move(col));
    }
    return cols;
}

// Tuples g*(e_i * h) for g in S_{t+1-deg h}: the h-multiple equivalences.
std::vector<std::vector<Rational>> h_multiple_columns(
    const HomogeneousPolynomial& h, const TupleSpace& ts) {
    std::vector<std::vector<Rational>> cols;
    int gd = ts.t + 1 - h.degree();
    if (gd < 0) return cols;
    std::map<Monomial, int> pos;
    for (int b = 0; b < ts.block; ++b) pos.emplace(ts.monomials[b], b);
    for (const Monomial& nu : monomials_of_degree(ts.v, gd)) {
        for (int slot = 0; slot < ts.v; ++slot) {
            std::vector<Rational> col(ts.dim(), Rational(0));
            for (const auto& [mono, c] : h.terms())
                col[static_cast<size_t>(slot) * ts.block + pos.at(mono * nu)] = c;
            cols.push_back(std::move(col));
        }
    }
    return cols;
}

struct ValidatedProblem {
    HypersurfaceSpec spec;
    HomogeneousPolynomial f;
    int d = 0;
};

HypersurfaceSpec validate_hypersurface(const HomogeneousPolynomial& h) {
    HypersurfaceSpec spec = HypersurfaceSpec::from_polynomial(h);
    if (spec.num_vars < 2)
        throw std::invalid_argument("tangency: need at least two variables");
    MilnorAlgebra ma(spec);
    if (!ma.artinian_within_bound())
        throw std::invalid_argument(
            "tangency: singular hypersurface (Milnor algebra not finite)");
    return spec;
}

ValidatedProblem validate_problem(const TangencyProblem& tp) {
    ValidatedProblem vp{validate_hypersurface(tp.h), {}, 0};
    if (!tp.f)
        throw std::invalid_argument("tangency: the section polynomial f is required");
    vp.f = *tp.f;
    if (vp.f.is_zero() || vp.f.num_vars() != vp.spec.num_vars)
        throw std::invalid_argument("tangency: f must be nonzero in the same variables");
    vp.d = vp.f.degree();
    if (vp.d < 1) throw std::invalid_argument("tangency: deg f must be >= 1");
    if (vp.spec.num_vars < 5)
        throw std::invalid_argument(
            "tangency: X must be a surface or higher (need >= 5 variables)");

    // no common factor: the degree-(d+d_h) piece of <f,h> has the dimension
    // it would for a regular pair (overlap exactly the multiples of f*h)
    int v = vp.spec.num_vars;
    int dh = vp.spec.degree_h;
    GradedQuotient q(v, {vp.f, tp.h});
    long expected =
        static_cast<long>(monomials_of_degree(v, dh).size()) +
        static_cast<long>(monomials_of_degree(v, vp.d).size()) - 1;
    if (q.ideal_dimension(vp.d + dh) != expected)
        throw std::invalid_argument(
            "tangency: f and h share a common factor (degenerate X)");
    return vp;
}

}  // namespace

PolyVectorField PolyVectorField::make(
    std::vector<HomogeneousPolynomial> components, int twist) {
    if (twist < -1)
        throw std::invalid_argument("PolyVectorField: twist must be >= -1");
    if (components.size() < 2)
        throw std::invalid_argument("PolyVectorField: need at least two components");
    int v = static_cast<int>(components.size());
    for (HomogeneousPolynomial& c : components) {
        if (c.is_zero()) {
            c = HomogeneousPolynomial(v, twist + 1);
            continue;
        }
        if (c.num_vars() != v || c.degree() != twist + 1)
            throw std::invalid_argument(
                "PolyVectorField: component shape mismatch");
    }
    return PolyVectorField{std::move(components), twist};
}

SectionSpace h0_tangent_projective(int m, int t) {
    if (m < 1) throw std::invalid_argument("h0_tangent_projective: need m >= 1");
    SectionSpace out;
    if (t <= -2) return out;
    TupleSpace ts = tuple_space(m + 1, t);
    RationalMatrix euler = columns_matrix(euler_columns(ts), ts.dim());
    std::vector<int> picks =
        complement_picks(euler, RationalMatrix::identity(ts.dim()));
    out.dimension = static_cast<int>(picks.size());
    for (int p : picks) {
        std::vector<Rational> unit(ts.dim(), Rational(0));
        unit[p] = Rational(1);
        out.basis.push_back(field_from_vector(ts, unit));
    }
    return out;
}

SectionSpace h0_tangent_hypersurface(const HomogeneousPolynomial& h, int t) {
    HypersurfaceSpec spec = validate_hypersurface(h);
    SectionSpace out;
    if (t <= -2) return out;
    int v = spec.num_vars;
    TupleSpace ts = tuple_space(v, t);

    GradedQuotient qh(v, {h});
    RationalMatrix m = reduction_matrix(qh, t + spec.degree_h) *
                       raw_tangency_columns(h, ts);
    std::vector<std::vector<Rational>> kernel = nullspace(m);

    std::vector<std::vector<Rational>> eq = euler_columns(ts);
    for (auto& c : h_multiple_columns(h, ts)) eq.push_back(std::move(c));

    RationalMatrix eqm = columns_matrix(eq, ts.dim());
    RationalMatrix km = columns_matrix(kernel, ts.dim());
    std::vector<int> picks = complement_picks(eqm, km);
    out.dimension = static_cast<int>(picks.size());
    for (int p : picks) out.basis.push_back(field_from_vector(ts, kernel[p]));
    return out;
}

namespace {

// Shared guts for the X-side computations: kernels of the tangency and
// vanishing conditions taken modulo <f,h>.
struct RestrictedKernels {
    TupleSpace ts;
    std::vector<std::vector<Rational>> tangent;       // K_tan
    std::vector<std::vector<Rational>> tangent_vanishing;  // K_tan with K_van
};

RestrictedKernels restricted_kernels(const ValidatedProblem& vp,
                                     const HomogeneousPolynomial& h, int t) {
    RestrictedKernels rk;
    int v = vp.spec.num_vars;
    rk.ts = tuple_space(v, t);
    GradedQuotient q2(v, {vp.f, h});

    RationalMatrix mtan = reduction_matrix(q2, t + vp.spec.degree_h) *
                          raw_tangency_columns(h, rk.ts);
    rk.tangent = nullspace(mtan);

    std::vector<RationalMatrix> blocks{mtan};
    RationalMatrix rvan = reduction_matrix(q2, t + 2);
    for (int i = 0; i < v; ++i)
        for (int j = i + 1; j < v; ++j)
            blocks.push_back(rvan * raw_pair_block(rk.ts, i, j));
    rk.tangent_vanishing = nullspace(vertical_stack(blocks));
    return rk;
}

}  // namespace

SectionSpace h0_tangent_restricted(const TangencyProblem& tp) {
    ValidatedProblem vp = validate_problem(tp);
    SectionSpace out;
    if (tp.t <= -2) return out;
    RestrictedKernels rk = restricted_kernels(vp, tp.h, tp.t);

    RationalMatrix vt = columns_matrix(rk.tangent_vanishing, rk.ts.dim());
    RationalMatrix kt = columns_matrix(rk.tangent, rk.ts.dim());
    std::vector<int> picks = complement_picks(vt, kt);
    out.dimension = static_cast<int>(picks.size());
    for (int p : picks)
        out.basis.push_back(field_from_vector(rk.ts, rk.tangent[p]));
    return out;
}

RestrictionReport restriction_surjectivity(const TangencyProblem& tp) {
    ValidatedProblem vp = validate_problem(tp);
    RestrictionReport rep;
    if (tp.t <= -2) {
        rep.surjective = true;  // both sides are the zero space
        return rep;
    }

    SectionSpace on_y = h0_tangent_hypersurface(tp.h, tp.t);
    rep.dim_on_y = on_y.dimension;

    RestrictedKernels rk = restricted_kernels(vp, tp.h, tp.t);
    RationalMatrix vt = columns_matrix(rk.tangent_vanishing, rk.ts.dim());
    RationalMatrix kt = columns_matrix(rk.tangent, rk.ts.dim());
    rep.dim_on_x =
        static_cast<int>(complement_picks(vt, kt).size());

    // image of the Y-sections inside K_tan / (K_van cap K_tan)
    std::vector<std::vector<Rational>> ycols;
    for (const PolyVectorField& s : on_y.basis) {
        std::vector<Rational> col(rk.ts.dim(), Rational(0));
        for (int slot = 0; slot < rk.ts.v; ++slot)
            for (int b = 0; b < rk.ts.block; ++b)
                col[static_cast<size_t>(slot) * rk.ts.block + b] =
                    s.components[slot].coefficient(rk.ts.monomials[b]);
        ycols.push_back(std::move(col));
    }
    rep.rank = static_cast<int>(
        complement_picks(vt, columns_matrix(ycols, rk.ts.dim())).size());
    rep.surjective = rep.rank == rep.dim_on_x;
    return rep;
}

int extension_threshold(int rho, int d, int d_h) {
    return (rho + d) / 2 - d_h;  // rho, d >= 0 so the division is a floor
}

std::optional<PolyVectorField> extend_section(const TangencyProblem& tp,
                                              const PolyVectorField& s) {
    ValidatedProblem vp = validate_problem(tp);
    int v = vp.spec.num_vars;
    int dh = vp.spec.degree_h;
    int t = tp.t;
    if (static_cast<int>(s.components.size()) != v || s.twist != t)
        throw std::invalid_argument("extend_section: field shape mismatch");

    HomogeneousPolynomial tau(v, t + dh);
    for (int i = 0; i < v; ++i) tau = tau + s.components[i] * tp.h.partial(i);

    GradedQuotient q2(v, {vp.f, tp.h});
    for (const Rational& c : q2.reduce(tau))
        if (!c.is_zero())
            throw std::invalid_argument("extend_section: field is not tangent along X");

    // tau = g*f + p*h with g of degree t+dh-d, p of degree t
    std::vector<Monomial> target = monomials_of_degree(v, t + dh);
    std::map<Monomial, int> pos;
    for (size_t i = 0; i < target.size(); ++i)
        pos.emplace(target[i], static_cast<int>(i));

    std::vector<Monomial> gmons;
    if (t + dh - vp.d >= 0) gmons = monomials_of_degree(v, t + dh - vp.d);
    std::vector<Monomial> pmons;
    if (t >= 0) pmons = monomials_of_degree(v, t);

    std::vector<std::vector<Rational>> cols;
    for (const Monomial& nu : gmons) {
        std::vector<Rational> col(target.size(), Rational(0));
        for (const auto& [mono, c] : vp.f.terms()) col[pos.at(mono * nu)] = c;
        cols.push_back(std::move(col));
    }
    for (const Monomial& mu : pmons) {
        std::vector<Rational> col(target.size(), Rational(0));
        for (const auto& [mono, c] : tp.h.terms()) col[pos.at(mono * mu)] = c;
        cols.push_back(std::move(col));
    }
    auto sol = solve_linear(columns_matrix(cols, static_cast<int>(target.size())),
                            tau.coefficient_vector(target));
    if (!sol)
        throw std::logic_error("extend_section: tangency certificate broken");

    std::vector<std::pair<Monomial, Rational>> gterms;
    for (size_t i = 0; i < gmons.size(); ++i)
        if (!(*sol)[i].is_zero()) gterms.emplace_back(gmons[i], (*sol)[i]);
    HomogeneousPolynomial g = HomogeneousPolynomial::from_terms(
        v, std::max(t + dh - vp.d, 0), gterms);

    auto cof = ideal_membership(g, jacobian_ideal(vp.spec));
    if (!cof) return std::nullopt;  // obstructed

    std::vector<HomogeneousPolynomial> comps;
    for (int i = 0; i < v; ++i)
        comps.push_back(s.components[i] - (*cof)[i] * vp.f);
    return PolyVectorField::make(std::move(comps), t);
}

HomogeneousPolynomial general_divisor(const MilnorAlgebra& ma, int d,
                                      unsigned long long seed) {
    if (d < 1) throw std::invalid_argument("general_divisor: need d >= 1");
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < 16; ++attempt) {
        HomogeneousPolynomial f = random_form(ma.spec().num_vars, d, rng);
        if (ma.is_faithful(f)) return f;
    }
    throw std::runtime_error(
        "general_divisor: no faithful draw found within the attempt budget");
}

}  // namespace twistcoh
