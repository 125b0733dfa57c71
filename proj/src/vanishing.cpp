#include "twistcoh/vanishing.hpp"

#include <algorithm>
#include <numeric>

namespace twistcoh {

namespace {

std::string istr(long v) { return std::to_string(v); }

AppliedRule rule_with(std::string name,
                      std::vector<std::pair<std::string, std::string>> params) {
    return AppliedRule{std::move(name), std::move(params)};
}

}  // namespace

CompleteIntersectionSpec CompleteIntersectionSpec::make(HSSDescriptor ambient,
                                                        std::vector<int> degrees) {
    for (int d : degrees)
        if (d < 1)
            throw std::invalid_argument(
                "CompleteIntersectionSpec: degrees must be >= 1");
    std::sort(degrees.begin(), degrees.end());
    CompleteIntersectionSpec spec{std::move(ambient), std::move(degrees)};
    if (spec.n() < 1)
        throw std::invalid_argument(
            "CompleteIntersectionSpec: dimension must be >= 1");
    return spec;
}

int CompleteIntersectionSpec::degree_sum() const {
    return std::accumulate(degrees.begin(), degrees.end(), 0);
}

std::string CompleteIntersectionSpec::name() const {
    std::string s = "CI(";
    for (size_t i = 0; i < degrees.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(degrees[i]);
    }
    s += ") in " + ambient.name();
    return s;
}

int ci_index(const CompleteIntersectionSpec& spec) { return spec.ci_index(); }

VanishingCertificate theorem12_predicate(const CompleteIntersectionSpec& spec,
                                         int p, int q, int l,
                                         bool allow_unit_degrees) {
    if (spec.ambient.family == Family::other &&
        !spec.ambient.assume_irreducible_hss)
        throw NotApplicableError(
            "predicate needs an irreducible Hermitian symmetric ambient space");
    int n = spec.n();
    if (n < 2) throw NotApplicableError("intersection dimension must be >= 2");
    if (p < 1 || q < 0 || p + q > n - 1)
        throw NotApplicableError("outside the range p >= 1, q >= 0, p+q <= n-1");
    bool has_unit_degree =
        std::any_of(spec.degrees.begin(), spec.degrees.end(),
                    [](int d) { return d < 2; });
    if (has_unit_degree && !allow_unit_degrees)
        throw NotApplicableError("all degrees must be >= 2");

    VanishingCertificate cert;
    std::vector<std::pair<std::string, std::string>> params{
        {"p", istr(p)}, {"q", istr(q)}, {"l", istr(l)},
        {"n", istr(n)}, {"index", istr(spec.ci_index())}};

    if (l == 0) {
        if (p != q) {
            cert.verdict = Verdict::MustVanish;
            cert.reason_chain.push_back(
                rule_with("hodge-purity", std::move(params)));
        } else {
            cert.verdict = Verdict::PossiblyNonzero;
            cert.reason_chain.push_back(
                rule_with("hodge-diagonal-not-excluded", std::move(params)));
        }
        return cert;
    }

    if (has_unit_degree)
        throw NotApplicableError(
            "the twisted clause needs all degrees >= 2; only l = 0 is covered "
            "with unit degrees");

    // nonvanishing forces l + q > p*index/n; compare exactly, cross-multiplied
    long lhs = static_cast<long>(l + q) * n;
    long rhs = static_cast<long>(p) * spec.ci_index();
    if (lhs <= rhs) {
        cert.verdict = Verdict::MustVanish;
        cert.reason_chain.push_back(
            rule_with("index-inequality", std::move(params)));
    } else {
        cert.verdict = Verdict::PossiblyNonzero;
        cert.reason_chain.push_back(
            rule_with("index-inequality-satisfied", std::move(params)));
    }
    return cert;
}

std::vector<KoszulWitness> lemma51_witnesses(const CompleteIntersectionSpec& spec,
                                             int p, int q, int l) {
    int n = spec.n();
    if (p < 1 || q < 0 || p + q > n)
        throw std::invalid_argument(
            "lemma51_witnesses: need p >= 1, q >= 0, p+q <= n");
    int r = spec.r();
    const std::vector<int>& d = spec.degrees;

    std::vector<std::vector<int>> jvecs;
    std::vector<int> j(static_cast<size_t>(r), 0);
    // lattice points with j_1 + ... + j_r <= p-1, lexicographic recursion
    auto enumerate = [&](auto&& self, int pos, int budget) -> void {
        if (pos == r) {
            jvecs.push_back(j);
            return;
        }
        for (int v = 0; v <= budget; ++v) {
            j[pos] = v;
            self(self, pos + 1, budget - v);
        }
        j[pos] = 0;
    };
    enumerate(enumerate, 0, p - 1);

    std::vector<KoszulWitness> out;
    for (const std::vector<int>& jv : jvecs) {
        int jsum = std::accumulate(jv.begin(), jv.end(), 0);

        KoszulWitness amb;
        amb.kind = KoszulWitness::Case::ambient_form;
        amb.j = jv;
        amb.p_prime = p - jsum;
        amb.q_prime = q + jsum;
        amb.twist = l;
        for (int i = 0; i < r; ++i) amb.twist -= jv[i] * d[i];
        out.push_back(amb);

        for (int s = 2; s <= r + 1; ++s) {
            KoszulWitness lb;
            lb.kind = KoszulWitness::Case::line_bundle;
            lb.j = jv;
            lb.s = s;
            lb.q_prime = q + p;
            lb.twist = l - p * d[s - 2];
            for (int i = s - 1; i < r; ++i)
                lb.twist -= (d[i] - d[s - 2]) * jv[i];
            out.push_back(lb);
        }
    }
    return out;
}

bool kodaira_vanishes(int dim, int q, int twist) {
    return twist < 0 && 1 <= q && q <= dim - 1;
}

bool akizuki_nakano_vanishes(int dim, int p, int q, int twist) {
    if (twist > 0 && p + q > dim) return true;
    if (twist < 0 && p + q < dim) return true;
    return false;
}

IndexBoundCheck kobayashi_ochiai(const HSSDescriptor& ambient) {
    if (ambient.index > ambient.dimension + 1)
        throw std::invalid_argument(
            "kobayashi_ochiai: index exceeds dimension + 1, descriptor "
            "inconsistent");
    return IndexBoundCheck{true, ambient.index == ambient.dimension + 1};
}

std::optional<AppliedRule> discharge_witness(const CompleteIntersectionSpec& spec,
                                             const KoszulWitness& w) {
    int n = spec.n();
    if (w.kind == KoszulWitness::Case::line_bundle) {
        int qd = w.q_prime;
        if (qd < 0 || qd > n)
            return rule_with("degree-out-of-range",
                             {{"q", istr(qd)}, {"dim", istr(n)}});
        if (kodaira_vanishes(n, qd, w.twist))
            return rule_with("kodaira", {{"q", istr(qd)},
                                         {"twist", istr(w.twist)},
                                         {"dim", istr(n)}});
        if (akizuki_nakano_vanishes(n, 0, qd, w.twist))
            return rule_with("akizuki-nakano", {{"p", "0"},
                                                {"q", istr(qd)},
                                                {"twist", istr(w.twist)},
                                                {"dim", istr(n)}});
        return std::nullopt;
    }

    // ambient_form: H^{q'}(Y, Omega_M^{p'}(t)|_Y)
    int pp = w.p_prime, qp = w.q_prime, t = w.twist;
    if (qp < 0 || qp > n)
        return rule_with("degree-out-of-range",
                         {{"q", istr(qp)}, {"dim", istr(n)}});
    if (pp < 0 || pp > spec.ambient.dimension)
        return rule_with("form-degree-out-of-range",
                         {{"p", istr(pp)}, {"ambient-dim",
                                            istr(spec.ambient.dimension)}});

    // Koszul resolution of O_Y: nonvanishing would force some exact ambient
    // table value H^{q'+j}(M, Omega^{p'}(t - d_S)) != 0, S a j-subset.
    int r = spec.r();
    int checked = 0;
    for (unsigned mask = 0; mask < (1u << r); ++mask) {
        int jj = 0, ds = 0;
        for (int i = 0; i < r; ++i)
            if (mask & (1u << i)) {
                ++jj;
                ds += spec.degrees[i];
            }
        CohomologyAnswer ans =
            twisted_form_cohomology(spec.ambient, pp, qp + jj, t - ds);
        if (ans.status != CohomologyStatus::zero) return std::nullopt;
        ++checked;
    }
    return rule_with("koszul-ambient-zero",
                     {{"p", istr(pp)},
                      {"q", istr(qp)},
                      {"twist", istr(t)},
                      {"ambient-pieces", istr(checked)}});
}

std::optional<AppliedRule> certify_family_exact_zero(
    const CompleteIntersectionSpec& spec, int p, int q, int l) {
    std::optional<HSSDescriptor> model;
    if (spec.r() == 0) {
        model = spec.ambient;
    } else if (spec.ambient.family == Family::projective_space ||
               spec.ambient.family == Family::quadric) {
        int n = spec.n();
        int quadrics = 0, higher = 0;
        for (int d : spec.degrees) {
            if (d == 2) ++quadrics;
            if (d > 2) ++higher;
        }
        bool ambient_quadric = spec.ambient.family == Family::quadric;
        if (higher == 0 && quadrics == 0) {
            // linear sections: P stays P, Q stays Q
            if (ambient_quadric) {
                if (n >= 2) model = HSSDescriptor::quadric(n);
            } else {
                model = HSSDescriptor::projective_space(n);
            }
        } else if (!ambient_quadric && higher == 0 && quadrics == 1 && n >= 2) {
            // one quadric plus linear sections of projective space
            model = HSSDescriptor::quadric(n);
        }
    }
    if (!model) return std::nullopt;

    CohomologyAnswer ans = twisted_form_cohomology(*model, p, q, l);
    if (ans.status != CohomologyStatus::zero) return std::nullopt;
    return rule_with("family-exact-zero", {{"model", model->name()},
                                           {"p", istr(p)},
                                           {"q", istr(q)},
                                           {"l", istr(l)},
                                           {"table", ans.certificate}});
}

}  // namespace twistcoh
