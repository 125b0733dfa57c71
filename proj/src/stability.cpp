#include "twistcoh/stability.hpp"

#include <stdexcept>

namespace twistcoh {

namespace {

std::string istr(long v) { return std::to_string(v); }

AppliedRule rule_with(std::string name,
                      std::vector<std::pair<std::string, std::string>> params) {
    return AppliedRule{std::move(name), std::move(params)};
}

// Largest integer <= q (floor for exact rationals).
Int rational_floor(const Rational& q) {
    Int f;
    mpz_fdiv_q(f.get_mpz_t(), q.num().get_mpz_t(), q.den().get_mpz_t());
    return f;
}

}  // namespace

Rational slope(const SlopeData& s) {
    if (s.rank < 1) throw std::invalid_argument("slope: rank must be >= 1");
    return s.c1_degree / Rational(s.rank);
}

Rational ChernData::discriminant_Hn2() const {
    return Rational(2 * rank) * c2_Hn2 - Rational(rank - 1) * c1_squared_Hn2;
}

Int langer_bound(const ChernData& cd) {
    if (cd.rank < 2)
        throw std::invalid_argument("langer_bound: rank must be >= 2");
    if (cd.Hn.sign() <= 0)
        throw std::invalid_argument("langer_bound: H^n must be positive");
    Rational p(cd.rank);
    Rational rhs = (p - Rational(1)) / p * cd.discriminant_Hn2() +
                   Rational(1) / (p * (p - Rational(1)) * cd.Hn);
    return rational_floor(rhs) + 1;  // smallest integer strictly above rhs
}

StabilityVerdict theorem13_verdict(const CompleteIntersectionSpec& spec) {
    StabilityVerdict v;
    auto fail = [&](const std::string& what) {
        v.verdict = Stability::Unknown;
        v.certificate = rule_with("precondition-failed", {{"what", what}});
        return v;
    };
    if (spec.ambient.family == Family::other &&
        !spec.ambient.assume_irreducible_hss)
        return fail("ambient not asserted irreducible Hermitian symmetric");
    if (spec.n() < 3) return fail("dimension n < 3");
    for (int d : spec.degrees)
        if (d < 2) return fail("a degree below 2");
    v.verdict = Stability::Stable;
    v.certificate = rule_with(
        "tangent-stability-complete-intersection",
        {{"n", istr(spec.n())}, {"ambient", spec.ambient.name()}});
    return v;
}

StabilityVerdict theorem15_verdict(const CompleteIntersectionSpec& spec, int d,
                                   const RestrictionFlags& flags) {
    if (spec.r() < 1)
        throw std::invalid_argument("theorem15_verdict: need at least one degree");
    if (spec.n() < 3)
        throw std::invalid_argument("theorem15_verdict: need n >= 3");
    for (int dd : spec.degrees)
        if (dd < 2)
            throw std::invalid_argument("theorem15_verdict: degrees must be >= 2");
    if (d < 1) throw std::invalid_argument("theorem15_verdict: need d >= 1");

    StabilityVerdict v;
    v.relied_on_flags.push_back("picard_restriction_surjective");
    if (!flags.picard_restriction_surjective) {
        v.verdict = Stability::Unknown;
        v.certificate = rule_with(
            "hypothesis-missing",
            {{"what", "picard restriction surjectivity not asserted"}});
        return v;
    }

    bool fano = spec.fano();
    Family fam = spec.ambient.family;
    int n = spec.n();
    int d1 = spec.degrees.front();
    int dr = spec.degrees.back();
    int index = spec.ci_index();
    // condition (4): d > d_r - index/n, cross-multiplied by n > 0
    bool beyond_threshold =
        static_cast<long>(d) * n > static_cast<long>(dr) * n - index;

    auto decide = [&](const char* name,
                      std::vector<std::pair<std::string, std::string>> params) {
        v.verdict = Stability::Stable;
        v.certificate = rule_with(name, std::move(params));
        return v;
    };

    bool hss_ok = fam != Family::other || spec.ambient.assume_irreducible_hss;
    if (fano && hss_ok && fam != Family::projective_space &&
        fam != Family::quadric)
        return decide("restriction-condition-1",
                      {{"ambient", spec.ambient.name()}});
    if (fano && fam == Family::projective_space && d >= d1)
        return decide("restriction-condition-2",
                      {{"d", istr(d)}, {"d1", istr(d1)}});
    if (fano && fam == Family::quadric && d >= 2)
        return decide("restriction-condition-3", {{"d", istr(d)}});
    if (flags.x_general && beyond_threshold) {
        v.relied_on_flags.push_back("x_general");
        return decide("restriction-condition-4",
                      {{"d", istr(d)},
                       {"threshold", istr(dr) + " - " + istr(index) + "/" +
                                         istr(n)}});
    }

    v.verdict = Stability::Unknown;
    v.certificate = rule_with("no-condition-certified", {});
    v.condition_report.push_back(rule_with(
        "restriction-condition-1",
        {{"fano", fano ? "yes" : "no"},
         {"ambient-excluded",
          (fam == Family::projective_space || fam == Family::quadric) ? "yes"
                                                                      : "no"}}));
    v.condition_report.push_back(
        rule_with("restriction-condition-2",
                  {{"fano", fano ? "yes" : "no"},
                   {"ambient-projective",
                    fam == Family::projective_space ? "yes" : "no"},
                   {"d>=d1", d >= d1 ? "yes" : "no"}}));
    v.condition_report.push_back(rule_with(
        "restriction-condition-3",
        {{"fano", fano ? "yes" : "no"},
         {"ambient-quadric", fam == Family::quadric ? "yes" : "no"},
         {"d>=2", d >= 2 ? "yes" : "no"}}));
    v.condition_report.push_back(rule_with(
        "restriction-condition-4",
        {{"x_general", flags.x_general ? "yes" : "no"},
         {"d", istr(d)},
         {"threshold", istr(dr) + " - " + istr(index) + "/" + istr(n)},
         {"beyond-threshold", beyond_threshold ? "yes" : "no"}}));
    return v;
}

StabilityVerdict theorem16_verdict(int n, int d_h, int d) {
    if (n < 3) throw std::invalid_argument("theorem16_verdict: need n >= 3");
    if (d_h < 1 || d < 1)
        throw std::invalid_argument("theorem16_verdict: need d_h, d >= 1");
    StabilityVerdict v;
    v.relied_on_flags = {"y_general", "x_general",
                         "picard_restriction_surjective"};
    if (d == 1 && (d_h == 1 || d_h == 2)) {
        v.verdict = Stability::Unstable;
        v.certificate = rule_with(
            "linear-section-exception",
            {{"d_h", istr(d_h)}, {"d", istr(d)},
             {"model", d_h == 1 ? "projective space" : "quadric"}});
        v.destabilizer_hint = "T_X inside T_Y|_X along the linear section";
        return v;
    }
    v.verdict = Stability::Stable;
    v.certificate = rule_with("hypersurface-restriction-stable",
                              {{"n", istr(n)}, {"d_h", istr(d_h)},
                               {"d", istr(d)}});
    return v;
}

namespace {

bool is_quadric_model(const CompleteIntersectionSpec& spec) {
    if (spec.ambient.family == Family::quadric && spec.r() == 0) return true;
    return spec.ambient.family == Family::projective_space && spec.r() == 1 &&
           spec.degrees[0] == 2;
}

}  // namespace

Prop52TestSet prop52_test_set(const CompleteIntersectionSpec& spec, int d) {
    if (spec.n() < 3)
        throw std::invalid_argument("prop52_test_set: need n >= 3");
    for (int dd : spec.degrees)
        if (dd < 2)
            throw std::invalid_argument("prop52_test_set: degrees must be >= 2");
    if (d < 1) throw std::invalid_argument("prop52_test_set: need d >= 1");
    if (is_quadric_model(spec) && d < 2)
        throw std::invalid_argument(
            "prop52_test_set: a quadric needs section degree d >= 2");

    Prop52TestSet out;
    Rational bound = Rational(-spec.ci_index()) / Rational(spec.n());
    Int t = rational_floor(bound);
    out.t_max = static_cast<int>(t.get_si());
    out.justification =
        "multiplication by a nonzero section of the ample generator embeds "
        "H^0(T_Y(t)|_X) into H^0(T_Y(t+1)|_X), so vanishing at t_max = "
        "floor(-index/n) = " +
        istr(out.t_max) + " settles every t <= -index/n";
    return out;
}

StabilityVerdict prop52_verdict(const CompleteIntersectionSpec& spec, int d,
                                int h0_dim_at_tmax) {
    Prop52TestSet ts = prop52_test_set(spec, d);  // re-validates inputs
    StabilityVerdict v;
    v.relied_on_flags = {"picard_restriction_surjective", "x_general"};
    if (h0_dim_at_tmax == 0) {
        v.verdict = Stability::Stable;
        v.certificate = rule_with(
            "no-negative-twisted-vector-fields",
            {{"t_max", istr(ts.t_max)}, {"h0", "0"}, {"d", istr(d)}});
    } else {
        v.verdict = Stability::Unstable;
        v.certificate = rule_with(
            "negative-twisted-vector-field",
            {{"t_max", istr(ts.t_max)}, {"h0", istr(h0_dim_at_tmax)},
             {"d", istr(d)}});
        v.destabilizer_hint =
            "a twisted vector field at t = " + istr(ts.t_max) +
            " generates a destabilizing subsheaf of T_Y|_X";
    }
    return v;
}

}  // namespace twistcoh
