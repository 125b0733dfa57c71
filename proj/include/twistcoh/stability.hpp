#ifndef TWISTCOH_STABILITY_HPP
#define TWISTCOH_STABILITY_HPP

#include <optional>
#include <string>
#include <vector>

#include "twistcoh/rational.hpp"
#include "twistcoh/vanishing.hpp"

namespace twistcoh {

// Slope of a sheaf against the polarization: c1-degree over rank.
struct SlopeData {
    Rational c1_degree;  // c1(F) . H^{n-1} in units of the ample generator
    int rank = 1;
};
Rational slope(const SlopeData& s);

// Chern data entering the effective restriction bound.
struct ChernData {
    int rank = 2;             // p >= 2
    Rational c1_squared_Hn2;  // c1^2 . H^{n-2}
    Rational c2_Hn2;          // c2 . H^{n-2}
    Rational Hn = Rational(1);  // H^n > 0

    // Discriminant against H^{n-2}: 2p c2 - (p-1) c1^2.
    Rational discriminant_Hn2() const;
};

// Smallest integer d with d > ((p-1)/p) * Delta.H^{n-2} + 1/(p(p-1)H^n),
// evaluated in exact rationals.  Requires rank >= 2 and H^n > 0.
Int langer_bound(const ChernData& cd);

enum class Stability { Stable, Semistable, Unstable, Unknown };

struct StabilityVerdict {
    Stability verdict = Stability::Unknown;
    AppliedRule certificate;  // the condition that decided, with parameters
    std::optional<std::string> destabilizer_hint;
    // Hypotheses that cannot be decided algorithmically and were taken as
    // asserted inputs (genericity, Picard-restriction surjectivity).
    std::vector<std::string> relied_on_flags;
    // For Unknown verdicts: how each candidate condition evaluated.
    std::vector<AppliedRule> condition_report;
};

// Stability of T_Y for a smooth complete intersection Y in an irreducible
// Hermitian symmetric ambient: Stable when n >= 3 and every degree >= 2;
// Unknown (with the failed precondition named) otherwise.
StabilityVerdict theorem13_verdict(const CompleteIntersectionSpec& spec);

// Genericity hypotheses are inputs, not conclusions; every verdict records
// the ones it consumed.
struct RestrictionFlags {
    bool picard_restriction_surjective = false;
    bool x_general = false;
    bool y_general = false;
};

// Stability of T_Y|_X for X in |O_Y(d)|, via the four sufficient conditions:
//   (1) Y Fano, ambient neither projective space nor quadric;
//   (2) Y Fano, d >= d_1, ambient projective space;
//   (3) Y Fano, d >= 2, ambient quadric;
//   (4) X general (flag) and d > d_r - index/n, exact rationals.
// Requires n >= 3, r >= 1, degrees >= 2, d >= 1, and the Picard-restriction
// surjectivity flag; Unknown verdicts carry all four evaluations.
StabilityVerdict theorem15_verdict(const CompleteIntersectionSpec& spec, int d,
                                   const RestrictionFlags& flags);

// Restriction of T_Y for a general degree-d_h hypersurface Y in P^{n+1} to a
// general X in |O_Y(d)|: Unstable (destabilized by T_X) exactly when d = 1
// and d_h in {1, 2}; Stable otherwise.  Genericity and Picard surjectivity
// are recorded as assumed.
StabilityVerdict theorem16_verdict(int n, int d_h, int d);

// Reduction of the t <= -index/n test family to its largest member.
struct Prop52TestSet {
    int t_max = 0;
    std::string justification;
};

// t_max = largest integer <= -index/n, with the monotonicity justification
// (multiplying by a nonzero section of the ample generator embeds
// H^0(T_Y(t)|_X) into H^0(T_Y(t+1)|_X), so the largest t decides).
// Requires n >= 3, degrees >= 2, and d >= 2 when Y is a quadric.
Prop52TestSet prop52_test_set(const CompleteIntersectionSpec& spec, int d);

// Stability verdict from the computed section space at t_max: zero there
// means stable, a nonzero section is a destabilizing direction.
StabilityVerdict prop52_verdict(const CompleteIntersectionSpec& spec, int d,
                                int h0_dim_at_tmax);

}  // namespace twistcoh

#endif
