#ifndef TWISTCOH_VANISHING_HPP
#define TWISTCOH_VANISHING_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "twistcoh/cohomology.hpp"

namespace twistcoh {

// A smooth complete intersection Y of hypersurfaces of the listed degrees
// inside an ambient space with an ample Picard generator.
struct CompleteIntersectionSpec {
    HSSDescriptor ambient;
    std::vector<int> degrees;  // kept sorted non-decreasing

    // Validates: every degree >= 1 and dimension n = N - r >= 1.
    static CompleteIntersectionSpec make(HSSDescriptor ambient,
                                         std::vector<int> degrees);

    int r() const { return static_cast<int>(degrees.size()); }
    int n() const { return ambient.dimension - r(); }
    int degree_sum() const;
    // Index of Y: coefficient of the anticanonical twist, ambient index
    // minus the degree sum.  May be <= 0 (non-Fano).
    int ci_index() const { return ambient.index - degree_sum(); }
    bool fano() const { return ci_index() > 0; }

    std::string name() const;
};

int ci_index(const CompleteIntersectionSpec& spec);

// Raised when a predicate's hypotheses exclude the input; deliberately
// distinct from a PossiblyNonzero verdict.
class NotApplicableError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct AppliedRule {
    std::string rule;
    std::vector<std::pair<std::string, std::string>> params;
};

enum class Verdict { MustVanish, PossiblyNonzero };

struct VanishingCertificate {
    Verdict verdict = Verdict::PossiblyNonzero;
    std::vector<AppliedRule> reason_chain;
};

// Verdict for H^q(Y, Omega_Y^p(l)) in the range p >= 1, q >= 0,
// p + q <= n-1, n >= 2, all degrees >= 2 (with degrees of 1 admitted only
// for the l = 0 clause when allow_unit_degrees is set):
//   MustVanish  when l = 0 and p != q (Hodge purity), or
//               when l != 0 and l + q <= p * index / n (exact rationals);
//   PossiblyNonzero otherwise.
// Outside the range: NotApplicableError.
VanishingCertificate theorem12_predicate(const CompleteIntersectionSpec& spec,
                                         int p, int q, int l,
                                         bool allow_unit_degrees = false);

// One obligation from the Koszul reduction of H^q(Y, Omega_Y^p(l)): either a
// line bundle piece on Y in cohomological degree q+p, or a restricted
// ambient-form piece on Y.  A nonvanishing source group forces at least one
// enumerated obligation to be nonvanishing.
struct KoszulWitness {
    enum class Case { line_bundle, ambient_form };
    Case kind = Case::ambient_form;
    std::vector<int> j;  // j_1..j_r, sum <= p-1

    // ambient_form: H^{q_prime}(Y, Omega_M^{p_prime}(twist)|_Y)
    int p_prime = 0;
    int q_prime = 0;  // line_bundle: cohomological degree q+p lives here too
    // line_bundle: s in [2, r+1] selects the stage; twist is
    // l - p*d_{s-1} - sum_{i>=s} (d_i - d_{s-1}) j_i
    int s = 0;
    int twist = 0;
};

// Complete enumeration: for every j-vector with sum <= p-1, one ambient_form
// witness and one line_bundle witness per stage s.  Requires p >= 1, q >= 0,
// p + q <= n.
std::vector<KoszulWitness> lemma51_witnesses(const CompleteIntersectionSpec& spec,
                                             int p, int q, int l);

// Certifies H^q(O(twist)) = 0 on an ample-generated variety of the given
// dimension when twist < 0 and 1 <= q <= dim-1.  Only that range.
bool kodaira_vanishes(int dim, int q, int twist);

// Certifies H^q(Omega^p(twist)) = 0 when twist > 0 and p+q > dim, or
// twist < 0 and p+q < dim.
bool akizuki_nakano_vanishes(int dim, int p, int q, int twist);

struct IndexBoundCheck {
    bool bound_ok = false;                    // index <= dimension + 1
    bool equality_is_projective_space = false;  // index == dimension + 1
};
// Validates the index bound r_M <= N+1; equality forces projective space.
// Throws std::invalid_argument when the descriptor violates the bound.
IndexBoundCheck kobayashi_ochiai(const HSSDescriptor& ambient);

// Tries to certify a single witness obligation zero:
//   line_bundle  -> Kodaira or Akizuki-Nakano on Y, or degree out of range;
//   ambient_form -> Koszul resolution of O_Y pushes the obligation to exact
//                   ambient-table values H^{q'+j}(M, Omega^{p'}(twist - d_S))
//                   over all sums d_S of j distinct degrees; discharged when
//                   every such table value is a certified zero.
// Returns the rule applied, or nullopt when the obligation resists.
std::optional<AppliedRule> discharge_witness(const CompleteIntersectionSpec& spec,
                                             const KoszulWitness& w);

// Instance-level exact zero: when Y is isomorphic to a model space with an
// exact table (r = 0; all degrees 1 in projective space; one quadric plus
// linear sections), consult that table directly for H^q(Omega^p(l)).
std::optional<AppliedRule> certify_family_exact_zero(
    const CompleteIntersectionSpec& spec, int p, int q, int l);

}  // namespace twistcoh

#endif
