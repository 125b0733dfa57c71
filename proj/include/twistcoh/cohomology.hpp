#ifndef TWISTCOH_COHOMOLOGY_HPP
#define TWISTCOH_COHOMOLOGY_HPP

#include <optional>
#include <string>
#include <vector>

#include "twistcoh/rational.hpp"

namespace twistcoh {

// The ambient families with explicit twisted-form cohomology tables, plus an
// escape hatch for user-supplied (dimension, index) data.
enum class Family { projective_space, quadric, lagrangian_grassmannian, other };

struct HSSDescriptor {
    Family family = Family::other;
    int dimension = 0;  // N
    int index = 0;      // r_M, the Fano index: -K = O(r_M)
    int cn_rank = 0;    // n for Sp(2n)/U(n), 0 elsewhere
    // Only consulted for family == other: the caller asserts the space is an
    // irreducible Hermitian symmetric space, unlocking the classification
    // lookups that are proved in that generality.
    bool assume_irreducible_hss = false;

    static HSSDescriptor projective_space(int n);          // index n+1
    static HSSDescriptor quadric(int n);                   // n >= 2, index n
    static HSSDescriptor lagrangian_grassmannian(int n);   // N = n(n+1)/2
    static HSSDescriptor other(int dimension, int index,
                               bool assume_irreducible_hss = false);

    std::string name() const;
};

// Exact dimension of H^q(P^n, Omega^p(l)).  Zero outside 0 <= p,q <= n.
Int bott_dimension(int n, int p, int q, int l);

// Which clause of the five-way quadric classification (p, l) falls in:
// 1: -n+p <= l <= p with l not in {0, -n+2p}   (zero for every q)
// 2: l = 0                                     (nonzero iff q = p)
// 3: l = -n+2p, l != 0                         (nonzero iff p+q = n)
// 4: l > p                                     (nonzero iff q = 0)
// 5: l < -n+p                                  (nonzero iff q = n)
int quadric_case(int n, int p, int l);

// Exact nonvanishing of H^q(Q^n, Omega^p(l)).  Requires n >= 2, 0 <= p <= n.
bool quadric_nonvanishing(int n, int p, int q, int l);

// Sign pattern (|a_i| = i) for the Lagrangian Grassmannian Sp(2n)/U(n),
// annotated at a given level l.
struct CnSequence {
    std::vector<int> entries;       // a_1..a_n, entry i-1 is +-i
    int level = 0;                  // l
    int weight = 0;                 // sum of positive entries
    int cohomological_degree = 0;   // #{(i,j): i <= j, a_i + a_j > 2l}
};

// All 2^n sign patterns with a_i + a_j != 2l for every i <= j.  n <= 20.
std::vector<CnSequence> enumerate_admissible_sequences(int n, int l);

// Necessary condition for H^q(Sp(2n)/U(n), Omega^p(l)) != 0: some admissible
// sequence has weight p and cohomological degree q.  false certifies the
// group vanishes; true only says the test does not rule it out.
bool cn_possibly_nonzero(int n, int p, int q, int l);

// Nonvanishing of H^q(M, Omega^{N-1}(l)) for an N-dimensional irreducible
// Hermitian symmetric space M, N >= 2, as a four-case lookup:
//   (q=0, l >= min{N, r_M}), (q=N-1, l=0), (q=N, l<=-2),
//   (M quadric, q=1, l=N-2).
// nullopt when the family is "other" without the irreducible-HSS assertion.
std::optional<bool> classify_top_forms(const HSSDescriptor& desc, int q, int l);

// Necessary inequality (l+q) >= p*r_M/N for H^q(M, Omega^p(l)) != 0 on
// non-projective irreducible HSS, compared exactly; false certifies
// vanishing.  Requires p >= 1, l >= 1, family != projective_space.
bool bcm_necessary_inequality(const HSSDescriptor& desc, int p, int q, int l);

// Three-valued verdict: exact dimensions only where a closed formula exists;
// otherwise zero (certified) or possibly_nonzero (not ruled out).
enum class CohomologyStatus { dimension, zero, possibly_nonzero };

struct CohomologyAnswer {
    CohomologyStatus status = CohomologyStatus::possibly_nonzero;
    Int dim = 0;              // meaningful when status == dimension
    std::string certificate;  // which rule produced the verdict
};

CohomologyAnswer twisted_form_cohomology(const HSSDescriptor& desc, int p,
                                         int q, int l);

}  // namespace twistcoh

#endif
