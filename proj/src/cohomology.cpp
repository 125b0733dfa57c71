#include "twistcoh/cohomology.hpp"

#include <stdexcept>

#include "twistcoh/monomial.hpp"  // binomial

namespace twistcoh {

HSSDescriptor HSSDescriptor::projective_space(int n) {
    if (n < 1)
        throw std::invalid_argument("projective_space: dimension must be >= 1");
    return HSSDescriptor{Family::projective_space, n, n + 1, 0, false};
}

HSSDescriptor HSSDescriptor::quadric(int n) {
    if (n < 2)
        throw std::invalid_argument("quadric: dimension must be >= 2");
    return HSSDescriptor{Family::quadric, n, n, 0, false};
}

HSSDescriptor HSSDescriptor::lagrangian_grassmannian(int n) {
    if (n < 1)
        throw std::invalid_argument("lagrangian_grassmannian: rank must be >= 1");
    return HSSDescriptor{Family::lagrangian_grassmannian, n * (n + 1) / 2,
                         n + 1, n, false};
}

HSSDescriptor HSSDescriptor::other(int dimension, int index,
                                   bool assume_irreducible_hss) {
    if (dimension < 1 || index < 1)
        throw std::invalid_argument("HSSDescriptor: dimension and index must be >= 1");
    return HSSDescriptor{Family::other, dimension, index, 0,
                         assume_irreducible_hss};
}

std::string HSSDescriptor::name() const {
    switch (family) {
        case Family::projective_space:
            return "P^" + std::to_string(dimension);
        case Family::quadric:
            return "Q^" + std::to_string(dimension);
        case Family::lagrangian_grassmannian:
            return "LG(" + std::to_string(cn_rank) + ")";
        case Family::other:
            break;
    }
    return "HSS(dim=" + std::to_string(dimension) +
           ",index=" + std::to_string(index) + ")";
}

Int bott_dimension(int n, int p, int q, int l) {
    if (n < 1 || p < 0 || q < 0)
        throw std::invalid_argument("bott_dimension: need n >= 1 and p, q >= 0");
    if (p > n || q > n) return 0;
    if (q == 0 && l > p)
        return binomial(n + l - p, l) * binomial(l - 1, p);
    if (l == 0 && p == q) return 1;
    if (q == n && l < p - n)
        return binomial(p - l, -l) * binomial(-l - 1, n - p);
    return 0;
}

int quadric_case(int n, int p, int l) {
    if (n < 2 || p < 0 || p > n)
        throw std::invalid_argument("quadric_case: need n >= 2, 0 <= p <= n");
    if (l == 0) return 2;
    if (l == -n + 2 * p) return 3;
    if (-n + p <= l && l <= p) return 1;
    if (l > p) return 4;
    return 5;
}

bool quadric_nonvanishing(int n, int p, int q, int l) {
    if (n < 2 || p < 0 || p > n)
        throw std::invalid_argument("quadric_nonvanishing: need n >= 2, 0 <= p <= n");
    if (q < 0 || q > n) return false;
    switch (quadric_case(n, p, l)) {
        case 1: return false;
        case 2: return q == p;
        case 3: return p + q == n;
        case 4: return q == 0;
        default: return q == n;
    }
}

std::vector<CnSequence> enumerate_admissible_sequences(int n, int l) {
    if (n < 1 || n > 20)
        throw std::invalid_argument("enumerate_admissible_sequences: need 1 <= n <= 20");
    std::vector<CnSequence> out;
    for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
        CnSequence s;
        s.level = l;
        s.entries.resize(n);
        for (int i = 0; i < n; ++i)
            s.entries[i] = (mask >> i) & 1 ? i + 1 : -(i + 1);
        bool admissible = true;
        for (int i = 0; admissible && i < n; ++i)
            for (int j = i; j < n; ++j)
                if (s.entries[i] + s.entries[j] == 2 * l) {
                    admissible = false;
                    break;
                }
        if (!admissible) continue;
        for (int i = 0; i < n; ++i) {
            if (s.entries[i] > 0) s.weight += s.entries[i];
            for (int j = i; j < n; ++j)
                if (s.entries[i] + s.entries[j] > 2 * l) ++s.cohomological_degree;
        }
        out.push_back(std::move(s));
    }
    return out;
}

bool cn_possibly_nonzero(int n, int p, int q, int l) {
    for (const CnSequence& s : enumerate_admissible_sequences(n, l))
        if (s.weight == p && s.cohomological_degree == q) return true;
    return false;
}

std::optional<bool> classify_top_forms(const HSSDescriptor& desc, int q, int l) {
    if (desc.dimension < 2)
        throw std::invalid_argument("classify_top_forms: dimension must be >= 2");
    if (desc.family == Family::other && !desc.assume_irreducible_hss)
        return std::nullopt;
    int n = desc.dimension;
    if (q == 0 && l >= std::min(n, desc.index)) return true;
    if (q == n - 1 && l == 0) return true;
    if (q == n && l <= -2) return true;
    if (desc.family == Family::quadric && q == 1 && l == n - 2) return true;
    return false;
}

bool bcm_necessary_inequality(const HSSDescriptor& desc, int p, int q, int l) {
    if (desc.family == Family::projective_space)
        throw std::invalid_argument(
            "bcm_necessary_inequality: not applicable to projective space");
    if (p < 1 || l < 1)
        throw std::invalid_argument("bcm_necessary_inequality: need p >= 1, l >= 1");
    // (l+q) >= p * r_M / N, cross-multiplied to stay in integers
    return static_cast<long>(l + q) * desc.dimension >=
           static_cast<long>(p) * desc.index;
}

CohomologyAnswer twisted_form_cohomology(const HSSDescriptor& desc, int p,
                                         int q, int l) {
    CohomologyAnswer ans;
    switch (desc.family) {
        case Family::projective_space: {
            ans.dim = bott_dimension(desc.dimension, p, q, l);
            if (ans.dim == 0) {
                ans.status = CohomologyStatus::zero;
                ans.certificate = "projective-space dimension table (value 0)";
            } else {
                ans.status = CohomologyStatus::dimension;
                ans.certificate = "projective-space dimension table";
            }
            return ans;
        }
        case Family::quadric: {
            if (p < 0 || p > desc.dimension) {
                ans.status = CohomologyStatus::zero;
                ans.certificate = "form degree outside [0, n]";
                return ans;
            }
            int c = quadric_case(desc.dimension, p, l);
            bool nz = quadric_nonvanishing(desc.dimension, p, q, l);
            ans.status = nz ? CohomologyStatus::possibly_nonzero
                            : CohomologyStatus::zero;
            ans.certificate = std::string("quadric classification case (") +
                              std::to_string(c) + ")" +
                              (nz ? ", exact nonvanishing" : "");
            return ans;
        }
        case Family::lagrangian_grassmannian: {
            bool maybe = cn_possibly_nonzero(desc.cn_rank, p, q, l);
            ans.status = maybe ? CohomologyStatus::possibly_nonzero
                               : CohomologyStatus::zero;
            ans.certificate =
                maybe ? "an admissible sequence matches (weight, degree)"
                      : "no admissible sequence has this (weight, degree)";
            return ans;
        }
        case Family::other:
            break;
    }
    ans.status = CohomologyStatus::possibly_nonzero;
    ans.certificate = "no exact table for this family";
    return ans;
}

}  // namespace twistcoh
