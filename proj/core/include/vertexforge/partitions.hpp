#pragma once

#include "vertexforge/qseries.hpp"

#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace vf {

/// character evaluation requested for |lambda| != |mu|
struct WeightMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// power sum index 0 is not defined
struct ZeroIndex : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/**
 * @brief Integer partition, parts stored weakly decreasing and positive.
 */
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}
    explicit Partition(std::vector<int> parts);

    int weight() const { return weight_; }  // |lambda|
    int length() const { return static_cast<int>(p_.size()); }
    bool empty() const { return p_.empty(); }
    /// i-th part, 0-based; 0 past the end
    int part(int i) const { return i >= 0 && i < length() ? p_[static_cast<std::size_t>(i)] : 0; }
    const std::vector<int>& parts() const { return p_; }

    bool operator==(const Partition& o) const { return p_ == o.p_; }
    bool operator!=(const Partition& o) const { return !(*this == o); }
    /// lexicographic on the part lists; total order usable as a map key
    bool operator<(const Partition& o) const { return p_ < o.p_; }

    /// "(3,1,1)"; the empty partition renders as "()"
    std::string str() const;

private:
    std::vector<int> p_;
    int weight_ = 0;
};

/// transposed Young diagram
Partition conjugate(const Partition& la);

/// kappa(lambda) = sum_i lambda_i (lambda_i - 2i + 1); always even, kappa(conjugate) = -kappa
long long kappa(const Partition& la);

/// z_lambda = prod_i lambda_i * prod_k m_k(lambda)!
Int z_lambda(const Partition& la);

/// all partitions of d in reverse-lexicographic order; d = 0 gives { () }
std::vector<Partition> partitions_of(int d);

/// multiset union of the parts
Partition disjoint_union(const Partition& a, const Partition& b);

/// every part multiplied by k >= 1
Partition scaled(const Partition& la, int k);

/**
 * @brief Symmetric group character chi^lambda(mu) by Murnaghan-Nakayama.
 *
 * Memoized; thread safe.
 * @throws WeightMismatch unless |lambda| == |mu|
 */
long long mn_character(const Partition& lambda, const Partition& mu);

/**
 * @brief Power sum p_i evaluated at q^{lambda+rho}.
 *
 * p_i(q^{lambda+rho}) = sum_{j=1}^{l(lambda)} (q^{i(lambda_j-j+1/2)} - q^{i(-j+1/2)}) + 1/[i].
 * Defined for every nonzero integer i.
 * @throws ZeroIndex for i == 0
 */
QRational power_sum_principal(long i, const Partition& lambda);

} // namespace vf
