#include "vertexforge/partitions.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <utility>

namespace vf {

Partition::Partition(std::vector<int> parts) : p_(std::move(parts)) {
    for (std::size_t i = 0; i < p_.size(); ++i) {
        if (p_[i] <= 0) throw std::invalid_argument("Partition: parts must be positive");
        if (i > 0 && p_[i] > p_[i - 1])
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
        weight_ += p_[i];
    }
}

std::string Partition::str() const {
    std::string out = "(";
    for (std::size_t i = 0; i < p_.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(p_[i]);
    }
    return out + ")";
}

Partition conjugate(const Partition& la) {
    if (la.empty()) return Partition();
    std::vector<int> cols(static_cast<std::size_t>(la.part(0)), 0);
    for (int i = 0; i < la.length(); ++i)
        for (int j = 0; j < la.part(i); ++j) ++cols[static_cast<std::size_t>(j)];
    return Partition(std::move(cols));
}

long long kappa(const Partition& la) {
    long long k = 0;
    for (int i = 0; i < la.length(); ++i) {
        long long p = la.part(i);
        k += p * (p - 2 * (i + 1) + 1);
    }
    return k;
}

Int z_lambda(const Partition& la) {
    Int z = 1;
    int run = 0;
    for (int i = 0; i < la.length(); ++i) {
        z *= la.part(i);
        run = (i > 0 && la.part(i) == la.part(i - 1)) ? run + 1 : 1;
        z *= run; // accumulates m_k! across each run of equal parts
    }
    return z;
}

namespace {

void gen_partitions(int remaining, int cap, std::vector<int>& cur, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int p = std::min(remaining, cap); p >= 1; --p) {
        cur.push_back(p);
        gen_partitions(remaining - p, p, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<Partition> partitions_of(int d) {
    if (d < 0) throw std::invalid_argument("partitions_of: d must be >= 0");
    std::vector<Partition> out;
    std::vector<int> cur;
    gen_partitions(d, d, cur, out);
    return out;
}

Partition disjoint_union(const Partition& a, const Partition& b) {
    std::vector<int> parts;
    parts.reserve(static_cast<std::size_t>(a.length() + b.length()));
    std::merge(a.parts().begin(), a.parts().end(), b.parts().begin(), b.parts().end(),
               std::back_inserter(parts), std::greater<int>());
    return Partition(std::move(parts));
}

Partition scaled(const Partition& la, int k) {
    if (k < 1) throw std::invalid_argument("scaled: k must be >= 1");
    std::vector<int> parts = la.parts();
    for (int& p : parts) p *= k;
    return Partition(std::move(parts));
}

// ---- Murnaghan-Nakayama ----

namespace {

std::shared_mutex g_mn_mutex;
std::map<std::pair<std::vector<int>, std::vector<int>>, long long> g_mn_cache;

// recursion on beta numbers: remove a rim hook of size mu[0]
long long mn_rec(const std::vector<int>& lambda, const std::vector<int>& mu) {
    if (lambda.empty()) return 1;
    auto key = std::make_pair(lambda, mu);
    {
        std::shared_lock lk(g_mn_mutex);
        auto it = g_mn_cache.find(key);
        if (it != g_mn_cache.end()) return it->second;
    }
    const int m = mu[0];
    const std::vector<int> rest(mu.begin() + 1, mu.end());
    const int l = static_cast<int>(lambda.size());
    std::vector<int> beta(lambda.begin(), lambda.end());
    for (int i = 0; i < l; ++i) beta[static_cast<std::size_t>(i)] += l - 1 - i;
    long long total = 0;
    for (int i = 0; i < l; ++i) {
        int target = beta[static_cast<std::size_t>(i)] - m;
        if (target < 0) continue;
        bool occupied = false;
        int crossings = 0;
        for (int j = 0; j < l; ++j) {
            if (j == i) continue;
            int bj = beta[static_cast<std::size_t>(j)];
            if (bj == target) occupied = true;
            if (bj > target && bj < beta[static_cast<std::size_t>(i)]) ++crossings;
        }
        if (occupied) continue;
        std::vector<int> nb = beta;
        nb[static_cast<std::size_t>(i)] = target;
        std::sort(nb.begin(), nb.end(), std::greater<int>());
        std::vector<int> nl;
        for (int j = 0; j < l; ++j) {
            int part = nb[static_cast<std::size_t>(j)] - (l - 1 - j);
            if (part > 0) nl.push_back(part);
        }
        long long sign = (crossings % 2 == 0) ? 1 : -1;
        total += sign * mn_rec(nl, rest);
    }
    {
        std::unique_lock lk(g_mn_mutex);
        g_mn_cache.emplace(std::move(key), total);
    }
    return total;
}

} // namespace

long long mn_character(const Partition& lambda, const Partition& mu) {
    if (lambda.weight() != mu.weight())
        throw WeightMismatch("mn_character: |lambda| = " + std::to_string(lambda.weight()) +
                             " but |mu| = " + std::to_string(mu.weight()));
    return mn_rec(lambda.parts(), mu.parts());
}

QRational power_sum_principal(long i, const Partition& lambda) {
    if (i == 0) throw ZeroIndex("power_sum_principal: index 0");
    HalfLaurent finite;
    for (int j = 1; j <= lambda.length(); ++j) {
        finite += HalfLaurent::monomial(1, i * (2L * lambda.part(j - 1) - 2 * j + 1));
        finite -= HalfLaurent::monomial(1, i * (1 - 2L * j));
    }
    return QRational(finite) + QRational(HalfLaurent(1), qnum(i));
}

} // namespace vf
