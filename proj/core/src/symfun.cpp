#include "vertexforge/symfun.hpp"

#include <array>
#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <tuple>

namespace vf {

namespace {

using Series = std::vector<QRational>; // index = power of the auxiliary variable z

// s *= (1 + m z), truncated to the existing length
void mul_binomial(Series& s, const QRational& m) {
    for (std::size_t i = s.size(); i-- > 1;) s[i] += m * s[i - 1];
}

Series mul_trunc(const Series& a, const Series& b, std::size_t n) {
    Series out(n + 1);
    for (std::size_t i = 0; i <= n && i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; i + j <= n && j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

// 1 / b truncated; requires b[0] nonzero
Series inverse_trunc(const Series& b, std::size_t n) {
    Series out(n + 1);
    QRational c0 = b[0].inverse();
    out[0] = c0;
    for (std::size_t k = 1; k <= n; ++k) {
        QRational acc;
        for (std::size_t j = 1; j <= k && j < b.size(); ++j) acc += b[j] * out[k - j];
        out[k] = -(c0 * acc);
    }
    return out;
}

QRational rho_product(int i, long num_exp) {
    HalfLaurent den(1);
    for (int k = 1; k <= i; ++k) den *= qnum(k);
    return QRational(HalfLaurent::monomial(1, num_exp), den);
}

struct Tables {
    Series e, h; // order i at index i
};

std::shared_mutex g_tables_mutex;
std::map<std::vector<int>, Tables> g_tables;

Tables build_tables(const Partition& la, std::size_t n) {
    Tables t;
    const int l = la.length();
    Series e_num(n + 1), e_den(n + 1), h_num(n + 1), h_den(n + 1);
    e_num[0] = e_den[0] = h_num[0] = h_den[0] = QRational(1);
    for (int r = 1; r <= l; ++r) {
        QRational above(HalfLaurent::monomial(1, 2L * (la.part(r - 1) - r) + 1)); // q^{lambda_r - r + 1/2}
        QRational below(HalfLaurent::monomial(1, 1 - 2L * r));                    // q^{-r + 1/2}
        mul_binomial(e_num, above);
        mul_binomial(e_den, below);
        mul_binomial(h_num, -below);
        mul_binomial(h_den, -above);
    }
    Series e_base(n + 1), h_base(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        e_base[i] = e_rho(static_cast<int>(i));
        h_base[i] = h_rho(static_cast<int>(i));
    }
    t.e = mul_trunc(mul_trunc(e_num, inverse_trunc(e_den, n), n), e_base, n);
    t.h = mul_trunc(mul_trunc(h_num, inverse_trunc(h_den, n), n), h_base, n);
    return t;
}

std::shared_mutex g_skew_mutex;
std::map<std::tuple<std::vector<int>, std::vector<int>, std::vector<int>>, QRational> g_skew;

std::shared_mutex g_vertex_mutex;
std::map<std::array<std::vector<int>, 3>, QRational> g_vertex;

// determinant by cofactor expansion; mask = columns still unused
QRational det_masked(const std::vector<std::vector<QRational>>& m, unsigned mask,
                     std::vector<std::optional<QRational>>& memo) {
    if (mask == 0) return QRational(1);
    if (memo[mask]) return *memo[mask];
    const std::size_t n = m.size();
    std::size_t row = n - static_cast<std::size_t>(__builtin_popcount(mask));
    QRational acc;
    int sign = 1;
    for (std::size_t col = 0; col < n; ++col) {
        if (!(mask & (1u << col))) continue;
        if (!m[row][col].is_zero())
            acc += (sign > 0 ? m[row][col] : -m[row][col]) *
                   det_masked(m, mask & ~(1u << col), memo);
        sign = -sign;
    }
    memo[mask] = acc;
    return acc;
}

} // namespace

QRational e_rho(int i) {
    if (i < 0) return QRational();
    if (i == 0) return QRational(1);
    return rho_product(i, -static_cast<long>(i) * (i - 1) / 2);
}

QRational h_rho(int i) {
    if (i < 0) return QRational();
    if (i == 0) return QRational(1);
    return rho_product(i, static_cast<long>(i) * (i - 1) / 2);
}

QRational eh_principal(EH kind, int i, const Partition& lambda) {
    if (i < 0) return QRational();
    if (i == 0) return QRational(1);
    const std::size_t n = static_cast<std::size_t>(i);
    {
        std::shared_lock lk(g_tables_mutex);
        auto it = g_tables.find(lambda.parts());
        if (it != g_tables.end() && it->second.e.size() > n)
            return kind == EH::E ? it->second.e[n] : it->second.h[n];
    }
    Tables t = build_tables(lambda, n);
    QRational out = kind == EH::E ? t.e[n] : t.h[n];
    {
        std::unique_lock lk(g_tables_mutex);
        auto it = g_tables.find(lambda.parts());
        if (it == g_tables.end() || it->second.e.size() <= n)
            g_tables[lambda.parts()] = std::move(t);
    }
    return out;
}

QRational skew_schur_principal(const Partition& mu, const Partition& nu, const Partition& lambda) {
    if (nu.weight() > mu.weight()) return QRational();
    for (int i = 0; i < nu.length(); ++i)
        if (nu.part(i) > mu.part(i)) return QRational();
    if (mu.length() == 0) return QRational(1);
    auto key = std::make_tuple(mu.parts(), nu.parts(), lambda.parts());
    {
        std::shared_lock lk(g_skew_mutex);
        auto it = g_skew.find(key);
        if (it != g_skew.end()) return it->second;
    }
    const std::size_t n = static_cast<std::size_t>(mu.length());
    std::vector<std::vector<QRational>> m(n, std::vector<QRational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m[i][j] = eh_principal(EH::H,
                                   mu.part(static_cast<int>(i)) - nu.part(static_cast<int>(j)) -
                                       static_cast<int>(i) + static_cast<int>(j),
                                   lambda);
    std::vector<std::optional<QRational>> memo(1u << n);
    QRational out = det_masked(m, (1u << n) - 1, memo);
    {
        std::unique_lock lk(g_skew_mutex);
        g_skew.emplace(std::move(key), out);
    }
    return out;
}

QRational three_point_direct(const Partition& l1, const Partition& l2, const Partition& l3) {
    const Partition empty;
    QRational pre(HalfLaurent::monomial(1, kappa(l3)));
    pre *= skew_schur_principal(l2, empty, empty);
    const Partition l2t = conjugate(l2), l3t = conjugate(l3);
    const int bound = std::min(l1.weight(), l3.weight());
    QRational acc;
    for (int k = 0; k <= bound; ++k)
        for (const Partition& eta : partitions_of(k))
            acc += skew_schur_principal(l1, eta, l2t) * skew_schur_principal(l3t, eta, l2);
    return pre * acc;
}

QRational three_point(const Partition& l1, const Partition& l2, const Partition& l3) {
    std::array<std::vector<int>, 3> rot[3] = {
        {l1.parts(), l2.parts(), l3.parts()},
        {l2.parts(), l3.parts(), l1.parts()},
        {l3.parts(), l1.parts(), l2.parts()},
    };
    std::size_t best = 0;
    for (std::size_t r = 1; r < 3; ++r)
        if (rot[r] < rot[best]) best = r;
    const auto& key = rot[best];
    {
        std::shared_lock lk(g_vertex_mutex);
        auto it = g_vertex.find(key);
        if (it != g_vertex.end()) return it->second;
    }
    QRational out =
        three_point_direct(Partition(key[0]), Partition(key[1]), Partition(key[2]));
    {
        std::unique_lock lk(g_vertex_mutex);
        g_vertex.emplace(key, out);
    }
    return out;
}

QRational two_point(const Partition& mu, const Partition& nu) {
    const Partition empty;
    QRational acc;
    const int bound = std::min(mu.weight(), nu.weight());
    for (int k = 0; k <= bound; ++k)
        for (const Partition& eta : partitions_of(k))
            acc += skew_schur_principal(mu, eta, empty).bar() *
                   skew_schur_principal(nu, eta, empty).bar();
    QRational pre(HalfLaurent::monomial(1, kappa(mu) + kappa(nu)));
    acc *= pre;
    if ((mu.weight() + nu.weight()) % 2 != 0) acc = -acc;
    return acc;
}

void clear_symfun_caches() {
    {
        std::unique_lock lk(g_tables_mutex);
        g_tables.clear();
    }
    {
        std::unique_lock lk(g_skew_mutex);
        g_skew.clear();
    }
    {
        std::unique_lock lk(g_vertex_mutex);
        g_vertex.clear();
    }
}

} // namespace vf
