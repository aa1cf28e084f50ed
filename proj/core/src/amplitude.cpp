#include "vertexforge/amplitude.hpp"

#include "vertexforge/parallel.hpp"
#include "vertexforge/symfun.hpp"

#include <algorithm>
#include <numeric>

namespace vf {

namespace {

bool all_zero(const DegreeVector& d) {
    return std::all_of(d.begin(), d.end(), [](int x) { return x == 0; });
}

long degree_gcd(const DegreeVector& d) {
    long g = 0;
    for (int x : d) g = std::gcd(g, static_cast<long>(x));
    return g;
}

std::vector<long> divisors(long n) {
    std::vector<long> out;
    for (long k = 1; k <= n; ++k)
        if (n % k == 0) out.push_back(k);
    return out;
}

std::string degree_str(const DegreeVector& d) {
    std::string s = "(";
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(d[i]);
    }
    return s + ")";
}

} // namespace

const QRational* DegreeSeries::find(const DegreeVector& d) const {
    auto it = coeff.find(d);
    return it == coeff.end() ? nullptr : &it->second;
}

bool DegreeSeries::in_box(const DegreeVector& d) const {
    if (d.size() != bound.size()) return false;
    long total = 0;
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (d[i] < 0 || d[i] > bound[i]) return false;
        total += d[i];
    }
    return total_bound < 0 || total <= total_bound;
}

QRational y_amplitude(const GTGraph& g, const GammaPartition& gamma) {
    auto triples = vertex_triples(g, gamma);
    QRational acc(1);
    for (const auto& [vid, t] : triples) acc *= three_point(t[0], t[1], t[2]);
    const std::vector<int>& ids = g.internal_edge_ids();
    long exp = 0;
    bool negate = false;
    for (std::size_t i = 0; i < ids.size(); ++i) {
        const GTEdge& e = g.edge(ids[i]);
        long d = gamma[i].weight(), n = e.framing;
        if ((d * (n + 1)) % 2 != 0) negate = !negate;
        exp += n * static_cast<long>(kappa(gamma[i]));
    }
    if (exp != 0) acc *= QRational(HalfLaurent::monomial(1, exp));
    return negate ? -acc : acc;
}

QRational z_coefficient(const GTGraph& g, const DegreeVector& d, int threads) {
    if (all_zero(d) && d.size() == g.internal_edge_ids().size()) return QRational(1);
    std::vector<GammaPartition> gammas = gamma_partitions(g, d);
    return chunked_reduce<QRational>(
        gammas.size(), threads, QRational(0),
        [&](std::size_t i) { return y_amplitude(g, gammas[i]); },
        [](QRational a, QRational b) {
            a += b;
            return a;
        });
}

namespace {

/// every degree vector in the box, ascending lexicographic
std::vector<DegreeVector> box_degrees(const std::vector<int>& bound, long total_bound) {
    std::vector<DegreeVector> out;
    DegreeVector d(bound.size(), 0);
    while (true) {
        long total = std::accumulate(d.begin(), d.end(), 0L);
        if (total_bound < 0 || total <= total_bound) out.push_back(d);
        std::size_t i = d.size();
        while (i-- > 0) {
            if (d[i] < bound[i]) {
                ++d[i];
                std::fill(d.begin() + i + 1, d.end(), 0);
                break;
            }
            if (i == 0) return out;
        }
        if (d.empty()) return out;
    }
}

} // namespace

DegreeSeries z_series(const GTGraph& g, const std::vector<int>& bound, long total_bound, int threads) {
    const std::vector<int>& ids = g.internal_edge_ids();
    if (bound.size() != ids.size())
        throw std::invalid_argument("bound has " + std::to_string(bound.size()) +
                                    " entries, graph has " + std::to_string(ids.size()) +
                                    " internal edges");
    for (int b : bound)
        if (b < 0) throw std::invalid_argument("negative bound entry");
    DegreeSeries zs;
    zs.edge_ids = ids;
    zs.bound = bound;
    zs.total_bound = total_bound;
    for (const DegreeVector& d : box_degrees(bound, total_bound)) {
        QRational c = z_coefficient(g, d, threads);
        if (!c.is_zero()) zs.coeff[d] = std::move(c);
    }
    return zs;
}

namespace {

/// pointwise product of two degree series over the same box, truncated to it
std::map<DegreeVector, QRational> mul_series(const DegreeSeries& box,
                                             const std::map<DegreeVector, QRational>& a,
                                             const std::map<DegreeVector, QRational>& b) {
    std::map<DegreeVector, QRational> out;
    for (const auto& [da, ca] : a) {
        for (const auto& [db, cb] : b) {
            DegreeVector d(da.size());
            for (std::size_t i = 0; i < d.size(); ++i) d[i] = da[i] + db[i];
            if (!box.in_box(d)) continue;
            auto it = out.find(d);
            if (it == out.end())
                out.emplace(std::move(d), ca * cb);
            else
                it->second += ca * cb;
        }
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

} // namespace

DegreeSeries log_series(const DegreeSeries& zs) {
    std::map<DegreeVector, QRational> s = zs.coeff;
    s.erase(DegreeVector(zs.bound.size(), 0));
    DegreeSeries fs;
    fs.edge_ids = zs.edge_ids;
    fs.bound = zs.bound;
    fs.total_bound = zs.total_bound;
    // log(1 + S) = sum_m (-1)^(m-1)/m S^m; powers leave the box once m exceeds |box|
    std::map<DegreeVector, QRational> power = s;
    long m = 1;
    while (!power.empty()) {
        Rat scale(m % 2 == 1 ? 1 : -1, m);
        for (const auto& [d, c] : power) {
            QRational term = c * QRational(scale);
            auto it = fs.coeff.find(d);
            if (it == fs.coeff.end())
                fs.coeff.emplace(d, std::move(term));
            else
                it->second += term;
        }
        power = mul_series(fs, power, s);
        ++m;
    }
    for (auto it = fs.coeff.begin(); it != fs.coeff.end();)
        it = it->second.is_zero() ? fs.coeff.erase(it) : std::next(it);
    return fs;
}

DegreeSeries free_energy(const GTGraph& g, const std::vector<int>& bound, long total_bound,
                         int threads) {
    return log_series(z_series(g, bound, total_bound, threads));
}

int mobius(long k) {
    if (k < 1) throw std::invalid_argument("mobius needs k >= 1");
    int primes = 0;
    for (long p = 2; p * p <= k; ++p) {
        if (k % p != 0) continue;
        k /= p;
        if (k % p == 0) return 0;
        ++primes;
    }
    if (k > 1) ++primes;
    return primes % 2 == 0 ? 1 : -1;
}

QRational g_invariant(const DegreeSeries& f, const DegreeVector& d) {
    if (d.size() != f.edge_ids.size())
        throw std::invalid_argument("degree vector does not match the series edges");
    if (all_zero(d)) throw std::invalid_argument("degree must be nonzero");
    if (!f.in_box(d)) throw std::invalid_argument("degree " + degree_str(d) + " outside the truncation box");
    QRational acc(0);
    for (long k : divisors(degree_gcd(d))) {
        int mu = mobius(k);
        if (mu == 0) continue;
        DegreeVector dk(d.size());
        for (std::size_t i = 0; i < d.size(); ++i) dk[i] = d[i] / static_cast<int>(k);
        const QRational* c = f.find(dk);
        if (!c) continue;
        acc += QRational(Rat(mu, k)) * c->substituted_power(k);
    }
    return acc;
}

std::map<int, Int> gv_extract(const DegreeVector& d, const QRational& g_d) {
    std::map<int, Int> out;
    if (g_d.is_zero()) return out;
    QRational tg = g_d * QRational(qnum(1) * qnum(1));
    TPoly p;
    try {
        p = to_t_polynomial(tg);
    } catch (const ConversionError& ex) {
        throw IntegralityViolation(d, tg.str(), "degree " + degree_str(d) + ": " + ex.what());
    }
    if (!p.has_integer_coeffs())
        throw IntegralityViolation(d, p.str(),
                                   "degree " + degree_str(d) + ": noninteger coefficient in " + p.str());
    for (int g = 0; g <= p.degree(); ++g) {
        Rat c = p.coeff(g);
        if (c == 0) continue;
        // n^g = (-1)^(g-1) [t^g]
        Int n = (g % 2 == 1) ? c.get_num() : Int(-c.get_num());
        out[g] = n;
    }
    return out;
}

QRational reconstruct_free_energy(const GVTable& table, const DegreeVector& d) {
    if (all_zero(d)) throw std::invalid_argument("degree must be nonzero");
    QRational acc(0);
    for (long k : divisors(degree_gcd(d))) {
        DegreeVector dk(d.size());
        for (std::size_t i = 0; i < d.size(); ++i) dk[i] = d[i] / static_cast<int>(k);
        QRational mtk = -QRational(qnum(k) * qnum(k));
        for (const auto& [key, n] : table.n) {
            if (key.first != dk) continue;
            int g = key.second;
            acc += mtk.pow(g - 1) * QRational(Rat(n) / k);
        }
    }
    return acc;
}

ClassMap ClassMap::sum(std::size_t edge_count) {
    return ClassMap{{std::vector<int>(edge_count, 1)}};
}

ClassMap ClassMap::identity(std::size_t edge_count) {
    ClassMap cm;
    for (std::size_t i = 0; i < edge_count; ++i) {
        std::vector<int> row(edge_count, 0);
        row[i] = 1;
        cm.rows.push_back(std::move(row));
    }
    return cm;
}

std::vector<int> ClassMap::apply(const DegreeVector& d) const {
    std::vector<int> out;
    out.reserve(rows.size());
    for (const auto& row : rows) {
        if (row.size() != d.size()) throw std::invalid_argument("class map row does not match degree length");
        long v = 0;
        for (std::size_t i = 0; i < d.size(); ++i) v += static_cast<long>(row[i]) * d[i];
        out.push_back(static_cast<int>(v));
    }
    return out;
}

GVTable aggregate_by_class(const GVTable& table, const ClassMap& cm) {
    GVTable out;
    for (const auto& [key, n] : table.n) out.n[{cm.apply(key.first), key.second}] += n;
    for (auto it = out.n.begin(); it != out.n.end();)
        it = it->second == 0 ? out.n.erase(it) : std::next(it);
    return out;
}

Int multinomial(long k, const std::vector<long>& n) {
    if (k < 1) throw std::invalid_argument("multinomial needs k >= 1");
    long total = 0;
    for (long x : n) {
        if (x < 0) throw std::invalid_argument("multinomial needs nonnegative entries");
        total += x;
    }
    Int r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(k * total));
    for (long x : n) {
        Int f;
        mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(k * x));
        mpz_divexact(r.get_mpz_t(), r.get_mpz_t(), f.get_mpz_t());
    }
    return r;
}

} // namespace vf
