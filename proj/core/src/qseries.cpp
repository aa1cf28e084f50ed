#include "vertexforge/qseries.hpp"

#include <atomic>
#include <sstream>
#include <utility>

namespace vf {

namespace {

std::string rat_str(const Rat& r) { return r.get_str(); }

// power part of a term, x-exponent e != 0, rendered on the q scale
std::string power_str(long e) {
    if (e % 2 == 0) {
        long k = e / 2;
        if (k == 1) return "q";
        return "q^" + std::to_string(k);
    }
    return "q^(" + std::to_string(e) + "/2)";
}

std::string term_str(const Rat& mag, long e) {
    if (e == 0) return rat_str(mag);
    if (mag == 1) return power_str(e);
    return rat_str(mag) + "*" + power_str(e);
}

// ---- dense helpers (ordinary polynomials, ascending coefficients) ----

using Dense = std::vector<Rat>;

void dense_trim(Dense& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Dense to_dense(const HalfLaurent& f, long base) {
    Dense out(static_cast<std::size_t>(f.max_exp() - base) + 1, Rat(0));
    for (const auto& [e, c] : f.terms()) out[static_cast<std::size_t>(e - base)] = c;
    return out;
}

HalfLaurent from_dense(const Dense& p, long base) {
    HalfLaurent out;
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] != 0) out += HalfLaurent::monomial(p[i], base + static_cast<long>(i));
    return out;
}

// quotient and remainder of a by b over Q[x]; b nonzero with nonzero leading coefficient
std::pair<Dense, Dense> dense_divmod(Dense a, const Dense& b) {
    Dense q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rat(0));
    const Rat& lead = b.back();
    while (a.size() >= b.size()) {
        Rat f = a.back() / lead;
        std::size_t off = a.size() - b.size();
        q[off] = f;
        for (std::size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
        a.pop_back();
        dense_trim(a);
        if (a.empty()) break;
    }
    return {std::move(q), std::move(a)};
}

void dense_make_primitive(Dense& p) {
    if (p.empty()) return;
    Int g(0), l(1);
    for (const Rat& c : p) {
        if (c == 0) continue;
        g = gcd(g, c.get_num());
        l = lcm(l, c.get_den());
    }
    Rat scale(l, g);
    scale.canonicalize();
    bool neg = p.back() < 0;
    for (Rat& c : p) {
        c *= scale;
        if (neg) c = -c;
        c.canonicalize();
    }
}

Dense dense_gcd(Dense a, Dense b) {
    dense_trim(a);
    dense_trim(b);
    while (!b.empty()) {
        Dense r = dense_divmod(std::move(a), b).second;
        dense_make_primitive(r);
        a = std::move(b);
        b = std::move(r);
    }
    dense_make_primitive(a);
    return a;
}

std::atomic<long> g_reduce_threshold{64};

} // namespace

// ---- HalfLaurent ----

HalfLaurent::HalfLaurent(const Rat& c) {
    if (c != 0) c_.emplace(0, c);
}

HalfLaurent HalfLaurent::monomial(const Rat& c, long e) {
    HalfLaurent f;
    if (c != 0) f.c_.emplace(e, c);
    return f;
}

bool HalfLaurent::is_constant() const {
    return c_.empty() || (c_.size() == 1 && c_.begin()->first == 0);
}

long HalfLaurent::min_exp() const {
    if (c_.empty()) throw std::domain_error("min_exp of zero polynomial");
    return c_.begin()->first;
}

long HalfLaurent::max_exp() const {
    if (c_.empty()) throw std::domain_error("max_exp of zero polynomial");
    return c_.rbegin()->first;
}

Rat HalfLaurent::coeff(long e) const {
    auto it = c_.find(e);
    return it == c_.end() ? Rat(0) : it->second;
}

void HalfLaurent::set(long e, Rat v) {
    if (v == 0)
        c_.erase(e);
    else
        c_[e] = std::move(v);
}

HalfLaurent& HalfLaurent::operator+=(const HalfLaurent& o) {
    for (const auto& [e, c] : o.c_) {
        auto it = c_.find(e);
        if (it == c_.end()) {
            c_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second == 0) c_.erase(it);
        }
    }
    return *this;
}

HalfLaurent& HalfLaurent::operator-=(const HalfLaurent& o) {
    for (const auto& [e, c] : o.c_) {
        auto it = c_.find(e);
        if (it == c_.end()) {
            c_.emplace(e, -c);
        } else {
            it->second -= c;
            if (it->second == 0) c_.erase(it);
        }
    }
    return *this;
}

HalfLaurent operator*(const HalfLaurent& a, const HalfLaurent& b) {
    HalfLaurent out;
    if (a.is_zero() || b.is_zero()) return out;
    for (const auto& [ea, ca] : a.c_)
        for (const auto& [eb, cb] : b.c_) {
            auto it = out.c_.find(ea + eb);
            if (it == out.c_.end())
                out.c_.emplace(ea + eb, ca * cb);
            else
                it->second += ca * cb;
        }
    for (auto it = out.c_.begin(); it != out.c_.end();)
        it = it->second == 0 ? out.c_.erase(it) : std::next(it);
    return out;
}

HalfLaurent& HalfLaurent::operator*=(const HalfLaurent& o) {
    *this = *this * o;
    return *this;
}

HalfLaurent HalfLaurent::operator-() const {
    HalfLaurent out;
    for (const auto& [e, c] : c_) out.c_.emplace(e, -c);
    return out;
}

HalfLaurent HalfLaurent::substituted_power(long k) const {
    if (k == 0) throw std::invalid_argument("substitute_power: k must be nonzero");
    HalfLaurent out;
    for (const auto& [e, c] : c_) out.c_.emplace(e * k, c);
    return out;
}

HalfLaurent HalfLaurent::bar() const { return substituted_power(-1); }

Rat HalfLaurent::content() const {
    if (is_zero()) throw std::domain_error("content of zero polynomial");
    Int g(0), l(1);
    for (const auto& [e, c] : c_) {
        g = gcd(g, c.get_num());
        l = lcm(l, c.get_den());
    }
    Rat out(g, l);
    out.canonicalize();
    return out;
}

HalfLaurent HalfLaurent::shifted(long s) const {
    HalfLaurent out;
    for (const auto& [e, c] : c_) out.c_.emplace(e + s, c);
    return out;
}

std::string HalfLaurent::str() const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        bool neg = it->second < 0;
        Rat mag = neg ? Rat(-it->second) : it->second;
        std::string piece = term_str(mag, it->first);
        if (first) {
            out = neg ? "-" + piece : piece;
            first = false;
        } else {
            out += neg ? " - " : " + ";
            out += piece;
        }
    }
    return out;
}

HalfLaurent qnum(long k) {
    HalfLaurent f;
    if (k == 0) return f;
    f += HalfLaurent::monomial(1, k);
    f -= HalfLaurent::monomial(1, -k);
    return f;
}

// ---- QRational ----

QRational::QRational(HalfLaurent num, HalfLaurent den) : n_(std::move(num)), d_(std::move(den)) {
    canonicalize();
}

void QRational::canonicalize() {
    if (d_.is_zero()) throw std::domain_error("QRational: zero denominator");
    if (n_.is_zero()) {
        d_ = HalfLaurent(1);
        return;
    }
    long s = std::min(n_.min_exp(), d_.min_exp());
    if (s != 0) {
        n_ = n_.shifted(-s);
        d_ = d_.shifted(-s);
    }
    // content of the pair: all coefficients become integers with collective gcd 1
    Int g(0), l(1);
    for (const auto& [e, c] : n_.terms()) {
        g = gcd(g, c.get_num());
        l = lcm(l, c.get_den());
    }
    for (const auto& [e, c] : d_.terms()) {
        g = gcd(g, c.get_num());
        l = lcm(l, c.get_den());
    }
    Rat scale(l, g);
    scale.canonicalize();
    if (scale != 1) {
        HalfLaurent sc(scale);
        n_ *= sc;
        d_ *= sc;
    }
    if (d_.terms().begin()->second < 0) {
        n_ = -n_;
        d_ = -d_;
    }
    if (d_.max_exp() - d_.min_exp() > g_reduce_threshold.load(std::memory_order_relaxed)) reduce_full();
}

void QRational::reduce_full() {
    if (n_.is_zero() || d_.is_constant()) return;
    long bn = n_.min_exp(), bd = d_.min_exp();
    Dense a = to_dense(n_, bn), b = to_dense(d_, bd);
    Dense g = dense_gcd(a, b);
    if (g.size() > 1) {
        a = dense_divmod(std::move(a), g).first;
        b = dense_divmod(std::move(b), g).first;
        n_ = from_dense(a, bn);
        d_ = from_dense(b, bd);
    }
    // re-run the cheap normalizations after dividing; threshold check skipped
    long s = std::min(n_.min_exp(), d_.min_exp());
    if (s != 0) {
        n_ = n_.shifted(-s);
        d_ = d_.shifted(-s);
    }
    Int cg(0), cl(1);
    for (const auto& [e, c] : n_.terms()) {
        cg = gcd(cg, c.get_num());
        cl = lcm(cl, c.get_den());
    }
    for (const auto& [e, c] : d_.terms()) {
        cg = gcd(cg, c.get_num());
        cl = lcm(cl, c.get_den());
    }
    Rat scale(cl, cg);
    scale.canonicalize();
    if (scale != 1) {
        HalfLaurent sc(scale);
        n_ *= sc;
        d_ *= sc;
    }
    if (d_.terms().begin()->second < 0) {
        n_ = -n_;
        d_ = -d_;
    }
}

QRational& QRational::operator+=(const QRational& o) {
    n_ = n_ * o.d_ + o.n_ * d_;
    d_ *= o.d_;
    canonicalize();
    return *this;
}

QRational& QRational::operator-=(const QRational& o) {
    n_ = n_ * o.d_ - o.n_ * d_;
    d_ *= o.d_;
    canonicalize();
    return *this;
}

QRational& QRational::operator*=(const QRational& o) {
    n_ *= o.n_;
    d_ *= o.d_;
    canonicalize();
    return *this;
}

QRational& QRational::operator/=(const QRational& o) {
    if (o.is_zero()) throw std::domain_error("QRational: division by zero");
    n_ *= o.d_;
    d_ *= o.n_;
    canonicalize();
    return *this;
}

QRational QRational::operator-() const {
    QRational out(*this);
    out.n_ = -out.n_;
    return out;
}

bool QRational::operator==(const QRational& o) const { return n_ * o.d_ == o.n_ * d_; }

QRational QRational::inverse() const {
    if (is_zero()) throw std::domain_error("QRational: inverse of zero");
    QRational out;
    out.n_ = d_;
    out.d_ = n_;
    out.canonicalize();
    return out;
}

QRational QRational::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    QRational acc(1), base(*this);
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

QRational QRational::substituted_power(long k) const {
    QRational out;
    out.n_ = n_.substituted_power(k);
    out.d_ = d_.substituted_power(k);
    out.canonicalize();
    return out;
}

QRational QRational::bar() const { return substituted_power(-1); }

QRational QRational::reduced() const {
    QRational out(*this);
    out.reduce_full();
    return out;
}

std::string QRational::str() const {
    QRational r = reduced();
    if (r.d_.is_constant()) {
        Rat v = r.d_.coeff(0); // nonzero by invariant
        if (v == 1) return r.n_.str();
        HalfLaurent folded = r.n_ * HalfLaurent(Rat(1) / v);
        return folded.str();
    }
    return "(" + r.n_.str() + ")/(" + r.d_.str() + ")";
}

void QRational::set_reduce_threshold(long span) { g_reduce_threshold.store(span, std::memory_order_relaxed); }
long QRational::reduce_threshold() { return g_reduce_threshold.load(std::memory_order_relaxed); }

// ---- TPoly ----

TPoly::TPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

TPoly TPoly::monomial(const Rat& c, int g) {
    TPoly p;
    if (c != 0) {
        p.c_.assign(static_cast<std::size_t>(g) + 1, Rat(0));
        p.c_.back() = c;
    }
    return p;
}

void TPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rat TPoly::coeff(int g) const {
    if (g < 0 || g >= static_cast<int>(c_.size())) return Rat(0);
    return c_[static_cast<std::size_t>(g)];
}

bool TPoly::has_integer_coeffs() const {
    for (const Rat& c : c_)
        if (c.get_den() != 1) return false;
    return true;
}

TPoly& TPoly::operator+=(const TPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rat(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

TPoly& TPoly::operator-=(const TPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rat(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

TPoly& TPoly::operator*=(const TPoly& o) {
    if (is_zero() || o.is_zero()) {
        c_.clear();
        return *this;
    }
    std::vector<Rat> out(c_.size() + o.c_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
    c_ = std::move(out);
    trim();
    return *this;
}

HalfLaurent TPoly::eval_at_q() const {
    HalfLaurent tq;
    tq += HalfLaurent::monomial(1, 2);
    tq += HalfLaurent::monomial(-2, 0);
    tq += HalfLaurent::monomial(1, -2);
    HalfLaurent acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc *= tq;
        acc += HalfLaurent(*it);
    }
    return acc;
}

std::string TPoly::str() const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (int g = degree(); g >= 0; --g) {
        const Rat& c = c_[static_cast<std::size_t>(g)];
        if (c == 0) continue;
        bool neg = c < 0;
        Rat mag = neg ? Rat(-c) : c;
        std::string piece;
        if (g == 0)
            piece = rat_str(mag);
        else {
            std::string pow = g == 1 ? "t" : "t^" + std::to_string(g);
            piece = mag == 1 ? pow : rat_str(mag) + "*" + pow;
        }
        if (first) {
            out = neg ? "-" + piece : piece;
            first = false;
        } else {
            out += neg ? " - " : " + ";
            out += piece;
        }
    }
    return out;
}

// ---- basis change ----

TPoly to_t_polynomial(const QRational& f) {
    if (f.is_zero()) return TPoly();
    const HalfLaurent &num = f.num(), &den = f.den();
    long bn = num.min_exp(), bd = den.min_exp();
    auto [quot, rem] = dense_divmod(to_dense(num, bn), to_dense(den, bd));
    if (!rem.empty())
        throw ConversionError(ConversionError::Kind::NotPolynomial,
                              "to_t_polynomial: denominator does not divide numerator");
    HalfLaurent lau = from_dense(quot, bn - bd);
    if (lau.bar() != lau)
        throw ConversionError(ConversionError::Kind::NotSymmetric,
                              "to_t_polynomial: value is not invariant under q -> q^-1");
    for (const auto& [e, c] : lau.terms())
        if (e % 2 != 0)
            throw ConversionError(ConversionError::Kind::HalfIntegerPower,
                                  "to_t_polynomial: odd power of q^(1/2) survives");
    // write sum_j c_j (q^j + q^-j) + c_0 via P_0 = 2, P_1 = t + 2, P_{j+1} = (t+2) P_j - P_{j-1},
    // where P_j equals q^j + q^-j
    TPoly out(std::vector<Rat>{lau.coeff(0)});
    if (lau.is_zero()) return out;
    long top = lau.max_exp() / 2;
    TPoly prev(std::vector<Rat>{Rat(2)});
    TPoly cur(std::vector<Rat>{Rat(2), Rat(1)});
    TPoly shift(std::vector<Rat>{Rat(2), Rat(1)});
    for (long j = 1; j <= top; ++j) {
        Rat cj = lau.coeff(2 * j);
        if (cj != 0) {
            TPoly term = cur;
            term *= TPoly(std::vector<Rat>{cj});
            out += term;
        }
        TPoly next = shift * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return out;
}

TPoly t_k_polynomial(long k) {
    if (k < 1) throw std::invalid_argument("t_k_polynomial: k must be >= 1");
    HalfLaurent sq = qnum(k) * qnum(k);
    return to_t_polynomial(QRational(sq));
}

} // namespace vf
