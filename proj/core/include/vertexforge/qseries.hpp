#pragma once

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace vf {

using Rat = mpq_class;
using Int = mpz_class;

/**
 * @brief Thrown when a rational function cannot be rewritten as a polynomial
 *        in t = q - 2 + q^{-1}.
 */
class ConversionError : public std::runtime_error {
public:
    enum class Kind {
        NotPolynomial,    ///< exact division of numerator by denominator leaves a remainder
        NotSymmetric,     ///< value changes under q -> q^{-1}
        HalfIntegerPower, ///< an odd power of x = q^{1/2} survives
    };

    ConversionError(Kind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}

    Kind kind;
};

// ---- HalfLaurent: Laurent polynomials in x = q^{1/2} ----

/**
 * @brief Laurent polynomial in x = q^{1/2} with exact rational coefficients.
 *
 * Exponents are integers on the x scale, so q^{k/2} is representable for any
 * integer k.  Invariant: the term map never stores a zero coefficient.
 */
class HalfLaurent {
public:
    HalfLaurent() = default;
    HalfLaurent(int c) : HalfLaurent(Rat(c)) {}
    HalfLaurent(const Rat& c);

    /// c * x^e
    static HalfLaurent monomial(const Rat& c, long e);

    bool is_zero() const { return c_.empty(); }
    bool is_constant() const;
    /// true when exactly one term is stored
    bool is_monomial() const { return c_.size() == 1; }

    /// lowest stored exponent; requires a nonzero polynomial
    long min_exp() const;
    /// highest stored exponent; requires a nonzero polynomial
    long max_exp() const;
    std::size_t term_count() const { return c_.size(); }

    Rat coeff(long e) const;
    const std::map<long, Rat>& terms() const { return c_; }

    HalfLaurent& operator+=(const HalfLaurent& o);
    HalfLaurent& operator-=(const HalfLaurent& o);
    HalfLaurent& operator*=(const HalfLaurent& o);
    HalfLaurent operator-() const;

    friend HalfLaurent operator+(HalfLaurent a, const HalfLaurent& b) { return a += b; }
    friend HalfLaurent operator-(HalfLaurent a, const HalfLaurent& b) { return a -= b; }
    friend HalfLaurent operator*(const HalfLaurent& a, const HalfLaurent& b);

    bool operator==(const HalfLaurent& o) const { return c_ == o.c_; }
    bool operator!=(const HalfLaurent& o) const { return !(*this == o); }

    /// x^m -> x^{km}; k must be nonzero
    HalfLaurent substituted_power(long k) const;
    /// x^m -> x^{-m}
    HalfLaurent bar() const;

    /// positive rational c with (*this)/c integer-coefficient and content 1; requires nonzero
    Rat content() const;

    /// shift all exponents by s (multiply by x^s)
    HalfLaurent shifted(long s) const;

    /// canonical text form, rendered in q with descending exponents
    std::string str() const;

private:
    std::map<long, Rat> c_;

    void set(long e, Rat v);
    friend class QRational;
};

/// q-number [k] = q^{k/2} - q^{-k/2} = x^k - x^{-k}; [0] = 0, [-k] = -[k]
HalfLaurent qnum(long k);

// ---- QRational: quotients of HalfLaurent ----

/**
 * @brief Rational function in q^{1/2}, stored as numerator/denominator pair.
 *
 * Canonical form maintained by every operation:
 *  - common monomial factors x^m are stripped, so both parts have lowest
 *    exponent >= 0 and at least one of them has a nonzero constant term;
 *  - the coefficient content of the pair is stripped (all coefficients are
 *    integers with collective gcd 1);
 *  - the denominator's lowest nonzero coefficient is positive.
 *
 * A full polynomial gcd is applied only when the denominator grows past a
 * configurable span threshold; equality is decided by cross-multiplication,
 * so representations need not be fully reduced.
 */
class QRational {
public:
    QRational() : n_(), d_(1) {}
    QRational(int c) : n_(c), d_(1) {}
    QRational(const Rat& c) : n_(c), d_(1) {}
    QRational(const HalfLaurent& num) : n_(num), d_(1) {}
    QRational(HalfLaurent num, HalfLaurent den);

    const HalfLaurent& num() const { return n_; }
    const HalfLaurent& den() const { return d_; }

    bool is_zero() const { return n_.is_zero(); }

    QRational& operator+=(const QRational& o);
    QRational& operator-=(const QRational& o);
    QRational& operator*=(const QRational& o);
    QRational& operator/=(const QRational& o);
    QRational operator-() const;

    friend QRational operator+(QRational a, const QRational& b) { return a += b; }
    friend QRational operator-(QRational a, const QRational& b) { return a -= b; }
    friend QRational operator*(QRational a, const QRational& b) { return a *= b; }
    friend QRational operator/(QRational a, const QRational& b) { return a /= b; }

    /// value equality via cross-multiplication
    bool operator==(const QRational& o) const;
    bool operator!=(const QRational& o) const { return !(*this == o); }

    /// multiplicative inverse; requires nonzero
    QRational inverse() const;
    /// integer power, negative exponents allowed on nonzero values
    QRational pow(long e) const;

    /// x^m -> x^{km} in numerator and denominator; k nonzero
    QRational substituted_power(long k) const;
    /// q -> q^{-1}
    QRational bar() const;

    /// fully reduced representative (polynomial gcd divided out)
    QRational reduced() const;

    /// canonical text form of the fully reduced representative
    std::string str() const;

    /// denominator-span threshold above which operations reduce eagerly
    static void set_reduce_threshold(long span);
    static long reduce_threshold();

private:
    HalfLaurent n_, d_;

    void canonicalize();
    void reduce_full();
};

/// free-function spellings used throughout the pipeline
inline QRational substitute_power(const QRational& f, long k) { return f.substituted_power(k); }
inline HalfLaurent substitute_power(const HalfLaurent& f, long k) { return f.substituted_power(k); }
inline QRational bar_involution(const QRational& f) { return f.bar(); }
inline HalfLaurent bar_involution(const HalfLaurent& f) { return f.bar(); }

// ---- TPoly: polynomials in t = q - 2 + q^{-1} ----

/**
 * @brief Polynomial in t with exact rational coefficients.
 */
class TPoly {
public:
    TPoly() = default;
    /// coefficients in ascending degree; trailing zeros are trimmed
    explicit TPoly(std::vector<Rat> coeffs);

    static TPoly monomial(const Rat& c, int g);

    bool is_zero() const { return c_.empty(); }
    /// degree of the polynomial, -1 for zero
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    Rat coeff(int g) const;
    const std::vector<Rat>& coeffs() const { return c_; }

    /// true when every coefficient is an integer
    bool has_integer_coeffs() const;

    TPoly& operator+=(const TPoly& o);
    TPoly& operator-=(const TPoly& o);
    TPoly& operator*=(const TPoly& o);
    friend TPoly operator+(TPoly a, const TPoly& b) { return a += b; }
    friend TPoly operator-(TPoly a, const TPoly& b) { return a -= b; }
    friend TPoly operator*(TPoly a, const TPoly& b) { return a *= b; }
    bool operator==(const TPoly& o) const { return c_ == o.c_; }
    bool operator!=(const TPoly& o) const { return !(*this == o); }

    /// evaluate at t = q - 2 + q^{-1}, i.e. back in the x = q^{1/2} ring
    HalfLaurent eval_at_q() const;

    /// canonical text form in t with descending exponents
    std::string str() const;

private:
    std::vector<Rat> c_;

    void trim();
};

/**
 * @brief Rewrite a bar-symmetric Laurent polynomial in q as a polynomial in t.
 *
 * @throws ConversionError NotPolynomial if the denominator does not divide
 *         the numerator exactly, NotSymmetric if the value changes under
 *         q -> q^{-1}, HalfIntegerPower if an odd power of x survives.
 */
TPoly to_t_polynomial(const QRational& f);

/// t_k = [k]^2 as a polynomial in t; monic of degree k with zero constant term
TPoly t_k_polynomial(long k);

} // namespace vf
