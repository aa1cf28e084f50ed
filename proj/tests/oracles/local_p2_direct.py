#!/usr/bin/env python3
"""Independent computation of the integer invariants of the 3-cycle graph with
all edge framings 2, for total degree <= 3, from first definitions only.

Route, deliberately different from the library's evaluator:
  * complete homogeneous functions at the single specialization x_i = q^{i-1/2}
    obtained from Euler's q-exponential identity (the library works with
    per-vertex specializations at shifted points and never builds the
    two-point function),
  * skew Schur functions by Jacobi-Trudi determinants over those h's,
  * the two-point function W(mu,nu) and the cycle product formula for Z,
  * log series, Mobius strip, change of basis to t = (q^{1/2} - q^{-1/2})^2.

No code is shared with the library.  Output freezes the expected by-class
values used in the acceptance tests.
"""

from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import gcd

# ---- Laurent polynomials in s = q^{1/2}, exact coefficients ----


class L:
    """dict exponent -> Fraction, zero coefficients never stored"""

    __slots__ = ("d",)

    def __init__(self, d=None):
        self.d = {}
        if d:
            for e, c in d.items():
                c = Fraction(c)
                if c:
                    self.d[e] = c

    @staticmethod
    def mono(c, e):
        return L({e: Fraction(c)})

    def __add__(self, o):
        r = dict(self.d)
        for e, c in o.d.items():
            v = r.get(e, 0) + c
            if v:
                r[e] = v
            elif e in r:
                del r[e]
        out = L()
        out.d = r
        return out

    def __neg__(self):
        out = L()
        out.d = {e: -c for e, c in self.d.items()}
        return out

    def __sub__(self, o):
        return self + (-o)

    def __mul__(self, o):
        r = {}
        for e1, c1 in self.d.items():
            for e2, c2 in o.d.items():
                e = e1 + e2
                r[e] = r.get(e, 0) + c1 * c2
        out = L()
        out.d = {e: c for e, c in r.items() if c}
        return out

    def subs_power(self, k):
        """s -> s^k"""
        out = L()
        out.d = {e * k: c for e, c in self.d.items()}
        return out

    def is_zero(self):
        return not self.d

    def __eq__(self, o):
        return self.d == o.d

    def __hash__(self):
        return hash(frozenset(self.d.items()))


ONE = L.mono(1, 0)
ZERO = L()


def poly_divmod(num, den):
    """long division on poly dicts (exponents >= 0); returns (quotient, remainder)"""
    n = dict(num)
    dd = max(den)
    lead = den[dd]
    q = {}
    while n and max(n) >= dd:
        e = max(n)
        f = n[e] / lead
        q[e - dd] = f
        for ed, cd in den.items():
            t = e - dd + ed
            v = n.get(t, 0) - f * cd
            if v:
                n[t] = v
            elif t in n:
                del n[t]
    return q, n


def divide_exact(num, den):
    """Laurent division that must leave no remainder."""
    if num.is_zero():
        return ZERO
    sn, sd = min(num.d), min(den.d)
    n = {e - sn: c for e, c in num.d.items()}
    d = {e - sd: c for e, c in den.d.items()}
    q, r = poly_divmod(n, d)
    assert not r, "inexact division"
    out = L()
    out.d = {e + sn - sd: c for e, c in q.items()}
    return out


def poly_gcd(a, b):
    """gcd of Laurent dicts up to units (monomial factors stripped first)"""

    def strip(p):
        m = min(p)
        return {e - m: c for e, c in p.items()}

    a, b = strip(a), strip(b)
    while b:
        _, r = poly_divmod(a, b)
        if r:
            m = min(r)
            r = {e - m: c for e, c in r.items()}
        a, b = b, r
    lead = a[max(a)]
    return {e: c / lead for e, c in a.items()}


class F:
    """quotient of two Laurent polynomials"""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        self.num = num
        self.den = den if den is not None else ONE
        assert not self.den.is_zero()

    @staticmethod
    def const(c):
        return F(L.mono(c, 0))

    def __add__(self, o):
        return F(self.num * o.den + o.num * self.den, self.den * o.den)

    def __neg__(self):
        return F(-self.num, self.den)

    def __sub__(self, o):
        return self + (-o)

    def __mul__(self, o):
        return F(self.num * o.num, self.den * o.den)

    def __truediv__(self, o):
        assert not o.num.is_zero()
        return F(self.num * o.den, self.den * o.num)

    def subs_power(self, k):
        return F(self.num.subs_power(k), self.den.subs_power(k))

    def is_zero(self):
        return self.num.is_zero()

    def norm(self):
        """divide out the polynomial gcd to keep sizes small"""
        if self.num.is_zero():
            return F(ZERO)
        g = poly_gcd(dict(self.num.d), dict(self.den.d))
        if len(g) == 1 and 0 in g:
            return self
        gl = L()
        gl.d = g
        return F(divide_exact(self.num, gl), divide_exact(self.den, gl))

    def __eq__(self, o):
        return (self.num * o.den - o.num * self.den).is_zero()

    def __hash__(self):
        raise TypeError


# ---- partitions ----


def partitions(n, cap=None):
    if cap is None:
        cap = n
    if n == 0:
        return [()]
    out = []
    for first in range(min(n, cap), 0, -1):
        for rest in partitions(n - first, first):
            out.append((first,) + rest)
    return out


def kappa(la):
    return sum(p * (p - 2 * i - 1) for i, p in enumerate(la))  # 0-based i


# ---- h_k at x_i = q^{i-1/2} ----
#
# Euler: prod_{i>=0} 1/(1 - z w q^{-i}) = sum_k (z w)^k / prod_{j=1..k} (1 - q^{-j});
# at w = q^{-1/2} this gives h_k at the set x_i = q^{-i+1/2}, and the set
# x_i = q^{i-1/2} is its image under q -> 1/q, hence
#   h_k = q^{k/2} / prod_{j=1..k} (1 - q^j).


@lru_cache(maxsize=None)
def h_at(k):
    if k < 0:
        return F.const(0)
    if k == 0:
        return F.const(1)
    den = ONE
    for j in range(1, k + 1):
        den = den * (ONE - L.mono(1, 2 * j))
    return F(L.mono(1, k), den)


@lru_cache(maxsize=None)
def skew_schur(mu, eta):
    """s_{mu/eta} at x_i = q^{i-1/2}, Jacobi-Trudi over h_at"""
    l = len(mu)
    if len(eta) > l:
        return F.const(0)
    if l == 0:
        return F.const(1)
    eta = eta + (0,) * (l - len(eta))

    def det(rows, cols):
        if not rows:
            return F.const(1)
        i = rows[0]
        total = F.const(0)
        for pos, j in enumerate(cols):
            entry = h_at(mu[i] - eta[j] - (i + 1) + (j + 1))
            if entry.is_zero():
                continue
            term = entry * det(rows[1:], cols[:pos] + cols[pos + 1 :])
            total = total + (term if pos % 2 == 0 else -term)
        return total

    return det(tuple(range(l)), tuple(range(l))).norm()


@lru_cache(maxsize=None)
def two_point(mu, nu):
    total = F.const(0)
    for w in range(0, min(sum(mu), sum(nu)) + 1):
        for eta in partitions(w):
            term = skew_schur(mu, eta) * skew_schur(nu, eta)
            if not term.is_zero():
                total = total + term
    sign = -1 if (sum(mu) + sum(nu)) % 2 else 1
    return (F(L.mono(sign, kappa(mu) + kappa(nu))) * total).norm()


# ---- cycle formula for the 3-cycle, all gamma_i = 1 ----


def z_coefficient(d):
    if d == (0, 0, 0):
        return F.const(1)
    total = F.const(0)
    for lams in product(partitions(d[0]), partitions(d[1]), partitions(d[2])):
        term = F.const(1)
        for i in range(3):
            term = term * F(L.mono(1, kappa(lams[i]))) * two_point(lams[i], lams[(i + 1) % 3])
        total = (total + term).norm()
    sign = -1 if sum(d) % 2 else 1
    return (F.const(sign) * total).norm()


DMAX = 3
DEGREES = [
    (a, b, c)
    for a in range(DMAX + 1)
    for b in range(DMAX + 1)
    for c in range(DMAX + 1)
    if 0 < a + b + c <= DMAX
]


def log_series(z):
    """truncated log of 1 + sum_d z[d] Q^d in total degree <= DMAX"""

    def mul(a, b):
        r = {}
        for da, ca in a.items():
            for db, cb in b.items():
                d = tuple(x + y for x, y in zip(da, db))
                if sum(d) > DMAX:
                    continue
                prev = r.get(d)
                r[d] = (ca * cb) if prev is None else (prev + ca * cb).norm()
        return r

    f = {}
    power = dict(z)
    m = 1
    while power:
        c = Fraction(1 if m % 2 else -1, m)
        for d, v in power.items():
            prev = f.get(d)
            add = F.const(c) * v
            f[d] = add if prev is None else (prev + add).norm()
        power = mul(power, z)
        m += 1
    return f


def mobius(n):
    m, res = n, 1
    p = 2
    while p * p <= m:
        if m % p == 0:
            m //= p
            if m % p == 0:
                return 0
            res = -res
        p += 1
    if m > 1:
        res = -res
    return res


def g_invariant(f, d):
    g = gcd(gcd(d[0], d[1]), d[2])
    total = F.const(0)
    for k in range(1, g + 1):
        if g % k:
            continue
        mu = mobius(k)
        if mu == 0:
            continue
        dk = tuple(x // k for x in d)
        total = total + F.const(Fraction(mu, k)) * f[dk].subs_power(k)
    return total.norm()


T_POLY = L({2: Fraction(1), 0: Fraction(-2), -2: Fraction(1)})  # (s - 1/s)^2


def gv_extract(gd):
    """n^g = (-1)^{g-1} [t^g] (t * G_d) with t = (s - 1/s)^2"""
    val = gd * F(T_POLY)
    poly = divide_exact(val.num, val.den)
    out = {}
    while not poly.is_zero():
        top = max(poly.d)
        assert top >= 0 and top % 2 == 0, "not a polynomial in t"
        g = top // 2
        c = poly.d[top]
        assert c.denominator == 1, "noninteger coefficient"
        out[g] = int(c) if g % 2 else -int(c)
        tg = ONE
        for _ in range(g):
            tg = tg * T_POLY
        poly = poly - L.mono(c, 0) * tg
        assert poly.is_zero() or max(poly.d) < top
    return out


def main():
    z = {d: z_coefficient(d) for d in DEGREES}
    f = log_series(z)
    by_class = {}
    for d in DEGREES:
        for g, n in gv_extract(g_invariant(f, d)).items():
            key = (sum(d), g)
            by_class[key] = by_class.get(key, 0) + n
    for (beta, g) in sorted(by_class):
        print("n^%d[beta=%d] = %d" % (g, beta, by_class[(beta, g)]))


if __name__ == "__main__":
    main()
