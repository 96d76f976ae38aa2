"""Dense univariate polynomials over Q.

A polynomial is a tuple of Fractions in ascending degree order with no
trailing zero, so () is the zero polynomial and deg(()) == -1.  All
arithmetic is exact.  Real-root machinery (Sturm chains, isolation,
counting) lives here as well; it underpins every certified interval in
the package.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, isqrt

QQ = Fraction

Poly = tuple  # tuple of Fraction, ascending


def poly(coeffs) -> Poly:
    """Build a normalized polynomial from any iterable of rationals."""
    cs = [QQ(c) for c in coeffs]
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


def degree(f: Poly) -> int:
    return len(f) - 1


def is_zero(f: Poly) -> bool:
    return not f


def leading(f: Poly) -> Fraction:
    if not f:
        raise ValueError("zero polynomial has no leading coefficient")
    return f[-1]


def constant(c) -> Poly:
    return poly([c])


X = poly([0, 1])


def add(f: Poly, g: Poly) -> Poly:
    n = max(len(f), len(g))
    return poly([(f[i] if i < len(f) else 0) + (g[i] if i < len(g) else 0) for i in range(n)])


def neg(f: Poly) -> Poly:
    return tuple(-c for c in f)


def sub(f: Poly, g: Poly) -> Poly:
    return add(f, neg(g))


def mul(f: Poly, g: Poly) -> Poly:
    if not f or not g:
        return ()
    out = [QQ(0)] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return poly(out)


def scale(f: Poly, c) -> Poly:
    c = QQ(c)
    if c == 0:
        return ()
    return tuple(a * c for a in f)


def shift(f: Poly, k: int) -> Poly:
    """Multiply by x**k."""
    if not f:
        return ()
    return tuple([QQ(0)] * k) + f


def pow_(f: Poly, n: int) -> Poly:
    out = poly([1])
    b = f
    while n:
        if n & 1:
            out = mul(out, b)
        n >>= 1
        if n:
            b = mul(b, b)
    return out


def divmod_(f: Poly, g: Poly) -> tuple[Poly, Poly]:
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    q = [QQ(0)] * max(len(f) - len(g) + 1, 0)
    r = list(f)
    dg, lg = degree(g), leading(g)
    while len(r) >= len(g):
        c = r[-1] / lg
        k = len(r) - len(g)
        q[k] = c
        for i in range(len(g)):
            r[k + i] -= c * g[i]
        while r and r[-1] == 0:
            r.pop()
    return poly(q), poly(r)


def rem(f: Poly, g: Poly) -> Poly:
    return divmod_(f, g)[1]


def gcd_poly(f: Poly, g: Poly) -> Poly:
    """Monic gcd."""
    while g:
        f, g = g, rem(f, g)
    if not f:
        return ()
    return scale(f, 1 / leading(f))


def xgcd_poly(f: Poly, g: Poly) -> tuple[Poly, Poly, Poly]:
    """(d, u, v) with u*f + v*g = d, d the monic gcd."""
    r0, r1 = f, g
    s0, s1 = poly([1]), ()
    t0, t1 = (), poly([1])
    while r1:
        q, r = divmod_(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, sub(s0, mul(q, s1))
        t0, t1 = t1, sub(t0, mul(q, t1))
    if not r0:
        return (), s0, t0
    c = 1 / leading(r0)
    return scale(r0, c), scale(s0, c), scale(t0, c)


def derivative(f: Poly) -> Poly:
    return poly([i * f[i] for i in range(1, len(f))])


def evaluate(f: Poly, x) -> Fraction:
    acc = QQ(0)
    for c in reversed(f):
        acc = acc * x + c
    return acc


def compose(f: Poly, g: Poly) -> Poly:
    """f(g(x)) by Horner."""
    acc: Poly = ()
    for c in reversed(f):
        acc = add(mul(acc, g), constant(c))
    return acc


def squarefree_part(f: Poly) -> Poly:
    if degree(f) < 1:
        return f
    g = gcd_poly(f, derivative(f))
    if degree(g) == 0:
        return f
    return divmod_(f, g)[0]


def is_squarefree(f: Poly) -> bool:
    return degree(f) < 1 or degree(gcd_poly(f, derivative(f))) == 0


def content_primitive(f: Poly) -> tuple[Fraction, tuple[int, ...]]:
    """Write f = c * F with F integer, primitive, positive leading coeff."""
    if not f:
        return QQ(0), ()
    den = 1
    for c in f:
        den = den * c.denominator // gcd(den, c.denominator)
    ints = [int(c * den) for c in f]
    g = 0
    for v in ints:
        g = gcd(g, v)
    if ints[-1] < 0:
        g = -g
    return QQ(g, den), tuple(v // g for v in ints)


def resultant(f: Poly, g: Poly) -> Fraction:
    """Resultant by the Euclidean remainder sequence."""
    if not f or not g:
        return QQ(0)
    res = QQ(1)
    while True:
        df, dg = degree(f), degree(g)
        if dg == 0:
            return res * g[0] ** df
        r = rem(f, g)
        if not r:
            return QQ(0)
        dr = degree(r)
        res *= QQ(-1) ** (df * dg) * leading(g) ** (df - dr)
        f, g = g, r


def discriminant(f: Poly) -> Fraction:
    n = degree(f)
    if n < 1:
        raise ValueError("discriminant needs degree >= 1")
    r = resultant(f, derivative(f))
    sign = QQ(-1) ** (n * (n - 1) // 2)
    return sign * r / leading(f)


def rational_roots(f: Poly) -> list[Fraction]:
    """All rational roots, by the rational root test on the primitive part."""
    if not f:
        raise ValueError("zero polynomial")
    _, F = content_primitive(f)
    k = 0
    while F[k] == 0:
        k += 1
    roots = [QQ(0)] if k else []
    F = F[k:]
    a0, an = abs(F[0]), abs(F[-1])
    for p in _divisors(a0):
        for q in _divisors(an):
            if gcd(p, q) != 1:
                continue
            for r in (QQ(p, q), QQ(-p, q)):
                if evaluate(f, r) == 0 and r not in roots:
                    roots.append(r)
    return sorted(roots)


def _divisors(n: int) -> list[int]:
    n = abs(n)
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
        d += 1
    return sorted(out)


def to_string(f: Poly, var: str = "x") -> str:
    if not f:
        return "0"
    parts = []
    for i in range(degree(f), -1, -1):
        c = f[i]
        if c == 0:
            continue
        if i == 0:
            term = str(abs(c))
        else:
            mag = "" if abs(c) == 1 else f"{abs(c)}*"
            term = f"{mag}{var}" + (f"^{i}" if i > 1 else "")
        if not parts:
            parts.append(("-" if c < 0 else "") + term)
        else:
            parts.append(("- " if c < 0 else "+ ") + term)
    return " ".join(parts)


# ---------------------------------------------------------------------------
# Sturm chains and certified real root isolation


def sturm_chain(f: Poly) -> list[Poly]:
    f = squarefree_part(f)
    chain = [f, derivative(f)]
    while chain[-1]:
        chain.append(neg(rem(chain[-2], chain[-1])))
    chain.pop()
    return chain


def _sign_variations(chain: list[Poly], x) -> int:
    signs = []
    for p in chain:
        v = evaluate(p, x)
        if v:
            signs.append(1 if v > 0 else -1)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _variations_at_inf(chain: list[Poly], positive: bool) -> int:
    signs = []
    for p in chain:
        if not p:
            continue
        s = 1 if leading(p) > 0 else -1
        if not positive and degree(p) % 2 == 1:
            s = -s
        signs.append(s)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_real_roots(f: Poly, lo=None, hi=None) -> int:
    """Distinct real roots in (lo, hi]; None means -/+ infinity."""
    chain = sturm_chain(f)
    va = _variations_at_inf(chain, False) if lo is None else _sign_variations(chain, QQ(lo))
    vb = _variations_at_inf(chain, True) if hi is None else _sign_variations(chain, QQ(hi))
    return va - vb


def root_bound(f: Poly) -> Fraction:
    """Cauchy bound: every real root lies in [-B, B]."""
    lc = abs(leading(f))
    m = max(abs(c) for c in f[:-1]) if len(f) > 1 else QQ(0)
    return 1 + m / lc


def isolate_real_roots(f: Poly) -> list[tuple[Fraction, Fraction]]:
    """Disjoint intervals (a, b] with rational endpoints, one real root each."""
    fsq = squarefree_part(f)
    chain = sturm_chain(fsq)
    b = root_bound(fsq)
    out: list[tuple[Fraction, Fraction]] = []

    def go(lo, hi, nlo, nhi):
        n = nlo - nhi
        if n == 0:
            return
        if n == 1:
            out.append((lo, hi))
            return
        mid = (lo + hi) / 2
        nmid = _sign_variations(chain, mid)
        go(lo, mid, nlo, nmid)
        go(mid, hi, nmid, nhi)

    go(-b, b, _sign_variations(chain, -b), _sign_variations(chain, b))
    return sorted(out)


def refine_root(f: Poly, lo: Fraction, hi: Fraction, width: Fraction) -> tuple[Fraction, Fraction]:
    """Shrink an isolating interval (lo, hi] by bisection until hi-lo < width."""
    fsq = squarefree_part(f)
    if evaluate(fsq, hi) == 0:
        return hi, hi
    chain = sturm_chain(fsq)
    vlo = _sign_variations(chain, lo)
    vhi = _sign_variations(chain, hi)
    while hi - lo >= width:
        mid = (lo + hi) / 2
        if evaluate(fsq, mid) == 0:
            return mid, mid
        vmid = _sign_variations(chain, mid)
        if vlo - vmid == 1:
            hi, vhi = mid, vmid
        else:
            lo, vlo = mid, vmid
    return lo, hi


def all_roots_real(f: Poly) -> bool:
    sf = squarefree_part(f)
    return count_real_roots(sf) == degree(sf)


def count_roots_with_multiplicity_in(f: Poly, lo, hi) -> int:
    """Roots in (lo, hi] counted with multiplicity."""
    total = 0
    g = f
    while degree(g) >= 1:
        sf = squarefree_part(g)
        total += count_real_roots(sf, lo, hi)
        g = divmod_(g, sf)[0]
    return total


def int_sqrt_exact(n: int):
    """Integer square root if n is a perfect square, else None."""
    if n < 0:
        return None
    r = isqrt(n)
    return r if r * r == n else None


def sqrt_rational(c: Fraction):
    """Exact square root in Q, or None."""
    c = QQ(c)
    if c < 0:
        return None
    a = int_sqrt_exact(c.numerator)
    b = int_sqrt_exact(c.denominator)
    if a is None or b is None:
        return None
    return QQ(a, b)
