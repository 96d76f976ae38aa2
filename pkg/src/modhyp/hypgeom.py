"""Hyperelliptic model geometry: the (M, e) transformation calculus,
bounded isomorphism search over Q, quotient-genus bookkeeping, and
point counting over odd finite fields.

A model is a squarefree F in Q[x] of degree 2g+1 or 2g+2 standing for
y^2 = F(x).  An isomorphism of models is given by a Moebius matrix M
and a y-scale e, acting by (x, y) -> ((ax+b)/(cx+d), e y/(cx+d)^(g+1)).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from . import polyq
from .dirichlet import factorize
from .errors import ModhypError
from .polyq import (
    QQ,
    degree,
    evaluate,
    is_squarefree,
    poly,
    rational_roots,
    sqrt_rational,
)


@dataclass(frozen=True)
class ModelTransform:
    m: tuple  # ((a, b), (c, d)) rational
    e: Fraction

    def det(self):
        (a, b), (c, d) = self.m
        return a * d - b * c

    def compose(self, other: "ModelTransform") -> "ModelTransform":
        """self after other: acts like applying `other`, then `self`."""
        (a, b), (c, d) = self.m
        (a2, b2), (c2, d2) = other.m
        m = ((a * a2 + b * c2, a * b2 + b * d2), (c * a2 + d * c2, c * b2 + d * d2))
        return ModelTransform(m, self.e * other.e)

    def inverse(self, g: int) -> "ModelTransform":
        (a, b), (c, d) = self.m
        det = a * d - b * c
        if not det:
            raise ModhypError("degenerate transform")
        return ModelTransform(((d, -b), (-c, a)), det ** (g + 1) / self.e)

    @staticmethod
    def identity():
        return ModelTransform(((QQ(1), QQ(0)), (QQ(0), QQ(1))), QQ(1))


def transform_matrix(a, b, c, d, e=1) -> ModelTransform:
    return ModelTransform(((QQ(a), QQ(b)), (QQ(c), QQ(d))), QQ(e))


def apply_transform(F, g: int, t: ModelTransform):
    """Image model of y^2 = F(x) under t; F stays squarefree of
    admissible degree."""
    F = poly(F)
    d = degree(F)
    if d not in (2 * g + 1, 2 * g + 2):
        raise ValueError(f"degree {d} not admissible for genus {g}")
    if not is_squarefree(F):
        raise ValueError("model must be squarefree")
    (a, b), (c, dd) = t.m
    det = t.det()
    if not det:
        raise ModhypError("degenerate transform (det M = 0)")
    n = 2 * g + 2
    # homogeneous coefficients of F, degree n
    hom = [F[i] if i <= d else QQ(0) for i in range(n + 1)]  # coeff of X^i Z^(n-i)
    # G*(X, Z) = e^2 * F*((dd X - b Z)/det, (-c X + a Z)/det)
    u = poly([-b, dd])  # dd*X - b, as poly in X with Z -> 1 later; we track bidegree
    v = poly([a, -c])
    out = ()
    for i in range(n + 1):
        ci = hom[i]
        if not ci:
            continue
        term = polyq.scale(polyq.mul(polyq.pow_(u, i), polyq.pow_(v, n - i)), ci)
        out = polyq.add(out, term)
    out = polyq.scale(out, t.e**2 / det**n)
    G = poly(out)
    if degree(G) not in (2 * g + 1, 2 * g + 2) or not is_squarefree(G):
        raise ModhypError("transform produced an inadmissible model")
    return G


def normalize_transform_pair(t: ModelTransform, g: int) -> ModelTransform:
    """Canonical representative of the lambda-rescaling class."""
    det = t.det()
    if not det:
        raise ModhypError("degenerate transform")
    if g % 2 == 0:
        lam = det ** (g // 2) / t.e
        (a, b), (c, d) = t.m
        return ModelTransform(
            ((a * lam, b * lam), (c * lam, d * lam)), t.e * lam ** (g + 1)
        )
    lam_sq = det**g / t.e**2
    lam = sqrt_rational(lam_sq)
    if lam is None:
        raise ModhypError(
            f"invalid pair: det^g/e^2 = {lam_sq} is not a rational square"
        )
    (a, b), (c, d) = t.m
    first = next(x for x in (a * lam, b * lam, c * lam, d * lam) if x)
    if first < 0:
        lam = -lam
    return ModelTransform(((a * lam, b * lam), (c * lam, d * lam)), t.e * lam ** (g + 1))


def _power_sums(F, kmax):
    from .algebra import power_sums_of_roots

    return power_sums_of_roots(F, kmax)


def _central_moments(F, kmax):
    d = degree(F)
    ps = [QQ(d)] + _power_sums(F, kmax)
    mean = ps[1] / d
    # m_k = sum (r - mean)^k via binomial expansion
    from math import comb

    out = []
    for k in range(2, kmax + 1):
        acc = QQ(0)
        for j in range(k + 1):
            acc += comb(k, j) * (-mean) ** (k - j) * ps[j]
        out.append(acc)
    return out  # m_2 .. m_kmax


def _rational_kth_roots(r: Fraction, k: int):
    """All rational x with x^k = r."""
    if r == 0:
        return [QQ(0)]
    if k % 2 == 0 and r < 0:
        return []

    def iroot(n, k):
        if n < 0:
            n = -n
        lo, hi = 0, 1
        while hi**k < n:
            hi *= 2
        while lo < hi:
            mid = (lo + hi) // 2
            if mid**k < n:
                lo = mid + 1
            else:
                hi = mid
        return lo if lo**k == n else None

    a = iroot(abs(r.numerator), k)
    b = iroot(r.denominator, k)
    if a is None or b is None:
        return []
    base = QQ(a, b)
    if r < 0:
        base = -base
    return [base, -base] if k % 2 == 0 else [base]


def _affine_witnesses(F1, F2, g):
    """All (M affine, e) with apply_transform(F1) == F2."""
    d1, d2 = degree(F1), degree(F2)
    if d1 != d2:
        return []
    d = d1
    m1 = _central_moments(F1, d)
    m2 = _central_moments(F2, d)
    s1 = _power_sums(F1, 1)[0]
    s2 = _power_sums(F2, 1)[0]
    k = None
    for i, v in enumerate(m1):
        if v or m2[i]:
            k = i + 2
            break
    if k is None:
        return []
    if not m1[k - 2]:
        return []
    us = _rational_kth_roots(m2[k - 2] / m1[k - 2], k)
    out = []
    for u in us:
        if not u:
            continue
        v = (s2 - u * s1) / d
        t0 = transform_matrix(u, v, 0, 1, 1)
        for e in _escale_candidates(F1, F2, g, t0):
            out.append(ModelTransform(t0.m, e))
    return out


def _rationals_of_height(H: int):
    seen = set()
    for q in range(1, H + 1):
        for p in range(-H, H + 1):
            if gcd(p, q) == 1:
                r = QQ(p, q)
                if r not in seen:
                    seen.add(r)
                    yield r


def is_isomorphic(F1, F2, g: int, height_bound: int = 10):
    """Search for a Q-isomorphism witness of bounded height between the
    models y^2 = F1 and y^2 = F2.

    Returns a verified ModelTransform, or None when no witness was
    found at this height (which is NOT a proof of non-isomorphism).
    The search decomposes M = shift(w) . inversion . affine by the
    image w = M(infinity), enumerating w over rationals of height at
    most height_bound (and infinity, the affine case).
    """
    F1, F2 = poly(F1), poly(F2)
    for t in _affine_witnesses(F1, F2, g):
        return t
    n = 2 * g + 2
    for w in _rationals_of_height(height_bound):
        # N_w = [[w, 1], [1, 0]] maps infinity to w; pull F2 back
        Nw = transform_matrix(w, 1, 1, 0)
        try:
            F2w = apply_transform(F2, g, Nw.inverse(g))
        except ModhypError:
            continue
        for t in _affine_witnesses(F1, F2w, g):
            cand = Nw.compose(t)
            try:
                if apply_transform(F1, g, cand) == F2:
                    return cand
            except ModhypError:
                continue
            # fix the y-scale left over from composing with N_w^{-1}
            for e_fix in _escale_candidates(F1, F2, g, cand):
                cand2 = ModelTransform(cand.m, e_fix)
                try:
                    if apply_transform(F1, g, cand2) == F2:
                        return cand2
                except ModhypError:
                    continue
    return None


def _escale_candidates(F1, F2, g, t):
    """e making apply_transform(F1,(M,e)) == F2 exactly, if any."""
    try:
        G = apply_transform(F1, g, ModelTransform(t.m, QQ(1)))
    except ModhypError:
        return []
    ratio = polyq.leading(F2) / polyq.leading(G)
    if polyq.sub(polyq.scale(G, ratio), poly(F2)):
        return []
    e = sqrt_rational(ratio)
    return [e, -e] if e is not None else []


def quotient_genus(g: int, d: int):
    """Genus of the quotient by an order-d automorphism not containing
    the hyperelliptic involution; a pair when the ramification leaves
    two possibilities."""
    if d < 2:
        raise ValueError("d >= 2")
    if d % 2 == 1 or g % d != d - 1:
        return g // d
    return frozenset({g // d, g // d + 1})


# ---------------------------------------------------------------------------
# finite fields of odd order and point counting


class FiniteField:
    """GF(p^k) as Z[t]/(p, m(t)); elements are integer tuples."""

    def __init__(self, p: int, k: int = 1):
        if p < 2 or any(q != p for q, _ in factorize(p)):
            raise ValueError("p must be prime")
        self.p = p
        self.k = k
        self.q = p**k
        self.modulus = self._find_irreducible() if k > 1 else (0, 1)

    def _find_irreducible(self):
        p, k = self.p, self.k
        # x^k + a x + c style search, then general; smallness is fine here
        import itertools

        for tail in itertools.product(range(p), repeat=k):
            m = tail + (1,)
            if self._is_irreducible_modp(m):
                return m
        raise RuntimeError("no irreducible polynomial found")

    def _is_irreducible_modp(self, m):
        p = self.p
        k = len(m) - 1
        if k == 1:
            return True
        # no roots
        for x in range(p):
            acc = 0
            for c in reversed(m):
                acc = (acc * x + c) % p
            if acc == 0:
                return False
        if k <= 3:
            return True
        # trial division by monic irreducibles of low degree
        import itertools

        for d in range(2, k // 2 + 1):
            for tail in itertools.product(range(p), repeat=d):
                div = tail + (1,)
                if not self._is_irreducible_modp(div):
                    continue
                if self._polymod(m, div) == ():
                    return False
        return True

    def _polymod(self, f, m):
        p = self.p
        f = list(f)
        dm = len(m) - 1
        while len(f) > dm:
            c = f[-1] % p
            if c:
                shift = len(f) - 1 - dm
                for i in range(dm):
                    f[shift + i] = (f[shift + i] - c * m[i]) % p
            f.pop()
        while f and f[-1] % p == 0:
            f.pop()
        return tuple(c % p for c in f)

    # elements: tuples of length k (integers mod p), low degree first
    def zero(self):
        return (0,) * self.k

    def one(self):
        return (1,) + (0,) * (self.k - 1)

    def from_int(self, n: int):
        return (n % self.p,) + (0,) * (self.k - 1)

    def elements(self):
        import itertools

        for tup in itertools.product(range(self.p), repeat=self.k):
            yield tup

    def add(self, a, b):
        return tuple((x + y) % self.p for x, y in zip(a, b))

    def mul(self, a, b):
        p, k = self.p, self.k
        if k == 1:
            return ((a[0] * b[0]) % p,)
        conv = [0] * (2 * k - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    conv[i + j] += x * y
        red = self._polymod(tuple(conv), self.modulus)
        return red + (0,) * (k - len(red))

    def pow(self, a, n: int):
        out = self.one()
        b = a
        while n:
            if n & 1:
                out = self.mul(out, b)
            n >>= 1
            if n:
                b = self.mul(b, b)
        return out

    def is_zero(self, a):
        return all(c % self.p == 0 for c in a)

    def chi(self, a) -> int:
        """Quadratic character: 1 for nonzero squares, -1 otherwise, 0 at 0."""
        if self.is_zero(a):
            return 0
        v = self.pow(a, (self.q - 1) // 2)
        return 1 if v == self.one() else -1


def count_points(F, g: int, q: int) -> int:
    """Number of points of the smooth projective model of y^2 = F(x)
    over GF(q), q an odd prime power with good reduction."""
    F = poly(F)
    d = degree(F)
    if d not in (2 * g + 1, 2 * g + 2):
        raise ValueError(f"degree {d} not admissible for genus {g}")
    fac = factorize(q)
    if len(fac) != 1 or fac[0][0] == 2:
        raise ValueError("q must be an odd prime power")
    p, k = fac[0]
    for c in F:
        if c.denominator % p == 0:
            raise ModhypError(f"bad reduction at {p}: denominator")
    disc = polyq.discriminant(F)
    if polyq.leading(F).numerator % p == 0 or _vp_num(disc, p):
        raise ModhypError(f"bad reduction at {p}")
    K = FiniteField(p, k)
    coeffs = [_mod_frac(c, p) for c in F]
    total = 0
    for x in K.elements():
        acc = K.zero()
        for c in reversed(coeffs):
            acc = K.add(K.mul(acc, x), K.from_int(c))
        total += 1 + K.chi(acc)
    if d == 2 * g + 1:
        total += 1
    else:
        total += 1 + K.chi(K.from_int(_mod_frac(polyq.leading(F), p)))
    return total


def _mod_frac(c: Fraction, p: int) -> int:
    return c.numerator * pow(c.denominator, -1, p) % p


def _vp_num(c: Fraction, p: int) -> bool:
    return c == 0 or c.numerator % p == 0
