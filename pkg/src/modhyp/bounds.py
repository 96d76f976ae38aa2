"""Inequality predicates, genus formulas, and admissibility tables.

Everything here is a pure function on integers/rationals.  The genus
and dimension formulas are the standard index/elliptic-point/cusp
counts; they feed the verification precision used by the criterion
engine.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from . import polyq
from .dirichlet import DirichletCharacter, euler_phi, factorize
from .errors import ModhypError

QQ = Fraction


def ogg_bound_new_hyperelliptic(p: int) -> int:
    """Largest genus g allowed by (p-1)(g-1) < 2(p^2+1) for a prime p
    not dividing the level."""
    if p < 2:
        raise ValueError("p must be a prime")
    return (2 * (p * p + 1) - 1) // (p - 1) + 1


def gonality_genus_bound(G: int, lam) -> int:
    """Largest genus of a curve of gonality G under a spectral-gap
    constant lam: floor((2/lam) G + 1)."""
    lam = QQ(lam)
    if G < 1 or lam <= 0:
        raise ValueError("need G >= 1 and lam > 0")
    val = QQ(2, 1) / lam * G + 1
    return val.numerator // val.denominator


def ogg_bound_X0_quotient(p: int, gonality_Q: int) -> int:
    """Largest g with g < G_Q (p^2+1)/(p-1) + 1."""
    bound = QQ(gonality_Q * (p * p + 1), p - 1) + 1
    if bound.denominator == 1:
        return bound.numerator - 1
    return bound.numerator // bound.denominator


def trivial_char_gonality_bound(p: int) -> int:
    return p * p


def castelnuovo_severi(d1: int, d2: int, g1: int, g2: int) -> int:
    if d1 < 1 or d2 < 1:
        raise ValueError("degrees must be positive")
    return (d1 - 1) * (d2 - 1) + d1 * g1 + d2 * g2


@dataclass
class GapReport:
    degrees: list = field(default_factory=list)  # m with a degree-m function at the point
    hyperelliptic_wp_or_g1: bool = False
    forces_g1: bool = False


def rr_gap_predicates(ahat: dict) -> GapReport:
    """Detect rational-multiples-of-1 among the ahat_m; each witness m
    yields a degree-m rational function with poles only at the marked
    point.  m = 2 forces hyperelliptic+Weierstrass or genus 1; m = 2
    and m = 3 together force genus 1."""
    one = ahat[1]
    if one.is_rational() != 1:
        raise ValueError("ahat_1 must be 1")
    rep = GapReport()
    for m in sorted(ahat):
        if m < 2:
            continue
        if ahat[m].is_rational() is not None:
            rep.degrees.append(m)
    if 2 in rep.degrees:
        rep.hyperelliptic_wp_or_g1 = True
    if 2 in rep.degrees and 3 in rep.degrees:
        rep.forces_g1 = True
    return rep


def level_predicates(N: int, m: int) -> dict:
    """sparse: successive divisors of N grow by a factor > m;
    smooth: every prime divisor of N is <= m."""
    if N < 1:
        raise ValueError("N >= 1")
    divs = sorted(d for d in range(1, N + 1) if N % d == 0)
    sparse = all(b > m * a for a, b in zip(divs, divs[1:]))
    smooth = all(p <= m for p, _ in factorize(N))
    return {"sparse": sparse, "smooth": smooth}


# ---------------------------------------------------------------------------
# genus and dimension formulas


def _nu2(N: int) -> int:
    if N % 4 == 0:
        return 0
    out = 1
    for p, _ in factorize(N):
        if p == 2:
            continue
        out *= 1 + (1 if p % 4 == 1 else -1)
    return out


def _nu3(N: int) -> int:
    if N % 9 == 0:
        return 0
    out = 1
    for p, _ in factorize(N):
        if p == 3:
            continue
        out *= 1 + (1 if p % 3 == 1 else -1)
    return out


def _index_gamma0(N: int) -> int:
    out = N
    for p, _ in factorize(N):
        out = out // p * (p + 1)
    return out


def _cusps_gamma0(N: int) -> int:
    return sum(euler_phi(gcd(d, N // d)) for d in range(1, N + 1) if N % d == 0)


def genus_X0(N: int) -> int:
    if N < 1:
        raise ValueError("N >= 1")
    g = 1 + QQ(_index_gamma0(N), 12) - QQ(_nu2(N), 4) - QQ(_nu3(N), 3) - QQ(_cusps_gamma0(N), 2)
    assert g.denominator == 1
    return g.numerator


def genus_X1(N: int) -> int:
    if N < 1:
        raise ValueError("N >= 1")
    if N <= 4:
        return 0
    idx = N * N
    for p, _ in factorize(N):
        idx = idx // (p * p) * (p * p - 1)
    idx //= 2  # index in PSL2(Z); -I is not in Gamma1(N) for N > 4
    cusps = sum(
        euler_phi(d) * euler_phi(N // d) for d in range(1, N + 1) if N % d == 0
    ) // 2
    g = 1 + QQ(idx, 12) - QQ(cusps, 2)
    assert g.denominator == 1
    return g.numerator


from functools import lru_cache


@lru_cache(maxsize=None)
def _cyclotomic_poly(n: int):
    num = polyq.poly([-1] + [0] * (n - 1) + [1])  # x^n - 1
    for d in range(1, n):
        if n % d == 0:
            num = polyq.divmod_(num, _cyclotomic_poly(d))[0]
    return num


def _root_of_unity_sum(values) -> Fraction:
    """Exact rational value of a sum of roots of unity (k, m); raises if
    the sum is irrational."""
    if not values:
        return QQ(0)
    m = 1
    for _, mm in values:
        m = m * mm // gcd(m, mm)
    acc = [QQ(0)] * m if m > 1 else [QQ(0)]
    for k, mm in values:
        acc[(k * (m // mm)) % max(m, 1)] += 1
    if m == 1:
        return acc[0]
    pol = polyq.poly(acc)
    r = polyq.rem(pol, _cyclotomic_poly(m))
    if polyq.degree(r) > 0:
        raise ModhypError("sum of roots of unity is not rational")
    return r[0] if r else QQ(0)


def dim_S2(N: int, chi: DirichletCharacter) -> int:
    """dim of the weight-2 cusp space of level N and character chi
    (the standard trace-formula dimension count)."""
    if chi.modulus != N:
        raise ValueError("character modulus must equal N")
    if not chi.is_even():
        return 0
    f = chi.conductor()
    lam = QQ(1)
    for p, r in factorize(N):
        s = 0
        ff = f
        while ff % p == 0:
            ff //= p
            s += 1
        if 2 * s <= r:
            if r % 2 == 0:
                lam *= p ** (r // 2) + p ** (r // 2 - 1)
            else:
                lam *= 2 * p ** ((r - 1) // 2)
        else:
            lam *= 2 * p ** (r - s)
    e4 = [chi.eval(x) for x in range(N) if (x * x + 1) % N == 0]
    e3 = [chi.eval(x) for x in range(N) if (x * x + x + 1) % N == 0]
    dim = (
        QQ(_index_gamma0(N), 12)
        - lam / 2
        - QQ(1, 4) * _root_of_unity_sum(e4)
        - QQ(1, 3) * _root_of_unity_sum(e3)
    )
    if chi.is_trivial():
        dim += 1
    assert dim.denominator == 1, (N, chi.encode(), dim)
    return dim.numerator


def genus_X_char(N: int, eps: DirichletCharacter) -> int:
    """Genus of the intermediate modular curve carrying all characters
    eps^k, k = 1..order(eps); equals genus_X0(N) for trivial eps."""
    n = eps.order
    return sum(dim_S2(N, eps.pow(k)) for k in range(1, n + 1))


# ---------------------------------------------------------------------------
# admissible (diamond-group order, genus) table

_POSSIBLE_GENERA = {
    (1, False): set(range(2, 11)),
    (2, True): {2, 4, 6, 8, 10, 12, 14, 16},
    (2, False): {3, 7, 8, 9},
    (3, False): {3, 5},
    (4, True): {2, 4, 6, 8, 10, 12, 14, 16},
    (6, True): {2, 12, 14},
}


def possible_genera(d_order: int, w_in_D: bool) -> set:
    if d_order not in (1, 2, 3, 4, 6):
        raise ValueError(f"invalid diamond-group order {d_order}")
    key = (d_order, bool(w_in_D))
    if key not in _POSSIBLE_GENERA:
        raise ValueError(f"no admissible genera for order {d_order} with w_in_D={w_in_D}")
    return set(_POSSIBLE_GENERA[key])
