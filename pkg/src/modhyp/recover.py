"""Recovering a hyperelliptic model from truncated expansions of a
basis of regular differentials, and the forward expansion oracle.

Conventions.  A differential basis at a point P is given by series
w_1..w_g with omega_i = w_i dq for an analytic parameter q at P.  The
normalized basis is the reduced row echelon form of the coefficient
matrix, which makes everything downstream a deterministic function of
the spanned subspace.  Expansion at infinity uses the parameter in
which the model's second-highest coefficient produces no first-order
term (x = q^-2 - f_{2g}/((2g+1) lc) for odd degree, and the analogous
shift for even degree); recovery inverts exactly on monic models.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement

from . import polyq
from .errors import InsufficientPrecision, ModhypError, RecoveryError
from .linalg import nullspace, rref
from .polyq import QQ, degree, is_squarefree, poly
from .series import QSeries


@dataclass
class DifferentialBasis:
    genus: int
    series: list  # g QSeries over Q, w_i with omega_i = w_i dq

    def __post_init__(self):
        if self.genus < 2:
            raise ValueError("genus must be >= 2")
        if len(self.series) != self.genus:
            raise ValueError(f"need {self.genus} series, got {len(self.series)}")

    @property
    def precision(self):
        precs = [s.prec for s in self.series]
        if any(p is None for p in precs):
            return None if all(p is None for p in precs) else min(p for p in precs if p is not None)
        return min(precs)


@dataclass
class HyperellipticModel:
    genus: int
    F: tuple  # squarefree polynomial, degree 2g+1 or 2g+2
    point_type: str  # "Weierstrass" | "non-Weierstrass"

    def __post_init__(self):
        d = degree(self.F)
        if d not in (2 * self.genus + 1, 2 * self.genus + 2):
            raise ValueError(f"degree {d} not admissible for genus {self.genus}")
        if not is_squarefree(self.F):
            raise ValueError("F must be squarefree")
        if (d == 2 * self.genus + 1) != (self.point_type == "Weierstrass"):
            raise ValueError("degree 2g+1 iff the marked point is a Weierstrass point")


WEIERSTRASS = "Weierstrass"
NON_WEIERSTRASS = "non-Weierstrass"
NOT_HYPERELLIPTIC = "not-hyperelliptic-candidate"


def required_precision(g: int, mode: str) -> int:
    """Series precision guaranteeing unique recovery."""
    if g < 2:
        raise ValueError("g must be >= 2")
    if mode == "general":
        petri = 8 * g - 7 if g == 3 else 6 * g - 5
        return max(petri, 4 * g + 5, 2 * g + 4)
    if mode == "hyperelliptic-WP":
        return 4 * g + 5
    if mode == "hyperelliptic-nonWP":
        return 2 * g + 4
    raise ValueError(f"unknown mode {mode!r}")


def normalize_basis(b: DifferentialBasis):
    """RREF the basis: strictly increasing valuations, leading
    coefficient 1, zeros above pivots.  Returns (basis, profile)."""
    g = b.genus
    precs = [s.prec for s in b.series]
    exact = all(p is None for p in precs)
    if exact:
        P = max(s.val + len(s.coeffs) for s in b.series if s.coeffs)
    elif any(p is None for p in precs):
        P = min(p for p in precs if p is not None)
    else:
        P = min(precs)
    lo = min((s.val for s in b.series if s.coeffs), default=0)
    if lo < 0:
        raise RecoveryError("differential expansions must have nonnegative valuation")
    M = [[s[n] if (s.prec is None or n < s.prec) else QQ(0) for n in range(0, P)] for s in b.series]
    R, pivots, rank = rref(M)
    if rank < g:
        raise RecoveryError(f"series are linearly dependent to precision {P} (rank {rank})")
    out = [QSeries(0, row, None if exact else P) for row in R[:g]]
    profile = tuple(pivots[:g])
    return DifferentialBasis(g, out), profile


def detect_point_type(profile) -> str:
    g = len(profile)
    if tuple(profile) == tuple(range(0, 2 * g, 2)):
        return WEIERSTRASS
    if tuple(profile) == tuple(range(g)):
        return NON_WEIERSTRASS
    return NOT_HYPERELLIPTIC


def find_relations(b: DifferentialBasis, d: int):
    """Basis of the degree-d homogeneous forms vanishing on the
    canonical image, i.e. F with F(w_1,..,w_g) = 0.

    Returns a list of relations, each a dict {exponent tuple: coeff}.
    Vanishing modulo q^P with P > d(2g-2) certifies exact vanishing.
    """
    g = b.genus
    P = b.precision
    need = d * (2 * g - 2) + 1
    if P is not None and P < need:
        raise InsufficientPrecision(
            f"degree-{d} relations need precision > {d * (2 * g - 2)}, have {P}",
            needed=need,
        )
    norm, _ = normalize_basis(b)
    P = norm.precision
    monos = list(combinations_with_replacement(range(g), d))
    rows = []
    cache = {}

    def series_for(mono):
        if mono in cache:
            return cache[mono]
        if len(mono) == 1:
            out = norm.series[mono[0]]
        else:
            out = series_for(mono[:-1]) * norm.series[mono[-1]]
        cache[mono] = out
        return out

    for mono in monos:
        s = series_for(mono)
        rows.append([s[n] if n < s.prec else QQ(0) for n in range(0, P)])
    basis = nullspace(rows)
    out = []
    for v in basis:
        rel = {}
        for mono, c in zip(monos, v):
            if c:
                exps = tuple(mono.count(i) for i in range(g))
                rel[exps] = c
        out.append(rel)
    return out


def _refine_wp(norm, g, x_tilde):
    """w_i' = w_i + sum_{j>i} c_ij w_j matching x_tilde^(g-i) w_g."""
    w = norm.series
    refined = [None] * g
    refined[g - 1] = w[g - 1]
    # w_g stays; build top down so powers of x_tilde are reused
    pw = x_tilde
    targets = {g - 2: pw * w[g - 1]}
    for i in range(g - 3, -1, -1):
        pw = pw * x_tilde
        targets[i] = pw * w[g - 1]
    for i in range(g - 2, -1, -1):
        t = targets[i]
        cur = w[i]
        for j in range(i + 1, g):
            pos = w[j].val
            cij = t[pos] - cur[pos]
            if cij:
                cur = cur + cij * w[j]
        refined[i] = cur
    return refined


def recover_hyperelliptic(b: DifferentialBasis) -> HyperellipticModel:
    """Recover the unique model y^2 = F(x) from the spanned basis.

    Weierstrass branch: x = w_1'/w_2', y from w_1' dq = x^(g-1) dx / y,
    F monic of degree 2g+1.  Non-Weierstrass branch: same template with
    degree 2g+2.  The output is a deterministic function of the span.
    """
    g = b.genus
    norm, profile = normalize_basis(b)
    ptype = detect_point_type(profile)
    if ptype == NOT_HYPERELLIPTIC:
        raise RecoveryError(
            f"order profile {profile} is not hyperelliptic at this point; "
            "use find_relations for the canonical ideal"
        )
    P = norm.precision
    need = required_precision(g, "hyperelliptic-WP" if ptype == WEIERSTRASS else "hyperelliptic-nonWP")
    if P is not None and P < need:
        raise InsufficientPrecision(
            f"{ptype} recovery at genus {g} needs precision >= {need}, have {P}", needed=need
        )
    w = norm.series
    x_tilde = w[g - 2] / w[g - 1]
    refined = _refine_wp(norm, g, x_tilde)
    x = refined[0] / refined[1]
    xg1 = _series_pow(x, g - 1)
    y = xg1 * x.qddq() / (refined[0] * QSeries.monomial(QQ(1), 1))
    if ptype == WEIERSTRASS:
        y = y * QQ(-1, 2)
        deg_f = 2 * g + 1
    else:
        deg_f = 2 * g + 2
    F, resid = _match_polynomial(y * y, x, deg_f)
    if F is None:
        raise RecoveryError("inconsistent: no polynomial F of the required degree matches")
    if degree(F) != deg_f:
        raise RecoveryError(
            f"inconsistent: recovered polynomial has degree {degree(F)}, expected {deg_f}"
        )
    if not is_squarefree(F):
        raise RecoveryError("F not squarefree")
    return HyperellipticModel(g, F, ptype)


def _series_pow(s: QSeries, n: int) -> QSeries:
    out = QSeries.one()
    for _ in range(n):
        out = out * s
    return out


def _match_polynomial(target: QSeries, x: QSeries, deg_f: int):
    """Solve target = F(x) for a polynomial F of degree <= deg_f by
    peeling principal parts; returns (F, residual) or (None, residual)
    when the residual fails to vanish."""
    vx = x.val
    powers = [QSeries.one()]
    for _ in range(deg_f):
        powers.append(powers[-1] * x)
    r = target
    coeffs = [QQ(0)] * (deg_f + 1)
    for k in range(deg_f, -1, -1):
        c = r[k * vx]
        coeffs[k] = c
        if c:
            r = r - powers[k] * c
    if not r.is_zero():
        return None, r
    return poly(coeffs), r


def expand_model(F, g: int = None, point="infinity", precision: int = None) -> DifferentialBasis:
    """Expansions of the differential basis {x^i dx/y : 0 <= i <= g-1}
    of y^2 = F(x) at the marked point, to absolute precision
    `precision`.

    point == "infinity": degree 2g+1 expands at the Weierstrass point
    at infinity; degree 2g+2 at one of the two rational points at
    infinity (leading coefficient must be a square in Q).  A rational
    point x0 expands at (x0, sqrt(F(x0))), requiring F(x0) a nonzero
    rational square.
    """
    F = poly(F)
    d = degree(F)
    if g is None:
        g = (d - 1) // 2
    if d not in (2 * g + 1, 2 * g + 2):
        raise ValueError(f"degree {d} not admissible for genus {g}")
    if not is_squarefree(F):
        raise ValueError("F must be squarefree")
    if precision is None:
        precision = required_precision(
            g, "hyperelliptic-WP" if d == 2 * g + 1 else "hyperelliptic-nonWP"
        )
    lc = polyq.leading(F)
    if point == "infinity":
        # the parameter shift making recovery the exact inverse
        shift = F[d - 1] / ((d - 2) * lc)
        if d == 2 * g + 1:
            x = QSeries(-2, [QQ(1)]) - shift
        else:
            x = QSeries(-1, [QQ(1)]) - shift
        # generous working precision; truncate at the end
        work = precision + 4 * g + 8
        x = x.truncate(work)
        fx = _eval_poly_series(F, x)
        try:
            y = fx.sqrt()
        except ValueError:
            raise RecoveryError(
                "needs quadratic twist of parameter: leading coefficient is not a square in Q"
            )
    else:
        x0 = QQ(point)
        v = polyq.evaluate(F, x0)
        if v == 0:
            raise RecoveryError(f"bad point: F({x0}) = 0 cannot be a non-Weierstrass point")
        if polyq.sqrt_rational(v) is None:
            raise RecoveryError(
                f"needs quadratic twist of parameter: F({x0}) = {v} is not a square in Q"
            )
        work = precision + 4 * g + 8
        x = (QSeries(1, [QQ(1)]) + x0).truncate(work)
        y = _eval_poly_series(F, x).sqrt()
    t = x.qddq()  # q dx/dq
    q1 = QSeries.monomial(QQ(1), 1)
    w = []
    xi = QSeries.one()
    for i in range(g):
        w.append((xi * t / (y * q1)).truncate(precision))
        xi = xi * x
    return DifferentialBasis(g, w)


def _eval_poly_series(F, x: QSeries) -> QSeries:
    acc = QSeries.zero(None)
    for c in reversed(F):
        acc = acc * x + QSeries(0, [c])
    return acc


def recover_ramified(b: DifferentialBasis, e: int) -> HyperellipticModel:
    """Recovery when the expansion parameter is an e-th power of an
    analytic uniformizer (q' = c q^e): every exponent in the input must
    be congruent to e-1 mod e; the basis in the uniformizer is read off
    and recovery proceeds as usual."""
    if e < 1:
        raise ValueError("e must be >= 1")
    if e == 1:
        return recover_hyperelliptic(b)
    g = b.genus
    new = []
    for s in b.series:
        for n, c in s.coefficients():
            if n % e != e - 1:
                raise RecoveryError(
                    f"no consistent {e}-th power structure: exponent {n} present"
                )
        prec = None if s.prec is None else s.prec // e
        cmap = {}
        for n, c in s.coefficients():
            cmap[(n - (e - 1)) // e] = c / e
        new.append(QSeries.from_map(cmap, prec))
    return recover_hyperelliptic(DifferentialBasis(g, new))
