"""Number fields, etale algebras over Q, and exact element arithmetic.

Elements of Q[x]/(m) are stored in the power basis of the defining
polynomial; an etale algebra is a finite product of such fields, its
elements stored blockwise.  Archimedean size conditions are decided
exactly through Sturm counts on resolvent polynomials, never through
floating point.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from . import polyq
from .errors import NotABasis
from .linalg import invert
from .polyq import (
    QQ,
    count_real_roots,
    degree,
    evaluate,
    isolate_real_roots,
    poly,
    rational_roots,
    refine_root,
    squarefree_part,
)


def _is_irreducible(m) -> bool:
    d = degree(m)
    if d <= 1:
        return d == 1
    if rational_roots(m):
        return False
    if d <= 3:
        return True
    import sympy

    x = sympy.Symbol("x")
    expr = sum(sympy.Rational(c.numerator, c.denominator) * x**i for i, c in enumerate(m))
    _, factors = sympy.Poly(expr, x).factor_list()
    return len(factors) == 1 and factors[0][1] == 1


def newton_from_power_sums(psums, n: int):
    """Monic degree-n polynomial with prescribed power sums p_1..p_n."""
    e = [QQ(1)] + [QQ(0)] * n
    for k in range(1, n + 1):
        acc = QQ(0)
        for i in range(1, k + 1):
            acc += QQ(-1) ** (i - 1) * e[k - i] * psums[i - 1]
        e[k] = acc / k
    return poly([QQ(-1) ** (n - k) * e[n - k] for k in range(n + 1)])


def power_sums_of_roots(m, kmax: int, with_p0=False):
    """Power sums p_k = sum of (roots of m)^k for k = 1..kmax
    (optionally prefixed with p_0 = deg m), by Newton's identities."""
    d = degree(m)
    lc = polyq.leading(m)
    e = [QQ(1)] + [QQ(0)] * max(d, 1)
    for k in range(1, d + 1):
        e[k] = QQ(-1) ** k * m[d - k] / lc
    ps = []
    for k in range(1, kmax + 1):
        acc = QQ(-1) ** (k - 1) * k * e[k] if k <= d else QQ(0)
        for i in range(1, min(k, d + 1)):
            acc += QQ(-1) ** (i - 1) * e[i] * ps[k - i - 1]
        ps.append(acc)
    return ([QQ(d)] if with_p0 else []) + ps


class NumberField:
    """Q[x]/(min_poly) with min_poly monic irreducible."""

    def __init__(self, min_poly, check=True):
        m = poly(min_poly)
        if not m or polyq.leading(m) != 1:
            raise ValueError("defining polynomial must be monic")
        if check and not _is_irreducible(m):
            raise ValueError(f"defining polynomial {m} is reducible over Q")
        self.min_poly = m
        self.degree = degree(m)
        d = self.degree
        # rows for reducing theta^(d+k), k = 0..d-2
        rows = [tuple(-c for c in m[:-1])] if d >= 1 else []
        for _ in range(d - 2):
            prev = rows[-1]
            shifted = [QQ(0)] + list(prev[:-1])
            top = prev[-1]
            if top:
                for i in range(d):
                    shifted[i] += top * rows[0][i]
            rows.append(tuple(shifted))
        self._red_rows = rows
        self.trace_powers = tuple(power_sums_of_roots(m, d - 1, with_p0=True))

    def __eq__(self, other):
        return isinstance(other, NumberField) and self.min_poly == other.min_poly

    def __hash__(self):
        return hash(self.min_poly)

    def __repr__(self):
        return f"NumberField({polyq.to_string(self.min_poly)})"

    # -- element arithmetic on coordinate tuples -----------------------

    def zero_coords(self):
        return (QQ(0),) * self.degree

    def one_coords(self):
        return tuple(QQ(1 if i == 0 else 0) for i in range(self.degree))

    def from_rational(self, c):
        return tuple(QQ(c) if i == 0 else QQ(0) for i in range(self.degree))

    def add(self, a, b):
        return tuple(x + y for x, y in zip(a, b))

    def mul(self, a, b):
        d = self.degree
        conv = [QQ(0)] * (2 * d - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        conv[i + j] += x * y
        out = conv[:d]
        for k in range(d - 1):
            c = conv[d + k] if d + k < len(conv) else QQ(0)
            if c:
                row = self._red_rows[k]
                for i in range(d):
                    out[i] += c * row[i]
        return tuple(out)

    def inverse(self, a):
        ap = poly(a)
        if not ap:
            raise ZeroDivisionError("inverse of 0")
        g, u, _ = polyq.xgcd_poly(ap, self.min_poly)
        if degree(g) != 0:
            raise ZeroDivisionError("element not invertible")
        u = polyq.scale(u, 1 / g[0])
        return tuple(u[i] if i < len(u) else QQ(0) for i in range(self.degree))

    def trace(self, a):
        return sum((c * t for c, t in zip(a, self.trace_powers)), QQ(0))

    def power(self, a, n):
        out = self.one_coords()
        b = a
        while n:
            if n & 1:
                out = self.mul(out, b)
            n >>= 1
            if n:
                b = self.mul(b, b)
        return out

    def charpoly(self, a):
        """Characteristic polynomial of multiplication by a (degree d)."""
        d = self.degree
        psums = []
        p = self.one_coords()
        for _ in range(d):
            p = self.mul(p, a)
            psums.append(self.trace(p))
        return newton_from_power_sums(psums, d)

    def min_poly_of(self, a):
        return squarefree_part(self.charpoly(a))

    def is_totally_real(self) -> bool:
        return count_real_roots(self.min_poly) == self.degree

    def real_root_intervals(self, width=None):
        ivs = isolate_real_roots(self.min_poly)
        if width is not None:
            ivs = [refine_root(self.min_poly, a, b, QQ(width)) for a, b in ivs]
        return ivs

    def embedding_signature(self):
        r1 = count_real_roots(self.min_poly)
        return r1, (self.degree - r1) // 2

    def generated_by(self, a) -> bool:
        return degree(self.min_poly_of(a)) == self.degree

    def rebase(self, gen_coords):
        """New field presentation Q(g) for a generator g; returns
        (field, to_new) with to_new mapping old coordinates to new."""
        d = self.degree
        mg = self.min_poly_of(gen_coords)
        if degree(mg) != d:
            raise ValueError("element does not generate the field")
        cols = []
        p = self.one_coords()
        cols.append(p)
        for _ in range(d - 1):
            p = self.mul(p, gen_coords)
            cols.append(p)
        M = [[cols[j][i] for j in range(d)] for i in range(d)]
        Minv = invert(M)
        new_field = NumberField(mg, check=False)

        def to_new(coords):
            return tuple(
                sum((Minv[i][j] * coords[j] for j in range(d)), QQ(0)) for i in range(d)
            )

        return new_field, to_new


@lru_cache(maxsize=None)
def rational_field() -> NumberField:
    return NumberField(poly([0, 1]), check=False)  # Q[x]/(x)


def max_abs_squared_bound_poly(m):
    """Monic polynomial whose roots are all pairwise products of roots
    of m; its largest real root is max |root of m|^2."""
    d = degree(m)
    ps = power_sums_of_roots(m, d * d)
    return newton_from_power_sums([p * p for p in ps], d * d)


def poly_abs_bounded_by(m, bound_sq) -> bool:
    """True iff every complex root r of m has |r|^2 <= bound_sq."""
    if degree(m) == 0:
        return True
    sf = squarefree_part(m)
    if count_real_roots(sf) == degree(sf):
        # totally real: compare squares of real roots
        even = _even_square_poly(sf)
        return count_real_roots(even, QQ(bound_sq), None) == 0
    h = squarefree_part(max_abs_squared_bound_poly(sf))
    return count_real_roots(h, QQ(bound_sq), None) == 0


def _even_square_poly(m):
    """Polynomial with roots r^2 for each root r of m (m squarefree)."""
    mm = polyq.mul(m, poly([(-1) ** i * c for i, c in enumerate(m)]))
    # mm is even; substitute y = x^2
    return poly([mm[2 * i] for i in range(degree(mm) // 2 + 1)])


class EtaleAlgebra:
    """A finite product of number fields."""

    def __init__(self, factors):
        if not factors:
            raise ValueError("an etale algebra needs at least one factor")
        self.factors = tuple(factors)
        self.total_degree = sum(f.degree for f in factors)

    def __eq__(self, other):
        return isinstance(other, EtaleAlgebra) and self.factors == other.factors

    def __hash__(self):
        return hash(self.factors)

    def __repr__(self):
        return f"EtaleAlgebra(degrees={[f.degree for f in self.factors]})"

    def zero(self):
        return AlgebraElement(self, tuple(f.zero_coords() for f in self.factors))

    def one(self):
        return AlgebraElement(self, tuple(f.one_coords() for f in self.factors))

    def from_rational(self, c):
        return AlgebraElement(self, tuple(f.from_rational(c) for f in self.factors))

    def from_blocks(self, blocks):
        blocks = tuple(tuple(QQ(x) for x in blk) for blk in blocks)
        for f, blk in zip(self.factors, blocks):
            if len(blk) != f.degree:
                raise ValueError("block length does not match factor degree")
        return AlgebraElement(self, blocks)

    def from_flat(self, coords):
        coords = list(coords)
        if len(coords) != self.total_degree:
            raise ValueError(
                f"coordinate length {len(coords)} != total degree {self.total_degree}"
            )
        blocks = []
        i = 0
        for f in self.factors:
            blocks.append(tuple(QQ(c) for c in coords[i : i + f.degree]))
            i += f.degree
        return AlgebraElement(self, tuple(blocks))


class AlgebraElement:
    __slots__ = ("algebra", "blocks")

    def __init__(self, algebra, blocks):
        self.algebra = algebra
        self.blocks = blocks

    @property
    def coordinates(self):
        """Flat rational coordinate vector over the concatenated bases."""
        return tuple(c for blk in self.blocks for c in blk)

    def block(self, i):
        return self.blocks[i]

    def __bool__(self):
        return any(any(c for c in blk) for blk in self.blocks)

    def _coerce(self, other):
        if isinstance(other, AlgebraElement):
            if other.algebra != self.algebra:
                raise ValueError("elements of different algebras")
            return other
        if isinstance(other, (int, Fraction)):
            return self.algebra.from_rational(other)
        return NotImplemented

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self.blocks == o.blocks

    def __hash__(self):
        return hash((self.algebra, self.blocks))

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return AlgebraElement(
            self.algebra,
            tuple(f.add(a, b) for f, a, b in zip(self.algebra.factors, self.blocks, o.blocks)),
        )

    __radd__ = __add__

    def __neg__(self):
        return AlgebraElement(self.algebra, tuple(tuple(-c for c in blk) for blk in self.blocks))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return AlgebraElement(
            self.algebra,
            tuple(f.mul(a, b) for f, a, b in zip(self.algebra.factors, self.blocks, o.blocks)),
        )

    __rmul__ = __mul__

    def inverse(self):
        return AlgebraElement(
            self.algebra,
            tuple(f.inverse(blk) for f, blk in zip(self.algebra.factors, self.blocks)),
        )

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def trace(self):
        return sum(
            (f.trace(blk) for f, blk in zip(self.algebra.factors, self.blocks)), QQ(0)
        )

    def charpoly(self):
        out = poly([1])
        for f, blk in zip(self.algebra.factors, self.blocks):
            out = polyq.mul(out, f.charpoly(blk))
        return out

    def power(self, n):
        return AlgebraElement(
            self.algebra,
            tuple(f.power(blk, n) for f, blk in zip(self.algebra.factors, self.blocks)),
        )

    def is_rational(self):
        """The rational c with self == c * 1, or None."""
        vals = []
        for f, blk in zip(self.algebra.factors, self.blocks):
            if any(blk[1:]):
                return None
            vals.append(blk[0])
        return vals[0] if all(v == vals[0] for v in vals) else None

    def __repr__(self):
        return f"AlgebraElement({list(self.coordinates)})"


def algebra_dual_basis(E: EtaleAlgebra, elems):
    """Functionals phi_i (rational row vectors on flat coordinates) with
    phi_i . elems_j = delta_ij; raises NotABasis when elems is not a
    Q-basis of E."""
    n = E.total_degree
    if len(elems) != n:
        raise NotABasis(f"need {n} elements, got {len(elems)}")
    M = [[elems[j].coordinates[i] for j in range(n)] for i in range(n)]
    Minv = invert(M)
    if Minv is None:
        raise NotABasis("not a basis: coordinate matrix is singular")
    return [tuple(Minv[i][j] for j in range(n)) for i in range(n)]


def apply_functional(phi, elem: AlgebraElement):
    return sum((p * c for p, c in zip(phi, elem.coordinates)), QQ(0))


def archimedean_bound_check(alpha: AlgebraElement, bound_sq) -> bool:
    """True iff |sigma(alpha)|^2 <= bound_sq for every embedding sigma
    of every factor; decided exactly."""
    for f, blk in zip(alpha.algebra.factors, alpha.blocks):
        if not poly_abs_bounded_by(f.min_poly_of(blk), QQ(bound_sq)):
            return False
    return True
