"""Truncated q-expansions with exact precision bookkeeping.

A QSeries represents sum_{n >= val} c_n q^n known exactly for n < prec;
terms at exponents >= prec are unknown.  prec may be None for series
known to all orders (polynomial data).  Negative valuations are allowed,
so q-quotients of the Laurent kind work throughout.

Coefficients default to Fractions but any commutative ring element with
+, -, *, / (for division), == and truthiness works, which is how series
over number-field elements are formed.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import InsufficientPrecision
from .polyq import sqrt_rational

QQ = Fraction

_INF = float("inf")


def _p(prec):
    return _INF if prec is None else prec


class QSeries:
    __slots__ = ("val", "coeffs", "prec")

    def __init__(self, val, coeffs, prec=None, _normalized=False):
        coeffs = list(coeffs)
        if not _normalized:
            if prec is not None:
                keep = max(0, prec - val)
                coeffs = coeffs[:keep]
            while coeffs and not coeffs[0]:
                coeffs.pop(0)
                val += 1
            while coeffs and not coeffs[-1]:
                coeffs.pop()
        if not coeffs:
            val = prec if prec is not None else 0
        self.val = val
        self.coeffs = tuple(coeffs)
        self.prec = prec

    # -- constructors -------------------------------------------------

    @staticmethod
    def zero(prec=None):
        return QSeries(0 if prec is None else prec, (), prec)

    @staticmethod
    def one():
        return QSeries(0, (QQ(1),))

    @staticmethod
    def monomial(c, n, prec=None):
        return QSeries(n, (c if not isinstance(c, int) else QQ(c),), prec)

    @staticmethod
    def from_poly(coeffs, prec=None):
        """Polynomial in q: coeffs ascending from exponent 0."""
        return QSeries(0, [QQ(c) if isinstance(c, int) else c for c in coeffs], prec)

    @staticmethod
    def from_map(cmap, prec):
        """From {exponent: coefficient}; unknown from prec on."""
        if not cmap:
            return QSeries.zero(prec)
        lo = min(cmap)
        hi = max(cmap)
        return QSeries(lo, [cmap.get(n, QQ(0)) for n in range(lo, hi + 1)], prec)

    # -- inspectors ---------------------------------------------------

    def is_zero(self) -> bool:
        """Zero as far as known."""
        return not self.coeffs

    def known_exactly(self) -> bool:
        return self.prec is None

    def valuation(self):
        """Valuation, or None when the series is 0 to its precision."""
        return self.val if self.coeffs else None

    def __getitem__(self, n: int):
        if self.prec is not None and n >= self.prec:
            raise InsufficientPrecision(
                f"coefficient at q^{n} unknown (precision {self.prec})", needed=n + 1
            )
        if n < self.val or n >= self.val + len(self.coeffs):
            return QQ(0)
        return self.coeffs[n - self.val]

    def coefficients(self):
        """(exponent, coefficient) pairs for the stored support."""
        return [(self.val + i, c) for i, c in enumerate(self.coeffs) if c]

    def truncate(self, prec):
        """Forget coefficients from exponent `prec` on."""
        if self.prec is not None and prec > self.prec:
            prec = self.prec
        return QSeries(self.val, self.coeffs, prec)

    # -- arithmetic ---------------------------------------------------

    def _val_lb(self):
        if self.coeffs:
            return self.val
        return _p(self.prec)

    def __neg__(self):
        return QSeries(self.val, [-c for c in self.coeffs], self.prec, _normalized=True)

    def __add__(self, other):
        other = _coerce(other)
        prec = min(_p(self.prec), _p(other.prec))
        if not self.coeffs and not other.coeffs:
            return QSeries.zero(None if prec == _INF else prec)
        lo = min(s._val_lb() for s in (self, other) if s.coeffs)
        hi = max(s.val + len(s.coeffs) for s in (self, other) if s.coeffs)
        if prec != _INF:
            hi = min(hi, prec)
        out = []
        for n in range(int(lo), int(hi)):
            a = self.coeffs[n - self.val] if self.coeffs and self.val <= n < self.val + len(self.coeffs) else 0
            b = other.coeffs[n - other.val] if other.coeffs and other.val <= n < other.val + len(other.coeffs) else 0
            out.append((a + b) if (a or b) else QQ(0))
        return QSeries(int(lo), out, None if prec == _INF else int(prec))

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return QSeries.zero(self.prec)
            return QSeries(self.val, [c * other for c in self.coeffs], self.prec, _normalized=True)
        other = _coerce(other)
        prec = min(_p(self.prec) + other._val_lb(), _p(other.prec) + self._val_lb())
        if not self.coeffs or not other.coeffs:
            return QSeries.zero(None if prec == _INF else int(prec))
        val = self.val + other.val
        n_out = len(self.coeffs) + len(other.coeffs) - 1
        if prec != _INF:
            n_out = min(n_out, int(prec) - val)
        out = [QQ(0)] * max(n_out, 0)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            jmax = min(len(other.coeffs), n_out - i)
            for j in range(jmax):
                b = other.coeffs[j]
                if b:
                    out[i + j] += a * b
        return QSeries(val, out, None if prec == _INF else int(prec))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if not other.coeffs:
            if other.prec is None:
                raise ZeroDivisionError("division by the zero series")
            raise InsufficientPrecision(
                "division by a series indistinguishable from 0 at its precision",
                needed=other.prec,
            )
        va, vb = self._val_lb(), other.val
        rel = min(_p(self.prec) - va, _p(other.prec) - vb)
        if not self.coeffs:
            prec = va - vb + rel
            return QSeries.zero(None if prec == _INF else int(prec))
        va = self.val
        nrel = len(self.coeffs) + len(other.coeffs)
        if rel != _INF:
            nrel = min(nrel, int(rel))
        a = list(self.coeffs[:nrel]) + [QQ(0)] * max(0, nrel - len(self.coeffs))
        b = list(other.coeffs[:nrel]) + [QQ(0)] * max(0, nrel - len(other.coeffs))
        inv0 = _inv(b[0])
        q = [QQ(0)] * nrel
        for n in range(nrel):
            acc = a[n]
            for k in range(n):
                if q[k] and b[n - k]:
                    acc = acc - q[k] * b[n - k]
            q[n] = acc * inv0
        prec = None if rel == _INF else va - vb + int(rel)
        return QSeries(va - vb, q, prec)

    # -- calculus and reparametrization --------------------------------

    def qddq(self):
        """q d/dq: coefficient at q^n times n; precision preserved."""
        return QSeries(self.val, [(self.val + i) * c for i, c in enumerate(self.coeffs)], self.prec)

    def shift(self, k: int):
        """Multiply by q^k."""
        return QSeries(self.val + k, self.coeffs, None if self.prec is None else self.prec + k, _normalized=True)

    def substitute_power(self, e: int):
        """q -> q^e."""
        if e < 1:
            raise ValueError("e must be >= 1")
        if not self.coeffs:
            return QSeries.zero(None if self.prec is None else self.prec * e)
        out = []
        for i, c in enumerate(self.coeffs):
            if i:
                out.extend([QQ(0)] * (e - 1))
            out.append(c)
        return QSeries(self.val * e, out, None if self.prec is None else self.prec * e)

    def sqrt(self):
        """Square root with rational coefficients (Hensel lifting).

        Needs even valuation and a leading coefficient that is a square
        in Q; raises ValueError otherwise.
        """
        if not self.coeffs:
            raise ValueError("square root of a series with no known nonzero term")
        if self.val % 2:
            raise ValueError("square root needs even valuation")
        r0 = sqrt_rational(self.coeffs[0])
        if r0 is None:
            raise ValueError(f"leading coefficient {self.coeffs[0]} is not a square in Q")
        rel = len(self.coeffs) if self.prec is None else self.prec - self.val
        a = list(self.coeffs[:rel]) + [QQ(0)] * max(0, rel - len(self.coeffs))
        s = [QQ(0)] * rel
        s[0] = r0
        half = 1 / (2 * r0)
        for n in range(1, rel):
            acc = a[n]
            for i in range(1, n):
                if s[i] and s[n - i]:
                    acc -= s[i] * s[n - i]
            s[n] = acc * half
        prec = None if self.prec is None else self.prec - self.val // 2
        return QSeries(self.val // 2, s, prec)

    # -- comparisons ----------------------------------------------------

    def agrees_with(self, other, through=None) -> bool:
        """Equality of all coefficients below `through` (default: the
        shared known range)."""
        other = _coerce(other)
        lim = min(_p(self.prec), _p(other.prec))
        if through is not None:
            if through > lim:
                raise InsufficientPrecision(
                    f"cannot compare through q^{through - 1}: precision {lim}", needed=through
                )
            lim = through
        if lim == _INF:
            return self.val == other.val and self.coeffs == other.coeffs
        lim = int(lim)
        los = [s.val for s in (self, other) if s.coeffs]
        if not los:
            return True
        lo = min(los)
        for n in range(lo, lim):
            if self[n] != other[n]:
                return False
        return True

    def __eq__(self, other):
        if not isinstance(other, QSeries):
            return NotImplemented
        return self.val == other.val and self.coeffs == other.coeffs and self.prec == other.prec

    def __hash__(self):
        return hash((self.val, self.coeffs, self.prec))

    def __repr__(self):
        terms = []
        for n, c in self.coefficients()[:8]:
            terms.append(f"{c}*q^{n}")
        body = " + ".join(terms) if terms else "0"
        tail = f" + O(q^{self.prec})" if self.prec is not None else ""
        return f"QSeries({body}{tail})"


def _coerce(x):
    if isinstance(x, QSeries):
        return x
    if isinstance(x, (int, Fraction)):
        return QSeries(0, (QQ(x),))
    raise TypeError(f"cannot interpret {x!r} as a q-series")


def _inv(c):
    if isinstance(c, (int, Fraction)):
        return QQ(1) / c
    return c.inverse()


def series_arith(a: QSeries, b: QSeries, kind: str) -> QSeries:
    """add/sub/mul/div dispatch; the named-operation form of + - * /."""
    if kind == "add":
        return a + b
    if kind == "sub":
        return a - b
    if kind == "mul":
        return a * b
    if kind == "div":
        return a / b
    raise ValueError(f"unknown operation {kind!r}")
