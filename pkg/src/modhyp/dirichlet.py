"""Dirichlet characters mod N in the local-exponent encoding.

A character is stored by its exponents on fixed generators of the local
unit groups: for odd p (and p = 2 with v2 <= 2) the smallest positive
generator of (Z/p^a)* (by convention -1 for p = 2), and for v2(N) > 2
the pair (-1, 5).  Values are exact roots of unity represented as
reduced pairs (k, m) meaning e^(2 pi i k / m); no floating point.

Exponent conventions accepted on input, for the 2-part pair (e', e''):
e' is 0 or 1 (the exponent of the value at -1), with phi(2^a)/2 also
accepted as a spelling of 1; e'' is reduced modulo the order 2^(a-2) of
5, with even exponents relative to phi(2^a) accepted and halved.  The
canonical encoding emitted by `encode` always uses the reduced forms.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .errors import ModhypError

QQ = Fraction


def factorize(n: int) -> list[tuple[int, int]]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out.append((d, e))
        d += 1 if d == 2 else 2
    if n > 1:
        out.append((n, 1))
    return out


def euler_phi(n: int) -> int:
    out = 1
    for p, e in factorize(n):
        out *= (p - 1) * p ** (e - 1)
    return out


def _lcm(a, b):
    return a * b // gcd(a, b)


def smallest_generator(p: int, a: int) -> int:
    """Smallest positive generator of (Z/p^a Z)* for odd p."""
    m = p**a
    phi = euler_phi(m)
    fac = [q for q, _ in factorize(phi)]
    g = 2
    while True:
        if gcd(g, m) == 1 and all(pow(g, phi // q, m) != 1 for q in fac):
            return g
        g += 1


class _LocalComponent:
    """Character component at one prime power p^a."""

    __slots__ = ("p", "a", "gens", "orders", "exps", "_dlog")

    def __init__(self, p, a, gens, orders, exps):
        self.p = p
        self.a = a
        self.gens = gens
        self.orders = orders
        self.exps = exps
        self._dlog = None

    def dlog_table(self):
        """n mod p^a -> exponent tuple on the generators."""
        if self._dlog is None:
            m = self.p**self.a
            table = {}
            if len(self.gens) == 1:
                g, o = self.gens[0], self.orders[0]
                x = 1
                for k in range(o):
                    table[x] = (k,)
                    x = x * g % m
            else:
                (g1, g2), (o1, o2) = self.gens, self.orders
                x1 = 1
                for k1 in range(o1):
                    x = x1
                    for k2 in range(o2):
                        table[x] = (k1, k2)
                        x = x * g2 % m
                    x1 = x1 * g1 % m
            self._dlog = table
        return self._dlog


class DirichletCharacter:
    def __init__(self, modulus: int, components: list[_LocalComponent]):
        self.modulus = modulus
        self.components = components

    # -- construction ---------------------------------------------------

    @staticmethod
    def _make_component(p: int, a: int, raw) -> _LocalComponent:
        m = p**a
        phi = euler_phi(m)
        if p == 2 and a > 2:
            if not (isinstance(raw, (tuple, list)) and len(raw) == 2):
                raise ModhypError(f"modulus 2^{a}: exponent data must be a pair")
            e1, e2 = int(raw[0]), int(raw[1])
            o2 = 2 ** (a - 2)
            if e1 in (0, 1):
                pass
            elif e1 == phi // 2:
                e1 = 1
            else:
                raise ModhypError(f"exponent {e1} on -1 is not a valid spelling (mod 2^{a})")
            if not 0 <= e2 < phi:
                raise ModhypError(f"exponent {e2} out of range [0,{phi}) (mod 2^{a})")
            if e2 >= o2:
                if e2 % 2:
                    raise ModhypError(f"exponent {e2} on 5 is not a valid spelling (mod 2^{a})")
                e2 //= 2
                if e2 >= o2:
                    raise ModhypError(f"exponent on 5 out of range (mod 2^{a})")
            return _LocalComponent(p, a, (m - 1, 5), (2, o2), (e1, e2))
        if p == 2:
            gen = m - 1  # -1; trivial group when a == 1
            order = phi
            e = int(raw[0] if isinstance(raw, (tuple, list)) else raw)
            if not 0 <= e < max(order, 1) and not (order == 1 and e == 0):
                raise ModhypError(f"exponent {e} out of range [0,{order})")
            return _LocalComponent(p, a, (gen,), (order,), (e % max(order, 1),))
        e = int(raw[0] if isinstance(raw, (tuple, list)) else raw)
        if not 0 <= e < phi:
            raise ModhypError(f"exponent {e} out of range [0,{phi}) at p={p}")
        return _LocalComponent(p, a, (smallest_generator(p, a),), (phi,), (e,))

    @staticmethod
    def decode(modulus: int, encoding) -> "DirichletCharacter":
        """Build a character from {e_p} local data in increasing-p order."""
        fac = factorize(modulus)
        encoding = list(encoding)
        if len(encoding) != len(fac):
            raise ModhypError(
                f"modulus {modulus} has {len(fac)} prime factors, got {len(encoding)} exponents"
            )
        comps = [
            DirichletCharacter._make_component(p, a, raw)
            for (p, a), raw in zip(fac, encoding)
        ]
        return DirichletCharacter(modulus, comps)

    @staticmethod
    def trivial(modulus: int) -> "DirichletCharacter":
        fac = factorize(modulus)
        return DirichletCharacter.decode(
            modulus, [(0, 0) if (p == 2 and a > 2) else 0 for p, a in fac]
        )

    def encode(self):
        """Canonical local data, increasing p."""
        out = []
        for c in self.components:
            out.append(tuple(c.exps) if len(c.exps) == 2 else c.exps[0])
        return out

    # -- evaluation -------------------------------------------------------

    def eval(self, n: int):
        """Exact value at n as a reduced pair (k, m) for e^(2 pi i k/m),
        or None when gcd(n, N) > 1."""
        n %= self.modulus
        if self.modulus > 1 and gcd(n, self.modulus) != 1:
            return None
        k, m = 0, 1
        for c in self.components:
            dl = c.dlog_table()[n % (c.p**c.a)]
            for e, o, d in zip(c.exps, c.orders, dl):
                if o == 1 or e == 0:
                    continue
                k = k * o + (e * d % o) * m
                m = m * o
                g = gcd(k, m)
                if g:
                    k //= g
                    m //= g
        k %= m
        g = gcd(k, m) or 1
        return (k // g, m // g)

    def __call__(self, n: int):
        return self.eval(n)

    @property
    def order(self) -> int:
        out = 1
        for c in self.components:
            for e, o in zip(c.exps, c.orders):
                if o > 1 and e:
                    out = _lcm(out, o // gcd(e, o))
        return out

    def is_trivial(self) -> bool:
        return self.order == 1

    def is_even(self) -> bool:
        v = self.eval(self.modulus - 1) if self.modulus > 2 else (0, 1)
        return v == (0, 1)

    def conductor(self) -> int:
        cond = 1
        for c in self.components:
            p, a = c.p, c.a
            if p == 2 and a > 2:
                e1, e2 = c.exps
                o2 = 2 ** (a - 2)
                if e2:
                    j = (o2 // gcd(e2, o2)).bit_length() - 1  # value at 5 has order 2^j
                    cond *= 2 ** (j + 2)
                elif e1:
                    cond *= 4
            else:
                e, o = c.exps[0], c.orders[0]
                if o > 1 and e:
                    val_order = o // gcd(e, o)
                    b = 1
                    while euler_phi(p**b) % val_order != 0:
                        b += 1
                    cond *= p**b
        return cond

    def pow(self, k: int) -> "DirichletCharacter":
        comps = []
        for c in self.components:
            exps = tuple((e * k) % o if o > 1 else 0 for e, o in zip(c.exps, c.orders))
            comps.append(_LocalComponent(c.p, c.a, c.gens, c.orders, exps))
        return DirichletCharacter(self.modulus, comps)

    def conjugate(self) -> "DirichletCharacter":
        return self.pow(-1)

    def restrict_away_from(self, p: int, new_modulus: int) -> "DirichletCharacter":
        """The character mod new_modulus dropping the p-component.

        Only valid when the p-component is trivial on the smaller
        modulus, i.e. v_p(cond) <= v_p(new_modulus)."""
        comps = []
        for c in self.components:
            if c.p == p:
                continue
            comps.append(c)
        fac = factorize(new_modulus)
        enc = []
        by_p = {c.p: c for c in comps}
        for q, a in fac:
            if q in by_p:
                c = by_p[q]
                if c.a != a:
                    raise ModhypError("component exponent does not transfer across powers")
                enc.append(tuple(c.exps) if len(c.exps) == 2 else c.exps[0])
            else:
                enc.append((0, 0) if (q == 2 and a > 2) else 0)
        return DirichletCharacter.decode(new_modulus, enc)

    def __eq__(self, other):
        return (
            isinstance(other, DirichletCharacter)
            and self.modulus == other.modulus
            and self.encode() == other.encode()
        )

    def __hash__(self):
        return hash((self.modulus, tuple(map(tuple, map(_astuple, self.encode())))))

    def __repr__(self):
        return f"char {self.modulus} {format_encoding(self.encode())}"


def _astuple(x):
    return x if isinstance(x, tuple) else (x,)


def _divides(a, b):
    return b % a == 0


def _local_unit_order(p, b):
    return euler_phi(p**b)


def enumerate_characters(N: int):
    """All Dirichlet characters mod N (there are phi(N) of them)."""
    fac = factorize(N)
    slots = []
    for p, a in fac:
        if p == 2 and a > 2:
            slots.append([(i, j) for i in range(2) for j in range(2 ** (a - 2))])
        elif p == 2:
            slots.append(list(range(max(euler_phi(p**a), 1))))
        else:
            slots.append(list(range(euler_phi(p**a))))
    out = []

    def rec(i, acc):
        if i == len(slots):
            out.append(DirichletCharacter.decode(N, acc))
            return
        for v in slots[i]:
            rec(i + 1, acc + [v])

    rec(0, [])
    return out


def format_encoding(enc) -> str:
    parts = []
    for e in enc:
        if isinstance(e, tuple):
            parts.append("{" + ",".join(str(v) for v in e) + "}")
        else:
            parts.append(str(e))
    return "{" + ",".join(parts) + "}"


def parse_encoding(text: str):
    """Parse `{2}` or `{{0,16}}` or `{{0,0},2}` style local data."""
    text = text.strip()
    if not (text.startswith("{") and text.endswith("}")):
        raise ModhypError(f"malformed character encoding {text!r}")
    body = text[1:-1].strip()
    out = []
    i = 0
    while i < len(body):
        if body[i] == "{":
            j = body.index("}", i)
            pair = tuple(int(t) for t in body[i + 1 : j].split(","))
            out.append(pair)
            i = j + 1
        elif body[i] in ", ":
            i += 1
        else:
            j = i
            while j < len(body) and body[j] not in ", ":
                j += 1
            out.append(int(body[i:j]))
            i = j
    return out
