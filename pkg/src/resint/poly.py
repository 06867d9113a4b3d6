"""Sparse multivariate polynomials over exact rationals.

Monomials are plain exponent tuples, one entry per ring variable.
Polynomials keep their terms in a canonical strictly-descending order,
so structural equality is ideal-theoretic equality of representatives.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


class PolyError(Exception):
    pass


class RingMismatchError(PolyError):
    pass


class ArityMismatchError(PolyError):
    pass


class UnknownVariableError(PolyError):
    pass


Monomial = tuple  # exponent vector, one non-negative int per variable


def mon_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def mon_divides(a, b):
    """True when a divides b componentwise."""
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def mon_div(b, a):
    """b / a, assuming a divides b."""
    return tuple(y - x for x, y in zip(a, b))


def mon_lcm(a, b):
    return tuple(x if x > y else y for x, y in zip(a, b))


def mon_gcd(a, b):
    return tuple(x if x < y else y for x, y in zip(a, b))


def mon_degree(a):
    return sum(a)


def _grevlex_key(m):
    # Larger key = larger monomial: total degree first, then the rightmost
    # differing variable must have the *smaller* exponent.
    return (sum(m),) + tuple(-e for e in reversed(m))


@dataclass(frozen=True)
class MonomialOrder:
    """Base class; subclasses provide flat integer key tuples.

    Keys are flat so they can be negated elementwise for max-heaps.
    """

    def key(self, m):
        raise NotImplementedError

    def compare(self, a, b):
        """-1, 0, 1 for a < b, a == b, a > b. Raises on arity mismatch."""
        if len(a) != len(b):
            raise ArityMismatchError(f"monomials of arity {len(a)} and {len(b)}")
        ka, kb = self.key(a), self.key(b)
        if ka < kb:
            return -1
        if ka > kb:
            return 1
        return 0

    @property
    def tag(self):
        raise NotImplementedError


@dataclass(frozen=True)
class Lex(MonomialOrder):
    def key(self, m):
        return m

    @property
    def tag(self):
        return "lex"


@dataclass(frozen=True)
class GrevLex(MonomialOrder):
    def key(self, m):
        return _grevlex_key(m)

    @property
    def tag(self):
        return "grevlex"


@dataclass(frozen=True)
class BlockElim(MonomialOrder):
    """Elimination order: grevlex on the first `front` variables, then grevlex
    on the tail.  Any monomial touching a front variable beats any that does not.
    """

    front: int

    def key(self, m):
        f = self.front
        return _grevlex_key(m[:f]) + _grevlex_key(m[f:])

    @property
    def tag(self):
        return f"block:{self.front}"


def order_from_tag(tag):
    if tag == "lex":
        return Lex()
    if tag == "grevlex":
        return GrevLex()
    if tag.startswith("block:"):
        return BlockElim(int(tag.split(":", 1)[1]))
    raise ValueError(f"unknown monomial order {tag!r}")


def compare_monomials(order, a, b):
    return order.compare(a, b)


class Ring:
    """A named polynomial ring over Q with a fixed monomial order."""

    __slots__ = ("variables", "order", "_index", "_hash")

    def __init__(self, variables, order=None):
        variables = tuple(variables)
        if len(set(variables)) != len(variables):
            raise PolyError("duplicate variable names")
        for v in variables:
            if not v or not (v[0].isalpha() or v[0] == "_") or not all(
                c.isalnum() or c == "_" for c in v
            ):
                raise PolyError(f"invalid variable name {v!r}")
        self.variables = variables
        self.order = order if order is not None else GrevLex()
        self._index = {v: i for i, v in enumerate(variables)}
        self._hash = hash((variables, self.order))

    @property
    def arity(self):
        return len(self.variables)

    def index(self, name):
        try:
            return self._index[name]
        except KeyError:
            raise UnknownVariableError(f"unknown variable {name!r}") from None

    def var(self, name):
        i = self.index(name)
        mon = tuple(1 if j == i else 0 for j in range(self.arity))
        return Polynomial(self, {mon: Fraction(1)})

    def gens(self):
        return [self.var(v) for v in self.variables]

    def constant(self, c):
        c = Fraction(c)
        if c == 0:
            return self.zero()
        return Polynomial(self, {(0,) * self.arity: c})

    def zero(self):
        return Polynomial(self, {})

    def one(self):
        return self.constant(1)

    def monomial(self, exponents, coeff=1):
        exponents = tuple(exponents)
        if len(exponents) != self.arity:
            raise ArityMismatchError("exponent vector arity mismatch")
        return Polynomial(self, {exponents: Fraction(coeff)})

    def __eq__(self, other):
        return (
            isinstance(other, Ring)
            and self.variables == other.variables
            and self.order == other.order
        )

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Ring({', '.join(self.variables)}; {self.order.tag})"


class Polynomial:
    """Immutable canonical polynomial: terms strictly descending, no zeros."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring, coeffs):
        self.ring = ring
        key = ring.order.key
        items = [(m, c) for m, c in coeffs.items() if c]
        items.sort(key=lambda t: key(t[0]), reverse=True)
        self.terms = tuple(items)

    # -- inspection ----------------------------------------------------

    def is_zero(self):
        return not self.terms

    def leading_monomial(self):
        if not self.terms:
            raise PolyError("zero polynomial has no leading monomial")
        return self.terms[0][0]

    def leading_coefficient(self):
        if not self.terms:
            raise PolyError("zero polynomial has no leading coefficient")
        return self.terms[0][1]

    def total_degree(self):
        if not self.terms:
            return -1
        return max(sum(m) for m, _ in self.terms)

    def is_homogeneous(self):
        if not self.terms:
            return True
        degs = {sum(m) for m, _ in self.terms}
        return len(degs) == 1

    def constant_value(self):
        """The rational value, provided the polynomial is constant."""
        if not self.terms:
            return Fraction(0)
        if len(self.terms) == 1 and sum(self.terms[0][0]) == 0:
            return self.terms[0][1]
        raise PolyError("not a constant polynomial")

    def terms_sorted(self, order):
        if order == self.ring.order:
            return list(self.terms)
        key = order.key
        return sorted(self.terms, key=lambda t: key(t[0]), reverse=True)

    # -- arithmetic ----------------------------------------------------

    def _check(self, other):
        if self.ring != other.ring:
            raise RingMismatchError("polynomials from different rings")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.constant(other)
        self._check(other)
        acc = dict(self.terms)
        for m, c in other.terms:
            v = acc.get(m)
            if v is None:
                acc[m] = c
            else:
                v = v + c
                if v:
                    acc[m] = v
                else:
                    del acc[m]
        return Polynomial(self.ring, acc)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.ring, {m: -c for m, c in self.terms})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.constant(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        self._check(other)
        acc = {}
        for ma, ca in self.terms:
            for mb, cb in other.terms:
                m = tuple(x + y for x, y in zip(ma, mb))
                v = acc.get(m)
                if v is None:
                    acc[m] = ca * cb
                else:
                    v = v + ca * cb
                    if v:
                        acc[m] = v
                    else:
                        del acc[m]
        return Polynomial(self.ring, acc)

    __rmul__ = __mul__

    def scale(self, c):
        c = Fraction(c)
        if c == 0:
            return self.ring.zero()
        return Polynomial(self.ring, {m: c * v for m, v in self.terms})

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise PolyError("exponent must be a non-negative integer")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def __eq__(self, other):
        return (
            isinstance(other, Polynomial)
            and self.ring == other.ring
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.ring, self.terms))

    # -- calculus ------------------------------------------------------

    def derivative(self, name):
        i = self.ring.index(name)
        acc = {}
        for m, c in self.terms:
            e = m[i]
            if e == 0:
                continue
            dm = m[:i] + (e - 1,) + m[i + 1 :]
            acc[dm] = acc.get(dm, Fraction(0)) + c * e
        return Polynomial(self.ring, acc)

    # -- printing --------------------------------------------------------

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        names = self.ring.variables
        for i, (m, c) in enumerate(self.terms):
            factors = []
            for name, e in zip(names, m):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            mag = abs(c)
            if not factors:
                body = _frac_str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([_frac_str(mag)] + factors)
            if i == 0:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append((" - " if c < 0 else " + ") + body)
        return "".join(parts)

    def __repr__(self):
        return f"<poly {self}>"


def _frac_str(q):
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def euler_pairing(p):
    """Sum of x_i * dp/dx_i; equals deg(p) * p for homogeneous p."""
    total = p.ring.zero()
    for name in p.ring.variables:
        total = total + p.ring.var(name) * p.derivative(name)
    return total
