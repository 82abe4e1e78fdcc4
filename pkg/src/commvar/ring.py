"""Exact sparse multivariate polynomials over a prime field or the rationals.

Monomials are exponent tuples, polynomials are immutable maps
``monomial -> nonzero coefficient``.  Coefficients are Python ints reduced
mod p for prime fields and :class:`fractions.Fraction` for the rationals.
"""

from __future__ import annotations

import math
import re
from operator import add
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Callable, Iterable, Mapping, Sequence

Monomial = tuple  # tuple[int, ...]

DEFAULT_PRIME = 32003
ORDERS = ("grevlex", "lex")


class RingMismatchError(ValueError):
    pass


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class CoefficientField:
    """F_p for ``characteristic = p`` prime, the rationals for ``characteristic = 0``."""

    characteristic: int = DEFAULT_PRIME

    def __post_init__(self):
        if self.characteristic != 0 and not is_prime(self.characteristic):
            raise ValueError(f"modulus {self.characteristic} is not prime")

    @property
    def is_prime_field(self) -> bool:
        return self.characteristic != 0

    def __call__(self, c):
        p = self.characteristic
        if p:
            if isinstance(c, Fraction):
                if c.denominator % p == 0:
                    raise ZeroDivisionError(f"{c} has no image in F_{p}")
                return c.numerator * pow(c.denominator, -1, p) % p
            return int(c) % p
        return Fraction(c)

    def inv(self, c):
        if not c:
            raise ZeroDivisionError("inverse of zero")
        p = self.characteristic
        if p:
            return pow(c, -1, p)
        return 1 / Fraction(c)

    def format(self, c) -> str:
        p = self.characteristic
        if p:
            return str(c - p if c > p // 2 else c)
        c = Fraction(c)
        return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"

    def __str__(self):
        return f"GF({self.characteristic})" if self.characteristic else "QQ"


def GF(p: int) -> CoefficientField:
    return CoefficientField(p)


QQ = CoefficientField(0)


@dataclass(frozen=True)
class RingDescriptor:
    """Polynomial ring: ordered variable names, monomial order, coefficient field."""

    variables: tuple
    order: str = "grevlex"
    field: CoefficientField = field(default_factory=lambda: CoefficientField(DEFAULT_PRIME))

    def __post_init__(self):
        object.__setattr__(self, "variables", tuple(self.variables))
        if len(set(self.variables)) != len(self.variables):
            raise ValueError(f"duplicate variable names in {self.variables}")
        for v in self.variables:
            if not _NAME.fullmatch(v):
                raise ValueError(f"invalid variable name {v!r}")
        if self.order not in ORDERS:
            raise ValueError(f"unknown monomial order {self.order!r}")

    @property
    def nvars(self) -> int:
        return len(self.variables)

    @cached_property
    def index(self) -> dict:
        return {v: i for i, v in enumerate(self.variables)}

    @cached_property
    def key(self) -> Callable[[Monomial], tuple]:
        """Sort key: ``key(a) > key(b)`` iff ``a > b`` in the monomial order."""
        cache: dict = {}
        if self.order == "lex":
            def key(m):
                return m
        else:
            def key(m):
                k = cache.get(m)
                if k is None:
                    k = cache[m] = (sum(m),) + tuple(-e for e in reversed(m))
                return k
        return key

    @cached_property
    def neg_key(self) -> Callable[[Monomial], tuple]:
        """Order-reversing key, for min-heaps."""
        cache: dict = {}
        lex = self.order == "lex"

        def nkey(m):
            k = cache.get(m)
            if k is None:
                if lex:
                    k = tuple(-e for e in m)
                else:
                    k = (-sum(m),) + tuple(reversed(m))
                cache[m] = k
            return k
        return nkey

    @cached_property
    def unit(self) -> Monomial:
        return (0,) * self.nvars

    # constructors -----------------------------------------------------------

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return self.const(1)

    def const(self, c) -> "Polynomial":
        c = self.field(c)
        return Polynomial(self, {self.unit: c} if c else {})

    def var(self, name: str) -> "Polynomial":
        e = [0] * self.nvars
        e[self.index[name]] = 1
        return Polynomial(self, {tuple(e): self.field(1)})

    def gens(self) -> list:
        return [self.var(v) for v in self.variables]

    def monomial(self, exponents: Sequence[int], coeff=1) -> "Polynomial":
        if len(exponents) != self.nvars or any(e < 0 for e in exponents):
            raise ValueError(f"bad exponent vector {exponents}")
        return self.from_terms({tuple(exponents): coeff})

    def from_terms(self, terms: Mapping) -> "Polynomial":
        F = self.field
        out = {}
        for m, c in terms.items():
            c = F(c)
            if c:
                out[tuple(m)] = c
        return Polynomial(self, out)

    def parse(self, text: str) -> "Polynomial":
        return parse_polynomial(self, text)

    def with_order(self, order: str) -> "RingDescriptor":
        return RingDescriptor(self.variables, order, self.field)

    def __str__(self):
        return f"{self.field}[{', '.join(self.variables)}] ({self.order})"


_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(map(add, a, b))


def mono_divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mono_div(b: Monomial, a: Monomial) -> Monomial:
    return tuple(y - x for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x if x > y else y for x, y in zip(a, b))


class Polynomial:
    """Immutable sparse polynomial.  Construct through a :class:`RingDescriptor`."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: RingDescriptor, terms: dict):
        self.ring = ring
        self.terms = terms
        self._hash = None

    # coercion -------------------------------------------------------------

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise RingMismatchError(f"ring mismatch: {self.ring} vs {other.ring}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.const(other)
        return NotImplemented

    # arithmetic -----------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        F = self.ring.field
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = F(out.get(m, 0) + c)
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return Polynomial(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        F = self.ring.field
        return Polynomial(self.ring, {m: F(-c) for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        F = self.ring.field
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                out[m] = out.get(m, 0) + c1 * c2
        return Polynomial(self.ring, {m: v for m, c in out.items() if (v := F(c))})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative integer")
        result, base = self.ring.one(), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def scale(self, c) -> "Polynomial":
        F = self.ring.field
        c = F(c)
        if not c:
            return self.ring.zero()
        return Polynomial(self.ring, {m: F(v * c) for m, v in self.terms.items()})

    def monic(self) -> "Polynomial":
        if not self.terms:
            return self
        return self.scale(self.ring.field.inv(self.leading_term()[1]))

    def primitive(self) -> "Polynomial":
        """Scale so the integer coefficients (symmetric residues over F_p) are
        coprime and the leading one is positive."""
        if not self.terms:
            return self
        F = self.ring.field
        p = F.characteristic
        if p:
            ints = [c - p if c > p // 2 else c for c in self.terms.values()]
            g = math.gcd(*ints)
            lead = self.leading_term()[1]
            lead = lead - p if lead > p // 2 else lead
            factor = g if lead > 0 else -g
            if factor % p == 0:
                return self
            return self.scale(F.inv(F(factor)))
        den = math.lcm(*(Fraction(c).denominator for c in self.terms.values()))
        nums = [int(Fraction(c) * den) for c in self.terms.values()]
        g = math.gcd(*nums)
        lead = self.leading_term()[1]
        return self.scale(Fraction(den, g if lead > 0 else -g))

    # queries ----------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and self.ring.unit in self.terms)

    def degree(self) -> int:
        return max((sum(m) for m in self.terms), default=-1)

    def support(self) -> set:
        """Indices of variables that occur in some term."""
        return {i for m in self.terms for i, e in enumerate(m) if e}

    def variables(self) -> list:
        return [self.ring.variables[i] for i in sorted(self.support())]

    def leading_term(self) -> tuple:
        """(monomial, coefficient) maximal under the ring's order."""
        if not self.terms:
            raise ValueError("the zero polynomial has no leading term")
        m = max(self.terms, key=self.ring.key)
        return m, self.terms[m]

    def leading_monomial(self) -> Monomial:
        return self.leading_term()[0]

    def sorted_terms(self) -> list:
        return sorted(self.terms.items(), key=lambda t: self.ring.key(t[0]), reverse=True)

    def constant_value(self):
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self.terms.get(self.ring.unit, self.ring.field(0))

    # structural maps --------------------------------------------------------

    def substitute(self, assignment: Mapping[str, "Polynomial"]) -> "Polynomial":
        """Ring homomorphism sending listed variables to polynomials, others to themselves.

        Images may live in a different ring; unlisted variables must then exist there too.
        """
        images = list(assignment.values())
        target = images[0].ring if images else self.ring
        for img in images:
            if img.ring != target:
                raise RingMismatchError("substitution images live in different rings")
        unknown = set(assignment) - set(self.ring.variables)
        if unknown:
            raise KeyError(f"unknown variables {sorted(unknown)}")
        gens = []
        for v in self.ring.variables:
            if v in assignment:
                gens.append(assignment[v])
            elif target is self.ring:
                gens.append(self.ring.var(v))
            else:
                gens.append(target.var(v))
        result = target.zero()
        powers: dict = {}
        for m, c in self.terms.items():
            term = target.const(c)
            for i, e in enumerate(m):
                if e:
                    key = (i, e)
                    if key not in powers:
                        powers[key] = gens[i] ** e
                    term = term * powers[key]
            result = result + term
        return result

    def change_ring(self, target: RingDescriptor) -> "Polynomial":
        """Re-express in ``target``, matching variables by name."""
        if target == self.ring:
            return self
        pos = [target.index[v] for v in self.ring.variables]
        F = target.field
        out = {}
        for m, c in self.terms.items():
            e = [0] * target.nvars
            for i, k in enumerate(m):
                if k:
                    e[pos[i]] = k
            v = F(c)
            if v:
                out[tuple(e)] = v
        return Polynomial(target, out)

    def evaluate(self, point: Mapping[str, object]):
        """Value at a point given as ``{name: field element}``."""
        F = self.ring.field
        vals = [F(point[v]) for v in self.ring.variables]
        total = 0
        for m, c in self.terms.items():
            t = c
            for x, e in zip(vals, m):
                if e:
                    t = t * x ** e
            total += t
        return F(total)

    # identity ----------------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.const(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring.variables, frozenset(self.terms.items())))
        return self._hash

    def __str__(self):
        return format_polynomial(self)

    def __repr__(self):
        return f"Polynomial({format_polynomial(self)!r})"


# text format ---------------------------------------------------------------

def format_polynomial(f: Polynomial) -> str:
    """``x1^2*y3 - 2*z1``: terms in descending monomial order."""
    if not f.terms:
        return "0"
    F = f.ring.field
    names = f.ring.variables
    pieces = []
    for m, c in f.sorted_terms():
        s = F.format(c)
        neg = s.startswith("-")
        if neg:
            s = s[1:]
        factors = [names[i] if e == 1 else f"{names[i]}^{e}" for i, e in enumerate(m) if e]
        if factors:
            body = "*".join(factors) if s == "1" else s + "*" + "*".join(factors)
        else:
            body = s
        if not pieces:
            pieces.append(("-" if neg else "") + body)
        else:
            pieces.append(("- " if neg else "+ ") + body)
    return " ".join(pieces)


_TERM = re.compile(r"([+-])?\s*([^+-]+)")
_FACTOR = re.compile(r"(?:(\d+)(?:/(\d+))?|([A-Za-z_][A-Za-z0-9_]*)(?:\^(\d+))?)")


def parse_polynomial(ring: RingDescriptor, text: str) -> Polynomial:
    """Inverse of :func:`format_polynomial`; also accepts ``**`` for powers."""
    s = text.replace("**", "^").strip()
    if not s:
        raise ValueError("empty polynomial text")
    result = ring.zero()
    pos = 0
    compact = re.sub(r"\s+", "", s)
    if compact == "0":
        return result
    for mt in _TERM.finditer(compact):
        if mt.start() != pos:
            raise ValueError(f"cannot parse {text!r} near position {pos}")
        pos = mt.end()
        sign = -1 if mt.group(1) == "-" else 1
        coeff = Fraction(sign)
        e = [0] * ring.nvars
        for factor in mt.group(2).split("*"):
            mf = _FACTOR.fullmatch(factor)
            if not mf:
                raise ValueError(f"bad factor {factor!r} in {text!r}")
            if mf.group(1) is not None:
                coeff *= Fraction(int(mf.group(1)), int(mf.group(2) or 1))
            else:
                name = mf.group(3)
                if name not in ring.index:
                    raise ValueError(f"unknown variable {name!r}")
                e[ring.index[name]] += int(mf.group(4) or 1)
        result = result + ring.from_terms({tuple(e): coeff})
    if pos != len(compact):
        raise ValueError(f"trailing garbage in {text!r}")
    return result


def polynomial_ring(names: Iterable[str] | str, order: str = "grevlex",
                    field: CoefficientField | int | None = None):
    """Convenience: ``R, (x, y) = polynomial_ring("x y")``."""
    if isinstance(names, str):
        names = names.replace(",", " ").split()
    if field is None:
        field = CoefficientField(DEFAULT_PRIME)
    elif isinstance(field, int):
        field = CoefficientField(field)
    R = RingDescriptor(tuple(names), order, field)
    return R, R.gens()
