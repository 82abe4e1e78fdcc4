"""Support varieties of simple modules for Frobenius kernels of SL_3.

Weights are written on the fundamental weights, ``(c1, c2)``; rho = (1, 1).
The first r base-p digits of lambda decide the mixed commuting variety
C_{a,b,0}: a singular digits (Ō_sub factors) and b regular ones (N factors).
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

from .formulas import dim_Cijm
from .ring import is_prime

MIN_PRIME = 7  # the A_2 support formulas need p > 6


@dataclass(frozen=True)
class WeightA2:
    c1: int
    c2: int

    def __post_init__(self):
        if self.c1 < 0 or self.c2 < 0:
            raise ValueError(f"weight ({self.c1}, {self.c2}) is not dominant")

    def __str__(self):
        return f"({self.c1},{self.c2})"


@dataclass(frozen=True)
class DigitDecomposition:
    p: int
    digits: tuple

    def reconstruct(self) -> WeightA2:
        return WeightA2(sum(d.c1 * self.p ** k for k, d in enumerate(self.digits)),
                        sum(d.c2 * self.p ** k for k, d in enumerate(self.digits)))


@dataclass(frozen=True)
class SupportReport:
    weight: WeightA2
    p: int
    r: int
    digits: tuple
    regular: tuple  # one flag per digit
    a: int
    b: int
    dim: int
    irreducible: bool
    irreducibility_source: str

    @property
    def mixed_params(self) -> tuple:
        return (self.a, self.b, 0)

    def record(self) -> dict:
        return {
            "spec": f"L{self.weight} p={self.p} r={self.r}",
            "track": "support",
            "lambda": [self.weight.c1, self.weight.c2],
            "p": self.p,
            "r": self.r,
            "digits": [[d.c1, d.c2] for d in self.digits],
            "classes": ["regular" if f else "singular" for f in self.regular],
            "a": self.a,
            "b": self.b,
            "dim": self.dim,
            "irreducible": self.irreducible,
        }


def _check_prime(p: int):
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if p < MIN_PRIME:
        raise ValueError(f"p = {p} < 7: the A_2 support formulas need p >= 7")


def decompose_digits(lam: WeightA2, p: int, r: int) -> DigitDecomposition:
    """The first r coordinatewise base-p digits of lambda (zero padded)."""
    _check_prime(p)
    if r < 1:
        raise ValueError("r must be >= 1")
    c1, c2 = lam.c1, lam.c2
    digits = []
    for _ in range(r):
        digits.append(WeightA2(c1 % p, c2 % p))
        c1 //= p
        c2 //= p
    if c1 or c2:
        warnings.warn(f"weight {lam} has nonzero base-{p} digits beyond index {r - 1}; "
                      "they do not affect the support variety of G_r", stacklevel=2)
    return DigitDecomposition(p, tuple(digits))


def is_p_regular(mu: WeightA2, p: int) -> bool:
    """No positive coroot pairing (mu + rho, beta^vee) is divisible by p."""
    pairings = (mu.c1 + 1, mu.c2 + 1, mu.c1 + mu.c2 + 2)
    return all(v % p for v in pairings)


def support_dimension(a: int, b: int) -> int:
    """Three-case formula in the counts of singular (a) and regular (b) digits."""
    if a < 0 or b < 0 or a + b < 1:
        raise ValueError("need a, b >= 0 with a + b >= 1")
    if a == 0:
        return 2 * b + 4
    if a == 1:
        return 2 * (a + b) + 3
    return 2 * (a + b) + 2


def support_variety(lam: WeightA2, p: int, r: int) -> SupportReport:
    dec = decompose_digits(lam, p, r)
    regular = tuple(is_p_regular(d, p) for d in dec.digits)
    b = sum(regular)
    a = r - b
    # at r = 1 with a singular digit the variety is Ō_sub itself (dim 4); the
    # three-case formula would give 5 there, so go through C_{a,b,0} directly
    dim = dim_Cijm(a, b, 0)
    if r >= 2:
        irreducible, source = a == 0, "irreducible iff no singular digit (r >= 2)"
    else:
        irreducible, source = True, "r = 1: the variety is N or Ō_sub, both irreducible"
    return SupportReport(lam, p, r, dec.digits, regular, a, b, dim, irreducible, source)
