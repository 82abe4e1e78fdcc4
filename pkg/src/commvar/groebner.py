"""Buchberger's algorithm, normal forms and Krull dimension via initial ideals.

The pair machinery follows Gebauer-Moeller (coprime and chain criteria) with
the normal selection strategy.  Internally polynomials are plain dicts; the
public API speaks :class:`~commvar.ring.Polynomial`.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from functools import lru_cache

from .ring import (Polynomial, RingDescriptor, RingMismatchError, mono_div, mono_divides,
                   mono_lcm, mono_mul)

DEFAULT_BUDGET = 200_000


class BudgetExceeded(RuntimeError):
    """Raised instead of returning a possibly wrong answer."""


@dataclass(frozen=True)
class Ideal:
    ring: RingDescriptor
    generators: tuple

    def __post_init__(self):
        gens = tuple(self.generators)
        for g in gens:
            if g.ring != self.ring:
                raise RingMismatchError(f"generator {g} not in {self.ring}")
        object.__setattr__(self, "generators", gens)

    def normalized(self) -> "Ideal":
        """Zero generators and duplicates pruned, first occurrence order kept."""
        seen = set()
        out = []
        for g in self.generators:
            if g and g not in seen:
                seen.add(g)
                out.append(g)
        return Ideal(self.ring, tuple(out))

    def __add__(self, other: "Ideal") -> "Ideal":
        if other.ring != self.ring:
            raise RingMismatchError("ideals live in different rings")
        return Ideal(self.ring, self.generators + other.generators).normalized()

    def with_generators(self, extra) -> "Ideal":
        return Ideal(self.ring, self.generators + tuple(extra)).normalized()

    def change_ring(self, ring: RingDescriptor) -> "Ideal":
        return Ideal(ring, tuple(g.change_ring(ring) for g in self.generators))

    def __len__(self):
        return len(self.generators)

    def __str__(self):
        return "(" + ", ".join(str(g) for g in self.generators) + ")"


@dataclass(frozen=True)
class GroebnerBasis:
    ideal: Ideal
    basis: tuple
    order: str

    @property
    def ring(self) -> RingDescriptor:
        return self.ideal.ring

    def leading_monomials(self) -> list:
        return [g.leading_monomial() for g in self.basis]

    def reduce(self, f: Polynomial) -> Polynomial:
        return reduce(f, list(self.basis))

    def contains(self, f: Polynomial) -> bool:
        return not self.reduce(f)

    def is_unit_ideal(self) -> bool:
        return len(self.basis) == 1 and self.basis[0].is_constant()


# dict-level kernels ---------------------------------------------------------

def _lead(terms: dict, key):
    return max(terms, key=key)


def _sig(m) -> int:
    return sum(1 << i for i, e in enumerate(m) if e)


def _prepare(basis: list) -> list:
    """(lm, items, nonzero exponents of lm, support bitmask) per monic basis element."""
    out = []
    for lm, g in basis:
        nz = tuple((i, e) for i, e in enumerate(lm) if e)
        out.append((lm, list(g.items()), nz, _sig(lm)))
    return out


def _normal_form(terms: dict, basis: list, ring: RingDescriptor) -> dict:
    """Full reduction of ``terms`` by monic ``basis`` entries (lm, terms).

    Always divides by the first applicable basis element.
    """
    prepared = _prepare(basis)
    p = ring.field.characteristic
    F = ring.field
    nkey = ring.neg_key
    h = dict(terms)
    heap = [(nkey(m), m) for m in h]
    heapq.heapify(heap)
    r = {}
    while heap:
        _, m = heapq.heappop(heap)
        c = h.get(m)
        if c is None:
            continue
        sm = _sig(m)
        for lm, items, nz, sg in prepared:
            if sg & ~sm:
                continue
            if all(m[i] >= e for i, e in nz):
                q = mono_div(m, lm)
                del h[m]
                for gm, gc in items:
                    if gm == lm:
                        continue
                    mm = mono_mul(q, gm)
                    old = h.get(mm)
                    if p:
                        v = ((old or 0) - c * gc) % p
                    else:
                        v = (old or 0) - c * gc
                    if v:
                        h[mm] = v
                        if old is None:
                            heapq.heappush(heap, (nkey(mm), mm))
                    elif old is not None:
                        del h[mm]
                break
        else:
            r[m] = c
            del h[m]
    if not p:
        r = {m: F(c) for m, c in r.items()}
    return r


def _monic(terms: dict, ring: RingDescriptor) -> tuple:
    F = ring.field
    lm = _lead(terms, ring.key)
    inv = F.inv(terms[lm])
    return lm, {m: F(c * inv) for m, c in terms.items()}


def _spoly(f, g, ring: RingDescriptor) -> dict:
    (lf, tf), (lg, tg) = f, g
    F = ring.field
    L = mono_lcm(lf, lg)
    a, b = mono_div(L, lf), mono_div(L, lg)
    out: dict = {}
    for m, c in tf.items():
        mm = mono_mul(a, m)
        out[mm] = out.get(mm, 0) + c
    for m, c in tg.items():
        mm = mono_mul(b, m)
        out[mm] = out.get(mm, 0) - c
    return {m: v for m, c in out.items() if (v := F(c))}


def _coprime(a, b) -> bool:
    return all(not (x and y) for x, y in zip(a, b))


def _update(G: list, B: set, h: int, polys: list, ring: RingDescriptor):
    """Gebauer-Moeller insertion of ``polys[h]`` into active set ``G`` and pair set ``B``."""
    lh = polys[h][0]
    lcm = {g: mono_lcm(lh, polys[g][0]) for g in G}
    C = list(G)
    D = []
    while C:
        g1 = C.pop(0)
        L1 = lcm[g1]
        if _coprime(lh, polys[g1][0]):
            D.append(g1)
            continue
        dominated = any(mono_divides(lcm[g2], L1) for g2 in C) or \
            any(mono_divides(lcm[g2], L1) for g2 in D)
        if not dominated:
            D.append(g1)
    E = {(g, h) for g in D if not _coprime(lh, polys[g][0])}
    B_new = set()
    for (g1, g2) in B:
        L = mono_lcm(polys[g1][0], polys[g2][0])
        if mono_divides(lh, L) and mono_lcm(polys[g1][0], lh) != L \
                and mono_lcm(lh, polys[g2][0]) != L:
            continue
        B_new.add((g1, g2))
    B_new |= E
    G_new = [g for g in G if not mono_divides(lh, polys[g][0])]
    G_new.append(h)
    return G_new, B_new


def _interreduce(elems: list, ring: RingDescriptor) -> list:
    """Minimal then reduced Groebner basis from monic (lm, terms) pairs."""
    key = ring.key
    elems = sorted(elems, key=lambda e: key(e[0]))
    minimal = []
    for lm, t in elems:
        if not any(mono_divides(l2, lm) for l2, _ in minimal):
            minimal.append((lm, t))
    reduced = []
    for i, (lm, t) in enumerate(minimal):
        others = [e for j, e in enumerate(minimal) if j != i]
        reduced.append(_monic(_normal_form(t, others, ring), ring))
    reduced.sort(key=lambda e: key(e[0]), reverse=True)
    return reduced


def _buchberger_terms(gens: tuple, ring: RingDescriptor, budget: int) -> list:
    key = ring.key
    polys: list = []
    G: list = []
    B: set = set()
    for g in gens:
        polys.append(_monic(dict(g.terms), ring))
        if polys[-1][0] == ring.unit:
            return [polys[-1]]
        G, B = _update(G, B, len(polys) - 1, polys, ring)
    steps = 0
    pkeys: dict = {}
    while B:
        for ij in B:
            if ij not in pkeys:
                pkeys[ij] = (key(mono_lcm(polys[ij[0]][0], polys[ij[1]][0])), ij)
        pair = min(B, key=pkeys.__getitem__)
        B.discard(pair)
        steps += 1
        if steps > budget:
            raise BudgetExceeded(
                f"Groebner budget of {budget} pair reductions exceeded "
                f"({len(G)} basis elements, {len(B)} pairs pending)")
        s = _spoly(polys[pair[0]], polys[pair[1]], ring)
        if not s:
            continue
        h = _normal_form(s, [polys[g] for g in G], ring)
        if not h:
            continue
        polys.append(_monic(h, ring))
        if polys[-1][0] == ring.unit:
            return [polys[-1]]
        G, B = _update(G, B, len(polys) - 1, polys, ring)
    return [polys[g] for g in G]


@lru_cache(maxsize=512)
def _cached_gb(ideal: Ideal, budget: int) -> tuple:
    ring = ideal.ring
    gens = ideal.normalized().generators
    if not gens:
        return ()
    elems = _interreduce(_buchberger_terms(gens, ring, budget), ring)
    return tuple(Polynomial(ring, t) for _, t in elems)


# public API -------------------------------------------------------------------

def reduce(f: Polynomial, basis) -> Polynomial:
    """Remainder of ``f`` on multivariate division by ``basis`` (in list order)."""
    ring = f.ring
    items = []
    for g in basis:
        if g.ring != ring:
            raise RingMismatchError(f"{g} not in {ring}")
        if not g:
            continue
        lm, lc = g.leading_term()
        inv = ring.field.inv(lc)
        items.append((lm, {m: ring.field(c * inv) for m, c in g.terms.items()}))
    return Polynomial(ring, _normal_form(f.terms, items, ring))


def buchberger(ideal: Ideal, budget: int = DEFAULT_BUDGET) -> GroebnerBasis:
    """Reduced Groebner basis (monic, sorted by leading monomial, descending)."""
    basis = _cached_gb(ideal.normalized(), budget)
    return GroebnerBasis(ideal, basis, ideal.ring.order)


def is_member(f: Polynomial, ideal: Ideal, budget: int = DEFAULT_BUDGET) -> bool:
    return not reduce(f, buchberger(ideal, budget).basis)


def max_independent_set(supports: list, nvars: int) -> int:
    """Largest S ⊆ {0..nvars-1} containing no member of ``supports`` entirely.

    Equivalently nvars minus a minimum hitting set of the supports, found by
    branch and bound on the smallest unhit support.
    """
    edges = []
    for s in sorted({frozenset(s) for s in supports}, key=lambda s: (len(s), sorted(s))):
        if not any(e <= s for e in edges):
            edges.append(s)
    if any(not e for e in edges):
        return -1
    best = [nvars + 1]

    def search(chosen: frozenset, remaining: list):
        if len(chosen) >= best[0]:
            return
        if not remaining:
            best[0] = len(chosen)
            return
        # lower bound: greedy disjoint edges need distinct hitters
        used = set()
        lb = 0
        for e in remaining:
            if not (e & used):
                used |= e
                lb += 1
        if len(chosen) + lb >= best[0]:
            return
        edge = min(remaining, key=lambda e: (len(e), sorted(e)))
        for v in sorted(edge):
            nxt = chosen | {v}
            search(nxt, [e for e in remaining if v not in e])

    search(frozenset(), edges)
    return nvars - best[0]


def monomial_dimension(monomials: list, nvars: int) -> int:
    """Dimension of the zero set of a monomial ideal (-1 if it contains 1)."""
    supports = [frozenset(i for i, e in enumerate(m) if e) for m in monomials]
    return max_independent_set(supports, nvars)


def krull_dimension(ideal: Ideal, budget: int = DEFAULT_BUDGET) -> int:
    """dim V(ideal) over the algebraic closure; -1 for the unit ideal."""
    gb = buchberger(ideal, budget)
    return monomial_dimension(gb.leading_monomials(), ideal.ring.nvars)
