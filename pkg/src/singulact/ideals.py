"""Monomial ideals as antichains of minimal generators."""

from __future__ import annotations

from .errors import InputError, UnsupportedClassError
from .poly import ExpVec, Poly, _check_expvec


def _dominates(u, v):
    """u >= v componentwise."""
    return all(a >= b for a, b in zip(u, v))


def _antichain(vecs):
    """Minimal elements under componentwise <= (duplicates removed)."""
    vecs = set(vecs)
    return frozenset(
        v for v in vecs if not any(u != v and _dominates(v, u) for u in vecs)
    )


class MonomialIdeal:
    """Monomial ideal given by its minimal generators.

    Generators are reduced to an antichain on construction.  Empty generator
    set encodes the zero ideal, which most operations reject.
    """

    __slots__ = ("n", "gens")

    def __init__(self, n, gens):
        if n < 1:
            raise InputError("ambient dimension must be >= 1")
        self.n = n
        self.gens = _antichain(_check_expvec(v, n) for v in gens)

    @property
    def is_zero(self):
        return not self.gens

    @property
    def is_unit(self):
        return (0,) * self.n in self.gens

    def sorted_gens(self):
        return sorted(self.gens)

    def __eq__(self, other):
        return (
            isinstance(other, MonomialIdeal)
            and self.n == other.n
            and self.gens == other.gens
        )

    def __hash__(self):
        return hash((self.n, self.gens))

    def __repr__(self):
        return f"MonomialIdeal({self.n}, {self.sorted_gens()})"


def _require_nonzero(a: MonomialIdeal):
    if a.is_zero:
        raise InputError("zero ideal not allowed here")


def _require_same_n(a: MonomialIdeal, b: MonomialIdeal):
    if a.n != b.n:
        raise InputError(f"dimension mismatch: {a.n} vs {b.n}")


def ideal_product(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    """Minimal generators of the product ideal."""
    _require_same_n(a, b)
    _require_nonzero(a)
    _require_nonzero(b)
    sums = {
        tuple(x + y for x, y in zip(u, v)) for u in a.gens for v in b.gens
    }
    return MonomialIdeal(a.n, sums)


def ideal_power(a: MonomialIdeal, k: int) -> MonomialIdeal:
    if k < 1:
        raise InputError("ideal power requires k >= 1")
    _require_nonzero(a)
    out = a
    for _ in range(k - 1):
        out = ideal_product(out, a)
    return out


def maximal_ideal(n: int) -> MonomialIdeal:
    """(x_1, ..., x_n)."""
    return MonomialIdeal(
        n, [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    )


def maximal_ideal_power(n: int, d: int) -> MonomialIdeal:
    """All monomials of total degree d (already an antichain)."""
    if d < 1:
        raise InputError("maximal ideal power requires d >= 1")

    def compositions(total, parts):
        if parts == 1:
            yield (total,)
            return
        for first in range(total + 1):
            for rest in compositions(total - first, parts - 1):
                yield (first,) + rest

    return MonomialIdeal(n, list(compositions(d, n)))


def contains_monomial(a: MonomialIdeal, v: ExpVec) -> bool:
    """True iff x^v is in the ideal, i.e. divisible by some generator."""
    _require_nonzero(a)
    v = _check_expvec(v, a.n)
    return any(_dominates(v, g) for g in a.gens)


def ideal_contains(a: MonomialIdeal, b: MonomialIdeal) -> bool:
    """True iff b is contained in a."""
    _require_same_n(a, b)
    _require_nonzero(a)
    _require_nonzero(b)
    return all(contains_monomial(a, g) for g in b.gens)


def poly_in_ideal(a: MonomialIdeal, f: Poly) -> bool:
    """True iff every support monomial of f lies in a."""
    if a.n != f.n:
        raise InputError(f"dimension mismatch: {a.n} vs {f.n}")
    _require_nonzero(a)
    return all(contains_monomial(a, v) for v in f.terms)


def is_zero_dimensional(a: MonomialIdeal) -> bool:
    """True iff the vanishing locus is at most the origin: each axis carries a
    pure-power generator."""
    _require_nonzero(a)
    if a.is_unit:
        return True
    for i in range(a.n):
        if not any(
            g[i] > 0 and all(g[j] == 0 for j in range(a.n) if j != i)
            for g in a.gens
        ):
            return False
    return True


def monomialize(gens) -> MonomialIdeal:
    """Reduce a list of polynomial generators to a monomial ideal when each
    generator is a monomial times a unit of the local ring at the origin.

    Each g factors as x^v * h with x^v the componentwise-gcd monomial of its
    support; the reduction is valid exactly when h(0) != 0, which holds iff v
    itself appears in the support of g.
    """
    gens = list(gens)
    if not gens:
        raise InputError("monomialize requires at least one generator")
    vecs = []
    for g in gens:
        if not isinstance(g, Poly):
            raise InputError("monomialize expects polynomials")
        if g.is_zero:
            raise InputError("monomialize rejects the zero polynomial")
        support = list(g.terms)
        v = tuple(min(s[i] for s in support) for i in range(g.n))
        if v not in g.terms:
            from .parsing import poly_to_string

            raise UnsupportedClassError(
                "generator does not reduce to a monomial near the origin: "
                f"{poly_to_string(g)}"
            )
        vecs.append(v)
    n = gens[0].n
    if any(g.n != n for g in gens):
        raise InputError("monomialize generators have mixed dimensions")
    return MonomialIdeal(n, vecs)
