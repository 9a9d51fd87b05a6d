"""The reduced free group RF(n) and the Artin action of braids on it.

Elements are modelled by their Magnus expansions ``x_i -> 1 + X_i`` in the
ring of non-commuting polynomials modulo every monomial that repeats an
index.  The truncation kills exactly the relations of RF(n) (each generator
commutes with its conjugates), and equality of elements is decided by
equality of these expansions.  That this model is faithful is a known
theorem, not something this module proves; ``tests/test_rfgroup.py``
checks it exhaustively against the Heisenberg group for n = 2.

A braid acts on RF(n) by sending each generator to a conjugate of a
generator: ``x_j -> w_j x_{p(j)} w_j^-1``.  The conjugators ``w_j`` carry the
Milnor invariants: the coefficient of ``X_{i1}...X_{ik}`` in ``w_j`` (for a
monomial avoiding ``j``) is mu(i1...ik; j).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Mapping, Optional, Sequence

from .errors import IndexOutOfRange, NotABraid, RankMismatch, RepeatedIndex
from .morse import MorseWord, is_syntactic_braid

Monomial = tuple[int, ...]


@lru_cache(maxsize=None)
def _mask(m: Monomial) -> int:
    out = 0
    for i in m:
        out |= 1 << i
    return out


def _sort_key(m: Monomial):
    return (len(m), m)


class ReducedSeries:
    """Integer combination of repeat-free monomials in ``X_1..X_n``."""

    __slots__ = ("n", "_c", "_hash")

    def __init__(self, n: int, coefficients: Mapping[Monomial, int] = ()):
        self.n = n
        c = {}
        for m, v in dict(coefficients).items():
            m = tuple(m)
            if len(set(m)) != len(m):
                raise RepeatedIndex(f"monomial {m} repeats an index")
            if any(not 1 <= i <= n for i in m):
                raise IndexOutOfRange(f"monomial {m} outside 1..{n}")
            if v:
                c[m] = v
        self._c = c
        self._hash = None

    @classmethod
    def _raw(cls, n: int, c: dict) -> "ReducedSeries":
        # Trusted construction: keys already repeat-free and in range.
        self = cls.__new__(cls)
        self.n = n
        self._c = {m: v for m, v in c.items() if v}
        self._hash = None
        return self

    @classmethod
    def one(cls, n: int) -> "ReducedSeries":
        return cls(n, {(): 1})

    @classmethod
    def generator(cls, n: int, i: int) -> "ReducedSeries":
        return cls(n, {(i,): 1})

    @property
    def coefficients(self) -> dict[Monomial, int]:
        return dict(self._c)

    def __getitem__(self, m: Sequence[int]) -> int:
        return self._c.get(tuple(m), 0)

    def items(self):
        return sorted(self._c.items(), key=lambda kv: _sort_key(kv[0]))

    def _check(self, other: "ReducedSeries"):
        if self.n != other.n:
            raise RankMismatch(f"RF({self.n}) vs RF({other.n})")

    def __eq__(self, other):
        if not isinstance(other, ReducedSeries):
            return NotImplemented
        return self.n == other.n and self._c == other._c

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, frozenset(self._c.items())))
        return self._hash

    def __add__(self, other):
        self._check(other)
        out = dict(self._c)
        for m, v in other._c.items():
            out[m] = out.get(m, 0) + v
        return ReducedSeries._raw(self.n, out)

    def __neg__(self):
        return ReducedSeries._raw(self.n, {m: -v for m, v in self._c.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        self._check(other)
        out: dict[Monomial, int] = {}
        right = [(m, _mask(m), v) for m, v in other._c.items()]
        for u, cu in self._c.items():
            mu = _mask(u)
            for v, mv, cv in right:
                if mu & mv:
                    continue
                key = u + v
                out[key] = out.get(key, 0) + cu * cv
        return ReducedSeries._raw(self.n, out)

    def __repr__(self):
        if not self._c:
            return "0"
        parts = []
        for m, v in self.items():
            mono = "".join(f"X{i}" for i in m) or "1"
            parts.append(f"{v}*{mono}" if m and v != 1 else (mono if v == 1 else str(v)))
        return " + ".join(parts)

    @property
    def constant(self) -> int:
        return self._c.get((), 0)

    def inverse(self) -> "ReducedSeries":
        """Inverse of a series with constant term 1 (geometric series, finite after truncation)."""
        if self.constant != 1:
            raise ValueError("only series with constant term 1 are invertible here")
        nil = self - ReducedSeries.one(self.n)
        out = ReducedSeries.one(self.n)
        power = ReducedSeries.one(self.n)
        for k in range(1, self.n + 1):
            power = power * nil
            if not power._c:
                break
            out = out + power if k % 2 == 0 else out - power
        return out


@dataclass(frozen=True, eq=False)
class RFElement:
    """A group element; ``witness`` is a signed generator word kept for debugging."""

    series: ReducedSeries
    witness: Optional[tuple[int, ...]] = None

    def __post_init__(self):
        if self.series.constant != 1:
            raise ValueError("RF(n) elements have constant coefficient 1")

    @property
    def n(self) -> int:
        return self.series.n

    def __eq__(self, other):
        if not isinstance(other, RFElement):
            return NotImplemented
        return self.series == other.series

    def __hash__(self):
        return hash(self.series)

    def __mul__(self, other):
        return rf_multiply(self, other)

    def __repr__(self):
        return f"RFElement({self.series!r})"


def identity(n: int) -> RFElement:
    return RFElement(ReducedSeries.one(n), ())


def _check_word(word: Iterable[int], n: int) -> tuple[int, ...]:
    word = tuple(word)
    for g in word:
        if g == 0 or abs(g) > n:
            raise IndexOutOfRange(f"generator {g} outside +-1..{n}")
    return word


def magnus_expand(word: Iterable[int], n: int) -> RFElement:
    """Expansion of a word in signed generator indices (``-i`` is ``x_i^-1``)."""
    word = _check_word(word, n)
    out = ReducedSeries.one(n)
    for g in word:
        i = abs(g)
        out = out * ReducedSeries(n, {(): 1, (i,): 1 if g > 0 else -1})
    return RFElement(out, word)


def rf_multiply(a: RFElement, b: RFElement) -> RFElement:
    if a.n != b.n:
        raise RankMismatch(f"RF({a.n}) vs RF({b.n})")
    w = a.witness + b.witness if a.witness is not None and b.witness is not None else None
    return RFElement(a.series * b.series, w)


def rf_inverse(a: RFElement) -> RFElement:
    w = tuple(-g for g in reversed(a.witness)) if a.witness is not None else None
    return RFElement(a.series.inverse(), w)


def rf_equal(a: RFElement, b: RFElement) -> bool:
    if a.n != b.n:
        raise RankMismatch(f"RF({a.n}) vs RF({b.n})")
    return a.series == b.series


def rf_commutator(a: RFElement, b: RFElement) -> RFElement:
    return a * b * rf_inverse(a) * rf_inverse(b)


def free_reduce(word: Iterable[int]) -> tuple[int, ...]:
    out: list[int] = []
    for g in word:
        if out and out[-1] == -g:
            out.pop()
        else:
            out.append(g)
    return tuple(out)


# -- automorphisms -----------------------------------------------------------

@dataclass(frozen=True, eq=False)
class RFAutomorphism:
    """``x_j -> conjugators[j-1] * x_{permutation[j-1]} * conjugators[j-1]^-1``."""

    n: int
    permutation: tuple[int, ...]
    conjugators: tuple[RFElement, ...]

    def image_series(self, j: int) -> ReducedSeries:
        w = self.conjugators[j - 1].series
        return w * ReducedSeries.generator(self.n, self.permutation[j - 1]) * w.inverse() + ReducedSeries.one(self.n)

    def images(self) -> tuple[ReducedSeries, ...]:
        return tuple(self.image_series(j) for j in range(1, self.n + 1))

    def apply(self, s: ReducedSeries) -> ReducedSeries:
        """Extend the automorphism to the truncated Magnus ring and apply it."""
        if s.n != self.n:
            raise RankMismatch(f"RF({s.n}) vs RF({self.n})")
        one = ReducedSeries.one(self.n)
        ys = {j: img - one for j, img in enumerate(self.images(), start=1)}
        prod: dict[Monomial, ReducedSeries] = {(): one}
        out = ReducedSeries(self.n)
        for m, c in sorted(s.coefficients.items(), key=lambda kv: _sort_key(kv[0])):
            for k in range(1, len(m) + 1):
                if m[:k] not in prod:
                    prod[m[:k]] = prod[m[:k - 1]] * ys[m[k - 1]]
            out = out + ReducedSeries._raw(self.n, {mm: c * v for mm, v in prod[m]._c.items()})
        return out

    def apply_element(self, a: RFElement) -> RFElement:
        return RFElement(self.apply(a.series))

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "permutation": list(self.permutation),
            "conjugators": [
                [{"monomial": ",".join(map(str, m)), "coeff": v} for m, v in w.series.items()]
                for w in self.conjugators
            ],
        }


def identity_auto(n: int) -> RFAutomorphism:
    return RFAutomorphism(n, tuple(range(1, n + 1)), tuple(identity(n) for _ in range(n)))


def generator_auto(n: int, i: int, sign: int) -> RFAutomorphism:
    """``sigma_i``: ``x_i -> x_i x_{i+1} x_i^-1``, ``x_{i+1} -> x_i``; ``sign=-1`` gives the inverse."""
    if not 1 <= i < n:
        raise IndexOutOfRange(f"sigma_{i} needs 1 <= i < n = {n}")
    perm = list(range(1, n + 1))
    conj = [identity(n) for _ in range(n)]
    perm[i - 1], perm[i] = i + 1, i
    if sign > 0:
        conj[i - 1] = magnus_expand((i,), n)
    else:
        conj[i] = magnus_expand((-(i + 1),), n)
    return RFAutomorphism(n, tuple(perm), tuple(conj))


def compose_autos(f: RFAutomorphism, g: RFAutomorphism) -> RFAutomorphism:
    """Substitute ``g``'s generator images into ``f``'s: the automorphism of ``f``-then-``g`` stacking."""
    if f.n != g.n:
        raise RankMismatch(f"RF({f.n}) vs RF({g.n})")
    perm, conj = [], []
    for j in range(1, f.n + 1):
        p = f.permutation[j - 1]
        conj.append(RFElement(g.apply(f.conjugators[j - 1].series) * g.conjugators[p - 1].series))
        perm.append(g.permutation[p - 1])
    return RFAutomorphism(f.n, tuple(perm), tuple(conj))


def autos_equal(f: RFAutomorphism, g: RFAutomorphism) -> bool:
    if f.n != g.n:
        raise RankMismatch(f"RF({f.n}) vs RF({g.n})")
    return f.permutation == g.permutation and f.images() == g.images()


def braid_generators(b: MorseWord) -> tuple[int, ...]:
    """Signed Artin generator indices of a syntactic braid (``X(i, s)`` is ``sigma_i^s``)."""
    if not is_syntactic_braid(b):
        raise NotABraid("word contains cups or caps")
    return tuple(ev.position * ev.sign for ev in b.events)


def artin_automorphism(b: MorseWord, n: Optional[int] = None) -> RFAutomorphism:
    if n is not None and n != b.n:
        raise RankMismatch(f"braid on {b.n} strands, asked for RF({n})")
    out = identity_auto(b.n)
    for g in braid_generators(b):
        out = compose_autos(out, generator_auto(b.n, abs(g), 1 if g > 0 else -1))
    return out


def milnor(b: MorseWord, indices: Sequence[int], j: int) -> int:
    indices = tuple(indices)
    for i in indices + (j,):
        if not 1 <= i <= b.n:
            raise IndexOutOfRange(f"index {i} outside 1..{b.n}")
    if len(set(indices)) != len(indices) or j in indices:
        raise RepeatedIndex(f"indices {indices} with strand {j} repeat")
    return artin_automorphism(b).conjugators[j - 1].series[indices]


def braids_link_homotopic(b1: MorseWord, b2: MorseWord) -> bool:
    if b1.n != b2.n:
        raise RankMismatch(f"{b1.n}-strand vs {b2.n}-strand braid")
    return autos_equal(artin_automorphism(b1), artin_automorphism(b2))
