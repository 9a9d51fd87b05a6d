"""The symbolic monoid of 2-string links.

Words are stackings of typed prime letters:

* ``Twist(k)``: the braid ``tau^k``; units, central.
* ``Split(s, K)``: strand ``s`` tied in the knot ``K``, the other strand bare.
* ``Cable(K)``: both strands run as a braid through a tube knotted as ``K``.
* ``Generic(id, two_ell)``: any other prime, declared by name.

Knots are multisets of prime knot names (the free commutative monoid of
knots under connected sum), so ``Split(1, trefoil # 4_1)`` flattens to
``Split(1, trefoil) # Split(1, 4_1)``.  Split and cable letters are central,
generic letters with different names never commute, and the normal form is
``(twist, split1, split2, cable, generics)``: one integer, three sorted
multisets and an ordered sequence.  Two words are equal links exactly when
their normal forms agree, and braid-equivalent when they agree after
forgetting the twist.

Modelling choices worth knowing:

* Atoms stand for braid-equivalence classes of primes; the braid content of
  a word is carried entirely by the twist integer, to which each generic
  letter adds its declared ``two_ell``.
* ``Cable(K1 # K2)`` is taken to be ``Cable(K1) # Cable(K2)``.
* Only the 2-strand monoid is modelled.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from typing import Callable, Collection, Iterable, Optional, Sequence, Union

from .errors import BoundExceeded, MalformedCable

__all__ = [
    "KnotWord", "Twist", "Split", "Cable", "Generic", "Letter", "NormalForm",
    "normalize", "links_equal", "braid_equivalent", "is_central", "commutes",
    "symbolic_invariants", "SymbolicInvariants", "neighbors", "rewrite_closure",
    "within_distance", "rewrite_distances",
]


@dataclass(frozen=True)
class KnotWord:
    """A multiset of prime knot names; the empty multiset is the unknot."""

    atoms: tuple[str, ...] = ()

    def __post_init__(self):
        atoms = tuple(sorted(self.atoms))
        for a in atoms:
            if not isinstance(a, str) or not a:
                raise ValueError(f"knot atom ids are nonempty strings, got {a!r}")
        object.__setattr__(self, "atoms", atoms)

    @classmethod
    def of(cls, *atoms: str) -> "KnotWord":
        return cls(tuple(atoms))

    def __add__(self, other: "KnotWord") -> "KnotWord":
        return KnotWord(self.atoms + other.atoms)

    def __len__(self):
        return len(self.atoms)

    def __iter__(self):
        return iter(self.atoms)

    @property
    def is_unknot(self) -> bool:
        return not self.atoms

    def __str__(self):
        return " # ".join(self.atoms) if self.atoms else "unknot"


def _knot(k) -> KnotWord:
    if isinstance(k, KnotWord):
        return k
    if isinstance(k, str):
        return KnotWord((k,))
    return KnotWord(tuple(k))


@dataclass(frozen=True)
class Twist:
    k: int = 1


@dataclass(frozen=True)
class Split:
    strand: int
    knot: KnotWord

    def __post_init__(self):
        if self.strand not in (1, 2):
            raise ValueError(f"split strand must be 1 or 2, got {self.strand!r}")
        object.__setattr__(self, "knot", _knot(self.knot))


@dataclass(frozen=True)
class Cable:
    knot: KnotWord

    def __post_init__(self):
        object.__setattr__(self, "knot", _knot(self.knot))


@dataclass(frozen=True)
class Generic:
    """A non-central prime.  Odd ``two_ell`` means the strands swap, so ``pure`` follows from it."""

    id: str
    two_ell: int = 0
    pure: bool = None  # type: ignore[assignment]

    def __post_init__(self):
        if not isinstance(self.id, str) or not self.id:
            raise ValueError("generic atoms need a nonempty id")
        if self.two_ell not in (0, 1):
            raise ValueError(f"generic two_ell must be 0 or 1, got {self.two_ell!r}")
        parity_pure = self.two_ell == 0
        if self.pure is None:
            object.__setattr__(self, "pure", parity_pure)
        elif self.pure != parity_pure:
            raise ValueError(f"generic {self.id}: two_ell={self.two_ell} forces pure={parity_pure}")


Letter = Union[Twist, Split, Cable, Generic]
SymbolicWord = tuple  # tuple[Letter, ...]


def is_central(letter: Letter) -> bool:
    return not isinstance(letter, Generic)


def commutes(a: Letter, b: Letter) -> bool:
    return is_central(a) or is_central(b) or a == b


@dataclass(frozen=True)
class NormalForm:
    twist: int = 0
    split1: tuple[str, ...] = ()
    split2: tuple[str, ...] = ()
    cable: tuple[str, ...] = ()
    generics: tuple[Generic, ...] = ()

    def braid_class(self) -> tuple:
        """Everything except the twist: the braid-equivalence class."""
        return (self.split1, self.split2, self.cable, self.generics)

    @property
    def is_pure(self) -> bool:
        return self.twist % 2 == 0

    def letters(self) -> tuple[Letter, ...]:
        """A word whose normal form is this one: twist, split1, split2, cable, generics."""
        out: list[Letter] = []
        bare = self.twist - sum(g.two_ell for g in self.generics)
        if bare:
            out.append(Twist(bare))
        out += [Split(1, KnotWord((a,))) for a in self.split1]
        out += [Split(2, KnotWord((a,))) for a in self.split2]
        out += [Cable(KnotWord((a,))) for a in self.cable]
        out += list(self.generics)
        return tuple(out)

    def to_json(self) -> dict:
        return {
            "twist": self.twist,
            "split1": list(self.split1),
            "split2": list(self.split2),
            "cable": list(self.cable),
            "generics": [{"id": g.id, "two_ell": g.two_ell, "pure": g.pure} for g in self.generics],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)


def normalize(word: Iterable[Letter]) -> NormalForm:
    twist = 0
    parts: dict[str, list[str]] = {"split1": [], "split2": [], "cable": []}
    generics: list[Generic] = []
    for letter in word:
        if isinstance(letter, Twist):
            twist += letter.k
        elif isinstance(letter, Split):
            parts[f"split{letter.strand}"].extend(letter.knot.atoms)
        elif isinstance(letter, Cable):
            if letter.knot.is_unknot:
                raise MalformedCable("a cable around the unknot is not a prime factor")
            parts["cable"].extend(letter.knot.atoms)
        elif isinstance(letter, Generic):
            twist += letter.two_ell
            generics.append(letter)
        else:
            raise TypeError(f"not a symbolic letter: {letter!r}")
    return NormalForm(
        twist,
        tuple(sorted(parts["split1"])),
        tuple(sorted(parts["split2"])),
        tuple(sorted(parts["cable"])),
        tuple(generics),
    )


def links_equal(a: Iterable[Letter], b: Iterable[Letter]) -> bool:
    return normalize(a) == normalize(b)


def braid_equivalent(a: Iterable[Letter], b: Iterable[Letter]) -> bool:
    return normalize(a).braid_class() == normalize(b).braid_class()


@dataclass(frozen=True)
class SymbolicInvariants:
    two_ell: int
    pure: bool


def symbolic_invariants(word: Iterable[Letter]) -> SymbolicInvariants:
    nf = normalize(word)
    return SymbolicInvariants(nf.twist, nf.is_pure)


# -- rewriting oracle --------------------------------------------------------
#
# Single-step moves, each one undone by another single move:
#   * slide a central letter to any other position (it commutes with every
#     letter it passes, so this is a run of commuting swaps taken at once);
#   * merge adjacent twists when one of them is a unit twist, or split a
#     twist off a unit twist on either side;
#   * insert or delete Twist(0), and trade Split(s, unknot) for Twist(0);
#   * flatten a composite knot letter into two adjacent letters, or fuse two
#     adjacent nonempty letters of the same kind.
# Every move preserves the normal form.

def _sub_multisets(atoms: tuple[str, ...]):
    """Ordered pairs (A, B) of nonempty complementary sub-multisets."""
    counts = Counter(atoms)
    keys = sorted(counts)
    seen = set()

    def rec(i, chosen):
        if i == len(keys):
            yield tuple(chosen)
            return
        for c in range(counts[keys[i]] + 1):
            yield from rec(i + 1, chosen + [keys[i]] * c)

    for a in rec(0, []):
        b = list(atoms)
        for x in a:
            b.remove(x)
        if a and b and a not in seen:
            seen.add(a)
            yield KnotWord(a), KnotWord(tuple(b))


def _with_knot(letter, knot):
    return Split(letter.strand, knot) if isinstance(letter, Split) else Cable(knot)


def _same_kind(a, b) -> bool:
    if isinstance(a, Split) and isinstance(b, Split):
        return a.strand == b.strand
    return isinstance(a, Cable) and isinstance(b, Cable)


def neighbors(word: Sequence[Letter]) -> set[tuple[Letter, ...]]:
    w = tuple(word)
    out: set[tuple[Letter, ...]] = set()
    n = len(w)
    for i, a in enumerate(w):
        if is_central(a):
            rest = w[:i] + w[i + 1:]
            for j in range(n):
                if j != i:
                    out.add(rest[:j] + (a,) + rest[j:])
    for i in range(n - 1):
        a, b = w[i], w[i + 1]
        if isinstance(a, Twist) and isinstance(b, Twist) and (abs(a.k) == 1 or abs(b.k) == 1):
            out.add(w[:i] + (Twist(a.k + b.k),) + w[i + 2:])
        if _same_kind(a, b) and not a.knot.is_unknot and not b.knot.is_unknot:
            out.add(w[:i] + (_with_knot(a, a.knot + b.knot),) + w[i + 2:])
    for i, a in enumerate(w):
        if isinstance(a, Twist):
            for s in (1, -1):
                out.add(w[:i] + (Twist(s), Twist(a.k - s)) + w[i + 1:])
                out.add(w[:i] + (Twist(a.k - s), Twist(s)) + w[i + 1:])
            if a.k == 0:
                out.add(w[:i] + w[i + 1:])
                out.add(w[:i] + (Split(1, KnotWord()),) + w[i + 1:])
                out.add(w[:i] + (Split(2, KnotWord()),) + w[i + 1:])
        elif isinstance(a, (Split, Cable)):
            if isinstance(a, Split) and a.knot.is_unknot:
                out.add(w[:i] + (Twist(0),) + w[i + 1:])
            if len(a.knot) >= 2:
                for k1, k2 in _sub_multisets(a.knot.atoms):
                    out.add(w[:i] + (_with_knot(a, k1), _with_knot(a, k2)) + w[i + 1:])
    for i in range(n + 1):
        out.add(w[:i] + (Twist(0),) + w[i:])
    out.discard(w)
    return out


def rewrite_distances(
    word: Sequence[Letter],
    depth: int,
    max_states: int = 200_000,
    keep: Optional[Callable[[tuple], bool]] = None,
    targets: Optional[Collection[tuple]] = None,
) -> dict[tuple, int]:
    """Breadth-first move distances from ``word``, up to ``depth`` moves.

    ``keep`` prunes the search to words it accepts, so the result is then the
    closure inside that sub-graph (a subset of the full closure).  With
    ``targets``, the search stops early once every target has been reached.
    Raises :class:`BoundExceeded` rather than returning a truncated set when
    more than ``max_states`` words are reached.
    """
    start = tuple(word)
    dist = {start: 0}
    frontier = [start]
    missing = None if targets is None else set(targets) - {start}
    for d in range(1, depth + 1):
        if not frontier or missing == set():
            break
        nxt = []
        for w in frontier:
            for v in neighbors(w):
                if v not in dist and (keep is None or keep(v)):
                    dist[v] = d
                    nxt.append(v)
                    if missing:
                        missing.discard(v)
        if len(dist) > max_states:
            raise BoundExceeded(f"closure passed {max_states} words")
        frontier = nxt
    return dist


def rewrite_closure(
    word: Sequence[Letter],
    depth: int,
    max_states: int = 200_000,
    keep: Optional[Callable[[tuple], bool]] = None,
) -> frozenset:
    """All words reachable from ``word`` in at most ``depth`` moves."""
    return frozenset(rewrite_distances(word, depth, max_states, keep))


def within_distance(
    a: Sequence[Letter],
    b: Sequence[Letter],
    depth: int,
    max_states: int = 200_000,
    keep: Optional[Callable[[tuple], bool]] = None,
) -> bool:
    """``tuple(b) in rewrite_closure(a, depth)``, decided by meeting in the middle.

    Valid because every move is undone by a single move, so distance is symmetric.
    """
    half = depth // 2
    left = rewrite_closure(a, depth - half, max_states, keep)
    if tuple(b) in left:
        return True
    right = rewrite_closure(b, half, max_states, keep)
    return not left.isdisjoint(right)
