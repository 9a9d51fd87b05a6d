"""Exact integer invariants of Morse words.

Every crossing contributes its stored sign, flipped once for each strand
that the trace runs downward through it.  Summing those oriented signs over
crossings between two different components gives *twice* their linking
number; doubling keeps non-pure 2-string links (half-integer linking number)
in the integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import WrongStrandCount
from .morse import MorseWord, X, stack, validate


@dataclass(frozen=True)
class LinkingData:
    """``doubled_lk`` is keyed by ordered pairs ``(a, b)`` with ``a < b``."""

    doubled_lk: dict[tuple[int, int], int]
    writhe: dict[int, int]

    def lk2(self, a: int, b: int) -> int:
        return self.doubled_lk[(min(a, b), max(a, b))]


def linking_data(w: MorseWord) -> LinkingData:
    trace = validate(w)
    doubled = {pair: 0 for pair in combinations(range(1, w.n + 1), 2)}
    writhe = {c: 0 for c in range(1, w.n + 1)}
    for c in trace.crossings:
        a, b = c.left_component, c.right_component
        if a == b:
            writhe[a] += c.oriented_sign
        else:
            doubled[(min(a, b), max(a, b))] += c.oriented_sign
    return LinkingData(doubled, writhe)


def total_writhe(w: MorseWord) -> int:
    return sum(linking_data(w).writhe.values())


def _require_two(w: MorseWord):
    if w.n != 2:
        raise WrongStrandCount(f"2l is defined on 2-string links, got n={w.n}")


def two_ell(w: MorseWord) -> int:
    """Twice the linking number, extended to non-pure links through ``L # tau``."""
    _require_two(w)
    validate(w)
    return linking_data(w).lk2(1, 2)


def two_ell_via_tau(w: MorseWord) -> int:
    """The same homomorphism computed from its defining formulas (pure: 2lk; else 2lk(L#tau) - 1)."""
    _require_two(w)
    if validate(w).is_pure:
        return linking_data(w).lk2(1, 2)
    return linking_data(stack(w, MorseWord(2, (X(1, 1),)))).lk2(1, 2) - 1


@dataclass(frozen=True)
class TwistSplit:
    k: int
    note: str


def split_off_twist(w: MorseWord) -> TwistSplit:
    """Separate the braid factor: ``w`` stacked with ``tau^-k`` lies in the kernel of 2l."""
    k = two_ell(w)
    return TwistSplit(k, f"stack(w, tau^{-k}) has 2l = 0 and represents the linking-number-zero part")


def invariants_json(w: MorseWord) -> dict:
    data = linking_data(w)
    return {
        "doubled_lk": {f"{a},{b}": v for (a, b), v in sorted(data.doubled_lk.items())},
        "writhe": {str(c): v for c, v in sorted(data.writhe.items())},
        "two_ell": data.lk2(1, 2) if w.n == 2 else None,
    }
