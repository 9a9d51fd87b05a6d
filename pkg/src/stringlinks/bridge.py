"""Concrete Morse diagrams for symbolic letters.

A :class:`KnotRegistry` maps atom ids to diagrams: 1-strand long-knot words
for knot atoms, 2-strand words for generic letters.  From those the module
builds twist braids, split links (a knot tied into one strand), blackboard
doubles of knots (one-strand cables) and whole normal forms.
"""

from __future__ import annotations

import os
import re
from dataclasses import dataclass
from importlib import resources
from typing import Iterable, Mapping, Optional

from .errors import EmptyCompanion, ParseError, RegistryError, UnknownAtom, UnrealizableGeneric, ValidationError
from .invariants import total_writhe, two_ell
from .monoid import Generic, KnotWord, NormalForm, _knot
from .morse import Cap, Cup, MorseWord, X, empty, parse_morse, validate

__all__ = [
    "RegistryEntry", "KnotRegistry", "REGISTRY_ENV", "load_registry", "builtin_registry",
    "tau_diagram", "split_diagram", "knot_word", "cable_double", "cable_atom",
    "generic_diagram", "realize",
]

REGISTRY_ENV = "STRINGLINKS_REGISTRY"


@dataclass(frozen=True)
class RegistryEntry:
    id: str
    word: MorseWord
    writhe: int


@dataclass(frozen=True)
class KnotRegistry:
    entries: Mapping[str, RegistryEntry]

    def __post_init__(self):
        object.__setattr__(self, "entries", dict(self.entries))
        for e in self.entries.values():
            validate(e.word)
            got = total_writhe(e.word)
            if got != e.writhe:
                raise RegistryError(f"{e.id}: stored writhe {e.writhe} but the word has writhe {got}")

    def __contains__(self, atom: str) -> bool:
        return atom in self.entries

    def knot(self, atom: str) -> RegistryEntry:
        e = self.entries.get(atom)
        if e is None or e.word.n != 1:
            raise UnknownAtom(f"no knot registered as {atom!r}")
        return e

    def generic(self, atom: str) -> RegistryEntry:
        e = self.entries.get(atom)
        if e is None or e.word.n != 2:
            raise UnknownAtom(f"no 2-strand diagram registered as {atom!r}")
        return e

    @property
    def knots(self) -> tuple[str, ...]:
        return tuple(sorted(k for k, e in self.entries.items() if e.word.n == 1))

    @property
    def generics(self) -> tuple[str, ...]:
        return tuple(sorted(k for k, e in self.entries.items() if e.word.n == 2))


_LINE = re.compile(r"^\s*(?P<id>[A-Za-z0-9_]+)\s*:(?P<word>[^;]*;[^;]*);\s*writhe\s*=\s*(?P<w>[+-]?\d+)\s*$")


def parse_registry(text: str, source: str = "<registry>") -> KnotRegistry:
    entries: dict[str, RegistryEntry] = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        m = _LINE.match(line)
        if not m:
            raise RegistryError(f"{source}:{lineno}: expected '<atom-id> : n=<k>; <tokens> ; writhe=<int>'")
        atom = m.group("id")
        if atom in entries:
            raise RegistryError(f"{source}:{lineno}: duplicate atom {atom!r}")
        try:
            word = parse_morse(m.group("word"), line=lineno, column=m.start("word") + 1)
            validate(word)
        except (ParseError, ValidationError) as exc:
            raise RegistryError(f"{source}:{lineno}: {exc}") from exc
        if word.n not in (1, 2):
            raise RegistryError(f"{source}:{lineno}: atoms are 1-strand knots or 2-strand generic diagrams")
        stated = int(m.group("w"))
        if total_writhe(word) != stated:
            raise RegistryError(f"{source}:{lineno}: stated writhe {stated}, computed {total_writhe(word)}")
        entries[atom] = RegistryEntry(atom, word, stated)
    return KnotRegistry(entries)


def builtin_registry() -> KnotRegistry:
    text = resources.files("stringlinks").joinpath("data/registry.txt").read_text(encoding="utf-8")
    return parse_registry(text, "builtin")


def load_registry(path: Optional[str] = None) -> KnotRegistry:
    """Read ``path``, else ``$STRINGLINKS_REGISTRY``, else the built-in registry."""
    path = path or os.environ.get(REGISTRY_ENV)
    if not path:
        return builtin_registry()
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise RegistryError(f"{path}: {exc.strerror}") from exc
    return parse_registry(text, path)


# -- diagrams ----------------------------------------------------------------

def tau_diagram(k: int) -> MorseWord:
    s = 1 if k > 0 else -1
    return MorseWord(2, tuple(X(1, s) for _ in range(abs(k))))


def knot_word(K, reg: KnotRegistry) -> MorseWord:
    """The stacked 1-strand word of a knot multiset, atoms in sorted order."""
    events: list = []
    for atom in _knot(K):
        events += reg.knot(atom).word.events
    return MorseWord(1, tuple(events))


def _shift(events: Iterable, by: int) -> tuple:
    out = []
    for ev in events:
        if isinstance(ev, X):
            out.append(X(ev.position + by, ev.sign))
        else:
            out.append(type(ev)(ev.position + by))
    return tuple(out)


def split_diagram(strand: int, K, reg: KnotRegistry) -> MorseWord:
    if strand not in (1, 2):
        raise ValueError(f"strand must be 1 or 2, got {strand!r}")
    # Strand 2 sits to the right of strand 1, so its events shift by one slot;
    # strand 1's knot is drawn in slots 1.. with strand 2 pushed rightward.
    return MorseWord(2, _shift(knot_word(K, reg).events, strand - 1))


def cable_double(K, framing: int, reg: KnotRegistry) -> MorseWord:
    """Blackboard double of ``K``'s word, then ``framing`` full twists on top."""
    K = _knot(K)
    if K.is_unknot:
        raise EmptyCompanion("a cable needs a nonempty companion knot")
    events: list = []
    for ev in knot_word(K, reg).events:
        i = ev.position
        if isinstance(ev, X):
            events += [X(2 * i, ev.sign), X(2 * i - 1, ev.sign), X(2 * i + 1, ev.sign), X(2 * i, ev.sign)]
        elif isinstance(ev, Cup):
            events += [Cup(2 * i - 1), Cup(2 * i)]
        else:
            events += [Cap(2 * i), Cap(2 * i - 1)]
    events += tau_diagram(2 * framing).events
    return MorseWord(2, tuple(events))


def cable_atom(K, reg: KnotRegistry) -> MorseWord:
    """The cable with framing chosen so that its 2l vanishes."""
    return cable_double(K, -total_writhe(knot_word(K, reg)), reg)


def generic_diagram(g: Generic, reg: KnotRegistry) -> MorseWord:
    try:
        entry = reg.generic(g.id)
    except UnknownAtom as exc:
        raise UnrealizableGeneric(f"generic {g.id!r} has no registered diagram") from exc
    got = two_ell(entry.word)
    if got != g.two_ell:
        raise UnrealizableGeneric(f"generic {g.id!r} declares two_ell={g.two_ell}, its diagram has {got}")
    return entry.word


def realize(nf: NormalForm, reg: KnotRegistry) -> MorseWord:
    """Stack twist braid, splits on strand 1, splits on strand 2, cables, then generics.

    Generic diagrams already carry their own 2l, so the braid part is the
    twist minus those contributions and the result has 2l equal to ``nf.twist``.
    """
    parts = [tau_diagram(nf.twist - sum(g.two_ell for g in nf.generics))]
    parts.append(split_diagram(1, KnotWord(nf.split1), reg))
    parts.append(split_diagram(2, KnotWord(nf.split2), reg))
    parts += [cable_atom(KnotWord((a,)), reg) for a in nf.cable]
    parts += [generic_diagram(g, reg) for g in nf.generics]
    events: list = []
    for p in parts:
        events += p.events
    return MorseWord(2, tuple(events)) if events else empty(2)
