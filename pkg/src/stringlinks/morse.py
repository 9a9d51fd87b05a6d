"""Morse words: string-link diagrams as sequences of crossing, cup and cap events.

A diagram is read bottom to top.  At every height the diagram meets a row of
``width`` slots numbered from 1 on the left.  ``X(i, s)`` exchanges slots
``i`` and ``i+1``; the stored sign ``s`` is the crossing sign the crossing
would have if both strands ran upward (right-handed is +1).  ``Cup(i)``
opens two new slots at ``i`` and ``i+1`` (higher slots shift right by two) and
``Cap(i)`` closes slots ``i`` and ``i+1`` (higher slots shift left by two).

Events carry no strand identity.  Everything about components, endpoints and
orientation is recovered by :func:`validate`, which is the only tracer.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Union

from .errors import (
    ClosedComponent,
    EndpointCount,
    ParseError,
    StrandMismatch,
    WidthError,
)

__all__ = [
    "X", "Cup", "Cap", "Event", "MorseWord", "Crossing", "StrandTrace",
    "validate", "stack", "is_syntactic_braid", "reverse", "empty",
    "parse_morse", "format_morse",
]


@dataclass(frozen=True)
class X:
    position: int
    sign: int

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError(f"crossing sign must be +1 or -1, got {self.sign!r}")


@dataclass(frozen=True)
class Cup:
    position: int


@dataclass(frozen=True)
class Cap:
    position: int


Event = Union[X, Cup, Cap]


@dataclass(frozen=True)
class MorseWord:
    """An ``n``-strand diagram.  Equality is literal event-sequence equality."""

    n: int
    events: tuple[Event, ...] = ()

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise ValueError(f"strand count must be a positive integer, got {self.n!r}")
        object.__setattr__(self, "events", tuple(self.events))
        for ev in self.events:
            if not isinstance(ev, (X, Cup, Cap)):
                raise TypeError(f"not a Morse event: {ev!r}")

    def __str__(self):
        return format_morse(self)

    def __len__(self):
        return len(self.events)


def empty(n: int = 2) -> MorseWord:
    return MorseWord(n, ())


@dataclass(frozen=True)
class Crossing:
    """One crossing seen through the trace.

    ``left`` is the strand entering the crossing from slot ``i`` (it leaves at
    slot ``i+1``); ``right`` enters from slot ``i+1``.  Directions are +1 when
    the component traverses that strand upward.
    """

    event_index: int
    sign: int
    left_component: int
    right_component: int
    left_direction: int
    right_direction: int

    @property
    def oriented_sign(self) -> int:
        return self.sign * self.left_direction * self.right_direction


@dataclass(frozen=True)
class StrandTrace:
    """Result of tracing a valid word.

    Components are numbered by the bottom slot they start from.  Edges are the
    strand segments between consecutive events, numbered in creation order.
    ``endpoint_permutation[k-1]`` is the top slot reached from bottom slot ``k``.
    """

    n: int
    component_of_edge: dict[int, int]
    endpoint_permutation: tuple[int, ...]
    edge_direction: dict[int, int]
    crossings: tuple[Crossing, ...] = field(default=())

    @property
    def is_pure(self) -> bool:
        return self.endpoint_permutation == tuple(range(1, self.n + 1))

    @property
    def components(self) -> tuple[int, ...]:
        return tuple(range(1, self.n + 1))


# Edge-end labels used while tracing.
_LO, _HI = 0, 1
_BOTTOM, _TOP = "bottom", "top"


def validate(w: MorseWord) -> StrandTrace:
    """Trace ``w``; return its :class:`StrandTrace` or raise a ValidationError.

    Width problems are reported first, then closed loops, then components
    with the wrong number of boundary endpoints.
    """
    link: dict[tuple[int, int], tuple] = {}
    slots: list[int] = []
    next_edge = 0

    def new_edge():
        nonlocal next_edge
        next_edge += 1
        return next_edge - 1

    def join(p, q):
        link[p] = q
        link[q] = p

    for k in range(1, w.n + 1):
        e = new_edge()
        link[(e, _LO)] = (_BOTTOM, k)
        slots.append(e)

    raw_crossings = []
    for idx, ev in enumerate(w.events):
        width = len(slots)
        i = ev.position
        if isinstance(ev, Cup):
            if not 1 <= i <= width + 1:
                raise WidthError(f"event {idx} cup{i}: needs 1 <= {i} <= width+1 = {width + 1}")
            c1, c2 = new_edge(), new_edge()
            join((c1, _LO), (c2, _LO))
            slots[i - 1:i - 1] = [c1, c2]
            continue
        if i < 1 or width < i + 1:
            raise WidthError(f"event {idx} {_token(ev)}: needs width >= {i + 1}, width is {width}")
        a, b = slots[i - 1], slots[i]
        if isinstance(ev, X):
            b_up, a_up = new_edge(), new_edge()
            join((a, _HI), (a_up, _LO))
            join((b, _HI), (b_up, _LO))
            slots[i - 1], slots[i] = b_up, a_up
            raw_crossings.append((idx, ev.sign, a, b))
        else:
            join((a, _HI), (b, _HI))
            del slots[i - 1:i + 1]

    if len(slots) != w.n:
        raise WidthError(f"final width {len(slots)} != strand count {w.n}")
    for k, e in enumerate(slots, start=1):
        link[(e, _HI)] = (_TOP, k)

    component: dict[int, int] = {}
    direction: dict[int, int] = {}
    ends: dict[int, tuple] = {}
    for k in range(1, w.n + 1):
        e, enter = k - 1, _LO
        while True:
            component[e] = k
            direction[e] = 1 if enter == _LO else -1
            nxt = link[(e, 1 - enter)]
            if nxt[0] in (_BOTTOM, _TOP):
                ends[k] = nxt
                break
            e, enter = nxt

    unvisited = set(range(next_edge)) - component.keys()
    if unvisited:
        # An unvisited edge either lies on a loop or on a top-to-top arc.
        touches_top = {e for e in unvisited if link.get((e, _HI), ("",))[0] == _TOP}
        loop_edges = _closed_loop_edges(unvisited, link)
        if loop_edges:
            raise ClosedComponent(f"closed loop through edges {sorted(loop_edges)[:6]}")
        raise EndpointCount(f"a component has two top endpoints (edges {sorted(touches_top)})")

    perm = []
    for k in range(1, w.n + 1):
        kind, slot = ends[k]
        if kind != _TOP:
            raise EndpointCount(f"component starting at bottom slot {k} returns to bottom slot {slot}")
        perm.append(slot)

    crossings = tuple(
        Crossing(idx, sign, component[a], component[b], direction[a], direction[b])
        for idx, sign, a, b in raw_crossings
    )
    return StrandTrace(w.n, component, tuple(perm), direction, crossings)


def _closed_loop_edges(edges, link):
    """Edges (among ``edges``) whose connected piece never reaches the boundary."""
    seen, loops = set(), set()
    for start in edges:
        if start in seen:
            continue
        piece, stack_, boundary = set(), [start], False
        while stack_:
            e = stack_.pop()
            if e in piece:
                continue
            piece.add(e)
            for end in (_LO, _HI):
                nxt = link[(e, end)]
                if nxt[0] in (_BOTTOM, _TOP):
                    boundary = True
                else:
                    stack_.append(nxt[0])
        seen |= piece
        if not boundary:
            loops |= piece
    return loops


def stack(a: MorseWord, b: MorseWord) -> MorseWord:
    """``a`` below ``b``."""
    if a.n != b.n:
        raise StrandMismatch(f"cannot stack a {a.n}-strand word on a {b.n}-strand word")
    validate(a)
    validate(b)
    return MorseWord(a.n, a.events + b.events)


def is_syntactic_braid(w: MorseWord) -> bool:
    validate(w)
    return all(isinstance(ev, X) for ev in w.events)


def reverse(w: MorseWord) -> MorseWord:
    """Turn the diagram upside down: reversed events, cups and caps exchanged, signs negated.

    For braid words this is the inverse braid.
    """
    out = []
    for ev in reversed(w.events):
        if isinstance(ev, X):
            out.append(X(ev.position, -ev.sign))
        elif isinstance(ev, Cup):
            out.append(Cap(ev.position))
        else:
            out.append(Cup(ev.position))
    return MorseWord(w.n, tuple(out))


# -- text format -------------------------------------------------------------

_HEADER = re.compile(r"\s*n\s*=\s*(\d+)\s*;")
_TOKEN = re.compile(r"x([+-])(\d+)|cup(\d+)|cap(\d+)")


def _token(ev: Event) -> str:
    if isinstance(ev, X):
        return f"x{'+' if ev.sign > 0 else '-'}{ev.position}"
    if isinstance(ev, Cup):
        return f"cup{ev.position}"
    return f"cap{ev.position}"


def format_morse(w: MorseWord) -> str:
    body = " ".join(_token(ev) for ev in w.events)
    return f"n={w.n};" + (f" {body}" if body else "")


def parse_morse(text: str, line: int = 1, column: int = 1) -> MorseWord:
    """Parse ``n=<k>; tok tok ...``.  ``line``/``column`` offset reported positions."""
    m = _HEADER.match(text)
    if not m:
        lead = len(text) - len(text.lstrip())
        raise ParseError("missing header", *_locate(text, lead, line, column), expected=["n=<k>;"])
    n = int(m.group(1))
    if n < 1:
        raise ParseError("strand count must be positive", *_locate(text, m.start(1), line, column))
    events = []
    pos = m.end()
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos >= len(text):
            break
        tm = _TOKEN.match(text, pos)
        end = tm.end() if tm else pos
        if not tm or (end < len(text) and not text[end].isspace()):
            raise ParseError(
                f"bad Morse token {text[pos:].split()[0]!r}",
                *_locate(text, pos, line, column),
                expected=["x+<i>", "x-<i>", "cup<i>", "cap<i>"],
            )
        sign, xpos, cup, cap = tm.groups()
        if sign is not None:
            events.append(X(int(xpos), 1 if sign == "+" else -1))
        elif cup is not None:
            events.append(Cup(int(cup)))
        else:
            events.append(Cap(int(cap)))
        pos = end
    return MorseWord(n, tuple(events))


def _locate(text, offset, line, column):
    before = text[:offset]
    nl = before.count("\n")
    if nl:
        return line + nl, offset - before.rfind("\n")
    return line, column + offset
