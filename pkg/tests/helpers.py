"""Shared generators and independent oracles for the test suite."""

from __future__ import annotations

import itertools
import random

from stringlinks.monoid import Cable, Generic, Split, Twist
from stringlinks.morse import Cap, Cup, MorseWord, X


# -- random valid Morse words -------------------------------------------------

def random_morse(rng: random.Random, n: int, max_events: int = 30, cup_rate: float = 0.2) -> MorseWord:
    """A random valid ``n``-strand word with at most ``max_events`` events.

    Built constructively: every slot belongs to a piece, either a strand hanging
    from the bottom (one open end) or an arc opened by a cup (two open ends).
    A cap may only join two different pieces that are not both bottom strands.
    """
    piece = list(range(n))          # piece id per slot
    rooted = {p: True for p in range(n)}
    next_id = n
    events = []

    def can_cap(i):
        a, b = piece[i - 1], piece[i]
        return a != b and not (rooted[a] and rooted[b])

    def do_cap(i):
        a, b = piece[i - 1], piece[i]
        merged = rooted[a] or rooted[b]
        del piece[i - 1:i + 1]
        piece[:] = [a if p == b else p for p in piece]
        rooted[a] = merged
        events.append(Cap(i))

    def do_cross(i):
        piece[i - 1], piece[i] = piece[i], piece[i - 1]
        events.append(X(i, rng.choice((1, -1))))

    budget = max_events
    while len(events) < budget:
        width = len(piece)
        # reserve room to close every open arc
        if len(events) + 2 * (width - n) + 2 >= budget:
            break
        r = rng.random()
        if r < cup_rate:
            i = rng.randint(1, width + 1)
            piece[i - 1:i - 1] = [next_id, next_id]
            rooted[next_id] = False
            next_id += 1
            events.append(Cup(i))
        elif r < 2 * cup_rate and width > n:
            options = [i for i in range(1, width) if can_cap(i)]
            if options:
                do_cap(rng.choice(options))
        elif width >= 2:
            do_cross(rng.randint(1, width - 1))
    while len(piece) > n:
        options = [i for i in range(1, len(piece)) if can_cap(i)]
        if options:
            do_cap(rng.choice(options))
        else:
            # the two ends of one arc are adjacent: push one end past a neighbour
            i = next(i for i in range(1, len(piece)) if piece[i - 1] == piece[i] and not rooted[piece[i]])
            do_cross(i + 1 if i + 1 < len(piece) else i - 1)
    return MorseWord(n, tuple(events))


def random_braid(rng: random.Random, n: int, length: int) -> MorseWord:
    if n == 1:
        return MorseWord(1, ())
    return MorseWord(n, tuple(X(rng.randint(1, n - 1), rng.choice((1, -1))) for _ in range(length)))


# -- an independent tracer ----------------------------------------------------

def oracle_linking(w: MorseWord):
    """(doubled_lk dict, writhe dict, permutation) by walking strands slot by slot.

    Separate from the library tracer: it walks each component up and down
    between rows of slots until it reaches a top endpoint, noting at each
    crossing which side it passed on and in which direction.
    """
    # nodes are (height, slot); at each height the row of open slots
    width = w.n
    rows = []      # list of per-event records
    for ev in w.events:
        rows.append((ev, width))
        if isinstance(ev, Cup):
            width += 2
        elif isinstance(ev, Cap):
            width -= 2
    assert width == w.n

    def step_up(h, s):
        """Slot s just below event h -> (h+1, slot) above it, or a turn."""
        ev, _ = rows[h]
        p = ev.position
        if isinstance(ev, X):
            if s == p:
                return ("go", h + 1, p + 1, ("X", h, "left"))
            if s == p + 1:
                return ("go", h + 1, p, ("X", h, "right"))
            return ("go", h + 1, s, None)
        if isinstance(ev, Cup):
            return ("go", h + 1, s + 2 if s >= p else s, None)
        if s == p:
            return ("turn", h, p + 1, None)
        if s == p + 1:
            return ("turn", h, p, None)
        return ("go", h + 1, s - 2 if s > p + 1 else s, None)

    def step_down(h, s):
        """Slot s just above event h-1 -> below it, or a turn."""
        ev, _ = rows[h - 1]
        p = ev.position
        if isinstance(ev, X):
            if s == p + 1:
                return ("go", h - 1, p, ("X", h - 1, "left"))
            if s == p:
                return ("go", h - 1, p + 1, ("X", h - 1, "right"))
            return ("go", h - 1, s, None)
        if isinstance(ev, Cap):
            return ("go", h - 1, s + 2 if s >= p else s, None)
        if s == p:
            return ("turn", h, p + 1, None)
        if s == p + 1:
            return ("turn", h, p, None)
        return ("go", h - 1, s - 2 if s > p + 1 else s, None)

    top = len(rows)
    seen = {}      # (crossing index, side) -> (component, direction)
    perm = []
    for k in range(1, w.n + 1):
        h, s, up = 0, k, True
        guard = 0
        while not (up and h == top):
            guard += 1
            assert guard < 10_000
            kind, h2, s2, tag = step_up(h, s) if up else step_down(h, s)
            if tag:
                seen[(tag[1], tag[2])] = (k, 1 if up else -1)
            if kind == "turn":
                # a cap sends the walk back down, a cup back up; either way it
                # stays between the same two events
                h, s, up = h2, s2, not up
                continue
            h, s = h2, s2
            assert h >= 0, "a strand ran back to the bottom"
        perm.append(s)
    lk = {}
    writhe = {c: 0 for c in range(1, w.n + 1)}
    for a, b in itertools.combinations(range(1, w.n + 1), 2):
        lk[(a, b)] = 0
    for idx, (ev, _) in enumerate(rows):
        if not isinstance(ev, X):
            continue
        ca, da = seen[(idx, "left")]
        cb, db = seen[(idx, "right")]
        v = ev.sign * da * db
        if ca == cb:
            writhe[ca] += v
        else:
            lk[(min(ca, cb), max(ca, cb))] += v
    return lk, writhe, tuple(perm)


# -- symbolic corpus ------------------------------------------------------------

TREFOIL_SPLIT = Split(1, "trefoil")
FIG8_SPLIT = Split(2, "4_1")
TREFOIL_CABLE = Cable("trefoil")
W = Generic("W")
V = Generic("V", 1)
ATOMS = (TREFOIL_SPLIT, FIG8_SPLIT, TREFOIL_CABLE, W, V)
ALPHABET = (Twist(1), Twist(-1)) + ATOMS
CENTRAL_LETTERS = (Twist(1), Twist(-1), TREFOIL_SPLIT, FIG8_SPLIT, TREFOIL_CABLE)


def symbolic_corpus(max_len: int = 5, alphabet=ALPHABET):
    return [w for n in range(max_len + 1) for w in itertools.product(alphabet, repeat=n)]


# -- acceptance reporting ---------------------------------------------------------

ACCEPTANCE: dict[int, str] = {}


def report(number: int, title: str, ok: bool, detail: str = "") -> bool:
    line = f"criterion {number:>2} {'PASS' if ok else 'FAIL'}  {title}" + (f"  ({detail})" if detail else "")
    ACCEPTANCE[number] = line
    print(line)
    return ok
