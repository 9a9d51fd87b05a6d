import random

import pytest
from hypothesis import given, settings, strategies as st

from helpers import random_morse
from stringlinks.errors import LayerError, NotInvertible, ParseError, StrandMismatch
from stringlinks.expr import (
    MorseLiteral, Power, Stack, Symbolic, evaluate, format_expression, format_word, parse_expression,
)
from stringlinks.monoid import Cable, Generic, KnotWord, Split, Twist, normalize
from stringlinks.morse import MorseWord, X, parse_morse

KNOTS = ["trefoil", "4_1", "unknot", "5_2", "K9"]
IDS = ["W", "V", "clasp", "G_2"]


def random_expression(rng: random.Random, depth: int = 4):
    r = rng.random()
    if depth == 0 or r < 0.35:
        kind = rng.randrange(6)
        if kind == 0:
            return Symbolic((Twist(1),))
        if kind in (1, 2):
            knot = KnotWord(tuple(k for k in rng.choices(KNOTS, k=rng.randint(1, 3)) if k != "unknot"))
            return Symbolic((Split(kind, knot),))
        if kind == 3:
            return Symbolic((Cable(KnotWord(tuple(rng.choices(KNOTS[:2], k=rng.randint(1, 2))))),))
        if kind == 4:
            return Symbolic((Generic(rng.choice(IDS), rng.randint(0, 1)),))
        return MorseLiteral(random_morse(rng, rng.randint(1, 3), 10))
    if r < 0.7:
        return Stack(random_expression(rng, depth - 1), random_expression(rng, depth - 1))
    return Power(random_expression(rng, depth - 1), rng.randint(-4, 6))


def scramble(rng, text):
    """Vary whitespace without touching tokens."""
    out = []
    for ch in text:
        if ch == " ":
            out.append(rng.choice([" ", "  ", "\n", "\t "]))
        elif ch in "#()^," and rng.random() < 0.3:
            out.append(f" {ch} " if ch not in "^" else ch)
        else:
            out.append(ch)
    return "".join(out)


def test_round_trip_corpus():
    rng = random.Random(20260101)
    mismatches = 0
    for _ in range(1000):
        e = random_expression(rng)
        text = format_expression(e)
        back = parse_expression(text)
        mismatches += back != e or format_expression(back) != text
        mismatches += parse_expression(scramble(rng, text)) != e
    assert mismatches == 0


def test_grammar_examples():
    assert parse_expression("tau^3") == Power(Symbolic((Twist(1),)), 3)
    assert normalize(evaluate(parse_expression("tau^3"))).twist == 3
    e = parse_expression("split1(trefoil) # cable(trefoil)")
    assert evaluate(e) == (Split(1, "trefoil"), Cable("trefoil"))
    assert parse_expression("[n=2; x+1 x+1]") == MorseLiteral(MorseWord(2, (X(1, 1), X(1, 1))))
    e = parse_expression("tau^3 # split1(trefoil # 4_1) # cable(trefoil) # generic(W)")
    assert len(evaluate(e)) == 6
    assert parse_expression("generic(V, lk=1)") == Symbolic((Generic("V", 1),))


def test_stacking_is_left_associative():
    a, b, c = (Symbolic((Generic(x),)) for x in "ABC")
    assert parse_expression("generic(A) # generic(B) # generic(C)") == Stack(Stack(a, b), c)
    assert parse_expression("generic(A) # (generic(B) # generic(C))") == Stack(a, Stack(b, c))
    assert format_expression(Stack(a, Stack(b, c))) == "generic(A) # (generic(B) # generic(C))"
    assert format_expression(Power(Power(a, 2), 3)) == "(generic(A)^2)^3"


@pytest.mark.parametrize("text, line, column, expected", [
    ("", 1, 1, "tau"),
    ("tau #", 1, 6, "tau"),
    ("tau tau", 1, 5, "#"),
    ("split1()", 1, 8, "<knot id>"),
    ("split3(trefoil)", 1, 1, "split2("),
    ("generic(W, lk=2)", 1, 15, "1"),
    ("generic(W, k=1)", 1, 12, "lk="),
    ("(tau", 1, 5, ")"),
    ("tau^", 1, 5, "<int>"),
    ("[n=2; x+1", 1, 10, "]"),
    ("tau #\n  [n=2; x+1 q]", 2, 13, "x+<i>"),
])
def test_parse_errors(text, line, column, expected):
    with pytest.raises(ParseError) as info:
        parse_expression(text)
    err = info.value
    assert (err.line, err.column) == (line, column)
    assert expected in err.expected


def test_evaluation_layers():
    assert evaluate(parse_expression("[n=2; x+1] # [n=2; x+1]")) == parse_morse("n=2; x+1 x+1")
    assert evaluate(parse_expression("[n=2; x+1 x-1]^-2")) == parse_morse("n=2; x+1 x-1 x+1 x-1")
    assert evaluate(parse_expression("[n=3;]^0")) == MorseWord(3)
    assert evaluate(parse_expression("(tau # tau^2)^-1")) == (Twist(-1),) * 3
    assert evaluate(parse_expression("generic(W)^0")) == ()
    with pytest.raises(LayerError):
        evaluate(parse_expression("tau # [n=2; x+1]"))
    with pytest.raises(StrandMismatch):
        evaluate(parse_expression("[n=2;] # [n=3;]"))
    with pytest.raises(NotInvertible):
        evaluate(parse_expression("generic(W)^-1"))
    with pytest.raises(NotInvertible):
        evaluate(parse_expression("[n=1; cup2 x+1 cap2]^-1"))


def test_word_printer():
    assert format_word(()) == "tau^0"
    assert format_word((Twist(-2), Split(1, KnotWord()), Generic("V", 1))) == "tau^-2 # split1(unknot) # generic(V, lk=1)"
    for text in ["tau^-2 # split1(unknot) # generic(V, lk=1)", "cable(4_1 # trefoil)"]:
        assert normalize(evaluate(parse_expression(text))) == normalize(evaluate(parse_expression(format_word(evaluate(parse_expression(text))))))


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_round_trip_property(seed):
    e = random_expression(random.Random(seed))
    assert parse_expression(format_expression(e)) == e
