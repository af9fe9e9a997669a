import random

import pytest

from corpus import LJP_SEQUENTS, LJT_FINITE
from gen import ForestGen, rand_ipl, rand_ljp_sequent
from ljpsearch.decide import members
from ljpsearch.formulas import (
    AndN, Context, Down, IAtom, IImp, Imp, InvertR, LjtInvert, NegAtom, Or, PosAtom, Stable,
)
from ljpsearch.ljp import Coret, Nil
from ljpsearch.ljt import members_ljt
from ljpsearch.search import finrep_closed
from ljpsearch.syntax import ParseError, parse, render

a = NegAtom("a")


def test_parse_formulas():
    assert parse("formula", "ljp", "down a- -> b-") == Imp(Down(a), NegAtom("b"))
    assert parse("formula", "ljp", "a+ \\/ b+ \\/ c+") == Or(Or(PosAtom("a"), PosAtom("b")), PosAtom("c"))
    assert parse("formula", "ljp", "a- /\\ b-") == AndN(a, NegAtom("b"))


def test_parse_sequents():
    assert parse("sequent", "ljp", "x: a- |- a-") == Stable(Context.of(("x", a)), a)
    assert parse("sequent", "ljp", "· |- a-") == Stable(Context(), a)
    assert parse("sequent", "ljp", "=> a-") == InvertR(Context(), a)
    assert parse("sequent", "ljt", "=> a -> a") == LjtInvert(Context(), IImp(IAtom("a"), IAtom("a")))


def test_parse_terms():
    assert parse("term", "ljp", "coret x (nil)") == Coret("x", Nil())


@pytest.mark.parametrize("kind,cal,text,pos", [
    ("formula", "ljp", "a", "1:1"),
    ("sequent", "ljp", "x: a- |- ", "1:10"),
    ("sequent", "ljt", "x: a+ |- a", "1:5"),
    ("term", "ljp", "coret x (nil", "1:13"),
    ("formula", "ljp", "a- -> b-", "1:1"),
])
def test_parse_errors(kind, cal, text, pos):
    with pytest.raises(ParseError) as exc:
        parse(kind, cal, text)
    assert str(exc.value).startswith(pos)


def test_render_example_forest():
    s = parse("sequent", "ljp", "x: down a- -> a- |- a-")
    assert render(finrep_closed(s)) == ("gfp Y0@(x: down a- -> a- |- a-). coret x "
                                        "(cons(thunk(ea(Y0@(x: down a- -> a- |- a-))), nil))")


@pytest.mark.parametrize("text", LJP_SEQUENTS)
def test_roundtrip_corpus(text):
    s = parse("sequent", "ljp", text)
    assert parse("sequent", "ljp", render(s)) == s
    f = finrep_closed(s)
    assert parse("term", "ljp", render(f)) == f
    for t in members(s, 10):
        assert parse("term", "ljp", render(t)) == t


@pytest.mark.parametrize("text,_", LJT_FINITE)
def test_roundtrip_ljt(text, _):
    s = parse("sequent", "ljt", text)
    assert parse("sequent", "ljt", render(s)) == s
    for t in members_ljt(s, 20):
        assert parse("term", "ljt", render(t)) == t


def test_roundtrip_random():
    rng = random.Random(3)
    gen = ForestGen(rng)
    for _ in range(200):
        s = rand_ljp_sequent(rng)
        assert parse("sequent", "ljp", render(s)) == s
        f = gen.forest(rng.choice("vtspe"))
        assert parse("term", "ljp", render(f)) == f
        i = rand_ipl(rng, rng.randint(1, 10))
        assert parse("formula", "ljt", render(i)) == i
