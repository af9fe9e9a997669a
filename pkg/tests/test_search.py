import pytest

from corpus import LJP_SEQUENTS
from ljpsearch.forest import (
    FixVar, Gfp, Sum, check_sorts, empty, fpv, gfp_subterms, is_guarded,
    is_well_bound,
)
from ljpsearch.formulas import (
    AndN, Bot, Context, Down, FocusR, Imp, InvertR, NegAtom, Stable,
    is_rstable,
)
from ljpsearch.ljp import Coret, Ea, Nil, Pair, Thunk, VCons
from ljpsearch.search import finrep, finrep_closed, unfold_gfp
from ljpsearch.syntax import parse

a = NegAtom("a")


def test_examples():
    x_a = Stable(Context.of(("x", a)), a)
    assert finrep(x_a) == Gfp("Y0", x_a, Coret("x", Nil()))
    empty_seq = Stable(Context(), a)
    assert finrep(empty_seq) == Gfp("Y0", empty_seq, empty("e"))
    loop = Stable(Context.of(("x", Imp(Down(a), a))), a)
    assert finrep(loop) == Gfp("Y0", loop, Coret("x", VCons(Thunk(Ea(FixVar("Y0", loop))), Nil())))
    assert finrep_closed(FocusR(Context(), Bot())) == Sum("v", ())
    assert finrep_closed(InvertR(Context(), a)) == Ea(Gfp("Y0", empty_seq, empty("e")))
    assert isinstance(finrep_closed(InvertR(Context(), AndN(a, a))), Pair)


def test_guard_picks_the_latest_matching_declaration():
    rho = Stable(Context.of(("x", a)), a)
    env = (("A", rho), ("B", rho))
    assert finrep(rho, env) == FixVar("B", rho)


def test_unfold_gfp():
    x_a = Stable(Context.of(("x", a)), a)
    assert unfold_gfp(finrep(x_a)) == Coret("x", Nil())
    loop = Stable(Context.of(("x", Imp(Down(a), a))), a)
    assert unfold_gfp(FixVar("Y0", loop)) == finrep_closed(loop)
    t = unfold_gfp(Coret("x", VCons(Thunk(Ea(FixVar("Y0", loop))), Nil())))
    assert t.spine.head.body.body == finrep_closed(loop)


def test_deterministic():
    s = parse("sequent", "ljp", "x: down a- -> a-, y: a- |- a-")
    assert finrep(s) == finrep(s)


@pytest.mark.parametrize("text", LJP_SEQUENTS)
def test_structure_of_corpus_forests(text):
    s = parse("sequent", "ljp", text)
    f = finrep_closed(s)
    check_sorts(f)
    assert is_guarded(f) and is_well_bound(f) and fpv(f) == frozenset()
    for g in gfp_subterms(f):
        assert is_rstable(g.seq)


@pytest.mark.parametrize("text", LJP_SEQUENTS[:20])
def test_open_environments_are_guarded(text):
    s = parse("sequent", "ljp", text)
    g = s.ctx
    env = (("E0", Stable(g, a)), ("E1", Stable(g, NegAtom("b"))))
    f = finrep(s, env)
    assert is_guarded(f) and is_well_bound(f)
