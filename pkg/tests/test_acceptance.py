"""Acceptance suite.

Each criterion is a group of tests named ``test_c<N>_...``; the terminal
summary prints one PASS/FAIL line per criterion.  Run on its own with

    pytest tests/test_acceptance.py
"""

import random
import time
from functools import lru_cache
from pathlib import Path

import pytest

from corpus import LJP_SEQUENTS, LJT_FINITE, LJT_INFINITE
from g4ip import provable
from gen import ForestGen, rand_context, rand_ipl, rand_ljp_sequent, rand_neg, rand_pos, rand_right
from ljpsearch import decide, ljp, ljt, search
from ljpsearch.cli import main as cli_main
from ljpsearch.decide import (
    binf, canonical_names, count, decontract_members, empty_pred, ff, finite,
    inhabited, members, nbinf, nff, oracle_search, sharp,
)
from ljpsearch.forest import Gfp, children, fpv, gfp_subterms, is_guarded, is_well_bound
from ljpsearch.formulas import (
    AndN, Context, Down, FocusL, FocusR, IAtom, IBot, IOr, Imp, InvertL,
    InvertR, LjtInvert, LjtStable, NegAtom, Or, PosAtom, Stable, Up,
    fresh_name, is_composite_negative, is_rstable, weight,
)
from ljpsearch.search import finrep_closed
from ljpsearch.syntax import parse, render

K = 12
GOLDEN = Path(__file__).parent / "golden" / "space.tsv"


def ljp_seq(text):
    return parse("sequent", "ljp", text)


def ljt_seq(text):
    return parse("sequent", "ljt", text)


@lru_cache(maxsize=None)
def suite1():
    """Curated sequents followed by 200 random ones, all of weight <= 12."""
    out = [ljp_seq(t) for t in LJP_SEQUENTS]
    rng = random.Random(20240601)
    seen = set(out)
    while len(out) < len(LJP_SEQUENTS) + 200:
        s = rand_ljp_sequent(rng, size=rng.randint(2, 5), max_hyps=3)
        if weight(s) <= 12 and s not in seen:
            seen.add(s)
            out.append(s)
    return tuple(out)


@lru_cache(maxsize=None)
def suite2():
    rng = random.Random(20240602)
    return tuple(rand_ipl(rng, rng.randint(1, 12)) for _ in range(500))


def _canon(ts):
    return {canonical_names(t) for t in ts}


# ---------------------------------------------------------------------------
# 1. adequacy
# ---------------------------------------------------------------------------

def test_c1_corpus_is_large_enough():
    assert len(LJP_SEQUENTS) >= 50
    assert all(weight(ljp_seq(t)) <= 12 for t in LJP_SEQUENTS)


def test_c1_members_equal_oracle():
    t0 = time.perf_counter()
    bad = []
    for s in suite1():
        want = oracle_search(s, K)
        for k in range(K + 1):
            got = members(s, k)
            if _canon(got) != _canon(t for t in want if ljp.size(t) <= k):
                bad.append((render(s), k))
    elapsed = time.perf_counter() - t0
    print(f"\n  {len(suite1())} sequents, k = 0..{K}, {elapsed:.1f} s, {len(bad)} mismatches")
    assert not bad, bad[:5]
    assert elapsed < 120


# ---------------------------------------------------------------------------
# 2. decision agreement
# ---------------------------------------------------------------------------

def test_c2_random_formulas_agree_with_g4ip():
    fs = suite2()
    assert len(fs) >= 500
    bad = [render(f) for f in fs
           if ljt.decide_ljt("inhabited", LjtInvert(Context(), f)) != provable(f)]
    print(f"\n  {len(fs)} formulas, {len(bad)} disagreements")
    assert not bad, bad[:5]


@pytest.mark.parametrize("text,expected", [
    ("a -> a", True),
    ("((a -> b) -> a) -> a", False),
    ("bot -> a", True),
    ("a \\/ b", False),
])
def test_c2_fixed_cases(text, expected):
    f = parse("formula", "ljt", text)
    assert ljt.decide_ljt("inhabited", LjtInvert(Context(), f)) is expected
    assert provable(f) is expected


# ---------------------------------------------------------------------------
# 3. structural guarantees
# ---------------------------------------------------------------------------

def _structure_violations(f):
    out = []
    if not is_guarded(f):
        out.append("unguarded")
    if not is_well_bound(f):
        out.append("not well-bound")
    if fpv(f):
        out.append("free variables")
    if any(not is_rstable(g.seq) for g in gfp_subterms(f)):
        out.append("non R-stable annotation")
    return out


def test_c3_structure_of_all_outputs():
    search._closed.clear()
    roots = list(suite1()) + [ljt.star_sequent(LjtInvert(Context(), f)) for f in suite2()]
    for s in roots:
        finrep_closed(s)
    # every memoized output, which includes every gfp unfolding done so far
    for s in roots:
        decide.members(s, 8)
    bad = []
    for seq, f in list(search._closed._table.items()):
        v = _structure_violations(f)
        if v:
            bad.append((render(seq), v))
    print(f"\n  {len(search._closed)} finitary forests checked, {len(bad)} violations")
    assert not bad, bad[:5]


def test_c3_open_environments():
    bad = []
    rng = random.Random(3)
    for s in suite1()[:120]:
        rhos = [Stable(s.ctx, NegAtom("a")), Stable(s.ctx, PosAtom("b")), Stable(s.ctx, NegAtom("b"))]
        env = tuple((f"E{i}", r) for i, r in enumerate(rng.sample(rhos, 2)))
        f = search.finrep(s, env)
        if not (is_guarded(f) and is_well_bound(f)):
            bad.append(render(s))
        if any(not is_rstable(g.seq) for g in gfp_subterms(f)):
            bad.append(render(s))
    assert not bad, bad[:5]


# ---------------------------------------------------------------------------
# 4. finiteness
# ---------------------------------------------------------------------------

def _finite_cases():
    out = [(ljp_seq(t), None) for t in LJP_SEQUENTS]
    out = [(s, None) for s, _ in out if finite(s)]
    out += [(ljt.star_sequent(ljt_seq(t)), n) for t, n in LJT_FINITE]
    return out


def test_c4_finite_cases_saturate():
    cases = _finite_cases()
    assert len(cases) >= 30
    bad = []
    for s, n in cases:
        c = count(s)
        m = members(s, 30)
        # saturation: nothing new appears past the largest member
        top = max((ljp.size(t) for t in m), default=0)
        if members(s, top + 10) != m or len(m) != c or (n is not None and c != n):
            bad.append((render(s), c, len(m), n))
    print(f"\n  {len(cases)} finite cases, {len(bad)} mismatches")
    assert not bad, bad


def test_c4_named_counts():
    assert count(ljp_seq("x: a-, y: a- |- a-")) == 2
    assert ljt.decide_ljt("count", ljt_seq("p: a /\\ a |- a")) == 2


CHURCH = "f: a -> a, x: a |- a"
LOOP = "x: down a- -> a-, y: a- |- a-"


def test_c4_infinite_families():
    assert not ljt.decide_ljt("finite", ljt_seq(CHURCH))
    assert not finite(ljp_seq(LOOP))
    for t in LJT_INFINITE:
        assert not ljt.decide_ljt("finite", ljt_seq(t))


def test_c4_member_counts_strictly_increase():
    church = [len(ljt.members_ljt(ljt_seq(CHURCH), k)) for k in (4, 8, 12, 16)]
    loop = [len(members(ljp_seq(LOOP), k)) for k in (4, 8, 12, 16)]
    print(f"\n  member counts at k = 4, 8, 12, 16: church {church}, loop {loop}")
    for counts in (church, loop):
        assert all(a < b for a, b in zip(counts, counts[1:])), counts


# ---------------------------------------------------------------------------
# 5. complementarity
# ---------------------------------------------------------------------------

def test_c5_complementarity():
    forests = []
    for s in suite1():
        f = finrep_closed(s)
        stack, seen = [f], set()
        while stack:
            t = stack.pop()
            if id(t) in seen:
                continue
            seen.add(id(t))
            if isinstance(t, Gfp) or t is f:
                forests.append(t)
            stack.extend(children(t))
    rng = random.Random(5)
    gen = ForestGen(rng)
    while len(forests) < 1000:
        t = gen.forest(rng.choice("vtspe"))
        assert is_guarded(t) and is_well_bound(t)
        forests.append(t)
    bad = 0
    for t in forests:
        for p in (empty_pred, sharp):
            bad += nbinf(p, t) == binf(p, t)
            bad += ff(p, t) == nff(p, t)
    print(f"\n  {len(forests)} forests, {bad} violations")
    assert bad == 0


# ---------------------------------------------------------------------------
# 6. translation
# ---------------------------------------------------------------------------

def _ljt_suite():
    out = [ljt_seq(t) for t, _ in LJT_FINITE] + [ljt_seq(t) for t in LJT_INFINITE]
    rng = random.Random(6)
    while len(out) < 100:
        g = Context(tuple((f"h{i}", rand_ipl(rng, rng.randint(1, 4)))
                          for i in range(rng.randint(0, 2))))
        if rng.random() < 0.6:
            out.append(LjtInvert(g, rand_ipl(rng, rng.randint(1, 6))))
        else:
            r = rng.choice([IAtom("a"), IAtom("b"), IBot(), IOr(IAtom("a"), IAtom("b"))])
            out.append(LjtStable(g, r))
    return out


def test_c6_translation():
    k = 12
    suite = _ljt_suite()
    assert len(suite) >= 100
    bad = []
    n_terms = 0
    for s in suite:
        image = ljt.star_sequent(s)
        legal = [t for t in ljt.oracle_search_ljt(s, k) if ljt.is_legal(t)]
        n_terms += len(legal)
        for t in legal:
            st = ljt.star_proof(s, t)
            if ljt.forget(st) != t or not ljp.check(image, st) or not ljt.check_ljt(s, t):
                bad.append(("round trip", render(s), render(t)))
        want = {ljt.star_proof(s, t) for t in legal}
        want = {u for u in want if ljp.size(u) <= k}
        if _canon(members(image, k)) != _canon(want):
            bad.append(("members", render(s)))
    print(f"\n  {len(suite)} sequents, {n_terms} legal LJT terms, {len(bad)} failures")
    assert not bad, bad[:5]


# ---------------------------------------------------------------------------
# 7. weight
# ---------------------------------------------------------------------------

N_WEIGHT = 10_000


def _ctx(rng):
    return rand_context(rng, rng.randint(0, 3), 4)


def _composite_neg(rng):
    while True:
        n = rand_neg(rng, rng.randint(2, 6))
        if is_composite_negative(n):
            return n


def _any_right_or_neg(rng):
    return rand_right(rng, 4) if rng.random() < 0.5 else rand_neg(rng, rng.randint(1, 5))


def _instances(rng):
    """One (name, bigger, smaller) instance of every weight inequality."""
    g = _ctx(rng)
    z = fresh_name(g, "z")
    n = rand_neg(rng, rng.randint(1, 5))
    n1, n2 = rand_neg(rng, rng.randint(1, 4)), rand_neg(rng, rng.randint(1, 4))
    p = rand_pos(rng, rng.randint(1, 5))
    p1, p2 = rand_pos(rng, rng.randint(1, 4)), rand_pos(rng, rng.randint(1, 4))
    r = rand_right(rng, 4)
    a = _any_right_or_neg(rng)
    c = _composite_neg(rng)
    i = rng.choice([0, 1])
    yield "stable/invert", Stable(g, c), InvertR(g, c)
    yield "atom left", InvertL(g, PosAtom("a"), a), Stable(g.extend(z, PosAtom("a")), a)
    yield "down left", InvertL(g, Down(n), a), Stable(g.extend(z, n), a)
    yield "down right", FocusR(g, Down(n)), InvertR(g, n)
    yield "or right", FocusR(g, Or(p1, p2)), FocusR(g, (p1, p2)[i])
    yield "up right", InvertR(g, Up(p)), Stable(g, p)
    yield "imp right", InvertR(g, Imp(p, n)), InvertL(g, p, n)
    yield "and right", InvertR(g, AndN(n1, n2)), InvertR(g, (n1, n2)[i])
    yield "up left", FocusL(g, Up(p), r), InvertL(g, p, r)
    yield "imp left arg", FocusL(g, Imp(p, n), r), FocusR(g, p)
    yield "imp left body", FocusL(g, Imp(p, n), r), FocusL(g, n, r)
    yield "and left", FocusL(g, AndN(n1, n2), r), FocusL(g, (n1, n2)[i], r)
    yield "or left", InvertL(g, Or(p1, p2), a), InvertL(g, (p1, p2)[i], a)


def test_c7_weight_inequalities():
    rng = random.Random(7)
    counts, bad = {}, []
    for _ in range(N_WEIGHT):
        for name, big, small in _instances(rng):
            counts[name] = counts.get(name, 0) + 1
            if not weight(big) > weight(small):
                bad.append((name, render(big), render(small)))
    print(f"\n  {len(counts)} inequalities x {N_WEIGHT} instances, {len(bad)} violations")
    assert all(v == N_WEIGHT for v in counts.values())
    assert not bad, bad[:5]


# ---------------------------------------------------------------------------
# 8. decontraction
# ---------------------------------------------------------------------------

def _decontraction_pairs():
    a, b = NegAtom("a"), NegAtom("b")
    la = Imp(Down(a), a)
    fixed = [
        (Context.of(("x", a)), a),
        (Context.of(("x", la), ("y", a)), a),
        (Context.of(("x", Imp(Down(a), Imp(Down(a), a))), ("y", a)), a),
        (Context.of(("x", AndN(a, b))), a),
        (Context.of(("x", Up(PosAtom("a")))), PosAtom("a")),
        (Context.of(("x", Up(Or(PosAtom("a"), PosAtom("a"))))), Or(PosAtom("a"), PosAtom("a"))),
    ]
    rng = random.Random(8)
    pairs = []
    for g, goal in fixed:
        pairs.append((Stable(g, goal), _duplicate(rng, g, goal)))
    while len(pairs) < 20:
        g = rand_context(rng, rng.randint(1, 2), 3)
        goal = rand_right(rng, 3)
        pairs.append((Stable(g, goal), _duplicate(rng, g, goal)))
    return pairs


def _duplicate(rng, g, goal):
    g2 = g
    for i in range(rng.randint(1, 2)):
        _, f = rng.choice(g.bindings)
        g2 = g2.extend(f"c{i}", f)
    return Stable(g2, goal)


def test_c8_decontraction():
    bad = []
    pairs = _decontraction_pairs()
    assert len(pairs) == 20
    for rho, rho2 in pairs:
        for k in range(9):
            lhs = _canon(members(rho2, k))
            rhs = set()
            for t in members(rho, k):
                rhs |= _canon(decontract_members(rho.ctx, rho2.ctx, t))
            if lhs != rhs:
                bad.append((render(rho), render(rho2), k))
    print(f"\n  {len(pairs)} pairs, k = 0..8, {len(bad)} mismatches")
    assert not bad, bad[:5]


# ---------------------------------------------------------------------------
# 9. performance and round trip
# ---------------------------------------------------------------------------

def _perf_suite():
    rng = random.Random(9)
    out = [ljt.star_sequent(LjtInvert(Context(), rand_ipl(rng, 20))) for _ in range(60)]
    out += [InvertR(Context(), rand_neg(rng, 20)) for _ in range(60)]
    hard = [
        "=> ((a -> b) -> c) -> ((b -> a) -> c) -> (a -> b -> c) -> c",
        "=> (a \\/ b -> c) -> ((a -> c) -> (b -> c) -> a \\/ b) -> c /\\ c",
        "=> ((((a -> b) -> a) -> a) -> b) -> b",
    ]
    out += [ljt.star_sequent(ljt_seq(t)) for t in hard]
    return out


def test_c9_decisions_are_fast():
    worst = 0.0
    for s in _perf_suite():
        for fn in (inhabited, finite):
            decide.clear_memos()
            t0 = time.perf_counter()
            fn(s)
            worst = max(worst, time.perf_counter() - t0)
    print(f"\n  slowest query {worst * 1000:.1f} ms")
    assert worst < 10


def _golden():
    rows = []
    for line in GOLDEN.read_text().splitlines():
        if line and not line.startswith("#"):
            rows.append(line.split("\t"))
    return rows


def test_c9_golden_round_trip(capsys):
    rows = _golden()
    assert len(rows) >= 80
    for cal, seq_text, forest_text in rows:
        s = parse("sequent", cal, seq_text)
        assert render(s) == seq_text
        image = ljt.star_sequent(s) if cal == "ljt" else s
        f = finrep_closed(image)
        assert render(f) == forest_text
        assert parse("term", "ljp", forest_text) == f
        assert cli_main([cal, "space", seq_text]) == 0
        assert capsys.readouterr().out.strip() == forest_text
        if cal == "ljp":
            for t in members(s, 10):
                assert parse("term", "ljp", render(t)) == t
        else:
            for t in ljt.members_ljt(s, 16):
                assert parse("term", "ljt", render(t)) == t


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q"]))
