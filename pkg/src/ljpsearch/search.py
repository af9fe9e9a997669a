"""The finitary representation ``F(sigma, Xi)`` of LJP solution spaces.

``finrep`` is a terminating recursive function producing a guarded,
well-bound finitary forest.  Fixed points are introduced exactly at the
R-stable sequents ``G |- a-`` and ``G |- P``; a recursive visit to an R-stable
sequent that inessentially extends one already on the path is cut off with a
fixed-point variable.
"""

from __future__ import annotations

import threading

from .formulas import (
    Bot, Down, FocusL, FocusR, Imp, InvertL, InvertR, NegAtom,
    Or, PosAtom, Stable, Up, fresh_name, is_composite_negative, is_rstable,
    rstable_leq,
)
from .forest import FixVar, Gfp, Sum, canon_sum, children
from .ljp import (
    Abort, Bind, Copair, Coret, Cothunk, Dlv, Ea, Ep, ICons, Inj, Lam, Nil,
    Pair, PVar, Ret, Thunk, VCons, is_constructor, with_kids,
)


class Memo:
    """Dictionary memo table with serialized insertion."""

    def __init__(self):
        self._table = {}
        self._lock = threading.Lock()

    def get(self, key, default=None):
        return self._table.get(key, default)

    def put(self, key, value):
        with self._lock:
            return self._table.setdefault(key, value)

    def __len__(self):
        return len(self._table)

    def clear(self):
        with self._lock:
            self._table.clear()


_closed = Memo()


# One level of F(seq, env), as plain tuples:
#   ("var", name, rho)             fixed-point variable
#   ("con", cls, annotations, jobs) constructor; jobs are (seq, env) children
#   ("sum", sort, [con, ...])       sum of constructors
#   ("gfp", name, rho, sum)         fixed-point binder
def _con(cls, jobs=(), **ann):
    return ("con", cls, ann, tuple(jobs))


def _sum_shape(sort, cons):
    # summands start with pairwise distinct heads; exact counting relies on it
    heads = [(c[1], tuple(sorted(c[2].items(), key=lambda kv: kv[0]))) for c in cons]
    assert len(set(map(repr, heads))) == len(heads), heads
    return ("sum", sort, cons)


def unfold(seq, env: tuple = ()):
    """The outermost layer of ``F(seq, env)``."""
    if is_rstable(seq):
        for name, rho in reversed(env):
            if rstable_leq(rho, seq):
                return ("var", name, seq)
    g = seq.ctx

    if isinstance(seq, FocusR):
        p = seq.goal
        if isinstance(p, PosAtom):
            return _sum_shape("v", [_con(PVar, name=z) for z, a in g if a == p])
        if isinstance(p, Down):
            return _con(Thunk, [(InvertR(g, p.body), env)])
        if isinstance(p, Bot):
            return ("sum", "v", [])
        return _sum_shape("v", [
            _con(Inj, [(FocusR(g, p.left), env)], index=1, other=p.right),
            _con(Inj, [(FocusR(g, p.right), env)], index=2, other=p.left),
        ])

    if isinstance(seq, InvertR):
        n = seq.goal
        if isinstance(n, NegAtom):
            return _con(Ea, [(Stable(g, n), env)])
        if isinstance(n, Up):
            return _con(Ep, [(Stable(g, n.body), env)])
        if isinstance(n, Imp):
            return _con(Lam, [(InvertL(g, n.left, n.right), env)])
        return _con(Pair, [(InvertR(g, n.left), env), (InvertR(g, n.right), env)])

    if isinstance(seq, FocusL):
        n, r = seq.focus, seq.goal
        if isinstance(n, NegAtom):
            return _con(Nil) if r == n else ("sum", "s", [])
        if isinstance(n, Up):
            return _con(Cothunk, [(InvertL(g, n.body, r), env)])
        if isinstance(n, Imp):
            return _con(VCons, [(FocusR(g, n.left), env), (FocusL(g, n.right, r), env)])
        return _sum_shape("s", [
            _con(ICons, [(FocusL(g, n.left, r), env)], index=1),
            _con(ICons, [(FocusL(g, n.right, r), env)], index=2),
        ])

    if isinstance(seq, InvertL):
        p, a = seq.focus, seq.goal
        if isinstance(p, PosAtom):
            z = fresh_name(g, "z")
            return _con(Bind, [(Stable(g.extend(z, p), a), env)], var=z, ann=p)
        if isinstance(p, Down):
            x = fresh_name(g, "x")
            return _con(Bind, [(Stable(g.extend(x, p.body), a), env)], var=x, ann=p.body)
        if isinstance(p, Or):
            return _con(Copair, [(InvertL(g, p.left, a), env), (InvertL(g, p.right, a), env)])
        return _con(Abort, ann=a)

    if isinstance(seq, Stable):
        a = seq.goal
        if is_composite_negative(a):
            return _con(Dlv, [(InvertR(g, a), env)])
        y = f"Y{len(env)}"
        inner = env + ((y, seq),)
        parts = [_con(Coret, [(FocusL(g, n, a), inner)], var=x)
                 for x, n in g if not isinstance(n, PosAtom)]
        if not isinstance(a, NegAtom):
            parts.insert(0, _con(Ret, [(FocusR(g, a), inner)]))
        return ("gfp", y, seq, _sum_shape("e", parts))

    raise TypeError(f"not an LJP logical sequent: {seq!r}")


def finrep(seq, env: tuple = (), _memo=None):
    """``F(seq, env)`` where ``env`` is a tuple of ``(name, rho)`` declarations."""
    memo = {} if _memo is None else _memo
    # Contexts only grow below seq, so an entry whose formula set differs from
    # that of seq can never guard a descendant; the result depends on env only
    # through its length (naming) and the remaining entries.
    fs = seq.ctx.formulas()
    key = (seq, len(env), tuple(e for e in env if e[1].ctx.formulas() == fs))
    hit = memo.get(key)
    if hit is None:
        hit = memo[key] = _build(unfold(seq, env), memo)
    return hit


def _build(shape, memo):
    kind = shape[0]
    if kind == "var":
        return FixVar(shape[1], shape[2])
    if kind == "con":
        _, cls, ann, jobs = shape
        kid_forests = {name: finrep(s, e, memo) for (name, _), (s, e) in zip(cls.KIDS, jobs)}
        return cls(**ann, **kid_forests)
    if kind == "sum":
        return canon_sum(shape[1], [_build(c, memo) for c in shape[2]])
    return Gfp(shape[1], shape[2], _build(shape[3], memo))


def finrep_closed(seq):
    """``F(seq)`` with empty environment, memoized."""
    hit = _closed.get(seq)
    if hit is None:
        hit = _closed.put(seq, finrep(seq, ()))
    return hit


def memo_sizes() -> dict:
    return {"finrep_closed": len(_closed)}


def unfold_gfp(t):
    """One approximation step: drop outermost ``gfp`` binders and replace free
    fixed-point variables ``X@rho`` by ``F(rho)``."""
    if isinstance(t, Gfp):
        return t.body
    if isinstance(t, FixVar):
        return finrep_closed(t.seq)
    if isinstance(t, Sum):
        return canon_sum(t.sort, [unfold_gfp(p) for p in t.parts])
    if is_constructor(t):
        return with_kids(t, [unfold_gfp(c) for c in children(t)])
    raise TypeError(f"not a forest: {t!r}")
