"""Decision procedures over finitary forests.

The four predicates are parameterized by a predicate ``p`` on R-stable
sequents, consulted at free fixed-point variables.  Two parameters matter:
:func:`empty_pred` (constantly false) and :func:`sharp` (inhabitation).
"""

from __future__ import annotations

import itertools
from math import prod

from .formulas import (
    AndN, Bot, Down, FocusL, FocusR, Imp, InvertL, InvertR, NegAtom, Or,
    PosAtom, Stable, Up, alpha_key, context_leq, fresh_name,
    is_composite_negative, is_negative, is_positive, is_right,
)
from .forest import FixVar, Gfp, Sum, children
from .ljp import (
    Abort, Bind, Copair, Coret, Cothunk, Dlv, Ea, Ep, ICons, Inj, Lam, Nil,
    Pair, PVar, Ret, Thunk, VCons, bound_names, kids, with_kids,
)
from .search import Memo, finrep_closed, unfold


class NotFiniteError(ValueError):
    """Counting was requested for a sequent with infinitely many inhabitants."""


def empty_pred(rho) -> bool:
    return False


_sharp = Memo()


def sharp(rho) -> bool:
    """``rho`` is inhabited.

    Provability only depends on the set of formulas in the context, so the
    memo is keyed by that set and the goal.
    """
    key = (rho.ctx.formulas(), rho.goal)
    hit = _sharp.get(key)
    if hit is None:
        hit = _sharp.put(key, _NBINF_EMPTY.run(rho))
    return hit


# ---------------------------------------------------------------------------
# emptiness: nbinf / binf
# ---------------------------------------------------------------------------

def nbinf(p, t, _memo=None) -> bool:
    """Some member exists, assuming ``p`` for free fixed-point variables."""
    memo = {} if _memo is None else _memo
    key = id(t)
    if key in memo:
        return memo[key]
    if isinstance(t, FixVar):
        res = bool(p(t.seq))
    elif isinstance(t, Sum):
        res = any(nbinf(p, c, memo) for c in t.parts)
    else:
        res = all(nbinf(p, c, memo) for c in children(t))
    memo[key] = res
    return res


def binf(p, t, _memo=None) -> bool:
    """Dual rules of :func:`nbinf`; holds exactly when ``nbinf`` fails."""
    memo = {} if _memo is None else _memo
    key = id(t)
    if key in memo:
        return memo[key]
    if isinstance(t, FixVar):
        res = not p(t.seq)
    elif isinstance(t, Sum):
        res = all(binf(p, c, memo) for c in t.parts)
    else:
        res = any(binf(p, c, memo) for c in children(t))
    memo[key] = res
    return res


def inhabited_forest(seq) -> bool:
    return nbinf(empty_pred, finrep_closed(seq))


def inhabited(seq) -> bool:
    """``nbinf(empty_pred, F(seq))``, evaluated without building ``F(seq)``."""
    return _NBINF_EMPTY.run(seq)


# ---------------------------------------------------------------------------
# finiteness: ff / nff
# ---------------------------------------------------------------------------

def ff(p, t, _memo=None) -> bool:
    """Only finitely many members, assuming ``p`` at free fixed-point variables."""
    memo = {} if _memo is None else _memo
    return _ff(p, t, memo, {})


def _ff(p, t, memo, sharp_memo):
    key = id(t)
    if key in memo:
        return memo[key]
    if isinstance(t, FixVar):
        res = bool(p(t.seq))
    elif isinstance(t, Sum):
        res = all(_ff(p, c, memo, sharp_memo) for c in t.parts)
    else:
        cs = children(t)
        res = (all(_ff(p, c, memo, sharp_memo) for c in cs)
               or any(not nbinf(sharp, c, sharp_memo) for c in cs))
    memo[key] = res
    return res


def nff(p, t, _memo=None) -> bool:
    """Dual rules of :func:`ff`."""
    memo = {} if _memo is None else _memo
    return _nff(p, t, memo, {})


def _nff(p, t, memo, sharp_memo):
    key = id(t)
    if key in memo:
        return memo[key]
    if isinstance(t, FixVar):
        res = not p(t.seq)
    elif isinstance(t, Sum):
        res = any(_nff(p, c, memo, sharp_memo) for c in t.parts)
    else:
        cs = children(t)
        res = (all(nbinf(sharp, c, sharp_memo) for c in cs)
               and any(_nff(p, c, memo, sharp_memo) for c in cs))
    memo[key] = res
    return res


def finite_forest(seq) -> bool:
    return ff(empty_pred, finrep_closed(seq))


def finite(seq) -> bool:
    """``ff(empty_pred, F(seq))``, evaluated without building ``F(seq)``."""
    return _FF_EMPTY.run(seq)


def count_forest(seq) -> int:
    t = finrep_closed(seq)
    if not ff(empty_pred, t):
        raise NotFiniteError(f"infinitely many inhabitants: {seq!r}")
    return _count(t, {}, {})


def count(seq) -> int:
    """Exact number of inhabitants of ``seq``; requires :func:`finite`."""
    if not finite(seq):
        raise NotFiniteError(f"infinitely many inhabitants: {seq!r}")
    return _COUNT.run(seq)


def _count(t, memo, sharp_memo):
    key = id(t)
    if key in memo:
        return memo[key]
    if isinstance(t, FixVar):
        raise AssertionError("count reached a fixed-point variable")
    if isinstance(t, Sum):
        res = sum(_count(c, memo, sharp_memo) for c in t.parts)
    else:
        cs = children(t)
        if any(not nbinf(sharp, c, sharp_memo) for c in cs):
            res = 0
        else:
            res = prod(_count(c, memo, sharp_memo) for c in cs)
    memo[key] = res
    return res


# ---------------------------------------------------------------------------
# the same predicates, evaluated along the recursion of F
# ---------------------------------------------------------------------------

class _OnTheFly:
    """Evaluate a predicate on ``F(seq, env)`` one layer at a time.

    Results are memoized under a key that ignores variable names: env
    entries are ancestors of ``seq``, so their bindings are already in the
    context, and an entry guards a descendant exactly when it has the same
    formula set and the same goal.  Only those goals enter the key.
    """

    def __init__(self):
        self.memo = Memo()

    def run(self, seq):
        return self.eval(seq, ())

    def eval(self, seq, env):
        fs = seq.ctx.formulas()
        key = (alpha_key(seq), frozenset(rho.goal for _, rho in env
                                         if rho.ctx.formulas() == fs))
        hit = self.memo.get(key)
        if hit is None:
            hit = self.memo.put(key, self.shape(unfold(seq, env)))
        return hit

    def shape(self, sh):
        kind = sh[0]
        if kind == "var":
            return self.at_var(sh[2])
        if kind == "sum":
            return self.at_sum([self.node(c[3]) for c in sh[2]])
        if kind == "gfp":
            return self.shape(sh[3])
        return self.node(sh[3])()


class _NbinfEmpty(_OnTheFly):
    def at_var(self, rho):
        return False

    def at_sum(self, parts):
        return any(part() for part in parts)

    def node(self, jobs):
        return lambda: all(self.eval(s, e) for s, e in jobs)


class _NbinfSharp(_NbinfEmpty):
    def at_var(self, rho):
        return sharp(rho)


class _FfEmpty(_OnTheFly):
    def at_var(self, rho):
        return False

    def at_sum(self, parts):
        return all(part() for part in parts)

    def node(self, jobs):
        return lambda: (any(not _NBINF_SHARP.eval(s, e) for s, e in jobs)
                        or all(self.eval(s, e) for s, e in jobs))


class _Count(_OnTheFly):
    def at_var(self, rho):
        raise AssertionError("count reached a fixed-point variable")

    def at_sum(self, parts):
        return sum(part() for part in parts)

    def node(self, jobs):
        def go():
            if any(not _NBINF_SHARP.eval(s, e) for s, e in jobs):
                return 0
            return prod(self.eval(s, e) for s, e in jobs)
        return go


_NBINF_EMPTY = _NbinfEmpty()
_NBINF_SHARP = _NbinfSharp()
_FF_EMPTY = _FfEmpty()
_COUNT = _Count()


# ---------------------------------------------------------------------------
# members
# ---------------------------------------------------------------------------

class _Enumerator:
    """Members of a forest by exact size, resolving ``X@rho`` to ``F(rho)``."""

    def __init__(self):
        self.memo = {}
        self.keep = []

    def exact(self, t, n):
        if n <= 0:
            return frozenset()
        key = (id(t), n)
        hit = self.memo.get(key)
        if hit is not None:
            return hit
        self.keep.append(t)
        if isinstance(t, Sum):
            out = frozenset().union(*(self.exact(c, n) for c in t.parts))
        elif isinstance(t, Gfp):
            out = self.exact(t.body, n)
        elif isinstance(t, FixVar):
            out = self.exact(finrep_closed(t.seq), n)
        else:
            out = frozenset(self._node(t, n))
        self.memo[key] = out
        return out

    def _node(self, t, n):
        cs = kids(t)
        if not cs:
            if n == 1:
                yield t
            return
        if len(cs) == 1:
            for m in self.exact(cs[0], n - 1):
                yield with_kids(t, (m,))
            return
        left, right = cs
        for n1 in range(1, n - 1):
            ms1 = self.exact(left, n1)
            if not ms1:
                continue
            ms2 = self.exact(right, n - 1 - n1)
            for a, b in itertools.product(ms1, ms2):
                yield with_kids(t, (a, b))

    def upto(self, t, k):
        return frozenset().union(*(self.exact(t, n) for n in range(1, k + 1)))


def forest_members(t, size_bound: int) -> frozenset:
    """Members of ``[[t]]`` with at most ``size_bound`` constructors."""
    return _Enumerator().upto(t, size_bound)


def members(seq, size_bound: int) -> frozenset:
    return forest_members(finrep_closed(seq), size_bound)


# ---------------------------------------------------------------------------
# independent oracle: direct application of the typing rules
# ---------------------------------------------------------------------------

class _Oracle:
    def __init__(self):
        self.memo = {}

    def exact(self, seq, n):
        if n <= 0:
            return frozenset()
        key = (seq, n)
        hit = self.memo.get(key)
        if hit is None:
            hit = frozenset(self._rules(seq, n))
            self.memo[key] = hit
        return hit

    def _two(self, mk, s1, s2, n):
        for n1 in range(1, n - 1):
            for a in self.exact(s1, n1):
                for b in self.exact(s2, n - 1 - n1):
                    yield mk(a, b)

    def _rules(self, seq, n):
        g = seq.ctx
        if isinstance(seq, FocusR):
            p = seq.goal
            # axiom
            if n == 1 and isinstance(p, PosAtom):
                yield from (PVar(z) for z, a in g if a == p)
            # thunk
            if isinstance(p, Down):
                yield from (Thunk(t) for t in self.exact(InvertR(g, p.body), n - 1))
            # injections
            if isinstance(p, Or):
                yield from (Inj(1, p.right, v) for v in self.exact(FocusR(g, p.left), n - 1))
                yield from (Inj(2, p.left, v) for v in self.exact(FocusR(g, p.right), n - 1))
        elif isinstance(seq, InvertR):
            a = seq.goal
            if isinstance(a, NegAtom):
                yield from (Ea(e) for e in self.exact(Stable(g, a), n - 1))
            if isinstance(a, Up):
                yield from (Ep(e) for e in self.exact(Stable(g, a.body), n - 1))
            if isinstance(a, Imp):
                yield from (Lam(p) for p in self.exact(InvertL(g, a.left, a.right), n - 1))
            if isinstance(a, AndN):
                yield from self._two(Pair, InvertR(g, a.left), InvertR(g, a.right), n)
        elif isinstance(seq, FocusL):
            f, r = seq.focus, seq.goal
            if n == 1 and isinstance(f, NegAtom) and f == r:
                yield Nil()
            if isinstance(f, Up):
                yield from (Cothunk(p) for p in self.exact(InvertL(g, f.body, r), n - 1))
            if isinstance(f, Imp):
                yield from self._two(VCons, FocusR(g, f.left), FocusL(g, f.right, r), n)
            if isinstance(f, AndN):
                yield from (ICons(1, s) for s in self.exact(FocusL(g, f.left, r), n - 1))
                yield from (ICons(2, s) for s in self.exact(FocusL(g, f.right, r), n - 1))
        elif isinstance(seq, InvertL):
            p, a = seq.focus, seq.goal
            if isinstance(p, PosAtom):
                z = fresh_name(g, "z")
                yield from (Bind(z, p, e) for e in self.exact(Stable(g.extend(z, p), a), n - 1))
            if isinstance(p, Down):
                x = fresh_name(g, "x")
                yield from (Bind(x, p.body, e)
                            for e in self.exact(Stable(g.extend(x, p.body), a), n - 1))
            if n == 1 and isinstance(p, Bot):
                yield Abort(a)
            if isinstance(p, Or):
                yield from self._two(Copair, InvertL(g, p.left, a), InvertL(g, p.right, a), n)
        elif isinstance(seq, Stable):
            a = seq.goal
            if is_composite_negative(a):
                yield from (Dlv(t) for t in self.exact(InvertR(g, a), n - 1))
            if is_positive(a):
                yield from (Ret(v) for v in self.exact(FocusR(g, a), n - 1))
            if is_right(a):
                for x, f in g:
                    if is_negative(f):
                        yield from (Coret(x, s) for s in self.exact(FocusL(g, f, a), n - 1))
        else:
            raise TypeError(f"not an LJP logical sequent: {seq!r}")


def oracle_search(seq, size_bound: int) -> frozenset:
    """All inhabitants of ``seq`` of size at most ``size_bound``, found by
    exhaustive goal-directed application of the typing rules."""
    o = _Oracle()
    return frozenset().union(*(o.exact(seq, n) for n in range(1, size_bound + 1)))


# ---------------------------------------------------------------------------
# decontraction of members
# ---------------------------------------------------------------------------

def decontract_members(g, g2, t) -> frozenset:
    """Every way of redirecting each occurrence of a variable ``w`` of ``g`` to
    ``w`` itself or to an extra variable of ``g2`` with the same formula."""
    if not context_leq(g, g2):
        raise ValueError("decontraction needs g <= g2")
    extra = set(g2.bindings) - set(g.bindings)
    choices = {w: [w] + sorted(w2 for w2, b in extra if b == a) for w, a in g}
    clash = bound_names(t) & g2.names
    if clash:
        t = _rename_binders(t, clash, g2.names)
    return frozenset(_decontract(t, choices, frozenset()))


def _decontract(t, choices, bound):
    if isinstance(t, PVar):
        if t.name in choices and t.name not in bound:
            for w in choices[t.name]:
                yield PVar(w)
        else:
            yield t
        return
    if isinstance(t, Bind):
        bound = bound | {t.var}
    cs = kids(t)
    options = [list(_decontract(c, choices, bound)) for c in cs]
    if isinstance(t, Coret) and t.var in choices and t.var not in bound:
        heads = choices[t.var]
    else:
        heads = [t.var] if isinstance(t, Coret) else [None]
    for h in heads:
        for combo in itertools.product(*options):
            u = with_kids(t, combo)
            if h is not None:
                u = Coret(h, u.spine)
            yield u


def _rename_binders(t, clash, avoid):
    used = set(avoid) | bound_names(t)
    mapping = {}

    def fresh(v):
        k = 0
        while f"{v}_{k}" in used:
            k += 1
        used.add(f"{v}_{k}")
        return f"{v}_{k}"

    def go(u, env):
        if isinstance(u, PVar):
            return PVar(env.get(u.name, u.name))
        if isinstance(u, Coret):
            return Coret(env.get(u.var, u.var), go(u.spine, env))
        if isinstance(u, Bind):
            if u.var in clash:
                new = mapping.setdefault((u.var, id(u)), fresh(u.var))
                env = {**env, u.var: new}
                return Bind(new, u.ann, go(u.body, env))
            env = {k: v for k, v in env.items() if k != u.var}
            return Bind(u.var, u.ann, go(u.body, env))
        return with_kids(u, [go(c, env) for c in kids(u)])

    return go(t, {})


def canonical_names(t):
    """Rename bound variables to ``b0, b1, ...`` in traversal order."""
    counter = itertools.count()

    def go(u, env):
        if isinstance(u, PVar):
            return PVar(env.get(u.name, u.name))
        if isinstance(u, Coret):
            return Coret(env.get(u.var, u.var), go(u.spine, env))
        if isinstance(u, Bind):
            new = f"b{next(counter)}"
            return Bind(new, u.ann, go(u.body, {**env, u.var: new}))
        return with_kids(u, [go(c, env) for c in kids(u)])

    return go(t, {})


def clear_memos() -> None:
    """Forget every cached forest and decision."""
    from . import forest, search
    _sharp.clear()
    for ev in (_NBINF_EMPTY, _NBINF_SHARP, _FF_EMPTY, _COUNT):
        ev.memo.clear()
    search._closed.clear()
    forest.clear_caches()


def memo_sizes() -> dict:
    return {"sharp": len(_sharp), "inhabited": len(_NBINF_EMPTY.memo),
            "nbinf_sharp": len(_NBINF_SHARP.memo), "finite": len(_FF_EMPTY.memo),
            "count": len(_COUNT.memo)}
