"""LJT, the focused calculus for full intuitionistic propositional logic, and
its negative translation into LJP.

Proof terms::

    t ::= lam x{A}. t | pair(t, t) | e
    e ::= x s | inj_i{A}(t)
    s ::= nil | cons(t, s) | proj_i(s) | abort{R} | case(x1{A1}. e1, x2{A2}. e2)
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from . import decide, ljp
from .formulas import (
    AndN, Bot, Context, Down, IAnd, IAtom, IBot, IImp, IOr, Imp, NegAtom, Or,
    Up, LjtFocus, LjtInvert, LjtStable, FocusL, InvertR, Stable, fresh_name,
    is_right_i,
)


class LjtTypingError(Exception):
    pass


class IllegalTerm(ValueError):
    """A term outside the domain of the translation or of the forgetful map."""


@dataclass(frozen=True, slots=True)
class Abs:
    var: str
    ann: object
    body: object


@dataclass(frozen=True, slots=True)
class Tup:
    left: object
    right: object


@dataclass(frozen=True, slots=True)
class Sel:
    """``x s``: select ``x`` from the context and focus on it."""

    var: str
    spine: object


@dataclass(frozen=True, slots=True)
class In:
    """``inj_i{A}(t)`` with ``other`` the disjunct not chosen."""

    index: int
    other: object
    body: object


@dataclass(frozen=True, slots=True)
class SNil:
    pass


@dataclass(frozen=True, slots=True)
class SArg:
    """``t :: s``"""

    arg: object
    tail: object


@dataclass(frozen=True, slots=True)
class SProj:
    """``i :: s``"""

    index: int
    tail: object


@dataclass(frozen=True, slots=True)
class SAbort:
    ann: object


@dataclass(frozen=True, slots=True)
class SCase:
    var1: str
    ann1: object
    arm1: object
    var2: str
    ann2: object
    arm2: object


EXPRESSIONS = (Sel, In)
TERMS = (Abs, Tup) + EXPRESSIONS
SPINES = (SNil, SArg, SProj, SAbort, SCase)


def size(t) -> int:
    if isinstance(t, (SNil, SAbort)):
        return 1
    if isinstance(t, Abs):
        return 1 + size(t.body)
    if isinstance(t, Tup):
        return 1 + size(t.left) + size(t.right)
    if isinstance(t, Sel):
        return 1 + size(t.spine)
    if isinstance(t, In):
        return 1 + size(t.body)
    if isinstance(t, SArg):
        return 1 + size(t.arg) + size(t.tail)
    if isinstance(t, SProj):
        return 1 + size(t.tail)
    if isinstance(t, SCase):
        return 1 + size(t.arm1) + size(t.arm2)
    raise TypeError(f"not an LJT term: {t!r}")


# ---------------------------------------------------------------------------
# typing
# ---------------------------------------------------------------------------

def infer_ljt(g: Context, term, given=None):
    if isinstance(term, Abs):
        return IImp(term.ann, infer_ljt(g.extend(term.var, term.ann), term.body))
    if isinstance(term, Tup):
        return IAnd(infer_ljt(g, term.left), infer_ljt(g, term.right))
    if isinstance(term, Sel):
        a = g.get(term.var)
        if a is None:
            raise LjtTypingError(f"unbound variable {term.var}")
        return _spine(g, term.spine, a)
    if isinstance(term, In):
        if term.index not in (1, 2):
            raise LjtTypingError("injection index must be 1 or 2")
        a = infer_ljt(g, term.body)
        return IOr(a, term.other) if term.index == 1 else IOr(term.other, a)
    if isinstance(term, SPINES):
        if given is None:
            raise LjtTypingError("a spine needs its focus formula")
        return _spine(g, term, given)
    raise LjtTypingError(f"not an LJT term: {term!r}")


def _spine(g, s, a):
    if isinstance(s, SNil):
        if not isinstance(a, IAtom):
            raise LjtTypingError(f"nil against non-atomic focus {a!r}")
        return a
    if isinstance(s, SAbort):
        if not isinstance(a, IBot) or not is_right_i(s.ann):
            raise LjtTypingError(f"abort{{{s.ann!r}}} against {a!r}")
        return s.ann
    if isinstance(s, SArg):
        if not isinstance(a, IImp):
            raise LjtTypingError(f"argument applied to {a!r}")
        got = infer_ljt(g, s.arg)
        if got != a.left:
            raise LjtTypingError(f"argument of type {got!r}, expected {a.left!r}")
        return _spine(g, s.tail, a.right)
    if isinstance(s, SProj):
        if not isinstance(a, IAnd) or s.index not in (1, 2):
            raise LjtTypingError(f"projection applied to {a!r}")
        return _spine(g, s.tail, a.left if s.index == 1 else a.right)
    if isinstance(s, SCase):
        if a != IOr(s.ann1, s.ann2):
            raise LjtTypingError(f"case arms annotated for {IOr(s.ann1, s.ann2)!r}, focus {a!r}")
        for arm in (s.arm1, s.arm2):
            if not isinstance(arm, EXPRESSIONS):
                raise LjtTypingError("case arms must be expressions")
        r1 = infer_ljt(g.extend(s.var1, s.ann1), s.arm1)
        r2 = infer_ljt(g.extend(s.var2, s.ann2), s.arm2)
        if r1 != r2:
            raise LjtTypingError(f"case arms disagree: {r1!r} vs {r2!r}")
        return r1
    raise LjtTypingError(f"expected a spine, got {s!r}")


def check_ljt(seq, term) -> bool:
    try:
        if isinstance(seq, LjtFocus):
            if not isinstance(term, SPINES):
                return False
            return _spine(seq.ctx, term, seq.focus) == seq.goal
        if isinstance(seq, LjtStable):
            return isinstance(term, EXPRESSIONS) and infer_ljt(seq.ctx, term) == seq.goal
        if isinstance(seq, LjtInvert):
            if not isinstance(term, TERMS):
                return False
            return infer_ljt(seq.ctx, term) == seq.goal
    except LjtTypingError:
        return False
    raise TypeError(f"not an LJT sequent: {seq!r}")


# ---------------------------------------------------------------------------
# legality
# ---------------------------------------------------------------------------

class SpineClass(enum.Enum):
    ATOMIC = "atomic"
    POSITIVE = "positive"
    NEITHER = "neither"


def classify_spine(s) -> SpineClass:
    if isinstance(s, SNil):
        return SpineClass.ATOMIC
    if isinstance(s, SAbort):
        return SpineClass.ATOMIC if isinstance(s.ann, IAtom) else SpineClass.POSITIVE
    if isinstance(s, (SArg, SProj)):
        return classify_spine(s.tail)
    if isinstance(s, SCase):
        arms = (s.arm1, s.arm2)
        if all(isinstance(e, Sel) and classify_spine(e.spine) is SpineClass.ATOMIC
               for e in arms):
            return SpineClass.ATOMIC
        if all(isinstance(e, In) or
               (isinstance(e, Sel) and classify_spine(e.spine) is SpineClass.POSITIVE)
               for e in arms):
            return SpineClass.POSITIVE
        return SpineClass.NEITHER
    raise TypeError(f"not an LJT spine: {s!r}")


def classify_expr(e) -> SpineClass:
    if isinstance(e, In):
        return SpineClass.POSITIVE
    return classify_spine(e.spine)


def _subterms(t):
    yield t
    if isinstance(t, Abs):
        yield from _subterms(t.body)
    elif isinstance(t, Tup):
        yield from _subterms(t.left)
        yield from _subterms(t.right)
    elif isinstance(t, Sel):
        yield from _subterms(t.spine)
    elif isinstance(t, In):
        yield from _subterms(t.body)
    elif isinstance(t, SArg):
        yield from _subterms(t.arg)
        yield from _subterms(t.tail)
    elif isinstance(t, SProj):
        yield from _subterms(t.tail)
    elif isinstance(t, SCase):
        yield from _subterms(t.arm1)
        yield from _subterms(t.arm2)


def is_legal(t) -> bool:
    """Every expression occurring in ``t`` is atomic or positive."""
    return all(classify_expr(u) is not SpineClass.NEITHER
               for u in _subterms(t) if isinstance(u, EXPRESSIONS))


# ---------------------------------------------------------------------------
# negative translation
# ---------------------------------------------------------------------------

def star_formula(a):
    """``A*``: every intuitionistic formula becomes a negative formula."""
    if isinstance(a, IImp):
        return Imp(Down(star_formula(a.left)), star_formula(a.right))
    if isinstance(a, IAnd):
        return AndN(star_formula(a.left), star_formula(a.right))
    if isinstance(a, IAtom):
        return NegAtom(a.name)
    if isinstance(a, (IBot, IOr)):
        return Up(circ(a))
    raise TypeError(f"not an intuitionistic formula: {a!r}")


def circ(r):
    """``R°`` for right formulas: atoms stay negative, positives become positive."""
    if isinstance(r, IAtom):
        return NegAtom(r.name)
    if isinstance(r, IBot):
        return Bot()
    if isinstance(r, IOr):
        return Or(Down(star_formula(r.left)), Down(star_formula(r.right)))
    raise TypeError(f"not a right formula: {r!r}")


def star_context(g: Context) -> Context:
    return g.map(star_formula)


def star_sequent(s):
    g = star_context(s.ctx)
    if isinstance(s, LjtInvert):
        return InvertR(g, star_formula(s.goal))
    if isinstance(s, LjtStable):
        return Stable(g, circ(s.goal))
    if isinstance(s, LjtFocus):
        return FocusL(g, star_formula(s.focus), circ(s.goal))
    raise TypeError(f"not an LJT sequent: {s!r}")


def _dlv(t):
    if isinstance(t, ljp.Ea):
        return t.body
    return ljp.Dlv(t)


def star_term(t):
    """Translate a legal LJT term or spine.  A bare expression translates to
    an LJP expression; under a binder, pair or argument it is wrapped in
    ``ea`` or ``ep`` according to its class."""
    if isinstance(t, EXPRESSIONS):
        _classify_legal(t)
        return star_expr(t)
    if isinstance(t, TERMS):
        return _star_t(t)
    return star_spine(t)


def star_proof(seq, t):
    """Translate ``t`` as an inhabitant of the LJT sequent ``seq``, so that the
    result inhabits ``star_sequent(seq)``."""
    if isinstance(seq, LjtInvert):
        return _star_t(t)
    return star_term(t)


def _classify_legal(e) -> SpineClass:
    cls = classify_expr(e)
    if cls is SpineClass.NEITHER:
        raise IllegalTerm(f"expression neither atomic nor positive: {e!r}")
    return cls


def _star_t(t):
    if isinstance(t, Abs):
        return ljp.Lam(ljp.Bind(t.var, star_formula(t.ann), _dlv(_star_t(t.body))))
    if isinstance(t, Tup):
        return ljp.Pair(_star_t(t.left), _star_t(t.right))
    if isinstance(t, EXPRESSIONS):
        if _classify_legal(t) is SpineClass.ATOMIC:
            return ljp.Ea(star_expr(t))
        return ljp.Ep(star_expr(t))
    raise TypeError(f"not an LJT term: {t!r}")


def star_expr(e):
    if isinstance(e, Sel):
        return ljp.Coret(e.var, star_spine(e.spine))
    if isinstance(e, In):
        return ljp.Ret(ljp.Inj(e.index, Down(star_formula(e.other)),
                               ljp.Thunk(_star_t(e.body))))
    raise TypeError(f"not an LJT expression: {e!r}")


def star_spine(s):
    if isinstance(s, SNil):
        return ljp.Nil()
    if isinstance(s, SArg):
        return ljp.VCons(ljp.Thunk(_star_t(s.arg)), star_spine(s.tail))
    if isinstance(s, SProj):
        return ljp.ICons(s.index, star_spine(s.tail))
    if isinstance(s, SAbort):
        return ljp.Cothunk(ljp.Abort(circ(s.ann)))
    if isinstance(s, SCase):
        for arm in (s.arm1, s.arm2):
            if classify_expr(arm) is SpineClass.NEITHER:
                raise IllegalTerm(f"illegal arm {arm!r}")
        return ljp.Cothunk(ljp.Copair(
            ljp.Bind(s.var1, star_formula(s.ann1), star_expr(s.arm1)),
            ljp.Bind(s.var2, star_formula(s.ann2), star_expr(s.arm2)),
        ))
    raise TypeError(f"not an LJT term: {s!r}")


# ---------------------------------------------------------------------------
# forgetful map
# ---------------------------------------------------------------------------

def erase(a):
    """Inverse of the translation on formulas: drop shifts and polarity."""
    if isinstance(a, NegAtom):
        return IAtom(a.name)
    if isinstance(a, Bot):
        return IBot()
    if isinstance(a, Up):
        return erase(a.body)
    if isinstance(a, AndN):
        return IAnd(erase(a.left), erase(a.right))
    if isinstance(a, Imp) and isinstance(a.left, Down):
        return IImp(erase(a.left.body), erase(a.right))
    if isinstance(a, Or) and isinstance(a.left, Down) and isinstance(a.right, Down):
        return IOr(erase(a.left.body), erase(a.right.body))
    raise IllegalTerm(f"formula outside the translated fragment: {a!r}")


def forget(t):
    """Left inverse of :func:`star_term` on legal star proof terms."""
    if isinstance(t, ljp.Lam):
        p = t.body
        if not isinstance(p, ljp.Bind):
            raise IllegalTerm(f"lambda over {p!r}")
        body = forget(p.body.body) if isinstance(p.body, ljp.Dlv) else _forget_expr(p.body)
        return Abs(p.var, erase(p.ann), body)
    if isinstance(t, ljp.Pair):
        return Tup(forget(t.left), forget(t.right))
    if isinstance(t, (ljp.Ea, ljp.Ep)):
        return _forget_expr(t.body)
    if isinstance(t, (ljp.Coret, ljp.Ret)):
        return _forget_expr(t)
    return _forget_spine(t)


def _forget_expr(e):
    if isinstance(e, ljp.Coret):
        return Sel(e.var, _forget_spine(e.spine))
    if (isinstance(e, ljp.Ret) and isinstance(e.body, ljp.Inj)
            and isinstance(e.body.body, ljp.Thunk) and isinstance(e.body.other, Down)):
        inj = e.body
        return In(inj.index, erase(inj.other.body), forget(inj.body.body))
    raise IllegalTerm(f"not a legal star expression: {e!r}")


def _forget_spine(s):
    if isinstance(s, ljp.Nil):
        return SNil()
    if isinstance(s, ljp.VCons) and isinstance(s.head, ljp.Thunk):
        return SArg(forget(s.head.body), _forget_spine(s.tail))
    if isinstance(s, ljp.ICons):
        return SProj(s.index, _forget_spine(s.tail))
    if isinstance(s, ljp.Cothunk):
        p = s.body
        if isinstance(p, ljp.Abort):
            return SAbort(erase(p.ann))
        if (isinstance(p, ljp.Copair) and isinstance(p.left, ljp.Bind)
                and isinstance(p.right, ljp.Bind)):
            l, r = p.left, p.right
            return SCase(l.var, erase(l.ann), _forget_expr(l.body),
                         r.var, erase(r.ann), _forget_expr(r.body))
    raise IllegalTerm(f"not a legal star proof term: {s!r}")


# ---------------------------------------------------------------------------
# decisions through the translation
# ---------------------------------------------------------------------------

def decide_ljt(kind: str, s):
    """``inhabited``, ``finite`` or ``count`` for an LJT sequent."""
    image = star_sequent(s)
    if kind == "inhabited":
        return decide.inhabited(image)
    if kind == "finite":
        return decide.finite(image)
    if kind == "count":
        return decide.count(image)
    raise ValueError(f"unknown decision {kind!r}")


def members_ljt(s, size_bound: int) -> frozenset:
    """Inhabitants of ``s`` whose translation has at most ``size_bound`` constructors."""
    return frozenset(forget(t) for t in decide.members(star_sequent(s), size_bound))


# ---------------------------------------------------------------------------
# independent LJT searcher
# ---------------------------------------------------------------------------

class _LjtOracle:
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

    def _rules(self, seq, n):
        g = seq.ctx
        if isinstance(seq, LjtInvert):
            a = seq.goal
            if isinstance(a, IImp):
                x = fresh_name(g, "x")
                for t in self.exact(LjtInvert(g.extend(x, a.left), a.right), n - 1):
                    yield Abs(x, a.left, t)
            elif isinstance(a, IAnd):
                for n1 in range(1, n - 1):
                    for t1 in self.exact(LjtInvert(g, a.left), n1):
                        for t2 in self.exact(LjtInvert(g, a.right), n - 1 - n1):
                            yield Tup(t1, t2)
            else:
                yield from self.exact(LjtStable(g, a), n)
        elif isinstance(seq, LjtStable):
            r = seq.goal
            for x, a in g:
                for s in self.exact(LjtFocus(g, a, r), n - 1):
                    yield Sel(x, s)
            if isinstance(r, IOr):
                for t in self.exact(LjtInvert(g, r.left), n - 1):
                    yield In(1, r.right, t)
                for t in self.exact(LjtInvert(g, r.right), n - 1):
                    yield In(2, r.left, t)
        elif isinstance(seq, LjtFocus):
            a, r = seq.focus, seq.goal
            if n == 1 and isinstance(a, IAtom) and a == r:
                yield SNil()
            if n == 1 and isinstance(a, IBot):
                yield SAbort(r)
            if isinstance(a, IImp):
                for n1 in range(1, n - 1):
                    for t in self.exact(LjtInvert(g, a.left), n1):
                        for s in self.exact(LjtFocus(g, a.right, r), n - 1 - n1):
                            yield SArg(t, s)
            if isinstance(a, IAnd):
                for s in self.exact(LjtFocus(g, a.left, r), n - 1):
                    yield SProj(1, s)
                for s in self.exact(LjtFocus(g, a.right, r), n - 1):
                    yield SProj(2, s)
            if isinstance(a, IOr):
                x = fresh_name(g, "x")
                g1, g2 = g.extend(x, a.left), g.extend(x, a.right)
                for n1 in range(1, n - 1):
                    for e1 in self.exact(LjtStable(g1, r), n1):
                        for e2 in self.exact(LjtStable(g2, r), n - 1 - n1):
                            yield SCase(x, a.left, e1, x, a.right, e2)
        else:
            raise TypeError(f"not an LJT sequent: {seq!r}")


def oracle_search_ljt(s, size_bound: int) -> frozenset:
    """All LJT inhabitants of ``s`` with at most ``size_bound`` constructors."""
    o = _LjtOracle()
    return frozenset().union(*(o.exact(s, n) for n in range(1, size_bound + 1)))
