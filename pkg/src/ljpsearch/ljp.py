"""LJP proof terms and their type checker.

Five sorts, each constructor seen as a function symbol over sorts::

    v ::= z | thunk(t) | inj_i{P}(v)
    t ::= ea(e) | ep(e) | lam(p) | pair(t, t)
    s ::= nil | cothunk(p) | cons(v, s) | proj_i(s)
    p ::= bind z{a+}. e | bind x{N}. e | abort{A} | copair(p, p)
    e ::= dlv(t) | ret(v) | coret x (s)

Every class carries ``SORT`` and the names/sorts of its children, which lets
finitary forests reuse the very same constructors as inner nodes.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, fields, replace
from typing import ClassVar, Optional

from .formulas import (
    AndN, Bot, Context, Down, FocusL, FocusR, Imp, InvertL, InvertR, NegAtom,
    Or, PosAtom, Stable, Up, is_composite_negative, is_negative, is_positive,
    is_right,
)

log = logging.getLogger(__name__)


class TypingError(Exception):
    pass


@dataclass(frozen=True, slots=True)
class PVar:
    name: str
    SORT: ClassVar[str] = "v"
    KIDS: ClassVar[tuple] = ()


@dataclass(frozen=True, slots=True)
class Thunk:
    body: object
    SORT: ClassVar[str] = "v"
    KIDS: ClassVar[tuple] = (("body", "t"),)


@dataclass(frozen=True, slots=True)
class Inj:
    """``inj_i{P}(v)``; ``other`` is the disjunct *not* chosen."""

    index: int
    other: object
    body: object
    SORT: ClassVar[str] = "v"
    KIDS: ClassVar[tuple] = (("body", "v"),)


@dataclass(frozen=True, slots=True)
class Ea:
    body: object
    SORT: ClassVar[str] = "t"
    KIDS: ClassVar[tuple] = (("body", "e"),)


@dataclass(frozen=True, slots=True)
class Ep:
    body: object
    SORT: ClassVar[str] = "t"
    KIDS: ClassVar[tuple] = (("body", "e"),)


@dataclass(frozen=True, slots=True)
class Lam:
    body: object
    SORT: ClassVar[str] = "t"
    KIDS: ClassVar[tuple] = (("body", "p"),)


@dataclass(frozen=True, slots=True)
class Pair:
    left: object
    right: object
    SORT: ClassVar[str] = "t"
    KIDS: ClassVar[tuple] = (("left", "t"), ("right", "t"))


@dataclass(frozen=True, slots=True)
class Nil:
    SORT: ClassVar[str] = "s"
    KIDS: ClassVar[tuple] = ()


@dataclass(frozen=True, slots=True)
class Cothunk:
    body: object
    SORT: ClassVar[str] = "s"
    KIDS: ClassVar[tuple] = (("body", "p"),)


@dataclass(frozen=True, slots=True)
class VCons:
    """``v :: s``"""

    head: object
    tail: object
    SORT: ClassVar[str] = "s"
    KIDS: ClassVar[tuple] = (("head", "v"), ("tail", "s"))


@dataclass(frozen=True, slots=True)
class ICons:
    """``i :: s``"""

    index: int
    tail: object
    SORT: ClassVar[str] = "s"
    KIDS: ClassVar[tuple] = (("tail", "s"),)


@dataclass(frozen=True, slots=True)
class Bind:
    """``z{a+}. e`` when ``ann`` is a positive atom, ``x{N}. e`` otherwise."""

    var: str
    ann: object
    body: object
    SORT: ClassVar[str] = "p"
    KIDS: ClassVar[tuple] = (("body", "e"),)


@dataclass(frozen=True, slots=True)
class Abort:
    ann: object
    SORT: ClassVar[str] = "p"
    KIDS: ClassVar[tuple] = ()


@dataclass(frozen=True, slots=True)
class Copair:
    left: object
    right: object
    SORT: ClassVar[str] = "p"
    KIDS: ClassVar[tuple] = (("left", "p"), ("right", "p"))


@dataclass(frozen=True, slots=True)
class Dlv:
    body: object
    SORT: ClassVar[str] = "e"
    KIDS: ClassVar[tuple] = (("body", "t"),)


@dataclass(frozen=True, slots=True)
class Ret:
    body: object
    SORT: ClassVar[str] = "e"
    KIDS: ClassVar[tuple] = (("body", "v"),)


@dataclass(frozen=True, slots=True)
class Coret:
    var: str
    spine: object
    SORT: ClassVar[str] = "e"
    KIDS: ClassVar[tuple] = (("spine", "s"),)


CONSTRUCTORS = (PVar, Thunk, Inj, Ea, Ep, Lam, Pair, Nil, Cothunk, VCons,
                ICons, Bind, Abort, Copair, Dlv, Ret, Coret)


def is_constructor(t) -> bool:
    return isinstance(t, CONSTRUCTORS)


def kids(t) -> tuple:
    return tuple(getattr(t, name) for name, _ in t.KIDS)


def with_kids(t, new_kids):
    if not t.KIDS:
        return t
    return replace(t, **{name: k for (name, _), k in zip(t.KIDS, new_kids)})


_ANNOTATIONS = {
    cls: tuple(f.name for f in fields(cls) if f.name not in {n for n, _ in cls.KIDS})
    for cls in CONSTRUCTORS
}


def head_symbol(t) -> tuple:
    """The constructor symbol of ``t`` with its non-child annotations."""
    return (type(t).__name__,) + tuple(getattr(t, f) for f in _ANNOTATIONS[type(t)])


def size(t) -> int:
    """Number of constructors; variables and ``nil`` count one."""
    return 1 + sum(size(k) for k in kids(t))


def bound_names(t) -> set:
    out = set()
    stack = [t]
    while stack:
        u = stack.pop()
        if isinstance(u, Bind):
            out.add(u.var)
        stack.extend(kids(u))
    return out


# ---------------------------------------------------------------------------
# typing
# ---------------------------------------------------------------------------

def _lookup(g: Context, name: str):
    a = g.get(name)
    if a is None:
        raise TypingError(f"unbound variable {name}")
    return a


def coterm_type(g: Context, p) -> tuple:
    """The pair ``(P, A)`` with ``G | p : P => A``."""
    if isinstance(p, Bind):
        if isinstance(p.ann, PosAtom):
            return p.ann, infer(g.extend(p.var, p.ann), p.body)
        if is_negative(p.ann):
            return Down(p.ann), infer(g.extend(p.var, p.ann), p.body)
        raise TypingError(f"binder {p.var} annotated with {p.ann!r}")
    if isinstance(p, Abort):
        return Bot(), p.ann
    if isinstance(p, Copair):
        p1, a1 = coterm_type(g, p.left)
        p2, a2 = coterm_type(g, p.right)
        if a1 != a2:
            raise TypingError(f"copair branches disagree: {a1!r} vs {a2!r}")
        return Or(p1, p2), a1
    raise TypingError(f"expected a co-term, got {type(p).__name__}")


def infer(g: Context, term, given=None):
    """The unique formula completing the judgement for ``term`` in ``g``.

    Values give ``P``, terms ``N``, stable expressions and co-terms ``A``; a
    spine needs its focus formula as ``given`` and yields ``R``.
    """
    if isinstance(term, PVar):
        a = _lookup(g, term.name)
        if not isinstance(a, PosAtom):
            raise TypingError(f"{term.name} is not a positive variable")
        return a
    if isinstance(term, Thunk):
        return Down(_negative(infer(g, term.body)))
    if isinstance(term, Inj):
        if term.index not in (1, 2) or not is_positive(term.other):
            raise TypingError("bad injection annotation")
        p = infer(g, term.body)
        return Or(p, term.other) if term.index == 1 else Or(term.other, p)
    if isinstance(term, Ea):
        a = infer(g, term.body)
        if not isinstance(a, NegAtom):
            raise TypingError(f"ea expects a negative atom, got {a!r}")
        return a
    if isinstance(term, Ep):
        a = infer(g, term.body)
        if not is_positive(a):
            raise TypingError(f"ep expects a positive formula, got {a!r}")
        return Up(a)
    if isinstance(term, Lam):
        p, a = coterm_type(g, term.body)
        return Imp(p, _negative(a))
    if isinstance(term, Pair):
        return AndN(_negative(infer(g, term.left)), _negative(infer(g, term.right)))
    if isinstance(term, (Bind, Abort, Copair)):
        return coterm_type(g, term)[1]
    if isinstance(term, Dlv):
        a = infer(g, term.body)
        if not is_composite_negative(a):
            raise TypingError(f"dlv body must be composite negative, got {a!r}")
        return a
    if isinstance(term, Ret):
        return infer(g, term.body)
    if isinstance(term, Coret):
        n = _lookup(g, term.var)
        if not is_negative(n):
            raise TypingError(f"coret on {term.var}, bound to non-negative {n!r}")
        return infer(g, term.spine, n)
    if isinstance(term, (Nil, Cothunk, VCons, ICons)):
        if given is None:
            raise TypingError("a spine needs its focus formula")
        return _spine(g, term, given)
    raise TypingError(f"not an LJP proof term: {term!r}")


def _negative(a):
    if not is_negative(a):
        raise TypingError(f"expected a negative formula, got {a!r}")
    return a


def _spine(g, s, n):
    if isinstance(s, Nil):
        if not isinstance(n, NegAtom):
            raise TypingError(f"nil against non-atomic focus {n!r}")
        return n
    if isinstance(s, Cothunk):
        if not isinstance(n, Up):
            raise TypingError(f"cothunk against {n!r}")
        p, a = coterm_type(g, s.body)
        if p != n.body:
            raise TypingError(f"cothunk co-term has type {p!r}, expected {n.body!r}")
        if not is_right(a):
            raise TypingError(f"spine result {a!r} is not an R-formula")
        return a
    if isinstance(s, VCons):
        if not isinstance(n, Imp):
            raise TypingError(f"argument applied to {n!r}")
        p = infer(g, s.head)
        if p != n.left:
            raise TypingError(f"argument of type {p!r}, expected {n.left!r}")
        return _spine(g, s.tail, n.right)
    if isinstance(s, ICons):
        if not isinstance(n, AndN) or s.index not in (1, 2):
            raise TypingError(f"projection applied to {n!r}")
        return _spine(g, s.tail, n.left if s.index == 1 else n.right)
    raise TypingError(f"expected a spine, got {type(s).__name__}")


def why_not(seq, term) -> Optional[str]:
    """``None`` when ``term`` inhabits ``seq``, otherwise a diagnostic."""
    try:
        if isinstance(seq, FocusL):
            if term.SORT != "s":
                return f"expected a spine, got {type(term).__name__}"
            got = _spine(seq.ctx, term, seq.focus)
        elif isinstance(seq, InvertL):
            if term.SORT != "p":
                return f"expected a co-term, got {type(term).__name__}"
            got = coterm_type(seq.ctx, term)
            if got != (seq.focus, seq.goal):
                return f"co-term has type {got!r}"
            return None
        else:
            want = {FocusR: "v", InvertR: "t", Stable: "e"}[type(seq)]
            if getattr(term, "SORT", None) != want:
                return f"expected sort {want}, got {type(term).__name__}"
            got = infer(seq.ctx, term)
    except TypingError as exc:
        return str(exc)
    except (AttributeError, KeyError) as exc:
        return f"malformed input: {exc}"
    if got != seq.goal:
        return f"inferred {got!r}, sequent demands {seq.goal!r}"
    return None


def check(seq, term) -> bool:
    msg = why_not(seq, term)
    if msg is not None:
        log.debug("check failed: %s", msg)
    return msg is None
