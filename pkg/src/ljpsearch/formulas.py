"""Formulas, contexts and logical sequents for LJP and LJT.

Polarized formulas (LJP)::

    N, M ::= a- | up P | P -> N | N /\\ M         (negative)
    P, Q ::= a+ | down N | bot | P \\/ Q          (positive)

Intuitionistic formulas (LJT)::

    A, B ::= A -> B | A /\\ B | R
    R    ::= a | bot | A \\/ B
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from dataclasses import dataclass
from typing import Iterator, Union


class _HashSlot:
    __slots__ = ("_h",)


def _cache_hash(cls):
    """Memoize the generated structural hash in a slot of the instance."""
    plain = cls.__hash__

    def __hash__(self):
        try:
            return self._h
        except AttributeError:
            h = plain(self)
            object.__setattr__(self, "_h", h)
            return h

    cls.__hash__ = __hash__
    return cls



# ---------------------------------------------------------------------------
# polarized formulas
# ---------------------------------------------------------------------------

@_cache_hash
@dataclass(frozen=True, slots=True)
class NegAtom(_HashSlot):
    name: str


@_cache_hash
@dataclass(frozen=True, slots=True)
class Up(_HashSlot):
    body: "PFormula"

    def __post_init__(self):
        if not is_positive(self.body):
            raise ValueError(f"up expects a positive formula, got {self.body!r}")


@_cache_hash
@dataclass(frozen=True, slots=True)
class Imp(_HashSlot):
    left: "PFormula"
    right: "PFormula"

    def __post_init__(self):
        if not is_positive(self.left) or not is_negative(self.right):
            raise ValueError("implication is P -> N")


@_cache_hash
@dataclass(frozen=True, slots=True)
class AndN(_HashSlot):
    left: "PFormula"
    right: "PFormula"

    def __post_init__(self):
        if not is_negative(self.left) or not is_negative(self.right):
            raise ValueError("conjunction joins two negative formulas")


@_cache_hash
@dataclass(frozen=True, slots=True)
class PosAtom(_HashSlot):
    name: str


@_cache_hash
@dataclass(frozen=True, slots=True)
class Down(_HashSlot):
    body: "PFormula"

    def __post_init__(self):
        if not is_negative(self.body):
            raise ValueError(f"down expects a negative formula, got {self.body!r}")


@_cache_hash
@dataclass(frozen=True, slots=True)
class Bot(_HashSlot):
    pass


@_cache_hash
@dataclass(frozen=True, slots=True)
class Or(_HashSlot):
    left: "PFormula"
    right: "PFormula"

    def __post_init__(self):
        if not is_positive(self.left) or not is_positive(self.right):
            raise ValueError("disjunction joins two positive formulas")


PFormula = Union[NegAtom, Up, Imp, AndN, PosAtom, Down, Bot, Or]

_NEGATIVE = (NegAtom, Up, Imp, AndN)
_POSITIVE = (PosAtom, Down, Bot, Or)
_COMPOSITE = (Up, Imp, AndN)


def is_negative(a) -> bool:
    return isinstance(a, _NEGATIVE)


def is_positive(a) -> bool:
    return isinstance(a, _POSITIVE)


def is_composite_negative(a) -> bool:
    return isinstance(a, _COMPOSITE)


def is_right(a) -> bool:
    """R-formulas: positive formulas and negative atoms."""
    return isinstance(a, _POSITIVE) or isinstance(a, NegAtom)


def is_left(a) -> bool:
    """L-formulas: negative formulas and positive atoms."""
    return isinstance(a, _NEGATIVE) or isinstance(a, PosAtom)


# ---------------------------------------------------------------------------
# intuitionistic formulas
# ---------------------------------------------------------------------------

@_cache_hash
@dataclass(frozen=True, slots=True)
class IAtom(_HashSlot):
    name: str


@_cache_hash
@dataclass(frozen=True, slots=True)
class IBot(_HashSlot):
    pass


@_cache_hash
@dataclass(frozen=True, slots=True)
class IImp(_HashSlot):
    left: "IFormula"
    right: "IFormula"


@_cache_hash
@dataclass(frozen=True, slots=True)
class IAnd(_HashSlot):
    left: "IFormula"
    right: "IFormula"


@_cache_hash
@dataclass(frozen=True, slots=True)
class IOr(_HashSlot):
    left: "IFormula"
    right: "IFormula"


IFormula = Union[IAtom, IBot, IImp, IAnd, IOr]


def is_right_i(a) -> bool:
    return isinstance(a, (IAtom, IBot, IOr))


def is_positive_i(a) -> bool:
    return isinstance(a, (IBot, IOr))


def formula_size(a) -> int:
    """Number of connectives and atoms."""
    if isinstance(a, (NegAtom, PosAtom, Bot, IAtom, IBot)):
        return 1
    if isinstance(a, (Up, Down)):
        return 1 + formula_size(a.body)
    return 1 + formula_size(a.left) + formula_size(a.right)


# ---------------------------------------------------------------------------
# contexts
# ---------------------------------------------------------------------------

class _ContextSlots(_HashSlot):
    __slots__ = ("_fs",)


@_cache_hash
@dataclass(frozen=True, slots=True)
class Context(_ContextSlots):
    """Ordered bindings ``name: formula`` with pairwise distinct names."""

    bindings: tuple = ()

    def __post_init__(self):
        names = [n for n, _ in self.bindings]
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable in context: {names}")

    @classmethod
    def of(cls, *pairs) -> "Context":
        return cls(tuple(pairs))

    def __iter__(self) -> Iterator[tuple]:
        return iter(self.bindings)

    def __len__(self) -> int:
        return len(self.bindings)

    def __contains__(self, name) -> bool:
        return any(n == name for n, _ in self.bindings)

    def get(self, name):
        for n, a in self.bindings:
            if n == name:
                return a
        return None

    @property
    def names(self) -> frozenset:
        return frozenset(n for n, _ in self.bindings)

    def formulas(self) -> frozenset:
        """The set ``|G|`` of formulas occurring in the context."""
        try:
            return self._fs
        except AttributeError:
            fs = frozenset(a for _, a in self.bindings)
            object.__setattr__(self, "_fs", fs)
            return fs

    def extend(self, name: str, formula) -> "Context":
        """Add a binding; an existing binding of ``name`` is shadowed (dropped)."""
        kept = tuple(b for b in self.bindings if b[0] != name)
        return Context(kept + ((name, formula),))

    def map(self, fn) -> "Context":
        return Context(tuple((n, fn(a)) for n, a in self.bindings))


def check_ljp_context(ctx: Context) -> None:
    for name, a in ctx:
        if not is_left(a):
            raise ValueError(f"{name} is bound to a non-atomic positive formula {a!r}")


def fresh_name(ctx: Context, prefix: str) -> str:
    """First of prefix0, prefix1, ... not bound in ``ctx``."""
    used = ctx.names
    k = 0
    while f"{prefix}{k}" in used:
        k += 1
    return f"{prefix}{k}"


def context_leq(g: Context, g2: Context) -> bool:
    """Inessential extension: ``g2`` only adds bindings at formulas already in ``g``."""
    return set(g.bindings) <= set(g2.bindings) and g.formulas() == g2.formulas()


# ---------------------------------------------------------------------------
# logical sequents
# ---------------------------------------------------------------------------

@_cache_hash
@dataclass(frozen=True, slots=True)
class FocusL(_HashSlot):
    """``G [N] |- R``"""

    ctx: Context
    focus: PFormula
    goal: PFormula

    def __post_init__(self):
        if not is_negative(self.focus) or not is_right(self.goal):
            raise ValueError("focus-left sequent is G [N] |- R")


@_cache_hash
@dataclass(frozen=True, slots=True)
class FocusR(_HashSlot):
    """``G |- [P]``"""

    ctx: Context
    goal: PFormula

    def __post_init__(self):
        if not is_positive(self.goal):
            raise ValueError("focus-right sequent is G |- [P]")


@_cache_hash
@dataclass(frozen=True, slots=True)
class InvertL(_HashSlot):
    """``G | P => A``"""

    ctx: Context
    focus: PFormula
    goal: PFormula

    def __post_init__(self):
        if not is_positive(self.focus):
            raise ValueError("invert-left sequent is G | P => A")


@_cache_hash
@dataclass(frozen=True, slots=True)
class InvertR(_HashSlot):
    """``G => N``"""

    ctx: Context
    goal: PFormula

    def __post_init__(self):
        if not is_negative(self.goal):
            raise ValueError("invert-right sequent is G => N")


@_cache_hash
@dataclass(frozen=True, slots=True)
class Stable(_HashSlot):
    """``G |- A``"""

    ctx: Context
    goal: PFormula


@_cache_hash
@dataclass(frozen=True, slots=True)
class LjtInvert(_HashSlot):
    """LJT ``G => A``"""

    ctx: Context
    goal: IFormula


@_cache_hash
@dataclass(frozen=True, slots=True)
class LjtStable(_HashSlot):
    """LJT ``G |- R``"""

    ctx: Context
    goal: IFormula

    def __post_init__(self):
        if not is_right_i(self.goal):
            raise ValueError("LJT stable sequents carry a right formula")


@_cache_hash
@dataclass(frozen=True, slots=True)
class LjtFocus(_HashSlot):
    """LJT ``G [A] |- R``"""

    ctx: Context
    focus: IFormula
    goal: IFormula

    def __post_init__(self):
        if not is_right_i(self.goal):
            raise ValueError("LJT focus sequents carry a right formula")


LjpSequent = Union[FocusL, FocusR, InvertL, InvertR, Stable]
LjtSequent = Union[LjtInvert, LjtStable, LjtFocus]

SEQUENT_SORT = {FocusR: "v", InvertR: "t", FocusL: "s", InvertL: "p", Stable: "e"}


def sort_of_sequent(s) -> str:
    return SEQUENT_SORT[type(s)]


def is_rstable(s) -> bool:
    return isinstance(s, Stable) and is_right(s.goal)


def rstable_leq(r: Stable, r2: Stable) -> bool:
    return (is_rstable(r) and is_rstable(r2) and r.goal == r2.goal
            and context_leq(r.ctx, r2.ctx))


def ljp_sequent(s) -> bool:
    return isinstance(s, (FocusL, FocusR, InvertL, InvertR, Stable))


@lru_cache(maxsize=None)
def formula_key(a) -> str:
    return repr(a)


def alpha_key(s) -> tuple:
    """Cache key invariant under renaming and reordering of context variables."""
    counts = Counter(formula_key(a) for _, a in s.ctx)
    ctx_key = tuple(sorted(counts.items()))
    rest = tuple(getattr(s, f) for f in ("focus", "goal") if hasattr(s, f))
    return (type(s).__name__, ctx_key, rest)


# ---------------------------------------------------------------------------
# weight
# ---------------------------------------------------------------------------

_EXTRA = {Down: 0, AndN: 0, Or: 1, Up: 2, Imp: 3}


def weight(item) -> int:
    """Weight of a polarized formula, context or LJP logical sequent."""
    if isinstance(item, (Bot, PosAtom)):
        return 0
    if isinstance(item, NegAtom):
        return 1
    if isinstance(item, (Up, Down)):
        return _EXTRA[type(item)] + weight(item.body)
    if isinstance(item, (Imp, AndN, Or)):
        return _EXTRA[type(item)] + weight(item.left) + weight(item.right)
    if isinstance(item, Context):
        return sum(weight(a) for _, a in item)
    if isinstance(item, Stable):
        return weight(item.ctx) + weight(item.goal)
    if isinstance(item, InvertR):
        return weight(item.ctx) + weight(item.goal) - 1
    if isinstance(item, FocusR):
        return weight(item.ctx) + weight(item.goal)
    if isinstance(item, InvertL):
        return weight(item.ctx) + weight(item.focus) + weight(item.goal) + 1
    if isinstance(item, FocusL):
        return weight(item.ctx) + weight(item.focus) + weight(item.goal)
    raise TypeError(f"no weight for {item!r}")
