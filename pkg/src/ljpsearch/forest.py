"""Finitary forests: LJP constructors plus finite sums, fixed-point
variables ``X@rho`` and ``gfp X@rho. T`` binders.

Inner nodes are the proof-term classes of :mod:`ljpsearch.ljp` whose children
may be arbitrary forests.  Sums are kept in a canonical form (flat, sorted,
duplicate-free) so that structural equality realizes the identification of
sums up to associativity, commutativity and idempotency.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import ClassVar, Iterator

from .formulas import Stable, formula_key, rstable_leq, is_rstable
from .ljp import head_symbol, is_constructor, kids


class SortError(ValueError):
    pass


@dataclass(frozen=True, slots=True)
class Sum:
    sort: str
    parts: tuple = ()
    KIDS: ClassVar[tuple] = ()

    @property
    def SORT(self):
        return self.sort


@dataclass(frozen=True, slots=True)
class FixVar:
    name: str
    seq: Stable
    SORT: ClassVar[str] = "e"
    KIDS: ClassVar[tuple] = ()

    def __post_init__(self):
        if not is_rstable(self.seq):
            raise SortError("fixed-point variables carry R-stable sequents")


@dataclass(frozen=True, slots=True)
class Gfp:
    name: str
    seq: Stable
    body: object
    SORT: ClassVar[str] = "e"
    KIDS: ClassVar[tuple] = ()

    def __post_init__(self):
        if not is_rstable(self.seq):
            raise SortError("gfp binders carry R-stable sequents")
        if sort_of(self.body) != "e":
            raise SortError("gfp body must be a stable expression")


def empty(sort: str) -> Sum:
    return Sum(sort, ())


def sort_of(t) -> str:
    return t.SORT


def children(t) -> tuple:
    """Immediate sub-forests, uniformly for every node kind."""
    if isinstance(t, Sum):
        return t.parts
    if isinstance(t, Gfp):
        return (t.body,)
    if isinstance(t, FixVar):
        return ()
    return kids(t)


# ---------------------------------------------------------------------------
# canonical ordering and sums
# ---------------------------------------------------------------------------

def _ann_key(x):
    if isinstance(x, Stable):
        return seq_key(x)
    if isinstance(x, (int, str)):
        return str(x)
    return formula_key(x)


_seq_keys: dict = {}
# id(node) -> (node, key); holding the node keeps its id from being reused
_order_keys: dict = {}


def seq_key(s) -> str:
    hit = _seq_keys.get(s)
    if hit is None:
        hit = _seq_keys.setdefault(s, repr(s))
    return hit


def order_key(t) -> tuple:
    """Total structural order used to sort sum summands."""
    hit = _order_keys.get(id(t))
    if hit is not None and hit[0] is t:
        return hit[1]
    if isinstance(t, Sum):
        key = ("~sum", t.sort, tuple(order_key(p) for p in t.parts))
    elif isinstance(t, FixVar):
        key = ("~var", t.name, seq_key(t.seq), ())
    elif isinstance(t, Gfp):
        key = ("~gfp", t.name, seq_key(t.seq), (order_key(t.body),))
    else:
        head = head_symbol(t)
        key = (head[0], tuple(_ann_key(a) for a in head[1:]),
               tuple(order_key(k) for k in kids(t)))
    _order_keys[id(t)] = (t, key)
    return key


def clear_caches() -> None:
    _seq_keys.clear()
    _order_keys.clear()


def canon_sum(sort: str, parts) -> object:
    """Flatten, deduplicate and sort; singletons collapse to their element."""
    flat = []
    for p in parts:
        if sort_of(p) != sort:
            raise SortError(f"summand of sort {sort_of(p)} in a sum of sort {sort}")
        if isinstance(p, Sum):
            flat.extend(p.parts)
        else:
            flat.append(p)
    if sort not in ("v", "s", "e"):
        raise SortError(f"no sums at sort {sort}")
    keyed = {}
    for p in flat:
        keyed.setdefault(order_key(p), p)
    uniq = [keyed[k] for k in sorted(keyed)]
    if len(uniq) == 1:
        return uniq[0]
    return Sum(sort, tuple(uniq))


# ---------------------------------------------------------------------------
# fixed-point variables
# ---------------------------------------------------------------------------

def _free(t, memo: dict) -> frozenset:
    """Free occurrences of ``t`` as ``(FixVar, shallow)`` pairs, where
    ``shallow`` means no constructor lies above the occurrence."""
    hit = memo.get(id(t))
    if hit is not None:
        return hit[1]
    if isinstance(t, FixVar):
        out = frozenset({(t, True)})
    elif isinstance(t, Gfp):
        out = frozenset(o for o in _free(t.body, memo) if not _binds(t, o[0]))
    elif isinstance(t, Sum):
        out = frozenset().union(*(_free(c, memo) for c in t.parts))
    else:
        out = frozenset((v, False) for c in children(t) for v, _ in _free(c, memo))
    memo[id(t)] = (t, out)
    return out


def fpv(t) -> frozenset:
    """Free typed fixed-point variables ``{(X, rho)}``.

    ``gfp X@rho`` binds every ``X@rho'`` with ``rho <= rho'``.
    """
    return frozenset((v.name, v.seq) for v, _ in _free(t, {}))


def _binds(g: Gfp, v: FixVar) -> bool:
    return v.name == g.name and rstable_leq(g.seq, v.seq)


def occurrences(t) -> Iterator[tuple]:
    """Free occurrences as ``(FixVar, depth, path)``.

    ``path`` is the list of child indices (as in :func:`children`) from the
    root; depth counts only proof-term constructors on that path.
    """
    def walk(u, depth, path, binders):
        if isinstance(u, FixVar):
            if not any(_binds(b, u) for b in binders):
                yield u, depth, path
            return
        if isinstance(u, Gfp):
            yield from walk(u.body, depth, path + (0,), binders + (u,))
            return
        step = 0 if isinstance(u, Sum) else 1
        for i, c in enumerate(children(u)):
            yield from walk(c, depth + step, path + (i,), binders)

    yield from walk(t, 0, (), ())


def at_path(t, path):
    for i in path:
        t = children(t)[i]
    return t


def constructors_on_path(t, path) -> int:
    n = 0
    for i in path:
        if is_constructor(t):
            n += 1
        t = children(t)[i]
    return n


def gfp_subterms(t) -> Iterator[Gfp]:
    """Distinct ``Gfp`` nodes of ``t`` (shared subforests are visited once)."""
    seen = set()
    stack = [t]
    while stack:
        u = stack.pop()
        if id(u) in seen:
            continue
        seen.add(id(u))
        if isinstance(u, Gfp):
            yield u
        stack.extend(children(u))


def is_well_bound(t) -> bool:
    """Every occurrence of a binder's name free in its body is bound by it."""
    memo = {}
    for g in gfp_subterms(t):
        for v, _ in _free(g.body, memo):
            if v.name == g.name and not rstable_leq(g.seq, v.seq):
                return False
    return True


def is_guarded(t) -> bool:
    """Every bound occurrence sits under at least one constructor."""
    memo = {}
    for g in gfp_subterms(t):
        for v, shallow in _free(g.body, memo):
            if shallow and _binds(g, v):
                return False
    return True


def is_closed(t) -> bool:
    return not fpv(t)


def node_count(t) -> int:
    """Number of distinct nodes; forests share identical subforests."""
    seen = set()
    stack = [t]
    while stack:
        u = stack.pop()
        if id(u) in seen:
            continue
        seen.add(id(u))
        stack.extend(children(u))
    return len(seen)


def check_sorts(t) -> None:
    """Raise :class:`SortError` unless every child has its declared sort."""
    if isinstance(t, Sum):
        for p in t.parts:
            if sort_of(p) != t.sort:
                raise SortError(f"summand of sort {sort_of(p)} under sum {t.sort}")
            check_sorts(p)
        return
    if isinstance(t, Gfp):
        check_sorts(t.body)
        return
    if isinstance(t, FixVar):
        return
    for (name, want), c in zip(t.KIDS, kids(t)):
        if sort_of(c) != want:
            raise SortError(f"{type(t).__name__}.{name} has sort {sort_of(c)}, expected {want}")
        check_sorts(c)


def is_member_term(t) -> bool:
    """True when ``t`` is a plain proof term (no sums or fixed points)."""
    return is_constructor(t) and all(is_member_term(k) for k in kids(t))
