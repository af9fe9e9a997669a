"""Proof search for the polarized focused calculus LJP and, through the
negative translation, for LJT (full intuitionistic propositional logic).

Solution spaces are represented by finitary forests; inhabitation,
finiteness and counting are decided on them.
"""

from .decide import (
    NotFiniteError, count, canonical_names, clear_memos, decontract_members,
    empty_pred, ff, finite, forest_members, inhabited, members, nbinf, nff,
    binf, oracle_search, sharp,
)
from .forest import (
    FixVar, Gfp, Sum, canon_sum, fpv, is_closed, is_guarded, is_well_bound,
    node_count,
)
from .formulas import (
    AndN, Bot, Context, Down, FocusL, FocusR, IAnd, IAtom, IBot, IImp, IOr,
    Imp, InvertL, InvertR, LjtFocus, LjtInvert, LjtStable, NegAtom, Or,
    PosAtom, Stable, Up, alpha_key, context_leq, weight,
)
from .ljp import check, infer, size, why_not
from .ljt import (
    check_ljt, decide_ljt, erase, forget, is_legal, members_ljt,
    oracle_search_ljt, star_formula, star_proof, star_sequent, star_term,
)
from .search import finrep, finrep_closed, unfold, unfold_gfp
from .syntax import ParseError, parse, parse_formula, parse_sequent, parse_term, render

__version__ = "0.1.0"
