"""ASCII concrete syntax: parsing and printing of formulas, sequents, LJP
terms, finitary forests and LJT terms.

Formulas, tightest first: atoms, ``bot``, the prefixes ``up``/``down``,
``/\\``, ``\\/`` (both left-associative), ``->`` (right-associative).  LJP
atoms carry a polarity suffix (``a+``, ``a-``); LJT atoms carry none.

Sequents::

    ctx |- A        ctx => N        ctx [N] |- R
    ctx |- [P]      ctx | P => A

with ``ctx`` a comma-separated list of ``x: F`` (possibly empty, also written
``.``).  LJT uses the first three forms.

LJP terms and forests::

    x  thunk(T)  inj1{P}(V)  ea(E)  ep(E)  lam(P)  pair(T, T)
    nil  cothunk(P)  cons(V, S)  proj1(S)  bind x{N}. E  abort{A}
    copair(P, P)  dlv(T)  ret(V)  coret x (S)
    sum{F, F, ...}  O_v  O_s  O_e  Y@(seq)  gfp Y@(seq). E

LJT terms::

    lam x{A}. T  pair(T, T)  x S  inj1{A}(T)
    nil  cons(T, S)  proj1(S)  abort{R}  case(x1{A1}. E1, x2{A2}. E2)
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from . import ljp, ljt
from .forest import FixVar, Gfp, Sum, canon_sum, empty
from .formulas import (
    AndN, Bot, Context, Down, FocusL, FocusR, IAnd, IAtom, IBot, IImp, IOr,
    Imp, InvertL, InvertR, LjtFocus, LjtInvert, LjtStable, NegAtom, Or,
    PosAtom, Stable, Up, check_ljp_context,
)

CALCULI = ("ljp", "ljt")


class ParseError(ValueError):
    def __init__(self, msg: str, text: str = "", pos: int = 0):
        line = text.count("\n", 0, pos) + 1
        col = pos - (text.rfind("\n", 0, pos) + 1) + 1
        super().__init__(f"{line}:{col}: {msg}")
        self.line, self.col = line, col


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    pos: int


_PUNCT = ["->", "=>", "|-", "/\\", "\\/", "|", "[", "]", "(", ")", "{", "}",
          ",", ":", ".", "@", "·"]
_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_']*")
_SPACE = re.compile(r"\s+")


def tokenize(text: str, calculus: str) -> list:
    out = []
    i = 0
    while i < len(text):
        m = _SPACE.match(text, i)
        if m:
            i = m.end()
            continue
        m = _IDENT.match(text, i)
        if m:
            j = m.end()
            if calculus == "ljp" and j < len(text) and (
                    text[j] == "+" or (text[j] == "-" and text[j + 1:j + 2] != ">")):
                out.append(Token("atom" + text[j], m.group(), i))
                i = j + 1
            else:
                out.append(Token("id", m.group(), i))
                i = j
            continue
        for p in _PUNCT:
            if text.startswith(p, i):
                out.append(Token("." if p == "·" else p, p, i))
                i += len(p)
                break
        else:
            raise ParseError(f"unexpected character {text[i]!r}", text, i)
    out.append(Token("eof", "", len(text)))
    return out


_KEYWORDS = {
    "up", "down", "bot", "thunk", "inj1", "inj2", "ea", "ep", "lam", "pair",
    "nil", "cothunk", "cons", "proj1", "proj2", "bind", "abort", "copair",
    "dlv", "ret", "coret", "sum", "gfp", "O_v", "O_s", "O_e", "case",
}


class _Parser:
    def __init__(self, text: str, calculus: str):
        if calculus not in CALCULI:
            raise ValueError(f"unknown calculus {calculus!r}")
        self.text = text
        self.calculus = calculus
        self.toks = tokenize(text, calculus)
        self.i = 0

    # -- helpers ------------------------------------------------------------

    @property
    def tok(self) -> Token:
        return self.toks[self.i]

    def peek(self, k: int = 1) -> Token:
        return self.toks[min(self.i + k, len(self.toks) - 1)]

    def error(self, msg: str, tok: Token = None):
        tok = tok or self.tok
        return ParseError(msg, self.text, tok.pos)

    def at(self, kind: str, text: str = None) -> bool:
        return self.tok.kind == kind and (text is None or self.tok.text == text)

    def at_kw(self, word: str) -> bool:
        return self.at("id", word)

    def take(self, kind: str, text: str = None) -> Token:
        if not self.at(kind, text):
            want = text or kind
            got = self.tok.text or "end of input"
            raise self.error(f"expected {want!r}, found {got!r}")
        tok = self.tok
        self.i += 1
        return tok

    def name(self) -> str:
        tok = self.take("id")
        if tok.text in _KEYWORDS:
            raise self.error(f"keyword {tok.text!r} used as a variable", tok)
        return tok.text

    def end(self):
        if not self.at("eof"):
            raise self.error(f"unexpected {self.tok.text!r}")

    def build(self, tok: Token, fn, *args):
        try:
            return fn(*args)
        except ValueError as exc:
            raise self.error(str(exc), tok) from None

    # -- formulas ----------------------------------------------------------

    def formula(self):
        start = self.tok
        left = self.disjunction()
        if self.at("->"):
            self.i += 1
            right = self.formula()
            cls = Imp if self.calculus == "ljp" else IImp
            return self.build(start, cls, left, right)
        return left

    def disjunction(self):
        start = self.tok
        left = self.conjunction()
        cls = Or if self.calculus == "ljp" else IOr
        while self.at("\\/"):
            self.i += 1
            left = self.build(start, cls, left, self.conjunction())
        return left

    def conjunction(self):
        start = self.tok
        left = self.prefix()
        cls = AndN if self.calculus == "ljp" else IAnd
        while self.at("/\\"):
            self.i += 1
            left = self.build(start, cls, left, self.prefix())
        return left

    def prefix(self):
        tok = self.tok
        if self.at("("):
            self.i += 1
            a = self.formula()
            self.take(")")
            return a
        if self.at_kw("bot"):
            self.i += 1
            return Bot() if self.calculus == "ljp" else IBot()
        if self.calculus == "ljp" and (self.at_kw("up") or self.at_kw("down")):
            self.i += 1
            body = self.prefix()
            return self.build(tok, Up if tok.text == "up" else Down, body)
        if tok.kind in ("atom+", "atom-"):
            self.i += 1
            return PosAtom(tok.text) if tok.kind == "atom+" else NegAtom(tok.text)
        if tok.kind == "id" and tok.text not in _KEYWORDS:
            if self.calculus == "ljp":
                raise self.error(f"atom {tok.text!r} is missing its polarity marker (+ or -)")
            self.i += 1
            return IAtom(tok.text)
        raise self.error(f"expected a formula, found {tok.text or 'end of input'!r}")

    # -- sequents ----------------------------------------------------------

    def context(self) -> Context:
        start = self.tok
        if self.at("."):
            self.i += 1
            return Context()
        pairs = []
        if self.at("id") and self.peek().kind == ":":
            while True:
                x = self.name()
                self.take(":")
                pairs.append((x, self.formula()))
                if not self.at(","):
                    break
                self.i += 1
        ctx = self.build(start, Context, tuple(pairs))
        if self.calculus == "ljp":
            self.build(start, check_ljp_context, ctx)
        return ctx

    def sequent(self):
        start = self.tok
        g = self.context()
        if self.calculus == "ljt":
            if self.at("=>"):
                self.i += 1
                return LjtInvert(g, self.formula())
            if self.at("["):
                self.i += 1
                a = self.formula()
                self.take("]")
                self.take("|-")
                r = self.formula()
                return self.build(start, LjtFocus, g, a, r)
            self.take("|-")
            return self.build(start, LjtStable, g, self.formula())
        if self.at("=>"):
            self.i += 1
            return self.build(start, InvertR, g, self.formula())
        if self.at("["):
            self.i += 1
            n = self.formula()
            self.take("]")
            self.take("|-")
            return self.build(start, FocusL, g, n, self.formula())
        if self.at("|"):
            self.i += 1
            p = self.formula()
            self.take("=>")
            return self.build(start, InvertL, g, p, self.formula())
        self.take("|-")
        if self.at("["):
            self.i += 1
            p = self.formula()
            self.take("]")
            return self.build(start, FocusR, g, p)
        return Stable(g, self.formula())

    # -- LJP terms and forests -----------------------------------------------

    def annotation(self):
        self.take("{")
        a = self.formula()
        self.take("}")
        return a

    def paren_term(self):
        self.take("(")
        t = self.term()
        self.take(")")
        return t

    def paren_pair(self):
        self.take("(")
        a = self.term()
        self.take(",")
        b = self.term()
        self.take(")")
        return a, b

    def fixvar(self):
        name = self.name()
        self.take("@")
        self.take("(")
        tok = self.tok
        seq = self.sequent()
        self.take(")")
        return name, seq, tok

    def term(self):
        tok = self.tok
        if tok.kind != "id":
            raise self.error(f"expected a term, found {tok.text or 'end of input'!r}")
        w = tok.text
        if w not in _KEYWORDS:
            if self.peek().kind == "@":
                name, seq, stok = self.fixvar()
                return self.build(stok, FixVar, name, seq)
            self.i += 1
            return ljp.PVar(w)
        self.i += 1
        if w in ("thunk", "ea", "ep", "lam", "cothunk", "dlv", "ret"):
            cls = {"thunk": ljp.Thunk, "ea": ljp.Ea, "ep": ljp.Ep, "lam": ljp.Lam,
                   "cothunk": ljp.Cothunk, "dlv": ljp.Dlv, "ret": ljp.Ret}[w]
            return cls(self.paren_term())
        if w in ("inj1", "inj2"):
            other = self.annotation()
            return ljp.Inj(int(w[-1]), other, self.paren_term())
        if w in ("proj1", "proj2"):
            return ljp.ICons(int(w[-1]), self.paren_term())
        if w == "pair":
            return ljp.Pair(*self.paren_pair())
        if w == "cons":
            return ljp.VCons(*self.paren_pair())
        if w == "copair":
            return ljp.Copair(*self.paren_pair())
        if w == "nil":
            return ljp.Nil()
        if w == "abort":
            return ljp.Abort(self.annotation())
        if w == "bind":
            x = self.name()
            ann = self.annotation()
            self.take(".")
            return ljp.Bind(x, ann, self.term())
        if w == "coret":
            x = self.name()
            return ljp.Coret(x, self.paren_term())
        if w in ("O_v", "O_s", "O_e"):
            return empty(w[-1])
        if w == "sum":
            self.take("{")
            parts = [self.term()]
            while self.at(","):
                self.i += 1
                parts.append(self.term())
            self.take("}")
            sort = getattr(parts[0], "SORT", None)
            return self.build(tok, canon_sum, sort, parts)
        if w == "gfp":
            name, seq, stok = self.fixvar()
            self.take(".")
            return self.build(stok, Gfp, name, seq, self.term())
        raise self.error(f"{w!r} does not start an LJP term", tok)

    # -- LJT terms -----------------------------------------------------------

    def lterm(self):
        tok = self.tok
        if tok.kind == "(":
            self.i += 1
            t = self.lterm()
            self.take(")")
            return t
        if tok.kind != "id":
            raise self.error(f"expected a term, found {tok.text or 'end of input'!r}")
        w = tok.text
        if w not in _KEYWORDS:
            self.i += 1
            return ljt.Sel(w, self.lspine())
        if w in ("nil", "cons", "proj1", "proj2", "abort", "case"):
            return self.lspine()
        self.i += 1
        if w == "lam":
            x = self.name()
            ann = self.annotation()
            self.take(".")
            return ljt.Abs(x, ann, self.lterm())
        if w == "pair":
            self.take("(")
            a = self.lterm()
            self.take(",")
            b = self.lterm()
            self.take(")")
            return ljt.Tup(a, b)
        if w in ("inj1", "inj2"):
            other = self.annotation()
            self.take("(")
            body = self.lterm()
            self.take(")")
            return ljt.In(int(w[-1]), other, body)
        raise self.error(f"{w!r} does not start an LJT term", tok)

    def lspine(self):
        tok = self.tok
        if tok.kind == "(":
            self.i += 1
            s = self.lspine()
            self.take(")")
            return s
        w = tok.text if tok.kind == "id" else None
        self.i += 1
        if w == "nil":
            return ljt.SNil()
        if w == "cons":
            self.take("(")
            a = self.lterm()
            self.take(",")
            s = self.lspine()
            self.take(")")
            return ljt.SArg(a, s)
        if w in ("proj1", "proj2"):
            self.take("(")
            s = self.lspine()
            self.take(")")
            return ljt.SProj(int(w[-1]), s)
        if w == "abort":
            return ljt.SAbort(self.annotation())
        if w == "case":
            self.take("(")
            x1 = self.name()
            a1 = self.annotation()
            self.take(".")
            e1 = self.lterm()
            self.take(",")
            x2 = self.name()
            a2 = self.annotation()
            self.take(".")
            e2 = self.lterm()
            self.take(")")
            return ljt.SCase(x1, a1, e1, x2, a2, e2)
        self.i -= 1
        raise self.error(f"expected a spine, found {tok.text or 'end of input'!r}", tok)


def parse(kind: str, calculus: str, text: str):
    """Parse ``text`` as a ``formula``, ``sequent`` or ``term``."""
    p = _Parser(text, calculus)
    if kind == "formula":
        out = p.formula()
    elif kind == "sequent":
        out = p.sequent()
    elif kind == "term":
        out = p.term() if calculus == "ljp" else p.lterm()
    else:
        raise ValueError(f"unknown syntactic category {kind!r}")
    p.end()
    return out


def parse_formula(text: str, calculus: str = "ljp"):
    return parse("formula", calculus, text)


def parse_sequent(text: str, calculus: str = "ljp"):
    return parse("sequent", calculus, text)


def parse_term(text: str, calculus: str = "ljp"):
    return parse("term", calculus, text)


# ---------------------------------------------------------------------------
# printing
# ---------------------------------------------------------------------------

_FORMULAS = (NegAtom, PosAtom, Up, Down, Imp, AndN, Or, Bot,
             IAtom, IBot, IImp, IAnd, IOr)
_PREC = {Imp: 1, IImp: 1, Or: 2, IOr: 2, AndN: 3, IAnd: 3, Up: 4, Down: 4}


def _prec(a) -> int:
    return _PREC.get(type(a), 5)


def _wrap(a, ok: bool) -> str:
    s = render_formula(a)
    return s if ok else f"({s})"


def render_formula(a) -> str:
    if isinstance(a, NegAtom):
        return a.name + "-"
    if isinstance(a, PosAtom):
        return a.name + "+"
    if isinstance(a, IAtom):
        return a.name
    if isinstance(a, (Bot, IBot)):
        return "bot"
    if isinstance(a, (Up, Down)):
        word = "up" if isinstance(a, Up) else "down"
        return f"{word} {_wrap(a.body, _prec(a.body) >= 4)}"
    p = _prec(a)
    op = {1: "->", 2: "\\/", 3: "/\\"}[p]
    if p == 1:
        left, right = _prec(a.left) > 1, True
    else:
        left, right = _prec(a.left) >= p, _prec(a.right) > p
    return f"{_wrap(a.left, left)} {op} {_wrap(a.right, right)}"


def render_context(g: Context) -> str:
    return ", ".join(f"{x}: {render_formula(a)}" for x, a in g)


def render_sequent(s) -> str:
    g = render_context(s.ctx)
    pre = g + " " if g else ""
    if isinstance(s, (Stable, LjtStable)):
        return f"{pre}|- {render_formula(s.goal)}"
    if isinstance(s, (InvertR, LjtInvert)):
        return f"{pre}=> {render_formula(s.goal)}"
    if isinstance(s, (FocusL, LjtFocus)):
        return f"{pre}[{render_formula(s.focus)}] |- {render_formula(s.goal)}"
    if isinstance(s, FocusR):
        return f"{pre}|- [{render_formula(s.goal)}]"
    if isinstance(s, InvertL):
        return f"{pre}| {render_formula(s.focus)} => {render_formula(s.goal)}"
    raise TypeError(f"not a sequent: {s!r}")


_UNARY = {ljp.Thunk: "thunk", ljp.Ea: "ea", ljp.Ep: "ep", ljp.Lam: "lam",
          ljp.Cothunk: "cothunk", ljp.Dlv: "dlv", ljp.Ret: "ret"}
_BINARY = {ljp.Pair: "pair", ljp.VCons: "cons", ljp.Copair: "copair"}


def render_term(t) -> str:
    """LJP proof terms and finitary forests."""
    if isinstance(t, Sum):
        if not t.parts:
            return f"O_{t.sort}"
        return "sum{" + ", ".join(render_term(p) for p in t.parts) + "}"
    if isinstance(t, FixVar):
        return f"{t.name}@({render_sequent(t.seq)})"
    if isinstance(t, Gfp):
        return f"gfp {t.name}@({render_sequent(t.seq)}). {render_term(t.body)}"
    if isinstance(t, ljp.PVar):
        return t.name
    if type(t) in _UNARY:
        return f"{_UNARY[type(t)]}({render_term(t.body)})"
    if type(t) in _BINARY:
        a, b = ljp.kids(t)
        return f"{_BINARY[type(t)]}({render_term(a)}, {render_term(b)})"
    if isinstance(t, ljp.Inj):
        return f"inj{t.index}{{{render_formula(t.other)}}}({render_term(t.body)})"
    if isinstance(t, ljp.ICons):
        return f"proj{t.index}({render_term(t.tail)})"
    if isinstance(t, ljp.Nil):
        return "nil"
    if isinstance(t, ljp.Abort):
        return f"abort{{{render_formula(t.ann)}}}"
    if isinstance(t, ljp.Bind):
        return f"bind {t.var}{{{render_formula(t.ann)}}}. {render_term(t.body)}"
    if isinstance(t, ljp.Coret):
        return f"coret {t.var} ({render_term(t.spine)})"
    return render_ljt_term(t)


def render_ljt_term(t) -> str:
    if isinstance(t, ljt.Abs):
        return f"lam {t.var}{{{render_formula(t.ann)}}}. {render_ljt_term(t.body)}"
    if isinstance(t, ljt.Tup):
        return f"pair({render_ljt_term(t.left)}, {render_ljt_term(t.right)})"
    if isinstance(t, ljt.Sel):
        return f"{t.var} {render_ljt_term(t.spine)}"
    if isinstance(t, ljt.In):
        return f"inj{t.index}{{{render_formula(t.other)}}}({render_ljt_term(t.body)})"
    if isinstance(t, ljt.SNil):
        return "nil"
    if isinstance(t, ljt.SArg):
        return f"cons({render_ljt_term(t.arg)}, {render_ljt_term(t.tail)})"
    if isinstance(t, ljt.SProj):
        return f"proj{t.index}({render_ljt_term(t.tail)})"
    if isinstance(t, ljt.SAbort):
        return f"abort{{{render_formula(t.ann)}}}"
    if isinstance(t, ljt.SCase):
        return (f"case({t.var1}{{{render_formula(t.ann1)}}}. {render_ljt_term(t.arm1)}, "
                f"{t.var2}{{{render_formula(t.ann2)}}}. {render_ljt_term(t.arm2)})")
    raise TypeError(f"not a term: {t!r}")


def render(value) -> str:
    """Canonical text for any formula, sequent, term or forest."""
    if isinstance(value, (Stable, InvertR, FocusL, FocusR, InvertL,
                          LjtStable, LjtInvert, LjtFocus)):
        return render_sequent(value)
    if isinstance(value, Context):
        return render_context(value)
    if isinstance(value, _FORMULAS):
        return render_formula(value)
    return render_term(value)
