"""
Predicates on forests
=====================

Emptiness and finiteness are read off a forest by mutually dual inductive
predicates, parameterized by what to assume at fixed-point variables.
"""

from ljpsearch import finrep_closed, parse_sequent, render
from ljpsearch.decide import binf, empty_pred, ff, nbinf, nff, sharp

# Empty assumes nothing at a cycle; it is the parameter behind inhabited
# (nbinf) and finite (ff).  Sharp assumes a cycle is inhabited exactly when
# its sequent is, which is what the finiteness rules consult on siblings.
for text in ["x: down a- -> a-, y: a- |- a-", "x: down a- -> a- |- a-"]:
    f = finrep_closed(parse_sequent(text))
    print(render(f))
    for name, p in (("Empty", empty_pred), ("Sharp", sharp)):
        print(f"   {name}: nbinf={nbinf(p, f)} binf={binf(p, f)} ff={ff(p, f)} nff={nff(p, f)}")

# first sequent: inhabited, and nff(Empty) says infinitely many proofs
# second sequent: the only move loops forever, so nothing is inhabited
