"""
Intuitionistic logic through the negative translation
=====================================================

LJT sequents are translated to LJP, searched there, and mapped back.
"""

from ljpsearch import decide_ljt, members_ljt, parse_sequent, render, star_sequent
from ljpsearch.ljt import star_proof

for text in ["=> ((a -> b) -> a) -> a", "=> a /\\ b -> b /\\ a", "f: a -> a, x: a |- a",
             "x: a \\/ b => b \\/ a"]:
    s = parse_sequent(text, "ljt")
    print(text)
    print("   image:     ", render(star_sequent(s)))
    print("   inhabited: ", decide_ljt("inhabited", s), " finite:", decide_ljt("finite", s))

# the swap of a disjunction, as an LJT term and as its LJP image
s = parse_sequent("x: a \\/ b => b \\/ a", "ljt")
for t in members_ljt(s, 18):
    print(render(t))
    print(render(star_proof(s, t)))
