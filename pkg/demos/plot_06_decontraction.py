"""
Decontraction
=============

Adding a copy of a hypothesis multiplies proofs in a predictable way.
"""

from ljpsearch import members, parse_sequent, render
from ljpsearch.decide import decontract_members

small = parse_sequent("x: down a- -> a-, y: a- |- a-")
big = parse_sequent("x: down a- -> a-, y: a-, y2: a- |- a-")

for t in sorted(members(small, 7), key=render):
    print(render(t))
    for u in sorted(decontract_members(small.ctx, big.ctx, t), key=render):
        print("   ", render(u))
print(len(members(big, 7)), "members in the extended context")
