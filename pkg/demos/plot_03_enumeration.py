"""
Enumerating proof terms by size
===============================

members(s, k) lists every proof of size at most k.  An independent search
straight from the typing rules gives the same sets.
"""

from ljpsearch import canonical_names, members, oracle_search, parse_sequent, render
from ljpsearch.ljp import size

s = parse_sequent("x: down a- -> a-, y: a- |- a-")
for k in (2, 7, 12, 17):
    ms = sorted(members(s, k), key=size)
    print(k, len(ms))
for t in sorted(members(s, 12), key=size):
    print(f"  {size(t):2d}  {render(t)}")

s2 = parse_sequent("=> down (down a- -> a-) -> down a- -> a-")
a = {canonical_names(t) for t in members(s2, 12)}
b = {canonical_names(t) for t in oracle_search(s2, 12)}
print("agrees with the oracle:", a == b, len(a))
