"""
Deciding inhabitation and finiteness
====================================

Both questions are answered from the finitary forest, without enumerating.
"""

from ljpsearch import count, finite, inhabited, parse_sequent

cases = [
    "x: a- |- a-",
    "|- a-",
    "x: a-, y: a- |- a-",
    "x: down a- -> a-, y: a- |- a-",
    "x: down a- -> a- |- a-",
]

for text in cases:
    s = parse_sequent(text)
    fin = finite(s)
    n = count(s) if fin else "inf"
    print(f"{text:32s} inhabited={inhabited(s)!s:5s} finite={fin!s:5s} count={n}")

# the last case has a finite (empty) solution space: every attempt loops
