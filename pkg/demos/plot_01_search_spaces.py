"""
Search spaces as finitary forests
=================================

Every LJP sequent has a finite description of all of its proofs.
"""

from ljpsearch import finrep_closed, parse_sequent, render, unfold_gfp

# a single hypothesis closing the goal: one proof, no recursion
s = parse_sequent("x: a- |- a-")
print(render(finrep_closed(s)))

# nothing to use: the forest is the empty sum O_e
print(render(finrep_closed(parse_sequent("|- a-"))))

# x can be applied again and again, so the forest refers back to itself
loop = parse_sequent("x: down a- -> a-, y: a- |- a-")
f = finrep_closed(loop)
print(render(f))

# the fixed point can be unfolded one step at a time
print(render(unfold_gfp(f)))

# invertible phases are resolved up front; only choices become sums
print(render(finrep_closed(parse_sequent("=> down a- -> down a- -> a-"))))
