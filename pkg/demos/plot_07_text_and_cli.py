"""
Text syntax and the command line
================================

Everything the library produces prints in a syntax it can parse back.
"""

import subprocess
import sys

from ljpsearch import finrep_closed, parse, parse_sequent, render

s = parse_sequent("x: down a- -> a-, y: a- |- a-")
text = render(finrep_closed(s))
print(text)
print(parse("term", "ljp", text) == finrep_closed(s))

# the same queries from a shell
for argv in (["ljp", "count", "x: a-, y: a- |- a-"],
             ["ljt", "inhabited", "=> ((a -> b) -> a) -> a"],
             ["ljt", "enumerate", "x: a => a \\/ b", "--format", "json"]):
    p = subprocess.run([sys.executable, "-m", "ljpsearch", *argv], capture_output=True, text=True)
    print("$ ljpsearch", " ".join(argv), f"   (exit {p.returncode})")
    print(p.stdout.rstrip())
