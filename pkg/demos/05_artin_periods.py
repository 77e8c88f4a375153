"""
Normalized periods over many primes
===================================

Reduce the pair {x^2+x-1, x^2+2x-1} modulo admissible primes, iterate the
self-image map and record T(p) = period / (p - 1) and the transient length.
Pass a number of primes on the command line (default 2000).
"""

import sys
from fractions import Fraction

import numpy as np

from wedgelab.harness import ARTIN_PAIR, cmd_artin

n = int(sys.argv[1]) if len(sys.argv) > 1 else 2000
rows, rep = cmd_artin(*ARTIN_PAIR, num_primes=n)
print(rep.format())
print("T(p) = 1 at:", [r.p for r in rows if r.T == 1])

# distribution function D(x) on a grid; mass gathers just below 1/(2k)
T = np.array([float(r.T) for r in rows])
for x in [1, 1 / 2, 1 / 3, 1 / 4, 1 / 5, 1 / 6, 1 / 8]:
    below = np.mean((T > x - 0.01) & (T <= x))
    print(f"  climb just below {str(Fraction(x).limit_denominator(10)):>4}: {below:.4f}")
