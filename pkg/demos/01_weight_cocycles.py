"""Weight systems on the Fock tree and the cocycle laws their weight
functions satisfy.

A weight system assigns a positive scalar to every edge of the rooted
n-ary tree whose vertices are words over {1..n}.  W(u, w) multiplies the
edge weights on the path from u down to w*u; the commutant weights
mu_{i,w} = W(i,w)/W(e,w) play the same role for the right shifts.
"""

import numpy as np

from fockshift import (
    CommutantMu,
    ConstantWeights,
    PeriodicWeights,
    ScaledWeights,
    check_cocycles,
    check_intertwining,
    left_weight,
    parse_word,
    right_weight,
)
from fockshift.weights import table_from_strings
from fockshift.words import EMPTY

# Three of the closed families: the unweighted system, scalar multiples of
# the creation operators, and a 2-periodic system determined by six scalars.
unweighted = ConstantWeights(2, 1.0)
scaled = ScaledWeights(2, (2.0, 3.0))
periodic = PeriodicWeights(
    2, 2, table_from_strings({"1:e": 1, "2:e": 1, "1:1": 2, "2:1": 2, "1:2": 2, "2:2": 2})
)

print("edge weights of the periodic system near the root:")
for text in ("e", "1", "2", "11", "21"):
    w = parse_word(text)
    print(f"  lambda(1, {text:>2}) = {periodic.lambda_of(1, w):g}")

# W(e, (21)^k) multiplies k copies of a*d; down the 2-periodic tree the
# weight products are entirely determined by the six remainder scalars.
print("\nweight products along the zig-zag path (21)^k:")
for k in range(5):
    w = parse_word("21") ** k
    print(f"  W(e, (21)^{k}) = {left_weight(periodic, EMPTY, w):g}")

# Both weight functions satisfy exact cocycle identities; the sweep below
# checks every triple of words with |u| + |v| + |w| <= 6.
for name, ws in (("unweighted", unweighted), ("scaled", scaled), ("periodic", periodic)):
    report = check_cocycles(ws, None, 6)
    print(f"\n{name}: max cocycle defect over {report.checks} checks = {report.max_defect:.3e}")

# The intertwining identity mu_{i,v} W(v*i, w) = mu_{i,w*v} W(v, w) is the
# computational heart of the reflexivity argument.
report = check_intertwining(periodic, 6)
print(f"periodic: max intertwining defect = {report.max_defect:.3e}")

# The right weight function of the commutant weights satisfies its own
# cocycle law, checked here on a random triple.
mu = CommutantMu(periodic)
rng = np.random.default_rng(1)
u, v, w = (parse_word(t) for t in ("12", "2", "211"))
lhs = right_weight(mu, u, v * w)
rhs = right_weight(mu, u, v) * right_weight(mu, u * v, w)
print(f"\nright cocycle at (u, v, w) = (12, 2, 211): {lhs:g} = {rhs:g}")
