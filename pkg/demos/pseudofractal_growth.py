"""Iterate q-triangulation from a single triangle to grow the pseudofractal
scale-free webs, tabulate their indices exactly, and show how the Kirchhoff
index per node pair settles toward its limiting constant.

Run:  python3 demos/pseudofractal_growth.py
"""
from fractions import Fraction

from trispectra import (
    complete_graph,
    compute_metrics,
    iterate_triangulation,
    predicted_counts,
    pseudofractal_metrics,
)

q = 1
print(f"pseudofractal webs N_{{{q},k}} (triangle iterated {q}-triangulation)\n")
print(f"{'k':>2} {'n':>7} {'m':>7} {'Kemeny':>16} {'Kirchhoff':>16}")
for k in range(9):
    n, m = predicted_counts(3, 3, q, k)
    kem, _, _, kir = pseudofractal_metrics(q, k)
    print(f"{k:2d} {n:7d} {m:7d} {float(kem):16.8f} {float(kir):16.8f}")

# sanity: the k = 2 closed form matches numerics on the built graph
web = iterate_triangulation(complete_graph(3), q, 2)[-1].result
rep = compute_metrics(web, route="oracle")
kem2 = pseudofractal_metrics(q, 2)[0]
print(f"\nk=2 check: closed form {float(kem2):.12f} vs oracle {rep.kemeny:.12f}")
assert abs(rep.kemeny - float(kem2)) < 1e-9

# Kirchhoff / (2q+1)^{2k} converges to 9(2q+3)^2 / (8(2q+1)(2q+5))
limit = Fraction(9 * (2 * q + 3) ** 2, 8 * (2 * q + 1) * (2 * q + 5))
print(f"\nKirchhoff index over (2q+1)^(2k), limit {float(limit):.12f}:")
for k in (4, 8, 16, 32):
    ratio = pseudofractal_metrics(q, k)[3] / Fraction(2 * q + 1) ** (2 * k)
    print(f"  k={k:2d}: {float(ratio):.12f}")
