"""Sampling exactly-solvable flows into lawful transition systems.

A flow map F(tau, alpha, a) gives the value at time tau of the solution
passing through (alpha, a).  Sampling whole trajectories on a time grid
yields systems that satisfy all three laws exactly -- including genuinely
partial relations when solutions blow up in finite time, which is where
the inequality form earns its keep over the classical equality.
"""

from fractions import Fraction as F

from sincov import (
    FlowSpec,
    Seed,
    build_system,
    check_sincov,
    flow_eval,
    reconstruct,
    solve_atlas,
    solve_via_fixed_index,
    vector_field_residual,
)

# x' = x^2 with x(0) = 1 has the closed form x(t) = 1/(1 - t): it reaches
# 2 at t = 1/2 and escapes to infinity at t = 1.
blowup = FlowSpec.blowup()
assert flow_eval(blowup, F(1, 2), 0, 1) == 2
assert flow_eval(blowup, 1, 0, 1) is None
print("x(1/2) =", flow_eval(blowup, F(1, 2), 0, 1), " x(1) undefined")

# Sample two trajectories on the grid {0, 1/2, 1}.  Any rational seed is
# admissible; where its trajectory exists is computed per grid time, never
# assumed.
grid = [F(0), F(1, 2), F(1)]
system = build_system(blowup, grid, [Seed(F(0), F(1)), Seed(F(0), F(-2))])
assert check_sincov(system) == []

# The trajectory through (0, 1) is missing at time 1, so Phi["1", "0"]
# only carries the other trajectory: strict partiality, by construction.
print("Phi[1,0]:", sorted(system.get("1", "0")))
assert ("1", "1") in system.get("0", "0")
assert "1" not in system.get("1", "0").domain

# The quotient solver counts maximal trajectories: two seeds, two classes.
atlas = solve_atlas(system)
points = set()
for rel in atlas.charts.values():
    points |= rel.domain
print("carrier points:", sorted(points))
assert len(points) == 2
assert reconstruct(atlas) == system

# Recovering the right-hand side: the forward difference quotient of F
# approaches x^2, and over rationals the residual is exact.
for h in (F(1, 10), F(1, 100), F(1, 1000)):
    print(f"residual at h={h}:", vector_field_residual(blowup, 0, 1, h))
assert vector_field_residual(blowup, 0, 1, F(1, 1000)) == F(1, 999)

# Total invertible flows (the "group case") satisfy the laws with
# equality, and then any single column of the system already is an
# atlas: chart_alpha = Phi[alpha, gamma].
doubling = build_system(
    FlowSpec.doubling(),
    [F(0), F(1), F(2)],
    [Seed(F(0), F(3)), Seed(F(0), F(-1))],
)
for gamma in sorted(doubling.indices):
    fixed = solve_via_fixed_index(doubling, gamma)
    assert reconstruct(fixed) == doubling
print("fixed-index atlases reconstruct the doubling system for every gamma")

print("ok")
