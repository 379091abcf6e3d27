"""Transition-relation systems: the three laws, the solver, and the
round trip.

A system assigns a finite relation Phi[alpha, beta] to every ordered pair
of indices.  Three containments make it lawful:

    Phi[a,b] o Phi[b,c]  within  Phi[a,c]     (transitivity)
    Phi[a,b] inverted    within  Phi[b,a]     (symmetry)
    Phi[a,a]             within  the identity (identity)

Lawful systems are exactly the ones generated by an atlas of partial
bijections: solve_atlas builds one, reconstruct runs it backwards, and
the round trip is exact.
"""

from sincov import (
    PreconditionViolated,
    Relation,
    SincovSystem,
    check_sincov,
    reconstruct,
    solve_atlas,
)

# Two observation times of one trajectory: state "0" at time a is state
# "1" at time b.  Pairs read (value at the second index, value at the
# first), so Phi[a,b] holds ("1", "0").
system = SincovSystem(
    ["a", "b"],
    {
        ("a", "a"): Relation([("0", "0")]),
        ("b", "b"): Relation([("1", "1")]),
        ("a", "b"): Relation([("1", "0")]),
        ("b", "a"): Relation([("0", "1")]),
    },
)
assert check_sincov(system) == []

# The solver glues nodes (index, element) along the relation pairs; each
# equivalence class becomes one carrier point, named after its least
# member so outputs are reproducible.
atlas = solve_atlas(system)
print("charts:", {alpha: sorted(rel) for alpha, rel in atlas.charts.items()})
assert atlas.charts["a"] == Relation([("cls:a:0", "0")])
assert atlas.charts["b"] == Relation([("cls:a:0", "1")])

# Reconstruction composes chart pairs: Phi[a,b] = chart_a o chart_b^-1.
# On lawful systems the round trip is exact set equality, not merely
# containment.
assert reconstruct(atlas) == system

# Break symmetry and the checker names the law, the indices, and a pair
# sitting on the wrong side of the containment.
broken = SincovSystem(["a", "b"], {("a", "b"): Relation([("1", "0")])})
for violation in check_sincov(broken):
    print("violation:", violation.law.value, violation.indices, violation.pair)
assert len(check_sincov(broken)) == 1

# The solver refuses unlawful input instead of producing a bad atlas.
try:
    solve_atlas(broken)
except PreconditionViolated as exc:
    print("solver refused:", exc)
else:
    raise AssertionError("solve_atlas must reject unlawful systems")

print("ok")
