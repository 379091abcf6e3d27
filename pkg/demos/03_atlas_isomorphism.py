"""Atlases generating the same system differ only by a carrier bijection.

Carrier points are internal names for trajectory classes, so two atlases
are "the same solution" when some bijection omega of carriers turns one
into the other chart-by-chart.  find_isomorphism computes omega or
refutes its existence with a machine-checkable witness.
"""

from sincov import (
    Atlas,
    NotIsomorphic,
    Relation,
    carrier,
    check_at_axioms,
    find_isomorphism,
    reconstruct,
    transition,
    verify_isomorphism,
)

# Two atlases over the same indices; the second renames carrier point
# "z" to "north" and "w" to "south".
first = Atlas(
    {
        "a": Relation([("z", "0"), ("w", "5")]),
        "b": Relation([("z", "1")]),
    }
)
second = Atlas(
    {
        "a": Relation([("north", "0"), ("south", "5")]),
        "b": Relation([("north", "1")]),
    }
)
assert reconstruct(first) == reconstruct(second)

omega = find_isomorphism(first, second)
print("omega:", sorted(omega.omega))
assert omega.omega == Relation([("z", "north"), ("w", "south")])
assert verify_isomorphism(first, second, omega)

# The verification condition: every chart of the first atlas factors
# through omega, i.e. chart2 o omega == chart1.
for alpha in first.indices:
    assert second.chart(alpha).compose(omega.omega) == first.chart(alpha)

# Change what the atlases generate and the search fails with a witness
# pair that belongs to one reconstruction but not the other.
third = Atlas(
    {
        "a": Relation([("p", "0"), ("q", "5")]),
        "b": Relation([("q", "1")]),  # now 5 and 1 share a trajectory
    }
)
try:
    find_isomorphism(first, third)
except NotIsomorphic as exc:
    print("refused:", exc.reason, exc.indices, exc.pair, "present in", exc.present_in)
    inside = reconstruct(first) if exc.present_in == 1 else reconstruct(third)
    outside = reconstruct(third) if exc.present_in == 1 else reconstruct(first)
    alpha, beta = exc.indices
    assert exc.pair in inside.get(alpha, beta)
    assert exc.pair not in outside.get(alpha, beta)
else:
    raise AssertionError("atlases with different reconstructions must be refused")

# Transitions chart_a o chart_b^-1 are the generated relations; the
# set-level atlas axioms check coverage, chart bijectivity, and that
# every transition is a bijection between shared-domain images.
print("transition a<-b:", sorted(transition(first, "a", "b")))
report = check_at_axioms(first)
print("axioms:", {name: section["pass"] for name, section in report.items()})
assert all(section["pass"] for section in report.values())
assert carrier(first) == {"z", "w"}

print("ok")
