"""Finite binary relations as exact algebra.

A relation is a set of (input, output) pairs over string identifiers.
Everything downstream -- law checking, atlas solving, flow sampling --
reduces to compose / inverse / identity plus two predicates, so this is
the vocabulary to get comfortable with first.
"""

from sincov import Relation

# Composition applies the right operand first, like map composition.
step_one = Relation([("0", "1"), ("5", "1")])
step_two = Relation([("1", "2"), ("1", "3")])
both = step_two.compose(step_one)
print("composition fans out:", sorted(both))
assert both == Relation([("0", "2"), ("0", "3"), ("5", "2"), ("5", "3")])

# Inverse swaps the pair order; it undoes composition in reverse order.
assert both.inverse() == step_one.inverse().compose(step_two.inverse())

# The two predicates that drive the whole package:
#   injective     -- no two inputs share an output
#   co-injective  -- no input has two outputs (the relation is a map)
fanout = Relation([("1", "2"), ("1", "3")])
merge = Relation([("1", "2"), ("3", "2")])
clean = Relation([("1", "2"), ("3", "4")])
assert not fanout.is_coinjective() and fanout.is_injective()
assert not merge.is_injective() and merge.is_coinjective()
assert clean.is_injective() and clean.is_coinjective()

# Both predicates have composition-style criteria, usable as oracles:
# rho is injective  iff  rho^-1 o rho is the identity on its domain,
# co-injective      iff  rho o rho^-1 is the identity on its range.
for rho in (fanout, merge, clean):
    criterion = rho.inverse().compose(rho) == Relation.identity_on(rho.domain)
    assert rho.is_injective() == criterion
    criterion = rho.compose(rho.inverse()) == Relation.identity_on(rho.range)
    assert rho.is_coinjective() == criterion

# Relations that are both (partial bijections) are closed under compose
# and inverse -- they form a subalgebra, which is why atlas charts and
# everything generated from them stay partial bijections automatically.
left = Relation([("a", "x"), ("b", "y")])
right = Relation([("x", "p"), ("y", "q")])
product = right.compose(left)
assert product.is_injective() and product.is_coinjective()
print("partial bijections compose to partial bijections:", sorted(product))

# A co-injective relation can be applied like a function.
assert clean.apply("1") == "2"
assert clean.apply("9") is None

print("ok")
