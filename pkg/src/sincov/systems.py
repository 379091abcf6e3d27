"""Indexed families of transition relations and their solvers.

A system assigns to every ordered index pair (alpha, beta) a finite
relation Phi[alpha, beta]; missing entries are empty.  The three laws
under test are the Sincov-type inequalities

    transitivity:  Phi[a,b] o Phi[b,c]  is contained in  Phi[a,c]
    symmetry:      Phi[a,b]^-1          is contained in  Phi[b,a]
    identity:      Phi[a,a]             is contained in  the identity

``check_sincov`` reports every failing containment with a witness pair.
``solve_atlas`` produces, for a law-abiding system, a generating atlas of
partial bijections with Phi[a,b] == chart_a o chart_b^-1 exactly, via a
union-find quotient of the trajectory nodes (index, element).
``reconstruct`` is the inverse direction, and ``solve_via_fixed_index``
handles the classical group case where all containments are equalities.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .atlas import Atlas, validate_atlas
from .errors import (
    EqualityCaseViolated,
    InvalidAtlas,
    PreconditionViolated,
    UnknownIndex,
)
from .relations import EMPTY, Relation, ident


class Law(enum.Enum):
    TRANSITIVITY = "transitivity"
    SYMMETRY = "symmetry"
    IDENTITY = "identity"


ALL_LAWS = (Law.TRANSITIVITY, Law.SYMMETRY, Law.IDENTITY)


@dataclass(frozen=True)
class ViolationReport:
    """One failing containment: the law, the indices instantiating it, and a
    pair belonging to the left side but not the right."""

    law: Law
    indices: tuple
    pair: tuple

    def sort_key(self):
        return (self.law.value, self.indices, self.pair)


class SincovSystem:
    """Finite index set plus a normalized map (alpha, beta) -> Relation.

    Empty relations are never stored, so equality of systems is equality of
    index sets plus entry-wise set equality of the non-empty relations.
    """

    def __init__(self, indices, relations=None):
        self.indices = frozenset(ident(i) for i in indices)
        normalized = {}
        for key, rel in dict(relations or {}).items():
            alpha, beta = key
            alpha, beta = ident(alpha), ident(beta)
            for index in (alpha, beta):
                if index not in self.indices:
                    raise UnknownIndex(index)
            if rel.pairs:
                normalized[(alpha, beta)] = rel
        self.relations = normalized

    def get(self, alpha, beta) -> Relation:
        return self.relations.get((ident(alpha), ident(beta)), EMPTY)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SincovSystem)
            and self.indices == other.indices
            and self.relations == other.relations
        )

    def __repr__(self) -> str:
        return f"SincovSystem(indices={sorted(self.indices)}, relations={self.relations!r})"


def check_sincov(system: SincovSystem, laws=None) -> list:
    """All law violations, one report per (law, indices, witness pair).

    The list is sorted by the reports' canonical serialization, so the
    result is deterministic no matter how the triple loop is scheduled.
    An empty list means the system solves the inequalities.
    """
    selected = set(ALL_LAWS if laws is None else laws)
    reports = []
    indices = sorted(system.indices)

    if Law.IDENTITY in selected:
        for alpha in indices:
            for b, a in system.get(alpha, alpha).pairs:
                if b != a:
                    reports.append(ViolationReport(Law.IDENTITY, (alpha,), (b, a)))

    if Law.SYMMETRY in selected:
        for alpha in indices:
            for beta in indices:
                back = system.get(beta, alpha)
                for pair in system.get(alpha, beta).inverse().pairs:
                    if pair not in back.pairs:
                        reports.append(ViolationReport(Law.SYMMETRY, (alpha, beta), pair))

    if Law.TRANSITIVITY in selected:
        for alpha in indices:
            for beta in indices:
                for gamma in indices:
                    left = system.get(alpha, beta).compose(system.get(beta, gamma))
                    right = system.get(alpha, gamma)
                    for pair in left.pairs:
                        if pair not in right.pairs:
                            reports.append(
                                ViolationReport(Law.TRANSITIVITY, (alpha, beta, gamma), pair)
                            )

    reports.sort(key=ViolationReport.sort_key)
    return reports


class _UnionFind:
    """Disjoint sets over hashable items: path compression, union by rank."""

    def __init__(self):
        self.parent = {}
        self.rank = {}

    def add(self, item):
        if item not in self.parent:
            self.parent[item] = item
            self.rank[item] = 0

    def find(self, item):
        root = item
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[item] != root:
            self.parent[item], item = root, self.parent[item]
        return root

    def union(self, x, y):
        self.add(x)
        self.add(y)
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return
        if self.rank[rx] < self.rank[ry]:
            rx, ry = ry, rx
        elif self.rank[rx] == self.rank[ry]:
            self.rank[rx] += 1
        self.parent[ry] = rx


def solve_atlas(system: SincovSystem) -> Atlas:
    """A generating atlas for a system that passes ``check_sincov``.

    Every pair (b, a) in Phi[alpha, beta] links the nodes (beta, b) and
    (alpha, a); because the laws make this linkage transitive and
    symmetric, its connected components are already its equivalence
    classes.  Each class becomes one carrier point, named after its least
    node ("cls:<index>:<element>") so that outputs are reproducible; chart
    alpha collects (class, element) for every node (alpha, element).

    Raises PreconditionViolated (carrying the first violation report) when
    the laws fail, since then the charts need not be partial bijections.
    """
    reports = check_sincov(system)
    if reports:
        raise PreconditionViolated(reports[0])

    uf = _UnionFind()
    for (alpha, beta), rel in system.relations.items():
        for b, a in rel.pairs:
            uf.union((alpha, a), (beta, b))

    classes = {}
    for node in uf.parent:
        classes.setdefault(uf.find(node), []).append(node)

    charts = {index: set() for index in system.indices}
    for members in classes.values():
        least = min(members)
        class_id = f"cls:{least[0]}:{least[1]}"
        for index, element in members:
            charts[index].add((class_id, element))

    return Atlas({index: Relation(pairs) for index, pairs in charts.items()})


def reconstruct(atlas: Atlas) -> SincovSystem:
    """The transition-relation system generated by an atlas.

    Phi[alpha, beta] = chart_alpha o chart_beta^-1 for every index pair;
    the result always passes ``check_sincov``.  Raises InvalidAtlas naming
    the first chart that is not a partial bijection.
    """
    violations = validate_atlas(atlas)
    if violations:
        first = violations[0]
        raise InvalidAtlas(first.index, first.predicate, first.pair)

    relations = {}
    for alpha, chart_a in atlas.charts.items():
        for beta, chart_b in atlas.charts.items():
            rel = chart_a.compose(chart_b.inverse())
            if rel.pairs:
                relations[(alpha, beta)] = rel
    return SincovSystem(atlas.charts.keys(), relations)


def solve_via_fixed_index(system: SincovSystem, gamma) -> Atlas:
    """Group-case solver: charts are the system's own column at ``gamma``.

    Needs every transitivity containment to hold with equality (the
    symmetry containments are then equalities automatically, both
    directions being checked).  Under that hypothesis chart_alpha =
    Phi[alpha, gamma] reconstructs the system exactly.

    Raises UnknownIndex for a gamma outside the system,
    PreconditionViolated when the containments themselves fail, and
    EqualityCaseViolated with the first strict triple otherwise.
    """
    gamma = ident(gamma)
    if gamma not in system.indices:
        raise UnknownIndex(gamma)

    reports = check_sincov(system)
    if reports:
        raise PreconditionViolated(reports[0])

    indices = sorted(system.indices)
    for alpha in indices:
        for beta in indices:
            for third in indices:
                composed = system.get(alpha, beta).compose(system.get(beta, third))
                if composed != system.get(alpha, third):
                    raise EqualityCaseViolated((alpha, beta, third))

    return Atlas({alpha: system.get(alpha, gamma) for alpha in system.indices})
