"""Atlases of partial bijections and the operations on them.

An atlas assigns to every index a chart: an injective co-injective relation
from carrier points (quotient-class ids) to element ids.  An atlas generates
a family of transition relations ``Phi[alpha, beta] = chart_alpha o
chart_beta^-1``; two atlases generating the same family differ exactly by a
carrier bijection, which ``find_isomorphism`` computes and
``verify_isomorphism`` checks.

``check_at_axioms`` verifies the set-level fragment of the classical atlas
axioms: carrier coverage, chart bijectivity, and transition bijectivity
between chart images.  Differentiability and openness have no finite-data
counterpart and are deliberately not claimed; the report is "set-level"
only.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import IndexMismatch, InvalidAtlas, NotIsomorphic, UnknownIndex
from .relations import EMPTY, Relation, ident


class Atlas:
    """Charts keyed by index id.  Empty charts are kept: an index with no
    carrier support still participates in reconstruction."""

    def __init__(self, charts):
        self.charts = {ident(i): rel for i, rel in dict(charts).items()}

    @property
    def indices(self) -> frozenset:
        return frozenset(self.charts)

    def chart(self, alpha) -> Relation:
        alpha = ident(alpha)
        if alpha not in self.charts:
            raise UnknownIndex(alpha)
        return self.charts[alpha]

    def __eq__(self, other) -> bool:
        return isinstance(other, Atlas) and self.charts == other.charts

    def __repr__(self) -> str:
        return f"Atlas({self.charts!r})"


@dataclass(frozen=True)
class Isomorphism:
    """A carrier bijection omega with chart2.compose(omega) == chart1
    for every index (atlas 1's charts factor through atlas 2's)."""

    omega: Relation


@dataclass(frozen=True)
class ChartViolation:
    index: str
    predicate: str  # "injectivity" | "co-injectivity"
    pair: tuple


def _least_conflicting_pair(rel: Relation, component: int) -> tuple:
    # Smallest pair participating in a duplicated component; deterministic.
    groups = {}
    for pair in rel.pairs:
        groups.setdefault(pair[component], []).append(pair)
    conflicting = set()
    for members in groups.values():
        if len(members) > 1:
            conflicting.update(members)
    return min(conflicting)


def validate_atlas(atlas: Atlas) -> list:
    """Chart-level violations, empty iff every chart is a partial bijection."""
    out = []
    for alpha in sorted(atlas.charts):
        rel = atlas.charts[alpha]
        if not rel.is_injective():
            out.append(ChartViolation(alpha, "injectivity", _least_conflicting_pair(rel, 1)))
        if not rel.is_coinjective():
            out.append(ChartViolation(alpha, "co-injectivity", _least_conflicting_pair(rel, 0)))
    return out


def carrier(atlas: Atlas) -> set:
    """Union of the chart domains: the set the atlas lives on."""
    points = set()
    for rel in atlas.charts.values():
        points |= rel.domain
    return points


def transition(atlas: Atlas, alpha, beta) -> Relation:
    """chart_alpha o chart_beta^-1; a partial bijection for valid atlases."""
    return atlas.chart(alpha).compose(atlas.chart(beta).inverse())


def _raise_invalid(violations):
    first = violations[0]
    raise InvalidAtlas(first.index, first.predicate, first.pair)


def _match_charts(src: Atlas, dst: Atlas, present_in: int, missing_reason: str) -> dict:
    """Carrier map src -> dst forced by matching chart values.

    For every chart pair (z, a) of src, z must go to the unique dst carrier
    point that the same chart sends to a.  A point forced two ways proves
    the transition relations differ; the raised witness pair is a member of
    src's transition relation that dst cannot realize.
    """
    assignment = {}  # z -> (zbar, chart index, element) that forced it
    for alpha in sorted(src.charts):
        by_value = {a: z for z, a in dst.charts.get(alpha, EMPTY).pairs}
        for z, a in sorted(src.charts[alpha].pairs):
            zbar = by_value.get(a)
            if zbar is None:
                raise NotIsomorphic(missing_reason, (alpha, alpha), (a, a), present_in)
            prev = assignment.get(z)
            if prev is None:
                assignment[z] = (zbar, alpha, a)
            elif prev[0] != zbar:
                # (a, prev element) sits in src's transition relation from
                # prev chart to this one, via the shared carrier point z.
                raise NotIsomorphic("conflict", (prev[1], alpha), (a, prev[2]), present_in)
    return {z: forced[0] for z, forced in assignment.items()}


def find_isomorphism(a1: Atlas, a2: Atlas) -> Isomorphism:
    """The carrier bijection omega with chart2.compose(omega) == chart1.

    Exists iff the two atlases generate identical transition relations.
    Raises IndexMismatch for different index sets, InvalidAtlas for charts
    that are not partial bijections, and NotIsomorphic (with a checkable
    witness) when no such omega exists.
    """
    if a1.indices != a2.indices:
        raise IndexMismatch(a1.indices - a2.indices, a2.indices - a1.indices)
    for atlas in (a1, a2):
        violations = validate_atlas(atlas)
        if violations:
            _raise_invalid(violations)
    forward = _match_charts(a1, a2, present_in=1, missing_reason="missing_counterpart")
    # The reverse pass certifies bijectivity: it surfaces carrier points of
    # a2 with no counterpart (coverage) and two-to-one collapses (conflict).
    _match_charts(a2, a1, present_in=2, missing_reason="coverage")
    return Isomorphism(Relation(forward.items()))


def verify_isomorphism(a1: Atlas, a2: Atlas, iso: Isomorphism) -> bool:
    """True iff omega is a carrier bijection and every chart factors through it."""
    omega = iso.omega
    if not (omega.is_injective() and omega.is_coinjective()):
        return False
    if omega.domain != carrier(a1) or omega.range != carrier(a2):
        return False
    for alpha in sorted(a1.indices | a2.indices):
        c1 = a1.charts.get(alpha, EMPTY)
        c2 = a2.charts.get(alpha, EMPTY)
        if c2.compose(omega) != c1:
            return False
    return True


def check_at_axioms(atlas: Atlas) -> dict:
    """Set-level atlas axiom report.

    at1: every carrier point lies in some chart domain (true by the carrier
         definition; computed anyway rather than assumed).
    at2: every chart is a bijection of its domain onto its image.
    at3: every transition relation is a bijection from the source chart's
         image of the shared domain onto the target chart's image of it.

    Failures are reported, never raised.
    """
    charts = atlas.charts
    uncovered = [
        x
        for x in sorted(carrier(atlas))
        if not any(x in rel.domain for rel in charts.values())
    ]

    chart_violations = [
        {"index": v.index, "predicate": v.predicate, "pair": list(v.pair)}
        for v in validate_atlas(atlas)
    ]

    transition_failures = []
    for alpha in sorted(charts):
        for beta in sorted(charts):
            t = transition(atlas, alpha, beta)
            shared_a = charts[alpha].domain
            shared_b = charts[beta].domain
            source_image = {a for z, a in charts[beta].pairs if z in shared_a}
            target_image = {a for z, a in charts[alpha].pairs if z in shared_b}
            failed = []
            if t.domain != source_image:
                failed.append("domain")
            if t.range != target_image:
                failed.append("range")
            if not t.is_injective():
                failed.append("injectivity")
            if not t.is_coinjective():
                failed.append("co-injectivity")
            if failed:
                transition_failures.append(
                    {"alpha": alpha, "beta": beta, "failed": failed}
                )

    return {
        "at1": {"pass": not uncovered, "witnesses": uncovered},
        "at2": {"pass": not chart_violations, "witnesses": chart_violations},
        "at3": {"pass": not transition_failures, "witnesses": transition_failures},
    }
