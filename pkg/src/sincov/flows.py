"""Exactly-solvable flows over rationals, for generating transition systems.

Each flow kind is a closed-form solution map F(tau, alpha, a): the value at
time tau of the solution passing through (alpha, a), with a decidable
domain predicate.  Everything is exact `fractions.Fraction` arithmetic; no
law-checked path touches floating point, because a single rounding error
falsifies a set containment.

Kinds:

* translation  F = a + (tau - alpha), total (solves x' = 1).
* blowup       F = a / (1 - a*(tau - alpha)), defined iff
               1 - a*(tau - alpha) > 0 (solves x' = x^2 on its maximal
               interval; the single inequality covers a of any sign:
               positive a escapes forward, negative a backward, zero never).
* doubling     F = 2^(tau - alpha) * a with integer times, total.
* permutation  F = g^(tau - alpha)(a) with integer times, g a finite
               bijection table, total on g's carrier.

An exponential flow (x' = x) is deliberately absent: its flow map is
irrational on rational grids; ``doubling`` plays the analogous total,
invertible role in the discrete setting.

``build_system`` samples whole trajectories on a time grid, never single
applications of F; that closure is what makes the generated systems
satisfy all three transition-relation laws exactly, with partiality (from
blow-up) appearing as genuinely strict containments.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainExceeded, KindMismatch
from .relations import Relation, ident
from .systems import SincovSystem


class FlowKind(enum.Enum):
    TRANSLATION = "translation"
    BLOWUP = "blowup"
    DOUBLING = "doubling"
    PERMUTATION = "permutation"


CONTINUOUS_KINDS = frozenset({FlowKind.TRANSLATION, FlowKind.BLOWUP})
DISCRETE_KINDS = frozenset({FlowKind.DOUBLING, FlowKind.PERMUTATION})


@dataclass(frozen=True)
class FlowSpec:
    kind: FlowKind
    permutation: tuple = None  # sorted (element, image) items, permutation kind only

    @classmethod
    def translation(cls):
        return cls(FlowKind.TRANSLATION)

    @classmethod
    def blowup(cls):
        return cls(FlowKind.BLOWUP)

    @classmethod
    def doubling(cls):
        return cls(FlowKind.DOUBLING)

    @classmethod
    def of_permutation(cls, mapping):
        table = {ident(k): ident(v) for k, v in dict(mapping).items()}
        if set(table) != set(table.values()):
            raise ValueError("permutation table must be a bijection of its carrier")
        return cls(FlowKind.PERMUTATION, tuple(sorted(table.items())))

    @property
    def mapping(self) -> dict:
        return dict(self.permutation or ())


@dataclass(frozen=True)
class Seed:
    """A Cauchy datum: the trajectory through ``value`` at time ``time``."""

    time: Fraction
    value: object  # Fraction for numeric kinds, carrier label for permutation


def _require_integer_times(*times):
    for t in times:
        if t.denominator != 1:
            raise KindMismatch(f"discrete flow needs integer times, got {t}")


def flow_eval(spec: FlowSpec, tau, alpha, a):
    """F(tau, alpha, a), or None when outside the flow's domain."""
    tau, alpha = Fraction(tau), Fraction(alpha)
    if spec.kind in DISCRETE_KINDS:
        _require_integer_times(tau, alpha)

    if spec.kind is FlowKind.TRANSLATION:
        return Fraction(a) + (tau - alpha)

    if spec.kind is FlowKind.BLOWUP:
        a = Fraction(a)
        denom = 1 - a * (tau - alpha)
        if denom <= 0:
            return None
        return a / denom

    if spec.kind is FlowKind.DOUBLING:
        return Fraction(a) * Fraction(2) ** int(tau - alpha)

    mapping = spec.mapping
    a = ident(a)
    if a not in mapping:
        return None
    orbit = [a]
    current = mapping[a]
    while current != a:
        orbit.append(current)
        current = mapping[current]
    return orbit[int(tau - alpha) % len(orbit)]


def _trajectory(spec, grid, seed) -> dict:
    traj = {}
    for t in grid:
        value = flow_eval(spec, t, seed.time, seed.value)
        if value is not None:
            traj[t] = value
    return traj


def build_system(spec: FlowSpec, time_grid, seeds) -> SincovSystem:
    """The transition-relation system of the seeds' trajectories on a grid.

    Indices are the grid times; for every trajectory and every ordered grid
    pair (alpha, beta) at which it is defined, Phi[alpha, beta] gains the
    pair (value at beta, value at alpha).  Seeds on a common trajectory
    merge; trajectories cut short by blow-up leave the corresponding
    entries strictly partial.  The output always passes ``check_sincov``.
    """
    grid = sorted({Fraction(t) for t in time_grid})
    if spec.kind in DISCRETE_KINDS:
        _require_integer_times(*grid)
    grid_set = set(grid)

    for seed in seeds:
        if Fraction(seed.time) not in grid_set:
            raise ValueError(f"seed time {seed.time} is not on the time grid")
        if spec.kind is FlowKind.PERMUTATION and ident(seed.value) not in spec.mapping:
            raise ValueError(f"seed value {seed.value!r} is not in the permutation carrier")

    pair_sets = {}
    for seed in seeds:
        traj = _trajectory(spec, grid, seed)
        for t_out, value_out in traj.items():
            for t_in, value_in in traj.items():
                key = (ident(t_out), ident(t_in))
                pair_sets.setdefault(key, set()).add((ident(value_in), ident(value_out)))

    return SincovSystem(
        (ident(t) for t in grid),
        {key: Relation(pairs) for key, pairs in pair_sets.items()},
    )


def vector_field_residual(spec: FlowSpec, tau, x, h) -> Fraction:
    """Gap between the forward difference quotient of F and the flow's
    right-hand side at (tau, x), exactly.

    |(F(tau+h, tau, x) - x)/h - f(tau, x)| with f = 1 for translation and
    f = x^2 for blowup.  Shrinks linearly in h for blowup (the suite checks
    the exact bound |x|^3 |h| / (1 - |x h|)) and is identically zero for
    translation.
    """
    if spec.kind not in CONTINUOUS_KINDS:
        raise KindMismatch("difference-quotient residuals need a continuous flow kind")
    tau, x, h = Fraction(tau), Fraction(x), Fraction(h)
    if h == 0:
        raise ValueError("step h must be nonzero")

    stepped = flow_eval(spec, tau + h, tau, x)
    if stepped is None:
        raise DomainExceeded(f"flow undefined at time {tau + h} from ({tau}, {x})")

    field = Fraction(1) if spec.kind is FlowKind.TRANSLATION else x * x
    return abs((stepped - x) / h - field)
