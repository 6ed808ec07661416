"""Stage-S pre-fractal construction on the unit interval.

Stage 0 is the unit segment. Stage 1 replaces it by n copies scaled by
gamma, laid out symmetrically about 1/2:

* even n: n/2 copies packed to the left edge and n/2 mirrored on the right,
  consecutive copies within a block separated by the lacunarity parameter
  epsilon; the leftover central gap is 1 - n*gamma - (n-2)*epsilon.
* odd n: (n-1)/2 copies per block as above plus one copy exactly centered;
  the two gaps flanking the center each get (1 - n*gamma - (n-3)*epsilon)/2.

epsilon ranges from 0 (single widest central gap) through eps_reg (all
stage-1 gaps equal) to eps_max (central gap collapses to zero and the
center wells touch). For n = 2 and n = 3 there are no intra-block
adjacencies, epsilon is forced to 0 and the eps_reg/eps_max bounds do not
exist.

Deeper stages repeat the layout inside every copy. Interval starts are
evaluated in closed form from the base-n digit expansion of the interval
index, so rounding error does not accumulate across stages.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, NamedTuple, Optional

import numpy as np

from . import _backend
from .core import check_arity, check_index
from .errors import CapExceeded, DomainError, InvariantError

#: overlap tolerance for "pairwise disjoint": a touching pair produced by the
#: eps_max degeneracy can land a few ulp on either side of an exact-zero gap
OVERLAP_TOL = 1e-12

#: gaps at or below this width count as degenerate (zero-width) touching
GAP_TOL = 1e-12

#: smallest admissible interval length gamma**S: below this the ~S*ulp(1)
#: absolute error of the digit-expansion positions swamps the geometry
RESOLUTION_FLOOR = 1e-13

DEFAULT_CAP = 10_000_000


class LacunarityBounds(NamedTuple):
    eps_min: float
    eps_reg: float
    eps_max: float


def lacunarity_bounds(n: int, gamma: float) -> LacunarityBounds:
    """The (0, eps_reg, eps_max) lacunarity range for an (n, gamma) family.

    eps_reg = (1-n*gamma)/(n-1) makes every stage-1 gap equal; eps_max is
    (1-n*gamma)/(n-2) for even n and (1-n*gamma)/(n-3) for odd n, the point
    where the central wells join. Undefined for n in {2, 3} (no intra-block
    gaps to widen; the formulas divide by zero).
    """
    check_arity(n)
    if n < 4:
        raise DomainError(f"lacunarity bounds are undefined for n={n} (need n >= 4)")
    gamma = float(gamma)
    if math.isnan(gamma) or not 0.0 < gamma < 1.0 / n:
        raise DomainError(f"bounds require 0 < gamma < 1/{n}, got {gamma!r}")
    free = 1.0 - n * gamma
    eps_reg = free / (n - 1)
    eps_max = free / (n - 2) if n % 2 == 0 else free / (n - 3)
    return LacunarityBounds(0.0, eps_reg, eps_max)


def regular_epsilon(n: int, gamma: float) -> float:
    """eps_reg where it exists, else the forced 0.0 of the n in {2,3} layouts."""
    if n >= 4:
        return lacunarity_bounds(n, gamma).eps_reg
    check_arity(n)
    return 0.0


def _validate_family(n: int, gamma: float, epsilon: float) -> None:
    check_arity(n)
    gamma = float(gamma)
    if math.isnan(gamma) or not 0.0 < gamma < 1.0 / n:
        raise DomainError(f"geometry requires 0 < gamma < 1/{n}, got {gamma!r}")
    epsilon = float(epsilon)
    if math.isnan(epsilon) or epsilon < 0.0:
        raise DomainError(f"epsilon must be >= 0, got {epsilon!r}")
    if n < 4:
        if epsilon != 0.0:
            raise DomainError(f"epsilon plays no role for n={n} and must be 0, got {epsilon!r}")
        return
    eps_max = lacunarity_bounds(n, gamma).eps_max
    if epsilon > eps_max:
        raise DomainError(
            f"epsilon beyond eps_max would make a gap negative: {epsilon!r} > {eps_max!r}"
        )


@dataclass(frozen=True)
class CantorParams:
    """Full description of a constructible pre-fractal: (n, gamma, epsilon, stage)."""

    n: int
    gamma: float
    epsilon: float = 0.0
    stage: int = 0

    def __post_init__(self):
        _validate_family(self.n, self.gamma, self.epsilon)
        stage = check_index(self.stage, "stage")
        if stage < 0:
            raise DomainError(f"stage must be >= 0, got {stage}")
        object.__setattr__(self, "n", check_index(self.n, "arity"))
        object.__setattr__(self, "gamma", float(self.gamma))
        object.__setattr__(self, "epsilon", float(self.epsilon))
        object.__setattr__(self, "stage", stage)


@dataclass(frozen=True)
class Interval:
    start: float
    end: float

    def __post_init__(self):
        if not (0.0 <= self.start < self.end <= 1.0):
            raise InvariantError(f"need 0 <= start < end <= 1, got [{self.start}, {self.end}]")

    @property
    def length(self) -> float:
        return self.end - self.start


class IntervalSet:
    """Sorted, pairwise-disjoint closed subintervals of [0, 1].

    Backed by read-only float64 arrays ``starts``/``ends``. Disjointness is
    checked to OVERLAP_TOL so that the exact-touch degeneracy at eps_max
    (whose gap is a few ulp of rounding residue) is admitted while genuine
    overlaps are rejected.
    """

    __slots__ = ("starts", "ends", "params")

    def __init__(self, starts, ends, params: Optional[CantorParams] = None, validate=True):
        starts = np.ascontiguousarray(starts, dtype=np.float64)
        ends = np.ascontiguousarray(ends, dtype=np.float64)
        if validate:
            self._check(starts, ends)
        starts.flags.writeable = False
        ends.flags.writeable = False
        self.starts = starts
        self.ends = ends
        self.params = params

    @staticmethod
    def _check(starts, ends):
        if starts.ndim != 1 or starts.shape != ends.shape:
            raise InvariantError("starts/ends must be 1-d arrays of equal length")
        if len(starts) == 0:
            return
        if not (np.isfinite(starts).all() and np.isfinite(ends).all()):
            raise InvariantError("interval endpoints must be finite")
        if starts[0] < 0.0 or ends[-1] > 1.0 or (starts >= ends).any():
            raise InvariantError("need 0 <= start < end <= 1 for every interval")
        if (starts[1:] < starts[:-1]).any():
            raise InvariantError("intervals must be sorted by start")
        if (starts[1:] - ends[:-1] < -OVERLAP_TOL).any():
            raise InvariantError(f"intervals overlap by more than {OVERLAP_TOL}")

    def __len__(self) -> int:
        return len(self.starts)

    def __iter__(self) -> Iterator[Interval]:
        for s, e in zip(self.starts, self.ends):
            yield Interval(float(s), float(e))

    def __getitem__(self, i) -> Interval:
        return Interval(float(self.starts[i]), float(self.ends[i]))

    def lengths(self) -> np.ndarray:
        return self.ends - self.starts

    def total_measure(self) -> float:
        return float(self.lengths().sum())

    def __repr__(self) -> str:
        return f"IntervalSet({len(self)} intervals, params={self.params!r})"


def stage_one_offsets(n: int, gamma: float, epsilon: float = 0.0) -> list[float]:
    """Left endpoints of the n stage-1 copies, ascending; first 0, last 1-gamma."""
    _validate_family(n, gamma, epsilon)
    gamma = float(gamma)
    step = gamma + float(epsilon)
    m = n // 2 if n % 2 == 0 else (n - 1) // 2
    left = [i * step for i in range(m)]
    right = [1.0 - gamma - i * step for i in range(m - 1, -1, -1)]
    if n % 2 == 0:
        return left + right
    return left + [(1.0 - gamma) / 2.0] + right


def construct_prefractal(params: CantorParams, cap: int = DEFAULT_CAP) -> IntervalSet:
    """The stage-S interval set for the given parameters.

    Interval count is n**S (CapExceeded above ``cap``); every interval has
    length gamma**S. Positions come from the closed-form digit expansion, so
    stages are not constructed recursively and rounding does not compound.
    """
    count = params.n**params.stage
    if count > cap:
        raise CapExceeded(f"n**stage = {count} exceeds the cap of {cap} intervals")
    width = 1.0
    for _ in range(params.stage):
        width *= params.gamma
    if params.stage > 0 and width < RESOLUTION_FLOOR:
        raise DomainError(
            f"gamma**stage = {width!r} is below the positional resolution floor "
            f"({RESOLUTION_FLOOR}); the stage is too deep for binary64 geometry"
        )
    offsets = np.asarray(stage_one_offsets(params.n, params.gamma, params.epsilon))
    starts = _backend.prefractal_starts(offsets, params.gamma, params.stage)
    # the last end telescopes to 1 exactly in real arithmetic; clamp the ulp spill
    ends = np.minimum(starts + width, 1.0)
    return IntervalSet(starts, ends, params)


def gap_widths(intervals: IntervalSet) -> np.ndarray:
    """Widths of the positive maximal gaps inside [0, 1], left to right.

    Boundary slack (before the first interval, after the last) is included
    when positive; gaps at or below GAP_TOL are degenerate touches and are
    dropped.
    """
    if len(intervals) == 0:
        return np.array([1.0])
    inner = intervals.starts[1:] - intervals.ends[:-1]
    lead = intervals.starts[0]
    trail = 1.0 - intervals.ends[-1]
    gaps = np.concatenate(([lead], inner, [trail]))
    return gaps[gaps > GAP_TOL]
