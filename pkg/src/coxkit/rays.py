"""Stabilization traces along infinite reduced words.

An eventually periodic word prefix.period.period... whose finite prefixes
are all reduced stands in for a direction to infinity in the Cayley
graph.  Folding it letter by letter while maintaining the longest-coset
pair x_i for a spherical subset T gives a sequence with non-increasing
l(x_i); the trace records every step, the index where x last changed,
and whether the stabilization is certified.

Certification policy: for a periodic ray, recurrence of the pair
(x_i, i mod |period|) past the candidate index and past the prefix
upgrades horizon evidence to PhaseRecurrence; anything else is reported
honestly as HorizonOnly.  A plain finite letter sequence may be supplied
instead of a periodic ray, in which case only HorizonOnly is available.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace

from .cosets import coset_step, in_WT_class, longest_in_coset
from .errors import HypothesisFailed, NonSphericalSubset, NotReducedAt
from .finite_type import hypothesis_check, is_spherical
from .matrix import CoxeterMatrix
from .words import Element, inverse, multiply

DEFAULT_HORIZON = 50

PHASE_RECURRENCE = "PhaseRecurrence"
HORIZON_ONLY = "HorizonOnly"


@dataclass(frozen=True)
class RaySpec:
    """An eventually periodic word with a certificate of reducedness."""

    matrix: CoxeterMatrix
    prefix: tuple[int, ...]
    period: tuple[int, ...]
    certified_reduced_up_to: int

    def letter(self, i: int) -> int:
        """The i-th letter, 1-based."""
        if i < 1:
            raise ValueError("letters are indexed from 1")
        if i <= len(self.prefix):
            return self.prefix[i - 1]
        return self.period[(i - len(self.prefix) - 1) % len(self.period)]

    def letters(self, horizon: int):
        return tuple(self.letter(i) for i in range(1, horizon + 1))


def make_ray(matrix: CoxeterMatrix, prefix, period, horizon: int = DEFAULT_HORIZON) -> RaySpec:
    """Build a ray and certify every prefix up to ``horizon`` is reduced.

    Each letter must lengthen the element by one; the first letter that
    fails raises NotReducedAt with its 1-based index.
    """
    prefix = tuple(prefix)
    period = tuple(period)
    if not period:
        raise ValueError("period must be non-empty")
    ray = RaySpec(matrix, prefix, period, 0)
    w = Element.identity(matrix)
    for i in range(1, horizon + 1):
        w = multiply(w, Element.generator(matrix, ray.letter(i)))
        if w.length != i:
            raise NotReducedAt(i)
    return replace(ray, certified_reduced_up_to=horizon)


@dataclass(frozen=True)
class TraceStep:
    i: int
    w: Element
    x: Element
    len_x: int


@dataclass(frozen=True)
class Stabilization:
    candidate_n: int
    certified: bool
    reason: str


@dataclass(frozen=True)
class MembershipCheck:
    i: int
    s0_check: bool
    t0_check: bool


@dataclass(frozen=True)
class TraceReport:
    steps: tuple[TraceStep, ...]
    stabilization: Stabilization
    x_limit: Element
    memberships: tuple[MembershipCheck, ...] = field(default=())


def _ray_letters(ray, horizon: int):
    """Letters 1..horizon plus the (prefix, period) shape when periodic."""
    if isinstance(ray, RaySpec):
        if horizon > ray.certified_reduced_up_to:
            raise ValueError(
                f"horizon {horizon} exceeds the certified reduced length "
                f"{ray.certified_reduced_up_to}; rebuild the ray"
            )
        return ray.letters(horizon), len(ray.prefix), len(ray.period)
    letters = tuple(ray)
    if len(letters) < horizon:
        raise ValueError(f"letter stream shorter than horizon {horizon}")
    return letters[:horizon], None, None


def stabilize(members, ray, horizon: int = DEFAULT_HORIZON, matrix: CoxeterMatrix | None = None) -> TraceReport:
    """Fold the ray and track the longest-coset pair for T.

    ``ray`` is a RaySpec or a plain letter sequence (then ``matrix`` is
    required and reducedness is checked on the fly).
    """
    if isinstance(ray, RaySpec):
        matrix = ray.matrix
    elif matrix is None:
        raise ValueError("a plain letter sequence needs an explicit matrix")
    T = frozenset(members)
    if not is_spherical(matrix, T):
        raise NonSphericalSubset(T)
    letters, prefix_len, period_len = _ray_letters(ray, horizon)

    steps: list[TraceStep] = []
    w = Element.identity(matrix)
    x = None
    for i in range(1, horizon + 1):
        s = letters[i - 1]
        w_next = multiply(w, Element.generator(matrix, s))
        if w_next.length != i:
            raise NotReducedAt(i)
        if x is None:
            x = longest_in_coset(T, w_next).x
        else:
            x = coset_step(T, w, s, x).x_next
        steps.append(TraceStep(i=i, w=w_next, x=x, len_x=x.length))
        w = w_next

    if not steps:
        raise ValueError("horizon must be >= 1")
    changes = [
        step.i for prev, step in zip(steps, steps[1:]) if step.x != prev.x
    ]
    candidate_n = changes[-1] if changes else 1
    x_limit = steps[candidate_n - 1].x

    certified = False
    reason = HORIZON_ONLY
    if period_len is not None:
        lo = max(candidate_n, prefix_len + 1)
        if lo + period_len <= horizon and steps[lo - 1].x == steps[lo - 1 + period_len].x:
            certified = True
            reason = PHASE_RECURRENCE
    return TraceReport(
        steps=tuple(steps),
        stabilization=Stabilization(candidate_n, certified, reason),
        x_limit=x_limit,
    )


def theorem_trace(ray, members, s0: int, t0: int, horizon: int = DEFAULT_HORIZON) -> TraceReport:
    """Run stabilize, then verify both descent-class memberships.

    Requires the (T, s0) hypothesis with t0 among its witnesses.  For
    every step past the candidate index the report records whether
    (s0.x.w_i)^-1 has descent set {s0} and (t0.s0.x.w_i)^-1 has descent
    set {t0}; under a certified stabilization every check must pass.
    """
    if not isinstance(ray, RaySpec):
        raise TypeError("theorem_trace needs a RaySpec")
    matrix = ray.matrix
    report = hypothesis_check(matrix, members, s0)
    if not report.ok:
        raise HypothesisFailed(
            f"(T={sorted(frozenset(members))}, s0={s0}) fails the hypothesis"
        )
    if t0 not in report.witnesses:
        raise HypothesisFailed(
            f"t0={t0} is not an infinite-order witness among {report.witnesses}"
        )
    trace = stabilize(members, ray, horizon)
    x = trace.x_limit
    s0x = multiply(Element.generator(matrix, s0), x)
    t0s0x = multiply(Element.generator(matrix, t0), s0x)
    memberships = []
    for step in trace.steps:
        if step.i < trace.stabilization.candidate_n:
            continue
        memberships.append(MembershipCheck(
            i=step.i,
            s0_check=in_WT_class(inverse(multiply(s0x, step.w)), {s0}),
            t0_check=in_WT_class(inverse(multiply(t0s0x, step.w)), {t0}),
        ))
    return replace(trace, memberships=tuple(memberships))
