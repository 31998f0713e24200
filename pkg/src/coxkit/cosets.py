"""Longest coset representatives and descent-class machinery.

For a spherical subset T and any w, the coset W_T.w has a unique longest
element v, characterized by l(t.v) < l(v) for every t in T, and it
satisfies l(v) = l(v.w^-1) + l(w).  We track the pair x = v.w^-1 in W_T
together with v, and evolve x incrementally along length-increasing
extensions of w: appending a letter either leaves x unchanged or deletes
exactly one letter from it, so l(x) never increases.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import LengthDecreases, NonSphericalSubset, StaleRepresentative
from .finite_type import is_spherical
from .matrix import INF
from .words import Element, inverse, multiply, reduce_word, right_descents


@dataclass(frozen=True)
class CosetLongest:
    """x in W_T and v = x.base, the longest element of W_T.base."""

    x: Element
    v: Element
    base: Element

    def check(self, members) -> bool:
        """All three defining invariants, recomputed from scratch."""
        T = frozenset(members)
        if not set(self.x.letters) <= T:
            return False
        if multiply(self.x, self.base) != self.v:
            return False
        if self.v.length != self.x.length + self.base.length:
            return False
        mat = self.v.matrix
        return all(
            multiply(Element.generator(mat, t), self.v).length < self.v.length
            for t in T
        )


def longest_in_coset(members, w: Element) -> CosetLongest:
    """Greedy ascent to the longest element of W_T.w.

    While some t in T lengthens v on the left, replace v by t.v (scanning
    T in index order and restarting after each success).  Termination is
    finiteness of W_T; the result does not depend on the scan order, which
    the test suite asserts against the enumeration oracle.
    """
    T = sorted(frozenset(members))
    matrix = w.matrix
    if not is_spherical(matrix, T):
        raise NonSphericalSubset(T)
    gens = [Element.generator(matrix, t) for t in T]
    v = w
    improved = True
    while improved:
        improved = False
        for g in gens:
            tv = multiply(g, v)
            if tv.length > v.length:
                v = tv
                improved = True
                break
    return CosetLongest(x=multiply(v, inverse(w)), v=v, base=w)


@dataclass(frozen=True)
class StepOutcome:
    """Evolution of x when the base word grows by one ascending letter.

    ``deleted_index`` is None when x is unchanged, else the position in
    the ShortLex canonical word of the previous x whose removal produces
    the new one.
    """

    x_next: Element
    deleted_index: int | None

    @property
    def unchanged(self) -> bool:
        return self.deleted_index is None


def coset_step(members, w: Element, s: int, x: Element) -> StepOutcome:
    """Update the longest-coset pair for w -> w.s with l(w.s) = l(w) + 1.

    Either x survives (when v.s still ascends) or the cosets W_T.w and
    W_T.w.s coincide and the new x is the old one with a single letter
    deleted; in both cases l(x) cannot grow.
    """
    T = frozenset(members)
    matrix = w.matrix
    if not is_spherical(matrix, T):
        raise NonSphericalSubset(T)
    ws = multiply(w, Element.generator(matrix, s))
    if ws.length != w.length + 1:
        raise LengthDecreases(
            f"letter {s} shortens the base word (length {w.length} -> {ws.length})"
        )
    v = multiply(x, w)
    pair = CosetLongest(x=x, v=v, base=w)
    if not pair.check(T):
        raise StaleRepresentative(
            f"{x!r} is not the longest-coset representative for the given base"
        )
    vs = multiply(v, Element.generator(matrix, s))
    if vs.length == v.length + 1:
        return StepOutcome(x_next=x, deleted_index=None)
    # v.s went down: W_T.w.s = W_T.w, v itself stays on top, and the new
    # x is v.(w.s)^-1, obtained from x by deleting one letter.
    x_next = multiply(v, inverse(ws))
    word = x.letters
    for i in range(len(word)):
        if reduce_word(matrix, word[:i] + word[i + 1:]) == x_next:
            return StepOutcome(x_next=x_next, deleted_index=i)
    raise RuntimeError(
        "single-letter deletion relating x and x' not found; this violates "
        "the coset evolution law and signals a defect"
    )


def in_WT_class(w: Element, members) -> bool:
    """Whether the right-descent set of w is exactly T."""
    return right_descents(w) == frozenset(members)


@dataclass(frozen=True)
class DescentStepReport:
    hypothesis_ok: bool
    conclusion_ok: bool


def lemma4_apply(w: Element, s0: int) -> DescentStepReport:
    """Check: appending s0 to w lands in the class with descent set {s0}.

    The hypothesis asks m(s0, t) >= 3 for every descent t of w and
    m(s0, t0) infinite for at least one.  When it holds the conclusion
    must hold too (a counterexample is a defect signal); when it fails
    the raw membership verdict is still reported.
    """
    matrix = w.matrix
    descents = right_descents(w)
    hypothesis = (
        all(matrix.m(s0, t) >= 3 for t in descents)
        and any(matrix.m(s0, t) == INF for t in descents)
    )
    ws0 = multiply(w, Element.generator(matrix, s0))
    return DescentStepReport(
        hypothesis_ok=hypothesis,
        conclusion_ok=in_WT_class(ws0, {s0}),
    )
