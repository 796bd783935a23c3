"""A small engine for two-column string-of-columns rewriting systems.

Rules work on a window of two adjacent columns given with their absolute
top rows. A rule returns the replacement columns, again with absolute top
rows, or ``None`` when it does not match. Columns outside the window keep
their absolute rows, so the gluing positions on either side of the window
are recomputed from the geometry rather than patched by hand.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from tabrw.diagrams import StringOfColumns, reading_sw, to_json_obj

Placed = list  # of (column, absolute top row)


class RewriteError(RuntimeError):
    pass


class NotApplicable(RewriteError):
    """The redex does not match the diagram."""


class TerminationError(RewriteError):
    """A normalization ran past its step budget."""


@dataclass(frozen=True)
class Rule:
    name: str
    family: str
    apply: Callable  # (A, a, B, b) -> list[(column, top)] | None

    def __repr__(self):
        return f"Rule({self.name})"


@dataclass(frozen=True)
class RewriteSystem:
    name: str
    rules: tuple
    congruence: str  # "plactic" or "hypoplactic"
    measure: Callable
    # +1 when the measure strictly increases along every step, -1 when it
    # strictly decreases
    direction: int = -1

    def rule(self, name: str) -> Rule:
        for r in self.rules:
            if r.name == name or r.family == name:
                return r
        raise KeyError(f"{self.name} has no rule {name!r}")


@dataclass(frozen=True)
class Redex:
    rule: str
    index: int  # 1-based position of the left column of the window

    def __str__(self):
        return f"{self.rule}(c{self.index},c{self.index + 1})"


@dataclass(frozen=True)
class LocalRewrite:
    """Replacement columns and the new gluing positions at the window edges.

    A missing neighbour is reported as ``None``.
    """
    replacement: StringOfColumns
    p_t: int | None
    q_t: int | None


@dataclass
class Step:
    redex: Redex
    diagram: StringOfColumns
    measure: tuple


@dataclass
class ReductionTrace:
    initial: StringOfColumns
    steps: list = field(default_factory=list)

    @property
    def final(self) -> StringOfColumns:
        return self.steps[-1].diagram if self.steps else self.initial

    def diagrams(self) -> list:
        return [self.initial] + [s.diagram for s in self.steps]

    def to_json_obj(self, n: int) -> list:
        return [
            {"rule": s.redex.rule, "index": s.redex.index, "diagram": to_json_obj(s.diagram, n)}
            for s in self.steps
        ]


# -- applying rules ------------------------------------------------------

def _apply_placed(w: StringOfColumns, rule: Rule, index: int):
    placed = w.placed()
    i = index - 1
    if i < 0 or i + 1 >= len(placed):
        return None
    (A, a), (B, b) = placed[i], placed[i + 1]
    out = rule.apply(A, a, B, b)
    if out is None:
        return None
    out = [(tuple(c), t) for c, t in out if c]
    return placed[:i], out, placed[i + 2:]


def try_apply(sys: RewriteSystem, w: StringOfColumns, redex: Redex):
    got = _apply_placed(w, sys.rule(redex.rule), redex.index)
    if got is None:
        return None
    left, mid, right = got
    new = left + mid + right
    return StringOfColumns.from_tops([c for c, _ in new], [t for _, t in new])


def step(sys: RewriteSystem, w: StringOfColumns, redex: Redex) -> StringOfColumns:
    out = try_apply(sys, w, redex)
    if out is None:
        raise NotApplicable(f"{redex} does not apply to {w}")
    return out


def local_rewrite(sys: RewriteSystem, w: StringOfColumns, redex: Redex) -> LocalRewrite:
    got = _apply_placed(w, sys.rule(redex.rule), redex.index)
    if got is None:
        raise NotApplicable(f"{redex} does not apply to {w}")
    left, mid, right = got
    rep = StringOfColumns.from_tops([c for c, _ in mid], [t for _, t in mid])
    p_t = q_t = None
    if left:
        (c0, t0), (c1, t1) = left[-1], mid[0]
        p_t = t1 - t0 + len(c1)
    if right:
        (c0, t0), (c1, t1) = mid[-1], right[0]
        q_t = t1 - t0 + len(c1)
    return LocalRewrite(rep, p_t, q_t)


def find_redexes(sys: RewriteSystem, w: StringOfColumns) -> list:
    """Applicable redexes, left to right, ties in rule-list order."""
    placed = w.placed()
    out = []
    for i in range(len(placed) - 1):
        (A, a), (B, b) = placed[i], placed[i + 1]
        for r in sys.rules:
            if r.apply(A, a, B, b) is not None:
                out.append(Redex(r.name, i + 1))
    return out


def is_normal(sys: RewriteSystem, w: StringOfColumns) -> bool:
    placed = w.placed()
    for i in range(len(placed) - 1):
        (A, a), (B, b) = placed[i], placed[i + 1]
        if any(r.apply(A, a, B, b) is not None for r in sys.rules):
            return False
    return True


# -- strategies ----------------------------------------------------------

def _leftmost(redexes, rng):
    return redexes[0]


def _rightmost(redexes, rng):
    last = redexes[-1].index
    return next(r for r in redexes if r.index == last)


def _random(redexes, rng):
    return rng.choice(redexes)


STRATEGIES = {"leftmost": _leftmost, "rightmost": _rightmost, "random": _random}


def step_budget(w: StringOfColumns) -> int:
    return 4 * w.size ** 2


def normal_form(sys: RewriteSystem, w: StringOfColumns, strategy: str = "leftmost",
                seed: int | None = None, budget: int | None = None):
    """Reduce ``w`` to a normal form; returns ``(diagram, trace)``."""
    try:
        pick = STRATEGIES[strategy]
    except KeyError:
        raise ValueError(f"unknown strategy {strategy!r}") from None
    if strategy == "random" and seed is None:
        raise ValueError("the random strategy needs a seed")
    rng = random.Random(seed)
    limit = step_budget(w) if budget is None else budget
    trace = ReductionTrace(w)
    while True:
        redexes = find_redexes(sys, w)
        if not redexes:
            return w, trace
        if len(trace.steps) >= limit:
            raise TerminationError(
                f"{sys.name}: no normal form within {limit} steps from {trace.initial}"
            )
        r = pick(redexes, rng)
        w = step(sys, w, r)
        trace.steps.append(Step(r, w, sys.measure(w)))


def replay(sys: RewriteSystem, w: StringOfColumns, redexes: Iterable) -> ReductionTrace:
    """Apply the given redexes in order; each may be a Redex or (rule, index)."""
    trace = ReductionTrace(w)
    for r in redexes:
        if not isinstance(r, Redex):
            r = Redex(*r)
        w = step(sys, w, r)
        trace.steps.append(Step(r, w, sys.measure(w)))
    return trace


def verify_trace(sys: RewriteSystem, trace: ReductionTrace) -> bool:
    w = trace.initial
    for s in trace.steps:
        if try_apply(sys, w, s.redex) != s.diagram:
            return False
        w = s.diagram
    return True


# -- audits --------------------------------------------------------------

def check_joinability(sys: RewriteSystem, instances: Iterable) -> list:
    """Diagrams with two one-step reducts whose normal forms differ."""
    witnesses = []
    for w in instances:
        reducts = [step(sys, w, r) for r in find_redexes(sys, w)]
        nfs = {normal_form(sys, v)[0] for v in reducts}
        if len(nfs) > 1:
            witnesses.append((w, sorted(nfs, key=str)))
    return witnesses


def audit_step(sys: RewriteSystem, before: StringOfColumns, after: StringOfColumns,
               n: int | None = None, check_congruence: bool = True) -> dict:
    from tabrw.congruence import congruent

    rb, ra = reading_sw(before), reading_sw(after)
    rec = {"multiset": Counter(rb) == Counter(ra)}
    if check_congruence:
        n = n or max(rb + ra + (1,))
        rec["congruent"] = congruent(sys.congruence, n, rb, ra)
    mb, ma = sys.measure(before), sys.measure(after)
    rec["monotone"] = (ma > mb) if sys.direction > 0 else (ma < mb)
    rec["ok"] = all(rec.values())
    return rec


def monotone_violations(sys: RewriteSystem, trace: ReductionTrace) -> list:
    """Steps where the measure fails to move strictly in the system's direction."""
    bad = []
    prev = sys.measure(trace.initial)
    for k, s in enumerate(trace.steps):
        ok = s.measure > prev if sys.direction > 0 else s.measure < prev
        if not ok:
            bad.append(k)
        prev = s.measure
    return bad
