"""Reference computations of the block edit distance.

Two independent routes to the same number: :func:`dp_distance` runs a
prefix dynamic program over block arcs, :func:`enumerate_distance` walks
every paired segmentation of two short strings. Both return a witness trace.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .cost_model import CostModel

ENUMERATION_LIMIT = 8


class InputTooLarge(ValueError):
    pass


@dataclass(frozen=True)
class Segment:
    g: str
    h: str
    cost: float


@dataclass(frozen=True)
class AlignmentTrace:
    segments: tuple[Segment, ...] = ()

    @property
    def total(self) -> float:
        return sum(seg.cost for seg in self.segments)

    @property
    def source(self) -> str:
        return "".join(seg.g for seg in self.segments)

    @property
    def target(self) -> str:
        return "".join(seg.h for seg in self.segments)


@dataclass(frozen=True)
class DistanceValue:
    value: float
    trace: AlignmentTrace

    def __float__(self) -> float:
        return self.value


def classic_levenshtein(s: str, t: str) -> int:
    """Unit-cost insertion/deletion/substitution distance."""
    if len(s) < len(t):
        s, t = t, s
    previous = list(range(len(t) + 1))
    for i, a in enumerate(s, start=1):
        current = [i]
        for j, b in enumerate(t, start=1):
            current.append(
                min(previous[j] + 1, current[j - 1] + 1, previous[j - 1] + (a != b))
            )
        previous = current
    return previous[-1]


def dp_distance(model: CostModel, s: str, t: str) -> DistanceValue:
    """Minimum total arc cost turning ``s`` into ``t``.

    ``D[i][j]`` is the cheapest way to align ``s[:i]`` with ``t[:j]``; each cell
    looks back over every arc whose blocks end exactly at ``(i, j)``. On cost
    ties the earlier candidate wins, and candidates are tried block shortcuts
    first (longest first), then substitution, deletion, insertion.
    """
    n, m = len(s), len(t)
    blocks = sorted(
        model.block_shortcuts(), key=lambda sc: (-(len(sc.left) + len(sc.right)), sc.left, sc.right)
    )
    # block shortcuts whose left side ends at position i of s
    ending = [[sc for sc in blocks if len(sc.left) <= i and s.endswith(sc.left, 0, i)] for i in range(n + 1)]

    inf = math.inf
    dist = [[inf] * (m + 1) for _ in range(n + 1)]
    back: list[list[tuple[int, int, float] | None]] = [[None] * (m + 1) for _ in range(n + 1)]
    dist[0][0] = 0.0
    cost = model.cost
    for i in range(n + 1):
        row = dist[i]
        for j in range(m + 1):
            if i == 0 and j == 0:
                continue
            best = inf
            step = None
            for sc in ending[i]:
                lh = len(sc.right)
                if lh <= j and t.endswith(sc.right, 0, j):
                    cand = dist[i - len(sc.left)][j - lh] + sc.cost
                    if cand < best:
                        best, step = cand, (len(sc.left), lh, sc.cost)
            if i and j:
                c = cost(s[i - 1], t[j - 1])
                cand = dist[i - 1][j - 1] + c
                if cand < best:
                    best, step = cand, (1, 1, c)
            if i:
                c = cost(s[i - 1], "")
                cand = dist[i - 1][j] + c
                if cand < best:
                    best, step = cand, (1, 0, c)
            if j:
                c = cost("", t[j - 1])
                cand = row[j - 1] + c
                if cand < best:
                    best, step = cand, (0, 1, c)
            row[j] = best
            back[i][j] = step

    segments = []
    i, j = n, m
    while i or j:
        step = back[i][j]
        assert step is not None
        di, dj, c = step
        segments.append(Segment(s[i - di : i], t[j - dj : j], c))
        i, j = i - di, j - dj
    segments.reverse()
    return DistanceValue(dist[n][m], AlignmentTrace(tuple(segments)))


def enumerate_distance(model: CostModel, s: str, t: str) -> DistanceValue:
    """Brute-force minimum over all paired segmentations of ``s`` and ``t``.

    Each step picks any block of ``s`` and any block of ``t`` starting at the
    current positions, keeping the pair when its cost is defined. Branches
    already at or above the best complete total are cut, which cannot hide a
    cheaper alignment because costs are non-negative.
    """
    n, m = len(s), len(t)
    if n + m > ENUMERATION_LIMIT:
        raise InputTooLarge(
            f"|s| + |t| = {n + m} exceeds the enumeration limit of {ENUMERATION_LIMIT}"
        )
    best_value = math.inf
    best_path: list[Segment] = []
    path: list[Segment] = []

    def walk(i: int, j: int, acc: float) -> None:
        nonlocal best_value, best_path
        if acc >= best_value:
            return
        if i == n and j == m:
            best_value = acc
            best_path = list(path)
            return
        steps = []
        for k in range(n - i + 1):
            g = s[i : i + k]
            for l in range(m - j + 1):
                h = t[j : j + l]
                c = model.cost(g, h)
                if c is not None:
                    steps.append((c, g, h))
        # cheap steps first so the cut-off tightens early
        steps.sort()
        for c, g, h in steps:
            path.append(Segment(g, h, c))
            walk(i + len(g), j + len(h), acc + c)
            path.pop()

    walk(0, 0, 0.0)
    return DistanceValue(best_value, AlignmentTrace(tuple(best_path)))
