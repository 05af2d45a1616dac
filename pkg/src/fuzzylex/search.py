"""Approximate dictionary lookup under a block edit distance.

The search walks the trie and the query together. A state ``(i, node, delta)``
says the first ``i`` query symbols have been rewritten into the string spelled
by ``node`` for total cost ``delta``. From a state every applicable arc
``(G, H)`` is tried: ``G`` must match the query at ``i`` and ``H`` must be a
path below ``node``. Multi-symbol arcs are applied where they start, so a
cheap block rewrite is never lost to a prefix that looks expensive on its own.

States are expanded cheapest first and only one state per ``(i, node)`` is
kept, replaced when a strictly cheaper one shows up. Arc costs are
non-negative, so a settled state is final and every state is expanded once.
"""

from __future__ import annotations

import heapq
import math
from collections import defaultdict
from dataclasses import dataclass
from typing import NamedTuple

from .cost_model import CostModel, ShortCircuit
from .trie import LexTrie


class EmptyQuery(ValueError):
    pass


class NonPositiveThreshold(ValueError):
    pass


@dataclass(frozen=True)
class MatchResult:
    word: str
    raw_cost: float
    normalized_cost: float


@dataclass
class SearchDiagnostics:
    states_expanded: int = 0
    states_dominated: int = 0
    arcs_considered: int = 0
    mean_branching: float = 0.0
    alphabet_size: int = 0
    kappa: int = 0
    epsilon: float = 1.0
    threshold: float = 0.0

    @property
    def worst_case_factor(self) -> float:
        return worst_case_factor(
            self.mean_branching, self.threshold, self.epsilon, self.alphabet_size, self.kappa
        )


class SearchOutcome(NamedTuple):
    matches: list[MatchResult]
    diagnostics: SearchDiagnostics


def worst_case_factor(
    branching: float, threshold: float, epsilon: float, alphabet_size: int, kappa: int
) -> float:
    """``branching ** (threshold / epsilon)`` times the number of arcs; inf on overflow."""
    arcs = (alphabet_size + 1) ** 2 + kappa - 1
    try:
        return branching ** (threshold / epsilon) * arcs
    except OverflowError:
        return math.inf


def index_block_arcs(model: CostModel) -> dict[str, list[ShortCircuit]]:
    """Multi-symbol shortcuts keyed by the first query-side symbol ("" for insertions)."""
    by_first: dict[str, list[ShortCircuit]] = defaultdict(list)
    for sc in model.block_shortcuts():
        by_first[sc.left[:1]].append(sc)
    return dict(by_first)


def approx_search(
    trie: LexTrie, model: CostModel, query: str, threshold: float
) -> SearchOutcome:
    """All dictionary words within raw cost strictly below ``threshold`` of ``query``.

    Results are sorted by (normalized cost, word); the normalized cost is the
    raw cost divided by the query length.
    """
    if not query:
        raise EmptyQuery("query must contain at least one symbol")
    if not (threshold > 0) or math.isnan(threshold):
        raise NonPositiveThreshold(f"threshold must be positive, got {threshold!r}")

    n = len(query)
    model = model.with_symbols(trie.alphabet).with_symbols(query)
    cost = model.cost
    blocks = index_block_arcs(model)
    no_blocks: list[ShortCircuit] = []
    children = trie.children

    diag = SearchDiagnostics(
        mean_branching=trie.branching_stats().mean_branching,
        alphabet_size=len(model.alphabet),
        kappa=model.kappa,
        epsilon=model.epsilon_min,
        threshold=threshold,
    )

    best: dict[tuple[int, int], float] = {(0, trie.root): 0.0}
    heap: list[tuple[float, int, int]] = [(0.0, 0, trie.root)]
    push, pop = heapq.heappush, heapq.heappop
    # single-symbol costs, looked up once per search
    symbols = sorted(model.alphabet)
    insert = {sym: cost("", sym) for sym in symbols}
    delete = {q: cost(q, "") for q in set(query)}
    substitute = {q: {sym: cost(q, sym) for sym in symbols} for q in set(query)}
    extend = trie.prolongement
    block_inserts = blocks.get("", no_blocks)
    expanded = dominated = considered = 0

    while heap:
        delta, i, node = pop(heap)
        if delta > best[i, node]:
            continue
        expanded += 1
        kids = children(node)
        # candidate successors as (i', node', cost); applicability already checked
        succ = [(i, child, insert[sym]) for sym, child in kids.items()]
        for sc in block_inserts:
            target = extend(node, sc.right)
            if target is not None:
                succ.append((i, target, sc.cost))
        considered += len(kids) + len(block_inserts)
        if i < n:
            q = query[i]
            rewrite = substitute[q]
            succ.append((i + 1, node, delete[q]))
            succ += [(i + 1, child, rewrite[sym]) for sym, child in kids.items()]
            considered += 1 + len(kids)
            for sc in blocks.get(q, no_blocks):
                considered += 1
                if query.startswith(sc.left, i):
                    target = extend(node, sc.right)
                    if target is not None:
                        succ.append((i + len(sc.left), target, sc.cost))
        for j, target, c in succ:
            reached = delta + c
            if reached >= threshold:
                continue
            key = (j, target)
            prior = best.get(key)
            if prior is not None and not reached < prior:
                dominated += 1
                continue
            best[key] = reached
            push(heap, (reached, j, target))

    diag.states_expanded = expanded
    diag.states_dominated = dominated
    diag.arcs_considered = considered

    matches = [
        MatchResult(trie.encoded_string(node), delta, delta / n)
        for (i, node), delta in best.items()
        if i == n and trie.is_final(node)
    ]
    matches.sort(key=lambda m: (m.normalized_cost, m.word))
    return SearchOutcome(matches, diag)
