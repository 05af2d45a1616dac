"""Immutable lexicographic tree over a dictionary.

Nodes are integer ids into parallel arrays; node 0 is the root. Each node
keeps its parent and incoming symbol so the string it spells can be rebuilt
by walking up.
"""

from __future__ import annotations

from typing import Iterable, NamedTuple

ROOT = 0


class ExactSearch(NamedTuple):
    found: bool
    arcs_visited: int


class BranchingStats(NamedTuple):
    mean_branching: float
    max_branching: int
    node_count: int


class LexTrie:
    __slots__ = ("_children", "_parent", "_label", "_final", "_depth", "word_count")

    def __init__(self, words: Iterable[str] = ()):
        children: list[dict[str, int]] = [{}]
        parent = [-1]
        label = [""]
        final = [False]
        depth = [0]
        for word in words:
            node = ROOT
            for ch in word:
                nxt = children[node].get(ch)
                if nxt is None:
                    nxt = len(children)
                    children[node][ch] = nxt
                    children.append({})
                    parent.append(node)
                    label.append(ch)
                    final.append(False)
                    depth.append(depth[node] + 1)
                node = nxt
            final[node] = True
        # sorted arcs give deterministic iteration order
        self._children = tuple({k: kids[k] for k in sorted(kids)} for kids in children)
        self._parent = tuple(parent)
        self._label = tuple(label)
        self._final = tuple(final)
        self._depth = tuple(depth)
        self.word_count = sum(final)

    @property
    def root(self) -> int:
        return ROOT

    @property
    def node_count(self) -> int:
        return len(self._children)

    @property
    def depth(self) -> int:
        return max(self._depth)

    @property
    def alphabet(self) -> frozenset[str]:
        return frozenset(self._label[1:])

    def children(self, node: int) -> dict[str, int]:
        return self._children[node]

    def is_final(self, node: int) -> bool:
        return self._final[node]

    def child(self, node: int, symbol: str) -> int | None:
        return self._children[node].get(symbol)

    def prolongement(self, node: int, block: str) -> int | None:
        """Follow ``block`` symbol by symbol from ``node``; None if an arc is missing."""
        for ch in block:
            node = self._children[node].get(ch)
            if node is None:
                return None
        return node

    def encoded_string(self, node: int) -> str:
        out = []
        while node != ROOT:
            out.append(self._label[node])
            node = self._parent[node]
        return "".join(reversed(out))

    def exact_search(self, s: str) -> ExactSearch:
        """Walk ``s`` from the root, counting arcs until it ends or an arc is missing."""
        node = ROOT
        visited = 0
        for ch in s:
            nxt = self._children[node].get(ch)
            if nxt is None:
                return ExactSearch(False, visited)
            node = nxt
            visited += 1
        return ExactSearch(self._final[node], visited)

    def __contains__(self, word: str) -> bool:
        return self.exact_search(word).found

    def words(self) -> list[str]:
        """Dictionary words in lexicographic (symbol) order."""
        out = []
        stack = [ROOT]
        while stack:
            node = stack.pop()
            if self._final[node]:
                out.append(self.encoded_string(node))
            stack.extend(reversed(self._children[node].values()))
        return out

    def __len__(self) -> int:
        return self.word_count

    def branching_stats(self) -> BranchingStats:
        degrees = [len(kids) for kids in self._children]
        return BranchingStats(sum(degrees) / len(degrees), max(degrees), len(degrees))


def build_trie(words: Iterable[str]) -> LexTrie:
    return LexTrie(words)


def exact_search(trie: LexTrie, s: str) -> ExactSearch:
    return trie.exact_search(s)


def prolongement(trie: LexTrie, node: int, block: str) -> int | None:
    return trie.prolongement(node, block)


def encoded_string(trie: LexTrie, node: int) -> str:
    return trie.encoded_string(node)


def branching_stats(trie: LexTrie) -> BranchingStats:
    return trie.branching_stats()


def load_dictionary(path) -> list[str]:
    """One entry per line; only line terminators are stripped, blank lines skipped."""
    with open(path, encoding="utf-8", newline="") as fh:
        lines = [line.rstrip("\r\n") for line in fh]
    return [line for line in lines if line]
