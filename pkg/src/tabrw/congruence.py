"""Brute-force plactic and hypoplactic congruence oracles.

Words are explored by applying every relation instance, in both directions,
at every position. No tableau machinery is used here, so these functions
can serve as an independent check on the insertion algorithms.
"""

from __future__ import annotations

from collections import deque
from typing import Iterator, Sequence

from tabrw.words import Word, all_words, check_word

FRONTIER_CAP = 2_000_000

RELATIONS = ("plactic", "hypoplactic")


class SearchExhausted(RuntimeError):
    """The closure search grew past the state cap."""


def _knuth(a, b, c) -> Iterator[tuple]:
    # zxy = xzy for x <= y < z, read from either side: swap the first two
    if b <= c < a or a <= c < b:
        yield (b, a, c)
    # yzx = yxz for x < y <= z: swap the last two
    if c < a <= b or b < a <= c:
        yield (a, c, b)


def _hypo(a, b, c, d) -> Iterator[tuple]:
    # zxty = xzyt for x <= y < z <= t
    if b <= d < a <= c or a <= c < b <= d:
        yield (b, a, d, c)
    # tyzx = ytxz for x < y <= z < t
    if d < b <= c < a or c < a <= d < b:
        yield (b, a, d, c)


def neighbours(w: Sequence[int], relation: str = "plactic") -> set:
    """Words one relation step away from ``w``."""
    if relation not in RELATIONS:
        raise ValueError(f"unknown relation set {relation!r}")
    w = tuple(w)
    out = set()
    for i in range(len(w) - 2):
        for t in _knuth(*w[i:i + 3]):
            out.add(w[:i] + t + w[i + 3:])
    if relation == "hypoplactic":
        for i in range(len(w) - 3):
            for t in _hypo(*w[i:i + 4]):
                out.add(w[:i] + t + w[i + 4:])
    out.discard(w)
    return out


def closure(u: Sequence[int], relation: str = "plactic", cap: int = FRONTIER_CAP) -> set:
    """The full congruence class of ``u``."""
    u = tuple(u)
    seen = {u}
    todo = deque([u])
    while todo:
        w = todo.popleft()
        for v in neighbours(w, relation):
            if v not in seen:
                seen.add(v)
                if len(seen) > cap:
                    raise SearchExhausted(f"more than {cap} words reached from {u}")
                todo.append(v)
    return seen


def congruent(relation: str, n: int, u: Sequence[int], v: Sequence[int],
              cap: int = FRONTIER_CAP) -> bool:
    u, v = check_word(u, n), check_word(v, n)
    if len(u) != len(v) or sorted(u) != sorted(v):
        return False
    if u == v:
        return True
    seen = {u}
    todo = deque([u])
    while todo:
        w = todo.popleft()
        for x in neighbours(w, relation):
            if x == v:
                return True
            if x not in seen:
                seen.add(x)
                if len(seen) > cap:
                    raise SearchExhausted(f"more than {cap} words reached from {u}")
                todo.append(x)
    return False


def classes(relation: str, n: int, length: int, cap: int = FRONTIER_CAP) -> list:
    """Partition of all words of ``length`` over [n] into congruence classes.

    Each class is a sorted tuple of words; classes are sorted by first word.
    """
    if n ** length > cap:
        raise SearchExhausted(f"{n}^{length} words exceed the cap {cap}")
    parent: dict[Word, Word] = {}

    def find(x):
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    words = list(all_words(n, length))
    for w in words:
        parent[w] = w
    for w in words:
        for v in neighbours(w, relation):
            a, b = find(w), find(v)
            if a != b:
                parent[max(a, b)] = min(a, b)
    groups: dict[Word, list] = {}
    for w in words:
        groups.setdefault(find(w), []).append(w)
    return sorted(tuple(sorted(g)) for g in groups.values())
