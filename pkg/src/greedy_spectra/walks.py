"""Exact walk counting: spectral moments, total walks, level-restricted walks.

The k-th spectral moment of a graph equals the number of closed k-walks, so
every quantity here is an exact Python integer obtained by propagating
counting vectors along adjacency lists; no floating point is involved.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Sequence

from .errors import InvalidBoundsError, LevelMismatchError, NotAnEdgeError
from .trees import Tree

__all__ = [
    "MomentVector",
    "LevelSequence",
    "spectral_moment",
    "spectral_moments_up_to",
    "total_walks",
    "walks_by_level_sequence",
    "closed_walks_by_level_sequence",
    "closed_walks_from_directed_edge",
    "first_strict_difference",
]


@dataclass(frozen=True)
class MomentVector:
    """Closed-walk counts (M_0, M_1, ..., M_k), exact integers."""

    counts: tuple[int, ...]

    def __post_init__(self) -> None:
        counts = tuple(int(c) for c in self.counts)
        object.__setattr__(self, "counts", counts)
        if not counts:
            raise InvalidBoundsError("a moment vector needs at least M_0")
        if any(c < 0 for c in counts):
            raise InvalidBoundsError("walk counts cannot be negative")

    @property
    def k_max(self) -> int:
        return len(self.counts) - 1

    def __getitem__(self, k: int) -> int:
        return self.counts[k]

    def __len__(self) -> int:
        return len(self.counts)

    def __iter__(self):
        return iter(self.counts)

    def to_json(self) -> str:
        """Counts as a JSON array of decimal strings (they outgrow doubles fast)."""
        return json.dumps([str(c) for c in self.counts])

    @classmethod
    def from_json(cls, text: str) -> "MomentVector":
        return cls(tuple(int(s) for s in json.loads(text)))


@dataclass(frozen=True)
class LevelSequence:
    """Admissible walk profile: levels of consecutive walk vertices.

    Entries are 1-based levels; consecutive entries must differ by exactly 1
    because every tree edge joins adjacent levels.  A sequence of length l
    describes walks with l-1 steps.
    """

    levels: tuple[int, ...]

    def __post_init__(self) -> None:
        levels = tuple(int(x) for x in self.levels)
        object.__setattr__(self, "levels", levels)
        if not levels:
            raise LevelMismatchError("level sequence cannot be empty")
        if any(x < 1 for x in levels):
            raise LevelMismatchError(f"levels are 1-based, got {levels}")
        for a, b in zip(levels, levels[1:]):
            if abs(a - b) != 1:
                raise LevelMismatchError(
                    f"consecutive levels must differ by 1, got {a} -> {b}"
                )

    @property
    def steps(self) -> int:
        return len(self.levels) - 1

    def __len__(self) -> int:
        return len(self.levels)

    def __iter__(self):
        return iter(self.levels)


def _adjacency_step(adj: Sequence[Sequence[int]], vec: list[int]) -> list[int]:
    return [sum(vec[u] for u in nbrs) for nbrs in adj]


def spectral_moment(t: Tree, k: int) -> int:
    """Number of closed k-walks of the tree (the k-th spectral moment)."""
    if k < 0:
        raise InvalidBoundsError(f"walk length must be >= 0, got {k}")
    return spectral_moments_up_to(t, k)[k]


def spectral_moments_up_to(t: Tree, k_max: int) -> MomentVector:
    """Moment vector (M_0, ..., M_k_max) by per-vertex walk propagation."""
    if k_max < 0:
        raise InvalidBoundsError(f"walk length must be >= 0, got {k_max}")
    adj = t.adjacency
    counts = [0] * (k_max + 1)
    counts[0] = t.n
    for start in range(t.n):
        vec = [0] * t.n
        vec[start] = 1
        for k in range(1, k_max + 1):
            vec = _adjacency_step(adj, vec)
            counts[k] += vec[start]
    return MomentVector(tuple(counts))


def total_walks(t: Tree, k: int) -> int:
    """Number of walks with exactly k steps, over all start vertices."""
    if k < 0:
        raise InvalidBoundsError(f"walk length must be >= 0, got {k}")
    vec = [1] * t.n
    for _ in range(k):
        vec = _adjacency_step(t.adjacency, vec)
    return sum(vec)


def _coerce_ls(ls) -> LevelSequence:
    return ls if isinstance(ls, LevelSequence) else LevelSequence(tuple(ls))


def walks_by_level_sequence(t: Tree, ls) -> dict[int, int]:
    """Count walks following the level profile ``ls``, per start vertex.

    The tree must be rooted (levels come from its root).  Returns a vector
    over the vertices on level ``ls[0]``: vertex -> number of walks that
    start there and visit the prescribed levels in order.
    """
    ls = _coerce_ls(ls)
    level = t.levels
    adj = t.adjacency
    profile = ls.levels
    # Backward propagation: vec[v] = walks from v realizing the profile suffix.
    vec = [1 if level[v] == profile[-1] else 0 for v in range(t.n)]
    for pos in range(len(profile) - 2, -1, -1):
        nxt = _adjacency_step(adj, vec)
        vec = [nxt[v] if level[v] == profile[pos] else 0 for v in range(t.n)]
    return {v: vec[v] for v in range(t.n) if level[v] == profile[0]}


def closed_walks_by_level_sequence(t: Tree, ls) -> dict[int, int]:
    """Count closed walks following ``ls`` (first level = last level), per vertex."""
    ls = _coerce_ls(ls)
    profile = ls.levels
    if profile[0] != profile[-1]:
        raise LevelMismatchError(
            f"closed walks need equal first and last level, got {profile[0]} != {profile[-1]}"
        )
    level = t.levels
    adj = t.adjacency
    starts = [v for v in range(t.n) if level[v] == profile[0]]
    out: dict[int, int] = {}
    for s in starts:
        vec = [0] * t.n
        vec[s] = 1
        for pos in range(1, len(profile)):
            nxt = _adjacency_step(adj, vec)
            vec = [nxt[v] if level[v] == profile[pos] else 0 for v in range(t.n)]
        out[s] = vec[s]
    return out


def closed_walks_from_directed_edge(t: Tree, u: int, v: int, k: int) -> int:
    """Closed k-walks whose first step goes u -> v along the edge (u, v).

    Equals the number of (k-1)-step walks from v back to u; zero for k = 0
    (and for every odd k, trees being bipartite).
    """
    if k < 0:
        raise InvalidBoundsError(f"walk length must be >= 0, got {k}")
    e = (min(u, v), max(u, v))
    if e not in t.edges:
        raise NotAnEdgeError(f"({u},{v}) is not an edge of the tree")
    if k == 0:
        return 0
    vec = [0] * t.n
    vec[v] = 1
    for _ in range(k - 1):
        vec = _adjacency_step(t.adjacency, vec)
    return vec[u]


def first_strict_difference(t1: Tree, t2: Tree, k_max: int) -> int | None:
    """Smallest k <= k_max where the spectral moments differ, else None.

    On trees all odd moments vanish, so the answer is always even.
    """
    m1 = spectral_moments_up_to(t1, k_max)
    m2 = spectral_moments_up_to(t2, k_max)
    for k in range(k_max + 1):
        if m1[k] != m2[k]:
            return k
    return None
