"""Undirected simple networks over dense integer agent ids.

Networks are immutable: :func:`add_link` and :func:`delete_link` return new
values, so a network and its what-if variant can be held side by side.
Hop distances between agents in different components are represented by the
distinct :data:`UNREACHABLE` marker rather than by an infinite float.
"""

from __future__ import annotations

import enum
import functools
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Union

__all__ = [
    "UNREACHABLE",
    "Distance",
    "DistanceMatrix",
    "Network",
    "add_link",
    "build_network",
    "complete_network",
    "components",
    "delete_link",
    "diameter",
    "distances",
    "empty_network",
    "is_connected",
    "neighbors",
    "path_network",
    "radius",
    "reciprocal",
    "ring_network",
    "star_network",
]


class _Unreachable(enum.Enum):
    UNREACHABLE = "unreachable"

    def __repr__(self) -> str:
        return "UNREACHABLE"


UNREACHABLE = _Unreachable.UNREACHABLE

#: A hop count (``int``) or :data:`UNREACHABLE`.
Distance = Union[int, _Unreachable]


def reciprocal(d: Distance) -> Fraction:
    """Return ``1/d`` exactly, with an unreachable distance contributing 0."""
    if d is UNREACHABLE:
        return Fraction(0)
    if d <= 0:
        raise ValueError(f"reciprocal of non-positive distance {d!r}")
    return Fraction(1, d)


def _distance_key(d: Distance) -> tuple[int, int]:
    # orders UNREACHABLE after every hop count
    return (1, 0) if d is UNREACHABLE else (0, d)


@dataclass(frozen=True)
class Network:
    """An undirected simple graph on agents ``0 .. n-1``.

    ``links`` holds canonical ``(low, high)`` pairs. Use :func:`build_network`
    to construct from arbitrary pair lists.
    """

    n: int
    links: frozenset[tuple[int, int]] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("a network needs at least one agent")
        for u, v in self.links:
            if not (0 <= u < v < self.n):
                raise ValueError(f"invalid canonical link ({u}, {v}) for n={self.n}")

    @functools.cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        adj: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.links:
            adj[u].add(v)
            adj[v].add(u)
        return tuple(frozenset(a) for a in adj)

    def has_link(self, i: int, j: int) -> bool:
        return (min(i, j), max(i, j)) in self.links

    @property
    def agents(self) -> range:
        return range(self.n)

    def sorted_links(self) -> list[tuple[int, int]]:
        return sorted(self.links)

    def __len__(self) -> int:
        return self.n

    def __repr__(self) -> str:
        return f"Network(n={self.n}, links={self.sorted_links()})"


def _check_agent(g: Network, i: int) -> None:
    if not isinstance(i, int) or isinstance(i, bool) or not 0 <= i < g.n:
        raise ValueError(f"agent {i!r} out of range for n={g.n}")


def build_network(n: int, links: Iterable[tuple[int, int]] = ()) -> Network:
    """Build a :class:`Network`, collapsing duplicate and reversed pairs.

    Raises ``ValueError`` naming the offending pair for out-of-range endpoints
    and self-loops.
    """
    if n < 1:
        raise ValueError("a network needs at least one agent")
    canon = set()
    for pair in links:
        u, v = pair
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"link {pair!r} has an endpoint outside 0..{n - 1}")
        if u == v:
            raise ValueError(f"link {pair!r} is a self-loop")
        canon.add((min(u, v), max(u, v)))
    return Network(n, frozenset(canon))


def add_link(g: Network, i: int, j: int) -> Network:
    """Return ``g + <ij>``."""
    _check_agent(g, i)
    _check_agent(g, j)
    if i == j:
        raise ValueError(f"cannot link agent {i} to itself")
    if g.has_link(i, j):
        raise ValueError(f"link ({i}, {j}) already exists")
    return Network(g.n, g.links | {(min(i, j), max(i, j))})


def delete_link(g: Network, i: int, j: int) -> Network:
    """Return ``g - <ij>``."""
    _check_agent(g, i)
    _check_agent(g, j)
    if not g.has_link(i, j):
        raise ValueError(f"link ({i}, {j}) does not exist")
    return Network(g.n, g.links - {(min(i, j), max(i, j))})


def neighbors(g: Network, i: int) -> frozenset[int]:
    _check_agent(g, i)
    return g.adjacency[i]


@dataclass(frozen=True)
class DistanceMatrix:
    """All-pairs hop counts; index as ``dm[i, j]``."""

    rows: tuple[tuple[Distance, ...], ...]

    @property
    def n(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij: tuple[int, int]) -> Distance:
        i, j = ij
        return self.rows[i][j]

    def row(self, i: int) -> tuple[Distance, ...]:
        return self.rows[i]

    def reachable(self, i: int, j: int) -> bool:
        return self.rows[i][j] is not UNREACHABLE


def _bfs(adjacency: tuple[frozenset[int], ...], source: int) -> tuple[Distance, ...]:
    dist: list[Distance] = [UNREACHABLE] * len(adjacency)
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        du = dist[u]
        for v in adjacency[u]:
            if dist[v] is UNREACHABLE:
                dist[v] = du + 1
                queue.append(v)
    return tuple(dist)


@functools.lru_cache(maxsize=8192)
def distances(g: Network) -> DistanceMatrix:
    """All-pairs shortest hop counts via one BFS per agent."""
    adj = g.adjacency
    return DistanceMatrix(tuple(_bfs(adj, s) for s in range(g.n)))


def components(g: Network) -> list[frozenset[int]]:
    """Connected components, ordered by their smallest agent id."""
    seen: set[int] = set()
    parts = []
    for s in range(g.n):
        if s in seen:
            continue
        row = distances(g).row(s)
        part = frozenset(v for v in range(g.n) if row[v] is not UNREACHABLE)
        seen |= part
        parts.append(part)
    return parts


def is_connected(g: Network) -> bool:
    return len(components(g)) == 1


def _pair_distances(g: Network) -> Iterator[Distance]:
    if g.n < 2:
        raise ValueError("diameter and radius need at least two agents")
    dm = distances(g)
    for i in range(g.n):
        for j in range(i + 1, g.n):
            yield dm[i, j]


def diameter(g: Network) -> Distance:
    """Largest pairwise distance; :data:`UNREACHABLE` when disconnected."""
    return max(_pair_distances(g), key=_distance_key)


def radius(g: Network) -> Distance:
    """Smallest pairwise distance over distinct agents.

    This is the pairwise minimum (1 whenever any link exists), not the
    eccentricity-based radius used elsewhere in graph theory.
    """
    return min(_pair_distances(g), key=_distance_key)


# Standard topologies.


def empty_network(n: int) -> Network:
    return Network(n)


def path_network(n: int) -> Network:
    return build_network(n, [(i, i + 1) for i in range(n - 1)])


def ring_network(n: int) -> Network:
    if n < 3:
        raise ValueError("a ring needs at least three agents")
    return build_network(n, [(i, (i + 1) % n) for i in range(n)])


def star_network(n: int, center: int = 0) -> Network:
    return build_network(n, [(center, v) for v in range(n) if v != center])


def complete_network(n: int) -> Network:
    return build_network(n, [(u, v) for u in range(n) for v in range(u + 1, n)])
