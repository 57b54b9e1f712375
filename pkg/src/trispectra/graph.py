"""Canonical graph representation, validation, and matrix views.

Nodes are numbered 1..n in all public interfaces.  Edges are kept in
canonical lexicographic order by (min, max) endpoint, and "edge j"
everywhere else in the library refers to position j (1-based) in that
ordering.  Internal arrays are 0-based but never leak.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .errors import (
    DisconnectedError,
    DuplicateEdgeError,
    EmptyGraphError,
    SelfLoopError,
)


@dataclass(frozen=True)
class Graph:
    """Simple connected undirected graph.

    Immutable after construction; safe to share between threads.  Use
    :func:`build_graph` rather than the raw constructor, which performs
    no validation.

    Attributes
    ----------
    n : int
        Node count; nodes are 1..n.
    edges : tuple of (int, int)
        m unordered pairs (i, j) with i < j, lexicographically sorted.
    """

    n: int
    edges: tuple

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def degrees(self) -> np.ndarray:
        """Degree vector; ``degrees[i-1]`` is the degree of node i."""
        d = np.zeros(self.n, dtype=np.int64)
        for i, j in self.edges:
            d[i - 1] += 1
            d[j - 1] += 1
        d.setflags(write=False)
        return d

    @cached_property
    def _adjacency_sets(self):
        nbrs = [set() for _ in range(self.n)]
        for i, j in self.edges:
            nbrs[i - 1].add(j)
            nbrs[j - 1].add(i)
        return tuple(frozenset(s) for s in nbrs)

    def neighbors(self, i: int) -> frozenset:
        """Neighbor set of node i (1-based)."""
        return self._adjacency_sets[i - 1]

    def has_edge(self, i: int, j: int) -> bool:
        return j in self._adjacency_sets[i - 1]

    @cached_property
    def edge_index(self) -> dict:
        """Map (min, max) endpoint pair -> 1-based canonical edge index."""
        return {e: k + 1 for k, e in enumerate(self.edges)}

    # ---- matrix views -------------------------------------------------

    def adjacency_matrix(self) -> np.ndarray:
        """Dense n x n 0/1 adjacency matrix (integer)."""
        a = np.zeros((self.n, self.n), dtype=np.int64)
        for i, j in self.edges:
            a[i - 1, j - 1] = 1
            a[j - 1, i - 1] = 1
        return a

    def degree_matrix(self) -> np.ndarray:
        return np.diag(self.degrees)

    def incidence_matrix(self) -> np.ndarray:
        """n x m incidence matrix B; B[i-1, e-1] = 1 iff node i lies on edge e.

        Satisfies B @ B.T == A + D exactly in integer arithmetic.
        """
        b = np.zeros((self.n, self.m), dtype=np.int64)
        for k, (i, j) in enumerate(self.edges):
            b[i - 1, k] = 1
            b[j - 1, k] = 1
        return b

    def transition_matrix(self) -> np.ndarray:
        """Random-walk transition matrix T = D^{-1} A; rows sum to 1."""
        return self.adjacency_matrix() / self.degrees[:, None]

    def normalized_adjacency(self) -> np.ndarray:
        """P = D^{-1/2} A D^{-1/2}; symmetric, entries A_ij / sqrt(d_i d_j)."""
        inv_sqrt = 1.0 / np.sqrt(self.degrees)
        return self.adjacency_matrix() * np.outer(inv_sqrt, inv_sqrt)

    def stationary_distribution(self) -> np.ndarray:
        """pi_i = d_i / 2m, the stationary law of the unbiased walk."""
        return self.degrees / (2.0 * self.m)


def build_graph(n: int, edges) -> Graph:
    """Validate and canonicalize an edge list into a :class:`Graph`.

    Parameters
    ----------
    n : int
        Node count; all endpoints must lie in 1..n.
    edges : iterable of (int, int)
        Unordered pairs; orientation and order are irrelevant.

    Raises
    ------
    EmptyGraphError, SelfLoopError, DuplicateEdgeError, DisconnectedError
    """
    if n < 1:
        raise EmptyGraphError(f"node count must be >= 1, got {n}")
    canon = []
    seen = set()
    for raw in edges:
        i, j = int(raw[0]), int(raw[1])
        if i == j:
            raise SelfLoopError(f"self-loop at node {i}")
        if not (1 <= i <= n and 1 <= j <= n):
            raise EmptyGraphError(f"edge ({i},{j}) has endpoint outside 1..{n}")
        e = (min(i, j), max(i, j))
        if e in seen:
            raise DuplicateEdgeError(f"duplicate edge {e}")
        seen.add(e)
        canon.append(e)
    canon.sort()
    g = Graph(n=n, edges=tuple(canon))
    _check_connected(g)
    return g


def _check_connected(g: Graph) -> None:
    reached = {1}
    frontier = deque([1])
    while frontier:
        u = frontier.popleft()
        for v in g.neighbors(u):
            if v not in reached:
                reached.add(v)
                frontier.append(v)
    if len(reached) < g.n:
        missing = min(set(range(1, g.n + 1)) - reached)
        raise DisconnectedError(
            f"graph is disconnected: node {missing} unreachable from node 1"
        )


def is_bipartite(g: Graph):
    """BFS 2-coloring test.

    Returns
    -------
    (flag, parts)
        ``flag`` is True iff a proper 2-coloring exists, in which case
        ``parts`` is a pair of frozensets (V1, V2) with node 1 in V1;
        otherwise ``parts`` is None.
    """
    color = {1: 0}
    frontier = deque([1])
    while frontier:
        u = frontier.popleft()
        for v in g.neighbors(u):
            if v not in color:
                color[v] = 1 - color[u]
                frontier.append(v)
            elif color[v] == color[u]:
                return False, None
    v1 = frozenset(u for u, c in color.items() if c == 0)
    v2 = frozenset(u for u, c in color.items() if c == 1)
    return True, (v1, v2)


# ---- edge-list text format -------------------------------------------
#
#   first line:  n m
#   then m lines: i j       (1-based, whitespace separated)
#   '#' starts a comment; blank lines ignored.


class EdgeListParseError(ValueError):
    def __init__(self, line_no: int, message: str):
        super().__init__(f"parse error line {line_no}: {message}")
        self.line_no = line_no


def parse_edge_list(text: str) -> Graph:
    """Parse the edge-list text format into a validated Graph."""
    header = None
    pairs = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if header is None:
            if len(fields) != 2:
                raise EdgeListParseError(line_no, "expected header 'n m'")
            try:
                header = (int(fields[0]), int(fields[1]))
            except ValueError:
                raise EdgeListParseError(line_no, "non-integer header") from None
            continue
        if len(fields) != 2:
            raise EdgeListParseError(line_no, "expected 'i j'")
        try:
            pairs.append((int(fields[0]), int(fields[1])))
        except ValueError:
            raise EdgeListParseError(line_no, "non-integer endpoint") from None
    if header is None:
        raise EdgeListParseError(1, "empty input")
    n, m = header
    if len(pairs) != m:
        raise EdgeListParseError(
            1, f"header declares {m} edges but {len(pairs)} were given"
        )
    return build_graph(n, pairs)


def format_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{i} {j}" for i, j in g.edges)
    return "\n".join(lines) + "\n"


# ---- builtin graphs ---------------------------------------------------


def complete_graph(n: int) -> Graph:
    return build_graph(n, [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise EmptyGraphError("cycle needs at least 3 nodes")
    return build_graph(n, [(i, i + 1) for i in range(1, n)] + [(1, n)])


def path_graph(n: int) -> Graph:
    if n < 2:
        raise EmptyGraphError("path needs at least 2 nodes")
    return build_graph(n, [(i, i + 1) for i in range(1, n)])


def star_graph(n: int) -> Graph:
    """Star with center node 1 and n leaves (n+1 nodes total)."""
    if n < 1:
        raise EmptyGraphError("star needs at least 1 leaf")
    return build_graph(n + 1, [(1, j) for j in range(2, n + 2)])


def builtin_graph(name: str) -> Graph:
    """Resolve 'k2', 'k3', 'cycle:N', 'path:N', 'star:N' to a Graph."""
    base, _, arg = name.partition(":")
    base = base.lower()
    if base == "k2":
        return complete_graph(2)
    if base == "k3":
        return complete_graph(3)
    if base in ("cycle", "path", "star"):
        if not arg:
            raise ValueError(f"builtin '{base}' needs a size, e.g. {base}:4")
        size = int(arg)
        return {"cycle": cycle_graph, "path": path_graph, "star": star_graph}[base](size)
    raise ValueError(f"unknown builtin graph '{name}'")
