"""Simple undirected graphs on vertices 0..n-1.

Dense immutable representation, elementary builders and edits, the two
regular families under study (Paley graphs and the ring of cliques),
seeded random graphs for property tests, and the edge-list text format.
"""

from __future__ import annotations

from typing import Iterable, Iterator, NamedTuple

import numpy as np

from .finitefield import FIELD_MODULUS_CAP, PrimeModulus, is_prime, residue_set

__all__ = [
    "Edge",
    "Graph",
    "check_paley_parameter",
    "complete",
    "cycle",
    "delete_edge",
    "disjoint_union",
    "empty",
    "format_edge_list",
    "from_edge_list",
    "paley",
    "paley_primes",
    "parse_edge_list",
    "permute",
    "random_graph",
    "read_edge_list",
    "ring_of_cliques",
    "splitmix64",
    "write_edge_list",
]

_MASK64 = 2**64 - 1


class Edge(NamedTuple):
    """An undirected edge, stored with u < v."""

    u: int
    v: int


def _as_edge(e: tuple[int, int]) -> Edge:
    u, v = e
    u, v = int(u), int(v)
    if u == v:
        raise ValueError(f"loop edge ({u}, {v}) is not allowed")
    if u > v:
        u, v = v, u
    return Edge(u, v)


class Graph:
    """Immutable simple graph with a dense symmetric boolean adjacency matrix.

    All edits (edge deletion, relabeling, unions) return new graphs; the
    stored matrix is flagged read-only, so instances are safe to share
    between threads or tasks.
    """

    __slots__ = ("_adj", "_m")

    def __init__(self, adjacency) -> None:
        adj = np.asarray(adjacency)
        if adj.ndim != 2 or adj.shape[0] != adj.shape[1]:
            raise ValueError(f"adjacency must be square, got shape {adj.shape}")
        adj = adj.astype(bool, copy=True)
        if adj.diagonal().any():
            raise ValueError("self-loops are not allowed (nonzero diagonal)")
        if not np.array_equal(adj, adj.T):
            raise ValueError("adjacency must be symmetric")
        adj.setflags(write=False)
        self._adj = adj
        self._m = int(np.count_nonzero(adj)) // 2

    @property
    def n(self) -> int:
        return self._adj.shape[0]

    @property
    def m(self) -> int:
        return self._m

    @property
    def adjacency(self) -> np.ndarray:
        """Read-only boolean adjacency matrix."""
        return self._adj

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._adj[u, v])

    def edges(self) -> list[Edge]:
        """All edges in ascending lexicographic order."""
        rows, cols = np.nonzero(np.triu(self._adj))
        return [Edge(int(u), int(v)) for u, v in zip(rows, cols)]

    def degree_sequence(self) -> list[int]:
        return [int(d) for d in self._adj.sum(axis=0)]

    def regularity(self) -> int | None:
        """The common degree k if the graph is regular, else None.

        The empty graph on n >= 1 vertices is 0-regular; regularity of the
        graph on 0 vertices is undefined (None).
        """
        if self.n == 0:
            return None
        degrees = self._adj.sum(axis=0)
        k = int(degrees[0])
        return k if bool((degrees == k).all()) else None

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and np.array_equal(self._adj, other._adj)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


# ---------------------------------------------------------------------------
# elementary builders and edits


def empty(n: int) -> Graph:
    """Graph with n vertices and no edges."""
    if n < 0:
        raise ValueError(f"vertex count must be nonnegative, got {n}")
    return Graph(np.zeros((n, n), dtype=bool))


def complete(n: int) -> Graph:
    """The complete graph K_n."""
    if n < 1:
        raise ValueError(f"complete graph needs n >= 1, got {n}")
    adj = np.ones((n, n), dtype=bool)
    np.fill_diagonal(adj, False)
    return Graph(adj)


def cycle(n: int) -> Graph:
    """The cycle C_n, n >= 3."""
    if n < 3:
        raise ValueError(f"cycle needs n >= 3, got {n}")
    adj = np.zeros((n, n), dtype=bool)
    idx = np.arange(n)
    adj[idx, (idx + 1) % n] = True
    adj[(idx + 1) % n, idx] = True
    return Graph(adj)


def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Graph with exactly the given edges.

    Rejects loops, duplicate edges (in either orientation), and endpoints
    outside 0..n-1, each with its own error message.
    """
    if n < 0:
        raise ValueError(f"vertex count must be nonnegative, got {n}")
    adj = np.zeros((n, n), dtype=bool)
    seen: set[Edge] = set()
    for e in edges:
        edge = _as_edge(e)
        if edge.u < 0 or edge.v >= n:
            raise ValueError(f"edge ({edge.u}, {edge.v}) has an endpoint outside 0..{n - 1}")
        if edge in seen:
            raise ValueError(f"duplicate edge ({edge.u}, {edge.v})")
        seen.add(edge)
        adj[edge.u, edge.v] = True
        adj[edge.v, edge.u] = True
    return Graph(adj)


def delete_edge(g: Graph, e: tuple[int, int]) -> Graph:
    """New graph with edge e removed; e must be present."""
    edge = _as_edge(e)
    if edge.v >= g.n or not g.has_edge(edge.u, edge.v):
        raise ValueError(f"edge ({edge.u}, {edge.v}) is not in the graph")
    adj = g.adjacency.copy()
    adj[edge.u, edge.v] = False
    adj[edge.v, edge.u] = False
    return Graph(adj)


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union; vertices of g2 are shifted up by g1.n."""
    n1, n2 = g1.n, g2.n
    adj = np.zeros((n1 + n2, n1 + n2), dtype=bool)
    adj[:n1, :n1] = g1.adjacency
    adj[n1:, n1:] = g2.adjacency
    return Graph(adj)


def permute(g: Graph, perm: Iterable[int]) -> Graph:
    """Relabel vertices: vertex u becomes perm[u]."""
    p = [int(x) for x in perm]
    if sorted(p) != list(range(g.n)):
        raise ValueError(f"perm must be a permutation of 0..{g.n - 1}")
    idx = np.asarray(p, dtype=np.intp)
    adj = np.zeros_like(g.adjacency)
    adj[np.ix_(idx, idx)] = g.adjacency
    return Graph(adj)


# ---------------------------------------------------------------------------
# the two families


def check_paley_parameter(p: PrimeModulus | int) -> int:
    """Validate a Paley parameter: prime, congruent to 1 mod 4, at least 5."""
    value = p.p if isinstance(p, PrimeModulus) else int(p)
    if value < 2 or value > 2**63 - 1 or not is_prime(value):
        raise ValueError(f"Paley parameter must be prime, got {value}")
    if value % 4 != 1:
        raise ValueError(
            f"Paley parameter must be congruent to 1 mod 4, got {value} "
            "(otherwise the adjacency relation is not symmetric)"
        )
    if value < 5:
        raise ValueError(f"Paley parameter must be at least 5, got {value}")
    if value >= FIELD_MODULUS_CAP:
        raise ValueError(f"Paley parameter must be below 2**31, got {value}")
    return value


def paley(p: PrimeModulus | int) -> Graph:
    """Paley graph on p vertices: u ~ v iff (u - v) mod p is a nonzero square.

    Requires a prime p == 1 (mod 4), p >= 5, which makes -1 a square and the
    relation symmetric; the graph is (p-1)/2-regular with p(p-1)/4 edges.
    """
    value = check_paley_parameter(p)
    is_square = np.zeros(value, dtype=bool)
    is_square[list(residue_set(value))] = True
    idx = np.arange(value)
    diff = (idx[:, None] - idx[None, :]) % value
    # Graph() re-validates symmetry, which is exactly the p == 1 (mod 4) fact.
    return Graph(is_square[diff])


def ring_of_cliques(q: int) -> Graph:
    """q copies of K_q joined in a ring on corresponding vertices.

    Copy i (0-based) occupies vertices i*q .. i*q + q - 1; vertex j of copy i
    is joined to vertex j of copy i+1 (indices mod q, so the last copy wraps
    to the first). The result is (q+1)-regular on q**2 vertices with
    q**2 (q+1) / 2 edges. Needs q >= 3: at q = 2 the two ring edges between
    the copies coincide.
    """
    if q <= 2:
        raise ValueError(f"ring of cliques needs q >= 3, got {q}")
    edges: list[tuple[int, int]] = []
    for i in range(q):
        base = i * q
        for a in range(q):
            for b in range(a + 1, q):
                edges.append((base + a, base + b))
    for i in range(q):
        nxt = ((i + 1) % q) * q
        for j in range(q):
            edges.append((i * q + j, nxt + j))
    return from_edge_list(q * q, edges)


def paley_primes(lo: int, hi: int) -> list[int]:
    """All valid Paley parameters in [lo, hi]: primes p == 1 (mod 4), p >= 5."""
    start = max(lo, 5)
    return [p for p in range(start, hi + 1) if p % 4 == 1 and is_prime(p)]


# ---------------------------------------------------------------------------
# seeded randomness


def splitmix64(seed: int) -> Iterator[int]:
    """The SplitMix64 stream for the given 64-bit seed.

    This is the package's one source of randomness; identical seeds produce
    identical streams on every platform and implementation.
    """
    if seed < 0 or seed > _MASK64:
        raise ValueError(f"seed must be an unsigned 64-bit integer, got {seed}")
    state = seed
    while True:
        state = (state + 0x9E3779B97F4A7C15) & _MASK64
        z = state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        yield z ^ (z >> 31)


def random_graph(n: int, m: int, seed: int) -> Graph:
    """Uniform random simple graph with exactly m edges, reproducible by seed.

    Sampling: list all n(n-1)/2 vertex pairs in lexicographic order, run a
    partial Fisher-Yates shuffle driven by splitmix64(seed) -- the swap
    partner for position i is i + (r_i mod (U - i)) where U is the pair
    count and r_i the i-th stream value -- and keep the first m pairs.
    """
    if n < 0:
        raise ValueError(f"vertex count must be nonnegative, got {n}")
    universe = n * (n - 1) // 2
    if m < 0 or m > universe:
        raise ValueError(f"edge count must be in 0..{universe} for n={n}, got {m}")
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    stream = splitmix64(seed)
    for i in range(m):
        j = i + next(stream) % (universe - i)
        pairs[i], pairs[j] = pairs[j], pairs[i]
    return from_edge_list(n, pairs[:m])


# ---------------------------------------------------------------------------
# edge-list text format


def format_edge_list(g: Graph) -> str:
    """Render the canonical edge-list text: `n m` header, then `u v` lines.

    Edges are written in ascending lexicographic order with u < v; the
    output is newline-terminated.
    """
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def _int_token(token: str, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise ValueError(f"{what} must be an integer, got {token!r}") from None


def parse_edge_list(text: str) -> Graph:
    """Parse the edge-list text format.

    Lines starting with `#` are comments; blank lines are ignored. The first
    data line is `n m`; exactly m edge lines `u v` with u < v must follow.
    """
    rows = []
    for raw in text.splitlines():
        line = raw.strip()
        if line and not line.startswith("#"):
            rows.append(line)
    if not rows:
        raise ValueError("edge list is empty: missing `n m` header line")
    head = rows[0].split()
    if len(head) != 2:
        raise ValueError(f"header must be `n m`, got {rows[0]!r}")
    n = _int_token(head[0], "vertex count")
    m = _int_token(head[1], "edge count")
    if n < 0 or m < 0:
        raise ValueError(f"header counts must be nonnegative, got {rows[0]!r}")
    if len(rows) - 1 != m:
        raise ValueError(f"header announces {m} edges but {len(rows) - 1} edge lines follow")
    edges = []
    for line in rows[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"edge line must be `u v`, got {line!r}")
        u = _int_token(parts[0], "edge endpoint")
        v = _int_token(parts[1], "edge endpoint")
        if u >= v:
            raise ValueError(f"edge lines must satisfy u < v, got {line!r}")
        edges.append((u, v))
    return from_edge_list(n, edges)


def write_edge_list(g: Graph, path) -> None:
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write(format_edge_list(g))


def read_edge_list(path) -> Graph:
    with open(path, "r", encoding="ascii") as fh:
        return parse_edge_list(fh.read())
