"""Undirected weighted graphs: types, instance parsers, and weighting schemes.

Vertex ids are 1-based in files and 0-based everywhere else.  Graphs are
immutable once built so they can be shared freely between search states
and benchmark workers.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field, replace
from typing import Iterable, Iterator, TextIO


class ParseError(ValueError):
    """Malformed instance or weight file; the message names the offending line."""


@dataclass(frozen=True)
class ParseStats:
    """Counters for input oddities a parser repaired instead of rejecting."""

    self_loops_dropped: int = 0
    duplicate_edges_dropped: int = 0
    header_mismatches: int = 0

    @property
    def warnings(self) -> int:
        return (self.self_loops_dropped + self.duplicate_edges_dropped
                + self.header_mismatches)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph with sorted per-vertex adjacency.

    Invariants: adjacency is symmetric, contains no self-loops and no
    duplicates, and m equals half the sum of the adjacency lengths.
    """

    n: int
    m: int
    adj: tuple[tuple[int, ...], ...]
    parse_stats: ParseStats = field(default=ParseStats(), compare=False)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], *,
                   declared_edge_count: int | None = None) -> Graph:
        """Build a graph from 0-based endpoint pairs.

        Self-loops are dropped and duplicate edges (either orientation)
        are merged; both repairs are tallied in parse_stats.
        """
        if n < 0:
            raise ValueError(f"vertex count must be non-negative, got {n}")
        neighbor_sets: list[set[int]] = [set() for _ in range(n)]
        loops = 0
        dupes = 0
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                loops += 1
            elif v in neighbor_sets[u]:
                dupes += 1
            else:
                neighbor_sets[u].add(v)
                neighbor_sets[v].add(u)
        adj = tuple(tuple(sorted(s)) for s in neighbor_sets)
        m = sum(len(a) for a in adj) // 2
        mismatches = 0
        if declared_edge_count is not None and declared_edge_count != m:
            mismatches = 1
        stats = ParseStats(loops, dupes, mismatches)
        return cls(n=n, m=m, adj=adj, parse_stats=stats)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def max_degree(self) -> int:
        return max((len(a) for a in self.adj), default=0)

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield each edge once as (u, v) with u < v, in sorted order."""
        for u, nbrs in enumerate(self.adj):
            for v in nbrs:
                if v > u:
                    yield u, v

    def check_invariants(self) -> None:
        """Raise ValueError if the structural invariants do not hold."""
        if len(self.adj) != self.n:
            raise ValueError("adjacency length differs from vertex count")
        total = 0
        for u, nbrs in enumerate(self.adj):
            total += len(nbrs)
            if list(nbrs) != sorted(set(nbrs)):
                raise ValueError(f"adjacency of {u} is unsorted or has duplicates")
            for v in nbrs:
                if v == u:
                    raise ValueError(f"self-loop at {u}")
                if not 0 <= v < self.n:
                    raise ValueError(f"neighbor {v} of {u} out of range")
                if u not in self.adj[v]:
                    raise ValueError(f"edge ({u}, {v}) is not symmetric")
        if total != 2 * self.m:
            raise ValueError("edge count does not match adjacency")


def two_level_neighbors(g: Graph, v: int) -> set[int]:
    """Vertices within distance 1 or 2 of v, excluding v itself.

    Computed on demand from adjacency-of-adjacency; the two-level
    neighborhood is never materialized for the whole graph.
    """
    out: set[int] = set()
    adj = g.adj
    for u in adj[v]:
        out.add(u)
        out.update(adj[u])
    out.discard(v)
    return out


def complement(g: Graph) -> Graph:
    """Complement graph on the same vertex set (quadratic; small graphs only)."""
    full = set(range(g.n))
    adj = []
    for v in range(g.n):
        missing = full.difference(g.adj[v])
        missing.discard(v)
        adj.append(tuple(sorted(missing)))
    m = sum(len(a) for a in adj) // 2
    return Graph(n=g.n, m=m, adj=tuple(adj))


# ---------------------------------------------------------------------------
# Parsing and serialization


def _numbered_lines(source: str | TextIO | Iterable[str]) -> Iterator[tuple[int, str]]:
    if isinstance(source, str):
        return enumerate(source.splitlines(), start=1)
    return enumerate((line.rstrip("\n") for line in source), start=1)


def parse_dimacs(source: str | TextIO) -> Graph:
    """Parse DIMACS ascii format: `c` comments, `p edge N M`, `e u v` lines.

    The problem line fixes the vertex count; the edge lines win over the
    declared edge count (a mismatch only bumps the warning counter).
    Self-loops and duplicate edges are repaired, everything else is a
    ParseError naming the line.
    """
    n: int | None = None
    declared_m: int | None = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in _numbered_lines(source):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        fields = line.split()
        tag = fields[0]
        if tag == "p":
            if n is not None:
                raise ParseError(f"line {lineno}: duplicate problem line")
            if len(fields) < 4:
                raise ParseError(f"line {lineno}: problem line needs `p edge N M`")
            try:
                n = int(fields[-2])
                declared_m = int(fields[-1])
            except ValueError:
                raise ParseError(f"line {lineno}: non-integer counts in problem line") from None
            if n < 1:
                raise ParseError(f"line {lineno}: vertex count must be positive")
        elif tag == "e":
            if n is None:
                raise ParseError(f"line {lineno}: edge line before problem line")
            if len(fields) != 3:
                raise ParseError(f"line {lineno}: edge line needs `e u v`")
            try:
                u = int(fields[1])
                v = int(fields[2])
            except ValueError:
                raise ParseError(f"line {lineno}: non-integer vertex id") from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise ParseError(f"line {lineno}: vertex id out of range 1..{n}")
            edges.append((u - 1, v - 1))
        else:
            raise ParseError(f"line {lineno}: unrecognized line type {tag!r}")
    if n is None:
        raise ParseError("missing problem line")
    return Graph.from_edges(n, edges, declared_edge_count=declared_m)


def parse_edge_list(source: str | TextIO, n_hint: int = 0) -> Graph:
    """Parse a plain edge list: one `u v` pair per line, 1-based ids.

    Lines starting with `%` or `#` are comments.  A leading MTX-style
    size line (three integers) is tolerated; its first field serves as a
    vertex-count hint.  The vertex count is the largest of the maximum
    id seen, the size line, and n_hint.
    """
    edges: list[tuple[int, int]] = []
    max_id = 0
    header_hint = 0
    seen_data = False
    for lineno, raw in _numbered_lines(source):
        line = raw.strip()
        if not line or line[0] in "%#":
            continue
        fields = line.split()
        if not seen_data and len(fields) == 3:
            try:
                header_hint = int(fields[0])
                int(fields[1])
                int(fields[2])
            except ValueError:
                raise ParseError(f"line {lineno}: malformed size header") from None
            seen_data = True
            continue
        seen_data = True
        if len(fields) != 2:
            raise ParseError(f"line {lineno}: expected two vertex ids")
        try:
            u = int(fields[0])
            v = int(fields[1])
        except ValueError:
            raise ParseError(f"line {lineno}: non-integer vertex id") from None
        if u < 1 or v < 1:
            raise ParseError(f"line {lineno}: vertex ids must be >= 1")
        max_id = max(max_id, u, v)
        edges.append((u - 1, v - 1))
    if not edges:
        raise ParseError("empty input: no edges found")
    n = max(max_id, header_hint, n_hint)
    return Graph.from_edges(n, edges)


def load_graph(path: str, n_hint: int = 0) -> Graph:
    """Read an instance file, sniffing DIMACS vs edge-list by content."""
    with open(path, "r", encoding="ascii", errors="replace") as fh:
        text = fh.read()
    for line in text.splitlines():
        stripped = line.strip()
        if not stripped or stripped[0] in "%#":
            continue
        if stripped.startswith("c ") or stripped == "c" or stripped.startswith("p "):
            return parse_dimacs(text)
        break
    return parse_edge_list(text, n_hint=n_hint)


def to_dimacs(g: Graph) -> str:
    lines = [f"p edge {g.n} {g.m}"]
    lines.extend(f"e {u + 1} {v + 1}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def to_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.n} {g.m}"]
    lines.extend(f"{u + 1} {v + 1}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Vertex weighting


MOD200 = "mod200"
UNIT = "unit"
UNIFORM_RANGE = "uniform-range"
DEGREE_SQUARED = "degree-squared"
FROM_FILE = "from-file"


@dataclass(frozen=True)
class WeightScheme:
    """How vertex weights are assigned; random variants are fully seeded."""

    kind: str
    lo: int = 20
    hi: int = 70
    seed: int = 0
    path: str | None = None

    @classmethod
    def mod200(cls) -> WeightScheme:
        return cls(kind=MOD200)

    @classmethod
    def unit(cls) -> WeightScheme:
        return cls(kind=UNIT)

    @classmethod
    def uniform_range(cls, lo: int = 20, hi: int = 70, seed: int = 0) -> WeightScheme:
        return cls(kind=UNIFORM_RANGE, lo=lo, hi=hi, seed=seed)

    @classmethod
    def degree_squared(cls, seed: int = 0) -> WeightScheme:
        return cls(kind=DEGREE_SQUARED, seed=seed)

    @classmethod
    def from_file(cls, path: str) -> WeightScheme:
        return cls(kind=FROM_FILE, path=path)


@dataclass(frozen=True)
class WeightedGraph:
    """Graph plus positive integer vertex weights, indexed by vertex id."""

    graph: Graph
    weights: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.weights) != self.graph.n:
            raise ValueError("need exactly one weight per vertex")
        for v, w in enumerate(self.weights):
            if w < 1:
                raise ValueError(f"weight of vertex {v} must be positive, got {w}")

    @property
    def n(self) -> int:
        return self.graph.n


def parse_weight_spec(spec: str) -> WeightScheme:
    """Parse a CLI weight spec: mod200 | unit | file:PATH | t1:SEED | t2:SEED."""
    if spec == MOD200:
        return WeightScheme.mod200()
    if spec == UNIT:
        return WeightScheme.unit()
    if spec.startswith("file:"):
        path = spec[len("file:"):]
        if not path:
            raise ValueError("file: weight spec needs a path")
        return WeightScheme.from_file(path)
    for prefix, maker in (("t1:", WeightScheme.uniform_range),
                          ("t2:", WeightScheme.degree_squared)):
        if spec.startswith(prefix):
            try:
                seed = int(spec[len(prefix):])
            except ValueError:
                raise ValueError(f"{prefix} weight spec needs an integer seed") from None
            if prefix == "t1:":
                return WeightScheme.uniform_range(seed=seed)
            return maker(seed=seed)
    raise ValueError(f"unknown weight spec {spec!r}")


def parse_weights(source: str | TextIO, n: int) -> tuple[int, ...]:
    """Parse a weight file of `<1-based id> <weight>` lines covering every vertex."""
    weights: list[int | None] = [None] * n
    count = 0
    for lineno, raw in _numbered_lines(source):
        line = raw.strip()
        if not line or line[0] in "%#":
            continue
        fields = line.split()
        if len(fields) != 2:
            raise ParseError(f"line {lineno}: expected `<id> <weight>`")
        try:
            vid = int(fields[0])
            w = int(fields[1])
        except ValueError:
            raise ParseError(f"line {lineno}: non-integer field") from None
        if not 1 <= vid <= n:
            raise ParseError(f"line {lineno}: vertex id out of range 1..{n}")
        if w < 1:
            raise ParseError(f"line {lineno}: weight must be positive, got {w}")
        if weights[vid - 1] is not None:
            raise ParseError(f"line {lineno}: duplicate weight for vertex {vid}")
        weights[vid - 1] = w
        count += 1
    if count != n:
        raise ParseError(f"weight file covers {count} of {n} vertices")
    return tuple(weights)  # type: ignore[arg-type]


def format_weights(weights: Iterable[int]) -> str:
    return "".join(f"{i + 1} {w}\n" for i, w in enumerate(weights))


def apply_weighting(g: Graph, scheme: WeightScheme) -> WeightedGraph:
    """Assign weights per the scheme; identical inputs give identical weights."""
    if scheme.kind == MOD200:
        weights = tuple(((v + 1) % 200) + 1 for v in range(g.n))
    elif scheme.kind == UNIT:
        weights = tuple(1 for _ in range(g.n))
    elif scheme.kind == UNIFORM_RANGE:
        if not 1 <= scheme.lo <= scheme.hi:
            raise ValueError(f"bad weight range [{scheme.lo}, {scheme.hi}]")
        rng = random.Random(scheme.seed)
        weights = tuple(rng.randint(scheme.lo, scheme.hi) for _ in range(g.n))
    elif scheme.kind == DEGREE_SQUARED:
        rng = random.Random(scheme.seed)
        weights = tuple(rng.randint(1, max(1, g.degree(v) ** 2)) for v in range(g.n))
    elif scheme.kind == FROM_FILE:
        if scheme.path is None:
            raise ValueError("from-file weighting needs a path")
        with open(scheme.path, "r", encoding="ascii") as fh:
            weights = parse_weights(fh, g.n)
    else:
        raise ValueError(f"unknown weighting kind {scheme.kind!r}")
    return WeightedGraph(graph=g, weights=weights)


__all__ = [
    "ParseError", "ParseStats", "Graph", "WeightedGraph", "WeightScheme",
    "two_level_neighbors", "complement", "parse_dimacs", "parse_edge_list",
    "load_graph", "to_dimacs", "to_edge_list", "parse_weight_spec",
    "parse_weights", "format_weights", "apply_weighting",
    "MOD200", "UNIT", "UNIFORM_RANGE", "DEGREE_SQUARED", "FROM_FILE",
]
