"""Colored-graph data model, edge-list I/O and instance generators."""

from __future__ import annotations

import io
from dataclasses import dataclass
from enum import IntEnum
from typing import Iterable, Iterator, Sequence, TextIO

import numpy as np
from numba import njit

GENERATOR = "numpy.random.PCG64"

UNCOLORED = 0


class Color(IntEnum):
    RED = 1
    BLUE = 2

    @property
    def other(self) -> "Color":
        return Color.BLUE if self is Color.RED else Color.RED

    @property
    def code(self) -> str:
        return "r" if self is Color.RED else "b"


_CODE_TO_COLOR = {"r": int(Color.RED), "b": int(Color.BLUE), "u": UNCOLORED}
_COLOR_TO_CODE = {int(Color.RED): "r", int(Color.BLUE): "b", UNCOLORED: "u"}


class GraphFormatError(ValueError):
    """Malformed edge-list input; carries the 1-based line number."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


class InvalidPath(ValueError):
    pass


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class ColoredGraph:
    """Simple undirected graph whose edges optionally carry a color.

    Edges are kept as three parallel numpy arrays ``(u, v, c)`` with
    ``u < v``, sorted lexicographically. Bitmask and CSR adjacency views
    are built lazily and cached; instances are treated as immutable.
    """

    __slots__ = ("n", "_u", "_v", "_c", "_masks", "_csr", "_index")

    def __init__(self, n: int, edges: Iterable[tuple[int, int, int]] = ()):
        rows = list(edges)
        if rows:
            arr = np.asarray([(a, b, int(c)) for a, b, c in rows], dtype=np.int64)
            u, v, c = arr[:, 0], arr[:, 1], arr[:, 2]
        else:
            u = v = c = np.zeros(0, dtype=np.int64)
        self._init_arrays(n, u, v, c, validate=True)

    def _init_arrays(self, n, u, v, c, validate: bool) -> None:
        n = int(n)
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        u = np.asarray(u, dtype=np.int64)
        v = np.asarray(v, dtype=np.int64)
        c = np.asarray(c, dtype=np.int8)
        if validate and len(u):
            lo, hi = np.minimum(u, v), np.maximum(u, v)
            if (lo == hi).any():
                raise ValueError("self-loop")
            if lo.min() < 0 or hi.max() >= n:
                raise ValueError("vertex out of range")
            if not np.isin(c, (UNCOLORED, Color.RED, Color.BLUE)).all():
                raise ValueError("unknown color code")
            key = lo * n + hi
            order = np.argsort(key, kind="stable")
            key = key[order]
            if (key[1:] == key[:-1]).any():
                raise ValueError("duplicate edge")
            u, v, c = lo[order], hi[order], c[order]
        self.n = n
        self._u, self._v, self._c = u, v, c
        self._masks = None
        self._csr = {}
        self._index = None

    @classmethod
    def from_arrays(cls, n: int, u, v, c=None, validate: bool = True) -> "ColoredGraph":
        g = cls.__new__(cls)
        if c is None:
            c = np.zeros(len(u), dtype=np.int8)
        g._init_arrays(n, u, v, c, validate)
        return g

    @classmethod
    def from_masks(cls, n: int, red: Sequence[int], blue: Sequence[int],
                   plain: Sequence[int] | None = None) -> "ColoredGraph":
        """Build from per-vertex neighbour bitmasks (one list per color)."""
        us, vs, cs = [], [], []
        for a in range(n):
            for color, masks in ((Color.RED, red), (Color.BLUE, blue), (UNCOLORED, plain)):
                if masks is None:
                    continue
                for b in _bits(masks[a] >> (a + 1)):
                    us.append(a)
                    vs.append(a + 1 + b)
                    cs.append(int(color))
        g = cls.from_arrays(n, us, vs, cs, validate=True)
        if plain is None:
            full_red, full_blue = list(red), list(blue)
            g._masks = (
                [r | b for r, b in zip(full_red, full_blue)],
                full_red,
                full_blue,
            )
        return g

    # basic queries

    @property
    def m(self) -> int:
        return len(self._u)

    @property
    def edge_arrays(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        return self._u, self._v, self._c

    def edges(self) -> Iterator[tuple[int, int, int]]:
        for a, b, c in zip(self._u.tolist(), self._v.tolist(), self._c.tolist()):
            yield a, b, c

    def is_fully_colored(self) -> bool:
        return bool((self._c != UNCOLORED).all())

    def color(self, a: int, b: int) -> int | None:
        """Color code of edge ``ab`` (0 for uncolored) or None if absent."""
        if self._index is None:
            self._index = {
                (x, y): c for x, y, c in self.edges()
            }
        return self._index.get((min(a, b), max(a, b)))

    def has_edge(self, a: int, b: int) -> bool:
        return self.color(a, b) is not None

    def degrees(self) -> np.ndarray:
        return np.bincount(np.concatenate([self._u, self._v]), minlength=self.n)

    def masks(self) -> tuple[list[int], list[int], list[int]]:
        """Per-vertex neighbour bitmasks ``(any, red, blue)`` as Python ints."""
        if self._masks is None:
            adj = [0] * self.n
            red = [0] * self.n
            blue = [0] * self.n
            for a, b, c in self.edges():
                adj[a] |= 1 << b
                adj[b] |= 1 << a
                if c == Color.RED:
                    red[a] |= 1 << b
                    red[b] |= 1 << a
                elif c == Color.BLUE:
                    blue[a] |= 1 << b
                    blue[b] |= 1 << a
            self._masks = (adj, red, blue)
        return self._masks

    def csr(self, color: int | None = None) -> tuple[np.ndarray, np.ndarray]:
        """CSR adjacency (indptr, indices) with ascending neighbour lists.

        ``color=None`` selects every edge regardless of color.
        """
        key = -1 if color is None else int(color)
        if key not in self._csr:
            if color is None:
                u, v = self._u, self._v
            else:
                sel = self._c == color
                u, v = self._u[sel], self._v[sel]
            self._csr[key] = _build_csr(self.n, np.ascontiguousarray(u),
                                        np.ascontiguousarray(v))
        return self._csr[key]

    def color_subgraph(self, color: int) -> "ColoredGraph":
        sel = self._c == color
        return ColoredGraph.from_arrays(self.n, self._u[sel], self._v[sel],
                                        self._c[sel], validate=False)

    def with_colors(self, colors) -> "ColoredGraph":
        """Same edge set, new per-edge color codes (edge order as ``edges()``)."""
        colors = np.asarray(colors, dtype=np.int8)
        if colors.shape != self._c.shape:
            raise ValueError("one color per edge required")
        return ColoredGraph.from_arrays(self.n, self._u, self._v, colors, validate=False)

    def induced(self, vertices: Sequence[int]) -> "ColoredGraph":
        """Induced subgraph relabelled to ``0..len(vertices)-1`` in the given order."""
        relabel = np.full(self.n, -1, dtype=np.int64)
        vertices = np.asarray(vertices, dtype=np.int64)
        relabel[vertices] = np.arange(len(vertices))
        a, b = relabel[self._u], relabel[self._v]
        keep = (a >= 0) & (b >= 0)
        return ColoredGraph.from_arrays(len(vertices), a[keep], b[keep],
                                        self._c[keep], validate=True)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ColoredGraph):
            return NotImplemented
        return (self.n == other.n and np.array_equal(self._u, other._u)
                and np.array_equal(self._v, other._v)
                and np.array_equal(self._c, other._c))

    def __repr__(self) -> str:
        return f"ColoredGraph(n={self.n}, m={self.m})"

    # text format

    def serialize(self) -> str:
        out = io.StringIO()
        write_edge_list(self, out)
        return out.getvalue()


@njit(cache=True)
def _build_csr(n, u, v):
    # edges arrive sorted by (u, v); lower neighbours are placed first,
    # so every row comes out ascending without a sort
    indptr = np.zeros(n + 1, dtype=np.int64)
    for i in range(len(u)):
        indptr[u[i] + 1] += 1
        indptr[v[i] + 1] += 1
    for x in range(n):
        indptr[x + 1] += indptr[x]
    fill = indptr[:-1].copy()
    indices = np.empty(2 * len(u), dtype=np.int64)
    for i in range(len(u)):
        indices[fill[v[i]]] = u[i]
        fill[v[i]] += 1
    for i in range(len(u)):
        indices[fill[u[i]]] = v[i]
        fill[u[i]] += 1
    return indptr, indices


@dataclass(frozen=True)
class MonoPath:
    """Vertex sequence whose consecutive pairs are edges of one color.

    ``length`` counts edges: -1 for the empty path, 0 for a single vertex.
    """

    color: Color
    vertices: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "color", Color(self.color))
        object.__setattr__(self, "vertices", tuple(int(x) for x in self.vertices))

    @property
    def length(self) -> int:
        return len(self.vertices) - 1

    @property
    def order(self) -> int:
        return len(self.vertices)

    def validate(self, graph: ColoredGraph) -> "MonoPath":
        if len(set(self.vertices)) != len(self.vertices):
            raise InvalidPath("repeated vertex")
        for x in self.vertices:
            if not 0 <= x < graph.n:
                raise InvalidPath(f"vertex {x} out of range")
        _, red, blue = graph.masks()
        masks = red if self.color is Color.RED else blue
        for a, b in zip(self.vertices, self.vertices[1:]):
            if not masks[a] >> b & 1:
                raise InvalidPath(f"edge {a}-{b} is not {self.color.name.lower()}")
        return self

    def as_dict(self) -> dict:
        return {
            "color": self.color.name.lower(),
            "length": self.length,
            "vertex_count": self.order,
            "vertices": list(self.vertices),
        }


def parse_edge_list(stream: TextIO) -> ColoredGraph:
    """Parse the ``n m`` / ``u v c`` edge-list format."""
    lines = iter(enumerate(stream, start=1))
    header = None
    for lineno, raw in lines:
        if raw.strip():
            header = (lineno, raw.split())
            break
    if header is None:
        raise GraphFormatError(1, "missing 'n m' header")
    lineno, parts = header
    if len(parts) != 2:
        raise GraphFormatError(lineno, "header must be 'n m'")
    try:
        n, m = int(parts[0]), int(parts[1])
    except ValueError:
        raise GraphFormatError(lineno, "header must be two integers") from None
    if n < 0 or m < 0:
        raise GraphFormatError(lineno, "negative count in header")
    us, vs, cs = [], [], []
    seen = set()
    for lineno, raw in lines:
        parts = raw.split()
        if not parts:
            continue
        if len(us) == m:
            raise GraphFormatError(lineno, f"more than {m} edges")
        if len(parts) != 3:
            raise GraphFormatError(lineno, "edge line must be 'u v c'")
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(lineno, "vertex ids must be integers") from None
        code = parts[2]
        if code not in _CODE_TO_COLOR:
            raise GraphFormatError(lineno, f"unknown color {code!r}")
        if a == b:
            raise GraphFormatError(lineno, "self-loop")
        if not (0 <= a < n and 0 <= b < n):
            raise GraphFormatError(lineno, "vertex out of range")
        if a > b:
            raise GraphFormatError(lineno, "edge must be written with u < v")
        if (a, b) in seen:
            raise GraphFormatError(lineno, "duplicate edge")
        seen.add((a, b))
        us.append(a)
        vs.append(b)
        cs.append(_CODE_TO_COLOR[code])
    if len(us) != m:
        raise GraphFormatError(lineno if us else header[0], f"expected {m} edges, got {len(us)}")
    # validation re-sorts lexicographically; errors were already reported per line
    return ColoredGraph.from_arrays(n, us, vs, cs, validate=True)


def from_edge_list(text: str) -> ColoredGraph:
    return parse_edge_list(io.StringIO(text))


def write_edge_list(graph: ColoredGraph, out: TextIO) -> None:
    out.write(f"{graph.n} {graph.m}\n")
    codes = np.array(["u", "r", "b"])[graph._c.astype(np.int64)]
    for a, b, c in zip(graph._u.tolist(), graph._v.tolist(), codes.tolist()):
        out.write(f"{a} {b} {c}\n")


# generators


def complete_graph(n: int, color: int = UNCOLORED) -> ColoredGraph:
    u, v = np.triu_indices(n, 1)
    return ColoredGraph.from_arrays(n, u, v, np.full(len(u), color, dtype=np.int8),
                                    validate=False)


def gnp(n: int, p: float, seed: int) -> ColoredGraph:
    """Uncolored G(n, p): every pair independently with probability ``p``."""
    if not 0.0 <= p <= 1.0:
        raise ValueError("p must lie in [0, 1]")
    rng = np.random.Generator(np.random.PCG64(seed))
    us, vs = [], []
    for a in range(n - 1):
        hits = np.flatnonzero(rng.random(n - a - 1) < p)
        if len(hits):
            us.append(np.full(len(hits), a, dtype=np.int64))
            vs.append(hits + a + 1)
    if not us:
        return ColoredGraph(n)
    u, v = np.concatenate(us), np.concatenate(vs)
    return ColoredGraph.from_arrays(n, u, v, validate=False)


def gnm(n: int, m: int, seed: int) -> ColoredGraph:
    """Uncolored graph with exactly ``m`` distinct uniformly random edges."""
    if m > n * (n - 1) // 2:
        raise ValueError("too many edges")
    rng = np.random.Generator(np.random.PCG64(seed))
    keys = np.zeros(0, dtype=np.int64)
    while len(keys) < m:
        want = int((m - len(keys)) * 1.1) + 16
        a = rng.integers(0, n, size=want)
        b = rng.integers(0, n, size=want)
        ok = a != b
        lo, hi = np.minimum(a[ok], b[ok]), np.maximum(a[ok], b[ok])
        keys = np.unique(np.concatenate([keys, lo * n + hi]))
    if len(keys) > m:
        keys = np.sort(rng.choice(keys, size=m, replace=False))
    return ColoredGraph.from_arrays(n, keys // n, keys % n, validate=False)


def extremal_coloring(n: int) -> ColoredGraph:
    """K_n with B = {floor(n/3), ...} spanning a red clique; every edge meeting A blue."""
    if n < 1:
        raise ValueError("n must be positive")
    a_size = n // 3
    u, v = np.triu_indices(n, 1)
    colors = np.where(u >= a_size, Color.RED, Color.BLUE).astype(np.int8)
    return ColoredGraph.from_arrays(n, u, v, colors, validate=False)


def color_uniform(graph: ColoredGraph, seed: int, p_red: float = 0.5) -> ColoredGraph:
    rng = np.random.Generator(np.random.PCG64(seed))
    red = rng.random(graph.m) < p_red
    return graph.with_colors(np.where(red, Color.RED, Color.BLUE))


def color_split(graph: ColoredGraph, side_a) -> ColoredGraph:
    """Extremal-style coloring: red inside the complement of ``side_a``, blue elsewhere."""
    in_a = np.zeros(graph.n, dtype=bool)
    in_a[np.asarray(list(side_a), dtype=np.int64)] = True
    u, v, _ = graph.edge_arrays
    touches_a = in_a[u] | in_a[v]
    return graph.with_colors(np.where(touches_a, Color.BLUE, Color.RED))


def color_extremal_style(graph: ColoredGraph) -> ColoredGraph:
    return color_split(graph, range(graph.n // 3))


def color_greedy(graph: ColoredGraph, seed: int) -> ColoredGraph:
    """Adversarial split coloring built by a degree-greedy pass.

    Vertices are visited in a seeded random order; each joins the blue
    side A while |A| < n/3, preferring vertices of high degree, so that
    the red clique side and the blue star side are as balanced as the
    extremal construction allows on a non-complete host.
    """
    rng = np.random.Generator(np.random.PCG64(seed))
    deg = graph.degrees().astype(float)
    noise = rng.random(graph.n)
    order = np.lexsort((noise, -deg))
    side_a = order[: graph.n // 3]
    return color_split(graph, side_a)


def min_degree(graph: ColoredGraph) -> int:
    if graph.n == 0:
        return 0
    return int(graph.degrees().min())
