"""Exact longest monochromatic paths, exhaustive arrowing, and a rotation heuristic."""

from __future__ import annotations

import itertools
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np
from numba import njit

from .graph import Color, ColoredGraph, MonoPath, UNCOLORED

EXACT_LIMIT = 24
ARROW_EDGE_LIMIT = 28


class TooLarge(ValueError):
    pass


@dataclass(frozen=True)
class ArrowResult:
    holds: bool
    witness: ColoredGraph | None = None
    nodes: int = 0


# exact engine


@njit(cache=True)
def _hamiltonian_endpoints(n, adj):
    """endpoints[mask] = bitmask of vertices ending a path that covers exactly mask."""
    dp = np.zeros(1 << n, dtype=np.uint32)
    for v in range(n):
        dp[1 << v] = 1 << v
    for mask in range(1, 1 << n):
        ends = dp[mask]
        if ends == 0:
            continue
        for v in range(n):
            if (ends >> v) & 1:
                ext = adj[v] & ~mask
                w = 0
                while ext:
                    if ext & 1:
                        dp[mask | (1 << w)] |= np.uint32(1 << w)
                    ext >>= 1
                    w += 1
    return dp


def _popcounts(size: int) -> np.ndarray:
    pc = np.zeros(size, dtype=np.int8)
    for bit in range(max(size.bit_length() - 1, 0)):
        pc += ((np.arange(size) >> bit) & 1).astype(np.int8)
    return pc


def _lex_smallest(dp: np.ndarray, adj: list[int], masks: np.ndarray, order: int) -> list[int]:
    # any endpoint of a covering path can start it (paths reverse)
    ends = dp[masks].astype(np.int64)
    low = ends & -ends
    first = int(np.log2(low.min()))
    keep = (ends >> first) & 1 == 1
    rest = masks[keep] ^ (1 << first)
    seq = [first]
    for _ in range(order - 1):
        reach = dp[rest].astype(np.int64) & adj[seq[-1]]
        ok = reach != 0
        rest, reach = rest[ok], reach[ok]
        nxt = int(np.log2((reach & -reach).min()))
        keep = (reach >> nxt) & 1 == 1
        rest = rest[keep] ^ (1 << nxt)
        seq.append(nxt)
    return seq


def _longest_in_color(n: int, adj: list[int]) -> list[int]:
    if n == 0:
        return []
    dp = _hamiltonian_endpoints(n, np.asarray(adj, dtype=np.int64))
    alive = np.flatnonzero(dp)
    pc = _popcounts(1 << n)[alive]
    best = int(pc.max())
    return _lex_smallest(dp, adj, alive[pc == best], best)


def longest_mono_path_exact(graph: ColoredGraph) -> MonoPath:
    """A longest path inside one color class, preferring red, then the
    lexicographically smallest vertex sequence."""
    if graph.n > EXACT_LIMIT:
        raise TooLarge(f"exact search limited to n <= {EXACT_LIMIT}")
    _, red, blue = graph.masks()
    best = None
    for color, adj in ((Color.RED, red), (Color.BLUE, blue)):
        seq = _longest_in_color(graph.n, adj)
        if best is None or len(seq) > len(best.vertices):
            best = MonoPath(color, seq)
    return best


def longest_mono_path_naive(graph: ColoredGraph) -> MonoPath:
    """All-paths enumeration; same tie-breaking as the exact engine."""
    _, red, blue = graph.masks()
    best = MonoPath(Color.RED, [])
    for color, adj in ((Color.RED, red), (Color.BLUE, blue)):
        top: list[int] = []

        def walk(path, used):
            nonlocal top
            if len(path) > len(top) or (len(path) == len(top) and path < top):
                top = list(path)
            ext = adj[path[-1]] & ~used
            for w in range(graph.n):
                if ext >> w & 1:
                    path.append(w)
                    walk(path, used | 1 << w)
                    path.pop()

        for v in range(graph.n):
            walk([v], 1 << v)
        if len(top) > len(best.vertices):
            best = MonoPath(color, top)
    return best


def longest_in_color_length(n: int, adj: list[int]) -> int:
    """Vertex count of a longest path in the graph given by ``adj`` masks."""
    if n == 0:
        return 0
    dp = _hamiltonian_endpoints(n, np.asarray(adj, dtype=np.int64))
    alive = np.flatnonzero(dp)
    return int(_popcounts(1 << n)[alive].max())


# arrowing


def _has_path(adj: list[int], n: int, order: int, through: tuple[int, int]) -> bool:
    """Is there a path on ``order`` vertices using edge ``through``?"""
    x, y = through
    if order <= 2:
        return True

    # grow from y away from x, then from x away from the used set
    def grow(end, used, count, other_end):
        if count >= order:
            return True
        ext = adj[end] & ~used
        while ext:
            low = ext & -ext
            w = low.bit_length() - 1
            ext ^= low
            if grow(w, used | low, count + 1, other_end):
                return True
        if other_end is not None:
            return grow(other_end, used, count, None)
        return False

    return grow(y, (1 << x) | (1 << y), 2, x)


def _degeneracy_order(n: int, edges: list[tuple[int, int]]) -> list[tuple[int, int]]:
    # repeatedly strip a minimum-degree vertex; later vertices are placed
    # first so dense cores get colored early and prune sooner
    adj = [set() for _ in range(n)]
    for a, b in edges:
        adj[a].add(b)
        adj[b].add(a)
    alive = set(range(n))
    peel = []
    while alive:
        v = min(alive, key=lambda x: (len(adj[x] & alive), x))
        peel.append(v)
        alive.remove(v)
    rank = {v: i for i, v in enumerate(reversed(peel))}
    return sorted(edges, key=lambda e: (max(rank[e[0]], rank[e[1]]),
                                        min(rank[e[0]], rank[e[1]])))


class _Search:
    def __init__(self, n, edges, a, b):
        self.n, self.edges, self.a, self.b = n, edges, a, b
        self.nodes = 0

    def run(self, red, blue, depth):
        """Return a full avoiding coloring (list of colors) or None."""
        self.nodes += 1
        if depth == len(self.edges):
            return []
        x, y = self.edges[depth]
        for color in (Color.RED, Color.BLUE):
            masks, target = (red, self.a) if color is Color.RED else (blue, self.b)
            masks[x] |= 1 << y
            masks[y] |= 1 << x
            if not _has_path(masks, self.n, target, (x, y)):
                tail = self.run(red, blue, depth + 1)
                if tail is not None:
                    masks[x] ^= 1 << y
                    masks[y] ^= 1 << x
                    return [color] + tail
            masks[x] ^= 1 << y
            masks[y] ^= 1 << x
        return None


def _avoids(n, masks, target) -> bool:
    return longest_in_color_length(n, masks) < target


def _run_branch(args):
    n, edges, a, b, prefix = args
    search = _Search(n, edges, a, b)
    red, blue = [0] * n, [0] * n
    for (x, y), color in zip(edges, prefix):
        masks = red if color is Color.RED else blue
        masks[x] |= 1 << y
        masks[y] |= 1 << x
    if not _avoids(n, red, a) or not _avoids(n, blue, b):
        return None, search.nodes
    tail = search.run(red, blue, len(prefix))
    return (None if tail is None else list(prefix) + tail), search.nodes


def arrows(graph: ColoredGraph, a: int, b: int, workers: int = 1,
           split_depth: int = 3) -> ArrowResult:
    """Does every red/blue coloring of E(graph) contain a red path on ``a``
    vertices or a blue path on ``b`` vertices?"""
    if graph.m > ARROW_EDGE_LIMIT:
        raise TooLarge(f"exhaustive arrowing limited to {ARROW_EDGE_LIMIT} edges")
    n = graph.n
    if a <= 1 or b <= 1:
        # a single vertex is a path on one vertex of either color
        return ArrowResult(n >= 1, None if n >= 1 else graph)
    edges = _degeneracy_order(n, [(x, y) for x, y, _ in graph.edges()])
    depth = min(split_depth, len(edges))
    prefixes = [p for p in itertools.product((Color.RED, Color.BLUE), repeat=depth)]
    if a == b and edges:
        # color swap symmetry: the first edge may be taken red
        prefixes = [p for p in prefixes if p[0] is Color.RED]
    jobs = [(n, edges, a, b, p) for p in prefixes]
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            results = list(pool.map(_run_branch, jobs))
    else:
        results = []
        for job in jobs:
            results.append(_run_branch(job))
            if results[-1][0] is not None:
                break
    nodes = sum(r[1] for r in results)
    for found, _ in results:
        if found is not None:
            lookup = {e: c for e, c in zip(edges, found)}
            colors = [int(lookup[(x, y)]) for x, y, _ in graph.edges()]
            witness = graph.with_colors(colors)
            return ArrowResult(False, witness, nodes)
    return ArrowResult(True, None, nodes)


def verify_witness(witness: ColoredGraph, a: int, b: int) -> bool:
    _, red, blue = witness.masks()
    return (witness.is_fully_colored()
            and longest_in_color_length(witness.n, red) < a
            and longest_in_color_length(witness.n, blue) < b)


# heuristic


def _grow(adj: list[int], path: list[int], on_path: int) -> int:
    # Warnsdorff rule: step to the outside neighbour with fewest outside neighbours
    for _ in range(2):
        ext = adj[path[-1]] & ~on_path
        while ext:
            w = min(_bit_list(ext), key=lambda x: ((adj[x] & ~on_path).bit_count(), x))
            path.append(w)
            on_path |= 1 << w
            ext = adj[w] & ~on_path
        path.reverse()
    return on_path


def _rotation_search(adj: list[int], path: list[int], on_path: int,
                     rng: random.Random, budget: list[int]) -> list[int] | None:
    """Breadth-first rotations of the far end; returns a rotated path whose
    end has a neighbour off the path, or None."""
    seen = {path[-1]}
    frontier = [path]
    while frontier and budget[0] > 0:
        nxt = []
        for p in frontier:
            idx = {v: i for i, v in enumerate(p)}
            nbrs = [w for w in _bit_list(adj[p[-1]] & on_path) if idx[w] < len(p) - 2]
            rng.shuffle(nbrs)
            for w in nbrs:
                budget[0] -= 1
                i = idx[w]
                q = p[: i + 1] + p[:i:-1]
                if q[-1] in seen:
                    continue
                seen.add(q[-1])
                if adj[q[-1]] & ~on_path:
                    return q
                nxt.append(q)
                if budget[0] <= 0:
                    return None
        frontier = nxt[:64]
    return None


def _rotate_extend(adj: list[int], start: int, rng: random.Random,
                   max_rotations: int) -> list[int]:
    path = [start]
    on_path = _grow(adj, path, 1 << start)
    budget = [max_rotations]
    while budget[0] > 0:
        found = None
        for _ in range(2):
            found = _rotation_search(adj, path, on_path, rng, budget)
            if found is not None:
                break
            path.reverse()
        if found is None:
            break
        path = found
        on_path = _grow(adj, path, on_path)
    return path


def _bit_list(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def longest_path_heuristic(n: int, adj: list[int], seed: int = 0, starts: int = 4,
                           max_rotations: int | None = None) -> list[int]:
    """Greedy growth with endpoint rotations; a lower bound on the optimum."""
    if n == 0:
        return []
    rng = random.Random(seed)
    if max_rotations is None:
        max_rotations = 20 * n
    verts = [v for v in range(n) if adj[v]]
    if not verts:
        return [0]
    # low-degree vertices make good path ends
    order = sorted(verts, key=lambda v: (adj[v].bit_count(), v))
    picks = order[:2] + rng.sample(verts, min(len(verts), max(starts - 2, 0)))
    best: list[int] = []
    for s in dict.fromkeys(picks):
        path = _rotate_extend(adj, s, rng, max_rotations)
        if len(path) > len(best):
            best = path
        if len(best) == n:
            break
    return best


def longest_mono_path_heuristic(graph: ColoredGraph, seed: int = 0) -> MonoPath:
    _, red, blue = graph.masks()
    best = None
    for color, adj in ((Color.RED, red), (Color.BLUE, blue)):
        seq = longest_path_heuristic(graph.n, adj, seed)
        if best is None or len(seq) > len(best.vertices):
            best = MonoPath(color, seq)
    return best
