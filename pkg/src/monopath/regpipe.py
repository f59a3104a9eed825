"""Desk-scale pipeline: long monochromatic paths in colored random graphs.

A colored G(n, p) is cut into s seeded parts. Scaled densities between
parts define a small colored auxiliary graph H, a long monochromatic path
is extracted from H, and paths inside consecutive part pairs are glued
into one path of G. Regularity of the pairs is not certified; pair-path
coverage is measured and reported instead.
"""

from __future__ import annotations

import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field

import numpy as np

from .extractor import HypothesisViolated, ReductionFailed, extract_density
from .graph import (Color, ColoredGraph, MonoPath, color_extremal_style, color_greedy,
                    color_uniform, gnp)
from .oracle import longest_mono_path_heuristic, longest_path_heuristic

RED_THRESHOLD = 0.25
STRATEGIES = ("extremal", "random", "greedy")


class StitchFailed(RuntimeError):
    def __init__(self, junction: int):
        super().__init__(f"no connecting edge at junction {junction}")
        self.junction = junction


@dataclass(frozen=True)
class Equipartition:
    parts: tuple[np.ndarray, ...]

    def __post_init__(self):
        sizes = [len(p) for p in self.parts]
        if sizes and max(sizes) - min(sizes) > 1:
            raise ValueError("part sizes differ by more than one")

    @property
    def s(self) -> int:
        return len(self.parts)

    def labels(self, n: int) -> np.ndarray:
        lab = np.full(n, -1, dtype=np.int64)
        for i, part in enumerate(self.parts):
            lab[part] = i
        return lab

    def halves(self, i: int) -> tuple[np.ndarray, np.ndarray]:
        # alternate positions so neither half is biased by vertex id
        part = self.parts[i]
        return part[0::2], part[1::2]


def equipartition(n: int, s: int, seed: int) -> Equipartition:
    """Uniformly random balanced partition; parts sorted, ordered by minimum."""
    if not 1 <= s <= n:
        raise ValueError("need 1 <= s <= n")
    rng = np.random.Generator(np.random.PCG64(seed))
    perm = rng.permutation(n)
    parts = [np.sort(chunk) for chunk in np.array_split(perm, s)]
    parts.sort(key=lambda a: int(a[0]))
    return Equipartition(tuple(parts))


def density(graph: ColoredGraph, U, V, p: float) -> dict[str, float]:
    """Scaled densities e(U, V) / (p |U| |V|) per color and in total."""
    if p <= 0:
        raise ValueError("p must be positive")
    U = np.asarray(list(U), dtype=np.int64)
    V = np.asarray(list(V), dtype=np.int64)
    if len(U) == 0 or len(V) == 0:
        raise ValueError("vertex sets must be nonempty")
    side = np.zeros(graph.n, dtype=np.int8)
    side[U] = 1
    if (side[V] != 0).any():
        raise ValueError("vertex sets must be disjoint")
    side[V] = 2
    u, v, c = graph.edge_arrays
    cross = side[u] * side[v] == 2
    scale = p * len(U) * len(V)
    red = np.count_nonzero(cross & (c == Color.RED)) / scale
    blue = np.count_nonzero(cross & (c == Color.BLUE)) / scale
    return {"red": red, "blue": blue, "total": np.count_nonzero(cross) / scale}


@dataclass(frozen=True)
class DensityMatrix:
    p: float
    red: np.ndarray
    blue: np.ndarray
    total: np.ndarray


def density_matrix(graph: ColoredGraph, partition: Equipartition, p: float) -> DensityMatrix:
    if p <= 0:
        raise ValueError("p must be positive")
    s = partition.s
    lab = partition.labels(graph.n)
    sizes = np.array([len(part) for part in partition.parts], dtype=float)
    u, v, c = graph.edge_arrays
    a, b = lab[u], lab[v]
    cross = a != b
    tables = {}
    for name, sel in (("red", c == Color.RED), ("blue", c == Color.BLUE)):
        counts = np.zeros((s, s))
        keep = cross & sel
        np.add.at(counts, (a[keep], b[keep]), 1)
        counts = counts + counts.T
        tables[name] = counts / (p * np.outer(sizes, sizes))
        np.fill_diagonal(tables[name], 0.0)
    return DensityMatrix(p, tables["red"], tables["blue"], tables["red"] + tables["blue"])


@dataclass(frozen=True)
class PipelineConfig:
    n: int
    p: float
    s: int
    usable_threshold: float = 0.5
    alpha: float = 0.15
    epsilon: float | None = None
    seed: int = 0
    # regularity parameters are recorded only
    eta: float | None = None
    D: float | None = None
    T: int | None = None

    def __post_init__(self):
        if self.s < 3 and self.s != self.n:
            raise ValueError("need s >= 3")
        if not 0 < self.usable_threshold <= 1:
            raise ValueError("usable_threshold must lie in (0, 1]")
        if not 0 <= self.p <= 1:
            raise ValueError("p must lie in [0, 1]")

    @property
    def red_threshold(self) -> float:
        return RED_THRESHOLD

    @property
    def segment_epsilon(self) -> float:
        return self.epsilon if self.epsilon is not None else 1.0 / self.s


def auxiliary_graph(graph: ColoredGraph, partition: Equipartition,
                    config: PipelineConfig) -> ColoredGraph:
    if config.p == 0:
        return ColoredGraph(partition.s)
    dm = density_matrix(graph, partition, config.p)
    i, j = np.triu_indices(partition.s, 1)
    usable = dm.total[i, j] >= config.usable_threshold
    colors = np.where(dm.red[i, j] >= RED_THRESHOLD, Color.RED, Color.BLUE).astype(np.int8)
    return ColoredGraph.from_arrays(partition.s, i[usable], j[usable], colors[usable],
                                    validate=False)


@dataclass
class PairPath:
    vertices: list[int]
    coverage: float


def pair_mono_path(graph: ColoredGraph, U_half, W_half, color: int, seed: int = 0) -> PairPath:
    """Path in the color-c bipartite graph between two disjoint halves."""
    U = np.asarray(list(U_half), dtype=np.int64)
    W = np.asarray(list(W_half), dtype=np.int64)
    local = np.concatenate([U, W])
    if len(local) == 0:
        return PairPath([], 0.0)
    index = np.full(graph.n, -1, dtype=np.int64)
    index[local] = np.arange(len(local))
    side = np.zeros(graph.n, dtype=np.int8)
    side[U] = 1
    if (side[W] != 0).any():
        raise ValueError("halves must be disjoint")
    side[W] = 2
    u, v, c = graph.edge_arrays
    keep = (c == color) & (side[u] * side[v] == 2)
    adj = [0] * len(local)
    for a, b in zip(index[u[keep]].tolist(), index[v[keep]].tolist()):
        adj[a] |= 1 << b
        adj[b] |= 1 << a
    seq = longest_path_heuristic(len(local), adj, seed)
    if not seq:
        seq = [0]
    return PairPath([int(local[x]) for x in seq], len(seq) / len(local))


@dataclass
class StitchResult:
    path: MonoPath
    failures: list[StitchFailed]
    coverage: list[float]


def _find_connector(graph: ColoredGraph, color: int, left: list[int], right: list[int],
                    width: int):
    """Latest tail vertex of ``left`` and earliest head vertex of ``right`` joined in ``color``."""
    for i in range(len(left) - 1, max(len(left) - width, 0) - 1, -1):
        for j in range(min(width, len(right))):
            if graph.color(left[i], right[j]) == color:
                return i, j
    return None


def stitch(graph: ColoredGraph, h_path: MonoPath, partition: Equipartition,
           config: PipelineConfig) -> StitchResult:
    """Glue color-c pair paths along ``h_path`` into one color-c path of G."""
    color = h_path.color
    parts = h_path.vertices
    if not parts:
        raise ValueError("empty auxiliary path")
    empty = np.empty(0, dtype=np.int64)
    if len(parts) == 1:
        pairs = [partition.halves(parts[0])]
    else:
        pairs = [(partition.halves(parts[j])[0], partition.halves(parts[j + 1])[1])
                 for j in range(len(parts) - 1)]
        # the two unpaired end halves join as one-vertex runs
        first_w = partition.halves(parts[0])[1]
        last_u = partition.halves(parts[-1])[0]
        if len(first_w):
            pairs.insert(0, (empty, first_w))
        if len(last_u):
            pairs.append((last_u, empty))
    pair_paths = [pair_mono_path(graph, U, W, color, config.seed + j)
                  for j, (U, W) in enumerate(pairs)]
    width = max(math.ceil(2 * config.segment_epsilon * len(partition.parts[0])), 2)
    failures: list[StitchFailed] = []
    runs: list[list[int]] = []
    current = list(pair_paths[0].vertices)
    for j in range(1, len(pair_paths)):
        nxt = pair_paths[j].vertices
        hit = _find_connector(graph, color, current, nxt, width) if nxt else None
        if hit is None:
            failures.append(StitchFailed(j))
            runs.append(current)
            current = list(nxt)
        else:
            current = current[: hit[0] + 1] + nxt[hit[1]:]
    runs.append(current)
    best = max(runs, key=len)
    return StitchResult(MonoPath(Color(color), best).validate(graph), failures,
                        [pp.coverage for pp in pair_paths])


def admissible_target(order: int, epsilon: float) -> int:
    """Largest k = l meeting the density extractor's order requirement."""
    best = 0
    for k in range(1, order + 1):
        if order >= k + (k + 1) // 2 + 150.0 * math.sqrt(epsilon) * k - 1e-9:
            best = k
    return best


def color_graph(graph: ColoredGraph, strategy: str, seed: int) -> ColoredGraph:
    if strategy == "extremal":
        return color_extremal_style(graph)
    if strategy == "random":
        return color_uniform(graph, seed)
    if strategy == "greedy":
        return color_greedy(graph, seed)
    raise ValueError(f"unknown strategy {strategy!r}")


@dataclass
class PipelineReport:
    seed: int
    n: int
    p: float
    s: int
    strategy: str
    H_len: int
    stitched_len: int
    ratio: float
    failures: int
    H_edges: int = 0
    H_color: str = ""
    h_method: str = ""
    target: int = 0
    coverage: list[float] = field(default_factory=list)
    junctions_failed: list[int] = field(default_factory=list)
    errors: list[str] = field(default_factory=list)
    params: dict = field(default_factory=dict)
    path: list[int] = field(default_factory=list)
    seconds: float = 0.0

    CSV_COLUMNS = ("seed", "n", "p", "s", "strategy", "H_len", "stitched_len", "ratio",
                   "failures")

    def csv_row(self) -> list:
        return [getattr(self, c) for c in self.CSV_COLUMNS]

    def as_dict(self) -> dict:
        return asdict(self)


def _h_path(H: ColoredGraph, report: PipelineReport) -> MonoPath | None:
    if H.m == 0:
        report.errors.append("auxiliary graph has no edges")
        return None
    pairs = H.n * (H.n - 1) // 2
    eps_h = 1.0 - H.m / pairs
    report.params["epsilon_H"] = eps_h
    k = admissible_target(H.n, eps_h) if eps_h <= 0.25 else 0
    report.target = k
    if k >= 1:
        try:
            out = extract_density(H, k, k, eps_h)
            report.h_method = "extract_density"
            return out
        except (HypothesisViolated, ReductionFailed) as exc:
            report.errors.append(f"{type(exc).__name__}: {exc}")
    else:
        report.errors.append("no admissible target for the density extractor")
    report.h_method = "heuristic"
    return longest_mono_path_heuristic(H, seed=report.seed)


def run_experiment(config: PipelineConfig, strategy: str = "extremal",
                   graph: ColoredGraph | None = None) -> PipelineReport:
    """One seeded pipeline run; errors land in the report instead of raising."""
    t0 = time.perf_counter()
    report = PipelineReport(config.seed, config.n, config.p, config.s, strategy,
                            0, 0, 0.0, 0, params=asdict(config))
    try:
        if graph is None:
            graph = color_graph(gnp(config.n, config.p, config.seed), strategy, config.seed)
        partition = equipartition(graph.n, config.s, config.seed)
        H = auxiliary_graph(graph, partition, config)
        report.H_edges = H.m
        h_path = _h_path(H, report)
        if h_path is not None:
            report.H_len = h_path.length
            report.H_color = h_path.color.name.lower()
            result = stitch(graph, h_path, partition, config)
            report.stitched_len = result.path.length
            report.failures = len(result.failures)
            report.junctions_failed = [f.junction for f in result.failures]
            report.coverage = result.coverage
            report.path = list(result.path.vertices)
    except Exception as exc:  # recorded, the batch continues
        report.errors.append(f"{type(exc).__name__}: {exc}")
    report.ratio = report.stitched_len / config.n if config.n else 0.0
    report.seconds = time.perf_counter() - t0
    return report


def _run_one(args) -> PipelineReport:
    config, strategy = args
    return run_experiment(config, strategy)


def run_batch(configs: list[PipelineConfig], strategy: str, workers: int = 1) -> list[PipelineReport]:
    """Run several seeds; reports come back in input order."""
    jobs = [(c, strategy) for c in configs]
    if workers <= 1 or len(jobs) <= 1:
        return [_run_one(j) for j in jobs]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_run_one, jobs))
