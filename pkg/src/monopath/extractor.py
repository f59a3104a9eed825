"""Constructive extraction of long monochromatic paths.

``extract_min_degree`` turns the inductive argument for graphs of high
minimum degree into a loop over rounds. Round j holds a path of length
j - 1 in the round's "red" role color and produces either a red-role path
of length j or a blue-role path of the round's blue target. Rounds with
equal targets may swap the roles, so the held path can change color.

Inside a round the moves are tried in a fixed order: greedy extension,
single-vertex insertion, the split-based warm-up, then the three cases
(long blue path inside the leftover set, unbalanced targets, and the
remaining dense-red configuration). A final tight-resolution step covers
the boundary regime where the counting slack of the cases is zero.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .graph import Color, ColoredGraph, MonoPath
from .splitter import bipartite_cut, split, split_masks

TIGHT_NODE_LIMIT = 200_000


class HypothesisViolated(ValueError):
    pass


class CaseExhausted(RuntimeError):
    """No move applies although the hypotheses hold: an implementation gap."""


class ReductionFailed(ValueError):
    pass


class Found(Exception):
    """Short-circuit carrying a finished path (success, not an error)."""

    def __init__(self, role: int, path: list[int], how: str):
        super().__init__(how)
        self.role = role
        self.path = path
        self.how = how


RED_ROLE, BLUE_ROLE = 0, 1


@dataclass(frozen=True)
class ExtractorParams:
    k: int
    l: int
    epsilon: float = 0.0

    def __post_init__(self):
        if self.k < self.l or self.l < 1:
            raise HypothesisViolated("need k >= l >= 1")
        if not 0.0 <= self.epsilon < 0.25:
            raise HypothesisViolated("epsilon must lie in [0, 1/4)")

    @property
    def delta(self) -> float:
        return 4.0 * self.epsilon

    def required_order(self) -> float:
        return self.k + (self.l + 1) // 2 + 60.0 * self.epsilon * self.k

    def violations(self, graph: ColoredGraph) -> list[str]:
        n = graph.n
        out = []
        if n < self.required_order() - 1e-9:
            out.append(f"n = {n} < k + floor((l+1)/2) + 60*eps*k = {self.required_order():.3f}")
        if n:
            # at most eps*n non-neighbours per vertex
            worst = n - 1 - int(graph.degrees().min())
            if worst > self.epsilon * n + 1e-9:
                out.append(f"a vertex has {worst} non-neighbours > eps*n = {self.epsilon * n:.3f}")
        return out

    def as_dict(self) -> dict:
        return {"k": self.k, "l": self.l, "epsilon": self.epsilon, "delta": self.delta,
                "required_order_statement": self.required_order(),
                "required_order_proof_text": self.k + (self.l + 1) // 2 + 100.0 * self.epsilon * self.k}


@dataclass(frozen=True)
class SparseCutWitness:
    X: tuple[int, ...]
    Y: tuple[int, ...]

    def check(self, graph: ColoredGraph) -> bool:
        xs, ys = set(self.X), set(self.Y)
        if xs & ys:
            return False
        return not any((a in xs and b in ys) or (a in ys and b in xs)
                       for a, b, _ in graph.edges())


@dataclass
class RoleView:
    """A fully colored graph seen with the round's color roles."""

    n: int
    red: list[int]
    blue: list[int]
    red_color: Color
    full: int = field(init=False)

    def __post_init__(self):
        self.full = (1 << self.n) - 1

    def color_of(self, role: int) -> Color:
        return self.red_color if role == RED_ROLE else self.red_color.other


def _low(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _mask(vertices) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def _edges_len(path) -> int:
    return len(path) - 1


# primitive moves


def _extend(adj: list[int], path: list[int], on: int) -> int:
    for _ in range(2):
        ext = adj[path[-1]] & ~on
        while ext:
            w = _low(ext)
            path.append(w)
            on |= 1 << w
            ext = adj[w] & ~on
        path.reverse()
    return on


def _insert_single(view: RoleView, path: list[int], on: int) -> list[int] | None:
    out = view.full & ~on
    red = view.red
    for i in range(len(path) - 1):
        common = red[path[i]] & red[path[i + 1]] & out
        if common:
            return path[: i + 1] + [_low(common)] + path[i + 1:]
    return None


def _zigzag(adj: list[int], X: int, Y: int) -> list[int]:
    """Greedy path alternating between disjoint sets X and Y along ``adj``."""
    if X.bit_count() < Y.bit_count():
        X, Y = Y, X
    best: list[int] = []
    for start in _bits(X):
        if not adj[start] & Y:
            continue
        path = [start]
        used = 1 << start
        for _ in range(2):
            while True:
                end = path[-1]
                cand = adj[end] & (Y if (X >> end) & 1 else X) & ~used
                if not cand:
                    break
                w = _low(cand)
                path.append(w)
                used |= 1 << w
            path.reverse()
        if len(path) > len(best):
            best = path
        if len(best) >= 2 * Y.bit_count() + (X.bit_count() > Y.bit_count()):
            break
    return best


# warm-up


def warmup_large_k(view: RoleView, k: int, l: int, epsilon: float, path: list[int]):
    """Split the red-role graph; return its spine if long enough, else a
    blue zig-zag between the two halves, else None (continue to the cases).

    Only runs when k >= n(1/2 - eps), where every vertex misses at most
    delta*k others.
    """
    if k < view.n * (0.5 - epsilon):
        return None
    U, W, spine = split_masks(view.red, view.full)
    if _edges_len(spine) >= k:
        return RED_ROLE, spine
    zz = _zigzag(view.blue, U, W)
    if _edges_len(zz) >= l:
        return BLUE_ROLE, zz
    return None


# case 1 and 2 machinery


def alternating_blue_path(view: RoleView, spine_mask: int, U: int, forbidden: int,
                          seed: list[int] | None = None) -> list[int]:
    """Maximal blue path alternating spine/off-spine vertices, both ends off-spine."""
    blue = view.blue
    avail_u = U & ~forbidden
    avail_p = spine_mask & ~forbidden
    if seed is None:
        if not avail_u:
            return []
        path = [_low(avail_u)]
    else:
        path = list(seed)
    taken = _mask(path)
    avail_u &= ~taken
    avail_p &= ~taken
    grew = True
    while grew:
        grew = False
        for _ in range(2):
            while True:
                step = None
                for p in _bits(blue[path[-1]] & avail_p):
                    us = blue[p] & avail_u
                    if us:
                        step = (p, _low(us))
                        break
                if step is None:
                    break
                p, u = step
                path += [p, u]
                avail_p ^= 1 << p
                avail_u ^= 1 << u
                grew = True
            path.reverse()
    return path


def _join(view: RoleView, Q1: list[int], Q2: list[int], free_p: int) -> list[int] | None:
    blue = view.blue
    for a in (Q1[-1], Q1[0]):
        for b in (Q2[0], Q2[-1]):
            common = blue[a] & blue[b] & free_p
            if common:
                left = Q1 if a == Q1[-1] else Q1[::-1]
                right = Q2 if b == Q2[0] else Q2[::-1]
                return left + [_low(common)] + right
    return None


def close_blue_cycles(view: RoleView, Q1: list[int], Q2: list[int], spine: list[int],
                      budget: int):
    """Close Q1 and Q2 into blue cycles through consecutive spine vertices.

    Returns ``(C1, C2)`` as cyclic vertex lists or None when no connector
    pair exists. Raises Found if one path already meets the blue target.
    """
    if not Q2:
        raise Found(BLUE_ROLE, Q1, "case1-long-Q1")
    blue = view.blue
    used = _mask(Q1) | _mask(Q2)
    e1 = blue[Q1[0]] & blue[Q1[-1]]
    e2 = blue[Q2[0]] & blue[Q2[-1]]
    for i in range(len(spine) - 1):
        a, b = spine[i], spine[i + 1]
        if (used >> a) & 1 or (used >> b) & 1:
            continue
        if (e1 >> a) & 1 and (e2 >> b) & 1:
            return Q1 + [a], Q2 + [b]
        if (e2 >> a) & 1 and (e1 >> b) & 1:
            return Q1 + [b], Q2 + [a]
    return None


def _open_ending(cycle: list[int], v: int) -> list[int]:
    i = cycle.index(v)
    return cycle[i + 1:] + cycle[: i + 1]


def _open_starting(cycle: list[int], v: int) -> list[int]:
    i = cycle.index(v)
    return cycle[i:] + cycle[:i]


def bridge_cycles_red(view: RoleView, C1: list[int], C2: list[int], spine: list[int],
                      U: int, l: int):
    """Join the cycles into a blue path, or splice a red pair into the spine."""
    blue, red = view.blue, view.red
    m1, m2 = _mask(C1), _mask(C2)
    U1, U2 = m1 & U, m2 & U
    if len(C1) + len(C2) - 1 >= l:
        for c in C1:
            hit = blue[c] & m2
            if hit:
                return BLUE_ROLE, _open_ending(C1, c) + _open_starting(C2, _low(hit))
    used = m1 | m2
    for j in range(len(spine) - 1):
        a, b = spine[j], spine[j + 1]
        if (used >> a) & 1 or (used >> b) & 1:
            continue
        if len(C1) + len(C2) >= l:
            for v in (a, b):
                h1, h2 = blue[v] & U1, blue[v] & U2
                if h1 and h2:
                    return BLUE_ROLE, (_open_ending(C1, _low(h1)) + [v]
                                       + _open_starting(C2, _low(h2)))
        for Ua, Ub in ((U1, U2), (U2, U1)):
            for w1 in _bits(red[a] & Ua):
                w2 = red[w1] & red[b] & Ub
                if w2:
                    return RED_ROLE, spine[: j + 1] + [w1, _low(w2)] + spine[j + 1:]
    return None


def _two_cycle_case(view: RoleView, spine: list[int], U: int, k: int, l: int,
                    delta: float, seed: list[int] | None, label: str, trace: list):
    spine_mask = _mask(spine)
    budget = l + math.ceil(3 * delta * k)
    Q1 = alternating_blue_path(view, spine_mask, U, 0, seed)
    while True:
        Q2 = alternating_blue_path(view, spine_mask, U, _mask(Q1))
        if not Q2:
            break
        free_p = spine_mask & ~_mask(Q1) & ~_mask(Q2)
        joined = _join(view, Q1, Q2, free_p)
        if joined is None:
            break
        Q1 = alternating_blue_path(view, spine_mask, U, 0, joined)
    for Q in (Q1, Q2):
        if Q and _edges_len(Q) >= l:
            return BLUE_ROLE, Q
    total = _edges_len(Q1) + max(_edges_len(Q2), 0)
    if total < budget:
        trace.append({"step": label, "outcome": "short", "q1": _edges_len(Q1),
                      "q2": max(_edges_len(Q2), 0), "budget": budget})
        return None
    while len(Q2) >= 3 and _edges_len(Q1) + _edges_len(Q2) - 2 >= budget:
        Q2 = Q2[:-2]
    try:
        cycles = close_blue_cycles(view, Q1, Q2, spine, budget)
    except Found as hit:
        return hit.role, hit.path
    if cycles is None:
        trace.append({"step": label, "outcome": "no-connector"})
        return None
    res = bridge_cycles_red(view, cycles[0], cycles[1], spine, U, l)
    if res is None:
        trace.append({"step": label, "outcome": "no-bridge"})
    return res


# case 3


def case3_extract(view: RoleView, spine: list[int], U: int, W1: int, W2: int,
                  k: int, l: int, delta: float):
    """Red zig-zag across a blue-free pair inside U, then splice or go blue."""
    red, blue = view.red, view.blue
    Q = _zigzag(red, W1, W2)
    if not Q:
        return None
    qmask = _mask(Q)
    pos = {v: i for i, v in enumerate(Q)}
    width = min(len(spine), math.ceil((0.25 + delta / 2) * k))
    ends = list(range(width)) + list(range(len(spine) - width, len(spine)))
    X = _mask(spine[i] for i in ends)
    for i in dict.fromkeys(ends):
        x = spine[i]
        for q in _bits(red[x] & qmask):
            t = pos[q]
            tail = Q[t:] if len(Q) - t >= t + 1 else Q[: t + 1][::-1]
            head = spine[i:][::-1] if len(spine) - i >= i + 1 else spine[: i + 1]
            cand = head + tail
            if _edges_len(cand) >= k:
                return RED_ROLE, cand
    zz = _zigzag(blue, X, qmask)
    if _edges_len(zz) >= l:
        return BLUE_ROLE, zz
    return None


# tight resolution


def _red_components(red: list[int], U: int) -> list[int]:
    comps = []
    left = U
    while left:
        seed = left & -left
        comp = seed
        frontier = seed
        while frontier:
            nxt = 0
            for v in _bits(frontier):
                nxt |= red[v]
            nxt &= U & ~comp
            comp |= nxt
            frontier = nxt
        comps.append(comp)
        left &= ~comp
    return comps


def _red_route(red: list[int], comp: int, x: int, y: int) -> list[int]:
    prev = {x: None}
    frontier = [x]
    while frontier and y not in prev:
        nxt = []
        for v in frontier:
            for w in _bits(red[v] & comp):
                if w not in prev:
                    prev[w] = v
                    nxt.append(w)
        frontier = nxt
    route = [y]
    while prev[route[-1]] is not None:
        route.append(prev[route[-1]])
    return route[::-1]


def _component_insertion(view: RoleView, spine: list[int], U: int) -> list[int] | None:
    red = view.red
    for comp in _red_components(red, U):
        if comp.bit_count() < 2:
            continue
        for i in range(len(spine) - 1):
            A = red[spine[i]] & comp
            B = red[spine[i + 1]] & comp
            if not A or not B:
                continue
            for x in _bits(A):
                rest = B & ~(1 << x)
                if rest:
                    route = _red_route(red, comp, x, _low(rest))
                    return spine[: i + 1] + route + spine[i + 1:]
    return None


class _Matcher:
    """Connector slots matched to distinct spine vertices (augmenting paths)."""

    def __init__(self):
        self.allowed: list[int] = []
        self.match: list[int] = []
        self.owner: dict[int, int] = {}

    def _augment(self, s: int, seen: list[int]) -> bool:
        for p in _bits(self.allowed[s] & ~seen[0]):
            seen[0] |= 1 << p
            o = self.owner.get(p)
            if o is None or self._augment(o, seen):
                self.owner[p] = s
                self.match[s] = p
                return True
        return False

    def push(self, allowed: int) -> bool:
        self.allowed.append(allowed)
        self.match.append(-1)
        if self._augment(len(self.allowed) - 1, [0]):
            return True
        self.allowed.pop()
        self.match.pop()
        return False

    def snapshot(self):
        return list(self.allowed), list(self.match), dict(self.owner)

    def restore(self, snap):
        self.allowed, self.match, self.owner = list(snap[0]), list(snap[1]), dict(snap[2])


def blue_template_search(view: RoleView, spine: list[int], U: int, target: int,
                         node_limit: int = TIGHT_NODE_LIMIT) -> list[int] | None:
    """Search blue paths made of off-spine vertices linked directly or
    through distinct spine connectors, with optional spine ends."""
    blue = view.blue
    spine_mask = _mask(spine)
    nbr = {u: blue[u] & spine_mask for u in _bits(U)}
    members = list(nbr)
    if not members:
        return None
    matcher = _Matcher()
    seq: list[int] = []
    gaps: list[int] = []
    nodes = [0]

    def build() -> list[int] | None:
        # try to hang spine vertices on both ends
        snap = matcher.snapshot()
        ends = []
        for end in (seq[0], seq[-1]):
            if matcher.push(nbr[end]):
                ends.append(len(matcher.allowed) - 1)
            else:
                ends.append(None)
        length = sum(gaps) + sum(e is not None for e in ends)
        if length < target:
            matcher.restore(snap)
            return None
        slot_of_gap = []
        s = 0
        for g in gaps:
            slot_of_gap.append(s if g == 2 else None)
            s += g == 2
        path = []
        if ends[0] is not None:
            path.append(matcher.match[ends[0]])
        for i, u in enumerate(seq):
            path.append(u)
            if i < len(gaps) and slot_of_gap[i] is not None:
                path.append(matcher.match[slot_of_gap[i]])
        if ends[1] is not None:
            path.append(matcher.match[ends[1]])
        matcher.restore(snap)
        return path

    def dfs(remaining: int) -> list[int] | None:
        nodes[0] += 1
        if nodes[0] > node_limit:
            return None
        got = build()
        if got is not None:
            return got
        if sum(gaps) + 2 * remaining.bit_count() + 2 < target:
            return None
        last = seq[-1]
        order = sorted(_bits(remaining), key=lambda u: (-(nbr[u] & nbr[last]).bit_count(), u))
        for u in order:
            snap = matcher.snapshot()
            if matcher.push(nbr[u] & nbr[last]):
                seq.append(u)
                gaps.append(2)
                got = dfs(remaining & ~(1 << u))
                if got is not None:
                    return got
                seq.pop()
                gaps.pop()
            matcher.restore(snap)
            if nodes[0] > node_limit:
                return None
        for u in order:
            if (blue[last] >> u) & 1:
                seq.append(u)
                gaps.append(1)
                got = dfs(remaining & ~(1 << u))
                if got is not None:
                    return got
                seq.pop()
                gaps.pop()
            if nodes[0] > node_limit:
                return None
        return None

    for first in members:
        seq[:] = [first]
        gaps[:] = []
        matcher = _Matcher()
        got = dfs(U & ~(1 << first))
        if got is not None:
            return got
        if nodes[0] > node_limit:
            break
    return None


def _tight_resolution(view: RoleView, spine: list[int], U: int, k: int, l: int, trace: list):
    red_path = _component_insertion(view, spine, U)
    if red_path is not None:
        trace.append({"step": "tight", "outcome": "red-component-insertion"})
        return RED_ROLE, red_path
    blue_path = blue_template_search(view, spine, U, l)
    if blue_path is not None:
        used = _mask(blue_path)
        _extend(view.blue, blue_path, used)
        trace.append({"step": "tight", "outcome": "blue-template"})
        return BLUE_ROLE, blue_path
    return None


# one round


def _resolve_round(view: RoleView, path: list[int], k: int, l: int, epsilon: float,
                   trace: list):
    """Return (role, path): red-role length >= k or blue-role length >= l."""
    delta = 4.0 * epsilon
    on = _extend(view.red, path, _mask(path))
    if _edges_len(path) >= k:
        trace.append({"step": "extend"})
        return RED_ROLE, path
    if len(path) == 1:
        w = view.blue[path[0]]
        if w:
            trace.append({"step": "base"})
            return BLUE_ROLE, [path[0], _low(w)]
        raise CaseExhausted("isolated start vertex")
    inserted = _insert_single(view, path, on)
    if inserted is not None:
        trace.append({"step": "insert"})
        return RED_ROLE, inserted
    got = warmup_large_k(view, k, l, epsilon, path)
    if got is not None:
        trace.append({"step": "warmup"})
        return got
    U = view.full & ~on
    if not U:
        raise CaseExhausted("no vertex off the red path")
    long_blue = math.ceil(13 * delta * k - 1e-9)
    W1, W2, inner = split_masks(view.blue, U)
    got = None
    if long_blue == 0 or _edges_len(inner) >= long_blue:
        seed = [_low(U)] if long_blue == 0 else inner[: long_blue + 1]
        got = _two_cycle_case(view, path, U, k, l, delta, seed, "case1", trace)
        if got is not None:
            trace.append({"step": "case1"})
    elif l <= (1 - 13 * delta) * k:
        got = _two_cycle_case(view, path, U, k, l, delta, None, "case2", trace)
        if got is not None:
            trace.append({"step": "case2"})
    else:
        got = case3_extract(view, path, U, W1, W2, k, l, delta)
        if got is not None:
            trace.append({"step": "case3"})
        else:
            trace.append({"step": "case3", "outcome": "short"})
    if got is not None:
        return got
    got = _tight_resolution(view, path, U, k, l, trace)
    if got is not None:
        return got
    raise CaseExhausted(f"round k={k}, l={l}: no move applies")


# drivers


def _check_output(path: list[int], role: int, view: RoleView) -> None:
    adj = view.red if role == RED_ROLE else view.blue
    if len(set(path)) != len(path):
        raise AssertionError("extractor produced a repeated vertex")
    for a, b in zip(path, path[1:]):
        if not (adj[a] >> b) & 1:
            raise AssertionError("extractor produced a non-monochromatic path")


def extract_masks(n: int, red: list[int], blue: list[int], k: int, l: int,
                  epsilon: float = 0.0, trace: list | None = None,
                  check: bool = False) -> MonoPath:
    """Induction loop on bitmask adjacency; see ``extract_min_degree``."""
    if trace is None:
        trace = []
    views = {Color.RED: RoleView(n, red, blue, Color.RED),
             Color.BLUE: RoleView(n, blue, red, Color.BLUE)}
    color = Color.RED
    path = [0]
    for j in range(1, k + 1):
        lj = min(j, l)
        if color is Color.RED and _edges_len(path) >= k:
            break
        if color is Color.BLUE and _edges_len(path) >= l:
            break
        if j > l and color is not Color.RED:
            raise AssertionError("asymmetric round entered with a blue path")
        if _edges_len(path) >= j:
            continue
        view = views[color]
        start = len(trace)
        role, path = _resolve_round(view, list(path), j, lj, epsilon, trace)
        for entry in trace[start:]:
            entry.setdefault("round", j)
            entry.setdefault("red_role", view.red_color.name.lower())
        if check:
            _check_output(path, role, view)
        color = view.color_of(role)
    return MonoPath(color, path)


def extract_min_degree(graph: ColoredGraph, params: ExtractorParams,
                       trace: list | None = None, strict: bool = True) -> MonoPath:
    """Red path with >= k edges or blue path with >= l edges.

    ``strict=False`` records hypothesis violations in ``trace`` instead of
    raising; the output is still validated.
    """
    if not graph.is_fully_colored():
        raise HypothesisViolated("graph must be fully colored")
    problems = params.violations(graph)
    if trace is None:
        trace = []
    if problems:
        if strict:
            raise HypothesisViolated("; ".join(problems))
        trace.append({"step": "hypothesis", "violations": problems})
    if graph.n == 0:
        raise HypothesisViolated("empty graph")
    _, red, blue = graph.masks()
    out = extract_masks(graph.n, red, blue, params.k, params.l, params.epsilon, trace)
    return out.validate(graph)


def _reduction_order(graph: ColoredGraph, epsilon: float) -> list[int]:
    adj, _, _ = graph.masks()
    alive = (1 << graph.n) - 1
    count = graph.n
    root = math.sqrt(epsilon)
    while count:
        worst, victim = -1, -1
        for v in _bits(alive):
            missing = count - 1 - (adj[v] & alive).bit_count()
            if missing > worst:
                worst, victim = missing, v
        if worst <= root * count + 1e-9:
            break
        alive ^= 1 << victim
        count -= 1
        if count < (1 - root) * graph.n - 1e-9:
            raise ReductionFailed(
                f"more than sqrt(eps)*n vertices removed; edge-count precondition fails")
    return list(_bits(alive))


def reduce_to_min_degree(graph: ColoredGraph, epsilon: float) -> ColoredGraph:
    """Delete worst vertices until each misses at most sqrt(eps) of the rest."""
    keep = _reduction_order(graph, epsilon)
    return graph.induced(keep)


def extract_density(graph: ColoredGraph, k: int, l: int, epsilon: float,
                    trace: list | None = None) -> MonoPath:
    if not 0.0 <= epsilon <= 0.25:
        raise HypothesisViolated("epsilon must lie in [0, 1/4]")
    n = graph.n
    need = k + (l + 1) // 2 + 150.0 * math.sqrt(epsilon) * k
    if n < need - 1e-9:
        raise HypothesisViolated(f"n = {n} < {need:.3f}")
    if graph.m < (1 - epsilon) * n * (n - 1) / 2 - 1e-9:
        raise HypothesisViolated("too few edges for the stated density")
    keep = _reduction_order(graph, epsilon)
    sub = graph.induced(keep)
    params = ExtractorParams(k, l, math.sqrt(epsilon))
    if trace is None:
        trace = []
    trace.append({"step": "reduce", "removed": n - len(keep)})
    inner = extract_min_degree(sub, params, trace)
    return MonoPath(inner.color, [keep[v] for v in inner.vertices]).validate(graph)


def half_extract(graph: ColoredGraph, alpha: float):
    """Monochromatic path of length >= n(1/2 - alpha), or an edge-free pair."""
    if not 0 < alpha < 0.5:
        raise ValueError("alpha must lie in (0, 1/2)")
    n = graph.n
    goal = n * (0.5 - alpha)
    red_cert = split(graph, color=Color.RED)
    if _edges_len(red_cert.spine) >= goal:
        return MonoPath(Color.RED, red_cert.spine.tolist())
    U, W = red_cert.U, red_cert.W
    side = np.zeros(n, dtype=np.int8)
    side[U] = 1
    side[W] = 2
    u, v, c = graph.edge_arrays
    keep = (c == Color.BLUE) & (side[u] * side[v] == 2)
    crossing = ColoredGraph.from_arrays(n, u[keep], v[keep], c[keep], validate=False)
    X1, X2, spine = bipartite_cut(crossing, U, W)
    if _edges_len(spine) >= goal:
        return MonoPath(Color.BLUE, spine.tolist())
    return SparseCutWitness(tuple(X1.tolist()), tuple(X2.tolist()))
