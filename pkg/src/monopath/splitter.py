"""Partition of V(G) into two edge-free halves and a Hamiltonian spine.

The loop keeps a partition (U, P, W): U starts as V(G), W empty, P an
empty path. While |U| > |W| one step is taken: if P is empty the
smallest vertex of U starts it; otherwise the active endpoint v of P
either absorbs its smallest neighbour in U or, lacking one, moves to W.
No edge ever joins U and W, and |U| - |W| drops by exactly one per step.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numba import njit

from .graph import ColoredGraph

# step codes recorded in the trace
START, EXTEND, RETIRE = 0, 1, 2

# graphs at most this large use the bitmask backend
_MASK_BACKEND_LIMIT = 256


class PreconditionError(ValueError):
    pass


@dataclass(frozen=True)
class SplitCertificate:
    U: np.ndarray
    W: np.ndarray
    spine: np.ndarray
    ops: np.ndarray
    op_vertices: np.ndarray

    @property
    def steps(self) -> int:
        return len(self.ops)

    def as_sets(self) -> tuple[set[int], set[int], list[int]]:
        return set(self.U.tolist()), set(self.W.tolist()), self.spine.tolist()


@njit(cache=True)
def _split_csr(n, indptr, indices, members):
    # state: 0 = U, 1 = P, 2 = W, 3 = outside the vertex set
    state = np.where(members, 0, 3).astype(np.int8)
    ptr = indptr[:-1].copy()
    stack = np.empty(n, dtype=np.int64)
    ops = np.empty(n, dtype=np.int8)
    opv = np.empty(n, dtype=np.int64)
    top = 0
    nxt = 0
    cu = 0
    for x in range(n):
        if members[x]:
            cu += 1
    cw = 0
    step = 0
    while cu > cw:
        if top == 0:
            while state[nxt] != 0:
                nxt += 1
            v = nxt
            state[v] = 1
            stack[0] = v
            top = 1
            cu -= 1
            ops[step] = 0
            opv[step] = v
        else:
            v = stack[top - 1]
            p = ptr[v]
            end = indptr[v + 1]
            while p < end and state[indices[p]] != 0:
                p += 1
            ptr[v] = p
            if p < end:
                u = indices[p]
                state[u] = 1
                stack[top] = u
                top += 1
                cu -= 1
                ops[step] = 1
                opv[step] = u
            else:
                state[v] = 2
                top -= 1
                cw += 1
                ops[step] = 2
                opv[step] = v
        step += 1
    return state, stack[:top].copy(), ops[:step].copy(), opv[:step].copy()


def split_masks(adj: list[int], members: int) -> tuple[int, int, list[int]]:
    """Bitmask backend: returns (U mask, W mask, spine) over ``members``."""
    U = members
    W = 0
    cu = members.bit_count()
    cw = 0
    path: list[int] = []
    while cu > cw:
        if not path:
            low = U & -U
            U ^= low
            path.append(low.bit_length() - 1)
            cu -= 1
            continue
        cand = adj[path[-1]] & U
        if cand:
            low = cand & -cand
            U ^= low
            path.append(low.bit_length() - 1)
            cu -= 1
        else:
            W |= 1 << path.pop()
            cw += 1
    return U, W, path


def _split_masks_traced(adj: list[int], members: int):
    U, W = members, 0
    cu, cw = members.bit_count(), 0
    path: list[int] = []
    ops: list[int] = []
    opv: list[int] = []
    while cu > cw:
        if not path:
            low = U & -U
            v = low.bit_length() - 1
            U ^= low
            path.append(v)
            cu -= 1
            ops.append(START)
            opv.append(v)
            continue
        cand = adj[path[-1]] & U
        if cand:
            low = cand & -cand
            v = low.bit_length() - 1
            U ^= low
            path.append(v)
            cu -= 1
            ops.append(EXTEND)
            opv.append(v)
        else:
            v = path.pop()
            W |= 1 << v
            cw += 1
            ops.append(RETIRE)
            opv.append(v)
    return U, W, path, ops, opv


def _mask_to_array(mask: int) -> np.ndarray:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return np.asarray(out, dtype=np.int64)


def split(graph: ColoredGraph, color: int | None = None, vertices=None,
          backend: str = "auto") -> SplitCertificate:
    """Run the partition loop on ``graph`` (optionally one color class,
    optionally restricted to the induced subgraph on ``vertices``).

    ``backend`` is ``"mask"``, ``"csr"`` or ``"auto"``; both backends
    break ties by smallest index and return identical certificates.
    """
    n = graph.n
    if backend == "auto":
        backend = "mask" if n <= _MASK_BACKEND_LIMIT else "csr"
    if backend == "mask":
        adj, red, blue = graph.masks()
        masks = {None: adj, 1: red, 2: blue}[None if color is None else int(color)]
        members = (1 << n) - 1
        if vertices is not None:
            members = 0
            for x in vertices:
                members |= 1 << int(x)
        U, W, path, ops, opv = _split_masks_traced(masks, members)
        return SplitCertificate(_mask_to_array(U), _mask_to_array(W),
                                np.asarray(path, dtype=np.int64),
                                np.asarray(ops, dtype=np.int8),
                                np.asarray(opv, dtype=np.int64))
    if backend != "csr":
        raise ValueError(f"unknown backend {backend!r}")
    indptr, indices = graph.csr(color)
    members = np.ones(n, dtype=np.bool_)
    if vertices is not None:
        members[:] = False
        members[np.asarray(list(vertices), dtype=np.int64)] = True
    state, spine, ops, opv = _split_csr(n, indptr, indices, members)
    return SplitCertificate(np.flatnonzero(state == 0), np.flatnonzero(state == 2),
                            spine, ops, opv)


def check_certificate(graph: ColoredGraph, cert: SplitCertificate,
                      color: int | None = None, vertices=None) -> list[str]:
    """Return the list of violated certificate invariants (empty when valid)."""
    problems = []
    n = graph.n
    universe = np.ones(n, dtype=bool) if vertices is None else np.zeros(n, dtype=bool)
    if vertices is not None:
        universe[np.asarray(list(vertices), dtype=np.int64)] = True
    where = np.zeros(n, dtype=np.int8)
    for code, part in ((1, cert.U), (2, cert.W), (3, cert.spine)):
        if (where[part] != 0).any():
            problems.append("parts overlap")
        where[part] = code
    if not np.array_equal(where != 0, universe):
        problems.append("parts do not cover the vertex set")
    if len(cert.U) != len(cert.W):
        problems.append("|U| != |W|")
    u, v, c = graph.edge_arrays
    if color is not None:
        sel = c == color
        u, v = u[sel], v[sel]
    cross = ((where[u] == 1) & (where[v] == 2)) | ((where[u] == 2) & (where[v] == 1))
    if cross.any():
        problems.append("edge joins U and W")
    if len(cert.spine) > 1:
        a, b = cert.spine[:-1], cert.spine[1:]
        lo, hi = np.minimum(a, b), np.maximum(a, b)
        keys = np.sort(u * n + v)
        want = lo * n + hi
        pos = np.searchsorted(keys, want)
        pos = np.minimum(pos, max(len(keys) - 1, 0))
        if len(keys) == 0 or not (keys[pos] == want).all():
            problems.append("spine is not a path")
    return problems


def bipartite_cut(graph: ColoredGraph, V1, V2, color: int | None = None):
    """Equal-size sets X1 of V1 and X2 of V2 with no edge between them.

    Returns ``(X1, X2, spine)``. Every (selected) edge must cross the
    balanced bipartition V1, V2.
    """
    V1 = np.asarray(sorted(int(x) for x in V1), dtype=np.int64)
    V2 = np.asarray(sorted(int(x) for x in V2), dtype=np.int64)
    if len(V1) != len(V2):
        raise PreconditionError("parts must have equal size")
    side = np.zeros(graph.n, dtype=np.int8)
    side[V1] = 1
    if (side[V2] != 0).any():
        raise PreconditionError("parts overlap")
    side[V2] = 2
    u, v, c = graph.edge_arrays
    if color is not None:
        sel = c == color
        u, v = u[sel], v[sel]
    if (side[u] == 0).any() or (side[v] == 0).any():
        raise PreconditionError("edge leaves V1 and V2")
    if (side[u] == side[v]).any():
        raise PreconditionError("edge does not cross the bipartition")
    vertices = np.concatenate([V1, V2])
    cert = split(graph, color=color, vertices=vertices)
    U1 = cert.U[side[cert.U] == 1]
    U2 = cert.U[side[cert.U] == 2]
    W1 = cert.W[side[cert.W] == 1]
    W2 = cert.W[side[cert.W] == 2]
    if len(U1) >= len(U2):
        X1, X2 = U1, W2
    else:
        X1, X2 = W1, U2
    size = min(len(X1), len(X2))
    return X1[:size], X2[:size], cert.spine
