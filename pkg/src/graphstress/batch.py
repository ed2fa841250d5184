"""Vectorised stress computation over many small labelled graphs at once.

Graphs on ``n`` vertices are encoded as integer edge masks: bit ``b`` is the
``b``-th vertex pair in graph6 order ``(0,1), (0,2), (1,2), (0,3), ...``. The
exhaustive verifier feeds contiguous mask ranges through these functions.
"""
from __future__ import annotations

from functools import lru_cache

import numpy as np

from .errors import BadParameter, CountOverflow
from .graph import Graph, from_edge_list

MAX_BATCH_N = 8
UNREACHABLE_DIST = np.iinfo(np.int16).max


@lru_cache(maxsize=None)
def vertex_pairs(n: int) -> tuple[tuple[int, int], ...]:
    return tuple((i, j) for j in range(1, n) for i in range(j))


def mask_to_graph(n: int, mask: int) -> Graph:
    return from_edge_list(n, [p for b, p in enumerate(vertex_pairs(n)) if mask >> b & 1])


def graph_to_mask(g: Graph) -> int:
    return sum(1 << b for b, (i, j) in enumerate(vertex_pairs(g.n)) if g.has_edge(i, j))


def adjacency(n: int, masks: np.ndarray) -> np.ndarray:
    """``(B, n, n)`` int64 adjacency matrices for a vector of masks."""
    if not 1 <= n <= MAX_BATCH_N:
        raise BadParameter(f"batch engine supports 1 <= n <= {MAX_BATCH_N}, got {n}")
    masks = np.asarray(masks, dtype=np.int64)
    A = np.zeros((masks.shape[0], n, n), dtype=np.int64)
    for b, (i, j) in enumerate(vertex_pairs(n)):
        bit = (masks >> b) & 1
        A[:, i, j] = bit
        A[:, j, i] = bit
    return A


def census(A: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Distances and geodesic counts from powers of the adjacency matrix.

    A shortest walk is a path, so the walk count at the first power where a
    pair becomes reachable is its number of geodesics.
    """
    B, n, _ = A.shape
    eye = np.broadcast_to(np.eye(n, dtype=bool), (B, n, n))
    dist = np.where(eye, 0, UNREACHABLE_DIST).astype(np.int16)
    sigma = eye.astype(np.int64)
    reached = eye.copy()
    walks = sigma.copy()
    for k in range(1, n):
        walks = walks @ A
        new = (walks > 0) & ~reached
        if not new.any():
            break
        dist[new] = k
        sigma[new] = walks[new]
        reached |= new
    if sigma.size and sigma.max() >= 2**62:
        raise CountOverflow("geodesic count exceeds 62 bits")
    return dist, sigma


def is_connected(dist: np.ndarray) -> np.ndarray:
    return (dist != UNREACHABLE_DIST).all(axis=(1, 2))


def stress(dist: np.ndarray, sigma: np.ndarray) -> np.ndarray:
    """``(B, n)`` stress values; unreachable pairs never satisfy the geodesic test."""
    B, n, _ = dist.shape
    d = dist.astype(np.int32)
    out = np.zeros((B, n), dtype=np.int64)
    for v in range(n):
        dsv = d[:, :, v]
        through = (dsv[:, :, None] + dsv[:, None, :]) == d
        through &= (dsv[:, :, None] < UNREACHABLE_DIST) & (dsv[:, None, :] < UNREACHABLE_DIST)
        through[:, v, :] = False
        through[:, :, v] = False
        ssv = sigma[:, :, v]
        out[:, v] = np.einsum("bst,bs,bt->b", through.astype(np.int64), ssv, ssv)
    return out // 2


def eccentricities(dist: np.ndarray) -> np.ndarray:
    return dist.max(axis=2)


def cut_vertices(A: np.ndarray) -> np.ndarray:
    """``(B, n)`` flags: deleting the vertex disconnects the (connected) graph."""
    B, n, _ = A.shape
    flags = np.zeros((B, n), dtype=bool)
    if n < 3:
        return flags
    for v in range(n):
        keep = np.ones(n, dtype=bool)
        keep[v] = False
        sub = A[:, keep][:, :, keep]
        seen = np.zeros((B, n - 1), dtype=bool)
        seen[:, 0] = True
        for _ in range(n - 2):
            seen = seen | (np.einsum("bi,bij->bj", seen.astype(np.int64), sub) > 0)
        flags[:, v] = ~seen.all(axis=1)
    return flags


def same_component_without(A: np.ndarray, removed: np.ndarray) -> np.ndarray:
    """``(B, n, n)`` reachability in ``G - removed[b]``; the removed vertex reaches nothing."""
    B, n, _ = A.shape
    alive = np.ones((B, n), dtype=bool)
    alive[np.arange(B), removed] = False
    R = (A.astype(bool) | np.eye(n, dtype=bool)) & alive[:, :, None] & alive[:, None, :]
    steps = 1
    while steps < n:
        R = (R.astype(np.int64) @ R.astype(np.int64)) > 0
        steps *= 2
    return R
