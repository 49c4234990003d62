"""Canonical forms, automorphism groups and isomorphism tests for designs.

A design is turned into its bipartite incidence graph (points first, then
blocks, two colours).  The search is the usual individualization-refinement
scheme:

* colour refinement to the coarsest equitable partition, with new cells
  ordered by their (old colour, neighbour-count) signature so that the
  partition sequence is isomorphism invariant;
* branching on the largest non-singleton cell, children in vertex order;
* leaves give labelings; the certificate of a labeling is the relabeled
  block list, and the canonical form is the least certificate;
* a leaf whose certificate equals the first or the best one yields an
  automorphism; the search then jumps back to the branching node, and
  children lying in a known orbit of the stabilizer of the node's prefix
  are skipped.

The automorphisms found generate the full group, and its order is the
product of the first-path orbit lengths.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .design import Design
from .perm import PermGroup, Permutation, close

MATERIALIZE_LIMIT = 10**6


@dataclass(frozen=True)
class IncidenceGraph:
    v: int
    b: int
    adjacency: np.ndarray   # (v+b) x (v+b), 0/1

    @classmethod
    def from_design(cls, D: Design) -> "IncidenceGraph":
        n = D.v + D.b
        A = np.zeros((n, n), dtype=np.float64)   # float so that products go through BLAS; counts stay exact
        for j, B in enumerate(D.blocks):
            A[list(B), D.v + j] = 1
            A[D.v + j, list(B)] = 1
        return cls(D.v, D.b, A)

    @property
    def n(self) -> int:
        return self.v + self.b

    def initial_colors(self) -> np.ndarray:
        return np.array([0] * self.v + [1] * self.b, dtype=np.int64)


@dataclass(frozen=True)
class CanonicalForm:
    relabeling: tuple[int, ...]    # vertex -> canonical position
    certificate: bytes

    def hex(self) -> str:
        return self.certificate.hex()


@dataclass(frozen=True)
class AutomorphismGroup:
    order: int
    generators: tuple[Permutation, ...]   # acting on the points
    group: PermGroup | None               # materialized when order <= MATERIALIZE_LIMIT


def refine(A: np.ndarray, colors: np.ndarray) -> np.ndarray:
    """Coarsest equitable refinement of ``colors`` (dense ranks, invariant order)."""
    n = len(colors)
    k = int(colors.max()) + 1
    while True:
        onehot = np.zeros((n, k), dtype=A.dtype)
        onehot[np.arange(n), colors] = 1
        sig = np.column_stack([colors, (A @ onehot).astype(np.int64)])
        uniq, new = np.unique(sig, axis=0, return_inverse=True)
        new = new.reshape(-1)
        if len(uniq) == k:
            return new
        colors, k = new, len(uniq)


def individualize(colors: np.ndarray, w: int) -> np.ndarray:
    c = colors * 2 + 1
    c[w] -= 1
    return np.unique(c, return_inverse=True)[1].reshape(-1)


def _target_cell(colors: np.ndarray):
    counts = np.bincount(colors)
    if counts.max() == 1:
        return None
    size = counts.max()
    c = int(np.flatnonzero(counts == size)[0])
    return np.flatnonzero(colors == c).tolist()


def _orbits_of(gens, n):
    """Orbit labels (least member of each orbit) of the group generated by ``gens``."""
    lab = np.arange(n)
    while True:
        new = lab.copy()
        for g in gens:
            np.minimum(new, new[g], out=new)
            new[g] = np.minimum(new[g], new)
        new = new[new]
        if np.array_equal(new, lab):
            return lab
        lab = new


class _Search:
    def __init__(self, G: IncidenceGraph):
        self.G = G
        self.A = G.adjacency
        self.gens: list[np.ndarray] = []
        self._gen_keys = set()
        self.first = None     # (labeling, certificate, prefix)
        self.best = None
        self.first_path: list[tuple[list[int], int]] = []   # (target cell, chosen vertex)
        self.jump_to = None
        self.leaves = 0

    def certificate(self, lab: np.ndarray) -> bytes:
        v, b = self.G.v, self.G.b
        M = self.A[:v, v:]
        rows = np.empty((b, 0), dtype=np.int64)
        if b:
            pts = [np.sort(lab[np.flatnonzero(M[:, j])]) for j in range(b)]
            k = len(pts[0])
            rows = np.zeros((b, k), dtype=np.int64)
            for j in range(b):
                rows[lab[v + j] - v] = pts[j]
        head = np.array([v, b, rows.shape[1]], dtype=">u4").tobytes()
        return head + rows.astype(">u2").tobytes()

    def _add_gen(self, g: np.ndarray) -> None:
        key = g.tobytes()
        if key not in self._gen_keys and not np.array_equal(g, np.arange(len(g))):
            self._gen_keys.add(key)
            self.gens.append(g)

    def _fixing(self, prefix):
        p = np.array(prefix, dtype=np.int64)
        return [g for g in self.gens if np.array_equal(g[p], p)] if len(p) else list(self.gens)

    def leaf(self, colors, prefix) -> None:
        self.leaves += 1
        lab = colors
        cert = self.certificate(lab)
        if self.first is None:
            self.first = (lab, cert, list(prefix))
            self.best = self.first
            return
        for ref in (self.first, self.best):
            if cert == ref[1]:
                inv = np.empty_like(ref[0])
                inv[ref[0]] = np.arange(len(lab))
                self._add_gen(inv[lab])
                # common ancestor of this leaf and the reference leaf
                j = 0
                while j < min(len(prefix), len(ref[2])) and prefix[j] == ref[2][j]:
                    j += 1
                self.jump_to = j
                return
        if cert < self.best[1]:
            self.best = (lab, cert, list(prefix))

    def explore(self, colors, prefix, on_first_path) -> None:
        cell = _target_cell(colors)
        if cell is None:
            self.leaf(colors, prefix)
            return
        if on_first_path:
            self.first_path.append((cell, cell[0]))
        done = []
        orb, ngens = None, -1
        for i, w in enumerate(cell):
            if done:
                if ngens != len(self.gens):
                    orb, ngens = _orbits_of(self._fixing(prefix), self.G.n), len(self.gens)
                if any(orb[w] == orb[u] for u in done):
                    continue
            child = refine(self.A, individualize(colors, w))
            self.explore(child, prefix + [w], on_first_path and i == 0)
            if self.jump_to is not None:
                if self.jump_to < len(prefix):
                    return
                self.jump_to = None
            done.append(w)

    def run(self):
        root = refine(self.A, self.G.initial_colors())
        self.explore(root, [], True)
        return self

    def group_order(self) -> int:
        order = 1
        prefix = []
        for cell, w in self.first_path:
            orb = _orbits_of(self._fixing(prefix), self.G.n)
            order *= sum(1 for u in cell if orb[u] == orb[w])
            prefix.append(w)
        return order


def _search(D: Design) -> _Search:
    return _Search(IncidenceGraph.from_design(D)).run()


def canonical_form(D: Design) -> CanonicalForm:
    s = _search(D)
    lab, cert, _ = s.best
    return CanonicalForm(tuple(int(x) for x in lab), cert)


def canonical_design(D: Design) -> Design:
    cf = canonical_form(D)
    lab = cf.relabeling
    return D.relabel([lab[p] for p in range(D.v)])


def automorphism_group(D: Design, materialize_limit: int = MATERIALIZE_LIMIT) -> AutomorphismGroup:
    s = _search(D)
    gens = tuple(Permutation(g[: D.v].tolist()) for g in s.gens)
    order = s.group_order()
    group = None
    if order <= materialize_limit:
        group = close(gens, D.v) if gens else close([], D.v)
        if group.order != order:
            raise AssertionError(f"closure has order {group.order}, search says {order}")
    return AutomorphismGroup(order, gens, group)


def pair_invariants(D: Design):
    """Cheap isomorphism invariants: pair-coverage and block-intersection multisets."""
    M = D.incidence()
    pp = M @ M.T
    bb = M.T @ M
    pc = np.bincount(pp[np.triu_indices(D.v, 1)])
    bi = np.bincount(bb[np.triu_indices(D.b, 1)]) if D.b > 1 else np.zeros(1, dtype=np.int64)
    return (D.v, D.b, D.k, tuple(pc.tolist()), tuple(bi.tolist()))


def is_isomorphism(D1: Design, D2: Design, point_map) -> bool:
    if D1.v != D2.v or D1.b != D2.b:
        return False
    blocks2 = set(D2.blocks)
    return all(tuple(sorted(point_map[x] for x in B)) in blocks2 for B in D1.blocks)


def are_isomorphic(D1: Design, D2: Design):
    """(True, point map) or (False, None).  The map is checked before it is returned."""
    if pair_invariants(D1) != pair_invariants(D2):
        return False, None
    c1, c2 = canonical_form(D1), canonical_form(D2)
    if c1.certificate != c2.certificate:
        return False, None
    inv2 = {lab: v for v, lab in enumerate(c2.relabeling)}
    phi = [inv2[c1.relabeling[p]] for p in range(D1.v)]
    if not is_isomorphism(D1, D2, phi):
        raise AssertionError("equal certificates but the witness map is not an isomorphism")
    return True, phi


def group_order_formula(v: int, block_size: int) -> int:
    """|Aut| of a single block of ``block_size`` points on ``v`` points."""
    return math.factorial(block_size) * math.factorial(v - block_size)
