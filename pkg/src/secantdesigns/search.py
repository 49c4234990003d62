"""Parameter filters for 2-(k^2, k, λ) designs and the completeness search
for flag-transitive 2-(36,6,λ) designs, λ | 6, under G and G'.

Pruned search: a flag-transitive design with b = 42λ blocks has block
stabilizer of order |H| / (42λ).  For H = G that is 36/λ in {36, 18, 12, 6},
for H = G' and λ = 2 it is 6; all are divisible by 3, so the stabilizer
contains a subgroup of order 3 and, up to conjugacy in H, the base block is
a union of cycles of one fixed representative of each class of such
subgroups.

Exhaustive search: every one of the C(36,6) subsets, with the stabilizer
order counted over all of H through a bitmask image table.
"""

from __future__ import annotations

import itertools
import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .design import Design, DesignParams, NotA2DesignError, orbit_design, verify_2design, verify_flag_transitive
from .iso import canonical_form
from .perm import PermGroup, Permutation
from .ree import ReeModel

WORKERS_ENV = "SECANTDESIGNS_WORKERS"


class InadmissibleError(ValueError):
    pass


class NontrivialDesignError(InadmissibleError):
    pass


# -- numeric filters --

def admissible_params(k: int, lam: int) -> DesignParams:
    """Parameters of a 2-(k^2, k, λ) design with λ | k."""
    if lam < 1 or k % lam:
        raise InadmissibleError(f"λ = {lam} does not divide k = {k}")
    v = k * k
    if not 2 < k < v:
        raise NontrivialDesignError(f"k = {k} violates 2 < k < v = {v}")
    r = lam * (k + 1)
    b = lam * k * (k + 1)
    return DesignParams(v=v, b=b, r=r, k=k, lam=lam)


def replication_ratio_exceeds_k(p: DesignParams) -> bool:
    """(r/λ)^2 > k^2; always true here, kept for audit output."""
    return (p.r * p.r) > (p.k * p.k) * (p.lam * p.lam)


def outer_divisibility_filter(k: int, out_order: int, stab_order: int) -> bool:
    """Pass iff (k+1)/gcd(k+1, |Out(X)|) divides |X_x|."""
    if min(k, out_order, stab_order) < 1:
        raise ValueError("all arguments must be positive")
    return stab_order % ((k + 1) // math.gcd(k + 1, out_order)) == 0


# -- predicates on a concrete flag-transitive group and design --

def is_point_primitive(G: PermGroup) -> bool:
    return G.is_primitive()[0]


def is_large_point_stabilizer(G: PermGroup, x: int = 0) -> bool:
    return G.order < G.stabilizer(x).order ** 3


def orbit_divisibility_holds(G: PermGroup, D: Design, x: int = 0) -> bool:
    """|Δ| = (k+1)|B ∩ Δ| for every G_x-orbit Δ ≠ {x} and every block B through x."""
    Gx = G.stabilizer(x)
    k = D.k
    through = [B for B in D.blocks if x in B]
    for orb in Gx.orbits():
        if orb == (x,):
            continue
        if len(orb) % (k + 1):
            return False
        s = set(orb)
        if any(len(orb) != (k + 1) * len(s.intersection(B)) for B in through):
            return False
    return True


def flag_counting_holds(G: PermGroup, D: Design, x: int = 0) -> bool:
    """|G| = v|G_x| and |G_x| = r|G_{x,B}| for a block B through x."""
    p = verify_2design(D)
    Gx = G.stabilizer(x)
    B = next(B for B in D.blocks if x in B)
    return G.order == p.v * Gx.order and Gx.order == p.r * Gx.set_stabilizer(B).order


# -- completeness search --

@dataclass(frozen=True)
class CandidateBlock:
    block: tuple[int, ...]
    stab_order: int
    source_element: Permutation | None

    def is_invariant(self) -> bool:
        g = self.source_element
        return g is None or {g(x) for x in self.block} == set(self.block)


@dataclass
class CatalogEntry:
    lam: int
    params: DesignParams
    design: Design
    certificate: bytes
    base_block: tuple[int, ...]
    stab_order: int
    source_element: Permutation | None = None
    name: str | None = None


@dataclass
class SearchResult:
    group: str
    lambdas: tuple[int, ...]
    mode: str
    entries: list[CatalogEntry]
    candidate_counts: dict = field(default_factory=dict)   # per order-3 representative: (enumerated, closed form)
    examined: int = 0

    def by_lambda(self) -> dict[int, int]:
        out = {lam: 0 for lam in self.lambdas}
        for e in self.entries:
            out[e.lam] += 1
        return out

    def summary(self) -> str:
        counts = self.by_lambda()
        parts = ", ".join(f"λ={lam} ×{n}" for lam, n in sorted(counts.items()) if n)
        n = len(self.entries)
        return f"{n} class{'es' if n != 1 else ''}: {parts}" if n else "0 classes"


def invariant_subsets(g: Permutation, size: int) -> list[tuple[int, ...]]:
    """All ``size``-subsets that are unions of cycles of g."""
    cycles = g.cycles()
    out = []

    def rec(i, chosen, total):
        if total == size:
            out.append(tuple(sorted(x for c in chosen for x in c)))
            return
        if i == len(cycles):
            return
        c = cycles[i]
        if total + len(c) <= size:
            rec(i + 1, chosen + [c], total + len(c))
        rec(i + 1, chosen, total)

    rec(0, [], 0)
    return sorted(out)


def invariant_subset_count(cycle_type, size: int) -> int:
    """Coefficient of x^size in prod over cycles of (1 + x^len)."""
    poly = [1] + [0] * size
    for ln in cycle_type:
        for s in range(size, ln - 1, -1):
            poly[s] += poly[s - ln]
    return poly[size]


def _block_stabilizer_orders(H: PermGroup, lambdas) -> dict[int, int]:
    out = {}
    for lam in lambdas:
        b = 42 * lam
        if H.order % b == 0:
            out[H.order // b] = lam
    return out


def _evaluate(H: PermGroup, candidates, lambdas, group_label) -> list[CatalogEntry]:
    wanted = _block_stabilizer_orders(H, lambdas)
    seen_blocks = set()
    entries = {}
    for cand in candidates:
        B = cand.block
        if B in seen_blocks:
            continue
        stab = H.set_stabilizer(B)
        if stab.order not in wanted or not stab.is_transitive(B):
            continue
        orbit = H.set_orbit(B)
        seen_blocks.update(orbit)
        D = orbit_design(H, B, provenance={"base_block": list(B), "group": group_label})
        try:
            p = verify_2design(D)
        except NotA2DesignError:
            continue
        if p.lam != wanted[stab.order] or not verify_flag_transitive(H, D):
            continue
        cert = canonical_form(D).certificate
        if cert not in entries:
            entries[cert] = CatalogEntry(p.lam, p, D, cert, B, stab.order, cand.source_element)
    return sorted(entries.values(), key=lambda e: (e.lam, e.certificate))


def _group(model: ReeModel, group: str) -> PermGroup:
    if group == "G":
        return model.G
    if group in ("Gprime", "G'"):
        return model.Gder
    raise ValueError(f"unknown group {group!r}")


def completeness_search(model: ReeModel, lambdas=(1, 2, 3, 6), group: str = "G") -> SearchResult:
    """Flag-transitive 2-(36,6,λ) orbit designs under the chosen group, up to isomorphism."""
    H = _group(model, group)
    lambdas = tuple(sorted(lambdas))
    for order in _block_stabilizer_orders(H, lambdas):
        if order % 3:
            raise AssertionError(f"block stabilizer order {order} is prime to 3; order-3 pruning would be unsound")
    reps = H.conjugacy_classes_of_prime_order(3)
    candidates = []
    counts = {}
    for g in reps:
        subs = invariant_subsets(g, 6)
        counts[g.images] = (len(subs), invariant_subset_count(g.cycle_type(), 6))
        candidates += [CandidateBlock(B, 0, g) for B in subs]
    entries = _evaluate(H, candidates, lambdas, group)
    return SearchResult(group, lambdas, "pruned", entries, counts, len(candidates))


def gprime_completeness_search(model: ReeModel) -> SearchResult:
    return completeness_search(model, lambdas=(2,), group="Gprime")


# -- exhaustive oracle --

def _all_masks(n: int, k: int) -> np.ndarray:
    combos = np.fromiter(
        itertools.chain.from_iterable(itertools.combinations(range(n), k)),
        dtype=np.uint8,
        count=math.comb(n, k) * k,
    ).reshape(-1, k)
    masks = np.zeros(len(combos), dtype=np.uint64)
    for j in range(k):
        masks |= np.left_shift(np.uint64(1), combos[:, j].astype(np.uint64))
    return masks


def _image_tables(images: np.ndarray) -> np.ndarray:
    """tables[byte][value] = image mask of the bits ``value`` in byte position ``byte``."""
    n = images.shape[0]
    nbytes = (n + 7) // 8
    tables = np.zeros((nbytes, 256), dtype=np.uint64)
    vals = np.arange(256)
    for byte in range(nbytes):
        for bit in range(8):
            x = byte * 8 + bit
            if x >= n:
                break
            hit = (vals >> bit) & 1 == 1
            tables[byte, hit] |= np.uint64(1) << np.uint64(images[x])
    return tables


def _fix_counts(masks: np.ndarray, elements: np.ndarray) -> np.ndarray:
    counts = np.zeros(len(masks), dtype=np.uint16)
    nbytes = (elements.shape[1] + 7) // 8
    parts = [((masks >> np.uint64(8 * i)) & np.uint64(255)).astype(np.intp) for i in range(nbytes)]
    for images in elements:
        T = _image_tables(images)
        img = T[0][parts[0]]
        for i in range(1, nbytes):
            img |= T[i][parts[i]]
        counts += img == masks
    return counts


def worker_count(requested: int | None = None) -> int:
    n = requested or os.cpu_count() or 1
    cap = os.environ.get(WORKERS_ENV)
    if cap:
        n = min(n, max(1, int(cap)))
    return max(1, n)


def exhaustive_candidates(H: PermGroup, lambdas, size: int = 6, workers: int | None = None) -> list[CandidateBlock]:
    """Every size-subset whose stabilizer order is |H|/(42λ) for some λ, in mask order."""
    masks = _all_masks(H.degree, size)
    elements = H.array.astype(np.int64)
    nw = worker_count(workers)
    if nw > 1:
        chunks = np.array_split(elements, nw)
        with ProcessPoolExecutor(nw) as pool:
            counts = sum(pool.map(_fix_counts, [masks] * nw, chunks))
    else:
        counts = _fix_counts(masks, elements)
    wanted = np.array(sorted(_block_stabilizer_orders(H, lambdas)), dtype=np.uint16)
    hits = np.flatnonzero(np.isin(counts, wanted))
    out = []
    for i in hits:
        m = int(masks[i])
        B = tuple(x for x in range(H.degree) if m >> x & 1)
        out.append(CandidateBlock(B, int(counts[i]), None))
    return out


def exhaustive_search(model: ReeModel, lambdas=(1, 2, 3, 6), group: str = "G", workers: int | None = None) -> SearchResult:
    H = _group(model, group)
    lambdas = tuple(sorted(lambdas))
    cands = exhaustive_candidates(H, lambdas, workers=workers)
    entries = _evaluate(H, cands, lambdas, group)
    return SearchResult(group, lambdas, "exhaustive", entries, {}, math.comb(H.degree, 6))


def name_entries(result: SearchResult, references: dict) -> None:
    """Attach names (e.g. "D1") to entries whose certificate matches a reference design."""
    certs = {canonical_form(D).certificate: name for name, D in references.items()}
    for e in result.entries:
        e.name = certs.get(e.certificate)
