"""Block designs as sorted lists of sorted blocks, plus the checks run on them."""

from __future__ import annotations

import itertools
import json
from dataclasses import asdict, dataclass, field

import numpy as np

from .perm import PermGroup


class DesignError(ValueError):
    pass


class RepeatedBlockError(DesignError):
    pass


class NotA2DesignError(DesignError):
    """Pair coverage (or replication) is not constant.

    ``witness`` is the offending pair (or point) and ``count`` its number
    of blocks; ``expected`` is the value seen for the first pair (or point).
    """

    def __init__(self, msg, witness=None, count=None, expected=None):
        super().__init__(msg)
        self.witness = witness
        self.count = count
        self.expected = expected


class NotInvariantError(DesignError):
    pass


class NotTacticalError(DesignError):
    pass


@dataclass(frozen=True)
class DesignParams:
    v: int
    b: int
    r: int
    k: int
    lam: int

    def __str__(self):
        return f"2-({self.v},{self.k},{self.lam}), b={self.b}, r={self.r}"

    def satisfies_counting_identities(self) -> bool:
        return self.b * self.k == self.v * self.r and self.r * (self.k - 1) == self.lam * (self.v - 1)


@dataclass(frozen=True)
class Design:
    v: int
    blocks: tuple[tuple[int, ...], ...]
    provenance: dict = field(default=None, compare=False, hash=False)

    @classmethod
    def from_blocks(cls, v: int, blocks, provenance=None) -> "Design":
        bl = [tuple(sorted(B)) for B in blocks]
        if len(set(bl)) != len(bl):
            raise RepeatedBlockError("repeated block; only simple designs are supported")
        for B in bl:
            if len(set(B)) != len(B):
                raise DesignError(f"block {B} has a repeated point")
            if B and (B[0] < 0 or B[-1] >= v):
                raise DesignError(f"block {B} is out of range for v={v}")
        if len({len(B) for B in bl}) > 1:
            raise DesignError("blocks have different sizes")
        return cls(v, tuple(sorted(bl)), provenance)

    @property
    def b(self) -> int:
        return len(self.blocks)

    @property
    def k(self) -> int:
        return len(self.blocks[0]) if self.blocks else 0

    def incidence(self) -> np.ndarray:
        """v x b 0/1 matrix."""
        M = np.zeros((self.v, self.b), dtype=np.int32)
        for j, B in enumerate(self.blocks):
            M[list(B), j] = 1
        return M

    def relabel(self, perm) -> "Design":
        """Image under a point map given as a sequence (point i -> perm[i])."""
        return Design.from_blocks(self.v, ([perm[x] for x in B] for B in self.blocks), self.provenance)

    def flags(self) -> int:
        return self.b * self.k


def orbit_design(G: PermGroup, base, provenance=None) -> Design:
    """Blocks are the G-orbit of ``base`` under the setwise action."""
    base = tuple(sorted(base))
    blocks = G.set_orbit(base)
    if G.order % len(blocks) or G.order // len(blocks) != G.set_stabilizer(base).order:
        raise AssertionError("orbit-stabilizer failed for the block orbit")
    return Design.from_blocks(G.degree, blocks, provenance)


def verify_2design(D: Design) -> DesignParams:
    """Exhaustive pair count; raises NotA2DesignError with a witness on failure."""
    if D.b == 0:
        raise NotA2DesignError("no blocks")
    M = D.incidence()
    pairs = M @ M.T
    iu = np.triu_indices(D.v, 1)
    cover = pairs[iu]
    if (cover != cover[0]).any():
        i = int(np.flatnonzero(cover != cover[0])[0])
        w = (int(iu[0][i]), int(iu[1][i]))
        raise NotA2DesignError(
            f"pair {w} lies on {cover[i]} blocks, pair (0, 1) on {cover[0]}", w, int(cover[i]), int(cover[0])
        )
    # constant pair counts force constant replication once k >= 2; k = 1 still needs the check
    rep = M.sum(axis=1)
    if (rep != rep[0]).any():
        x = int(np.flatnonzero(rep != rep[0])[0])
        raise NotA2DesignError(f"point {x} lies on {rep[x]} blocks, point 0 on {rep[0]}", (x,), int(rep[x]), int(rep[0]))
    params = DesignParams(D.v, D.b, int(rep[0]), D.k, int(cover[0]))
    if not params.satisfies_counting_identities():
        raise AssertionError(f"counting identities fail for {params}")
    return params


def check_invariant(G: PermGroup, D: Design) -> None:
    blocks = set(D.blocks)
    for g in G.generators:
        for B in D.blocks:
            img = tuple(sorted(g(x) for x in B))
            if img not in blocks:
                raise NotInvariantError(f"generator maps block {B} to {img}, which is not a block")


def verify_flag_transitive(G: PermGroup, D: Design) -> bool:
    """True iff G is transitive on the flags (x, B), x in B."""
    if G.degree != D.v:
        raise DesignError(f"group degree {G.degree} != v = {D.v}")
    check_invariant(G, D)
    if G.order < D.flags():
        return False
    B = D.blocks[0]
    if len(G.set_orbit(B)) != D.b:
        return False
    return G.set_stabilizer(B).is_transitive(B)


@dataclass(frozen=True)
class TacticalRecord:
    point_orbit: tuple[int, ...]
    block_orbit: tuple[tuple[int, ...], ...]
    through_x: bool          # blocks of this orbit contain the fixed point x
    v: int
    b: int
    k: int
    r: int

    @property
    def params(self) -> tuple[int, int, int, int]:
        return (self.v, self.b, self.k, self.r)


def tactical_decomposition(Gx: PermGroup, D: Design, x: int) -> list[TacticalRecord]:
    """Intersection numbers between Gx-orbits on points (other than {x}) and
    Gx-orbits on blocks.  Each pair is a tactical configuration, so constancy
    is asserted rather than assumed."""
    if any(g(x) != x for g in Gx.generators):
        raise DesignError(f"the group does not fix point {x}")
    check_invariant(Gx, D)
    point_orbits = [o for o in Gx.orbits() if o != (x,)]
    block_orbits = []
    seen = set()
    for B in D.blocks:
        if B in seen:
            continue
        orb = Gx.set_orbit(B)
        seen.update(orb)
        block_orbits.append(tuple(orb))
    out = []
    for Delta in point_orbits:
        dset = set(Delta)
        for borb in block_orbits:
            ks = {len(dset.intersection(B)) for B in borb}
            rs = {sum(y in B for B in borb) for y in Delta}
            if len(ks) != 1 or len(rs) != 1:
                raise NotTacticalError(f"orbit pair ({Delta[0]}, {borb[0]}) is not tactical: k in {ks}, r in {rs}")
            k1, r1 = ks.pop(), rs.pop()
            out.append(TacticalRecord(Delta, borb, x in borb[0], len(Delta), len(borb), k1, r1))
    return out


def export_text(D: Design) -> str:
    """``v b k`` then one block per line."""
    return f"{D.v} {D.b} {D.k}\n" + "".join(" ".join(map(str, B)) + "\n" for B in D.blocks)


def parse_text(text: str) -> Design:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    v, b, k = map(int, lines[0].split())
    blocks = [tuple(map(int, ln.split())) for ln in lines[1:]]
    if len(blocks) != b or any(len(B) != k for B in blocks):
        raise DesignError("header does not match the block list")
    return Design.from_blocks(v, blocks)


def export_json(D: Design, params: DesignParams | None = None) -> str:
    doc = {
        "v": D.v,
        "blocks": [list(B) for B in D.blocks],
        "params": asdict(params) if params else None,
        "provenance": D.provenance,
    }
    return json.dumps(doc, sort_keys=True, ensure_ascii=False) + "\n"


def parse_json(text: str) -> Design:
    doc = json.loads(text)
    return Design.from_blocks(doc["v"], doc["blocks"], doc.get("provenance"))


def pair_coverage_brute(D: Design) -> dict:
    """Pair -> number of blocks, counted block by block (independent of verify_2design)."""
    count = {pr: 0 for pr in itertools.combinations(range(D.v), 2)}
    for B in D.blocks:
        for pr in itertools.combinations(B, 2):
            count[pr] += 1
    return count
