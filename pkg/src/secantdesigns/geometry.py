"""PG(2,8) with the conic x1^2 = x0*x2, its nucleus, and the secant lines."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property, lru_cache

from .field import GF8, Field


class NotOnConicError(ValueError):
    pass


class SamePointError(ValueError):
    pass


@dataclass(frozen=True)
class ProjPoint:
    coords: tuple[int, int, int]
    index: int


@dataclass(frozen=True)
class ProjLine:
    coeffs: tuple[int, int, int]
    index: int
    points: tuple[int, ...]


def normalize(v, field: Field = GF8) -> tuple[int, int, int]:
    """Scale so the first nonzero coordinate is 1."""
    for c in v:
        if c:
            s = field.inv(c)
            return tuple(field.mul(s, x) for x in v)
    raise ValueError("the zero vector is not a projective point")


def dot(u, v, field: Field = GF8) -> int:
    acc = 0
    for a, b in zip(u, v):
        acc ^= field.mul(a, b)
    return acc


def cross(u, v, field: Field = GF8) -> tuple[int, int, int]:
    m = field.mul
    return (
        m(u[1], v[2]) ^ m(u[2], v[1]),
        m(u[2], v[0]) ^ m(u[0], v[2]),
        m(u[0], v[1]) ^ m(u[1], v[0]),
    )


class Plane:
    """Points and lines of PG(2,q) indexed by lexicographic order of their
    normalized coordinates (resp. dual coordinates)."""

    def __init__(self, field: Field = GF8):
        self.field = field
        q = field.order
        triples = sorted(
            {normalize(v, field) for v in itertools.product(range(q), repeat=3) if any(v)}
        )
        self.coords = triples
        self.point_index = {c: i for i, c in enumerate(triples)}
        self.points = [ProjPoint(c, i) for i, c in enumerate(triples)]
        self.lines = []
        for i, c in enumerate(triples):
            on = tuple(j for j, p in enumerate(triples) if dot(c, p, field) == 0)
            self.lines.append(ProjLine(c, i, on))
        self.line_index = {c: i for i, c in enumerate(triples)}
        self.lines_through = [[] for _ in triples]
        for ln in self.lines:
            for p in ln.points:
                self.lines_through[p].append(ln.index)
        self._incident = [set(ln.points) for ln in self.lines]

    @property
    def order(self) -> int:
        return self.field.order

    def incident(self, point: int, line: int) -> bool:
        return point in self._incident[line]

    def join(self, p: int, q: int) -> int:
        """Index of the line through two distinct points."""
        if p == q:
            raise SamePointError(f"join of a point with itself ({p})")
        return self.line_index[normalize(cross(self.coords[p], self.coords[q], self.field), self.field)]

    def meet(self, l1: int, l2: int) -> int:
        """Index of the common point of two distinct lines."""
        if l1 == l2:
            raise SamePointError(f"meet of a line with itself ({l1})")
        c1, c2 = self.lines[l1].coeffs, self.lines[l2].coeffs
        return self.point_index[normalize(cross(c1, c2, self.field), self.field)]

    def dump(self) -> str:
        """Incidence dump: one row per line, the line index then its points."""
        return "".join(
            f"{ln.index} " + " ".join(map(str, ln.points)) + "\n" for ln in self.lines
        )


@dataclass(frozen=True, eq=False)
class ConicModel:
    plane: Plane
    conic_points: tuple[int, ...]   # ordered by parameter: t = 0..7 then infinity
    nucleus: int
    secants: tuple[int, ...]
    tangents: tuple[int, ...]
    externals: tuple[int, ...]
    secant_to_pair: dict            # secant line index -> frozenset of two conic point indices

    def secant_through(self, p: int, q: int) -> int:
        if p == q:
            raise SamePointError(f"a secant needs two distinct conic points, got {p} twice")
        for x in (p, q):
            if x not in self.conic_points:
                raise NotOnConicError(f"point {x} is not on the conic")
        return self._pair_to_secant[frozenset((p, q))]

    @cached_property
    def _pair_to_secant(self) -> dict:
        return {pair: s for s, pair in self.secant_to_pair.items()}

    def param_of(self, point: int):
        """Conic parameter of a conic point: an element of GF(8), or None for infinity."""
        i = self.conic_points.index(point)
        return i if i < self.plane.order else None

    def point_of(self, t) -> int:
        return self.conic_points[self.plane.order if t is None else t]


def conic_coords(t, field: Field = GF8) -> tuple[int, int, int]:
    if t is None:
        return (0, 0, 1)
    return (1, t, field.mul(t, t))


def build_conic(plane: Plane) -> ConicModel:
    f = plane.field
    params = list(range(f.order)) + [None]
    conic = tuple(plane.point_index[conic_coords(t, f)] for t in params)
    nucleus = plane.point_index[(0, 1, 0)]
    on_conic = set(conic)
    secants, tangents, externals = [], [], []
    secant_to_pair = {}
    for ln in plane.lines:
        meet = [p for p in ln.points if p in on_conic]
        if len(meet) == 2:
            secants.append(ln.index)
            secant_to_pair[ln.index] = frozenset(meet)
        elif len(meet) == 1:
            tangents.append(ln.index)
        elif not meet:
            externals.append(ln.index)
        else:
            raise AssertionError(f"line {ln.index} meets the conic in {len(meet)} points")
    return ConicModel(
        plane=plane,
        conic_points=conic,
        nucleus=nucleus,
        secants=tuple(secants),
        tangents=tuple(tangents),
        externals=tuple(externals),
        secant_to_pair=secant_to_pair,
    )


@lru_cache(maxsize=None)
def default_plane() -> Plane:
    return Plane(GF8)


@lru_cache(maxsize=None)
def default_conic() -> ConicModel:
    return build_conic(default_plane())
