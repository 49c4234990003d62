"""PΓL(2,8), alias the Ree group 2G2(3), acting on the 36 secants of the conic.

Group elements are semilinear maps of the projective line GF(8) ∪ {∞},
identified with the conic through t -> (1, t, t^2).  They are turned into
permutations of the 9 conic points and, via the secant <-> 2-subset
correspondence, of the 36 secants (numbered 0..35 in the order of
``ConicModel.secants``).

The distinguished elements are located by a fixed recipe:

* gamma: the Frobenius map t -> t^2 (order 3, outside the derived group);
* eta:   least element of order 3 in C_G(gamma) ∩ G';
* sigma: least involution of C_G(gamma);
* K = <gamma, sigma> (cyclic of order 6), ``CGeta`` = <eta, sigma>.

``CGeta`` is the S3 factor of C_G(gamma) = <gamma> x S3, which is also
C_{G'}(gamma).  It is *not* the full centralizer of eta in G: that one is
<eta-torus of order 9> x <gamma>, of order 27 (see ``ReeModel.true_CGeta``).
All orbit statements about "C_G(eta)" below refer to the S3.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property, lru_cache

from .field import GF8
from .geometry import ConicModel, default_conic, normalize
from .perm import Permutation, PermGroup, close, identify, is_frobenius_f42

INF = None
F8 = GF8


class ConstructionError(AssertionError):
    """An internal consistency check failed while building the group model."""


def _check(cond, msg):
    if not cond:
        raise ConstructionError(msg)


# -- semilinear maps of PG(1,8) --

def _frob(t, e):
    return t if t is INF else F8.frobenius(t, e)


@dataclass(frozen=True)
class SemilinearMap:
    """t -> (a*u + b) / (c*u + d) with u = t^(2^e); (a,b,c,d) normalized."""

    a: int
    b: int
    c: int
    d: int
    e: int = 0

    @classmethod
    def make(cls, a, b, c, d, e=0):
        m = F8.mul
        if m(a, d) ^ m(b, c) == 0:
            raise ValueError("singular Möbius matrix")
        return cls(*_normalize4(a, b, c, d), e % 3)

    def __call__(self, t):
        u = _frob(t, self.e)
        m = F8.mul
        if u is INF:
            return INF if self.c == 0 else F8.div(self.a, self.c)
        num = m(self.a, u) ^ self.b
        den = m(self.c, u) ^ self.d
        return INF if den == 0 else F8.div(num, den)

    def then(self, other: "SemilinearMap") -> "SemilinearMap":
        """The map 'apply self, then other'."""
        # other ∘ self = M2 ∘ φ^e2 ∘ M1 ∘ φ^e1 = M2 ∘ M1^(φ^e2) ∘ φ^(e1+e2)
        a1, b1, c1, d1 = (F8.frobenius(x, other.e) for x in (self.a, self.b, self.c, self.d))
        m = F8.mul
        a = m(other.a, a1) ^ m(other.b, c1)
        b = m(other.a, b1) ^ m(other.b, d1)
        c = m(other.c, a1) ^ m(other.d, c1)
        d = m(other.c, b1) ^ m(other.d, d1)
        return SemilinearMap.make(a, b, c, d, self.e + other.e)

    def collineation_matrix(self):
        """3x3 matrix A with point x -> A · frob^e(x) on PG(2,8).

        On (s^2, st, t^2) the substitution s' = c t + d s, t' = a t + b s is
        linear in characteristic 2, which gives the rows below.
        """
        a, b, c, d = self.a, self.b, self.c, self.d
        m = F8.mul
        sq = lambda x: m(x, x)
        return (
            (sq(d), 0, sq(c)),
            (m(b, d), m(a, d) ^ m(b, c), m(a, c)),
            (sq(b), 0, sq(a)),
        )

    def act_on_point(self, coords):
        A = self.collineation_matrix()
        x = tuple(F8.frobenius(v, self.e) for v in coords)
        m = F8.mul
        return normalize(tuple(m(r[0], x[0]) ^ m(r[1], x[1]) ^ m(r[2], x[2]) for r in A))

    def __str__(self):
        return f"t -> ({self.a}·u+{self.b})/({self.c}·u+{self.d}), u = t^{1 << self.e}"


def _normalize4(a, b, c, d):
    for x in (a, b, c, d):
        if x:
            s = F8.inv(x)
            return tuple(F8.mul(s, y) for y in (a, b, c, d))
    raise ValueError("zero matrix")


def all_semilinear_maps() -> list[SemilinearMap]:
    """Every element of PΓL(2,8), enumerated directly (1512 maps)."""
    m = F8.mul
    seen = set()
    for a, b, c, d in itertools.product(range(8), repeat=4):
        if m(a, d) ^ m(b, c) == 0:
            continue
        seen.add(_normalize4(a, b, c, d))
    return [SemilinearMap(*q, e) for q in sorted(seen) for e in range(3)]


# -- the model --

CONIC_PARAMS = list(range(8)) + [INF]


def conic_permutation(g: SemilinearMap) -> Permutation:
    """Action on conic positions 0..8 (position 8 is t = ∞)."""
    pos = {t: i for i, t in enumerate(CONIC_PARAMS)}
    return Permutation([pos[g(t)] for t in CONIC_PARAMS], tag=g.e)


def secant_pairs(conic: ConicModel) -> list[tuple[int, int]]:
    """Conic positions of the two points on each secant, in secant order."""
    pos = {p: i for i, p in enumerate(conic.conic_points)}
    return [tuple(sorted(pos[p] for p in conic.secant_to_pair[s])) for s in conic.secants]


def lift_to_secants(cperm: Permutation, pairs) -> Permutation:
    idx = {pr: i for i, pr in enumerate(pairs)}
    return Permutation(
        [idx[tuple(sorted((cperm(a), cperm(b))))] for a, b in pairs], tag=cperm.tag
    )


GENERATORS = {
    "t+1": SemilinearMap.make(1, 1, 0, 1),
    "w*t": SemilinearMap.make(F8.primitive_element(), 0, 0, 1),
    "1/t": SemilinearMap.make(0, 1, 1, 0),
    "t^2": SemilinearMap.make(1, 0, 0, 1, 1),
}


@dataclass(frozen=True, eq=False)
class ReeModel:
    conic: ConicModel
    G: PermGroup
    Gder: PermGroup
    eta: Permutation
    gamma: Permutation
    sigma: Permutation
    K: PermGroup
    CGgamma: PermGroup
    CGeta: PermGroup
    F: int
    W: int
    Wsigma: int
    P: int
    maps: dict = field(repr=False)          # secant-permutation images -> SemilinearMap
    conic_action: dict = field(repr=False)  # secant-permutation images -> conic Permutation

    # -- conic point helpers (points given as PG(2,8) point indices) --

    def conic_pos(self, point: int) -> int:
        return self.conic.conic_points.index(point)

    def conic_pt(self, pos: int) -> int:
        return self.conic.conic_points[pos]

    def act(self, g: Permutation, point: int) -> int:
        """Image of a conic point (PG(2,8) index) under a group element."""
        return self.conic_pt(self.conic_action[g.images](self.conic_pos(point)))

    def secant(self, p: int, q: int) -> int:
        """Secant number (0..35) of the line through conic points p and q."""
        return self.conic.secants.index(self.conic.secant_through(p, q))

    def secant_points(self, s: int) -> frozenset:
        return self.conic.secant_to_pair[self.conic.secants[s]]

    @cached_property
    def point_labels(self) -> dict[int, str]:
        """Labels of the 9 conic points in orbit notation."""
        g, s = self.gamma, self.sigma
        P = self.P
        Ps = self.act(s, P)
        labels = {
            self.F: "F", self.W: "W", self.Wsigma: "W^σ",
            P: "P", self.act(g, P): "P^γ", self.act(g * g, P): "P^γ²",
            Ps: "P^σ", self.act(g, Ps): "P^σγ", self.act(g * g, Ps): "P^σγ²",
        }
        _check(len(labels) == 9, "conic point labels are not distinct")
        return labels

    def secant_label(self, s: int) -> str:
        order = ["F", "W", "W^σ", "P", "P^γ", "P^γ²", "P^σ", "P^σγ", "P^σγ²"]
        a, b = sorted(self.secant_points(s), key=lambda p: order.index(self.point_labels[p]))
        return self.point_labels[a] + self.point_labels[b]

    @cached_property
    def G9(self) -> PermGroup:
        """G acting on the 9 conic positions."""
        return PermGroup(self.conic_action.values(), 9)

    @cached_property
    def true_CGeta(self) -> PermGroup:
        """The full centralizer of eta in G (order 27)."""
        return self.G.centralizer(self.eta)

    @cached_property
    def base_blocks(self) -> tuple[tuple[int, ...], ...]:
        return base_blocks(self)


def build_ree(conic: ConicModel | None = None) -> ReeModel:
    conic = conic or default_conic()
    pairs = secant_pairs(conic)
    _check(len(pairs) == 36, "expected 36 secants")

    gens = []
    for g in GENERATORS.values():
        gens.append(lift_to_secants(conic_permutation(g), pairs))
    G = close(gens)

    maps, conic_action = {}, {}
    for g in all_semilinear_maps():
        cp = conic_permutation(g)
        sp = lift_to_secants(cp, pairs)
        _check(sp.images not in maps, "secant action is not faithful")
        maps[sp.images] = g
        conic_action[sp.images] = cp
    _check(G.order == 1512 == len(maps), f"|G| = {G.order}, expected 1512")
    _check(all(g.images in maps for g in G), "closure escapes PΓL(2,8)")
    _check(all(maps[g.images].e == g.tag for g in G), "Frobenius tags are inconsistent")

    Gder = PermGroup([g for g in G if g.tag == 0], 36)
    _check(Gder.order == 504, f"|G'| = {Gder.order}")

    gamma = G.element(lift_to_secants(conic_permutation(GENERATORS["t^2"]), pairs).images)
    _check(gamma.order() == 3 and gamma not in Gder, "gamma must have order 3 outside G'")
    CGgamma = G.centralizer(gamma)
    eta = min(g for g in CGgamma if g.order() == 3 and g in Gder)
    sigma = min(g for g in CGgamma if g.order() == 2)
    K = close([gamma, sigma])
    CGeta = close([eta, sigma])
    _check(CGgamma.order == 18 and identify(CGgamma) == "Z3xS3", "C_G(gamma) is not Z3 x S3")
    _check(CGeta.order == 6 and identify(CGeta) == "S3", "<eta, sigma> is not S3")
    _check(CGeta == PermGroup([g for g in CGgamma if g in Gder], 36), "<eta, sigma> != C_G'(gamma)")
    _check(K.order == 6 and identify(K) == "Z6", "K is not cyclic of order 6")
    gamma_group = close([gamma])
    _check(
        {(a * b).images for a in gamma_group for b in CGeta} == {g.images for g in CGgamma}
        and all(a * b == b * a for a in gamma_group for b in CGeta),
        "C_G(gamma) is not <gamma> x <eta, sigma>",
    )

    ca = lambda g: conic_action[g.images]
    fixed_gamma = [conic.conic_points[i] for i in ca(gamma).fixed_points()]
    _check(len(fixed_gamma) == 3, "gamma must fix 3 conic points")
    fixed_K = [p for p in fixed_gamma if conic.conic_points.index(p) in ca(sigma).fixed_points()]
    _check(len(fixed_K) == 1, "K must fix exactly one conic point")
    F = fixed_K[0]
    W = min(p for p in fixed_gamma if p != F)
    Wsigma = conic.conic_points[ca(sigma)(conic.conic_points.index(W))]
    _check(Wsigma != W and Wsigma in fixed_gamma, "sigma must swap W and W^sigma")
    P = min(p for p in conic.conic_points if p not in (F, W, Wsigma))

    model = ReeModel(
        conic=conic, G=G, Gder=Gder, eta=eta, gamma=gamma, sigma=sigma, K=K,
        CGgamma=CGgamma, CGeta=CGeta, F=F, W=W, Wsigma=Wsigma, P=P,
        maps=maps, conic_action=conic_action,
    )
    _verify_model(model)
    return model


def _verify_model(M: ReeModel) -> None:
    G = M.G
    _check(G.is_transitive(), "G is not transitive on the secants")
    _check(G.is_primitive()[0], "G is not primitive on the secants")
    _check(not M.eta.fixed_points(), "eta fixes a secant")
    _check(not M.conic_action[M.eta.images].fixed_points(), "eta fixes a conic point")
    six = [p for p in M.conic.conic_points if p not in (M.F, M.W, M.Wsigma)]
    pos = lambda pts: sorted(M.conic_pos(p) for p in pts)
    K9 = PermGroup([M.conic_action[g.images] for g in M.K], 9)
    C9 = PermGroup([M.conic_action[g.images] for g in M.CGgamma], 9)
    _check(K9.orbit(M.conic_pos(M.P)) == tuple(pos(six)), "the six points are not one K-orbit")
    _check(C9.orbit(M.conic_pos(M.P)) == tuple(pos(six)), "the six points are not one C_G(gamma)-orbit")
    _check(C9.orbit(M.conic_pos(M.F)) == tuple(pos([M.F, M.W, M.Wsigma])), "{F, W, W^sigma} is not a C_G(gamma)-orbit")
    # secant action agrees with the collineation action on line coordinates
    plane = M.conic.plane
    for g in G.generators:
        sm = M.maps[g.images]
        for i, s in enumerate(M.conic.secants):
            pts = plane.lines[s].points[:2]
            imgs = [plane.point_index[sm.act_on_point(plane.coords[p])] for p in pts]
            _check(plane.join(*imgs) == M.conic.secants[g(i)], "secant action disagrees with collineations")


def collineation_permutation(M: ReeModel, g: Permutation) -> Permutation:
    """Action of a group element on the 73 points of PG(2,8)."""
    plane = M.conic.plane
    sm = M.maps[g.images]
    return Permutation([plane.point_index[sm.act_on_point(c)] for c in plane.coords])


def sigma_elation_check(M: ReeModel) -> dict:
    """Check that sigma is an elation with axis FN and centre W^σW ∩ FN."""
    plane = M.conic.plane
    pp = collineation_permutation(M, M.sigma)
    axis = plane.join(M.F, M.conic.nucleus)
    centre = plane.meet(plane.join(M.W, M.Wsigma), axis)
    fixes_axis = all(pp(p) == p for p in plane.lines[axis].points)
    lines_through_centre_fixed = all(
        {pp(p) for p in plane.lines[ln].points} == set(plane.lines[ln].points)
        for ln in plane.lines_through[centre]
    )
    fixed_points = pp.fixed_points()
    return {
        "axis": axis,
        "centre": centre,
        "axis_tangent": axis in M.conic.tangents,
        "centre_on_conic": centre in M.conic.conic_points,
        "fixes_axis_pointwise": fixes_axis,
        "fixes_lines_through_centre": lines_through_centre_fixed,
        "fixed_points_are_axis": sorted(fixed_points) == sorted(plane.lines[axis].points),
        "is_involution": M.sigma.order() == 2,
    }


# -- orbits on the secants --

@dataclass(frozen=True)
class LabeledOrbit:
    group: str
    label: str
    members: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.members)


NAMED_REPRESENTATIVES = {
    "C_G(γ)": ["PP^γ", "FW", "FP", "PP^σ"],
    "C_G(η)": ["PP^γ", "FP", "FP^γ", "FP^γ²"],
    "K": ["W^σW", "WF", "P^σP", "PF", "PW", "P^σW", "P^γP", "P^γP^σ"],
}


def _named_secant(M: ReeModel, name: str) -> int:
    inv = {v: k for k, v in M.point_labels.items()}
    # split "AB" into two point labels
    for i in range(1, len(name)):
        a, b = name[:i], name[i:]
        if a in inv and b in inv:
            return M.secant(inv[a], inv[b])
    raise KeyError(name)


def _labeled_orbits(M: ReeModel, group_name: str, H: PermGroup) -> list[LabeledOrbit]:
    named = {_named_secant(M, n): n for n in NAMED_REPRESENTATIVES[group_name]}
    out = []
    for orb in H.orbits():
        hits = [named[s] for s in orb if s in named]
        label = hits[0] if hits else M.secant_label(orb[0])
        out.append(LabeledOrbit(group_name, label, orb))
    return sorted(out, key=lambda o: (o.length, o.members))


@dataclass(frozen=True)
class CentralizerOrbitReport:
    CGgamma: list[LabeledOrbit]
    CGeta: list[LabeledOrbit]
    K: list[LabeledOrbit]

    def lengths(self, which: str) -> list[int]:
        return [o.length for o in getattr(self, which)]

    def format(self) -> str:
        rows = []
        for title, orbs in (("C_G(γ)", self.CGgamma), ("C_G(η)", self.CGeta), ("K", self.K)):
            rows.append(f"{title}-orbits on the 36 secants")
            for o in orbs:
                rows.append(f"  {o.label:<8} {o.length:>3}  " + " ".join(map(str, o.members)))
        return "\n".join(rows) + "\n"


def centralizer_orbits(M: ReeModel) -> CentralizerOrbitReport:
    rep = CentralizerOrbitReport(
        _labeled_orbits(M, "C_G(γ)", M.CGgamma),
        _labeled_orbits(M, "C_G(η)", M.CGeta),
        _labeled_orbits(M, "K", M.K),
    )
    six = lambda orbs: [o for o in orbs if o.length == 6]
    _check(len(six(rep.CGgamma)) == 1, "C_G(gamma) must have exactly one orbit of length 6")
    _check(len(six(rep.CGeta)) == 4, "C_G(eta) must have exactly four orbits of length 6")
    _check(len(six(rep.K)) == 5, "K must have exactly five orbits of length 6")
    _check(
        {o.label for o in six(rep.CGeta)} == {"PP^γ", "FP", "FP^γ", "FP^γ²"},
        "length-6 C_G(eta)-orbits are not the named ones",
    )
    _check(
        {o.label for o in six(rep.K)} == {"P^γP", "P^γP^σ", "PW", "P^σW", "PF"},
        "length-6 K-orbits are not the named ones",
    )
    ell = M.secant(M.P, M.act(M.gamma, M.P))
    a = set(M.CGgamma.orbit(ell))
    b = set(M.CGeta.orbit(ell))
    c = set(M.K.orbit(ell))
    _check(a == b == c, "(PP^γ)^C_G(γ), (PP^γ)^C_G(η), (P^γP)^K do not coincide")
    return rep


def base_blocks(M: ReeModel) -> tuple[tuple[int, ...], ...]:
    """B1 = (PP^γ)^C_G(γ), B2 = (P^γP^σ)^K, B3 = (PW)^K, B4 = (P^σW)^K."""
    P, g, s = M.P, M.gamma, M.sigma
    Pg, Ps = M.act(g, P), M.act(s, P)
    B1 = M.CGgamma.orbit(M.secant(P, Pg))
    B2 = M.K.orbit(M.secant(Pg, Ps))
    B3 = M.K.orbit(M.secant(P, M.W))
    B4 = M.K.orbit(M.secant(Ps, M.W))
    blocks = (B1, B2, B3, B4)
    _check(all(len(B) == 6 for B in blocks), "base blocks must have 6 secants")
    return blocks


@lru_cache(maxsize=None)
def default_model() -> ReeModel:
    return build_ree(default_conic())


def example_designs(M: ReeModel | None = None) -> dict:
    """D1..D4: the G-orbits of the base blocks B1..B4, keyed 1..4."""
    from .design import orbit_design

    M = M or default_model()
    out = {}
    for i, B in enumerate(M.base_blocks, start=1):
        label = f"B{i}"
        out[i] = orbit_design(M.G, B, provenance={"base_block": list(B), "group": "G", "name": f"D{i}", "label": label})
    return out
