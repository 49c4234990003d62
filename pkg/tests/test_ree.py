import itertools

from secantdesigns.perm import PermGroup, close, identify
from secantdesigns.ree import (
    SemilinearMap,
    all_semilinear_maps,
    collineation_permutation,
    sigma_elation_check,
    centralizer_orbits,
)


def test_semilinear_maps_enumerate_the_group():
    maps = all_semilinear_maps()
    assert len(maps) == 9 * 8 * 7 * 3 == 1512
    assert len(set(maps)) == 1512


def test_semilinear_composition_matches_evaluation():
    maps = all_semilinear_maps()
    for f, g in itertools.islice(itertools.product(maps[::97], maps[::89]), 400):
        h = f.then(g)
        for t in list(range(8)) + [None]:
            assert h(t) == g(f(t))


def test_orders(model):
    assert model.G.order == 1512
    assert model.Gder.order == 504
    assert model.Gder == model.G.derived_subgroup()
    assert close(model.Gder.generators).order == 504
    assert close(model.G.generators).order == 1512
    assert model.G.is_transitive() and model.G.is_primitive()[0]


def test_point_stabilizer_and_subdegrees(model):
    for x in range(36):
        Gx = model.G.stabilizer(x)
        assert Gx.order == 42
    Gl = model.G.stabilizer(0)
    assert identify(Gl) == "F42"
    assert sorted(map(len, Gl.orbits())) == [1, 14, 21]
    assert model.G.order == 36 * Gl.order


def test_three_transitive_on_the_conic(model):
    G9 = model.G9
    assert G9.order == 1512
    triples = {tuple(row[:3]) for row in G9.array.tolist()}
    orbit_of_012 = {(g(0), g(1), g(2)) for g in G9}
    assert len(orbit_of_012) == 9 * 8 * 7
    assert triples == orbit_of_012


def test_distinguished_elements(model):
    M = model
    assert M.eta.order() == 3 and M.eta in M.Gder
    assert M.gamma.order() == 3 and M.gamma not in M.Gder
    assert M.sigma.order() == 2
    assert M.maps[M.gamma.images] == SemilinearMap.make(1, 0, 0, 1, 1)
    CG = M.CGgamma
    assert M.eta == min(g for g in CG if g.order() == 3 and g in M.Gder)
    assert M.sigma == min(g for g in CG if g.order() == 2)


def test_centralizer_structure(model):
    M = model
    assert M.G.centralizer(M.gamma) == M.CGgamma
    assert M.CGgamma.order == 18 and identify(M.CGgamma) == "Z3xS3"
    gamma = close([M.gamma])
    assert {(a * b).images for a in gamma for b in M.CGeta} == {g.images for g in M.CGgamma}
    assert M.K == close([M.gamma, M.sigma]) and identify(M.K) == "Z6"


def test_eta_sigma_is_the_S3_in_the_centralizer(model):
    """<η, σ> is S3 and equals C_G'(γ); the full centralizer of η is larger."""
    M = model
    assert identify(M.CGeta) == "S3"
    assert M.CGeta == PermGroup([g for g in M.CGgamma if g in M.Gder], 36)
    assert M.sigma * M.eta != M.eta * M.sigma
    assert M.sigma not in M.true_CGeta
    assert M.true_CGeta.order == 27
    assert M.Gder.centralizer(M.eta).order == 9
    assert identify(M.true_CGeta) is None   # order 27 is not among the reference groups


def test_conic_points_F_W_P(model):
    M = model
    ca = lambda g: M.conic_action[g.images]
    gamma_fixed = {M.conic_pt(i) for i in ca(M.gamma).fixed_points()}
    assert gamma_fixed == {M.F, M.W, M.Wsigma}
    K_fixed = [p for p in M.conic.conic_points if all(M.act(g, p) == p for g in M.K)]
    assert K_fixed == [M.F]
    assert M.act(M.sigma, M.W) == M.Wsigma and M.act(M.sigma, M.Wsigma) == M.W
    assert M.P not in (M.F, M.W, M.Wsigma)
    assert (M.F, M.W, M.Wsigma, M.P) == (18, 0, 9, 29)


def test_conic_orbits_of_K_and_CGgamma(model):
    M = model
    rest = {p for p in M.conic.conic_points if p not in (M.F, M.W, M.Wsigma)}
    assert {M.act(g, M.P) for g in M.K} == rest
    assert {M.act(g, M.P) for g in M.CGgamma} == rest
    assert {M.act(g, M.F) for g in M.CGgamma} == {M.F, M.W, M.Wsigma}


def test_eta_fixes_no_secant_and_no_conic_point(model):
    M = model
    assert M.eta.fixed_points() == []
    assert M.conic_action[M.eta.images].fixed_points() == []


def test_secant_action_agrees_with_collineations(model):
    M = model
    plane, conic = M.conic.plane, M.conic
    for g in list(M.G.generators) + [M.eta, M.gamma, M.sigma]:
        pp = collineation_permutation(M, g)
        assert {pp(p) for p in conic.conic_points} == set(conic.conic_points)
        assert pp(conic.nucleus) == conic.nucleus
        for s in range(36):
            line = plane.lines[conic.secants[s]]
            image = sorted(pp(p) for p in line.points)
            assert image == list(plane.lines[conic.secants[g(s)]].points)


def test_sigma_is_an_elation_with_axis_FN(model):
    r = sigma_elation_check(model)
    assert r["is_involution"]
    assert r["axis_tangent"]
    assert r["fixes_axis_pointwise"] and r["fixes_lines_through_centre"]
    assert r["fixed_points_are_axis"]
    assert not r["centre_on_conic"]
    assert model.conic.plane.incident(r["centre"], r["axis"])


def test_orbit_report(model):
    rep = centralizer_orbits(model)
    assert sorted(rep.lengths("CGgamma")) == [3, 6, 9, 18]
    assert sorted(rep.lengths("CGeta")) == [3, 3, 3, 3, 6, 6, 6, 6]
    assert sorted(rep.lengths("K")) == [1, 2, 3, 6, 6, 6, 6, 6]
    by = lambda orbs: {o.label: set(o.members) for o in orbs}
    a, b, c = by(rep.CGgamma)["PP^γ"], by(rep.CGeta)["PP^γ"], by(rep.K)["P^γP"]
    assert a == b == c
    assert by(rep.CGgamma)["PP^σ"].__len__() == 9
    assert len(by(rep.CGgamma)["FP"]) == 18
    assert len(by(rep.CGgamma)["FW"]) == 3


def test_orbit_report_layout_is_stable(model):
    text = centralizer_orbits(model).format()
    assert text == centralizer_orbits(model).format()
    lines = text.splitlines()
    assert lines[0] == "C_G(γ)-orbits on the 36 secants"
    label, length, *members = lines[1].split()
    assert int(length) == len(members) and members == sorted(members, key=int)


def test_base_blocks(model):
    M = model
    P, g, s = M.P, M.gamma, M.sigma
    Pg, Ps = M.act(g, P), M.act(s, P)
    B1, B2, B3, B4 = M.base_blocks
    assert B1 == M.CGgamma.orbit(M.secant(P, Pg))
    assert B2 == M.K.orbit(M.secant(Pg, Ps))
    assert B3 == M.K.orbit(M.secant(P, M.W))
    assert B4 == M.K.orbit(M.secant(Ps, M.W))
    assert [len(B) for B in M.base_blocks] == [6] * 4
    assert M.base_blocks == (
        (14, 15, 21, 23, 29, 30),
        (9, 10, 11, 19, 27, 35),
        (2, 4, 6, 16, 24, 32),
        (3, 5, 7, 12, 20, 28),
    )


def test_base_block_stabilizers(model):
    M = model
    orders = [M.G.set_stabilizer(B).order for B in M.base_blocks]
    assert orders == [18, 6, 6, 6]
    assert M.G.set_stabilizer(M.base_blocks[0]) == M.CGgamma
    for B in M.base_blocks[1:]:
        assert M.G.set_stabilizer(B) == M.K
