"""Acceptance suite: one PASS/FAIL line per criterion, with the runtime limits.

Run alone with ``pytest tests/test_acceptance.py -v`` or
``python tests/test_acceptance.py``.  Criterion 6 includes the exhaustive
C(36,6) scan (a few minutes on one CPU); deselect it with ``-m "not slow"``.
"""

from __future__ import annotations

import itertools
import random
import sys
import time
from contextlib import contextmanager

import pytest

from secantdesigns import design as dz
from secantdesigns import iso, search
from secantdesigns.field import Field
from secantdesigns.geometry import Plane, build_conic
from secantdesigns.perm import close, identify, is_frobenius_f42
from secantdesigns.ree import build_ree, default_model, example_designs, centralizer_orbits


@pytest.fixture
def criterion(capsys):
    """Time a block, assert the limit, and print one PASS/FAIL line."""

    @contextmanager
    def run(number, title, limit):
        status, detail = "FAIL", ""
        t0 = time.perf_counter()
        notes = []
        try:
            yield notes
            elapsed = time.perf_counter() - t0
            assert elapsed < limit, f"took {elapsed:.2f} s, limit {limit} s"
            status = "PASS"
        except BaseException as e:
            detail = f" [{type(e).__name__}: {e}]"
            raise
        finally:
            elapsed = time.perf_counter() - t0
            extra = f" {'; '.join(notes)}" if notes else ""
            bound = f", limit {limit:g} s" if limit != float("inf") else ""
            with capsys.disabled():
                print(f"\ncriterion {number} {status}: {title} ({elapsed:.2f} s{bound}){extra}{detail}")

    return run


def test_criterion_1_geometry(criterion):
    with criterion(1, "PG(2,8), conic, line classes", 1.0):
        conic = build_conic(Plane(Field(3, 0b1011)))
        plane = conic.plane
        assert len(plane.points) == 73 and len(plane.lines) == 73
        assert len(conic.conic_points) == 9
        assert len(conic.secants) == 36
        assert len(conic.tangents) == 9
        assert all(plane.incident(conic.nucleus, t) for t in conic.tangents)
        assert len(conic.externals) == 28


def test_criterion_2_group(criterion):
    with criterion(2, "G on the 36 secants", 1.0):
        M = build_ree(build_conic(Plane(Field(3, 0b1011))))
        G = M.G
        assert G.order == 1512 and M.Gder.order == 504
        assert G.is_transitive()
        assert G.is_primitive() == (True, None)
        Gl = G.stabilizer(0)
        assert Gl.order == 42
        assert is_frobenius_f42(Gl) and identify(Gl) == "F42"
        assert Gl.center().order == 1
        z7 = close([next(g for g in Gl if g.order() == 7)])
        assert Gl.is_normal(z7)
        assert sorted(len(o) for o in Gl.orbits()) == [1, 14, 21]


def test_criterion_3_orbit_tables(criterion):
    M = default_model()
    with criterion(3, "C_G(γ), C_G(η), K orbits on the secants", 1.0):
        rep = centralizer_orbits(M)
        cg = sorted(rep.lengths("CGgamma"))
        assert cg == [3, 6, 9, 18] and cg.count(6) == 1
        assert sorted(rep.lengths("CGeta")).count(6) == 4
        kl = sorted(rep.lengths("K"))
        assert kl == [1, 2, 3, 6, 6, 6, 6, 6] and kl.count(6) == 5
        ell = M.secant(M.P, M.act(M.gamma, M.P))
        assert set(M.CGgamma.orbit(ell)) == set(M.CGeta.orbit(ell)) == set(M.K.orbit(ell))


def test_criterion_4_example_designs(criterion):
    M = default_model()
    with criterion(4, "D1..D4 parameters, flag-transitivity, tactical decompositions", 5.0):
        D = example_designs(M)
        p = {i: dz.verify_2design(D[i]) for i in D}
        assert (p[1].v, p[1].k, p[1].lam, p[1].b, p[1].r) == (36, 6, 2, 84, 14)
        for i in (2, 3, 4):
            assert (p[i].v, p[i].k, p[i].lam, p[i].b, p[i].r) == (36, 6, 6, 252, 42)
        assert all(dz.verify_flag_transitive(M.G, D[i]) for i in D)
        assert dz.verify_flag_transitive(M.Gder, D[1])
        Gx = M.G.stabilizer(0)

        def through(Di):
            return {r.params for r in dz.tactical_decomposition(Gx, Di, 0) if r.through_x}

        assert through(D[1]) == {(14, 14, 2, 2), (21, 14, 3, 2)}
        for i in (2, 3, 4):
            assert through(D[i]) == {(14, 42, 2, 6), (21, 42, 3, 6)}


def test_criterion_5_automorphisms_and_isomorphism(criterion):
    M = default_model()
    D = example_designs(M)
    with criterion(5, "|Aut(Di)| = 1512, non-isomorphism", 60.0):
        for i in D:
            assert iso.automorphism_group(D[i]).order == 1512
        for i, j in itertools.combinations((2, 3, 4), 2):
            assert not iso.are_isomorphic(D[i], D[j])[0]
        for i in (2, 3, 4):
            assert not iso.are_isomorphic(D[1], D[i])[0]


def _check_catalog(res, D, expect):
    certs = {iso.canonical_form(D[i]).certificate: i for i in D}
    found = sorted((e.lam, certs.get(e.certificate)) for e in res.entries)
    assert found == expect, found


@pytest.mark.slow
def test_criterion_6_completeness(criterion):
    M = default_model()
    D = example_designs(M)
    with criterion(6, "completeness search, pruned (< 60 s) and exhaustive", 1800.0) as notes:
        t0 = time.perf_counter()
        res = search.completeness_search(M)
        assert res.summary() == "4 classes: λ=2 ×1, λ=6 ×3"
        _check_catalog(res, D, [(2, 1), (6, 2), (6, 3), (6, 4)])
        assert res.by_lambda()[1] == 0 and res.by_lambda()[3] == 0
        resp = search.gprime_completeness_search(M)
        _check_catalog(resp, D, [(2, 1)])
        pruned = time.perf_counter() - t0
        notes.append(f"pruned {pruned:.2f} s")
        assert pruned < 60.0, f"pruned search took {pruned:.2f} s"

        t1 = time.perf_counter()
        ex = search.exhaustive_search(M)
        assert [e.certificate for e in ex.entries] == [e.certificate for e in res.entries]
        exp = search.exhaustive_search(M, lambdas=(2,), group="Gprime")
        assert [e.certificate for e in exp.entries] == [e.certificate for e in resp.entries]
        exhaustive = time.perf_counter() - t1
        notes.append(f"exhaustive {exhaustive:.2f} s")
        assert exhaustive < 1800.0


def test_criterion_7_arithmetic(criterion):
    M = default_model()
    D = example_designs(M)
    with criterion(7, "parameter identities and divisibility filters", 1.0):
        for k in range(3, 101):
            for lam in (d for d in range(1, k + 1) if k % d == 0):
                p = search.admissible_params(k, lam)
                assert p.b * p.k == p.v * p.r
                assert p.r * (p.k - 1) == p.lam * (p.v - 1)
                assert (p.r * p.r) > (k * k) * (lam * lam)
        Gl = M.G.stabilizer(0)
        for o in Gl.orbits():
            if o != (0,):
                assert len(o) % 7 == 0
        assert all(search.orbit_divisibility_holds(M.G, Di) for Di in D.values())
        assert not search.outer_divisibility_filter(12, 1, 55)
        assert not search.outer_divisibility_filter(45, 2, 443520)


def _materialized_subgroups(M):
    yield from (M.G, M.Gder, M.CGgamma, M.CGeta, M.true_CGeta, M.K, M.G9, M.G.normalizer(M.K))
    for x in range(M.G.degree):
        yield M.G.stabilizer(x)
        yield M.Gder.stabilizer(x)
    for B in M.base_blocks:
        yield M.G.set_stabilizer(B)
        yield M.Gder.set_stabilizer(B)


def test_criterion_8_property_suites(criterion):
    M = default_model()
    D = example_designs(M)
    with criterion(8, "field axioms, orbit-stabilizer, certificate invariance", float("inf")) as notes:
        F = Field(3, 0b1011)
        for a, b, c in itertools.product(range(8), repeat=3):
            assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
            assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
            assert F.add(F.add(a, b), c) == F.add(a, F.add(b, c))
        assert all(F.mul(a, F.inv(a)) == 1 for a in range(1, 8))

        groups = 0
        for H in _materialized_subgroups(M):
            groups += 1
            for x in range(H.degree):
                assert len(H.orbit(x)) * H.stabilizer(x).order == H.order
        notes.append(f"{groups} subgroups")

        rng = random.Random(20261018)
        for i, Di in D.items():
            cert = iso.canonical_form(Di).certificate
            for _ in range(100):
                perm = list(range(Di.v))
                rng.shuffle(perm)
                assert iso.canonical_form(Di.relabel(perm)).certificate == cert
        notes.append("100 relabelings x 4 designs")


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-v", *sys.argv[1:]]))
