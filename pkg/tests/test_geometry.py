import itertools

import pytest

from secantdesigns.field import GF8
from secantdesigns.geometry import NotOnConicError, SamePointError, cross, dot, normalize


def test_counts(plane, conic):
    assert len(plane.points) == 73 == 8 * 8 + 8 + 1
    assert len(plane.lines) == 73
    assert len(conic.conic_points) == 9
    assert (len(conic.secants), len(conic.tangents), len(conic.externals)) == (36, 9, 28)
    assert sorted(conic.secants + conic.tangents + conic.externals) == list(range(73))


def test_points_are_normalized_and_sorted(plane):
    coords = [p.coords for p in plane.points]
    assert coords == sorted(coords)
    for c in coords:
        first = next(x for x in c if x)
        assert first == 1 and normalize(c) == c


def test_incidence_is_the_dot_product_rule(plane):
    for ln in plane.lines:
        assert len(ln.points) == 9
        for p in plane.points:
            assert (p.index in ln.points) == (dot(ln.coeffs, p.coords) == 0)
    assert all(len(ls) == 9 for ls in plane.lines_through)


def test_projective_plane_axioms(plane):
    for p, q in itertools.combinations(range(73), 2):
        common = [ln.index for ln in plane.lines if p in ln.points and q in ln.points]
        assert common == [plane.join(p, q)]
    for a, b in itertools.combinations(range(73), 2):
        common = set(plane.lines[a].points) & set(plane.lines[b].points)
        assert common == {plane.meet(a, b)}


def test_cross_product_gives_joining_line(plane):
    p, q = plane.points[5].coords, plane.points[40].coords
    line = normalize(cross(p, q))
    assert dot(line, p) == dot(line, q) == 0
    assert plane.line_index[line] == plane.join(5, 40)


def test_conic_equation_and_nucleus(plane, conic):
    for i in conic.conic_points:
        x0, x1, x2 = plane.coords[i]
        assert GF8.mul(x1, x1) == GF8.mul(x0, x2)
    assert plane.coords[conic.nucleus] == (0, 1, 0)
    assert plane.coords[conic.conic_points[-1]] == (0, 0, 1)


def test_conic_is_an_arc(plane, conic):
    triples = list(itertools.combinations(conic.conic_points, 3))
    assert len(triples) == 84
    for a, b, c in triples:
        assert not plane.incident(c, plane.join(a, b))


def test_line_classification_by_meeting_count(plane, conic):
    cset = set(conic.conic_points)
    by_count = {0: [], 1: [], 2: []}
    for ln in plane.lines:
        by_count[len(cset.intersection(ln.points))].append(ln.index)
    assert tuple(by_count[2]) == conic.secants
    assert tuple(by_count[1]) == conic.tangents
    assert tuple(by_count[0]) == conic.externals
    assert all(plane.incident(conic.nucleus, t) for t in conic.tangents)


def test_secant_through(plane, conic):
    cset = set(conic.conic_points)
    seen = set()
    for p, q in itertools.combinations(conic.conic_points, 2):
        s = conic.secant_through(p, q)
        assert s == conic.secant_through(q, p)
        assert s in conic.secants
        assert cset.intersection(plane.lines[s].points) == {p, q}
        assert conic.secant_to_pair[s] == frozenset((p, q))
        seen.add(s)
    assert len(seen) == 36
    for s in conic.secants:
        assert conic.secant_through(*sorted(conic.secant_to_pair[s])) == s


def test_secant_through_errors(conic):
    p = conic.conic_points[0]
    with pytest.raises(SamePointError):
        conic.secant_through(p, p)
    with pytest.raises(NotOnConicError):
        conic.secant_through(p, conic.nucleus)


def test_parametrization_round_trip(conic):
    for t in list(range(8)) + [None]:
        assert conic.param_of(conic.point_of(t)) == t


def test_dump_format(plane):
    rows = plane.dump().splitlines()
    assert len(rows) == 73
    for i, row in enumerate(rows):
        fields = list(map(int, row.split()))
        assert fields[0] == i and len(fields) == 10
        assert tuple(fields[1:]) == plane.lines[i].points
