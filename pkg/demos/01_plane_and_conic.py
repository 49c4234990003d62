"""Build PG(2,8), place the conic x1^2 = x0*x2 in it, and sort the 73 lines
by how they meet the conic."""

from collections import Counter

from secantdesigns.field import GF8
from secantdesigns.geometry import default_conic

conic = default_conic()
plane = conic.plane
w = GF8.primitive_element()

print(f"GF(8): modulus x^3+x+1, primitive element w = {w}")
print("  powers of w:", [GF8.pow(w, e) for e in range(7)])
print(f"PG(2,8): {len(plane.points)} points, {len(plane.lines)} lines, 9 points per line")

print("\nconic points (parameter t, point index, coordinates):")
for t in list(range(8)) + [None]:
    p = conic.point_of(t)
    print(f"  t={'∞' if t is None else t:>2}  point {p:>2}  {plane.coords[p]}")
print(f"nucleus N = point {conic.nucleus} {plane.coords[conic.nucleus]}")

meets = Counter(len(set(conic.conic_points) & set(ln.points)) for ln in plane.lines)
print(f"\nlines meeting the conic in 2 / 1 / 0 points: {meets[2]} / {meets[1]} / {meets[0]}")
print("every tangent passes through N:", all(plane.incident(conic.nucleus, t) for t in conic.tangents))

p, q = conic.conic_points[0], conic.conic_points[8]
s = conic.secant_through(p, q)
print(f"\nthe secant through points {p} and {q} is line {s}: {plane.lines[s].points}")
