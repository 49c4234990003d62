"""PΓL(2,8) acting on the 36 secants: orders, primitivity, and the
distinguished elements γ, η, σ with the conic points F, W, W^σ, P."""

from secantdesigns.perm import identify
from secantdesigns.ree import default_model, sigma_elation_check

M = default_model()
G = M.G

print(f"|G| = {G.order}, |G'| = {M.Gder.order}")
print(f"transitive on the secants: {G.is_transitive()}, primitive: {G.is_primitive()[0]}")
Gl = G.stabilizer(0)
print(f"stabilizer of a secant: order {Gl.order}, type {identify(Gl)}, suborbits {sorted(map(len, Gl.orbits()))}")

print("\nγ = t -> t^2 :", M.maps[M.gamma.images])
print("η           :", M.maps[M.eta.images])
print("σ           :", M.maps[M.sigma.images])
print(f"C_G(γ) has order {M.CGgamma.order} ({identify(M.CGgamma)})")
print(f"<η, σ> has order {M.CGeta.order} ({identify(M.CGeta)}); it is the part of C_G(γ) inside G'")
print(f"the full centralizer of η in G has order {M.true_CGeta.order}")
print(f"K = <γ, σ> has order {M.K.order} ({identify(M.K)}); self-normalizing: {G.normalizer(M.K) == M.K}")

labels = M.point_labels
print("\nconic points:")
for p in M.conic.conic_points:
    print(f"  {labels[p]:<6} point {p}")

el = sigma_elation_check(M)
print(f"\nσ as a collineation: axis is line {el['axis']} (the tangent FN), centre is point {el['centre']}")
print("fixed points of σ are exactly the axis:", el["fixed_points_are_axis"])
