"""Orbits of C_G(γ), <η, σ> and K on the secants, each named by a
representative secant, and the one 6-set the three groups share."""

from secantdesigns.ree import default_model, centralizer_orbits

M = default_model()
report = centralizer_orbits(M)
print(report.format())

ell = M.secant(M.P, M.act(M.gamma, M.P))
print(f"PP^γ is secant {ell}; its orbit under all three groups:", sorted(M.K.orbit(ell)))
