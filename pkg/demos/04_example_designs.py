"""The four designs D1..D4 as G-orbits of the base blocks, with the
tactical decompositions around a fixed secant."""

from secantdesigns import design as dz
from secantdesigns.ree import default_model, example_designs

M = default_model()
designs = example_designs(M)

for i, D in designs.items():
    p = dz.verify_2design(D)
    B = M.base_blocks[i - 1]
    stab = M.G.set_stabilizer(B)
    print(f"D{i}: base block {B}, |G_B| = {stab.order}, {p}")
    print(f"    flag-transitive under G: {dz.verify_flag_transitive(M.G, D)}, "
          f"under G': {dz.verify_flag_transitive(M.Gder, D)}")

x = 0
Gx = M.G.stabilizer(x)
for i in (1, 2):
    print(f"\ntactical decomposition of D{i} around secant {x} (orbit sizes v', b' and k', r'):")
    for r in dz.tactical_decomposition(Gx, designs[i], x):
        mark = "  blocks through x" if r.through_x else ""
        print(f"  {r.params}{mark}")
