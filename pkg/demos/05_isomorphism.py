"""Automorphism groups and canonical certificates of D1..D4."""

import random

from secantdesigns import iso
from secantdesigns.ree import default_model, example_designs

M = default_model()
designs = example_designs(M)

for i, D in designs.items():
    A = iso.automorphism_group(D)
    contains = all(g in A.group for g in M.G.generators)
    cert = iso.canonical_form(D).hex()
    print(f"D{i}: |Aut| = {A.order}, contains G: {contains}, certificate {cert[:24]}...{cert[-16:]}")

print("\npairwise:")
for i in designs:
    for j in designs:
        if i < j:
            print(f"  D{i} ≅ D{j}: {iso.are_isomorphic(designs[i], designs[j])[0]}")

rng = random.Random(1)
perm = list(range(36))
rng.shuffle(perm)
shuffled = designs[3].relabel(perm)
same, phi = iso.are_isomorphic(designs[3], shuffled)
print(f"\nD3 against a shuffled copy: isomorphic {same}; witness maps 0 -> {phi[0]}, 1 -> {phi[1]}, ...")
