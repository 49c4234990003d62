"""Search every orbit design 2-(36,6,λ), λ | 6, on which G (or G') is
flag-transitive.  Pass --exhaustive to scan all C(36,6) subsets instead."""

import sys
import time

from secantdesigns import search
from secantdesigns.ree import default_model, example_designs

M = default_model()
refs = {f"D{i}": D for i, D in example_designs(M).items()}
run = search.exhaustive_search if "--exhaustive" in sys.argv else search.completeness_search

for group, lambdas in (("G", (1, 2, 3, 6)), ("Gprime", (2,))):
    t = time.perf_counter()
    res = run(M, lambdas, group)
    search.name_entries(res, refs)
    print(f"{group}, λ in {lambdas} ({res.mode}, {res.examined} candidates, {time.perf_counter() - t:.1f} s)")
    print("  " + res.summary())
    for e in res.entries:
        print(f"  λ={e.lam}: ≅ {e.name}, base block {e.base_block}, |H_B| = {e.stab_order}")
    for rep, (found, expected) in res.candidate_counts.items():
        print(f"  invariant 6-sets of an order-3 representative: {found} (closed form {expected})")
