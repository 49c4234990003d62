"""Arithmetic side conditions for 2-(k^2, k, λ) designs."""

from secantdesigns import search

for k, lam in ((6, 2), (6, 6), (3, 3), (6, 4)):
    try:
        p = search.admissible_params(k, lam)
        print(f"k={k}, λ={lam}: v={p.v}, b={p.b}, r={p.r}")
    except search.InadmissibleError as e:
        print(f"k={k}, λ={lam}: rejected, {e}")

print("\n(k+1)/gcd(k+1, |Out X|) must divide |X_x|:")
for k, out, stab in ((12, 1, 55), (45, 2, 443520), (6, 3, 42)):
    verdict = "passes" if search.outer_divisibility_filter(k, out, stab) else "fails"
    print(f"  k={k}, |Out|={out}, |X_x|={stab}: {verdict}")
