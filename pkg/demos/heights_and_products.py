"""Heights along the F*-series, mutually permutable products and direct
products.

Run with:  python3 demos/heights_and_products.py
"""

from fittinglike.catalog import get_entry
from fittinglike.functorials import Builtin, Star, phi_pi
from fittinglike.heights import (
    find_mutually_permutable, gamma_series, h_gamma, h_star, verify_lemma12,
    verify_theorem8, verify_theorem9_direct,
)

FSTAR, FTILDE = Builtin("Fstar"), Builtin("Ftilde")


def load(name):
    return get_entry(name).load()


print("S3 is the product of a transposition subgroup and A3, each permuting")
print("with every subgroup of the other:")
s3 = load("S3")
for pair in find_mutually_permutable(s3):
    if {pair.a.order, pair.b.order} == {2, 3}:
        v = verify_theorem8(pair)
        m = max(v.details["h_A"], v.details["h_B"])
        print(f"  |A|={pair.a.order} |B|={pair.b.order}: {m} <= h*(S3)={v.details['h_G']} <= {m + 1}")
        break

print("\nF*-series terms (orders) and heights:")
for name in ("S3", "S4", "C2wrS3", "SL(2,3)", "A5", "S3xA5"):
    g = load(name)
    terms = [t.order for t in gamma_series(g, FSTAR).terms]
    others = {str(e): h_gamma(g, e) for e in (FTILDE, Star(phi_pi({2}), FSTAR))}
    print(f"  {name:8s} {terms}  h*={h_star(g)}  {others}")

print("\nQuasinilpotent factors never produce h* above 2:")
for name in ("S3", "D12", "S3xC3", "C3wrC2"):
    vs = [v for v in map(verify_lemma12, find_mutually_permutable(load(name))) if v is not None]
    print(f"  {name:8s} {len(vs):3d} pairs, max h*(G) = {max((v.details['h_G'] for v in vs), default='-')}")

print("\nDirect products take the largest factor height:")
for name in ("S3xA5", "S4xC2", "S3xS3", "Q8xC3"):
    e = get_entry(name)
    v = verify_theorem9_direct(e.load(), e.factors)
    print(f"  {name:8s} factors {v.details['h_factors']} -> product {v.details['h_product']}")
