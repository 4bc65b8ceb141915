"""Build functorials from text, evaluate them and check their axioms.

Run with:  python3 demos/functorial_algebra.py
"""

from fittinglike import check_axioms, evaluate, parse_functorial
from fittinglike.catalog import get_entry
from fittinglike.functorials import omega, values_lattice

sl23 = get_entry("SL(2,3)").load()
s4 = get_entry("S4").load()

c2a5 = get_entry("C2xA5").load()

print("Expressions are parsed with ^ tightest, then * and o, then &, then |.")
print("Orders of the values on SL(2,3) and on C2 x A5:")
for text in ("F", "Fstar", "Phi_pi{2,3}*Fstar", "Ftilde^inf", "Fstar & Ftilde | Triv", "Fstar o F", "F | Phi"):
    expr = parse_functorial(text)
    print(f"  {text:24s} -> {expr!s:26s} {evaluate(expr, sl23).order:4d} {evaluate(expr, c2a5).order:5d}")

value, steps = omega(parse_functorial("Ftilde"), sl23)
print(f"\nFtilde iterated on SL(2,3) settles on order {value.order} after {steps} step(s)")

print("\nAxioms on S4:")
for text in ("Fstar", "Ftilde", "Phi_pi{2}*Fstar", "Triv", "Id"):
    rep = check_axioms(parse_functorial(text), s4, ["F1", "F2", "F3", "F4", "F5"])
    marks = " ".join(f"{k}:{'ok' if r.passed else 'x'}" for k, r in rep.results.items())
    print(f"  {text:18s} {marks}")

family = [parse_functorial(t) for t in ("Fstar", "Ftilde", "Phi_pi{2}*Fstar", "Phi_pi{3}*Fstar")]
for name in ("S4", "SL(2,3)", "Q8xC3", "C4wrC2"):
    v = values_lattice(get_entry(name).load(), family)
    print(f"values on {name:8s}: {v.size} distinct subgroup(s) after closing, distributive={v.distributive}")
