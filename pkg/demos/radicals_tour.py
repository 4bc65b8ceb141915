"""Walk through the radicals of a few groups and compare independent
constructions of each one.

Run with:  python3 demos/radicals_tour.py
"""

from pathlib import Path

from fittinglike import parse_group_file
from fittinglike.catalog import get_entry
from fittinglike.lattice import chief_series, frattini, frattini_by_complements
from fittinglike.radicals import (
    f_star, f_star_by_innerisers, f_star_oracle, f_tilde, f_tilde_by_innerisers,
    f_tilde_forster, fitting, fitting_by_centralizers,
)

HERE = Path(__file__).parent


def show(name, g):
    print(f"\n{name}: order {g.order}, chief factors {chief_series(g).factor_orders()}")
    print(f"  F      order {fitting(g).order:4d}   (by chief-factor centralizers: {fitting_by_centralizers(g).order})")
    fs = f_star(g)
    agree = fs == f_star_oracle(g) == f_star_by_innerisers(g)
    print(f"  F*     order {fs.order:4d}   formula, lattice scan and innerisers agree: {agree}")
    ft = f_tilde(g)
    agree = ft == f_tilde_forster(g) == f_tilde_by_innerisers(g)
    print(f"  Ftilde order {ft.order:4d}   three constructions agree: {agree}")
    print(f"  Phi    order {frattini(g).order:4d}")


for name in ("S4", "SL(2,3)", "A5", "S3xA5"):
    show(name, get_entry(name).load())

# F20 is a case where the Frattini subgroup of a quotient is bigger than
# the image of the Frattini subgroup: G/C5 = C4 has Phi of order 2, but Phi(G) = 1.
f20 = parse_group_file((HERE / "groups" / "f20.grp").read_text())
show("F20 (from demos/groups/f20.grp)", f20)
print("  Phi via complements of the minimal normal C5:", frattini_by_complements(f20).order)
