"""Six ways to recognise a nilpotent group, side by side.

Run with:  python3 demos/nilpotency_criteria.py
"""

from fittinglike.catalog import get_entry
from fittinglike.heights import verify_nilpotency_criteria

names = ("D8", "Q8", "C12", "Heisenberg27", "S3", "S4", "A4", "SL(2,3)", "C2wrS3")
rows = {n: verify_nilpotency_criteria(get_entry(n).load()).details for n in names}
keys = list(next(iter(rows.values())))
print("group        " + "  ".join(f"{i + 1}" for i in range(len(keys))))
for n, d in rows.items():
    print(f"{n:12s} " + "  ".join("T" if d[k] else "." for k in keys))
print()
for i, k in enumerate(keys):
    print(f"{i + 1}: {k}")
