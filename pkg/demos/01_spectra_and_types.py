#!/usr/bin/env python3
"""Order spectra for a handful of small groups.

The spectrum maps each element order t to the number s_t of elements of
that order; the same-order type is the set of distinct counts.  Two
isomorphic groups always share both, so the spectrum acts as a cheap
fingerprint.
"""

from sameorder import group_for

def fmt(sizes) -> str:
    return "{" + ", ".join(str(s) for s in sizes) + "}"

GROUPS = ["C(12)", "D(6)", "Dic(3)", "A(4)", "S(4)", "F(7,3,2)", "SL(2,3)"]


def describe(expr: str) -> None:
    g = group_for(expr)
    spec = g.spectrum()
    print(f"{expr}  (order {g.order()})")
    for t, count in sorted(spec.counts.items()):
        print(f"   s_{t} = {count}")
    print(f"   type: {fmt(g.alpha())}")
    print()


if __name__ == "__main__":
    for expr in GROUPS:
        describe(expr)
    # C(12), D(6) and Dic(3) all have order 12 but three different spectra,
    # while A(4) is separated from them by its count of order-3 elements.
