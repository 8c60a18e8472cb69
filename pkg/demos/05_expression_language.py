#!/usr/bin/env python3
"""Tour of the group expression language.

Atoms name standard families; 'x' forms direct products; Perm[...] takes
explicit generators in one-indexed cycle notation.  Q(4n) is accepted as a
synonym for the dicyclic group Dic(n).  Every expression normalizes to a
canonical spelling that names the resulting group.
"""

from sameorder import group_for, normalize_expr, spectrum_checks

def fmt(sizes) -> str:
    return "{" + ", ".join(str(s) for s in sizes) + "}"

SAMPLES = [
    "C(15)",
    "Q(8)",
    "S(3) x C(4)",
    "Perm[(1,2,3,4,5), (1,2)]",
    "F(13,3,3)",
    "PSL(2,7)",
]

if __name__ == "__main__":
    for text in SAMPLES:
        g = group_for(text)
        canonical = normalize_expr(text)
        shown = text if canonical == text else f"{text}  ->  {canonical}"
        print(f"{shown}")
        print(f"   order {g.order()}, type {fmt(g.alpha())}")

    print()
    print("structural checks for Perm[(1,2,3,4,5), (1,2)]:")
    g = group_for("Perm[(1,2,3,4,5), (1,2)]")
    for name, ok, detail in spectrum_checks(g.spectrum()):
        print(f"   {'ok' if ok else 'FAIL'}  {name} ({detail})")
