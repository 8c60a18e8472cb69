#!/usr/bin/env python3
"""Why a five-size same-order type does not pin down a group.

PSL(2,7) is the simple group of order 168 and its type has five sizes.
Three solvable groups of the same order also have five-size types, so the
pair (order, type cardinality) cannot separate them from the simple group.
The full spectra can: each solvable group differs from PSL(2,7) at some
element order and that mismatch is emitted as a certificate.
"""

from sameorder import group_for, noniso_certificate

def fmt(sizes) -> str:
    return "{" + ", ".join(str(s) for s in sizes) + "}"

RIVALS = ["Dic(2) x F(7,3,2)", "C(7) x SL(2,3)", "cex3"]

if __name__ == "__main__":
    psl = group_for("PSL(2,7)")
    print(f"PSL(2,7): type {fmt(psl.alpha())}, simple={psl.is_simple()}")
    print()
    for expr in RIVALS:
        g = group_for(expr)
        cert = noniso_certificate(psl, g)
        print(f"{expr}")
        print(f"   order {g.order()}, type {fmt(g.alpha())}, "
              f"solvable={g.is_solvable()}")
        print(f"   not isomorphic to PSL(2,7): {cert.reason} at t={cert.t} "
              f"({cert.left} vs {cert.right})")
        print()
    # Dic(2) is the quaternion group of order 8; cex3 is the third rival,
    # C2 x ((C14 x C2) : C3) with the three-element group acting on both
    # factors at once.
