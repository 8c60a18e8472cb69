#!/usr/bin/env python3
"""Search for more type-cardinality collisions.

The hunt enumerates products of standard families (cyclic, dihedral,
dicyclic, symmetric, alternating, Frobenius, special linear) whose orders
multiply to a target, then keeps every candidate that ties the simple
group of that order on type cardinality while provably differing from it.
An empty result means the bounded grammar found nothing, not that nothing
exists.
"""

import sys

from sameorder import hunt_report

def fmt(sizes) -> str:
    return "{" + ", ".join(str(s) for s in sizes) + "}"

if __name__ == "__main__":
    order = int(sys.argv[1]) if len(sys.argv) > 1 else 168
    factors = int(sys.argv[2]) if len(sys.argv) > 2 else 2

    rep = hunt_report(order, factors)
    if "note" in rep:
        print(rep["note"])
        sys.exit(0)

    print(f"simple group of order {order}: {rep['simple']}, "
          f"type {fmt(rep['simple_alpha'])}")
    print(f"candidates searched: {rep['candidates_searched']}")
    if not rep["collisions"]:
        print("no collisions in the searched families")
    for c in rep["collisions"]:
        cert = c["certificate"]
        print(f"   {c['expression']}: type {fmt(c['alpha'])}, "
              f"differs at t={cert['t']}")
