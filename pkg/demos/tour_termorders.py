"""Term orders measured against the exchange order: refinement and separation."""
from __future__ import annotations

import argparse
from itertools import islice

from stableorders.monomials import Monomial
from stableorders.termorders import (
    GREATER,
    LESS,
    TermOrder,
    refines_borel,
    separating_witnesses,
    weight_vectors_by_total,
)

M = Monomial.parse

SYMBOL = {LESS: "<", GREATER: ">", 0: "="}


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, default=3, help="number of variables checked")
    parser.add_argument("--max-degree", type=int, default=4, help="degree bound for checks")
    args = parser.parse_args()

    orders = {
        "lex": TermOrder("lex"),
        "deglex": TermOrder("deglex"),
        "degrevlex": TermOrder("degrevlex"),
        "weighted (5,3,2)": TermOrder("weighted", (5, 3, 2)),
    }

    print("The classic pair where degree-lex and degree-revlex disagree:")
    a, b = M("x1*x2^2"), M("x1^2*x3")
    for name, order in orders.items():
        print(f"  {name:17} {a} {SYMBOL[order.compare(a, b)]} {b}")
    print()

    print(f"Which orders refine the exchange order (n={args.n}, degree <= {args.max_degree})?")
    for name, order in orders.items():
        ok, witness = refines_borel(order, args.n, args.max_degree)
        if ok:
            print(f"  {name:17} yes   e.g. {witness[1]} < {witness[0]} in both")
        else:
            print(f"  {name:17} no    {witness[0]} < {witness[1]} is flipped")
    bad = TermOrder("weighted", (1, 2, 3))
    ok, witness = refines_borel(bad, args.n, args.max_degree)
    print(f"  weighted (1,2,3)  {'yes' if ok else 'no'}    {witness[0]} < {witness[1]} is flipped")
    print()

    print("Strictly decreasing weight vectors, smallest totals first:")
    print(" ", list(islice(weight_vectors_by_total(3), 7)))
    print()

    pair = (M("x1*x3"), M("x2^2"))
    above, below = separating_witnesses(*pair, nvars=3)
    print(f"{pair[0]} and {pair[1]} are exchange-incomparable; weights separate them:")
    print(f"  {above} puts {pair[0]} above, {below} puts it below")
    for weights in (above, below):
        order = TermOrder("weighted", weights)
        print(f"  check {weights}: {pair[0]} {SYMBOL[order.compare(*pair)]} {pair[1]}")


if __name__ == "__main__":
    main()
