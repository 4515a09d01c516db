#!/usr/bin/env python3
"""The n-exact decision procedure, with its certificates.

A graph is n-exact (n >= 4) when it is K_n-free and its complement contains
an odd cycle of length at least 2n-5.  Every verdict below comes with a
re-checkable certificate: the maximum clique on the one side, an explicit
odd cycle in the complement on the other.
"""

import itertools

from chargraph import (
    PrimeGraph,
    check_n_exact,
    complement,
    max_clique,
    psl2_graph,
    suzuki_graph,
)


def report(title: str, g, n: int, character_model: bool = False) -> None:
    result = check_n_exact(g, n, character_model=character_model)
    print(f"  {title}, n = {n}:")
    print(f"    K_{n}-free      {result.is_kn_free}"
          + (f" (witness clique {list(result.clique_witness)})" if result.clique_witness else ""))
    cycle = result.odd_cycle
    print(f"    odd cycle     {list(cycle.vertices_in_order) if cycle else None}"
          + (f" (length {cycle.length} >= {max(3, 2 * n - 5)})" if cycle else ""))
    print(f"    verdict       {'n-exact' if result.verdict else 'not n-exact'}")
    print(f"    order/class   {result.order} / {result.extremal_class}")
    if cycle is not None:
        assert cycle.validates_in(complement(g))


def cycle_graph(primes):
    return PrimeGraph(primes, [(primes[i], primes[(i + 1) % len(primes)]) for i in range(len(primes))])


def main() -> None:
    print("=" * 72)
    print("small graphs first: C5 is 4-exact, C4 is not (bipartite-complement)")
    print("=" * 72)
    report("C5", cycle_graph((2, 3, 5, 7, 11)), 4)
    report("C4", cycle_graph((2, 3, 5, 7)), 4)
    k4 = PrimeGraph((2, 3, 5, 7), itertools.combinations((2, 3, 5, 7), 2))
    report("K4", k4, 4)

    print()
    print("=" * 72)
    print("the minimum-order 5-exact character graph: PSL2(64), order 5 = 2n-5")
    print("=" * 72)
    g = psl2_graph(64)
    print(f"  max clique of the graph itself: {list(max_clique(g))}")
    report("PSL2(64)", g, 5, character_model=True)

    print()
    print("=" * 72)
    print("the Suzuki graph is never n-exact: its complement is a star, hence")
    print("bipartite")
    print("=" * 72)
    report("Suzuki m=1", suzuki_graph(1), 4)


if __name__ == "__main__":
    main()
