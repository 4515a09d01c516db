#!/usr/bin/env python3
"""Tour of the built-in character-graph constructors.

Builds the PSL2(q) graph for a range of field sizes, shows the component
structure in even and odd characteristic, cross-checks the structural
constructor against the degree-set oracle, and finishes with the Suzuki
family.
"""

from chargraph import (
    connected_components,
    graph_from_degrees,
    psl2_degree_oracle,
    psl2_graph,
    suzuki_graph,
)


def show(title: str, g) -> None:
    comps = connected_components(g)
    print(f"  {title}: vertices {list(g.vertices)}")
    print(f"    edges      {g.sorted_edges()}")
    print(f"    components {[list(c) for c in comps]}")


def main() -> None:
    print("=" * 72)
    print("PSL2(q), even characteristic: components {2}, pi(q-1), pi(q+1),")
    print("each complete")
    print("=" * 72)
    for q in (4, 8, 16, 32, 64):
        show(f"PSL2({q})", psl2_graph(q))

    print()
    print("=" * 72)
    print("PSL2(q), odd characteristic: {p} isolated; pi(q^2 - 1) is complete")
    print("exactly when q-1 or q+1 is a power of two, and otherwise splits")
    print("around the vertex 2")
    print("=" * 72)
    for q in (7, 9, 11, 13, 29, 81):
        show(f"PSL2({q})", psl2_graph(q))

    print()
    print("=" * 72)
    print("cross-check: the graph of the degree set equals the structural")
    print("constructor output (here for q up to 200; the test suite sweeps")
    print("every prime power up to 10^4)")
    print("=" * 72)
    from chargraph import as_prime_power

    checked = 0
    for q in range(4, 201):
        if as_prime_power(q) is None:
            continue
        degrees = psl2_degree_oracle(q)
        assert graph_from_degrees(degrees) == psl2_graph(q), q
        checked += 1
    print(f"  {checked} prime powers agree, e.g. degrees of PSL2(7): "
          f"{sorted(psl2_degree_oracle(7).degrees)}")

    print()
    print("=" * 72)
    print("Suzuki family, q^2 = 2^(2m+1): the odd part is complete and 2 is")
    print("adjacent exactly to pi(q^2 - 1)")
    print("=" * 72)
    for m in (1, 2, 3):
        show(f"m={m} (q^2 = {2 ** (2 * m + 1)})", suzuki_graph(m))


if __name__ == "__main__":
    main()
