"""Character-graph constructors for the modeled group families.

The graph of a degree set joins two primes exactly when their product divides
some degree.  PSL2(q) and the Suzuki family 2B2(q^2) get direct structural
constructors (three complete components in even characteristic, and so on),
cross-checked by a degree-set oracle.  Abstract solvable models carry an
explicit graph validated against the solvable constraints: bipartite
complement, and a triangle or a 4-cycle once there are at least four
vertices.  Direct products take the join of their factors' graphs.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache, reduce
from typing import Union

from .errors import BadParameter, ModelError, VertexClash
from .graphs import PrimeGraph, complement, is_bipartite, isomorphic_small, join, max_clique
from .numtheory import PrimePower, as_prime_power, prime_divisors

SOLVABLE_LABELS = ("Type1", "Type4", "C4Product", "Abelian")
DISCONNECTED_LABELS = ("Type1", "Type4")

_C4_REFERENCE = PrimeGraph((2, 3, 5, 7), [(2, 3), (3, 5), (5, 7), (2, 7)])


@dataclass(frozen=True)
class DegreeSet:
    """A set of character degrees; always contains 1, all entries positive."""

    degrees: frozenset[int]

    def __post_init__(self) -> None:
        degs = frozenset(int(d) for d in self.degrees)
        object.__setattr__(self, "degrees", degs)
        if not degs or min(degs) < 1:
            raise BadParameter("character degrees are positive integers")
        if 1 not in degs:
            raise BadParameter("every degree set contains 1")

    @classmethod
    def of(cls, *degrees: int) -> DegreeSet:
        return cls(frozenset(degrees))

    def sorted(self) -> tuple[int, ...]:
        return tuple(sorted(self.degrees))


@dataclass(frozen=True)
class PSL2:
    """The family PSL2(q), q a prime power >= 4."""

    q: PrimePower

    def __post_init__(self) -> None:
        q = self.q
        if isinstance(q, int):
            parsed = as_prime_power(q)
            if parsed is None:
                raise BadParameter(f"{q} is not a prime power")
            object.__setattr__(self, "q", parsed)
            q = parsed
        if q.value < 4:
            raise BadParameter(f"PSL2 needs q >= 4, got {q.value}")


@dataclass(frozen=True)
class Suzuki:
    """The Suzuki family with q^2 = 2^(2m+1), m >= 1."""

    m: int

    def __post_init__(self) -> None:
        if self.m < 1:
            raise BadParameter(f"Suzuki needs m >= 1, got {self.m}")


@dataclass(frozen=True)
class AbstractSolvable:
    """A solvable group modeled only through its character graph.

    Labels: Abelian (no degree primes), Type1/Type4 (two nonadjacent degree
    primes; the internals of these disconnected groups stay opaque), and
    C4Product (graph is a 4-cycle, the product of two disconnected groups).
    """

    label: str
    rho: tuple[int, ...]
    graph: PrimeGraph

    def __post_init__(self) -> None:
        if self.label not in SOLVABLE_LABELS:
            raise ModelError(f"unknown solvable label {self.label!r}; expected one of {SOLVABLE_LABELS}")
        rho = tuple(sorted(set(self.rho)))
        object.__setattr__(self, "rho", rho)
        if self.graph.vertices != rho:
            raise ModelError(f"graph vertices {self.graph.vertices} must equal rho {rho}")
        if self.label == "Abelian" and rho:
            raise ModelError("an abelian model has no degree primes")
        if self.label in DISCONNECTED_LABELS and (len(rho) != 2 or self.graph.size != 0):
            raise ModelError(f"{self.label} needs exactly two nonadjacent degree primes")
        if self.label == "C4Product" and not (self.graph.order == 4 and isomorphic_small(self.graph, _C4_REFERENCE)):
            raise ModelError("C4Product needs a 4-cycle graph")
        if not is_bipartite(complement(self.graph)).is_bipartite:
            raise ModelError("a solvable model's graph must have bipartite complement")
        if self.graph.order >= 4:
            has_triangle = len(max_clique(self.graph)) >= 3
            if not has_triangle and not isomorphic_small(self.graph, _C4_REFERENCE):
                raise ModelError("a solvable graph on 4+ vertices contains a triangle or is a 4-cycle")


@dataclass(frozen=True)
class Product:
    """Direct product of models with pairwise disjoint prime supports."""

    factors: tuple[CharModel, ...]

    def __post_init__(self) -> None:
        factors = tuple(self.factors)
        object.__setattr__(self, "factors", factors)
        if not factors:
            raise BadParameter("a product needs at least one factor")
        seen: set[int] = set()
        for factor in factors:
            support = set(model_support(factor))
            clash = seen & support
            if clash:
                raise VertexClash(f"factor prime supports overlap on {sorted(clash)}")
            seen |= support


CharModel = Union[PSL2, Suzuki, AbstractSolvable, Product]


def abelian() -> AbstractSolvable:
    return AbstractSolvable("Abelian", (), PrimeGraph(()))


def disconnected_pair(label: str, p: int, q: int) -> AbstractSolvable:
    """Type1/Type4 model: two degree primes, no edge."""
    return AbstractSolvable(label, (p, q), PrimeGraph((p, q)))


def c4_product(p1: int, p2: int, q1: int, q2: int) -> AbstractSolvable:
    """Solvable product whose graph is the 4-cycle joining pairs {p1,p2} and {q1,q2}."""
    graph = join(PrimeGraph((p1, p2)), PrimeGraph((q1, q2)))
    return AbstractSolvable("C4Product", graph.vertices, graph)


def graph_from_degrees(degrees: DegreeSet) -> PrimeGraph:
    """Graph on the primes dividing some degree; p and q are adjacent exactly
    when p*q divides some degree."""
    supports = [prime_divisors(d) for d in degrees.sorted() if d > 1]
    vertices = sorted(set(itertools.chain.from_iterable(supports)))
    edges = set()
    for support in supports:
        edges.update(itertools.combinations(support, 2))
    return PrimeGraph(vertices, edges)


def _coerce_prime_power(q: PrimePower | int) -> PrimePower:
    if isinstance(q, PrimePower):
        return q
    parsed = as_prime_power(q)
    if parsed is None:
        raise BadParameter(f"{q} is not a prime power")
    return parsed


def _complete(vertices) -> list[tuple[int, int]]:
    return list(itertools.combinations(sorted(vertices), 2))


def psl2_graph(q: PrimePower | int) -> PrimeGraph:
    """Character graph of PSL2(q) for a prime power q >= 4.

    q even: three components {2}, pi(q-1), pi(q+1), each complete.
    q odd (q > 5): {p} isolated; on pi(q^2 - 1), the component is complete
    when q-1 or q+1 is a power of 2, and otherwise splits as
    {2} + (pi(q-1) - {2}) + (pi(q+1) - {2}) with 2 adjacent to everything,
    both parts complete, and no edges across the parts.
    q = 5 is routed through q = 4 (the two groups are isomorphic).
    """
    qq = _coerce_prime_power(q)
    if qq.value < 4:
        raise BadParameter(f"PSL2 needs q >= 4, got {qq.value}")
    if qq.value == 5:
        qq = PrimePower(2, 2)
    return _psl2_graph_cached(qq.base, qq.exponent)


@lru_cache(maxsize=None)
def _psl2_graph_cached(base: int, exponent: int) -> PrimeGraph:
    q = base**exponent
    pi_minus = prime_divisors(q - 1)
    pi_plus = prime_divisors(q + 1)
    if base == 2:
        vertices = {2, *pi_minus, *pi_plus}
        edges = _complete(pi_minus) + _complete(pi_plus)
        return PrimeGraph(vertices, edges)
    others = sorted(set(pi_minus) | set(pi_plus))
    vertices = {base, *others}
    if (q - 1) & (q - 2) == 0 or (q + 1) & q == 0:  # q-1 or q+1 a power of 2
        edges = _complete(others)
    else:
        minus = [p for p in pi_minus if p != 2]
        plus = [p for p in pi_plus if p != 2]
        edges = _complete(minus) + _complete(plus) + [(2, p) for p in minus + plus]
    return PrimeGraph(vertices, edges)


def suzuki_graph(m: int) -> PrimeGraph:
    """Character graph of the Suzuki group with q^2 = 2^(2m+1): every odd
    vertex is adjacent to every other odd vertex, and 2 is adjacent exactly
    to the primes dividing q^2 - 1."""
    if m < 1:
        raise BadParameter(f"Suzuki needs m >= 1, got {m}")
    q2 = 2 ** (2 * m + 1)
    pi_small = prime_divisors(q2 - 1)
    pi_large = prime_divisors(q2 * q2 + 1)
    odd = sorted(set(pi_small) | set(pi_large))
    edges = _complete(odd) + [(2, p) for p in pi_small]
    return PrimeGraph([2, *odd], edges)


def psl2_degree_oracle(q: PrimePower | int) -> DegreeSet:
    """Degree set of PSL2(q), used as an independent cross-check of the
    structural constructor: {1, q-1, q, q+1} for even q, plus (q+e)/2 with
    e = +1 for q = 1 mod 4 and e = -1 otherwise, for odd q.  q = 5 routes
    through q = 4."""
    qq = _coerce_prime_power(q)
    value = qq.value
    if value < 4:
        raise BadParameter(f"PSL2 needs q >= 4, got {value}")
    if value == 5:
        value = 4
    if value % 2 == 0:
        return DegreeSet.of(1, value - 1, value, value + 1)
    eps = 1 if value % 4 == 1 else -1
    return DegreeSet.of(1, value - 1, value, value + 1, (value + eps) // 2)


def model_graph(model: CharModel) -> PrimeGraph:
    """The character graph a model describes; products join their factors."""
    match model:
        case PSL2(q=q):
            return psl2_graph(q)
        case Suzuki(m=m):
            return suzuki_graph(m)
        case AbstractSolvable(graph=graph):
            return graph
        case Product(factors=factors):
            return reduce(join, (model_graph(f) for f in factors))
    raise BadParameter(f"not a model: {model!r}")


def model_support(model: CharModel) -> tuple[int, ...]:
    """The primes on which the model's graph lives."""
    return model_graph(model).vertices


def describe_model(model: CharModel) -> str:
    match model:
        case PSL2(q=q):
            return f"PSL2({q.value})"
        case Suzuki(m=m):
            return f"Suzuki(m={m})"
        case AbstractSolvable(label=label, rho=rho):
            return label if not rho else f"{label}{{{', '.join(map(str, rho))}}}"
        case Product(factors=factors):
            return f"Product[{', '.join(describe_model(f) for f in factors)}]"
    return repr(model)
