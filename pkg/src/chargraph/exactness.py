"""The n-exactness decision procedure, extremality classification, and
instance-level verification of the order bound and the extremal catalog.

A graph is n-exact (n >= 4) when it is K_n-free and its complement has an odd
cycle of length at least 2n-5.  For character-graph models the order of an
n-exact graph is at most 2n-1; the minimum possible order is 2n-5, forced by
the witness cycle.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from .errors import AsymmetricPiSizes, BadParameter, ShapeMismatch, TooLarge
from .graphs import (
    MAX_CYCLE_VERTICES,
    CycleWitness,
    PrimeGraph,
    complement,
    is_bipartite,
    is_hamiltonian,
    is_kn_free,
    longest_odd_cycle_at_least,
)
from .models import (
    DISCONNECTED_LABELS,
    PSL2,
    AbstractSolvable,
    CharModel,
    Product,
    describe_model,
    model_graph,
    psl2_graph,
)
from .numtheory import prime_divisors

MIN_EXTREMAL = "MinExtremal"
MAX_EXTREMAL = "MaxExtremal"
INTERIOR = "Interior"
NOT_EXACT = "NotExact"

# extremal catalog cases; "a" is the minimum order 2n-5 with abelian radical,
# the "b" cases all have the maximum order 2n-1
CASE_MIN_ABELIAN = "a"
CASE_MAX_TWO_PAIRS = "b.i"
CASE_MAX_ONE_PAIR = "b.ii"
CASE_MAX_ABELIAN = "b.iii"
CASE_NOT_COVERED = "not_covered"


@dataclass(frozen=True)
class ExactnessReport:
    """Verdict of the n-exact test with its certificates."""

    n: int
    order: int
    is_kn_free: bool
    clique_witness: tuple[int, ...] | None
    odd_cycle: CycleWitness | None
    verdict: bool
    extremal_class: str


@dataclass(frozen=True)
class VerificationRecord:
    check: str
    description: str
    passed: bool
    details: dict[str, Any] = field(default_factory=dict)


@dataclass(frozen=True)
class ExtremalCase:
    """Which extremal catalog case a product model instantiates."""

    case: str
    alpha: int
    k: int
    expected_order: int | None
    report: ExactnessReport | None
    verified: bool | None


def check_n_exact(g: PrimeGraph, n: int, *, character_model: bool = False) -> ExactnessReport:
    """Decide n-exactness of g with certificates attached.

    MaxExtremal is only claimed for graphs tagged as character-graph models:
    the 2n-1 ceiling is a fact about character graphs, not about arbitrary
    graphs.
    """
    if n < 4:
        raise BadParameter(f"n-exactness is defined for n >= 4, got {n}")
    if g.order > MAX_CYCLE_VERTICES:
        raise TooLarge(f"n-exact check is capped at {MAX_CYCLE_VERTICES} vertices, got {g.order}")
    free, clique_witness = is_kn_free(g, n)
    odd_cycle = None
    if free:
        odd_cycle = longest_odd_cycle_at_least(complement(g), max(3, 2 * n - 5))
    verdict = free and odd_cycle is not None
    if not verdict:
        extremal_class = NOT_EXACT
    elif g.order == 2 * n - 5:
        extremal_class = MIN_EXTREMAL
    elif character_model and g.order == 2 * n - 1:
        extremal_class = MAX_EXTREMAL
    else:
        extremal_class = INTERIOR
    return ExactnessReport(
        n=n,
        order=g.order,
        is_kn_free=free,
        clique_witness=clique_witness,
        odd_cycle=odd_cycle,
        verdict=verdict,
        extremal_class=extremal_class,
    )


def alternating_cycle_witness(u: int, minus_part, plus_part) -> CycleWitness:
    """Odd cycle (u, m1, p1, ..., mk, pk) alternating between the two parts,
    k = min of the part sizes.

    When the parts are the odd prime divisors of q-1 and q+1 for q = u^a,
    consecutive entries always lie in different components of the PSL2(q)
    graph, so the cycle is valid in that graph's complement.
    """
    minus = tuple(sorted(set(minus_part)))
    plus = tuple(sorted(set(plus_part)))
    if not minus or not plus:
        raise BadParameter("both parts must be nonempty")
    if set(minus) & set(plus):
        raise BadParameter("the two parts must be disjoint")
    if u in minus or u in plus:
        raise BadParameter(f"the characteristic prime {u} cannot appear in either part")
    k = min(len(minus), len(plus))
    sequence = [u]
    for i in range(k):
        sequence.append(minus[i])
        sequence.append(plus[i])
    return CycleWitness(tuple(sequence))


def verify_order_bound(model: CharModel, n: int) -> VerificationRecord:
    """PASS when the model's graph is not n-exact, or its order is <= 2n-1."""
    if n < 4:
        raise BadParameter(f"n-exactness is defined for n >= 4, got {n}")
    g = model_graph(model)
    report = check_n_exact(g, n, character_model=True)
    bound = 2 * n - 1
    passed = (not report.verdict) or report.order <= bound
    name = describe_model(model)
    return VerificationRecord(
        check="order_bound",
        description=f"{name}: n = {n}, order {report.order} vs bound {bound}",
        passed=passed,
        details={
            "model": name,
            "n": n,
            "order": report.order,
            "bound": bound,
            "n_exact": report.verdict,
            "extremal_class": report.extremal_class,
            "clique_witness": list(report.clique_witness) if report.clique_witness else None,
            "odd_cycle": list(report.odd_cycle.vertices_in_order) if report.odd_cycle else None,
        },
    )


def classify_extremal_case(model: CharModel, n: int) -> ExtremalCase:
    """Match a product model against the extremal catalog.

    The model must be a product of exactly one even-characteristic PSL2
    factor with abstract solvable factors.  With k the common size of
    pi(2^a - 1) and pi(2^a + 1) (AsymmetricPiSizes when they differ):
    k = n-3 with abelian rest is case "a"; k = n-3 with two Type1/Type4
    pairs is "b.i"; k = n-2 with one pair is "b.ii"; k = n-1 with abelian
    rest is "b.iii".  A k outside {n-3, n-2, n-1} is not covered; a k inside
    it whose solvable part does not fit that k's case is a ShapeMismatch.
    Covered cases are verified on the spot: the graph must be n-exact with
    the case's required order.
    """
    if n < 4:
        raise BadParameter(f"n-exactness is defined for n >= 4, got {n}")
    if not isinstance(model, Product):
        raise ShapeMismatch("expected a product model")
    psl2_factors = [f for f in model.factors if isinstance(f, PSL2)]
    rest = [f for f in model.factors if not isinstance(f, PSL2)]
    if len(psl2_factors) != 1:
        raise ShapeMismatch(f"expected exactly one PSL2 factor, got {len(psl2_factors)}")
    if not all(isinstance(f, AbstractSolvable) for f in rest):
        raise ShapeMismatch("every factor beside PSL2 must be an abstract solvable model")
    q = psl2_factors[0].q
    if q.base != 2:
        raise ShapeMismatch(f"the extremal catalog needs an even-characteristic PSL2 factor, got q = {q.value}")
    alpha = q.exponent
    k_minus = len(prime_divisors(2**alpha - 1))
    k_plus = len(prime_divisors(2**alpha + 1))
    if k_minus != k_plus:
        raise AsymmetricPiSizes(
            f"|pi(2^{alpha} - 1)| = {k_minus} differs from |pi(2^{alpha} + 1)| = {k_plus}"
        )
    k = k_minus
    if k not in (n - 3, n - 2, n - 1):
        return ExtremalCase(CASE_NOT_COVERED, alpha, k, None, None, None)
    pairs = [f for f in rest if f.label in DISCONNECTED_LABELS]
    nontrivial = [f for f in rest if f.label not in DISCONNECTED_LABELS and f.label != "Abelian"]
    if nontrivial:
        raise ShapeMismatch("the solvable part must consist of Type1/Type4 pairs and abelian factors")
    shape = (k - n, len(pairs))
    if shape == (-3, 0):
        case, expected_order = CASE_MIN_ABELIAN, 2 * n - 5
    elif shape == (-3, 2):
        case, expected_order = CASE_MAX_TWO_PAIRS, 2 * n - 1
    elif shape == (-2, 1):
        case, expected_order = CASE_MAX_ONE_PAIR, 2 * n - 1
    elif shape == (-1, 0):
        case, expected_order = CASE_MAX_ABELIAN, 2 * n - 1
    else:
        raise ShapeMismatch(
            f"{len(pairs)} disconnected pair(s) do not fit any case with |pi(2^alpha +- 1)| = n {k - n:+d}"
        )
    report = check_n_exact(model_graph(model), n, character_model=True)
    verified = report.verdict and report.order == expected_order
    return ExtremalCase(case, alpha, k, expected_order, report, verified)


def verify_hamilton_characterization(f: int) -> VerificationRecord:
    """Check, for q = 2^f, that the complement of the PSL2(q) graph is
    non-bipartite and Hamiltonian exactly when the sizes of pi(q-1) and
    pi(q+1) differ by at most 1."""
    if not 2 <= f <= 12:
        raise BadParameter(f"f must lie in [2, 12], got {f}")
    q = 2**f
    comp = complement(psl2_graph(q))
    bipartite = is_bipartite(comp)
    hamilton = is_hamiltonian(comp)
    graph_side = (not bipartite.is_bipartite) and hamilton.is_hamiltonian
    k_minus = len(prime_divisors(q - 1))
    k_plus = len(prime_divisors(q + 1))
    balanced = abs(k_plus - k_minus) <= 1
    return VerificationRecord(
        check="hamilton_characterization",
        description=f"complement of the PSL2(2^{f}) graph: non-bipartite Hamiltonian <=> balanced divisor counts",
        passed=graph_side == balanced,
        details={
            "f": f,
            "pi_minus_size": k_minus,
            "pi_plus_size": k_plus,
            "balanced": balanced,
            "non_bipartite": not bipartite.is_bipartite,
            "hamiltonian": hamilton.is_hamiltonian,
            "hamilton_cycle": list(hamilton.cycle.vertices_in_order) if hamilton.cycle else None,
        },
    )
