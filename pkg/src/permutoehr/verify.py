"""Cross-verification harness.

Each check pits at least two independent routes against each other:
formula engines against one another, engines against brute-force lattice
point counts, enumerated structure counts against closed forms and
generating-function coefficients, and the two presentations of the
multigraph bijection against each other.  Everything is an exact equality
test; there are no tolerances anywhere.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import factorial

from . import ehrhart, graphs
from .polynomials import Poly
from .polytope import PartialPermutohedron
from .series import TruncatedSeries


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status} {self.name}: {self.detail}"


def _grid(max_m: int, n_offsets=(-1, 0, 1, 2)):
    for m in range(1, max_m + 1):
        for off in n_offsets:
            n = m + off
            if n >= 1:
                yield m, n


def check_engine_agreement(max_m: int = 4) -> list[CheckResult]:
    """Every engine against the closed form, over m <= max_m and
    n in {m-1, ..., m+2} (clipped to n >= 1)."""
    others = ("postnikov", "graphsum", "egf", "egf-tree", "recurrence")
    mismatches: dict[str, list[str]] = {name: [] for name in others}
    cases = 0
    for m, n in _grid(max_m):
        cases += 1
        reference = ehrhart.ehrhart_closed(m, n)
        for name in others:
            if ehrhart.compute_ehrhart(m, n, name).polynomial != reference:
                mismatches[name].append(f"(m={m}, n={n})")
    out = []
    for name in others:
        bad = mismatches[name]
        out.append(
            CheckResult(
                f"closed-vs-{name}",
                not bad,
                f"{cases} cases agree" if not bad else "mismatch at " + ", ".join(bad),
            )
        )
    return out


def check_oracle_agreement(max_m: int = 4, max_t: int = 2) -> CheckResult:
    """Closed form evaluated at t against brute-force counts, for
    m <= min(max_m, 4), n up to 4, t up to max_t."""
    bad = []
    cases = 0
    for m in range(1, min(max_m, 4) + 1):
        for n in range(max(1, m - 1), 5):
            poly = ehrhart.ehrhart_closed(m, n)
            poly_points = PartialPermutohedron(m, n)
            for t in range(1, max_t + 1):
                cases += 1
                if poly(t) != poly_points.count_lattice_points(t):
                    bad.append(f"(m={m}, n={n}, t={t})")
    return CheckResult(
        "closed-vs-brute-force",
        not bad,
        f"{cases} counts match" if not bad else "mismatch at " + ", ".join(bad),
    )


def check_volume(max_m: int = 4) -> CheckResult:
    """Leading Ehrhart coefficient against the closed volume formula."""
    bad = []
    cases = 0
    for m in range(1, max_m + 1):
        for n in (m - 1, m, m + 1):
            if n < 1:
                continue
            cases += 1
            lead = ehrhart.ehrhart_closed(m, n).leading_coefficient
            if lead != ehrhart.volume_closed(m, n):
                bad.append(f"(m={m}, n={n})")
    return CheckResult(
        "volume-vs-leading-coefficient",
        not bad,
        f"{cases} cases match" if not bad else "mismatch at " + ", ".join(bad),
    )


def check_structure_counts(max_m: int = 5) -> list[CheckResult]:
    """Enumerated connected-graph counts against the closed forms
    m^(m-2), m^(m-1), (m-1) m^(m-2) and, for the simple unicyclic count,
    against m! [z^m] (-T/2 - T^2/4 - log sqrt(1 - T))."""
    bad_closed = []
    bad_series = []
    top = min(max_m, 7)
    order = max(top, 1)
    tree = ehrhart.tree_function(order)
    tree_sq = tree * tree
    log_term = (-tree + 1).log()  # log(1 - T)
    quasi_series = tree * Fraction(-1, 2) + tree_sq * Fraction(-1, 4) + log_term * Fraction(-1, 2)
    for m in range(1, top + 1):
        counts = graphs.structure_counts(m)
        expected = (
            m ** (m - 2) if m >= 2 else 1,
            m ** (m - 1),
            (m - 1) * m ** (m - 2) if m >= 2 else 0,
        )
        if (counts.trees, counts.looped_trees, counts.enhanced_trees) != expected:
            bad_closed.append(f"m={m}")
        egf_quasi = quasi_series.coefficient(m) * factorial(m)
        if counts.quasitrees != egf_quasi:
            bad_series.append(f"m={m}")
    return [
        CheckResult(
            "structure-counts-closed-forms",
            not bad_closed,
            f"m <= {top} match" if not bad_closed else "mismatch at " + ", ".join(bad_closed),
        ),
        CheckResult(
            "quasitree-count-vs-series",
            not bad_series,
            f"m <= {top} match" if not bad_series else "mismatch at " + ", ".join(bad_series),
        ),
    ]


def check_bijection(max_m: int = 4) -> list[CheckResult]:
    """Round trip of the sequence/multigraph bijection, plus the
    Hall-vs-cycle equivalence over the extended multiplicity box."""
    bad_round = []
    for m in range(1, min(max_m, 4) + 1):
        for graph in graphs.enumerate_graphs(m):
            seq = graphs.from_multigraph(graph)
            if graphs.to_multigraph(seq) != graph:
                bad_round.append(f"m={m}")
                break
    bad_equiv = []
    for m in range(1, min(max_m, 3) + 1):
        n_pairs = m * (m - 1) // 2
        for loop in product(range(3), repeat=m):
            for pair in product(range(4), repeat=n_pairs):
                seq = graphs.EdgeMultiplicities(m, loop, pair)
                graph = graphs.Multigraph(m, loop, pair)
                if graphs.satisfies_hall(seq) != graphs.component_cycle_check(graph):
                    bad_equiv.append(f"m={m}, a={loop + pair}")
    return [
        CheckResult(
            "bijection-round-trip",
            not bad_round,
            "identity on every graph" if not bad_round else "failed at " + ", ".join(bad_round),
        ),
        CheckResult(
            "hall-vs-cycle-equivalence",
            not bad_equiv,
            "equivalent over the extended box"
            if not bad_equiv
            else "diverge at " + ", ".join(bad_equiv[:5]),
        ),
    ]


def check_transfer_identity(seed: int = 0, random_cases: int = 50) -> CheckResult:
    """The tree-function coefficient identity for every monomial z^d with
    d, k <= 8 and for seeded random rational polynomials."""
    bad = []
    for d in range(9):
        f = Poly.monomial(d)
        for k in range(9):
            lhs, rhs = ehrhart.coefficient_transfer_check(f, k)
            if lhs != rhs:
                bad.append(f"z^{d}, k={k}")
    rng = random.Random(seed)
    for case in range(random_cases):
        degree = rng.randint(0, 6)
        f = Poly(
            [Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(degree + 1)]
        )
        k = rng.randint(0, 8)
        lhs, rhs = ehrhart.coefficient_transfer_check(f, k)
        if lhs != rhs:
            bad.append(f"random case {case}")
    return CheckResult(
        "tree-coefficient-transfer",
        not bad,
        f"monomials and {random_cases} random polynomials agree"
        if not bad
        else "mismatch at " + ", ".join(bad[:5]),
    )


def run_all(max_m: int = 4, max_t: int = 2, seed: int = 0) -> list[CheckResult]:
    if max_m < 1:
        raise ValueError("need max_m >= 1")
    if max_m > 6:
        raise ValueError(
            "max_m is capped at 6; the engines beyond that exceed the "
            "default enumeration bound"
        )
    results = []
    results.extend(check_engine_agreement(max_m))
    results.append(check_oracle_agreement(max_m, max_t))
    results.append(check_volume(max_m))
    results.extend(check_structure_counts(max_m + 1))
    results.extend(check_bijection(max_m))
    results.append(check_transfer_identity(seed))
    return results
