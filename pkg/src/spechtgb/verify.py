"""Named verification checks, negative controls, the suite runner, and the CLI.

Every check runs an exact computation and returns a CheckReport whose payload
is deterministic for a fixed (configuration, seed): evidence holds counts and
small witnesses only, timing lives outside the payload. Where a fact has two
independent computational routes (tableau generators plus Buchberger on one
side, the strata intersection oracle on the other) the check runs both and
compares, rather than trusting either.
"""

from __future__ import annotations

import argparse
import hashlib
import itertools
import json
import math
import random
import sys
import time
from dataclasses import dataclass
from fractions import Fraction

from .combinatorics import (
    PartitionFilter,
    dominates,
    enumerate_lower_filters,
    enumerate_upper_filters,
    derived_filter,
    filter_closure,
    filter_text,
    parse_filter_text,
    parse_partition_text,
    partition_text,
    partitions_of,
    validate_partition,
)
from .groebner import (
    DEFAULT_PAIR_BUDGET,
    PairBudgetExceeded,
    groebner_basis,
    ideal_membership,
    is_groebner_basis,
    normal_form,
    reduce_groebner_basis,
)
from .polyring import (
    GF,
    QQ,
    Field,
    MonomialOrder,
    Poly,
    coefficients_in_last_variable,
    leading_term,
    lex_order,
    parse_field,
    parse_order,
    polynomial_text,
)
from .specht import (
    filter_generators,
    restricted_standard_generators,
    shape_generators,
)
from .strata import sample_stratum, vanishing_ideal_oracle

SCHEMA_VERSION = 1
CHECK_NAMES = (
    "lexgb",
    "universal",
    "reduced",
    "vanishing",
    "descent",
    "restricted",
    "finite_field",
    "containment",
    "engine",
)


@dataclass
class CheckReport:
    """One check outcome. payload() excludes timing so identical runs hash identically."""

    check_id: str
    parameters: dict
    verdict: str
    reason: str | None
    evidence: dict
    timing_ms: int

    def payload(self) -> dict:
        return {
            "schema": SCHEMA_VERSION,
            "check_id": self.check_id,
            "parameters": self.parameters,
            "verdict": self.verdict,
            "reason": self.reason,
            "evidence": self.evidence,
        }

    def record(self) -> dict:
        rec = self.payload()
        rec["timing_ms"] = self.timing_ms
        return rec


def _guarded(check_id: str, parameters: dict, body) -> CheckReport:
    started = time.perf_counter()
    try:
        verdict, reason, evidence = body()
    except PairBudgetExceeded as e:
        verdict, reason, evidence = "fail", str(e), {}
    return CheckReport(
        check_id=check_id,
        parameters=parameters,
        verdict=verdict,
        reason=reason,
        evidence=evidence,
        timing_ms=int((time.perf_counter() - started) * 1000),
    )


def _skipped(check_id: str, parameters: dict, reason: str) -> CheckReport:
    return CheckReport(check_id, parameters, "skipped", reason, {}, 0)


# ---------------------------------------------------------------------------
# individual checks


def check_lexgb(filt: PartitionFilter, *, field: Field = QQ,
                pair_budget: int = DEFAULT_PAIR_BUDGET) -> CheckReport:
    """The column-standard generator set of a lower filter is already a basis
    under lex x1 < ... < xn, and enumerating every tableau instead of only the
    column-standard ones leaves the reduced basis unchanged."""
    parameters = {"n": filt.n, "filter": filter_text(filt), "field": field.text()}

    def body():
        order = lex_order(filt.n)
        cs = [g.polynomial for g in filter_generators(filt, field=field)]
        ok, cert = is_groebner_basis(cs, order)
        evidence = {"generators": len(cs), "pair_counts": cert["counts"]}
        if not ok:
            evidence["failed_pairs"] = [p for p in cert["pairs"] if p["status"] == "failed"][:5]
            return "fail", "an S-polynomial did not reduce to zero under lex", evidence
        reduced_cs = reduce_groebner_basis(cs, order)
        all_polys = [g.polynomial for g in filter_generators(filt, mode="all", field=field)]
        same_set = set(all_polys) == set(cs)
        evidence["all_mode_same_generators"] = same_set
        reduced_all = reduced_cs if same_set else groebner_basis(
            all_polys, order, pair_budget=pair_budget)
        evidence["reduced_basis_size"] = len(reduced_cs)
        if reduced_cs != reduced_all:
            return "fail", "all-tableaux mode produced a different reduced basis", evidence
        return "pass", None, evidence

    return _guarded("lexgb", parameters, body)


def check_universal(filt: PartitionFilter, *, order_budget: int = 25, seed: int = 0,
                    field: Field = QQ, exhaustive_lex: bool = True) -> CheckReport:
    """The generator set stays a basis under every tested monomial order, and
    each generator's leading term under an order equals its leading term under
    the lex order induced by how that order ranks the single variables."""
    parameters = {
        "n": filt.n,
        "filter": filter_text(filt),
        "field": field.text(),
        "order_budget": order_budget,
        "seed": seed,
        "exhaustive_lex": exhaustive_lex,
    }

    def body():
        n = filt.n
        polys = [g.polynomial for g in filter_generators(filt, field=field)]
        rng = random.Random(seed)
        orders: list[MonomialOrder] = []
        if exhaustive_lex:
            for ranking in itertools.permutations(range(1, n + 1)):
                orders.append(MonomialOrder("lex", n, ranking))
        else:
            want = min(order_budget, math.factorial(n))
            seen: set = set()
            while len(seen) < want:
                seen.add(tuple(rng.sample(range(1, n + 1), n)))
            orders.extend(MonomialOrder("lex", n, r) for r in sorted(seen))
        lex_count = len(orders)
        for _ in range(order_budget):
            kind = rng.choice(("grlex", "grevlex", "weight"))
            ranking = tuple(rng.sample(range(1, n + 1), n))
            if kind == "weight":
                weights = tuple(Fraction(rng.randint(1, 9), rng.randint(1, 3)) for _ in range(n))
                orders.append(MonomialOrder("weight", n, ranking, weights))
            else:
                orders.append(MonomialOrder(kind, n, ranking))
        agreements = 0
        for order in orders:
            ok, _ = is_groebner_basis(polys, order)
            if not ok:
                return "fail", f"not a basis under {order.text()}", {
                    "generators": len(polys)}
            induced = order.induced_lex()
            for p in polys:
                if leading_term(p, order) != leading_term(p, induced):
                    return "fail", (
                        f"leading term disagrees with the induced lex order under {order.text()}"
                    ), {"generators": len(polys)}
                agreements += 1
        evidence = {
            "generators": len(polys),
            "orders_tested": len(orders),
            "lex_orders": lex_count,
            "leading_term_agreements": agreements,
        }
        return "pass", None, evidence

    return _guarded("universal", parameters, body)


def check_reduced(filt: PartitionFilter, *,
                  pair_budget: int = DEFAULT_PAIR_BUDGET) -> CheckReport:
    """Dual-route identity for a lower filter: the ideal generated from its
    tableaux equals the full vanishing ideal of the strata outside the filter,
    computed independently as an intersection of subspace primes. Checked by
    two-sided membership and by exact reduced-basis agreement; passing means
    the generated ideal is radical and cuts out exactly those strata."""
    parameters = {"n": filt.n, "filter": filter_text(filt), "field": "Q"}

    def body():
        order = lex_order(filt.n)
        gens = [g.polynomial for g in filter_generators(filt)]
        lhs = groebner_basis(gens, order, pair_budget=pair_budget)
        complement = filt.complement()
        if not len(complement):
            one = Poly.constant(1, filt.n, QQ)
            if lhs == [one]:
                return "pass", None, {"complement_size": 0, "unit_ideal": True}
            return "fail", "the full filter should generate the unit ideal", {
                "reduced_basis_size": len(lhs)}
        oracle = vanishing_ideal_oracle(complement, pair_budget=pair_budget)
        rhs = list(oracle.generators)
        oracle_in_gens = all(ideal_membership(p, lhs, order) for p in rhs)
        gens_in_oracle = all(ideal_membership(p, rhs, order) for p in gens)
        evidence = {
            "complement_size": len(complement),
            "generators": len(gens),
            "oracle_basis_size": len(rhs),
            "reduced_basis_size": len(lhs),
            "oracle_contained_in_generated": oracle_in_gens,
            "generated_contained_in_oracle": gens_in_oracle,
            "reduced_bases_equal": lhs == rhs,
        }
        if oracle_in_gens and gens_in_oracle and lhs == rhs:
            return "pass", None, evidence
        return "fail", "generated ideal and strata oracle disagree", evidence

    return _guarded("reduced", parameters, body)


def check_stratum_vanishing(n: int, *, samples: int = 10, seed: int = 0) -> CheckReport:
    """Every generator of a shape vanishes at every sampled point of every
    stratum whose type the shape does not dominate, and at each sampled point
    of a dominated stratum at least one generator of the shape is nonzero."""
    parameters = {"n": n, "samples": samples, "seed": seed, "field": "Q"}

    def body():
        shapes = partitions_of(n)
        zero = QQ.zero
        zero_evaluations = 0
        witness_points = 0
        for lam_idx, lam in enumerate(shapes):
            gens = [g.polynomial for g in shape_generators(lam)]
            for mu_idx, mu in enumerate(shapes):
                stratum_seed = seed * 1_000_003 + lam_idx * len(shapes) + mu_idx
                points = sample_stratum(mu, samples, stratum_seed).points
                if not dominates(lam, mu):
                    for p in gens:
                        for point in points:
                            if p.evaluate(point) != zero:
                                return "fail", (
                                    f"a generator of {partition_text(lam)} is nonzero on "
                                    f"a point of type {partition_text(mu)}"
                                ), {"zero_evaluations": zero_evaluations}
                            zero_evaluations += 1
                else:
                    for point in points:
                        if all(p.evaluate(point) == zero for p in gens):
                            return "fail", (
                                f"no generator of {partition_text(lam)} is nonzero on "
                                f"a point of type {partition_text(mu)}"
                            ), {"witness_points": witness_points}
                        witness_points += 1
        evidence = {
            "shapes": len(shapes),
            "zero_evaluations": zero_evaluations,
            "witness_points": witness_points,
        }
        return "pass", None, evidence

    return _guarded("vanishing", parameters, body)


def _random_degree2_poly(n: int, rng: random.Random, *, max_terms: int = 3) -> Poly:
    terms: dict = {}
    for _ in range(rng.randint(1, max_terms)):
        mono = [0] * n
        for _ in range(rng.randint(0, 2)):
            mono[rng.randrange(n)] += 1
        c = rng.randint(-3, 3)
        if c:
            m = tuple(mono)
            terms[m] = terms.get(m, 0) + c
    return Poly(n, QQ, terms)


def _random_member(gens: list[Poly], rng: random.Random) -> Poly:
    n = gens[0].nvars
    f = Poly.zero(n, QQ)
    for g in gens:
        f = f + _random_degree2_poly(n, rng) * g
    return f


def check_coefficient_descent(n: int, *, trials: int = 20, seed: int = 0,
                              pair_budget: int = DEFAULT_PAIR_BUDGET) -> CheckReport:
    """Write any member of an upper filter's vanishing ideal in powers of the
    last variable, with top degree d: every coefficient polynomial must lie in
    the vanishing ideal of the filter derived at row index d + 1, over the
    ring with one variable fewer. Tried on random ideal members; membership of
    the input is verified before the coefficient property is asserted."""
    parameters = {"n": n, "trials": trials, "seed": seed, "field": "Q"}

    def body():
        order = lex_order(n)
        inner_order = lex_order(n - 1)
        filters = enumerate_upper_filters(n)
        memberships = 0
        trivial = 0
        for f_idx, filt in enumerate(filters):
            oracle = vanishing_ideal_oracle(filt, pair_budget=pair_budget)
            if oracle.is_zero():
                trivial += 1
                continue
            gens = list(oracle.generators)
            rng = random.Random(seed * 7919 + f_idx)
            for _ in range(trials):
                f = _random_member(gens, rng)
                redraws = 0
                while not f.terms and redraws < 20:
                    f = _random_member(gens, rng)
                    redraws += 1
                if not f.terms:
                    continue
                if normal_form(f, gens, order).terms:
                    return "fail", "a constructed member failed its membership precondition", {
                        "filter": filter_text(filt)}
                shares = coefficients_in_last_variable(f)
                top_degree = len(shares) - 1
                derived = derived_filter(filt, top_degree + 1)
                if not len(derived):
                    trivial += len(shares)
                    continue
                derived_oracle = vanishing_ideal_oracle(derived, pair_budget=pair_budget)
                for share in shares:
                    if derived_oracle.is_zero():
                        ok = not share.terms
                    else:
                        ok = ideal_membership(share, list(derived_oracle.generators), inner_order)
                    if not ok:
                        return "fail", "a coefficient escaped the derived filter's ideal", {
                            "filter": filter_text(filt),
                            "derived": filter_text(derived),
                            "top_degree": top_degree,
                        }
                    memberships += 1
        evidence = {
            "filters": len(filters),
            "memberships": memberships,
            "trivial_cases": trivial,
        }
        return "pass", None, evidence

    return _guarded("descent", parameters, body)


def check_restricted(shape, *, pair_budget: int = DEFAULT_PAIR_BUDGET) -> CheckReport:
    """The standard-tableau generators of the shapes below a given one that
    keep its first-row length form a lex basis on their own, and they generate
    the same ideal as the full generator set of the shape's principal filter."""
    lam = validate_partition(shape)
    n = sum(lam)
    parameters = {"n": n, "shape": partition_text(lam), "field": "Q"}

    def body():
        order = lex_order(n)
        restricted = [g.polynomial for g in restricted_standard_generators(lam)]
        ok, cert = is_groebner_basis(restricted, order)
        evidence = {"restricted_generators": len(restricted), "pair_counts": cert["counts"]}
        if not ok:
            return "fail", "the restricted set is not a basis under lex", evidence
        reduced_restricted = reduce_groebner_basis(restricted, order)
        principal = filter_closure(n, [lam], "lower")
        full = [g.polynomial for g in filter_generators(principal)]
        reduced_full = groebner_basis(full, order, pair_budget=pair_budget)
        evidence["full_generators"] = len(full)
        evidence["reduced_basis_size"] = len(reduced_full)
        if reduced_restricted != reduced_full:
            return "fail", "the restricted set generates a different ideal", evidence
        return "pass", None, evidence

    return _guarded("restricted", parameters, body)


def check_finite_field(filt: PartitionFilter, p: int, *, order_budget: int = 10,
                       seed: int = 0, pair_budget: int = DEFAULT_PAIR_BUDGET) -> CheckReport:
    """The basis facts survive reduction mod p: the generator set is a lex
    basis over F_p, stays one under sampled orders with induced-lex leading
    terms, and its reduced basis is the termwise image of the rational one."""
    parameters = {
        "n": filt.n,
        "filter": filter_text(filt),
        "p": p,
        "order_budget": order_budget,
        "seed": seed,
    }

    def body():
        fp = GF(p)
        n = filt.n
        order = lex_order(n)
        polys_p = [g.polynomial for g in filter_generators(filt, field=fp)]
        ok, cert = is_groebner_basis(polys_p, order)
        evidence = {"generators_mod_p": len(polys_p), "pair_counts": cert["counts"]}
        if not ok:
            return "fail", f"not a lex basis over F_{p}", evidence
        rng = random.Random(seed)
        for _ in range(order_budget):
            kind = rng.choice(("lex", "grlex", "grevlex", "weight"))
            ranking = tuple(rng.sample(range(1, n + 1), n))
            if kind == "weight":
                weights = tuple(Fraction(rng.randint(1, 9)) for _ in range(n))
                o = MonomialOrder("weight", n, ranking, weights)
            else:
                o = MonomialOrder(kind, n, ranking)
            ok2, _ = is_groebner_basis(polys_p, o)
            if not ok2:
                return "fail", f"not a basis over F_{p} under {o.text()}", evidence
            induced = o.induced_lex()
            for q in polys_p:
                if leading_term(q, o) != leading_term(q, induced):
                    return "fail", (
                        f"leading term disagrees with the induced lex order over F_{p}"
                    ), evidence
        rgb_p = reduce_groebner_basis(polys_p, order)
        rgb_q = groebner_basis([g.polynomial for g in filter_generators(filt)], order,
                               pair_budget=pair_budget)
        try:
            image = [Poly(n, fp, {m: c for m, c in g.terms.items()}) for g in rgb_q]
        except ValueError:
            return "fail", f"a rational coefficient has no image mod {p}", evidence
        evidence["orders_sampled"] = order_budget
        evidence["reduced_basis_size"] = len(rgb_p)
        if image != rgb_p:
            return "fail", "the reduced basis mod p is not the image of the rational one", evidence
        return "pass", None, evidence

    return _guarded("finite_field", parameters, body)


def check_containment(n: int, *, pair_budget: int = DEFAULT_PAIR_BUDGET) -> CheckReport:
    """For every strict dominance relation between shapes, each standard
    generator of the lower shape reduces to zero against a basis computed from
    the higher shape's own generators alone."""
    parameters = {"n": n, "field": "Q"}

    def body():
        order = lex_order(n)
        shapes = partitions_of(n)
        bases = {}
        for lam in shapes:
            gens = [g.polynomial for g in shape_generators(lam)]
            bases[lam] = groebner_basis(gens, order, pair_budget=pair_budget)
        comparable_pairs = 0
        memberships = 0
        for lam in shapes:
            for mu in shapes:
                if mu == lam or not dominates(lam, mu):
                    continue
                comparable_pairs += 1
                for g in shape_generators(mu, mode="standard"):
                    if normal_form(g.polynomial, bases[lam], order).terms:
                        return "fail", (
                            f"a generator of {partition_text(mu)} is outside the ideal "
                            f"of {partition_text(lam)}"
                        ), {"comparable_pairs": comparable_pairs}
                    memberships += 1
        evidence = {
            "shapes": len(shapes),
            "comparable_pairs": comparable_pairs,
            "memberships": memberships,
        }
        return "pass", None, evidence

    return _guarded("containment", parameters, body)


def check_engine(*, trials: int = 100, seed: int = 0,
                 pair_budget: int = DEFAULT_PAIR_BUDGET) -> CheckReport:
    """Engine self-consistency on randomized inputs: permuting the generators
    never changes the reduced basis, and neither does disabling the chain
    criterion."""
    parameters = {"trials": trials, "seed": seed}

    def body():
        rng = random.Random(seed)
        ran = 0
        for trial in range(trials):
            n = rng.choice((2, 3))
            if trial % 10 == 9:
                filters = enumerate_lower_filters(n)
                filt = filters[rng.randrange(len(filters))]
                gens = [g.polynomial for g in filter_generators(filt)]
            else:
                gens = [_random_degree2_poly(n, rng, max_terms=4) for _ in range(rng.randint(2, 3))]
                gens = [g for g in gens if g.terms]
                if not gens:
                    continue
            kind = rng.choice(("lex", "grlex", "grevlex"))
            ranking = tuple(rng.sample(range(1, n + 1), n))
            order = MonomialOrder(kind, n, ranking)
            base = groebner_basis(gens, order, pair_budget=pair_budget)
            shuffled = list(gens)
            rng.shuffle(shuffled)
            if groebner_basis(shuffled, order, pair_budget=pair_budget) != base:
                return "fail", "permuting the generators changed the reduced basis", {
                    "trial": trial}
            no_chain = groebner_basis(gens, order, pair_budget=pair_budget,
                                      use_chain_criterion=False)
            if no_chain != base:
                return "fail", "the chain criterion changed the reduced basis", {"trial": trial}
            ran += 1
        return "pass", None, {"trials_run": ran}

    return _guarded("engine", parameters, body)


# ---------------------------------------------------------------------------
# negative controls: corrupted fixtures that the checks must reject


def _control(name: str, parameters: dict, body) -> CheckReport:
    started = time.perf_counter()
    detected, evidence = body()
    return CheckReport(
        check_id=f"control_{name}",
        parameters=parameters,
        verdict="pass" if detected else "fail",
        reason=None if detected else "a corrupted input went undetected",
        evidence=evidence,
        timing_ms=int((time.perf_counter() - started) * 1000),
    )


def negative_controls(*, seed: int = 0) -> list[CheckReport]:
    """One deliberately corrupted fixture per check class.

    Each control passes exactly when the corrupted computation is detected as
    wrong, so a passing control certifies that its check can actually fail.
    """
    reports = []

    def lexgb_body():
        # one shape dropped from a two-shape filter, label kept
        order = lex_order(3)
        filt = filter_closure(3, [(2, 1)], "lower")
        corrupted = [g.polynomial for g in shape_generators((1, 1, 1))]
        truth = groebner_basis(
            [g.polynomial for g in filter_generators(filt, mode="all")], order)
        detected = reduce_groebner_basis(corrupted, order) != truth
        return detected, {"dropped_shape": partition_text((2, 1))}

    reports.append(_control("lexgb", {"n": 3, "filter": "lower:[2,1],[1,1,1]"}, lexgb_body))

    def universal_body():
        order = MonomialOrder("lex", 2, (2, 1))
        gens = [
            Poly(2, QQ, {(2, 0): 1, (0, 1): -1}),
            Poly(2, QQ, {(1, 0): 1}),
        ]
        ok, cert = is_groebner_basis(gens, order)
        return not ok, {"pair_counts": cert["counts"]}

    reports.append(_control("universal", {"n": 2, "fixture": "x1^2-x2,x1 under lex:2,1"},
                            universal_body))

    def reduced_body():
        # generated ideal compared against the oracle of the wrong complement
        order = lex_order(3)
        filt = filter_closure(3, [(1, 1, 1)], "lower")
        lhs = groebner_basis([g.polynomial for g in filter_generators(filt)], order)
        wrong = vanishing_ideal_oracle(filter_closure(3, [(3,)], "upper"))
        detected = lhs != list(wrong.generators)
        return detected, {"filter": filter_text(filt), "wrong_complement": "upper:[3]"}

    reports.append(_control("reduced", {"n": 3, "filter": "lower:[1,1,1]"}, reduced_body))

    def vanishing_body():
        # a dominated stratum: the generators must NOT all vanish there
        gens = [g.polynomial for g in shape_generators((2, 1))]
        points = sample_stratum((1, 1, 1), 5, seed).points
        zero = QQ.zero
        all_vanish = all(p.evaluate(point) == zero for p in gens for point in points)
        return not all_vanish, {"shape": "[2,1]", "stratum": "[1,1,1]", "points": len(points)}

    reports.append(_control("vanishing", {"n": 3, "seed": seed}, vanishing_body))

    def descent_body():
        # f outside the filter's ideal: the precondition must reject it, and
        # the coefficient property must fail when forced anyway
        filt = filter_closure(3, [(2, 1)], "upper")
        oracle = vanishing_ideal_oracle(filt)
        f = Poly(3, QQ, {(1, 0, 0): 1, (0, 1, 0): -1})
        rejected = bool(normal_form(f, list(oracle.generators), lex_order(3)).terms)
        shares = coefficients_in_last_variable(f)
        derived = derived_filter(filt, len(shares))
        derived_oracle = vanishing_ideal_oracle(derived)
        if derived_oracle.is_zero():
            property_fails = any(s.terms for s in shares)
        else:
            property_fails = not all(
                ideal_membership(s, list(derived_oracle.generators), lex_order(2))
                for s in shares
            )
        return rejected and property_fails, {
            "filter": filter_text(filt),
            "precondition_rejected": rejected,
            "forced_property_failed": property_fails,
        }

    reports.append(_control("descent", {"n": 3, "fixture": "x1-x2 vs upper:[2,1]"},
                            descent_body))

    def restricted_body():
        # drop the shape's own generators from the restricted set
        order = lex_order(4)
        lam = (2, 2)
        corrupted = [
            g.polynomial
            for g in restricted_standard_generators(lam)
            if g.shape != lam
        ]
        full = groebner_basis(
            [g.polynomial for g in filter_generators(filter_closure(4, [lam], "lower"))],
            order)
        detected = groebner_basis(corrupted, order) != full
        return detected, {"shape": partition_text(lam), "kept_generators": len(corrupted)}

    reports.append(_control("restricted", {"n": 4, "shape": "[2,2]"}, restricted_body))

    def finite_field_body():
        # one tail coefficient of the mod-p image bumped by one
        fp = GF(3)
        order = lex_order(2)
        filt = filter_closure(2, [(1, 1)], "lower")
        rgb_p = reduce_groebner_basis(
            [g.polynomial for g in filter_generators(filt, field=fp)], order)
        rgb_q = groebner_basis([g.polynomial for g in filter_generators(filt)], order)
        corrupted = []
        for g in rgb_q:
            terms = {m: fp.coerce(c) for m, c in g.terms.items()}
            tail = min(terms)
            terms[tail] = fp.add(terms[tail], fp.one)
            corrupted.append(Poly(2, fp, terms))
        return corrupted != rgb_p, {"p": 3, "filter": filter_text(filt)}

    reports.append(_control("finite_field", {"n": 2, "p": 3}, finite_field_body))

    def containment_body():
        # reversed inclusion: the lower shape's ideal must not contain the
        # higher shape's generators
        order = lex_order(3)
        low = groebner_basis([g.polynomial for g in shape_generators((1, 1, 1))], order)
        probe = Poly(3, QQ, {(1, 0, 0): 1, (0, 1, 0): -1})
        return not ideal_membership(probe, low, order), {"pair": "[2,1] vs [1,1,1]"}

    reports.append(_control("containment", {"n": 3}, containment_body))

    def engine_body():
        # a set that is not a basis must be recognized as such
        order = MonomialOrder("lex", 2, (2, 1))
        gens = [
            Poly(2, QQ, {(2, 0): 1, (0, 1): -1}),
            Poly(2, QQ, {(1, 0): 1}),
        ]
        ok, _ = is_groebner_basis(gens, order)
        detected = not ok and groebner_basis(gens, order) == [Poly(2, QQ, {(0, 1): 1}),
                                                              Poly(2, QQ, {(1, 0): 1})]
        return detected, {"fixture": "x1^2-x2,x1 under lex:2,1"}

    reports.append(_control("engine", {"n": 2}, engine_body))

    return reports


# ---------------------------------------------------------------------------
# suite


@dataclass
class SuiteConfig:
    checks: tuple[str, ...] = CHECK_NAMES
    min_n: int = 2
    max_n: int = 4
    field: Field = QQ
    seed: int = 0
    samples: int = 10
    trials: int = 20
    engine_trials: int = 100
    order_budget: int = 25
    pair_budget: int = DEFAULT_PAIR_BUDGET
    primes: tuple[int, ...] = (2, 3, 7)
    include_controls: bool = True


def _suite_lower_filters(n: int):
    if n <= 5:
        return enumerate_lower_filters(n)
    # beyond n = 5 the lattice of filters explodes; principal filters only
    return tuple(filter_closure(n, [lam], "lower") for lam in partitions_of(n))


_RATIONAL_ONLY_REASON = "needs the rational field: strata are only dense there"


def run_suite(config: SuiteConfig) -> list[CheckReport]:
    """Run the configured checks over their grids, deterministically ordered."""
    for name in config.checks:
        if name not in CHECK_NAMES:
            raise ValueError(f"unknown check {name!r}")
    finite = config.field.p is not None
    ns = range(max(config.min_n, 2), config.max_n + 1)
    reports: list[CheckReport] = []
    for name in config.checks:
        if name == "lexgb":
            for n in ns:
                for filt in _suite_lower_filters(n):
                    reports.append(check_lexgb(filt, field=config.field,
                                               pair_budget=config.pair_budget))
        elif name == "universal":
            for n in ns:
                budget = config.order_budget if n <= 5 else min(config.order_budget, 10)
                for filt in _suite_lower_filters(n):
                    reports.append(check_universal(
                        filt, order_budget=budget, seed=config.seed,
                        field=config.field, exhaustive_lex=n <= 4))
        elif name == "reduced":
            for n in ns:
                for filt in _suite_lower_filters(n):
                    params = {"n": n, "filter": filter_text(filt), "field": config.field.text()}
                    if finite:
                        reports.append(_skipped("reduced", params, _RATIONAL_ONLY_REASON))
                    else:
                        reports.append(check_reduced(filt, pair_budget=config.pair_budget))
        elif name == "vanishing":
            for n in ns:
                if finite:
                    reports.append(_skipped("vanishing", {"n": n, "field": config.field.text()},
                                            _RATIONAL_ONLY_REASON))
                else:
                    reports.append(check_stratum_vanishing(n, samples=config.samples,
                                                           seed=config.seed))
        elif name == "descent":
            for n in ns:
                if finite:
                    reports.append(_skipped("descent", {"n": n, "field": config.field.text()},
                                            _RATIONAL_ONLY_REASON))
                else:
                    reports.append(check_coefficient_descent(
                        n, trials=config.trials, seed=config.seed,
                        pair_budget=config.pair_budget))
        elif name == "restricted":
            for n in ns:
                for lam in partitions_of(n):
                    if finite:
                        reports.append(_skipped(
                            "restricted",
                            {"n": n, "shape": partition_text(lam), "field": config.field.text()},
                            _RATIONAL_ONLY_REASON))
                    else:
                        reports.append(check_restricted(lam, pair_budget=config.pair_budget))
        elif name == "finite_field":
            primes = (config.field.p,) if finite else config.primes
            for n in range(max(config.min_n, 2), min(config.max_n, 4) + 1):
                for filt in _suite_lower_filters(n):
                    for p in primes:
                        reports.append(check_finite_field(
                            filt, p, order_budget=min(config.order_budget, 10),
                            seed=config.seed, pair_budget=config.pair_budget))
        elif name == "containment":
            for n in ns:
                if finite:
                    reports.append(_skipped("containment", {"n": n, "field": config.field.text()},
                                            _RATIONAL_ONLY_REASON))
                else:
                    reports.append(check_containment(n, pair_budget=config.pair_budget))
        elif name == "engine":
            reports.append(check_engine(trials=config.engine_trials, seed=config.seed,
                                        pair_budget=config.pair_budget))
    if config.include_controls:
        reports.extend(negative_controls(seed=config.seed))
    reports.sort(key=lambda r: (r.check_id, json.dumps(r.parameters, sort_keys=True)))
    return reports


def suite_exit_code(reports: list[CheckReport]) -> int:
    return 1 if any(r.verdict == "fail" for r in reports) else 0


def determinism_hash(reports: list[CheckReport]) -> str:
    blob = "\n".join(json.dumps(r.payload(), sort_keys=True) for r in reports)
    return hashlib.sha256(blob.encode("utf-8")).hexdigest()


# ---------------------------------------------------------------------------
# CLI


def _summary_table(reports: list[CheckReport]) -> str:
    lines = []
    width = max((len(r.check_id) for r in reports), default=8) + 2
    for r in reports:
        params = json.dumps(r.parameters, sort_keys=True)
        line = f"{r.check_id:<{width}}{r.verdict:<9}{params}"
        if r.reason:
            line += f"  ({r.reason})"
        lines.append(line)
    totals = {"pass": 0, "fail": 0, "skipped": 0}
    for r in reports:
        totals[r.verdict] = totals.get(r.verdict, 0) + 1
    lines.append("")
    lines.append(
        f"{totals['pass']} pass, {totals['fail']} fail, {totals['skipped']} skipped"
        f"  [determinism sha256:{determinism_hash(reports)[:16]}]"
    )
    return "\n".join(lines)


def _emit(reports: list[CheckReport], fmt: str, out_path: str | None) -> None:
    if fmt == "json":
        body = "\n".join(json.dumps(r.record(), sort_keys=True) for r in reports) + "\n"
    else:
        body = _summary_table(reports) + "\n"
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(body)
        print(f"wrote {len(reports)} report(s) to {out_path}")
    else:
        sys.stdout.write(body)


def _cmd_gens(args) -> int:
    field = parse_field(args.field)
    if args.mode == "restricted_standard":
        if not args.shape:
            raise ValueError("mode restricted_standard needs --shape")
        gens = restricted_standard_generators(parse_partition_text(args.shape), field=field)
    elif args.shape:
        lam = parse_partition_text(args.shape)
        if sum(lam) != args.n:
            raise ValueError(f"--shape {args.shape} is not a partition of --n {args.n}")
        gens = shape_generators(lam, mode=args.mode, field=field)
    elif args.filter:
        filt = parse_filter_text(args.filter, args.n, default_kind="lower")
        gens = filter_generators(filt, mode=args.mode, field=field)
    else:
        raise ValueError("gens needs --filter or --shape")
    if args.report == "json":
        rows = [
            {
                "shape": partition_text(g.shape),
                "tableau": [list(r) for r in g.tableau.rows],
                "polynomial": polynomial_text(g.polynomial),
                "terms": len(g.polynomial.terms),
            }
            for g in gens
        ]
        body = "\n".join(json.dumps(r, sort_keys=True) for r in rows) + "\n"
    else:
        body = "\n".join(
            f"{partition_text(g.shape)}  {[list(r) for r in g.tableau.rows]}  "
            f"{polynomial_text(g.polynomial)}"
            for g in gens
        ) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(body)
    else:
        sys.stdout.write(body)
    return 0


def _cmd_gb(args) -> int:
    field = parse_field(args.field)
    filt = parse_filter_text(args.filter, args.n, default_kind="lower")
    order = parse_order(args.order, args.n) if args.order else lex_order(args.n)
    gens = [g.polynomial for g in filter_generators(filt, field=field)]
    basis = groebner_basis(gens, order, pair_budget=args.pair_budget)
    _print_basis(basis, order, args)
    return 0


def _cmd_oracle(args) -> int:
    filt = parse_filter_text(args.filter, args.n, default_kind="lower")
    if filt.kind == "lower":
        target = filt.complement()
        if not len(target):
            raise ValueError("the complement of the full filter is empty")
    else:
        target = filt
    oracle = vanishing_ideal_oracle(target, pair_budget=args.pair_budget)
    _print_basis(list(oracle.generators), lex_order(args.n), args,
                 note=f"strata: {filter_text(target)}")
    return 0


def _print_basis(basis, order, args, note: str | None = None) -> None:
    if args.report == "json":
        payload = {
            "order": order.text() if hasattr(order, "text") else "lex",
            "basis": [polynomial_text(p, order) for p in basis],
            "size": len(basis),
        }
        if note:
            payload["note"] = note
        body = json.dumps(payload, sort_keys=True, indent=2) + "\n"
    else:
        lines = []
        if note:
            lines.append(f"# {note}")
        if not basis:
            lines.append("0  (zero ideal)")
        lines.extend(polynomial_text(p, order) for p in basis)
        body = "\n".join(lines) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(body)
    else:
        sys.stdout.write(body)


def _cmd_verify(args) -> int:
    field = parse_field(args.field)
    selection = CHECK_NAMES if args.check == "all" else (args.check,)
    single: CheckReport | None = None
    if args.check != "all" and (args.filter or args.shape):
        if args.check in ("lexgb", "universal", "reduced", "finite_field"):
            if not (args.filter and args.n):
                raise ValueError(f"{args.check} needs --n and --filter for a single run")
            filt = parse_filter_text(args.filter, args.n, default_kind="lower")
            if args.check == "lexgb":
                single = check_lexgb(filt, field=field, pair_budget=args.pair_budget)
            elif args.check == "universal":
                single = check_universal(filt, order_budget=args.order_budget, seed=args.seed,
                                         field=field, exhaustive_lex=args.n <= 4)
            elif args.check == "reduced":
                single = check_reduced(filt, pair_budget=args.pair_budget)
            else:
                single = check_finite_field(filt, field.p if field.p else 3,
                                            order_budget=min(args.order_budget, 10),
                                            seed=args.seed, pair_budget=args.pair_budget)
        elif args.check == "restricted":
            if not args.shape:
                raise ValueError("restricted needs --shape for a single run")
            single = check_restricted(parse_partition_text(args.shape),
                                      pair_budget=args.pair_budget)
        else:
            raise ValueError(f"{args.check} takes --n, not --filter/--shape")
    elif args.check != "all" and args.n is not None and args.check in (
            "vanishing", "descent", "containment"):
        if args.check == "vanishing":
            single = check_stratum_vanishing(args.n, samples=args.samples, seed=args.seed)
        elif args.check == "descent":
            single = check_coefficient_descent(args.n, trials=args.trials, seed=args.seed,
                                               pair_budget=args.pair_budget)
        else:
            single = check_containment(args.n, pair_budget=args.pair_budget)
    if single is not None:
        reports = [single]
    else:
        min_n = args.n if args.n is not None else 2
        max_n = args.n if args.n is not None else args.max_n
        config = SuiteConfig(
            checks=selection,
            min_n=min_n,
            max_n=max_n,
            field=field,
            seed=args.seed,
            samples=args.samples,
            trials=args.trials,
            order_budget=args.order_budget,
            pair_budget=args.pair_budget,
            include_controls=args.check == "all" and not args.no_controls,
        )
        reports = run_suite(config)
    _emit(reports, args.report, args.out)
    return suite_exit_code(reports)


def _add_output_flags(p) -> None:
    p.add_argument("--report", choices=("text", "json"), default="text",
                   help="text summary or one JSON object per line")
    p.add_argument("--out", default=None, help="write the report to a file")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spechtgb",
        description="Specht ideals of dominance filters: exact bases, strata "
                    "oracles, and a verification suite.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gens_p = sub.add_parser("gens", help="list a generator set")
    gens_p.add_argument("--n", type=int, required=True)
    gens_p.add_argument("--filter", help='e.g. "lower<=[2,1]" or "[2,1],[1,1,1]"')
    gens_p.add_argument("--shape", help='a single shape, e.g. "[2,1]" or "21"')
    gens_p.add_argument("--mode", default="column_standard",
                        choices=("all", "column_standard", "standard", "restricted_standard"))
    gens_p.add_argument("--field", default="Q", help='"Q" or a prime field like "F7"')
    _add_output_flags(gens_p)

    gb_p = sub.add_parser("gb", help="reduced basis of a filter's ideal")
    gb_p.add_argument("--n", type=int, required=True)
    gb_p.add_argument("--filter", required=True)
    gb_p.add_argument("--order", default=None, help='e.g. "lex:3,1,2" or "grevlex:1,2,3"')
    gb_p.add_argument("--field", default="Q")
    gb_p.add_argument("--pair-budget", type=int, default=DEFAULT_PAIR_BUDGET)
    _add_output_flags(gb_p)

    oracle_p = sub.add_parser("oracle", help="reduced basis of a strata vanishing ideal")
    oracle_p.add_argument("--n", type=int, required=True)
    oracle_p.add_argument("--filter", required=True,
                          help="upper filters are used directly, lower ones complemented")
    oracle_p.add_argument("--pair-budget", type=int, default=DEFAULT_PAIR_BUDGET)
    _add_output_flags(oracle_p)

    verify_p = sub.add_parser("verify", help="run verification checks")
    verify_p.add_argument("check", choices=CHECK_NAMES + ("all",))
    verify_p.add_argument("--max-n", type=int, default=4)
    verify_p.add_argument("--n", type=int, default=None)
    verify_p.add_argument("--filter", default=None)
    verify_p.add_argument("--shape", default=None)
    verify_p.add_argument("--field", default="Q")
    verify_p.add_argument("--seed", type=int, default=0)
    verify_p.add_argument("--samples", type=int, default=10)
    verify_p.add_argument("--trials", type=int, default=20)
    verify_p.add_argument("--order-budget", type=int, default=25)
    verify_p.add_argument("--pair-budget", type=int, default=DEFAULT_PAIR_BUDGET)
    verify_p.add_argument("--no-controls", action="store_true",
                          help="skip the corrupted-fixture controls")
    _add_output_flags(verify_p)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "gens": _cmd_gens,
        "gb": _cmd_gb,
        "oracle": _cmd_oracle,
        "verify": _cmd_verify,
    }
    try:
        return handlers[args.command](args)
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
