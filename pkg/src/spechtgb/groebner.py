"""Exact Buchberger engine: division, S-pairs, reduced bases, ideal operations.

Determinism contract: identical inputs (same generator sequence, same order)
give identical outputs. Pairs are selected by lcm total degree with (i, j)
index tiebreaks, the reducer is the earliest match in basis sequence, and
reduced bases come out monic and sorted ascending by leading monomial, so two
independently computed bases of the same ideal can be compared with ==.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass

from .polyring import (
    QQ,
    Field,
    Monomial,
    Poly,
    leading_term,
    lex_order,
    mono_degree,
    mono_div,
    mono_divides,
    mono_lcm,
)

DEFAULT_PAIR_BUDGET = 200_000


class PairBudgetExceeded(RuntimeError):
    """Buchberger hit the configured S-pair budget before stabilizing."""

    def __init__(self, budget: int, basis_size: int):
        super().__init__(f"S-pair budget {budget} exhausted with {basis_size} basis elements")
        self.budget = budget
        self.basis_size = basis_size


def _neg_key(key):
    # order keys are nested tuples of ints/Fractions; negate for min-heap use
    if isinstance(key, tuple):
        return tuple(_neg_key(part) for part in key)
    return -key


def _prepare_reducers(basis, order):
    out = []
    for g in basis:
        lm, lc = leading_term(g, order)
        tail = tuple((m, c) for m, c in g.terms.items() if m != lm)
        out.append((lm, g.field.inv(lc), tail))
    return out


def _reduce_terms(terms: dict, reducers, field: Field, keyfn, quotients=None) -> dict:
    """Fully reduce a term dict in place, returning the remainder dict.

    Monomials are processed in strictly decreasing key order via a lazy heap
    (stale entries are skipped), so tail substitutions never touch monomials
    already settled into the remainder.
    """
    zero = field.zero
    heap = [(_neg_key(keyfn(m)), m) for m in terms]
    heapq.heapify(heap)
    remainder: dict = {}
    while heap:
        _, m = heapq.heappop(heap)
        c = terms.pop(m, None)
        if c is None:
            continue
        for idx, (lm, inv_lc, tail) in enumerate(reducers):
            divisible = True
            for a, b in zip(m, lm):
                if a < b:
                    divisible = False
                    break
            if not divisible:
                continue
            shift = tuple(a - b for a, b in zip(m, lm))
            factor = field.mul(c, inv_lc)
            if quotients is not None:
                q = quotients[idx]
                q[shift] = field.add(q.get(shift, zero), factor)
            for tm, tc in tail:
                key = tuple(a + b for a, b in zip(tm, shift))
                prev = terms.get(key)
                if prev is None:
                    v = field.neg(field.mul(factor, tc))
                    terms[key] = v
                    heapq.heappush(heap, (_neg_key(keyfn(key)), key))
                else:
                    v = field.sub(prev, field.mul(factor, tc))
                    if v == zero:
                        del terms[key]
                    else:
                        terms[key] = v
            break
        else:
            remainder[m] = c
    return remainder


def _require_nonzero(basis) -> list[Poly]:
    gens = list(basis)
    for g in gens:
        if not g.terms:
            raise ValueError("zero polynomial in basis")
    return gens


def normal_form(f: Poly, basis, order) -> Poly:
    """Remainder of f on division by the basis; no remainder term is reducible."""
    gens = _require_nonzero(basis)
    if not gens or not f.terms:
        return f
    reducers = _prepare_reducers(gens, order)
    rem = _reduce_terms(dict(f.terms), reducers, f.field, order.key)
    return Poly._raw(f.nvars, f.field, rem)


def division(f: Poly, basis, order) -> tuple[list[Poly], Poly]:
    """Quotients and remainder with f == sum(q_i * basis_i) + remainder."""
    gens = _require_nonzero(basis)
    quotients = [dict() for _ in gens]
    if not gens or not f.terms:
        return [Poly.zero(f.nvars, f.field) for _ in gens], f
    reducers = _prepare_reducers(gens, order)
    rem = _reduce_terms(dict(f.terms), reducers, f.field, order.key, quotients)
    qs = [Poly._raw(f.nvars, f.field, q) for q in quotients]
    return qs, Poly._raw(f.nvars, f.field, rem)


def s_polynomial(f: Poly, g: Poly, order) -> Poly:
    """lcm/in(f) * f / lc(f) - lcm/in(g) * g / lc(g): leading terms cancel."""
    lmf, lcf = leading_term(f, order)
    lmg, lcg = leading_term(g, order)
    lcm = mono_lcm(lmf, lmg)
    field = f.field
    a = f.term_mul(mono_div(lcm, lmf), field.inv(lcf))
    b = g.term_mul(mono_div(lcm, lmg), field.inv(lcg))
    return a - b


def _chain_applies(i: int, j: int, lcm: Monomial, lms, pending) -> bool:
    # sound at pop time: a linking pair absent from pending was popped earlier,
    # so the justification chain strictly descends in pop order
    for k in range(len(lms)):
        if k == i or k == j:
            continue
        if not mono_divides(lms[k], lcm):
            continue
        a = (i, k) if i < k else (k, i)
        b = (j, k) if j < k else (k, j)
        if a not in pending and b not in pending:
            return True
    return False


def buchberger(generators, order, *, pair_budget: int = DEFAULT_PAIR_BUDGET,
               use_chain_criterion: bool = True) -> tuple[list[Poly], dict]:
    """Grow the nonzero generators into a Groebner basis; returns (basis, stats).

    Raises PairBudgetExceeded once more than pair_budget pairs are popped.
    """
    stats = {
        "pairs_processed": 0,
        "skipped_coprime": 0,
        "skipped_chain": 0,
        "zero_reductions": 0,
        "basis_added": 0,
    }
    basis: list[Poly] = []
    for g in generators:
        if g.terms:
            _, lc = leading_term(g, order)
            basis.append(g.term_mul((0,) * g.nvars, g.field.inv(lc)))
    if not basis:
        return [], stats
    field = basis[0].field
    reducers = _prepare_reducers(basis, order)
    lms = [r[0] for r in reducers]
    heap: list = []
    pending: set = set()

    def push_pairs(j: int) -> None:
        for i in range(j):
            lcm = mono_lcm(lms[i], lms[j])
            heapq.heappush(heap, (mono_degree(lcm), i, j))
            pending.add((i, j))

    for j in range(len(basis)):
        push_pairs(j)

    while heap:
        _, i, j = heapq.heappop(heap)
        pending.discard((i, j))
        stats["pairs_processed"] += 1
        if stats["pairs_processed"] > pair_budget:
            raise PairBudgetExceeded(pair_budget, len(basis))
        lmi, lmj = lms[i], lms[j]
        lcm = mono_lcm(lmi, lmj)
        if all(a + b == c for a, b, c in zip(lmi, lmj, lcm)):
            stats["skipped_coprime"] += 1
            continue
        if use_chain_criterion and _chain_applies(i, j, lcm, lms, pending):
            stats["skipped_chain"] += 1
            continue
        s = s_polynomial(basis[i], basis[j], order)
        rem = _reduce_terms(dict(s.terms), reducers, field, order.key)
        if not rem:
            stats["zero_reductions"] += 1
            continue
        r = Poly._raw(s.nvars, field, rem)
        lm, lc = leading_term(r, order)
        r = r.term_mul((0,) * r.nvars, field.inv(lc))
        basis.append(r)
        lms.append(lm)
        reducers.append((lm, field.one, tuple((m, c) for m, c in r.terms.items() if m != lm)))
        stats["basis_added"] += 1
        push_pairs(len(basis) - 1)
    return basis, stats


def reduce_groebner_basis(basis, order) -> list[Poly]:
    """The unique reduced basis: minimal, monic, fully inter-reduced, sorted.

    Input must already be a Groebner basis; the leading monomials are first
    minimalized under divisibility, then each survivor is normal-formed
    against the others.
    """
    gens = [g for g in basis if g.terms]
    if not gens:
        return []
    field = gens[0].field
    ordered = sorted(gens, key=lambda g: order.key(leading_term(g, order)[0]))
    minimal: list[Poly] = []
    kept_lms: list[Monomial] = []
    for g in ordered:
        lm = leading_term(g, order)[0]
        if any(mono_divides(p, lm) for p in kept_lms):
            continue
        minimal.append(g)
        kept_lms.append(lm)
    out = []
    for idx, g in enumerate(minimal):
        others = minimal[:idx] + minimal[idx + 1:]
        r = normal_form(g, others, order) if others else g
        _, lc = leading_term(r, order)
        out.append(r.term_mul((0,) * r.nvars, field.inv(lc)))
    out.sort(key=lambda g: order.key(leading_term(g, order)[0]))
    return out


def groebner_basis(generators, order, *, pair_budget: int = DEFAULT_PAIR_BUDGET,
                   use_chain_criterion: bool = True) -> list[Poly]:
    """Reduced monic Groebner basis of the generated ideal ([] for the zero ideal)."""
    basis, _ = buchberger(generators, order, pair_budget=pair_budget,
                          use_chain_criterion=use_chain_criterion)
    return reduce_groebner_basis(basis, order)


def _checker_chain(i: int, j: int, lcm: Monomial, lms, statuses) -> int | None:
    for k in range(len(lms)):
        if k == i or k == j or not mono_divides(lms[k], lcm):
            continue
        a = (i, k) if i < k else (k, i)
        b = (j, k) if j < k else (k, j)
        sa = statuses.get(a)
        sb = statuses.get(b)
        if sa is not None and sb is not None and sa != "failed" and sb != "failed":
            return k
    return None


def is_groebner_basis(gens, order, *, use_chain_criterion: bool = True) -> tuple[bool, dict]:
    """Whether every S-polynomial of the set reduces to zero by the set itself.

    The certificate lists one entry per unordered pair with how it settled:
    reduced to zero, skipped with coprime leading monomials, or skipped via a
    third element whose leading monomial divides the pair lcm and whose two
    linking pairs settled earlier without failure (justifications only point
    backwards in checking order, so they never loop).
    """
    basis = _require_nonzero(gens)
    reducers = _prepare_reducers(basis, order)
    lms = [r[0] for r in reducers]
    field = basis[0].field if basis else QQ
    statuses: dict = {}
    pairs = []
    counts = {"total": 0, "zero_reduction": 0, "coprime": 0, "chain": 0, "failed": 0}
    ok = True
    for j in range(len(basis)):
        for i in range(j):
            lcm = mono_lcm(lms[i], lms[j])
            if all(a + b == c for a, b, c in zip(lms[i], lms[j], lcm)):
                status = "coprime"
            else:
                k = _checker_chain(i, j, lcm, lms, statuses) if use_chain_criterion else None
                if k is not None:
                    status = f"chain:{k}"
                else:
                    s = s_polynomial(basis[i], basis[j], order)
                    rem = _reduce_terms(dict(s.terms), reducers, field, order.key)
                    status = "zero_reduction" if not rem else "failed"
                    if rem:
                        ok = False
            statuses[(i, j)] = status
            pairs.append({"i": i, "j": j, "status": status})
            counts["total"] += 1
            counts[status.split(":")[0]] += 1
    return ok, {"groebner": ok, "pairs": pairs, "counts": counts}


@dataclass(frozen=True)
class IdealBasis:
    """An ideal presented by generators; the zero ideal is the empty tuple."""

    nvars: int
    field: Field
    generators: tuple[Poly, ...]

    def __post_init__(self):
        kept = []
        for g in self.generators:
            if g.nvars != self.nvars or g.field != self.field:
                raise ValueError("generator lives in a different ring")
            if g.terms:
                kept.append(g)
        object.__setattr__(self, "generators", tuple(kept))

    def is_zero(self) -> bool:
        return not self.generators

    def groebner(self, order=None, *, pair_budget: int = DEFAULT_PAIR_BUDGET,
                 use_chain_criterion: bool = True) -> list[Poly]:
        order = order if order is not None else lex_order(self.nvars)
        return groebner_basis(self.generators, order, pair_budget=pair_budget,
                              use_chain_criterion=use_chain_criterion)

    def contains(self, f: Poly, order=None, *, pair_budget: int = DEFAULT_PAIR_BUDGET) -> bool:
        order = order if order is not None else lex_order(self.nvars)
        return ideal_membership(f, self.groebner(order, pair_budget=pair_budget), order)


def ideal_membership(f: Poly, groebner: list[Poly], order) -> bool:
    """Membership test against an already-computed Groebner basis."""
    if not groebner:
        return not f.terms
    return not normal_form(f, groebner, order).terms


def ideal_equal(a: IdealBasis, b: IdealBasis, order=None, *,
                pair_budget: int = DEFAULT_PAIR_BUDGET) -> bool:
    """Exact ideal equality via reduced-basis identity under one shared order."""
    if a.nvars != b.nvars or a.field != b.field:
        raise ValueError("ideals live in different rings")
    order = order if order is not None else lex_order(a.nvars)
    return a.groebner(order, pair_budget=pair_budget) == b.groebner(order, pair_budget=pair_budget)


class _EliminationOrder:
    """Block order for one trailing auxiliary variable: it dominates, the inner
    order breaks ties on the remaining coordinates."""

    __slots__ = ("inner", "nvars")

    def __init__(self, inner):
        self.inner = inner
        self.nvars = inner.nvars + 1

    def key(self, mono: Monomial):
        return (mono[-1], self.inner.key(mono[:-1]))


def _lift(f: Poly, with_aux: bool) -> Poly:
    # t*f when with_aux, else (1 - t)*f, in one extra trailing variable
    field = f.field
    terms: dict = {}
    for m, c in f.terms.items():
        if with_aux:
            terms[m + (1,)] = c
        else:
            terms[m + (0,)] = c
            terms[m + (1,)] = field.neg(c)
    return Poly._raw(f.nvars + 1, field, terms)


def ideal_intersection(a: IdealBasis, b: IdealBasis, *, order=None,
                       pair_budget: int = DEFAULT_PAIR_BUDGET) -> IdealBasis:
    """Intersection via t*A + (1-t)*B and elimination of the auxiliary t.

    The generators of the result are exactly the auxiliary-free elements of
    the reduced elimination basis, which form the reduced basis of the
    intersection under the inner order (every element involving t keeps t in
    its leading monomial, so dropping them cannot lose leading terms).
    """
    if a.nvars != b.nvars or a.field != b.field:
        raise ValueError("ideals live in different rings")
    inner = order if order is not None else lex_order(a.nvars)
    if a.is_zero() or b.is_zero():
        return IdealBasis(a.nvars, a.field, ())
    lifted = [_lift(f, True) for f in a.generators] + [_lift(g, False) for g in b.generators]
    gb = groebner_basis(lifted, _EliminationOrder(inner), pair_budget=pair_budget)
    kept = tuple(
        Poly._raw(a.nvars, a.field, {m[:-1]: c for m, c in g.terms.items()})
        for g in gb
        if all(m[-1] == 0 for m in g.terms)
    )
    return IdealBasis(a.nvars, a.field, kept)
