"""Specht polynomials, generator sets for dominance filters, and span ranks.

A tableau's polynomial is the product of (x_i - x_j) over all pairs i above j
in the same column; single-row shapes give the constant 1. Generator sets are
deduplicated after normalizing the leading coefficient under the reference
lex order x1 < ... < xn to 1, so the set attached to a filter does not depend
on which order a later computation uses.
"""

from __future__ import annotations

from dataclasses import dataclass

from ._linalg import rank as _matrix_rank
from .combinatorics import (
    Partition,
    PartitionFilter,
    Tableau,
    _as_permutation,
    dominates,
    partitions_of,
    permutation_sign,
    tableaux,
    validate_partition,
)
from .polyring import QQ, Field, Monomial, Poly, leading_term, lex_order


@dataclass(frozen=True)
class SpechtGenerator:
    """One generator: the tableau it came from and its normalized polynomial."""

    shape: Partition
    tableau: Tableau
    polynomial: Poly


def specht_polynomial(t: Tableau, field: Field = QQ) -> Poly:
    """Expanded column-difference product of a tableau."""
    n = t.n
    result = Poly.constant(1, n, field)
    for column in t.columns():
        for a in range(len(column)):
            for b in range(a + 1, len(column)):
                i, j = column[a], column[b]
                result = result * (Poly.variable(i, n, field) - Poly.variable(j, n, field))
    return result


def _normalized(p: Poly, reference) -> Poly:
    _, lc = leading_term(p, reference)
    if lc == p.field.one:
        return p
    return p.term_mul((0,) * p.nvars, p.field.inv(lc))


def shape_generators(shape, *, mode: str = "column_standard",
                     field: Field = QQ) -> tuple[SpechtGenerator, ...]:
    """Deduplicated generators for one shape, in tableau enumeration order.

    Sign twins collapse under the normalization, and so do tableaux that only
    shuffle entries across singleton columns (those never enter the product).
    The first tableau producing each polynomial is the one kept.
    """
    lam = validate_partition(shape)
    reference = lex_order(sum(lam))
    seen: set[Poly] = set()
    out = []
    for t in tableaux(lam, mode):
        p = _normalized(specht_polynomial(t, field), reference)
        if p in seen:
            continue
        seen.add(p)
        out.append(SpechtGenerator(shape=lam, tableau=t, polynomial=p))
    return tuple(out)


def filter_generators(filt: PartitionFilter, *, mode: str = "column_standard",
                      field: Field = QQ) -> tuple[SpechtGenerator, ...]:
    """Generator set attached to a nonempty lower filter: the union of the
    per-shape sets, shapes in canonical enumeration order."""
    if filt.kind != "lower":
        raise ValueError("generator sets attach to lower filters")
    if not len(filt):
        raise ValueError("the empty filter has no generator set")
    out: list[SpechtGenerator] = []
    for shape in filt.sorted_members():
        out.extend(shape_generators(shape, mode=mode, field=field))
    return tuple(out)


def restricted_standard_generators(shape, *, field: Field = QQ) -> tuple[SpechtGenerator, ...]:
    """Standard-tableau generators of every shape below the given one in
    dominance that keeps the same first-row length.

    A much smaller set than the full filter generators that still generates
    the shape's ideal and stays a basis under the reference lex order.
    """
    lam = validate_partition(shape)
    out: list[SpechtGenerator] = []
    for mu in partitions_of(sum(lam)):
        if mu[0] == lam[0] and dominates(lam, mu):
            out.extend(shape_generators(mu, mode="standard", field=field))
    return tuple(out)


def initial_monomial(t: Tableau) -> Monomial:
    """Closed form for the lex-leading monomial of a column-standard tableau's
    polynomial: entry i in 1-based row d contributes x_i^(d-1)."""
    if not t.is_column_standard():
        raise ValueError("the closed form only covers column-standard tableaux")
    rows = t.row_index()
    return tuple(rows[i] - 1 for i in range(1, t.n + 1))


def column_stabilizer_sign_check(t: Tableau, perm) -> bool:
    """Whether relabeling by a column-preserving permutation scales the
    polynomial by exactly the permutation's sign.

    Rejects permutations that move any entry out of its column.
    """
    mapping = _as_permutation(perm, t.n)
    for column in t.columns():
        if {mapping[e] for e in column} != set(column):
            raise ValueError("permutation does not preserve the columns")
    lhs = specht_polynomial(t.relabel(mapping))
    rhs = specht_polynomial(t) * permutation_sign(mapping, t.n)
    return lhs == rhs


def standard_span_rank(shape, *, field: Field = QQ) -> tuple[int, int]:
    """(rank of the span of every tableau's polynomial, number of standard tableaux).

    Every filling column-sorts to a column-standard one with the same
    polynomial up to sign (the sign rule has its own check), so the span is
    computed from the deduplicated column-standard representatives.
    """
    lam = validate_partition(shape)
    gens = shape_generators(lam, mode="column_standard", field=field)
    monomials = sorted({m for g in gens for m in g.polynomial.terms})
    index = {m: i for i, m in enumerate(monomials)}
    rows = []
    for g in gens:
        row = [field.zero] * len(monomials)
        for m, c in g.polynomial.terms.items():
            row[index[m]] = c
        rows.append(row)
    standard_count = len(tableaux(lam, "standard"))
    return _matrix_rank(rows, field), standard_count
