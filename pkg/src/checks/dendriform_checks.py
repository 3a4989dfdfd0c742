"""
src/checks/dendriform_checks.py

The polynomial algebra on trees. On scalar-free p, q, r:

    (p ≺ q) ≺ r = p ≺ (q · r)
    (p ≻ q) ≺ r = p ≻ (q ≺ r)
    (p · q) ≻ r = p ≻ (q ≻ r)

and p · q = p ≺ q + p ≻ q.
"""

from fractions import Fraction
from itertools import product
from typing import List

import numpy as np

from ..dendriform import ONE, X, ZERO, Polynomial, add, compose, mul, poly_of_int, prec, succ
from ..trees import parse, trees_of_degree
from .base import CheckCase, CheckCategory, CheckContext, CheckOutcome, Tally


def _axiom_failures(p: Polynomial, q: Polynomial, r: Polynomial) -> List[str]:
    failures = []
    if prec(prec(p, q), r) != prec(p, mul(q, r)):
        failures.append("(p≺q)≺r ≠ p≺(q·r)")
    if prec(succ(p, q), r) != succ(p, prec(q, r)):
        failures.append("(p≻q)≺r ≠ p≻(q≺r)")
    if succ(mul(p, q), r) != succ(p, succ(q, r)):
        failures.append("(p·q)≻r ≠ p≻(q≻r)")
    if mul(p, q) != add(prec(p, q), succ(p, q)):
        failures.append("p·q ≠ p≺q + p≻q")
    return failures


def random_polynomial(rng: np.random.Generator, max_degree: int = 2, max_terms: int = 3) -> Polynomial:
    """A scalar-free polynomial with small rational coefficients."""
    terms = []
    for _ in range(int(rng.integers(1, max_terms + 1))):
        pool = trees_of_degree(int(rng.integers(1, max_degree + 1)))
        tree = pool[int(rng.integers(len(pool)))]
        coeff = Fraction(int(rng.integers(-5, 6)), int(rng.integers(1, 4)))
        terms.append((tree, coeff))
    return Polynomial.from_terms(terms)


def check_axioms_on_basis(ctx: CheckContext) -> CheckOutcome:
    tally = Tally()
    for degrees in product(range(1, ctx.max_degree + 1), repeat=3):
        if sum(degrees) > ctx.max_degree:
            continue
        for r, s, t in product(*(trees_of_degree(d) for d in degrees)):
            broken = _axiom_failures(Polynomial.monomial(r), Polynomial.monomial(s), Polynomial.monomial(t))
            tally.expect(not broken, lambda: f"{'; '.join(broken)} on x^{r}, x^{s}, x^{t}")
    return tally.outcome(f"basis triples of total degree ≤ {ctx.max_degree}")


def check_axioms_on_random(ctx: CheckContext) -> CheckOutcome:
    tally = Tally()
    rng = ctx.rng()
    for _ in range(ctx.dendriform_samples):
        p, q, r = (random_polynomial(rng) for _ in range(3))
        broken = _axiom_failures(p, q, r)
        tally.expect(not broken, lambda: f"{'; '.join(broken)} on {p} | {q} | {r}")
        tally.expect(
            mul(mul(p, q), r) == mul(p, mul(q, r)),
            lambda: f"product is not associative on {p} | {q} | {r}",
        )
    return tally.outcome(f"{ctx.dendriform_samples} random combinations (seed {ctx.seed})")


def check_worked_values(ctx: CheckContext) -> CheckOutcome:
    tally = Tally()
    ab, ba = parse("((. .) .)"), parse("(. (. .))")
    tally.expect(prec(X, X) == Polynomial.monomial(ba), lambda: f"x≺x = {prec(X, X)}")
    tally.expect(succ(X, X) == Polynomial.monomial(ab), lambda: f"x≻x = {succ(X, X)}")
    tally.expect(mul(X, X) == poly_of_int(2), lambda: f"x·x = {mul(X, X)}")
    composed = compose(Polynomial.monomial(ab), Polynomial.monomial(ba))
    tally.expect(
        composed == Polynomial.monomial(parse("((. (. .)) (. .))")),
        lambda: f"x^{ab} ∘ x^{ba} = {composed}",
    )
    p = add(Polynomial.monomial(ab, Fraction(1, 2)), Polynomial.monomial(ba, -3))
    tally.expect(mul(p, ONE) == p and mul(ONE, p) == p, lambda: "1 is not a unit for ·")
    tally.expect(prec(p, ONE) == p and succ(ONE, p) == p, lambda: "p≺1 or 1≻p is not p")
    tally.expect(prec(ONE, p) == ZERO and succ(p, ONE) == ZERO, lambda: "1≺p or p≻1 is not 0")
    tally.expect(compose(p, X) == p, lambda: "p ∘ x ≠ p")
    return tally.outcome()


def check_powers(ctx: CheckContext) -> CheckOutcome:
    tally = Tally()
    limit = min(5, ctx.max_degree)
    for n in range(limit + 1):
        for m in range(limit + 1 - n):
            tally.expect(
                mul(poly_of_int(n), poly_of_int(m)) == poly_of_int(n + m),
                lambda: f"x^{n} · x^{m} ≠ x^{n + m}",
            )
    for n in range(ctx.max_degree + 1):
        for m in range(1, ctx.max_degree + 1):
            if n * m <= ctx.max_degree:
                tally.expect(
                    compose(poly_of_int(n), poly_of_int(m)) == poly_of_int(n * m),
                    lambda: f"x^{n} ∘ x^{m} ≠ x^{n * m}",
                )
    return tally.outcome()


def check_compose_associative(ctx: CheckContext) -> CheckOutcome:
    tally = Tally()
    bound = min(8, ctx.max_degree + 2)
    for degrees in product(range(1, bound + 1), repeat=3):
        if degrees[0] * degrees[1] * degrees[2] > bound:
            continue
        for a, b, c in product(*(trees_of_degree(d) for d in degrees)):
            p, q, r = (Polynomial.monomial(t) for t in (a, b, c))
            tally.expect(
                compose(compose(p, q), r) == compose(p, compose(q, r)),
                lambda: f"∘ is not associative on x^{a}, x^{b}, x^{c}",
            )
    return tally.outcome(f"monomials with degree product ≤ {bound}")


DENDRIFORM_CHECKS = [
    CheckCase(
        id="dendriform_axioms_basis",
        category=CheckCategory.DENDRIFORM,
        description="dendriform relations on basis triples",
        run=check_axioms_on_basis,
    ),
    CheckCase(
        id="dendriform_axioms_random",
        category=CheckCategory.DENDRIFORM,
        description="dendriform relations on random rational combinations",
        run=check_axioms_on_random,
    ),
    CheckCase(
        id="dendriform_worked_values",
        category=CheckCategory.DENDRIFORM,
        description="x≺x, x≻x, units and substitution of x",
        run=check_worked_values,
    ),
    CheckCase(
        id="dendriform_powers",
        category=CheckCategory.DENDRIFORM,
        description="x^n · x^m = x^(n+m) and x^n ∘ x^m = x^(nm)",
        run=check_powers,
    ),
    CheckCase(
        id="dendriform_compose_associative",
        category=CheckCategory.DENDRIFORM,
        description="composition of monomials is associative",
        run=check_compose_associative,
    ),
]
