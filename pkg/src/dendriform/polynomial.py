"""
src/dendriform/polynomial.py

Polynomials on planar binary trees: finite rational combinations of the
monomials x^t. The leaf is x^0 = 1 and (. .) is x.

On monomials
    x^s ≺ x^t = Σ_{r ∈ s ⊣ t} x^r
    x^s ≻ x^t = Σ_{r ∈ s ⊢ t} x^r
    x^s · x^t = Σ_{r ∈ s + t} x^r
and everything is extended bilinearly. Unit rules follow the zero
conventions of the tree operations: p ≺ 1 = p, 1 ≻ p = p, 1 ≺ p = 0,
p ≻ 1 = 0; the split of 1 · 1 is undefined.

Coefficients are Fractions. Terms are kept in canonical tree order with zero
coefficients dropped, so two equal polynomials compare equal.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Dict, FrozenSet, Iterable, Iterator, Mapping, Tuple, Union

from ..arithmetic import decompose, left_trees, right_trees, sum_trees
from ..arithmetic.words import Connective, DendriformWord
from ..config import get_settings
from ..errors import CapExceededError, DegreeError, DendriformUnitError
from ..trees import LEAF, Tree, graft, parse, render, trees_of_degree

Scalar = Union[int, Fraction]
Term = Tuple[Tree, Fraction]


@dataclass(frozen=True)
class Polynomial:
    """A finite rational combination of monomials x^t."""
    terms: Tuple[Term, ...] = ()

    @classmethod
    def from_terms(cls, terms: Union[Mapping[Tree, Scalar], Iterable[Tuple[Tree, Scalar]]]) -> "Polynomial":
        """Collect terms, summing repeated trees and dropping zeros."""
        items = terms.items() if isinstance(terms, Mapping) else terms
        collected: Dict[Tree, Fraction] = {}
        for tree, coeff in items:
            collected[tree] = collected.get(tree, Fraction(0)) + Fraction(coeff)
        return cls(tuple(sorted(
            ((t, c) for t, c in collected.items() if c != 0),
            key=lambda term: term[0].key,
        )))

    @classmethod
    def monomial(cls, t: Tree, coeff: Scalar = 1) -> "Polynomial":
        return cls.from_terms([(t, coeff)])

    @classmethod
    def scalar(cls, c: Scalar) -> "Polynomial":
        return cls.monomial(LEAF, c)

    def __iter__(self) -> Iterator[Term]:
        return iter(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def coefficient(self, t: Tree) -> Fraction:
        for tree, coeff in self.terms:
            if tree == t:
                return coeff
        return Fraction(0)

    @property
    def support(self) -> FrozenSet[Tree]:
        return frozenset(t for t, _ in self.terms)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def scalar_part(self) -> Fraction:
        """Coefficient of x^0 = 1."""
        return self.coefficient(LEAF)

    @property
    def positive_part(self) -> "Polynomial":
        """The polynomial without its scalar term."""
        return Polynomial(tuple(term for term in self.terms if not term[0].is_leaf))

    def __add__(self, other: "Polynomial") -> "Polynomial":
        return add(self, other)

    def __neg__(self) -> "Polynomial":
        return scale(-1, self)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return add(self, scale(-1, other))

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        return mul(self, other)

    def __str__(self) -> str:
        return render_polynomial(self)

    def __repr__(self) -> str:
        return f"Polynomial('{render_polynomial(self)}')"

    def to_dict(self) -> Dict[str, Any]:
        """JSON-ready coefficient list; Fractions are written as strings."""
        return {
            "terms": [
                {"tree": render(t), "coefficient": str(c)} for t, c in self.terms
            ]
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "Polynomial":
        return cls.from_terms(
            [(parse(term["tree"]), Fraction(term["coefficient"])) for term in data["terms"]]
        )


ZERO = Polynomial()
ONE = Polynomial.scalar(1)
X = Polynomial.monomial(graft(LEAF, LEAF))


def add(p: Polynomial, q: Polynomial) -> Polynomial:
    return Polynomial.from_terms(list(p.terms) + list(q.terms))


def scale(c: Scalar, p: Polynomial) -> Polynomial:
    return Polynomial.from_terms([(t, Fraction(c) * coeff) for t, coeff in p.terms])


def _bilinear(op: Callable[[Tree, Tree], FrozenSet[Tree]], p: Polynomial, q: Polynomial) -> Polynomial:
    collected = []
    for s, a in p.terms:
        for t, b in q.terms:
            for r in op(s, t):
                collected.append((r, a * b))
    return Polynomial.from_terms(collected)


def _check_units(p: Polynomial, q: Polynomial, symbol: str) -> None:
    if p.scalar_part != 0 and q.scalar_part != 0:
        raise DendriformUnitError(f"1 {symbol} 1 is undefined: both arguments have a scalar part")


def prec(p: Polynomial, q: Polynomial) -> Polynomial:
    """
    The left half p ≺ q of the product.

    Raises:
        DendriformUnitError: both p and q have a non-zero scalar part
    """
    _check_units(p, q, "≺")
    return _bilinear(left_trees, p, q)


def succ(p: Polynomial, q: Polynomial) -> Polynomial:
    """
    The right half p ≻ q of the product.

    Raises:
        DendriformUnitError: both p and q have a non-zero scalar part
    """
    _check_units(p, q, "≻")
    return _bilinear(right_trees, p, q)


def mul(p: Polynomial, q: Polynomial) -> Polynomial:
    """The associative product; 1 is a two-sided unit."""
    return _bilinear(sum_trees, p, q)


def _substitute(w: DendriformWord, q: Polynomial) -> Polynomial:
    if w.is_one:
        return q
    left = _substitute(w.left, q)
    right = _substitute(w.right, q)
    if w.connective is Connective.LEFT:
        return prec(left, right)
    return succ(left, right)


def compose(p: Polynomial, q: Polynomial) -> Polynomial:
    """
    Substitute q for x in p.

    Each monomial x^t is written as a word in x (the decomposition of t)
    and x is replaced by q; the result is extended linearly in p. x^0 ∘ q = 1.

    Raises:
        DendriformUnitError: q has a non-zero scalar part
    """
    if q.scalar_part != 0:
        raise DendriformUnitError("cannot substitute a polynomial with a scalar part")
    result = ZERO
    for t, coeff in p.terms:
        if t.is_leaf:
            image = ONE
        else:
            image = _substitute(decompose(t), q)
        result = add(result, scale(coeff, image))
    return result


def poly_of_int(n: int) -> Polynomial:
    """x^n: the sum of x^t over all trees of degree n."""
    if n < 0:
        raise DegreeError(f"degree must be non-negative, got {n}")
    cap = get_settings().enum_cap
    if n > cap:
        raise CapExceededError("poly_of_int", n, cap)
    return Polynomial.from_terms([(t, 1) for t in trees_of_degree(n)])


def _render_coefficient(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def render_polynomial(p: Polynomial) -> str:
    """
    Text form, e.g. `1 + 2*x^{(. .)} - 1/2*x^{((. .) .)}`.

    Terms appear in canonical tree order; the zero polynomial is `0`.
    """
    if p.is_zero:
        return "0"
    pieces = []
    for i, (t, c) in enumerate(p.terms):
        magnitude = abs(c) if i else c
        body = _render_coefficient(magnitude)
        if not t.is_leaf:
            body = f"{body}*x^{{{render(t)}}}"
        if i:
            pieces.append((" - " if c < 0 else " + ") + body)
        else:
            pieces.append(body)
    return "".join(pieces)
