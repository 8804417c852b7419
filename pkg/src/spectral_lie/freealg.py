"""The free allowable algebra on a graded alphabet: basis, bracket, operations.

Basis elements are pairs (ops, w) of a CU operation monomial and a basic
product, subject to the excess condition that the last exponent is at
least the degree of w.  Elements are mod-2 sets of such pairs.
"""

from __future__ import annotations

from collections import Counter
from functools import cache
from typing import Iterable, Mapping, Sequence

from . import hall, qbar
from .hall import BasicProduct, Letter

AlgebraBasisElement = tuple  # (ops, BasicProduct)
Element = frozenset  # frozenset[AlgebraBasisElement]

ZERO: Element = frozenset()


def basis_degree(term: AlgebraBasisElement) -> int:
    ops, w = term
    return qbar.monomial_degree(ops, w.degree)


def is_basis_element(term: AlgebraBasisElement) -> bool:
    ops, w = term
    return hall.is_basic(w) and qbar.is_cu(ops) and (not ops or ops[-1] >= w.degree)


def generator(letter: Letter) -> Element:
    return frozenset({((), BasicProduct.of_letter(letter))})


def element_degree(element: Element) -> int:
    """Degree of a homogeneous element; raises on mixed degrees."""
    degrees = {basis_degree(t) for t in element}
    if len(degrees) != 1:
        raise ValueError(f"element is not homogeneous: degrees {sorted(degrees)}")
    return degrees.pop()


def term_sort_key(term: AlgebraBasisElement) -> tuple:
    ops, w = term
    return (w.key, ops)


def _weight_cap(alphabet: Sequence[Letter], max_degree: int) -> int:
    min_shift = min(x.degree for x in alphabet) - 1  # each letter adds at least this
    return max(1, (max_degree - 1) // min_shift)


def enumerate_basis(alphabet: Iterable[Letter], max_degree: int) -> dict[int, list[AlgebraBasisElement]]:
    """All basis elements of degree <= max_degree, keyed by degree.

    Within a degree, elements are ordered by product (Hall order) and
    then lexicographically by operation monomial.
    """
    if max_degree < 2:
        raise ValueError("max_degree must be at least 2")
    alphabet = hall.validate_alphabet(alphabet)
    out: dict[int, list[AlgebraBasisElement]] = {d: [] for d in range(2, max_degree + 1)}
    if not alphabet:
        return out
    products = [w for w in hall.gen_basic_products(alphabet, _weight_cap(alphabet, max_degree))
                if w.degree <= max_degree]
    for w in products:
        for ops in sorted(qbar.iter_cu_monomials(w.degree, max_degree)):
            out[qbar.monomial_degree(ops, w.degree)].append((ops, w))
    return out


def poincare(alphabet: Iterable[Letter], max_degree: int) -> dict[int, int]:
    """Degree-wise dimensions of the free algebra on the alphabet."""
    return {d: len(terms) for d, terms in enumerate_basis(alphabet, max_degree).items()}


def bracket(e1: Element, e2: Element) -> Element:
    """Shifted bracket, extended bilinearly.

    Terms carrying a nonempty operation monomial bracket to zero; pure
    products reduce through the Hall recursion, with squares re-expressed
    as operation terms.
    """
    for e in (e1, e2):
        if e:
            element_degree(e)  # homogeneity check
    acc: set = set()
    for ops1, w1 in e1:
        if ops1:
            continue
        for ops2, w2 in e2:
            if ops2:
                continue
            acc ^= hall.reduce_pair(w1, w2)
    return frozenset(acc)


def apply_qbar(j: int, element: Element) -> Element:
    """Apply the operation Q^j, normalizing against each term's inner product degree."""
    acc: set = set()
    for ops, w in element:
        for reduced in qbar.reduce_against((j,) + ops, w.degree):
            term = (reduced, w)
            acc ^= {term}
    return frozenset(acc)


def alphabet_for_dims(dims: Mapping[int, int]) -> tuple[Letter, ...]:
    """Letters realizing the given graded dimensions, indexed 1.. in degree order."""
    letters = []
    idx = 1
    for degree in sorted(dims):
        count = dims[degree]
        if count == 0:
            continue
        if degree < 2:
            raise ValueError("graded dimensions must be supported in degrees >= 2")
        if count < 0:
            raise ValueError("negative dimension")
        for _ in range(count):
            letters.append(Letter(idx, degree))
            idx += 1
    return tuple(letters)


def homology_of_free(dims: Mapping[int, int], max_degree: int) -> dict[int, int]:
    """Dimensions of the free algebra on a graded vector space given by dims."""
    return poincare(alphabet_for_dims(dims), max_degree)


def hilton_milnor_dims(sphere_dims: Sequence[int], max_degree: int) -> dict[int, int]:
    """Dimension count through the wedge decomposition.

    One single-generator summand per basic product w on letters in the
    listed degrees, contributing the degree-|w| series; only finitely
    many products land below the cutoff.
    """
    if any(d < 2 for d in sphere_dims):
        raise ValueError("sphere dimensions must be at least 2")
    if max_degree < 2:
        raise ValueError("max_degree must be at least 2")
    totals = {d: 0 for d in range(2, max_degree + 1)}
    if not sphere_dims:
        return totals
    alphabet = tuple(Letter(i + 1, d) for i, d in enumerate(sphere_dims))
    for w in hall.gen_basic_products(alphabet, _weight_cap(alphabet, max_degree)):
        if w.degree > max_degree:
            continue
        for degree, count in qbar.rn_module_dims(w.degree, max_degree).items():
            totals[degree] += count
    return totals


def multiplicities(w: BasicProduct, size: int) -> tuple[int, ...]:
    counts = Counter(x.index for x in w.letters())
    return tuple(counts.get(i, 0) for i in range(1, size + 1))


def count_basic(m: Sequence[int]) -> int:
    """Number of basic products with the given letter multiplicities."""
    m = tuple(m)
    if not m or sum(m) < 1 or any(x < 0 for x in m):
        raise ValueError("need a non-negative multiplicity vector with positive total")
    weight = sum(m)
    alphabet = tuple(Letter(i + 1, 2) for i in range(len(m)))
    return sum(
        1
        for w in hall.gen_basic_products(alphabet, weight)
        if w.weight == weight and multiplicities(w, len(m)) == m
    )
