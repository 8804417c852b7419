"""Basic products over a graded alphabet and bracket reduction to the Hall basis.

Products are binary bracketing trees over letters; the classical ordering
(weight first, then a fixed structural tiebreak) makes the generated
bases reproducible.  Bracket reduction rewrites arbitrary bracket
expressions into combinations of basic products and squares, where the
square of a product w is recorded as the operation Q^{|w|} applied to w.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache, cached_property
from typing import Iterable, Union


@dataclass(frozen=True)
class Letter:
    index: int
    degree: int

    def __post_init__(self) -> None:
        if self.degree < 2:
            raise ValueError("letters must sit in degree at least 2")
        if self.index < 1:
            raise ValueError("letter indices start at 1")


@dataclass(frozen=True)
class BasicProduct:
    """Binary bracketing tree; a letter, or a bracket of two subtrees.

    Instances may hold arbitrary bracketings (candidates); is_basic
    decides membership in the Hall basis.
    """

    letter: Letter | None = None
    left: "BasicProduct | None" = None
    right: "BasicProduct | None" = None

    def __post_init__(self) -> None:
        if (self.letter is None) == (self.left is None or self.right is None):
            raise ValueError("need exactly a letter or a pair of factors")

    @classmethod
    def of_letter(cls, letter: Letter) -> "BasicProduct":
        return cls(letter=letter)

    @classmethod
    def bracket(cls, left: "BasicProduct", right: "BasicProduct") -> "BasicProduct":
        return cls(left=left, right=right)

    @property
    def is_letter(self) -> bool:
        return self.letter is not None

    @cached_property
    def weight(self) -> int:
        if self.is_letter:
            return 1
        return self.left.weight + self.right.weight

    @cached_property
    def degree(self) -> int:
        """Shifted degree: letter degrees summed, minus one per bracket."""
        if self.is_letter:
            return self.letter.degree
        return self.left.degree + self.right.degree - 1

    @cached_property
    def key(self) -> tuple:
        """Order key: weight first, then letter index or factor keys."""
        if self.is_letter:
            return (1, self.letter.index)
        return (self.weight, self.left.key, self.right.key)

    def letters(self) -> Iterable[Letter]:
        if self.is_letter:
            yield self.letter
        else:
            yield from self.left.letters()
            yield from self.right.letters()

    def __str__(self) -> str:
        if self.is_letter:
            return f"x{self.letter.index}"
        return f"[{self.left},{self.right}]"


def hall_compare(u: BasicProduct, v: BasicProduct) -> int:
    """Total order on products: -1, 0 or 1 as u <, =, > v."""
    if u.key < v.key:
        return -1
    return 0 if u.key == v.key else 1


def sl_degree(w: BasicProduct) -> int:
    return w.degree


@cache
def is_basic(p: BasicProduct) -> bool:
    """Hall basis membership.

    A bracket [w1, w2] is basic when both factors are, w1 < w2, and if
    w2 = [w3, w4] then w3 <= w1.
    """
    if p.is_letter:
        return True
    if not (is_basic(p.left) and is_basic(p.right)):
        return False
    if p.left.key >= p.right.key:
        return False
    if not p.right.is_letter and p.right.left.key > p.left.key:
        return False
    return True


def validate_alphabet(letters: Iterable[Letter]) -> tuple[Letter, ...]:
    letters = tuple(letters)
    indices = [x.index for x in letters]
    if len(set(indices)) != len(indices):
        raise ValueError("letter indices must be distinct")
    return tuple(sorted(letters, key=lambda x: x.index))


@cache
def _basic_products_by_weight(alphabet: tuple[Letter, ...], max_weight: int) -> tuple[tuple[BasicProduct, ...], ...]:
    by_weight: list[tuple[BasicProduct, ...]] = [
        (),
        tuple(BasicProduct.of_letter(x) for x in alphabet),
    ]
    for k in range(2, max_weight + 1):
        found = []
        for i in range(1, k):
            for l in by_weight[i]:
                for r in by_weight[k - i]:
                    if l.key >= r.key:
                        continue
                    if not r.is_letter and r.left.key > l.key:
                        continue
                    found.append(BasicProduct.bracket(l, r))
        found.sort(key=lambda p: p.key)
        by_weight.append(tuple(found))
    return tuple(by_weight)


def gen_basic_products(alphabet: Iterable[Letter], max_weight: int) -> list[BasicProduct]:
    """All basic products of weight <= max_weight, in the Hall order."""
    if max_weight < 1:
        raise ValueError("max_weight must be at least 1")
    alphabet = validate_alphabet(alphabet)
    table = _basic_products_by_weight(alphabet, max_weight)
    return [p for group in table[1:] for p in group]


# Bracket expressions: a product tree (any bracketing of letters), an
# operation-decorated basic product, or a pair of subexpressions.

@dataclass(frozen=True)
class QAtom:
    ops: tuple[int, ...]
    product: BasicProduct

    def __post_init__(self) -> None:
        if not is_basic(self.product):
            raise ValueError("decorated atom must carry a basic product")


BracketExpr = Union[BasicProduct, QAtom, tuple]

ReducedTerm = tuple  # (ops, BasicProduct) with ops empty or a single exponent
ZERO: frozenset = frozenset()


@cache
def reduce_pair(a: BasicProduct, b: BasicProduct) -> frozenset:
    """Reduce the bracket of two basic products to normal form.

    Recursion: equal factors square to an operation term, unordered
    factors are swapped, basic brackets stand, and the remaining case
    [w1,[w3,w4]] with w1 < w3 expands as [w3,[w4,w1]] + [w4,[w1,w3]].
    """
    if a == b:
        return frozenset({((a.degree,), a)})
    if a.key > b.key:
        return reduce_pair(b, a)
    if b.is_letter or b.left.key <= a.key:
        return frozenset({((), BasicProduct.bracket(a, b))})
    c, d = b.left, b.right
    acc: set = set()
    acc ^= _bracket_with(c, reduce_pair(d, a))
    acc ^= _bracket_with(d, reduce_pair(a, c))
    return frozenset(acc)


def _bracket_with(p: BasicProduct, element: frozenset) -> frozenset:
    acc: set = set()
    for ops, w in element:
        if ops:
            continue  # brackets with operation terms vanish
        acc ^= reduce_pair(p, w)
    return frozenset(acc)


def bracket_elements(e1: frozenset, e2: frozenset) -> frozenset:
    """Bilinear bracket of two reduced combinations."""
    acc: set = set()
    for ops1, w1 in e1:
        if ops1:
            continue
        for ops2, w2 in e2:
            if ops2:
                continue
            acc ^= reduce_pair(w1, w2)
    return frozenset(acc)


def hall_reduce(expr: BracketExpr) -> frozenset:
    """Normal form of a bracket expression.

    Returns a mod-2 set of (ops, product) terms where every product is
    basic and ops is empty or the single squaring exponent.
    """
    _check_alphabet_consistency(expr)
    return _reduce_expr(expr)


def _reduce_expr(expr: BracketExpr) -> frozenset:
    if isinstance(expr, QAtom):
        return frozenset({(expr.ops, expr.product)})
    if isinstance(expr, BasicProduct):
        if expr.is_letter:
            return frozenset({((), expr)})
        return bracket_elements(_reduce_expr(expr.left), _reduce_expr(expr.right))
    if isinstance(expr, tuple) and len(expr) == 2:
        return bracket_elements(_reduce_expr(expr[0]), _reduce_expr(expr[1]))
    raise TypeError(f"not a bracket expression: {expr!r}")


def _check_alphabet_consistency(expr: BracketExpr) -> None:
    degrees: dict[int, int] = {}
    for letter in _expr_letters(expr):
        known = degrees.setdefault(letter.index, letter.degree)
        if known != letter.degree:
            raise ValueError(f"letter x{letter.index} used with two degrees")


def _expr_letters(expr: BracketExpr):
    if isinstance(expr, QAtom):
        yield from expr.product.letters()
    elif isinstance(expr, BasicProduct):
        yield from expr.letters()
    elif isinstance(expr, tuple) and len(expr) == 2:
        yield from _expr_letters(expr[0])
        yield from _expr_letters(expr[1])
    else:
        raise TypeError(f"not a bracket expression: {expr!r}")
