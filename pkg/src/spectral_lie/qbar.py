"""The mod-2 algebra of unary operations Q^j and its normal forms.

Monomials are tuples of non-negative exponents, elements are mod-2
linear combinations (frozensets; addition is symmetric difference).
Reduction is always performed relative to a target degree n, the degree
of the class being acted on: composites are rewritten into completely
unadmissible (CU) monomials, dropping branches that die by instability.
"""

from __future__ import annotations

from functools import cache

QbarMonomial = tuple  # tuple[int, ...]
QbarElement = frozenset  # frozenset[QbarMonomial]

ZERO: QbarElement = frozenset()
ONE: QbarElement = frozenset({()})

MAX_ENTRY = 10**6


def binom_mod2(a: int, b: int) -> int:
    """Binomial coefficient mod 2 by Lucas: 1 iff the bits of b lie in a."""
    if b < 0 or b > a:
        return 0
    return 1 if a & b == b else 0


def is_cu(monomial: QbarMonomial) -> bool:
    """Completely unadmissible: each entry exceeds twice the next."""
    return all(a > 2 * b for a, b in zip(monomial, monomial[1:]))


def _check_entries(monomial: QbarMonomial) -> None:
    for j in monomial:
        if j < 0:
            raise ValueError("exponents must be non-negative")
        if j > MAX_ENTRY:
            raise ValueError(f"exponent {j} exceeds the supported bound {MAX_ENTRY}")


@cache
def adem_step(r: int, s: int) -> QbarElement:
    """Rewrite the length-2 composite Q^r Q^s, for s < r <= 2s.

    Returns the mod-2 combination of length-2 monomials
    Q^{2s+1+k} Q^{r-s-1-k} with odd binomial coefficient
    C(2s-r+1+2k, k); every output monomial is CU.
    """
    if not s < r <= 2 * s:
        raise ValueError(f"adem_step requires s < r <= 2s, got (r, s) = ({r}, {s})")
    _check_entries((r, s))
    out = set()
    for k in range(r - s):
        if binom_mod2(2 * s - r + 1 + 2 * k, k):
            out.add((2 * s + 1 + k, r - s - 1 - k))
    return frozenset(out)


@cache
def _prepend(j: int, tail: QbarMonomial, n: int) -> QbarElement:
    """Normal form of Q^j applied to the CU monomial ``tail`` acting in degree n.

    ``tail`` must already be reduced (CU, last entry >= n).  The class
    Q^tail has degree n + sum(tail) - len(tail); instability kills j
    below that.  A head that is neither CU-compatible nor rewritable
    (j <= tail[0], reachable only for n = 1) is zero by the excess
    vanishing built into allowable modules.
    """
    degree = n + sum(tail) - len(tail)
    if j < degree:
        return ZERO
    if not tail:
        return frozenset({(j,)})
    if j > 2 * tail[0]:
        return frozenset({(j,) + tail})
    if j <= tail[0]:
        return ZERO
    acc: set = set()
    for a, b in adem_step(j, tail[0]):
        for mid in _prepend(b, tail[1:], n):
            acc ^= _prepend(a, mid, n)
    return frozenset(acc)


def reduce_against(monomial: QbarMonomial, n: int) -> QbarElement:
    """Normal form of Q^monomial acting on a class of degree n >= 1.

    Exponents are absorbed right to left; each output monomial is CU
    with last entry at least n, hence fully allowable.
    """
    if n < 1:
        raise ValueError("target degree must be at least 1")
    monomial = tuple(monomial)
    _check_entries(monomial)
    states: set = {()}
    for j in reversed(monomial):
        nxt: set = set()
        for tail in states:
            nxt ^= _prepend(j, tail, n)
        states = nxt
    return frozenset(states)


def reduce_element(element: QbarElement, n: int) -> QbarElement:
    """Mod-2 linear extension of reduce_against."""
    acc: set = set()
    for monomial in element:
        acc ^= reduce_against(monomial, n)
    return frozenset(acc)


def monomial_degree(monomial: QbarMonomial, n: int) -> int:
    """Degree of Q^monomial applied to a degree-n class (each Q^j adds j-1)."""
    return n + sum(monomial) - len(monomial)


def iter_cu_monomials(n: int, max_degree: int):
    """All CU monomials with last entry >= n and degree <= max_degree, target degree n.

    Built right to left: the empty monomial, then every extension by a
    strictly-more-than-doubled head while the degree bound holds.
    Yields in a deterministic order (by length, then lexicographic).
    """
    if n < 1:
        raise ValueError("target degree must be at least 1")
    by_length: list[list[QbarMonomial]] = [[()]]
    while True:
        prev = by_length[-1]
        nxt = []
        for tail in prev:
            base = monomial_degree(tail, n)
            low = max(2 * tail[0] + 1, n) if tail else n
            for j in range(low, max_degree - base + 2):
                nxt.append((j,) + tail)
        if not nxt:
            break
        by_length.append(sorted(nxt))
    for group in by_length:
        yield from group


def rn_module_dims(n: int, max_degree: int) -> dict[int, int]:
    """Dimensions per degree of the span of CU monomials on a degree-n generator."""
    if n < 1:
        raise ValueError("generator degree must be at least 1")
    if max_degree < n:
        raise ValueError("max_degree must be at least n")
    dims = {d: 0 for d in range(n, max_degree + 1)}
    for monomial in iter_cu_monomials(n, max_degree):
        dims[monomial_degree(monomial, n)] += 1
    return dims
