"""Exact extremal bounds on the number of maximal independent sets.

Every function returns a :class:`BoundValue`, an ``int`` that also remembers
which closed form produced it.  No floating point is used; fractional
exponents only ever appear after a divisibility check.  Values of ``2**128``
or more raise ``OverflowError``.
"""

from __future__ import annotations

__all__ = [
    "BoundValue",
    "BOUND_CEILING",
    "moon_moser",
    "general_bound",
    "connected_bound",
    "triangle_free_bound",
    "connected_triangle_free_bound",
    "connected_order_bound",
    "triangle_free_order_bound",
    "triangle_free_order_bound_excluding",
    "large_connected_order_upper",
    "connected_bound_h",
    "trianglefree_bound_m",
    "connected_trianglefree_bound_f",
    "griggs_c",
    "hujter_bound",
    "chang_q",
]

BOUND_CEILING = 1 << 128


class BoundValue(int):
    """Exact non-negative bound tagged with the formula that produced it."""

    formula: str

    def __new__(cls, value: int, formula: str) -> BoundValue:
        if value < 0:
            raise ValueError(f"negative bound {value}")
        if value >= BOUND_CEILING:
            raise OverflowError(f"bound {formula} exceeds 128 bits")
        obj = super().__new__(cls, value)
        obj.formula = formula
        return obj

    def __repr__(self) -> str:
        return f"BoundValue({int(self)}, {self.formula!r})"

    def __str__(self) -> str:
        return int.__repr__(self)

    def __reduce__(self):
        return (BoundValue, (int(self), self.formula))


def _check_int(name: str, x, minimum: int) -> None:
    if isinstance(x, bool) or not isinstance(x, int):
        raise TypeError(f"{name} must be an int, got {type(x).__name__}")
    if x < minimum:
        raise ValueError(f"{name} must be >= {minimum}, got {x}")


def moon_moser(n: int) -> BoundValue:
    """Maximum of ``mis(G)`` over all graphs of order ``n`` (``n >= 2``).

    Examples
    --------
    >>> [int(moon_moser(n)) for n in range(2, 8)]
    [2, 3, 4, 6, 9, 12]
    """
    _check_int("n", n, 2)
    r = n % 3
    if r == 0:
        return BoundValue(3 ** (n // 3), "3^(n/3)")
    if r == 1:
        return BoundValue(4 * 3 ** ((n - 4) // 3), "4*3^((n-4)/3)")
    return BoundValue(2 * 3 ** ((n - 2) // 3), "2*3^((n-2)/3)")


def general_bound(t: int) -> BoundValue:
    """Largest ``mis(G)`` over graphs with matching number ``t``: ``3^t``."""
    _check_int("t", t, 0)
    return BoundValue(3**t, "3^t")


def connected_bound(t: int) -> BoundValue:
    """Largest ``mis(G)`` over connected graphs with matching number ``t >= 1``.

    Examples
    --------
    >>> [int(connected_bound(t)) for t in range(1, 5)]
    [3, 5, 13, 35]
    """
    _check_int("t", t, 1)
    if t == 1:
        return BoundValue(3, "3")
    return BoundValue(3 ** (t - 1) + 2 ** (t - 1), "3^(t-1)+2^(t-1)")


def triangle_free_bound(t: int) -> BoundValue:
    """Largest ``mis(G)`` over triangle-free graphs with matching number ``t >= 1``."""
    _check_int("t", t, 1)
    if t % 2 == 0:
        return BoundValue(5 ** (t // 2), "5^(t/2)")
    return BoundValue(2 * 5 ** ((t - 1) // 2), "2*5^((t-1)/2)")


def connected_triangle_free_bound(t: int) -> BoundValue:
    """Largest ``mis(G)`` over connected triangle-free graphs with matching
    number ``t >= 1``.

    Examples
    --------
    >>> [int(connected_triangle_free_bound(t)) for t in range(1, 7)]
    [2, 5, 8, 16, 34, 68]
    """
    _check_int("t", t, 1)
    if t == 2:
        return BoundValue(5, "5")
    if t % 2 == 0:
        k = (t - 2) // 2
        return BoundValue(2 * (5**k + 3**k), "2*(5^((t-2)/2)+3^((t-2)/2))")
    k = (t - 1) // 2
    return BoundValue(5**k + 3**k, "5^((t-1)/2)+3^((t-1)/2)")


def connected_order_bound(n: int) -> BoundValue:
    """Largest ``mis(G)`` over connected graphs of order ``n >= 1``."""
    _check_int("n", n, 1)
    if n < 6:
        return BoundValue(n, "n")
    r = n % 3
    if r == 0:
        k = (n - 3) // 3
        return BoundValue(2 * 3**k + 2**k, "2*3^((n-3)/3)+2^((n-3)/3)")
    if r == 1:
        return BoundValue(3 ** ((n - 1) // 3) + 2 ** ((n - 4) // 3), "3^((n-1)/3)+2^((n-4)/3)")
    return BoundValue(4 * 3 ** ((n - 5) // 3) + 3 * 2 ** ((n - 8) // 3), "4*3^((n-5)/3)+3*2^((n-8)/3)")


def triangle_free_order_bound(n: int) -> BoundValue:
    """Largest ``mis(G)`` over triangle-free graphs of order ``n >= 4``."""
    _check_int("n", n, 4)
    if n % 2 == 0:
        return BoundValue(2 ** (n // 2), "2^(n/2)")
    return BoundValue(5 * 2 ** ((n - 5) // 2), "5*2^((n-5)/2)")


def triangle_free_order_bound_excluding(n: int) -> BoundValue:
    """Bound for triangle-free graphs of order ``n >= 4`` once the two
    matching-plus-pentagon extremal shapes are excluded."""
    _check_int("n", n, 4)
    if n % 2 == 0:
        return BoundValue(3 * 2 ** ((n - 4) // 2), "3*2^((n-4)/2)")
    return BoundValue(2 ** ((n - 1) // 2), "2^((n-1)/2)")


def _icbrt_ceil(m: int) -> int:
    lo, hi = 0, 1
    while hi**3 < m:
        hi *= 2
    while lo < hi:
        mid = (lo + hi) // 2
        if mid**3 < m:
            lo = mid + 1
        else:
            hi = mid
    return lo


def large_connected_order_upper(n: int) -> BoundValue:
    """An integer no smaller than ``3^((n-1)/3) + 2^((n-4)/3)`` for ``n >= 4``.

    Each term is rounded up to an exact integer cube root, so the result is
    a rigorous upper bound even when the exponents are fractional.
    """
    _check_int("n", n, 4)
    return BoundValue(
        _icbrt_ceil(3 ** (n - 1)) + _icbrt_ceil(2 ** (n - 4)),
        "ceil(3^((n-1)/3))+ceil(2^((n-4)/3))",
    )


# names used by the command line and the verification tables
connected_bound_h = connected_bound
trianglefree_bound_m = triangle_free_bound
connected_trianglefree_bound_f = connected_triangle_free_bound
griggs_c = connected_order_bound
hujter_bound = triangle_free_order_bound
chang_q = triangle_free_order_bound_excluding
