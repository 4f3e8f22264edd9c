"""Rascal numbers by several independent computation routes.

R(n, k) = k*(n-k) + 1 inside the triangle (0 <= k <= n) and 0 outside;
it counts binary words of length n with k ones and at most one ascent.
The generalization R(n, k; j) counts at most j ascents and equals
sum_{i=0..j} C(k, i) * C(n-k, i).

Four routes are implemented and cross-checked by the test suite:

* closed         -- the binomial closed form above
* linear         -- additive recurrence
                    R(n,k) = R(n-1,k) + R(n-1,k-1) - R(n-2,k-1) + 1
                    (generalized: the final +1 becomes a j-1 layer term)
* multiplicative -- product recurrence
                    R(n,k) = (R(n-1,k)*R(n-1,k-1) + 1) / R(n-2,k-1),
                    asserting exact divisibility at every cell
* enumeration    -- literally filter all 2^n binary words (capped)

Both recurrences apply to interior cells 1 <= k <= n-1 only; boundary
columns k = 0 and k = n are the base value 1.  Python ints are exact at
any size, so all arithmetic here is exact by construction.
"""

from __future__ import annotations

import math
from itertools import product

from .errors import InexactDivision, ResourceLimit
from .limits import DEFAULT_ENUM_CAP, check_cells

METHODS = ("closed", "multiplicative", "linear", "enumeration")
GEN_METHODS = ("closed", "linear", "enumeration")


def choose(n: int, k: int) -> int:
    """Binomial coefficient with C(n, k) = 0 outside 0 <= k <= n."""
    if n < 0 or k < 0 or k > n:
        return 0
    return math.comb(n, k)


def falling_factorial(n: int, k: int) -> int:
    """n * (n-1) * ... * (n-k+1); 1 when k = 0, 0 when k > n."""
    if n < 0 or k < 0:
        raise ValueError("falling_factorial needs n, k >= 0")
    return math.perm(n, k)


def in_triangle(n: int, k: int) -> bool:
    return 0 <= k <= n


class TriangleCache:
    """Explicit memo for the recurrence methods.

    One instance owns its tables outright; nothing is shared through
    module globals, so callers control reuse and lifetime.  Tables are
    append-only: safe to share once construction is done.
    """

    def __init__(self) -> None:
        self._linear: list[list[list[int]]] = []  # [j][n][k]
        self._product: list[list[int]] = []       # [n][k]

    # -- additive recurrence -------------------------------------------------

    def linear_row(self, n: int, j: int = 1) -> list[int]:
        if n < 0 or j < 0:
            raise ValueError("linear_row needs n, j >= 0")
        self._grow_linear(n, j)
        return self._linear[j][n]

    def linear_value(self, n: int, k: int, j: int = 1) -> int:
        if not in_triangle(n, k):
            return 0
        return self.linear_row(n, j)[k]

    def _grow_linear(self, n: int, j: int) -> None:
        while len(self._linear) <= j:
            self._linear.append([])
        for layer in range(j + 1):
            rows = self._linear[layer]
            while len(rows) <= n:
                rows.append(self._build_linear_row(layer, len(rows)))

    def _build_linear_row(self, j: int, n: int) -> list[int]:
        if n == 0:
            return [1]
        if n == 1:
            return [1, 1]
        if j == 0:
            return [1] * (n + 1)
        prev = self._linear[j][n - 1]
        prev2 = self._linear[j][n - 2]
        below = self._linear[j - 1][n - 2]
        row = [1]
        for k in range(1, n):
            row.append(prev[k] + prev[k - 1] - prev2[k - 1] + below[k - 1])
        row.append(1)
        return row

    # -- product recurrence --------------------------------------------------

    def product_row(self, n: int) -> list[int]:
        if n < 0:
            raise ValueError("product_row needs n >= 0")
        while len(self._product) <= n:
            self._product.append(self._build_product_row(len(self._product)))
        return self._product[n]

    def product_value(self, n: int, k: int) -> int:
        if not in_triangle(n, k):
            return 0
        return self.product_row(n)[k]

    def _build_product_row(self, n: int) -> list[int]:
        if n == 0:
            return [1]
        if n == 1:
            return [1, 1]
        prev = self._product[n - 1]
        prev2 = self._product[n - 2]
        row = [1]
        for k in range(1, n):
            numerator = prev[k] * prev[k - 1] + 1
            q, r = divmod(numerator, prev2[k - 1])
            if r:
                raise InexactDivision(
                    f"product recurrence not divisible at n={n}, k={k}: "
                    f"{numerator} / {prev2[k - 1]}"
                )
            row.append(q)
        row.append(1)
        return row


def _enum_row_counts(n: int, j: int, cap: int) -> list[int]:
    """Counts per ones-count k of length-n binary words with <= j ascents,
    by filtering all 2^n words."""
    if n > cap:
        raise ResourceLimit(f"enumeration over 2^{n} words exceeds the cap n <= {cap}")
    counts = [0] * (n + 1)
    for bits in product((0, 1), repeat=n):
        ascents = 0
        for i in range(1, n):
            if bits[i - 1] < bits[i]:
                ascents += 1
                if ascents > j:
                    break
        else:
            counts[sum(bits)] += 1
    return counts


def rascal_value(
    n: int,
    k: int,
    method: str = "closed",
    *,
    cache: TriangleCache | None = None,
    enum_cap: int = DEFAULT_ENUM_CAP,
) -> int:
    """R(n, k) by the chosen route; 0 outside the triangle.

    `cache` lets callers reuse recurrence tables across calls; when
    omitted, a throwaway one is built.
    """
    if method not in METHODS:
        raise ValueError(f"unknown method {method!r}; expected one of {METHODS}")
    if not in_triangle(n, k):
        return 0
    if method == "closed":
        return k * (n - k) + 1
    if method == "linear":
        return (cache or TriangleCache()).linear_value(n, k, 1)
    if method == "multiplicative":
        return (cache or TriangleCache()).product_value(n, k)
    return _enum_row_counts(n, 1, enum_cap)[k]


def rascal_gen_value(
    n: int,
    k: int,
    j: int = 1,
    method: str = "closed",
    *,
    cache: TriangleCache | None = None,
    enum_cap: int = DEFAULT_ENUM_CAP,
) -> int:
    """R(n, k; j): binary words of length n, k ones, at most j ascents."""
    if j < 0:
        raise ValueError("ascent bound j must be >= 0")
    if method not in GEN_METHODS:
        raise ValueError(f"unknown method {method!r}; expected one of {GEN_METHODS}")
    if not in_triangle(n, k):
        return 0
    if method == "closed":
        return sum(math.comb(k, i) * math.comb(n - k, i) for i in range(j + 1))
    if method == "linear":
        return (cache or TriangleCache()).linear_value(n, k, j)
    return _enum_row_counts(n, j, enum_cap)[k]


def prefix_suffix_count(n: int, k: int, lead_ones: int, trail_zeros: int) -> int:
    """Words of length n with k ones and at most one ascent that start
    with at least `lead_ones` 1's and end with at least `trail_zeros` 0's.

    Equals R(n - lead_ones - trail_zeros, k - lead_ones): stripping the
    forced prefix and suffix is a bijection onto the smaller family.
    """
    if lead_ones < 0 or trail_zeros < 0:
        raise ValueError("prefix/suffix lengths must be >= 0")
    return rascal_value(n - lead_ones - trail_zeros, k - lead_ones)


def e_defect(n: int, k: int, j: int = 1) -> int:
    """R(n,k;j) * R(n-2,k-1;j)  -  R(n-1,k;j) * R(n-1,k-1;j).

    For j = 1 this is identically 1 at interior cells (the +1 of the
    product recurrence); for larger j it is tabulated, not closed-form.
    """
    if j < 0:
        raise ValueError("ascent bound j must be >= 0")
    return rascal_gen_value(n, k, j) * rascal_gen_value(n - 2, k - 1, j) - (
        rascal_gen_value(n - 1, k, j) * rascal_gen_value(n - 1, k - 1, j)
    )


def triangle_rows(
    n_max: int,
    j: int = 1,
    *,
    method: str = "closed",
    cache: TriangleCache | None = None,
    enum_cap: int = DEFAULT_ENUM_CAP,
    max_cells: int | None = None,
) -> list[list[int]]:
    """Rows 0..n_max of the triangle for ascent bound j."""
    if j < 0:
        raise ValueError("ascent bound j must be >= 0")
    if n_max < 0:
        return []
    check_cells((n_max + 1) * (n_max + 2) // 2, "triangle", max_cells)
    if method == "multiplicative":
        if j != 1:
            raise ValueError("the multiplicative route is defined for j = 1 only")
        cache = cache or TriangleCache()
        return [list(cache.product_row(n)) for n in range(n_max + 1)]
    if method == "linear":
        cache = cache or TriangleCache()
        return [list(cache.linear_row(n, j)) for n in range(n_max + 1)]
    if method == "enumeration":
        return [_enum_row_counts(n, j, enum_cap) for n in range(n_max + 1)]
    if method != "closed":
        raise ValueError(f"unknown method {method!r}")
    return [
        [rascal_gen_value(n, k, j) for k in range(n + 1)] for n in range(n_max + 1)
    ]
