"""A registry of summation and product identities with a grid verifier.

Each entry carries the statement as written, executable evaluators for
both sides, and a parameter domain.  Verification never repairs a
failing formula: where enumeration contradicts a stated right-hand
side, a corrected variant is registered alongside it and reports show
both, so the discrepancy stays visible as a permanent regression check.

Left-hand sides are expressed through a value source `v(n, k, j=1)`,
which is either the closed form or an explicit enumeration count; that
is what lets the same registry run against brute-force ground truth.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass
from importlib import resources
from itertools import product
from math import factorial
from typing import Callable

from .errors import DomainViolation, UnknownIdentity
from .generate import count_words_with_ascents
from .limits import check_cells
from .numbers import choose, falling_factorial, rascal_gen_value


class ClosedValues:
    """Closed-form value source with a per-instance memo."""

    def __init__(self) -> None:
        self._memo: dict[tuple[int, int, int], int] = {}

    def __call__(self, n: int, k: int, j: int = 1) -> int:
        key = (n, k, j)
        got = self._memo.get(key)
        if got is None:
            got = self._memo[key] = rascal_gen_value(n, k, j)
        return got


class EnumerationCounts:
    """Value source backed by explicit word enumeration (the oracle)."""

    def __init__(self) -> None:
        self._memo: dict[tuple[int, int, int], int] = {}

    def __call__(self, n: int, k: int, j: int = 1) -> int:
        key = (n, k, j)
        got = self._memo.get(key)
        if got is None:
            got = self._memo[key] = count_words_with_ascents(n, k, j)
        return got


ValueSource = Callable[..., int]


@dataclass(frozen=True)
class Identity:
    name: str
    statement: str
    params: tuple[str, ...]
    domain_desc: str
    domain: Callable[..., bool]
    lhs: Callable[..., int]
    rhs: Callable[..., int]
    corrected_rhs: Callable[..., int] | None = None
    corrected_note: str = ""


@dataclass(frozen=True)
class IdentityReport:
    """Outcome of checking one identity over a parameter grid."""

    identity: str
    grid: str
    cells: int
    failures: tuple[tuple[tuple[tuple[str, int], ...], int, int], ...]
    corrected_failures: tuple[tuple[tuple[tuple[str, int], ...], int, int], ...] | None
    elapsed_ms: float

    @property
    def passed(self) -> bool:
        return not self.failures

    @property
    def corrected_passed(self) -> bool | None:
        if self.corrected_failures is None:
            return None
        return not self.corrected_failures

    def to_dict(self, *, timing: bool = True) -> dict:
        out: dict = {
            "identity": self.identity,
            "grid": self.grid,
            "cells": self.cells,
            "failures": [
                {"params": dict(params), "lhs": lhs, "rhs": rhs}
                for params, lhs, rhs in self.failures
            ],
            "elapsed_ms": round(self.elapsed_ms, 3) if timing else 0.0,
        }
        if self.corrected_failures is not None:
            out["corrected"] = {
                "failures": [
                    {"params": dict(params), "lhs": lhs, "rhs": rhs}
                    for params, lhs, rhs in self.corrected_failures
                ]
            }
        return out


_REGISTRY: dict[str, Identity] = {}


def _register(
    name: str,
    statement: str,
    params: tuple[str, ...],
    domain_desc: str,
    domain,
    lhs,
    rhs,
    corrected_rhs=None,
    corrected_note: str = "",
) -> None:
    if name in _REGISTRY:
        raise ValueError(f"duplicate identity name {name!r}")
    _REGISTRY[name] = Identity(
        name, statement, params, domain_desc, domain, lhs, rhs, corrected_rhs, corrected_note
    )


def get_identity(name: str) -> Identity:
    try:
        return _REGISTRY[name]
    except KeyError:
        raise UnknownIdentity(f"no identity named {name!r}") from None


def list_identities() -> list[tuple[str, str, str]]:
    """(name, statement, parameter domain) for every registered identity."""
    return [(i.name, i.statement, i.domain_desc) for i in _REGISTRY.values()]


def identity_names() -> list[str]:
    return list(_REGISTRY)


# ---------------------------------------------------------------------------
# registry entries


def _row_sum_lhs(v, n):
    return sum(v(n, k) for k in range(n + 1))


def _gen_row_sum_lhs(v, n, j):
    return sum(v(n, k, j) for k in range(n + 1))


_register(
    "row_sum",
    "sum_{k=0..n} R(n,k) = C(n+1,3) + n + 1",
    ("n",),
    "n >= 0",
    lambda n: n >= 0,
    _row_sum_lhs,
    lambda n: choose(n + 1, 3) + n + 1,
)

_register(
    "col_sum",
    "sum_{i=0..r} R(k+i,k) = k*C(r+1,2) + r + 1",
    ("k", "r"),
    "k >= 0, r >= 0",
    lambda k, r: k >= 0 and r >= 0,
    lambda v, k, r: sum(v(k + i, k) for i in range(r + 1)),
    lambda k, r: k * choose(r + 1, 2) + r + 1,
)

_register(
    "weighted_row_sum",
    "sum_{k=0..n} C(n,k)*R(n,k) = 2^(n-2)*C(n,2) + 2^n",
    ("n",),
    "n >= 0",
    lambda n: n >= 0,
    lambda v, n: sum(choose(n, k) * v(n, k) for k in range(n + 1)),
    lambda n: (choose(n, 2) * 2 ** (n - 2) if n >= 2 else 0) + 2**n,
    corrected_rhs=lambda n: (choose(n, 2) * 2 ** (n - 1) if n >= 2 else 0) + 2**n,
    corrected_note=(
        "as stated this fails from n = 2 on (6 vs 5); direct pair counting "
        "gives first term 2^(n-1)*C(n,2), kept here as the corrected variant"
    ),
)

_register(
    "triangle_sum",
    "sum_{i=1..n} sum_{k=1..i-1} R(i,k) = C(n+2,4) + C(n,2)",
    ("n",),
    "n >= 2",
    lambda n: n >= 2,
    lambda v, n: sum(v(i, k) for i in range(1, n + 1) for k in range(1, i)),
    lambda n: choose(n + 2, 4) + choose(n, 2),
)

_register(
    "alt_binomial",
    "sum_{t=0..r} (-1)^(r-t)*C(r,t)*R(n+t,k) = 0",
    ("r", "n", "k"),
    "r >= 2, 0 <= k <= n",
    lambda r, n, k: r >= 2 and 0 <= k <= n,
    lambda v, r, n, k: sum(
        (-1) ** (r - t) * choose(r, t) * v(n + t, k) for t in range(r + 1)
    ),
    lambda r, n, k: 0,
)

_register(
    "alt_row_sum",
    "sum_{k=0..n} (-1)^k*R(n,k) = 0 if n odd, else 1 - n/2",
    ("n",),
    "n >= 0",
    lambda n: n >= 0,
    lambda v, n: sum((-1) ** k * v(n, k) for k in range(n + 1)),
    lambda n: 0 if n % 2 else 1 - n // 2,
)

_register(
    "product_formula",
    "prod_{k=1..m} (R(n,k) - 1) = m! * ff(n-1, m)",
    ("n", "m"),
    "1 <= m <= n",
    lambda n, m: 1 <= m <= n,
    lambda v, n, m: _product_int(v(n, k) - 1 for k in range(1, m + 1)),
    lambda n, m: factorial(m) * falling_factorial(n - 1, m),
)

_register(
    "subset_ie",
    "sum_{S subset of {1..m}} (-1)^(m-|S|) * prod_{i in S} R(n,i) = m! * ff(n-1, m)",
    ("n", "m"),
    "1 <= m <= n (cost grows as 2^m)",
    lambda n, m: 1 <= m <= n,
    lambda v, n, m: _subset_ie_lhs(v, n, m),
    lambda n, m: factorial(m) * falling_factorial(n - 1, m),
)

_register(
    "binom_corollary",
    "prod_{k=1..m} (R(n,k) - 1) = (m!)^2 * C(n-1,m)   [cross-multiplied form]",
    ("n", "m"),
    "1 <= m <= n",
    lambda n, m: 1 <= m <= n,
    lambda v, n, m: _product_int(v(n, k) - 1 for k in range(1, m + 1)),
    lambda n, m: factorial(m) ** 2 * choose(n - 1, m),
)

_register(
    "gen_row_sum",
    "sum_{k=0..n} R(n,k;j) = sum_{k=0..2j+1} C(n,k)",
    ("n", "j"),
    "n >= 0, j >= 0",
    lambda n, j: n >= 0 and j >= 0,
    _gen_row_sum_lhs,
    lambda n, j: sum(choose(n, k) for k in range(2 * j + 2)),
)

_register(
    "half_pow2",
    "sum_{k=0..4j+3} R(4j+3,k;j) = 2^(4j+2)",
    ("j",),
    "j >= 0",
    lambda j: j >= 0,
    lambda v, j: sum(v(4 * j + 3, k, j) for k in range(4 * j + 4)),
    lambda j: 2 ** (4 * j + 2),
)

_register(
    "forward_diff",
    "(2j+1)-th forward difference in n of sum_k R(n,k;j) = 1",
    ("n", "j"),
    "n >= 0, j >= 0",
    lambda n, j: n >= 0 and j >= 0,
    lambda v, n, j: sum(
        (-1) ** (2 * j + 1 - t) * choose(2 * j + 1, t) * _gen_row_sum_lhs(v, n + t, j)
        for t in range(2 * j + 2)
    ),
    lambda n, j: 1,
)

_register(
    "gen_alt_row_sum",
    "sum_{k=0..n} (-1)^k*R(n,k;j) = 0 if n odd, else (-1)^j*C(n/2-1,j) with C(-1,j) = (-1)^j",
    ("n", "j"),
    "n >= 0, j >= 0",
    lambda n, j: n >= 0 and j >= 0,
    lambda v, n, j: sum((-1) ** k * v(n, k, j) for k in range(n + 1)),
    lambda n, j: _gen_alt_rhs(n, j),
)


def _product_int(values) -> int:
    out = 1
    for x in values:
        out *= x
    return out


def _subset_ie_lhs(v, n: int, m: int) -> int:
    r_values = [v(n, i) for i in range(1, m + 1)]
    total = 0
    for mask in range(1 << m):
        term = 1
        size = 0
        for i in range(m):
            if mask >> i & 1:
                term *= r_values[i]
                size += 1
        total += (-1) ** (m - size) * term
    return total


def _gen_alt_rhs(n: int, j: int) -> int:
    if n % 2:
        return 0
    if n == 0:
        # C(-1, j) = (-1)^j by convention, so the signs cancel
        return 1
    return (-1) ** j * choose(n // 2 - 1, j)


# ---------------------------------------------------------------------------
# evaluation and grid verification


def evaluate(name: str, params: dict[str, int], variant: str = "stated") -> tuple[int, int]:
    """Both sides of the named identity at one parameter point."""
    ident = get_identity(name)
    missing = [p for p in ident.params if p not in params]
    if missing:
        raise DomainViolation(f"{name} needs parameters {missing}")
    extra = [p for p in params if p not in ident.params]
    if extra:
        raise DomainViolation(f"{name} does not take parameters {extra}")
    if not ident.domain(**params):
        raise DomainViolation(f"{params} is outside the domain ({ident.domain_desc})")
    if variant == "stated":
        rhs_fn = ident.rhs
    elif variant == "corrected":
        if ident.corrected_rhs is None:
            raise DomainViolation(f"{name} has no corrected variant")
        rhs_fn = ident.corrected_rhs
    else:
        raise DomainViolation(f"unknown variant {variant!r}")
    v = ClosedValues()
    return ident.lhs(v, **params), rhs_fn(**params)


def _grid_desc(ident: Identity, grid: dict[str, tuple[int, int]]) -> str:
    return ", ".join(f"{p}={grid[p][0]}..{grid[p][1]}" for p in ident.params)


def verify_range(
    name: str,
    grid: dict[str, tuple[int, int]],
    *,
    oracle: bool = False,
    max_cells: int | None = None,
) -> IdentityReport:
    """Evaluate one identity over a full parameter grid.

    `grid` maps each parameter to an inclusive (lo, hi) range; points
    outside the identity's domain are skipped.  Every remaining cell is
    evaluated (no short-circuit) so the report lists every failure.
    With `oracle=True` the left side uses enumeration counts instead of
    the closed form.
    """
    ident = get_identity(name)
    missing = [p for p in ident.params if p not in grid]
    if missing:
        raise DomainViolation(f"grid for {name} is missing ranges for {missing}")
    ranges = [range(grid[p][0], grid[p][1] + 1) for p in ident.params]
    cells = [
        c for c in product(*ranges) if ident.domain(**dict(zip(ident.params, c)))
    ]
    check_cells(len(cells), f"grid for identity {name}", max_cells)
    v: ValueSource = EnumerationCounts() if oracle else ClosedValues()
    failures = []
    corrected_failures = [] if ident.corrected_rhs is not None else None
    start = time.perf_counter()
    for cell in cells:
        params = dict(zip(ident.params, cell))
        frozen = tuple(params.items())
        lhs = ident.lhs(v, **params)
        rhs = ident.rhs(**params)
        if lhs != rhs:
            failures.append((frozen, lhs, rhs))
        if ident.corrected_rhs is not None:
            corrected = ident.corrected_rhs(**params)
            if lhs != corrected:
                corrected_failures.append((frozen, lhs, corrected))
    elapsed_ms = (time.perf_counter() - start) * 1000.0
    return IdentityReport(
        identity=name,
        grid=_grid_desc(ident, grid),
        cells=len(cells),
        failures=tuple(sorted(failures)),
        corrected_failures=(
            None if corrected_failures is None else tuple(sorted(corrected_failures))
        ),
        elapsed_ms=elapsed_ms,
    )


def default_grids() -> dict[str, dict[str, tuple[int, int]]]:
    """The pinned desk-scale grids used by `verify all` (shipped as a
    versioned data file so CI runs are reproducible)."""
    raw = json.loads(resources.files("rascal").joinpath("default_grids.json").read_text())
    return {
        name: {p: (lo, hi) for p, (lo, hi) in spec.items()} for name, spec in raw.items()
    }
