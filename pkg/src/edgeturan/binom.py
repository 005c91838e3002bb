"""Exact and real-argument binomials, plus the convexity inequalities the
extremal bounds rely on, as checkable procedures.

Real-valued checks run in double precision (absolute tolerance ``ATOL``);
whenever every argument is an integer the check is repeated exactly with
:class:`fractions.Fraction`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import lru_cache

ATOL = 1e-9
RTOL = 1e-12


class Verdict(str, Enum):
    HOLDS = "holds"
    HOLDS_WEAK = "holds_weak"
    HOLDS_STRICT = "holds_strict"
    FAILS = "fails"
    PRECONDITION_FAILED = "precondition_failed"


def binom_exact(n: int, k: int) -> int:
    """C(n, k) as an exact integer; 0 when ``k > n``."""
    if n < 0 or k < 0:
        raise ValueError(f"binom_exact needs n, k >= 0, got ({n}, {k})")
    return math.comb(n, k)


def binom_real(x: float, k: int) -> float:
    """Generalized binomial x(x-1)...(x-k+1)/k! for real ``x``."""
    if k < 0:
        raise ValueError("k must be non-negative")
    num = 1.0
    for i in range(k):
        num *= x - i
    return num / math.factorial(k)


def u_root(x: float) -> float:
    """Positive root u of C(u, 2) = x."""
    return (1.0 + math.sqrt(1.0 + 8.0 * x)) / 2.0


def easy_convex_check(t: int, w: int, x: int, y: int, z: int) -> Verdict:
    """Check C(x,t)+C(w,t) >= C(y,t)+C(z,t) under its hypotheses.

    Hypotheses: all arguments non-negative integers, t >= 2, x+w = y+z,
    x >= y, x >= z, x >= t.  Strictness is claimed only when x > y and x > z.
    Returns ``FAILS`` if the claimed (weak or strict) inequality is violated.
    """
    if min(t, w, x, y, z) < 0 or t < 2 or x + w != y + z or x < y or x < z or x < t:
        return Verdict.PRECONDITION_FAILED
    lhs = math.comb(x, t) + math.comb(w, t)
    rhs = math.comb(y, t) + math.comb(z, t)
    if x > y and x > z:
        return Verdict.HOLDS_STRICT if lhs > rhs else Verdict.FAILS
    return Verdict.HOLDS_WEAK if lhs >= rhs else Verdict.FAILS


def _check_convex_args(n, D, r, delta):
    if n < 1 or r < 1:
        raise ValueError("n and r must be positive")
    if r >= delta:
        raise ValueError(f"need r < delta, got r={r}, delta={delta}")
    if not n * r <= D <= n * delta:
        raise ValueError(f"degree sum D={D} outside [{n * r}, {n * delta}]")


def degree_sum_bound(n: int, D: int, r: int, delta: int, k: int) -> float:
    """a*C(delta,k) + (n-a)*C(r,k) where a*delta + (n-a)*r = D.

    Upper bound on sum C(x_i, k) over integer sequences of length >= n with
    entries in [r, delta] summing to D.
    """
    _check_convex_args(n, D, r, delta)
    a = Fraction(D - n * r, delta - r)
    return float(a * math.comb(delta, k) + (n - a) * math.comb(r, k))


def max_convex_sum_oracle(n: int, D: int, r: int, delta: int, k: int) -> int:
    """Exhaustive maximum of sum C(x_i, k) over the same feasible set.

    Sequences are enumerated as non-increasing tuples (the objective is
    symmetric), memoised on (remaining sum, largest allowed part, parts
    still required).
    """
    _check_convex_args(n, D, r, delta)
    result = _best_sum(D, delta, n, r, k)
    if result is None:
        raise ValueError("no feasible sequence")
    return result


@lru_cache(maxsize=None)
def _best_sum(remaining: int, top: int, need: int, r: int, k: int) -> int | None:
    if remaining == 0:
        return 0 if need == 0 else None
    out = None
    for x in range(min(top, remaining), r - 1, -1):
        sub = _best_sum(remaining - x, x, max(need - 1, 0), r, k)
        if sub is not None:
            val = math.comb(x, k) + sub
            if out is None or val > out:
                out = val
    return out


def g_value(x: float, t: int) -> float:
    """C(u(x), t-1) for x >= C(t-2, 2), else 0; u(x) solves C(u,2) = x."""
    if x < math.comb(t - 2, 2):
        return 0.0
    return binom_real(u_root(x), t - 1)


def slope_inequality_check(x: float, r: int, t: int) -> Verdict:
    """Check [C(x,t-1)-C(r-1,t-1)] / [C(x,2)-C(r-1,2)] >= C(r-1,t-2)/(r-1).

    Requires integers r > t-1 >= 2 and real x >= r.
    """
    if not (t - 1 >= 2 and r > t - 1 and x >= r):
        return Verdict.PRECONDITION_FAILED
    rhs_exact = Fraction(math.comb(r - 1, t - 2), r - 1)
    if float(x).is_integer():
        xi = int(x)
        lhs = Fraction(math.comb(xi, t - 1) - math.comb(r - 1, t - 1),
                       math.comb(xi, 2) - math.comb(r - 1, 2))
        return Verdict.HOLDS if lhs >= rhs_exact else Verdict.FAILS
    num = binom_real(x, t - 1) - math.comb(r - 1, t - 1)
    den = binom_real(x, 2) - math.comb(r - 1, 2)
    lhs = num / den
    rhs = float(rhs_exact)
    return Verdict.HOLDS if lhs >= rhs - ATOL - RTOL * abs(rhs) else Verdict.FAILS


@dataclass
class GridResult:
    name: str
    checked: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures and self.checked > 0


def _scaled(n: int, scale: float) -> int:
    return max(1, round(n * scale))


def grid_easy_convex(scale: float = 1.0) -> GridResult:
    """Every hypothesis-satisfying tuple, t in [2,6], x in [t,20], w,y,z in [0,20]."""
    res = GridResult("easy_convex")
    top = _scaled(20, scale)
    for t in range(2, 7):
        for x in range(t, top + 1):
            for y in range(0, x + 1):
                for z in range(0, x + 1):
                    w = y + z - x
                    if not 0 <= w <= top:
                        continue
                    verdict = easy_convex_check(t, w, x, y, z)
                    res.checked += 1
                    expected = Verdict.HOLDS_STRICT if (x > y and x > z) else Verdict.HOLDS_WEAK
                    if verdict is not expected:
                        res.failures.append((t, w, x, y, z, verdict.value))
    return res


def grid_degree_sum(scale: float = 1.0) -> GridResult:
    """Exhaustive maximum never exceeds the real-interpolated bound."""
    res = GridResult("degree_sum_bound")
    for n in range(1, _scaled(6, scale) + 1):
        for delta in range(2, _scaled(7, scale) + 1):
            for r in range(1, delta):
                for D in range(n * r, n * delta + 1):
                    for k in range(2, 6):
                        exact = max_convex_sum_oracle(n, D, r, delta, k)
                        bound = degree_sum_bound(n, D, r, delta, k)
                        res.checked += 1
                        if exact > bound + ATOL:
                            res.failures.append((n, D, r, delta, k, exact, bound))
    return res


def grid_g_convex(scale: float = 1.0) -> GridResult:
    """Second differences of g on x = 0, 0.5, ..., 60 are >= -ATOL."""
    res = GridResult("g_convexity")
    steps = 2 * _scaled(60, scale)
    for t in range(3, 7):
        vals = [g_value(i / 2, t) for i in range(steps + 1)]
        for i in range(1, steps):
            res.checked += 1
            second = vals[i - 1] - 2 * vals[i] + vals[i + 1]
            if second < -ATOL:
                res.failures.append((t, i / 2, second))
    return res


def grid_slope(scale: float = 1.0) -> GridResult:
    """Slope inequality for r in [t, t+10], t in [3,6], x in r, r+0.5, ..., r+20."""
    res = GridResult("slope_inequality")
    span = _scaled(10, scale)
    reach = 2 * _scaled(20, scale)
    for t in range(3, 7):
        for r in range(t, t + span + 1):
            for i in range(reach + 1):
                x = r + i / 2
                res.checked += 1
                verdict = slope_inequality_check(x, r, t)
                if verdict is not Verdict.HOLDS:
                    res.failures.append((x, r, t, verdict.value))
    return res


def property_grids(scale: float = 1.0) -> list[GridResult]:
    """Run every inequality grid; ``scale`` stretches the grid bounds."""
    return [grid_easy_convex(scale), grid_degree_sum(scale),
            grid_g_convex(scale), grid_slope(scale)]
