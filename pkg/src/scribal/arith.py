"""Reckoning with unit fractions.

Decomposition under three strategies, the 2/n doubling table, duplation
(doubling) multiplication, loaf division, and completion (sequem)
reckoning. All results are exact; decompositions always recompose to
their input.

Strategies:

* ``greedy``: repeatedly take the largest representable term not exceeding
  the remainder (the 2/3 primitive counts when allowed). Always terminates,
  since each step strictly decreases the remainder's numerator, but can
  produce large denominators.
* ``shortest_search``: exhaustive search for a minimal-term decomposition
  within ``max_terms`` and ``max_denominator``, with a deterministic
  tie-break among equally short answers.
* ``splitting``: decompose half the value greedily, then combine the two
  identical halves, resolving every duplicate denominator with the
  splitting identity 1/k = 1/(k+1) + 1/(k(k+1)).
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field, replace
from fractions import Fraction
from io import StringIO
import csv

from .rational import TWO_THIRDS, UnitFractionSum, as_rational

GREEDY = "greedy"
SPLITTING = "splitting"
SHORTEST_SEARCH = "shortest_search"
STRATEGIES = (GREEDY, SPLITTING, SHORTEST_SEARCH)

ADDITIVE = "additive"
MULTIPLICATIVE = "multiplicative"


class BoundsExceededError(ValueError):
    """Raised when shortest_search exhausts its policy bounds.

    The message and attributes name the bounds in force; nothing below
    ``max_terms`` terms fits with denominators up to ``max_denominator``.
    """

    def __init__(self, message: str, *, max_terms: int, max_denominator: int):
        super().__init__(message)
        self.max_terms = max_terms
        self.max_denominator = max_denominator


@dataclass(frozen=True)
class DecompositionPolicy:
    """Strategy and search bounds for unit-fraction decomposition.

    ``max_terms`` and ``max_denominator`` bound the shortest_search
    enumeration only; greedy and splitting are exact procedures that do
    not search. ``prefer_divisor_rich`` breaks ties toward a largest
    denominator with many divisors, the pattern visible in the historical
    doubling table.
    """

    strategy: str = SHORTEST_SEARCH
    max_terms: int = 4
    max_denominator: int = 10000
    prefer_divisor_rich: bool = True
    allow_two_thirds: bool = True

    def __post_init__(self) -> None:
        if self.strategy not in STRATEGIES:
            raise ValueError(f"unknown strategy {self.strategy!r}; expected one of {STRATEGIES}")
        if self.max_terms < 1:
            raise ValueError("max_terms must be >= 1")
        if self.max_denominator < 2:
            raise ValueError("max_denominator must be >= 2")


DEFAULT_POLICY = DecompositionPolicy()

# The doubling table is a table of numerator-one fractions, so its default
# policy leaves the 2/3 primitive out; pass an explicit policy to keep it.
TABLE_POLICY = replace(DEFAULT_POLICY, allow_two_thirds=False)


def _divisor_count(n: int) -> int:
    count = 1
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            count *= e + 1
        d += 1
    if n > 1:
        count *= 2
    return count


def _greedy_unit_denominators(f: Fraction) -> list[int]:
    # Sylvester-Fibonacci loop; remainder numerator strictly decreases.
    dens: list[int] = []
    while f > 0:
        d = -(-f.denominator // f.numerator)  # ceil
        dens.append(d)
        f -= Fraction(1, d)
    return dens


def _greedy(f: Fraction, allow_two_thirds: bool) -> tuple[bool, list[int]]:
    # 0 < f < 1. The 2/3 primitive is itself the largest available term
    # whenever it fits and is allowed.
    if allow_two_thirds and f >= TWO_THIRDS:
        return True, _greedy_unit_denominators(f - TWO_THIRDS)
    return False, _greedy_unit_denominators(f)


def resolve_duplicates(denominators: list[int], incoming: list[int]) -> list[int]:
    """Union two unit-fraction denominator lists, splitting duplicates.

    Every colliding incoming term 1/k is rewritten with the identity
    1/k = 1/(k+1) + 1/(k(k+1)) until it lands on a free denominator; the
    value of the union is preserved exactly.
    """
    have = set(denominators)
    queue = sorted(incoming, reverse=True)
    steps = 0
    while queue:
        d = queue.pop()
        while d in have:
            steps += 1
            if steps > 100_000:  # no sane input cascades this far
                raise RuntimeError("duplicate resolution did not settle")
            queue.append(d * (d + 1))
            d += 1
        have.add(d)
    return sorted(have)


def _splitting(f: Fraction, allow_two_thirds: bool) -> tuple[bool, list[int]]:
    # 0 < f < 1. A value already written as a single term stays put;
    # otherwise decompose f/2 greedily and combine the two halves,
    # resolving every duplicate with the splitting identity.
    if f.numerator == 1:
        return False, [f.denominator]
    if allow_two_thirds and f == TWO_THIRDS:
        return True, []
    half = _greedy_unit_denominators(f / 2)
    return False, resolve_duplicates(half, half)


_FACTOR_CACHE: dict[int, dict[int, int]] = {}


def _factorize_small(n: int) -> dict[int, int]:
    # trial division with a cache; callers keep n modest (branch values
    # are <= max_denominator, original denominators are user inputs)
    cached = _FACTOR_CACHE.get(n)
    if cached is not None:
        return cached
    m, out, d = n, {}, 2
    while d * d <= m:
        while m % d == 0:
            out[d] = out.get(d, 0) + 1
            m //= d
        d += 1 if d == 2 else 2
    if m > 1:
        out[m] = out.get(m, 0) + 1
    if n <= 10**6 and len(_FACTOR_CACHE) < 200_000:
        _FACTOR_CACHE[n] = out
    return out


def _divide_out(factors: dict[int, int], g: int) -> dict[int, int]:
    # factors minus the factorization of g; every prime of g is present
    out = dict(factors)
    for p in list(out):
        while g % p == 0:
            g //= p
            out[p] -= 1
        if out[p] == 0:
            del out[p]
        if g == 1:
            break
    return out


def _divisors_upto(factors: dict[int, int], limit: int) -> list[int]:
    divs = [1]
    for p, e in factors.items():
        grown = []
        for d in divs:
            val = d
            for _ in range(e + 1):
                if val > limit:
                    break
                grown.append(val)
                val *= p
        divs = grown
    return divs


class _BestCandidate:
    """Running minimum over equal-length decompositions.

    Order: divisor count of the largest denominator (descending, when the
    policy prefers divisor-rich), then smallest largest denominator, then
    lexicographically smallest sequence.
    """

    def __init__(self, policy: DecompositionPolicy):
        self.rich = policy.prefer_divisor_rich
        self.best: tuple | None = None
        self.dens: tuple[int, ...] | None = None

    def offer(self, dens: tuple[int, ...]) -> None:
        largest = dens[-1]
        key = ((-_divisor_count(largest),) if self.rich else ()) + (largest, dens)
        if self.best is None or key < self.best:
            self.best = key
            self.dens = dens


def _two_term_into(
    a: int, b: int, b_factors: dict[int, int] | None, d_min: int, max_den: int,
    prefix: tuple[int, ...], best: _BestCandidate,
) -> None:
    # all x < y with 1/x + 1/y = a/b (lowest terms), x >= d_min, y <= max_den;
    # the smallest possible y is 2b/a, so bail early when that overshoots
    if 2 * b > a * max_den:
        return
    # y <= max_den forces x >= b*max_den/(a*max_den - b), narrowing the scan
    lo = max(d_min, b // a + 1, -(-b * max_den // (a * max_den - b)))
    hi = min(max_den, 2 * b // a)
    if lo > hi:
        return
    tau_sq = 1
    if b_factors is not None:
        for e in b_factors.values():
            tau_sq *= 2 * e + 1
    if b_factors is None or hi - lo + 1 <= tau_sq:
        for x in range(lo, hi + 1):
            e = a * x - b
            num = b * x
            if num % e == 0:
                y = num // e
                if x < y <= max_den:
                    best.offer(prefix + (x, y))
        return
    squared = {p: 2 * e for p, e in b_factors.items()}
    bb = b * b
    for e in _divisors_upto(squared, b):
        if (e + b) % a:
            continue
        e2 = bb // e
        if (e2 + b) % a:
            continue
        x = (e + b) // a
        y = (e2 + b) // a
        if x >= lo and y <= max_den and x != y:
            best.offer(prefix + (x, y))


def _best_k_term(f: Fraction, k: int, policy: DecompositionPolicy, best: _BestCandidate) -> None:
    # feed every k-term distinct unit-fraction decomposition of f (all
    # denominators <= max_denominator) into the running best
    max_den = policy.max_denominator
    a0, b0 = f.numerator, f.denominator
    if k == 1:
        if a0 == 1 and 2 <= b0 <= max_den:
            best.offer((b0,))
        return
    factorable = b0 <= 10**8
    root_factors = _factorize_small(b0) if factorable else None
    if k == 2:
        _two_term_into(a0, b0, root_factors, 2, max_den, (), best)
        return

    def recurse(a: int, b: int, path: tuple[int, ...], t: int, d_min: int) -> None:
        if t == 2:
            g = math.gcd(a, b)
            ar, br = a // g, b // g
            if factorable:
                raw = dict(root_factors)
                raw_value = b0
                for d in path:
                    raw_value *= d
                    for p, e in _factorize_small(d).items():
                        raw[p] = raw.get(p, 0) + e
                factors = _divide_out(raw, raw_value // br) if raw_value != br else raw
            else:
                factors = None
            _two_term_into(ar, br, factors, d_min, max_den, path, best)
            return
        lo = max(d_min, -(-b // a))
        hi = min(max_den, t * b // a)
        # lift lo past the provably dead region: the child's remainder
        # must admit terms <= max_denominator (two of them when t == 3)
        need = 2 if t == 3 else 1
        slack = a * max_den - need * b
        if slack <= 0:
            return
        lo = max(lo, -(-b * max_den // slack))
        for d in range(lo, hi + 1):
            na, nb = a * d - b, b * d
            if na <= 0:
                continue
            recurse(na, nb, path + (d,), t - 1, d + 1)

    recurse(a0, b0, (), k, 2)


def _shortest(f: Fraction, policy: DecompositionPolicy) -> tuple[bool, list[int]]:
    # 0 < f < 1. Minimal term count wins; at equal length a form using the
    # 2/3 primitive is preferred, then the policy tie-break on denominators.
    for k in range(1, policy.max_terms + 1):
        if policy.allow_two_thirds:
            if k == 1 and f == TWO_THIRDS:
                return True, []
            rest = f - TWO_THIRDS
            if k > 1 and rest > 0:
                best = _BestCandidate(policy)
                _best_k_term(rest, k - 1, policy, best)
                if best.dens is not None:
                    return True, list(best.dens)
        best = _BestCandidate(policy)
        _best_k_term(f, k, policy, best)
        if best.dens is not None:
            return False, list(best.dens)
    raise BoundsExceededError(
        f"no decomposition of {f} within max_terms={policy.max_terms} "
        f"and max_denominator={policy.max_denominator}",
        max_terms=policy.max_terms,
        max_denominator=policy.max_denominator,
    )


def decompose(r: Fraction | int, policy: DecompositionPolicy = DEFAULT_POLICY) -> UnitFractionSum:
    """Write a positive rational in scribal notation under the given policy.

    The result recomposes to ``r`` exactly, whatever the strategy.
    Raises ``BoundsExceededError`` when shortest_search runs out of room.
    """
    r = as_rational(r)
    if r <= 0:
        raise ValueError(f"can only decompose positive values, got {r}")
    integer_part = int(r)
    f = r - integer_part
    if f == 0:
        return UnitFractionSum(integer_part)
    if policy.strategy == GREEDY:
        marker, dens = _greedy(f, policy.allow_two_thirds)
    elif policy.strategy == SPLITTING:
        marker, dens = _splitting(f, policy.allow_two_thirds)
    else:
        marker, dens = _shortest(f, policy)
    return UnitFractionSum(integer_part, marker, tuple(dens))


@dataclass(frozen=True)
class TableEntry:
    """One row of the doubling table: 2/n in scribal notation."""

    n: int
    decomposition: UnitFractionSum

    @property
    def term_count(self) -> int:
        return self.decomposition.term_count

    def value(self) -> Fraction:
        return self.decomposition.value()


def table_2_over_n(
    policy: DecompositionPolicy | None = None,
    *,
    n_max: int = 99,
    include_even: bool = False,
) -> list[TableEntry]:
    """The doubling table: decompositions of 2/n for n from 3 to n_max.

    Historically the table covers odd n only (2/n for even n reduces to a
    single unit fraction); ``include_even`` adds those trivial rows. With
    no explicit policy the rows are pure numerator-one fractions under
    shortest_search (``TABLE_POLICY``).
    """
    if n_max < 3:
        raise ValueError("n_max must be >= 3")
    if policy is None:
        policy = TABLE_POLICY
    entries: list[TableEntry] = []
    for n in range(3, n_max + 1):
        if n % 2 == 0 and not include_even:
            continue
        try:
            entries.append(TableEntry(n, decompose(Fraction(2, n), policy)))
        except BoundsExceededError as exc:
            raise BoundsExceededError(
                f"table row n={n} failed: {exc}",
                max_terms=exc.max_terms,
                max_denominator=exc.max_denominator,
            ) from exc
    return entries


def table_to_csv(entries: list[TableEntry]) -> str:
    """CSV export with a recomposition check column; byte-stable."""
    out = StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["n", "terms", "decomposition", "value_check"])
    for e in entries:
        writer.writerow([e.n, e.term_count, e.decomposition.render(), str(e.value())])
    return out.getvalue()


def table_to_json(entries: list[TableEntry]) -> str:
    rows = [
        {
            "n": e.n,
            "terms": e.term_count,
            "decomposition": e.decomposition.render(),
            "value_check": str(e.value()),
        }
        for e in entries
    ]
    return json.dumps(rows, indent=2) + "\n"


@dataclass(frozen=True)
class DuplationRow:
    power: int
    value: int
    selected: bool


@dataclass(frozen=True)
class DuplationResult:
    """Product of two positive integers by doubling and adding.

    ``rows`` doubles the multiplicand once per line; the selected rows are
    the binary decomposition of the multiplier and sum to the product.
    """

    multiplier: int
    multiplicand: int
    product: int
    rows: tuple[DuplationRow, ...] = field(repr=False)

    @property
    def selected_powers(self) -> list[int]:
        return [row.power for row in self.rows if row.selected]

    def render(self) -> str:
        lines = [f"{self.multiplier} x {self.multiplicand}"]
        for row in self.rows:
            mark = "*" if row.selected else " "
            lines.append(f" {mark} {row.power:>8} | {row.value}")
        lines.append(f"   total    | {self.product}")
        return "\n".join(lines)


def duplation_multiply(a: int, b: int) -> DuplationResult:
    """Multiply a * b by repeated doubling of b, selecting rows that sum a."""
    if not (isinstance(a, int) and isinstance(b, int)) or a < 1 or b < 1:
        raise ValueError("duplation multiplies positive integers")
    rows: list[DuplationRow] = []
    power, doubled = 1, b
    while power <= a:
        rows.append(DuplationRow(power, doubled, bool(a & power)))
        power <<= 1
        doubled <<= 1
    product = sum(row.value for row in rows if row.selected)
    assert product == a * b
    return DuplationResult(a, b, product, tuple(rows))


def divide_loaves(
    loaves: int, men: int, policy: DecompositionPolicy = DEFAULT_POLICY
) -> UnitFractionSum:
    """Each man's share when dividing loaves equally, in scribal notation."""
    if not (isinstance(loaves, int) and isinstance(men, int)) or loaves < 1 or men < 1:
        raise ValueError("loaf division needs positive integer loaves and men")
    return decompose(Fraction(loaves, men), policy)


def sequem_complete(given: Fraction, target: Fraction, mode: str = ADDITIVE) -> Fraction:
    """Completion reckoning: what joins ``given`` to make ``target``.

    Additive mode returns target - given; multiplicative mode returns
    target / given. Recombining reproduces the target exactly.
    """
    given = as_rational(given)
    target = as_rational(target)
    if mode == ADDITIVE:
        return target - given
    if mode == MULTIPLICATIVE:
        if given == 0:
            raise ZeroDivisionError("multiplicative completion of zero is undefined")
        return target / given
    raise ValueError(f"mode must be {ADDITIVE!r} or {MULTIPLICATIVE!r}, got {mode!r}")
