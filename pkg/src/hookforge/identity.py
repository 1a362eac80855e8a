"""The verification engine: hook weights, the interpolating weight function,
and exact machine checks of the expansion identities over desk-scale ranges.

All checks run in exact arithmetic.  The workhorse representation for sums of
hook-weight products is a factored form: since 1 - q^h is (up to sign) the
product of the cyclotomic polynomials indexed by the divisors of h, and
1 + q^h the product over divisors of 2h that miss h, every weight product is
a signed monomial in cyclotomic polynomials.  Sums of such monomials are
brought over a common denominator with plain integer-polynomial products and
reduced by exact trial division, which sidesteps large rational GCDs.  The
factored path is cross-checked against generic rational-function arithmetic
in the test suite.
"""

from __future__ import annotations

import random
import time
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from math import comb

from . import _multipoly as mp
from .exact import Polynomial, PowerSeries, RationalFunction, series_exp
from .involutions import psi_n
from .partitions import (
    Cell,
    Partition,
    add_cell,
    addable_cells,
    corner_profile,
    f_lambda,
    hook_length,
    hooks,
    partitions_of,
    remove_cell,
    removable_cells,
)

# The reduction of the corner-content identity to the symmetric two-term sum
# is rechecked by explicit q-monomial substitution whenever the corner count
# is at most this bound (the substituted arithmetic grows quickly with it).
SUBSTITUTION_CHECK_MAX_CORNERS = 3


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of one identity check.

    A failing report carries a witness string from which the failure can be
    reproduced (the shape, index, or sample vector, plus both canonical
    forms where relevant).
    """

    check: str
    params: dict
    verdict: str
    witness: str | None
    millis: int

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"


def _finish(check: str, params: dict, ok: bool, witness: str | None, started: float):
    millis = int((time.perf_counter() - started) * 1000)
    return VerificationReport(
        check=check,
        params=params,
        verdict="pass" if ok else "fail",
        witness=None if ok else witness,
        millis=millis,
    )


# ---------------------------------------------------------------------------
# hook weights
# ---------------------------------------------------------------------------


@cache
def weight_w(h: int) -> RationalFunction:
    """The hook weight (1 + q^h) / (1 - q^h), odd under h -> -h."""
    if h == 0:
        raise ValueError("weight undefined at 0 (pole)")
    if h < 0:
        return -weight_w(-h)
    num = Polynomial((1,) + (0,) * (h - 1) + (1,))
    den = Polynomial((1,) + (0,) * (h - 1) + (-1,))
    return RationalFunction(num, den)


@cache
def _divisors(n: int) -> tuple[int, ...]:
    out = [d for d in range(1, n + 1) if n % d == 0]
    return tuple(out)


@cache
def _cyclotomic(d: int) -> tuple[int, ...]:
    """Integer coefficients of the d-th cyclotomic polynomial, low first."""
    poly = [-1] + [0] * (d - 1) + [1]  # q^d - 1
    for e in _divisors(d):
        if e < d:
            poly = _ip_divexact(poly, list(_cyclotomic(e)))
    return tuple(poly)


@cache
def _cyclo_power(d: int, k: int) -> tuple[int, ...]:
    if k == 1:
        return _cyclotomic(d)
    return tuple(_ip_mul(list(_cyclo_power(d, k - 1)), list(_cyclotomic(d))))


@cache
def _w_factor_items(h: int) -> tuple[tuple[int, int], ...]:
    """Cyclotomic exponents of (1 + q^h)/(1 - q^h) for h >= 1, sign aside:
    +1 for divisors of 2h missing h, -1 for divisors of h."""
    items = {d: 1 for d in _divisors(2 * h) if h % d}
    for d in _divisors(h):
        items[d] = items.get(d, 0) - 1
    return tuple(sorted(items.items()))


class _WeightProduct:
    """A product of hook weights in factored form: a sign together with a
    map from cyclotomic index to (possibly negative) exponent."""

    __slots__ = ("sign", "expo")

    def __init__(self, sign: int = 1, expo: dict[int, int] | None = None):
        self.sign = sign
        self.expo = {} if expo is None else expo

    def copy(self) -> "_WeightProduct":
        return _WeightProduct(self.sign, dict(self.expo))

    def mul_w(self, h: int, power: int = 1) -> "_WeightProduct":
        """Multiply by w(h)**power; h is any nonzero integer."""
        if h == 0:
            raise ValueError("weight undefined at 0 (pole)")
        if h > 0 and power % 2:
            self.sign = -self.sign
        expo = self.expo
        for d, e in _w_factor_items(abs(h)):
            ne = expo.get(d, 0) + e * power
            if ne:
                expo[d] = ne
            else:
                expo.pop(d, None)
        return self

    def divide(self, other: "_WeightProduct") -> "_WeightProduct":
        """Divide by another product (exact, in the field of fractions)."""
        self.sign *= other.sign
        expo = self.expo
        for d, e in other.expo.items():
            ne = expo.get(d, 0) - e
            if ne:
                expo[d] = ne
            else:
                expo.pop(d, None)
        return self


def _weight_product_of_hooks(hook_lengths) -> _WeightProduct:
    wp = _WeightProduct()
    for h, mult in Counter(hook_lengths).items():
        wp.mul_w(h, mult)
    return wp


def _materialize(terms: list[tuple[int, _WeightProduct]]) -> RationalFunction:
    """Canonical rational function of sum(coeff * product) over the terms.

    The common denominator is read off the factored exponents; numerator
    contributions are integer-polynomial products of cyclotomic powers, and
    the final reduction is exact trial division by the denominator factors.
    """
    den_exp: dict[int, int] = {}
    for _, wp in terms:
        for d, e in wp.expo.items():
            if e < 0 and -e > den_exp.get(d, 0):
                den_exp[d] = -e
    total: list[int] = []
    for coeff, wp in terms:
        if coeff == 0:
            continue
        factors = []
        for d in set(wp.expo) | set(den_exp):
            k = wp.expo.get(d, 0) + den_exp.get(d, 0)
            if k > 0:
                factors.append(_cyclo_power(d, k))
        factors.sort(key=len)
        poly = [coeff * wp.sign]
        for f in factors:
            poly = _ip_mul(poly, list(f))
        total = _ip_add(total, poly)
    if not total:
        return RationalFunction.zero()
    remaining = {d: e for d, e in den_exp.items() if e}
    for d in sorted(remaining):
        phi = list(_cyclotomic(d))
        while remaining[d] > 0:
            quot = _ip_divexact_or_none(total, phi)
            if quot is None:
                break
            total = quot
            remaining[d] -= 1
    den = [1]
    for d in sorted(remaining):
        if remaining[d]:
            den = _ip_mul(den, list(_cyclo_power(d, remaining[d])))
    # coprime numerator over a monic denominator: already canonical
    return RationalFunction._from_canonical(Polynomial(total), Polynomial(den))


# -- plain integer-coefficient polynomial helpers (lists, low degree first) --


def _ip_mul(a: list[int], b: list[int]) -> list[int]:
    if not a or not b:
        return []
    if len(a) < len(b):
        a, b = b, a
    out = [0] * (len(a) + len(b) - 1)
    for i, cb in enumerate(b):
        if cb:
            seg = out[i : i + len(a)]
            out[i : i + len(a)] = [x + cb * y for x, y in zip(seg, a)]
    return out


def _ip_add(a: list[int], b: list[int]) -> list[int]:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    while out and out[-1] == 0:
        out.pop()
    return out


def _ip_divexact_or_none(a: list[int], b: list[int]) -> list[int] | None:
    """Quotient of a by a monic b when the division is exact, else None."""
    if not a:
        return []
    db = len(b) - 1
    if len(a) - 1 < db:
        return None
    rem = list(a)
    quot = [0] * (len(a) - db)
    for i in range(len(rem) - 1, db - 1, -1):
        c = rem[i]
        if c:
            quot[i - db] = c
            start = i - db
            rem[start : i + 1] = [x - c * y for x, y in zip(rem[start : i + 1], b)]
    if any(rem):
        return None
    return quot


def _ip_divexact(a: list[int], b: list[int]) -> list[int]:
    quot = _ip_divexact_or_none(a, b)
    if quot is None:
        raise ArithmeticError("inexact integer polynomial division")
    return quot


# ---------------------------------------------------------------------------
# weights of shapes and the two sides of the expansion identity
# ---------------------------------------------------------------------------


@cache
def weight_lambda(lam: Partition) -> RationalFunction:
    """Product of w over all hook lengths of the shape, canonical in q."""
    return _materialize([(1, _weight_product_of_hooks(hooks(lam)))])


@cache
def phi_n(n: int) -> RationalFunction:
    """Tableau-side sum: f-lambda times the shape weight over all shapes.

    Shapes sharing a hook multiset (conjugate pairs, in particular) have
    equal weights, so their counts are pooled before materializing.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    groups: dict[tuple[int, ...], int] = {}
    for lam in partitions_of(n):
        key = tuple(sorted(hooks(lam)))
        groups[key] = groups.get(key, 0) + f_lambda(lam)
    terms = [
        (coeff, _weight_product_of_hooks(key)) for key, coeff in sorted(groups.items())
    ]
    return _materialize(terms)


@cache
def rho(n: int) -> RationalFunction:
    """Interpolating hook weight in z: the even-index binomial polynomial
    over n times the odd-index binomial polynomial."""
    if n < 1:
        raise ValueError("n must be positive")
    num = Polynomial(comb(n, 2 * k) for k in range(n // 2 + 1))
    den = Polynomial(n * comb(n, 2 * k + 1) for k in range((n + 1) // 2))
    return RationalFunction(num, den)


@cache
def hook_weight_sum(n: int) -> RationalFunction:
    """Sum over all shapes of n of the product of rho over their hooks (a
    rational function of z that in fact reduces to a polynomial)."""
    groups: dict[tuple[int, ...], int] = {}
    for lam in partitions_of(n):
        key = tuple(sorted(hooks(lam)))
        groups[key] = groups.get(key, 0) + 1
    total = RationalFunction.zero()
    for key, mult in sorted(groups.items()):
        prod = RationalFunction.one()
        for h in key:
            prod = prod * rho(h)
        total = total + mult * prod
    return total


# ---------------------------------------------------------------------------
# identity checks
# ---------------------------------------------------------------------------


def verify_theorem1prime(n: int) -> VerificationReport:
    """Fixed-point sum over involutions equals the weighted tableau sum."""
    started = time.perf_counter()
    lhs = psi_n(n)
    rhs = phi_n(n)
    return _finish(
        "theorem1prime",
        {"n": n},
        lhs == rhs,
        f"n={n}: involution side {lhs.format()} != tableau side {rhs.format()}",
        started,
    )


def verify_theorem1(order: int) -> VerificationReport:
    """Coefficientwise identity between exp(t + z t^2/2) and the hook sums.

    For each n up to the truncation order the shape sum of rho-products must
    reduce to a polynomial in z and agree exactly with the t^n coefficient
    of the exponential.
    """
    started = time.perf_counter()
    if order < 0:
        raise ValueError("order must be nonnegative")
    z_half = Polynomial((0, Fraction(1, 2)))
    series = series_exp(
        PowerSeries([Polynomial.zero(), Polynomial.one(), z_half], order=order)
    )
    for n in range(order + 1):
        total = hook_weight_sum(n)
        if not total.is_polynomial:
            return _finish(
                "theorem1",
                {"order": order},
                False,
                f"n={n}: shape sum is not polynomial: {total.format('z')}",
                started,
            )
        expected = series.coefficient(n)
        if total.as_polynomial() != expected:
            exp_str = expected.format("z") if isinstance(expected, Polynomial) else str(expected)
            return _finish(
                "theorem1",
                {"order": order},
                False,
                f"n={n}: shape sum {total.format('z')} != series coefficient {exp_str}",
                started,
            )
    return _finish("theorem1", {"order": order}, True, None, started)


def verify_lemma1(lam: Partition) -> VerificationReport:
    """Extend-retract identity at one shape: the weights of all one-cell
    extensions sum to w(1) times the shape weight plus the weights of all
    one-cell retractions.

    Both sides are divided by the (nonzero) shape weight before comparison;
    this is an exact field operation and keeps the polynomials small since
    extension and retraction only disturb hooks in one row and one column.
    """
    started = time.perf_counter()
    base = _weight_product_of_hooks(hooks(lam))
    lhs_terms = []
    for cell in addable_cells(lam):
        ratio = _weight_product_of_hooks(hooks(add_cell(lam, cell))).divide(base)
        lhs_terms.append((1, ratio))
    rhs_terms = [(1, _WeightProduct().mul_w(1))]
    for cell in removable_cells(lam):
        ratio = _weight_product_of_hooks(hooks(remove_cell(lam, cell))).divide(base)
        rhs_terms.append((1, ratio))
    lhs = _materialize(lhs_terms)
    rhs = _materialize(rhs_terms)
    return _finish(
        "lemma1",
        {"shape": lam.serialize()},
        lhs == rhs,
        f"shape={lam.serialize()}: extensions {lhs.format()} != {rhs.format()}"
        " (both sides divided by the shape weight)",
        started,
    )


def verify_corner_hooks(lam: Partition, k: int) -> VerificationReport:
    """Corner-content hook relations at the k-th corner.

    Checks that the hooks in the row and column of the k-th outer corner
    (after extension) and of the k-th inner corner (after retraction, when
    it exists) are exactly the differences of the corner contents.
    """
    started = time.perf_counter()
    prof = corner_profile(lam)
    d = len(prof.outer_cells)
    if not 1 <= k <= d:
        raise ValueError(f"corner index {k} out of range 1..{d}")
    xs, ys = prof.outer_contents, prof.inner_contents
    failures: list[str] = []

    def expect(shape: Partition, cell: Cell, value: int, label: str):
        try:
            got = hook_length(shape, cell)
        except ValueError:
            failures.append(f"{label}: cell {tuple(cell)} outside {shape.serialize()}")
            return
        if got != value:
            failures.append(
                f"{label}: hook at {tuple(cell)} in {shape.serialize()} is {got}, expected {value}"
            )

    ak, bk = prof.outer_cells[k - 1]
    plus = add_cell(lam, Cell(ak, bk))
    for i in range(1, k):
        ai = prof.outer_cells[i - 1].row
        expect(plus, Cell(ai, bk), xs[i - 1] - xs[k - 1], f"extended row {i}")
        alpha_i = prof.inner_cells[i - 1].row
        expect(lam, Cell(alpha_i, bk), ys[i - 1] - xs[k - 1], f"base row {i}")
    for i in range(k + 1, d + 1):
        bi = prof.outer_cells[i - 1].col
        expect(plus, Cell(ak, bi), xs[k - 1] - xs[i - 1], f"extended col {i}")
    for i in range(k, d):
        beta_i = prof.inner_cells[i - 1].col
        expect(lam, Cell(ak, beta_i), xs[k - 1] - ys[i - 1], f"base col {i}")

    if k <= d - 1:
        alpha_k, beta_k = prof.inner_cells[k - 1]
        minus = remove_cell(lam, Cell(alpha_k, beta_k))
        for i in range(1, k):
            alpha_i = prof.inner_cells[i - 1].row
            expect(minus, Cell(alpha_i, beta_k), ys[i - 1] - ys[k - 1], f"retracted row {i}")
        for i in range(1, k + 1):
            ai = prof.outer_cells[i - 1].row
            expect(lam, Cell(ai, beta_k), xs[i - 1] - ys[k - 1], f"base row' {i}")
        for i in range(k + 1, d):
            beta_i = prof.inner_cells[i - 1].col
            expect(minus, Cell(alpha_k, beta_i), ys[k - 1] - ys[i - 1], f"retracted col {i}")
        for i in range(k + 1, d + 1):
            bi = prof.outer_cells[i - 1].col
            expect(lam, Cell(alpha_k, bi), ys[k - 1] - xs[i - 1], f"base col' {i}")

    return _finish(
        "corner_hooks",
        {"shape": lam.serialize(), "k": k},
        not failures,
        f"shape={lam.serialize()}, k={k}: " + "; ".join(failures),
        started,
    )


def _as_int_contents(values) -> list[int]:
    out = []
    for v in values:
        f = Fraction(v)
        if f.denominator != 1:
            raise TypeError(
                "hook weights use integer powers of q; non-integer values carry "
                "the same content as the symmetric sum checked by verify_prop3"
            )
        out.append(int(f))
    return out


def _signed_ratio_sum(values):
    """Sum over k of the product over i != k of (v_k + v_i)/(v_k - v_i).

    Duck-typed: works for exact rationals and for rational functions alike.
    """
    total = None
    for k, vk in enumerate(values):
        term = None
        for i, vi in enumerate(values):
            if i == k:
                continue
            factor = (vk + vi) / (vk - vi)
            term = factor if term is None else term * factor
        if term is None:
            term = 1
        total = term if total is None else total + term
    return total


def _q_monomial(m: int) -> RationalFunction:
    """q**m as a rational function, valid for negative m."""
    if m >= 0:
        return RationalFunction._from_canonical(
            Polynomial.monomial(m), Polynomial.one()
        )
    return RationalFunction._from_canonical(Polynomial.one(), Polynomial.monomial(-m))


def verify_prop2(xs, ys) -> VerificationReport:
    """Corner-content identity: the two interlaced weight-ratio sums add to 1.

    Takes the outer contents xs (d of them) and inner contents ys (d - 1),
    all distinct integers.  The sum is evaluated exactly in q via factored
    hook weights; for small d the reduction to the symmetric two-term sum is
    rechecked by substituting signed q-monomials into that sum directly.
    """
    started = time.perf_counter()
    xs = _as_int_contents(xs)
    ys = _as_int_contents(ys)
    d = len(xs)
    if d < 1 or len(ys) != d - 1:
        raise ValueError("need d outer contents and d-1 inner contents")
    if len(set(xs) | set(ys)) != 2 * d - 1:
        raise ValueError("requires distinct values")
    params = {"xs": ",".join(map(str, xs)), "ys": ",".join(map(str, ys))}

    terms = []
    for k in range(d):
        wp = _WeightProduct()
        for i in range(d):
            if i != k:
                wp.mul_w(xs[k] - xs[i])
        for y in ys:
            wp.mul_w(xs[k] - y, power=-1)
        terms.append((1, wp))
    for k in range(d - 1):
        wp = _WeightProduct()
        for i in range(d - 1):
            if i != k:
                wp.mul_w(ys[k] - ys[i])
        for x in xs:
            wp.mul_w(ys[k] - x, power=-1)
        terms.append((1, wp))
    total = _materialize(terms)
    if total != RationalFunction.one():
        return _finish(
            "prop2", params, False,
            f"xs={xs}, ys={ys}: weight-ratio sum is {total.format()}, expected 1",
            started,
        )

    if d <= SUBSTITUTION_CHECK_MAX_CORNERS:
        subs = [_q_monomial(-x) for x in xs] + [-_q_monomial(-y) for y in ys]
        sub_total = _signed_ratio_sum(subs)
        if sub_total != RationalFunction.one():
            return _finish(
                "prop2", params, False,
                f"xs={xs}, ys={ys}: substituted symmetric sum is "
                f"{sub_total.format()}, expected 1",
                started,
            )
    return _finish("prop2", params, True, None, started)


def verify_prop2_for_shape(lam: Partition) -> VerificationReport:
    """Corner-content identity instantiated with the corners of a shape."""
    prof = corner_profile(lam)
    return verify_prop2(prof.outer_contents, prof.inner_contents)


def _validate_distinct_nonzero(values) -> list[Fraction]:
    vals = [Fraction(v) for v in values]
    if not vals:
        raise ValueError("requires at least one value")
    if any(v == 0 for v in vals) or len(set(vals)) != len(vals):
        raise ValueError("requires distinct nonzero values")
    return vals


def verify_prop3(a) -> VerificationReport:
    """Symmetric two-term sum: sum_k prod_{i != k} (a_k + a_i)/(a_k - a_i)
    equals 0 for an even number of values and 1 for an odd number."""
    started = time.perf_counter()
    vals = _validate_distinct_nonzero(a)
    n = len(vals)
    total = _signed_ratio_sum(vals)
    expected = n % 2
    return _finish(
        "prop3",
        {"n": n},
        total == expected,
        f"a={[str(v) for v in vals]}: sum is {total}, expected {expected}",
        started,
    )


def verify_prop3_residues(a) -> VerificationReport:
    """Partial-fraction decomposition of prod (t + a_i)/(t - a_i) in t.

    Asserts the constant part is 1 (degree and leading coefficients), that
    the residue at each a_k is 2 a_k b_k with b_k the deleted product, and
    that evaluating at t = 0 reproduces (-1)^n through the decomposition.
    """
    started = time.perf_counter()
    vals = _validate_distinct_nonzero(a)
    if len({abs(v) for v in vals}) != len(vals):
        raise ValueError("requires values with no pair summing to zero")
    n = len(vals)
    params = {"n": n}
    num = Polynomial((1,))
    den = Polynomial((1,))
    for v in vals:
        num = num * Polynomial((v, 1))
        den = den * Polynomial((-v, 1))
    failures: list[str] = []
    if not (num.degree == n and den.degree == n and num.is_monic() and den.is_monic()):
        failures.append("constant part is not 1")
    residues: list[Fraction] = []
    for k, ak in enumerate(vals):
        quot, rem = divmod(den, Polynomial((-ak, 1)))
        if not rem.is_zero:
            failures.append(f"t - a_{k+1} does not divide the denominator")
            continue
        residue = num(ak) / quot(ak)
        residues.append(residue)
        b_k = Fraction(1)
        for i, ai in enumerate(vals):
            if i != k:
                b_k *= (ak + ai) / (ak - ai)
        if residue != 2 * ak * b_k:
            failures.append(
                f"residue at a_{k+1}={ak} is {residue}, expected {2 * ak * b_k}"
            )
    if len(residues) == n:
        at_zero = 1 - sum(r / v for r, v in zip(residues, vals))
        if at_zero != (-1) ** n:
            failures.append(
                f"value at t=0 through the decomposition is {at_zero}, "
                f"expected {(-1) ** n}"
            )
    return _finish(
        "prop3_residues",
        params,
        not failures,
        f"a={[str(v) for v in vals]}: " + "; ".join(failures),
        started,
    )


def verify_prop3_alternating(n: int) -> VerificationReport:
    """Cleared-denominator form of the symmetric sum, checked symbolically.

    Expands sum_k (-1)^(k-1) prod_{i != k} (a_k + a_i) prod_{i<j, both != k}
    (a_i - a_j) as an exact integer polynomial and asserts it is alternating,
    divisible by the full difference product, with constant quotient n mod 2.
    """
    started = time.perf_counter()
    if not 2 <= n <= 6:
        raise ValueError("symbolic check supported for 2 <= n <= 6")
    lhs: mp.MPoly = {}
    for k in range(n):
        summand = mp.mp_const(n, 1)
        for i in range(n):
            if i != k:
                summand = mp.mp_mul(
                    summand, mp.mp_add(mp.mp_var(n, k), mp.mp_var(n, i))
                )
        for i in range(n):
            for j in range(i + 1, n):
                if i != k and j != k:
                    summand = mp.mp_mul(summand, mp.mp_linear_diff(n, i, j))
        if k % 2:
            summand = mp.mp_neg(summand)
        lhs = mp.mp_add(lhs, summand)

    failures: list[str] = []
    for r in range(n - 1):
        if mp.mp_swap_vars(lhs, r, r + 1) != mp.mp_neg(lhs):
            failures.append(f"not alternating under swapping positions {r+1},{r+2}")
    quotient = lhs
    try:
        for i in range(n):
            for j in range(i + 1, n):
                quotient = mp.mp_div_linear_diff(quotient, i, j)
    except ArithmeticError:
        failures.append(f"difference product does not divide (at factor {i+1},{j+1})")
    else:
        if quotient != mp.mp_const(n, n % 2):
            failures.append(f"quotient is {quotient}, expected the constant {n % 2}")
    return _finish(
        "prop3_alternating",
        {"n": n},
        not failures,
        f"n={n}: " + "; ".join(failures),
        started,
    )


def verify_weight_substitution(n: int) -> VerificationReport:
    """Change of variable tying the z-form weight to the q-form weight.

    With the square root of z taken as (1 - q)/(1 + q), the interpolating
    weight at n must equal w(n) (1 - q) / ((1 + q) n) exactly in q.
    """
    started = time.perf_counter()
    if n < 1:
        raise ValueError("n must be positive")
    even = [comb(n, 2 * k) for k in range(n // 2 + 1)]
    odd = [comb(n, 2 * k + 1) for k in range((n + 1) // 2)]
    m_even, m_odd = len(even) - 1, len(odd) - 1
    sq = Polynomial((1, -1)) ** 2  # (1 - q)^2
    co = Polynomial((1, 1)) ** 2  # (1 + q)^2
    num_even = Polynomial.zero()
    for k, c in enumerate(even):
        num_even = num_even + c * sq**k * co ** (m_even - k)
    num_odd = Polynomial.zero()
    for k, c in enumerate(odd):
        num_odd = num_odd + c * sq**k * co ** (m_odd - k)
    lhs = RationalFunction(num_even, n * num_odd * co ** (m_even - m_odd))
    q_n = Polynomial.monomial(n)
    rhs = RationalFunction(
        (1 + q_n) * Polynomial((1, -1)), n * (1 - q_n) * Polynomial((1, 1))
    )
    return _finish(
        "substitution",
        {"n": n},
        lhs == rhs,
        f"n={n}: substituted weight {lhs.format()} != {rhs.format()}",
        started,
    )


def verify_phi_recursion(n: int) -> VerificationReport:
    """Tableau-side recursion phi_{n+1} = w(1) phi_n + n phi_{n-1}."""
    started = time.perf_counter()
    if n < 0:
        raise ValueError("n must be nonnegative")
    lhs = phi_n(n + 1)
    rhs = weight_w(1) * phi_n(n)
    if n >= 1:
        rhs = rhs + n * phi_n(n - 1)
    return _finish(
        "phi_recursion",
        {"n": n},
        lhs == rhs,
        f"n={n}: {lhs.format()} != {rhs.format()}",
        started,
    )


# ---------------------------------------------------------------------------
# seeded sampling for the randomized checks
# ---------------------------------------------------------------------------


def sample_distinct_rationals(
    rng: random.Random,
    count: int,
    numerator_bound: int = 10**6,
    denominator_bound: int = 10**3,
) -> list[Fraction]:
    """Nonzero rationals p/q with distinct absolute values (so no pair is
    equal or sums to zero); collisions and zeros are resampled."""
    out: list[Fraction] = []
    seen: set[Fraction] = set()
    while len(out) < count:
        p = rng.randint(-numerator_bound, numerator_bound)
        q = rng.randint(1, denominator_bound)
        v = Fraction(p, q)
        if v == 0 or abs(v) in seen:
            continue
        seen.add(abs(v))
        out.append(v)
    return out
