# License: MIT
# Copyright © 2024 Frequenz Energy-as-a-Service GmbH

"""Exact rational arithmetic and truncated bivariate power series.

The series are what the hypersurface Hodge numbers are read from: the
generating function of the primitive Hodge numbers of a degree `d`
hypersurface is expanded in `y` and `z` up to a caller supplied total degree.
"""

from __future__ import annotations

import logging
import math
from collections.abc import Iterator, Mapping
from dataclasses import dataclass, field
from fractions import Fraction
from typing import TypeAlias

from ._types import InconsistentInvariantsError

_logger = logging.getLogger(__name__)

Rational: TypeAlias = Fraction
"""Exact rational scalar, kept in lowest terms with a positive denominator."""

Exponent: TypeAlias = tuple[int, int]
"""Exponent pair `(i, j)` of the monomial `y**i * z**j`."""


def binomial(n: int, k: int) -> int:
    """Return the binomial coefficient `C(n, k)`.

    Args:
        n: The size of the set, must be non-negative.
        k: The size of the subset, any integer.

    Returns:
        `C(n, k)`, or 0 when `k < 0` or `k > n`.

    Raises:
        ValueError: If `n` is negative.
    """
    if n < 0:
        raise ValueError(f"The binomial coefficient needs n >= 0, got {n}.")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


@dataclass(frozen=True)
class BiSeries:
    """Truncated power series in `y` and `z` with exact rational coefficients.

    Only the monomials `y**i * z**j` with `i + j <= order` are tracked. Absent
    coefficients are zero, and zero coefficients are never stored.
    """

    order: int
    """Truncation order: the largest tracked total degree."""

    coeffs: Mapping[Exponent, Fraction] = field(default_factory=dict)
    """Non-zero coefficients keyed by exponent pair."""

    def __post_init__(self) -> None:
        """Normalize the coefficients.

        Raises:
            ValueError: If the order or an exponent is negative.
        """
        if self.order < 0:
            raise ValueError(
                f"The truncation order must be non-negative, got {self.order}."
            )
        cleaned: dict[Exponent, Fraction] = {}
        for (i, j), value in sorted(self.coeffs.items()):
            if i < 0 or j < 0:
                raise ValueError(f"Exponents must be non-negative, got {(i, j)}.")
            if i + j > self.order or value == 0:
                continue
            cleaned[(i, j)] = Fraction(value)
        object.__setattr__(self, "coeffs", cleaned)

    def __hash__(self) -> int:
        """Hash the order together with the stored coefficients.

        Returns:
            The hash value.
        """
        return hash((self.order, frozenset(self.coeffs.items())))

    @classmethod
    def constant(cls, order: int, value: Fraction | int = 1) -> BiSeries:
        """Create a constant series.

        Args:
            order: The truncation order.
            value: The constant term.

        Returns:
            The series `value`.
        """
        return cls(order, {(0, 0): Fraction(value)})

    @classmethod
    def monomial(
        cls, order: int, i: int, j: int, value: Fraction | int = 1
    ) -> BiSeries:
        """Create the series `value * y**i * z**j`.

        Args:
            order: The truncation order.
            i: Exponent of `y`.
            j: Exponent of `z`.
            value: The coefficient.

        Returns:
            The monomial series, zero if `i + j` exceeds the order.
        """
        return cls(order, {(i, j): Fraction(value)})

    @classmethod
    def from_polynomial(
        cls, order: int, terms: Mapping[Exponent, Fraction | int]
    ) -> BiSeries:
        """Create a series from polynomial terms, dropping those above the order.

        Args:
            order: The truncation order.
            terms: Coefficients keyed by exponent pair.

        Returns:
            The truncated series.
        """
        return cls(order, {key: Fraction(value) for key, value in terms.items()})

    def coefficient(self, i: int, j: int) -> Fraction:
        """Return the coefficient of `y**i * z**j`."""
        return self.coeffs.get((i, j), Fraction(0))

    def constant_term(self) -> Fraction:
        """Return the coefficient of the monomial 1."""
        return self.coefficient(0, 0)

    def terms(self) -> Iterator[tuple[Exponent, Fraction]]:
        """Iterate over the non-zero terms in exponent order.

        Yields:
            Pairs of exponent and coefficient.
        """
        yield from sorted(self.coeffs.items())

    def truncate(self, order: int) -> BiSeries:
        """Return the series truncated to a lower order.

        Args:
            order: The new truncation order.

        Returns:
            The truncated series.

        Raises:
            ValueError: If `order` exceeds the current order.
        """
        if order > self.order:
            raise ValueError(
                f"Cannot raise the truncation order from {self.order} to {order}."
            )
        return BiSeries(order, self.coeffs)

    def diagonal(self) -> list[Fraction]:
        """Substitute `z = y` and return the univariate coefficients.

        Returns:
            The coefficients of `t**0 ... t**order` after `y = z = t`.
        """
        result = [Fraction(0)] * (self.order + 1)
        for (i, j), value in self.coeffs.items():
            result[i + j] += value
        return result

    def scale(self, value: Fraction | int) -> BiSeries:
        """Multiply every coefficient by a scalar."""
        return BiSeries(
            self.order, {key: coeff * value for key, coeff in self.coeffs.items()}
        )

    def __add__(self, other: BiSeries) -> BiSeries:
        """Add two series of the same order.

        Args:
            other: The other summand.

        Returns:
            The sum.
        """
        _require_same_order(self, other)
        total = dict(self.coeffs)
        for key, value in other.coeffs.items():
            total[key] = total.get(key, Fraction(0)) + value
        return BiSeries(self.order, total)

    def __neg__(self) -> BiSeries:
        """Negate the series."""
        return self.scale(-1)

    def __sub__(self, other: BiSeries) -> BiSeries:
        """Subtract two series of the same order."""
        return self + (-other)

    def __mul__(self, other: BiSeries) -> BiSeries:
        """Multiply two series of the same order."""
        return series_mul(self, other)


def _require_same_order(a: BiSeries, b: BiSeries) -> None:
    """Check that two series are truncated at the same order.

    Args:
        a: The first series.
        b: The second series.

    Raises:
        ValueError: If the orders differ.
    """
    if a.order != b.order:
        raise ValueError(
            f"Series orders differ ({a.order} != {b.order}); truncate one first."
        )


def series_mul(a: BiSeries, b: BiSeries) -> BiSeries:
    """Multiply two truncated series.

    Args:
        a: The first factor.
        b: The second factor.

    Returns:
        The product, truncated at the common order.
    """
    _require_same_order(a, b)
    product: dict[Exponent, Fraction] = {}
    for (i1, j1), x in a.coeffs.items():
        for (i2, j2), y in b.coeffs.items():
            if i1 + j1 + i2 + j2 > a.order:
                continue
            key = (i1 + i2, j1 + j2)
            product[key] = product.get(key, Fraction(0)) + x * y
    return BiSeries(a.order, product)


def series_invert_unit(a: BiSeries) -> BiSeries:
    """Invert a series with a non-zero constant term.

    The inverse is computed degree by degree from `a * b == 1`.

    Args:
        a: The series to invert.

    Returns:
        The series `b` with `a * b == 1` up to the truncation order.

    Raises:
        ValueError: If the constant term of `a` is zero.
    """
    a0 = a.constant_term()
    if a0 == 0:
        raise ValueError("Cannot invert a series whose constant term is zero.")
    inverse: dict[Exponent, Fraction] = {(0, 0): 1 / a0}
    for total in range(1, a.order + 1):
        for i in range(total + 1):
            j = total - i
            acc = Fraction(0)
            for (ai, aj), coeff in a.coeffs.items():
                if (ai, aj) == (0, 0) or ai > i or aj > j:
                    continue
                acc += coeff * inverse.get((i - ai, j - aj), Fraction(0))
            if acc:
                inverse[(i, j)] = -acc / a0
    return BiSeries(a.order, inverse)


def series_div_exact_z_minus_y(a: BiSeries) -> BiSeries:
    """Divide a series exactly by `z - y`.

    Writing `a = (z - y) * b` homogeneous degree by degree gives
    `a[i, k-i] = b[i, k-1-i] - b[i-1, k-i]`, which is solved for `b` from
    `i = 0` upwards; the last equation of each degree is the remainder.

    Args:
        a: A series vanishing on the diagonal `y = z`.

    Returns:
        The quotient, truncated at `a.order - 1`.

    Raises:
        ValueError: If `a.order` is zero or `a` is not divisible by `z - y`.
    """
    if a.order < 1:
        raise ValueError("Dividing by (z - y) needs a series of order >= 1.")
    if a.constant_term() != 0:
        raise ValueError("The series is not divisible by (z - y): non-zero constant.")
    quotient: dict[Exponent, Fraction] = {}
    for k in range(1, a.order + 1):
        previous = Fraction(0)
        for i in range(k):
            value = a.coefficient(i, k - i) + previous
            quotient[(i, k - 1 - i)] = value
            previous = value
        if a.coefficient(k, 0) != -previous:
            raise ValueError(
                f"The series is not divisible by (z - y): non-zero remainder in "
                f"degree {k}."
            )
    return BiSeries(a.order - 1, quotient)


def _accumulate(
    terms: dict[Exponent, Fraction], key: Exponent, value: Fraction | int
) -> None:
    terms[key] = terms.get(key, Fraction(0)) + value


def hodge_generating_series(d: int, order: int) -> BiSeries:
    """Expand the primitive Hodge number generating function of a hypersurface.

    The coefficient of `y**p * z**q` is the primitive Hodge number
    `h_0^{p,q}` of a smooth degree `d` hypersurface of dimension `p + q`. The
    expansion uses the form whose denominator has constant term 1:

    `sum C(d-1, i+j+1) y^i z^j / (1 - sum_{i,j >= 1} C(d, i+j) y^i z^j)`.

    Args:
        d: The degree of the hypersurface.
        order: The truncation order.

    Returns:
        The truncated generating series.

    Raises:
        ValueError: If `d < 1` or `order < 0`.
    """
    if d < 1:
        raise ValueError(f"The degree must be at least 1, got {d}.")
    if order < 0:
        raise ValueError(f"The truncation order must be non-negative, got {order}.")
    numerator = {
        (i, total - i): Fraction(binomial(d - 1, total + 1))
        for total in range(order + 1)
        for i in range(total + 1)
    }
    denominator: dict[Exponent, Fraction] = {(0, 0): Fraction(1)}
    for total in range(2, order + 1):
        for i in range(1, total):
            denominator[(i, total - i)] = Fraction(-binomial(d, total))
    _logger.debug("Expanding the generating series for d=%s to order %s.", d, order)
    return series_mul(
        BiSeries(order, numerator), series_invert_unit(BiSeries(order, denominator))
    )


def hodge_generating_series_ratio(d: int, order: int) -> BiSeries:
    """Expand the generating function from its ratio form.

    Numerator `(1+z)^(d-1) - (1+y)^(d-1)` and denominator
    `z(1+y)^d - y(1+z)^d` are both divided by `z - y` before inverting, since
    the raw denominator has no constant term. This is kept as an independent
    check of `hodge_generating_series`.

    Args:
        d: The degree of the hypersurface.
        order: The truncation order.

    Returns:
        The truncated generating series.

    Raises:
        ValueError: If `d < 1` or `order < 0`.
    """
    if d < 1:
        raise ValueError(f"The degree must be at least 1, got {d}.")
    if order < 0:
        raise ValueError(f"The truncation order must be non-negative, got {order}.")
    top = order + 1
    numerator: dict[Exponent, Fraction] = {}
    denominator: dict[Exponent, Fraction] = {}
    for k in range(top + 1):
        _accumulate(numerator, (0, k), binomial(d - 1, k))
        _accumulate(numerator, (k, 0), -binomial(d - 1, k))
        _accumulate(denominator, (k, 1), binomial(d, k))
        _accumulate(denominator, (1, k), -binomial(d, k))
    quotient_num = series_div_exact_z_minus_y(BiSeries(top, numerator))
    quotient_den = series_div_exact_z_minus_y(BiSeries(top, denominator))
    return series_mul(quotient_num, series_invert_unit(quotient_den))


def primitive_to_hodge(p: int, q: int, c: Fraction | int) -> int:
    """Turn a primitive Hodge number into a Hodge number.

    Args:
        p: First Hodge index.
        q: Second Hodge index.
        c: The primitive Hodge number `h_0^{p,q}`.

    Returns:
        `h^{p,q} = h_0^{p,q} + delta_{p,q}`.

    Raises:
        InconsistentInvariantsError: If `c` is not a non-negative integer.
    """
    value = Fraction(c)
    if value.denominator != 1 or value < 0:
        raise InconsistentInvariantsError(
            f"The primitive Hodge number h_0^{{{p},{q}}} = {value} is not a "
            "non-negative integer."
        )
    return value.numerator + (1 if p == q else 0)


def hypersurface_euler_characteristic(n: int, d: int) -> int:
    """Return the topological Euler characteristic of a smooth hypersurface.

    Args:
        n: The dimension of the hypersurface.
        d: Its degree.

    Returns:
        `((1 - d)^(n+2) - 1) / d + n + 2`.

    Raises:
        ValueError: If `n < 0` or `d < 1`.
    """
    if n < 0 or d < 1:
        raise ValueError(f"Need n >= 0 and d >= 1, got n={n}, d={d}.")
    return ((1 - d) ** (n + 2) - 1) // d + n + 2
