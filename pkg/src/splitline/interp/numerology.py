# SPDX-FileCopyrightText: 2025 Battelle Memorial Institute
# SPDX-License-Identifier: BSD-2-Clause
r"""Point counts and degrees of balanced rational curves on Fano hypersurfaces.

For a hypersurface of degree :math:`d \leq n` in :math:`\mathbb{P}^n` of index
:math:`k = n + 1 - d`, a balanced rational curve of degree :math:`e` passes through

.. math::

    q_{\max}(e) = \left\lfloor \frac{ke - 2}{n - 2} \right\rfloor + 1

general points, and :math:`q` general points need a curve of degree at least

.. math::

    e_{\min}(q) = \left\lceil \frac{(q - 1)(n - 2) + 2}{k} \right\rceil.
"""

from fractions import Fraction
from typing import NamedTuple

from ..exceptions import ConsistencyError, DegenerateDenominatorError, InvalidInputError

__all__ = [
    "Accessibility",
    "e_min",
    "is_accessible",
    "is_point_minimal",
    "q_max",
    "remainder_criterion",
]


def _check(n: int, d: int):
    if n < 3:
        raise DegenerateDenominatorError(f"Need n >= 3 so that n - 2 > 0, got n={n}")
    if not 1 <= d <= n:
        raise DegenerateDenominatorError(f"Need 1 <= d <= n so that n + 1 - d > 0, got d={d}")


def q_max(n: int, d: int, e: int) -> int:
    """Number of general points a balanced rational curve of degree ``e`` passes through.

    Raises:
        DegenerateDenominatorError: if ``n < 3`` or ``d`` is outside ``[1, n]``
        InvalidInputError: if ``e < 1``

    Examples:
    >>> q_max(5, 5, 8), q_max(5, 4, 3)
    (3, 2)
    """
    _check(n, d)
    if e < 1:
        raise InvalidInputError(f"Degree must be positive, got {e}")
    return (e * (n + 1 - d) - 2) // (n - 2) + 1


def e_min(n: int, d: int, q: int) -> int:
    """Least expected degree of a rational curve through ``q`` general points.

    Examples:
    >>> e_min(5, 5, 3), e_min(6, 3, 2)
    (8, 2)
    """
    _check(n, d)
    if q < 1:
        raise InvalidInputError(f"Point count must be positive, got {q}")
    return -(-((q - 1) * (n - 2) + 2) // (n + 1 - d))


def remainder_criterion(n: int, d: int, e: int) -> bool:
    r"""Whether the remainder of :math:`ke - 2` modulo :math:`n - 2` is below :math:`k`"""
    _check(n, d)
    k = n + 1 - d
    return (k * e - 2) % (n - 2) < k


def is_point_minimal(n: int, d: int, e: int) -> bool:
    r"""Whether :math:`e` is point-minimal.

    That is, whether

    .. math::

        \frac{k(e-1) - 2}{n-2} < \left\lfloor \frac{ke - 2}{n-2} \right\rfloor

    or equivalently :math:`q_{\max}(e - 1) < q_{\max}(e)`.

    Examples:
    >>> is_point_minimal(5, 5, 5), is_point_minimal(5, 5, 4)
    (True, False)
    """
    _check(n, d)
    k = n + 1 - d
    result = Fraction(k * (e - 1) - 2, n - 2) < (k * e - 2) // (n - 2)
    if d > 3 and result != remainder_criterion(n, d, e):
        raise ConsistencyError(f"Point-minimality criteria disagree at n={n}, d={d}, e={e}")
    return result


class Accessibility(NamedTuple):
    """Whether a degree is accessible, with the witness base degree"""

    accessible: bool
    witness: int | None


def is_accessible(n: int, d: int, e: int) -> Accessibility:
    r"""Searches for a base degree :math:`e_0` making the fang extension balanced.

    The condition on :math:`d - 1 \leq e_0 \leq e` is the equality of slope floors

    .. math::

        \left\lfloor \frac{e - de_0}{n-d} \right\rfloor + e
        = e_0 + \left\lfloor \frac{2e_0 - 2}{d-2} \right\rfloor

    Args:
        n: Dimension of the ambient projective space

        d: Degree of the hypersurface, ``3 <= d <= n - 1``

        e: Degree of the curve

    Returns:
        The accessibility flag and the smallest witness

    Raises:
        DegenerateDenominatorError: if ``d < 3`` or ``d >= n``

    Examples:
    >>> is_accessible(4, 3, 5)
    Accessibility(accessible=True, witness=2)
    >>> is_accessible(4, 3, 4)
    Accessibility(accessible=False, witness=None)
    >>> is_accessible(6, 5, 13).witness
    4
    """
    if not 3 <= d <= n - 1:
        raise DegenerateDenominatorError(f"Accessibility needs 3 <= d <= n - 1, got n={n}, d={d}")

    for e0 in range(d - 1, e + 1):
        if (e - d * e0) // (n - d) + e == e0 + (2 * e0 - 2) // (d - 2):
            return Accessibility(True, e0)
    return Accessibility(False, None)
