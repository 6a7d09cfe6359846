# SPDX-FileCopyrightText: 2025 Battelle Memorial Institute
# SPDX-License-Identifier: BSD-2-Clause
r"""Tables of accessible, point-minimal and interpolating degrees.

Accessibility is eventually periodic in :math:`e` with period :math:`d(n-2)`: the shift
:math:`(e, e_0) \mapsto (e + d(n-2), e_0 + (d-2)(n+1-d))` maps witnesses to witnesses.
Residue summaries are therefore read off the end of a long enough range.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import NamedTuple

from ..exceptions import InsufficientWindowError, InvalidInputError
from .numerology import is_accessible, is_point_minimal, q_max

logger = logging.getLogger(__name__)

__all__ = [
    "FamilyDegree",
    "InterpRow",
    "InterpTable",
    "example_family_degrees",
    "interp_table",
]


class InterpRow(NamedTuple):
    """One degree of an interpolation table"""

    n: int
    d: int
    e: int
    q_max: int
    point_minimal: bool
    accessible: bool
    e0: int | None
    interpolating: bool


@dataclass(frozen=True)
class InterpTable:
    """Rows of an interpolation table and their residue summaries.

    Args:
        n: Dimension of the ambient projective space

        d: Degree of the hypersurface

        rows: One row per degree

        accessible_residues: Residues of accessible degrees modulo :attr:`modulus`

        interpolating_residues: Residues of accessible point-minimal degrees modulo
            :attr:`modulus`

        interpolating_q_residues: Residues of interpolating point counts modulo
            :attr:`q_modulus`

        period: Least period of the accessibility flags at the end of the range
    """

    n: int
    d: int
    rows: tuple[InterpRow, ...]
    accessible_residues: tuple[int, ...]
    interpolating_residues: tuple[int, ...]
    interpolating_q_residues: tuple[int, ...]
    period: int | None

    @property
    def modulus(self) -> int:
        return self.d * (self.n - 2)

    @property
    def q_modulus(self) -> int:
        return self.d * (self.n + 1 - self.d)

    @property
    def interpolating_q(self) -> tuple[int, ...]:
        """Interpolating point counts, ascending"""
        return tuple(sorted({row.q_max for row in self.rows if row.interpolating}))

    @property
    def accessible(self) -> tuple[int, ...]:
        return tuple(row.e for row in self.rows if row.accessible)

    @property
    def class_count(self) -> int:
        return len(self.accessible_residues)

    @property
    def expected_class_count(self) -> int:
        """Leading term :math:`(n-d)d` of the class count"""
        return (self.n - self.d) * self.d

    @property
    def interpolating_class_count(self) -> int:
        return len(self.interpolating_residues)

    @property
    def expected_interpolating_class_count(self) -> Fraction:
        return Fraction(self.n + 1 - self.d, 2)


def interp_table(n: int, d: int, e_range: range) -> InterpTable:
    """Enumerates the interpolation numerology of degrees ``e_range``.

    Args:
        n: Dimension of the ambient projective space

        d: Degree of the hypersurface, ``3 <= d <= n - 1``

        e_range: Consecutive positive degrees

    Returns:
        The table

    Raises:
        DegenerateDenominatorError: if accessibility is undefined for ``(n, d)``
        InsufficientWindowError: if the range does not extend twice the period past the
            first accessible degree
        InvalidInputError: if the range is not consecutive or holds non-positive degrees

    Examples:
    >>> table = interp_table(4, 3, range(1, 41))
    >>> table.accessible_residues, table.accessible[:3]
    ((2, 5), (5, 8, 11))
    """
    if e_range.step != 1 or len(e_range) == 0 or e_range.start < 1:
        raise InvalidInputError(
            f"Need a non-empty consecutive range of positive degrees, got {e_range}"
        )

    rows = []
    for e in e_range:
        accessible, e0 = is_accessible(n, d, e)
        point_minimal = is_point_minimal(n, d, e)
        rows.append(
            InterpRow(
                n, d, e, q_max(n, d, e), point_minimal, accessible, e0, accessible and point_minimal
            )
        )

    modulus = d * (n - 2)
    first = next((row.e for row in rows if row.accessible), None)
    start = first if first is not None else e_range.start
    if e_range.stop - 1 < start + 2 * modulus:
        raise InsufficientWindowError(
            f"Range {e_range} must reach {start + 2 * modulus}, twice the period {modulus} "
            f"past degree {start}"
        )

    tail = rows[-modulus:]
    q_modulus = d * (n + 1 - d)
    table = InterpTable(
        n,
        d,
        tuple(rows),
        tuple(sorted({row.e % modulus for row in tail if row.accessible})),
        tuple(sorted({row.e % modulus for row in tail if row.interpolating})),
        tuple(sorted({row.q_max % q_modulus for row in tail if row.interpolating})),
        _period([row.accessible for row in rows[-2 * modulus :]], modulus),
    )
    logger.debug("n=%d, d=%d: %d accessible classes mod %d", n, d, table.class_count, modulus)
    return table


def _period(flags: list[bool], modulus: int) -> int | None:
    for p in range(1, modulus + 1):
        if modulus % p == 0 and all(flags[i] == flags[i + p] for i in range(len(flags) - p)):
            return p
    return None


class FamilyDegree(NamedTuple):
    r"""An accessible degree for :math:`d = n - 1` with :math:`e_0 = k(n-3) + r`"""

    k: int
    r: int
    e0: int
    e: int


def example_family_degrees(n: int, k_max: int) -> tuple[FamilyDegree, ...]:
    r"""Closed-form accessible degrees for hypersurfaces of degree :math:`d = n - 1`.

    Writing :math:`e_0 = k(n-3) + r` with :math:`0 \leq r < n - 3` and
    :math:`C = \binom{n-1}{2}`, the accessible degrees with :math:`k \geq 1` are

    * :math:`e = Ck + nr/2` for :math:`n` even, :math:`n \geq 6`,
      :math:`1 \leq r \leq (n-2)/2`;
    * :math:`e = Ck + (nr+1)/2` for :math:`n` and :math:`r` odd,
      :math:`(n-1)/2 \leq r \leq n-4`;
    * :math:`e = Ck + nr/2` for :math:`n` odd and :math:`r` even,
      :math:`2 \leq r \leq (n-3)/2`;
    * :math:`e = 3k - 1` for :math:`n = 4`, :math:`r = 0`, :math:`k \geq 2`.

    Args:
        n: Dimension of the ambient projective space, at least 4

        k_max: Largest :math:`k` to list

    Returns:
        The degrees, ascending

    Examples:
    >>> [f.e for f in example_family_degrees(4, 4)]
    [5, 8, 11]
    >>> [(f.e0, f.e) for f in example_family_degrees(6, 1)]
    [(4, 13), (5, 16)]
    """
    if n < 4:
        raise InvalidInputError(f"Need n >= 4, got {n}")

    c = comb(n - 1, 2)
    found = []
    for k in range(1, k_max + 1):
        if n == 4:
            if k >= 2:
                found.append(FamilyDegree(k, 0, k, 3 * k - 1))
            continue
        for r in range(1, n - 3):
            if n % 2 == 0 and r <= (n - 2) // 2:
                e = c * k + n * r // 2
            elif n % 2 == 1 and r % 2 == 1 and (n - 1) // 2 <= r <= n - 4:
                e = c * k + (n * r + 1) // 2
            elif n % 2 == 1 and r % 2 == 0 and r <= (n - 3) // 2:
                e = c * k + n * r // 2
            else:
                continue
            found.append(FamilyDegree(k, r, k * (n - 3) + r, e))

    return tuple(sorted(found, key=lambda f: f.e))
