# SPDX-FileCopyrightText: 2025 Battelle Memorial Institute
# SPDX-License-Identifier: BSD-2-Clause
r"""Exact coefficient fields for the oracle.

All oracle matrices are built from Python integers: random coefficients, evaluations
of monomials at small integer points and gluing entries. A field only decides how an
integer matrix is read. The default is the prime field :math:`\mathbb{F}_p` with
:math:`p = 2^{31} - 1`, handled by :mod:`galois`; the rationals, handled by
:class:`sympy.polys.matrices.DomainMatrix`, are available for audit runs.
"""

import functools
from collections.abc import Sequence
from dataclasses import dataclass

import galois
import numpy as np
from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from ..exceptions import InvalidInputError

__all__ = ["DEFAULT_PRIME", "ExactField"]

DEFAULT_PRIME = 2**31 - 1

# random rationals are drawn as integers of this bit size
RATIONAL_BITS = 16


@functools.lru_cache(maxsize=8)
def _galois_field(p: int) -> type[galois.FieldArray]:
    return galois.GF(p)


@dataclass(frozen=True)
class ExactField:
    """A prime field or the rationals.

    Args:
        modulus: A prime :math:`p`, or ``None`` for the rationals

    Raises:
        InvalidInputError: if ``modulus`` is not a prime

    Examples:
    >>> ExactField().is_prime
    True
    >>> ExactField.rationals().rank([[1, 2], [2, 4]], 2)
    1
    """

    modulus: int | None = DEFAULT_PRIME

    def __post_init__(self):
        if self.modulus is not None and not galois.is_prime(self.modulus):
            raise InvalidInputError(f"Field modulus must be prime, got {self.modulus}")

    @classmethod
    def rationals(cls) -> "ExactField":
        return cls(modulus=None)

    @classmethod
    def parse(cls, text: str) -> "ExactField":
        """Reads ``"rationals"`` or a prime modulus, as given on the command line"""
        if text.strip().lower() in {"rationals", "qq", "q"}:
            return cls.rationals()
        try:
            return cls(modulus=int(text))
        except ValueError as e:
            raise InvalidInputError(f"Expected a prime or 'rationals', got {text!r}") from e

    @property
    def is_prime(self) -> bool:
        return self.modulus is not None

    def __str__(self):
        return "QQ" if self.modulus is None else f"GF({self.modulus})"

    def random_element(self, rng: np.random.Generator, nonzero: bool = False) -> int:
        """Draws a random element, represented by an integer"""
        while True:
            if self.modulus is None:
                bound = 2 ** (RATIONAL_BITS - 1)
                value = int(rng.integers(-bound, bound))
            else:
                value = int(rng.integers(0, self.modulus))

            if not (nonzero and self.is_zero(value)):
                return value

    def is_zero(self, value: int) -> bool:
        if self.modulus is None:
            return value == 0
        return value % self.modulus == 0

    def rank(self, rows: Sequence[Sequence[int]], ncols: int) -> int:
        """Rank of an integer matrix read in this field.

        Args:
            rows: Matrix rows of Python integers

            ncols: Number of columns, needed when ``rows`` is empty

        Returns:
            The exact rank
        """
        if not rows or ncols == 0:
            return 0

        if self.modulus is None:
            return DomainMatrix.from_list([list(row) for row in rows], QQ).rank()

        p = self.modulus
        gf = _galois_field(p)
        matrix = gf(np.array([[x % p for x in row] for row in rows], dtype=np.int64))
        reduced = matrix.row_reduce()
        return int(np.count_nonzero(np.any(reduced != 0, axis=1)))
