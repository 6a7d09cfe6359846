# SPDX-FileCopyrightText: 2025 Battelle Memorial Institute
# SPDX-License-Identifier: BSD-2-Clause
r"""Balanced rational curves on Fano hypersurfaces by degeneration.

A general hypersurface :math:`X \subset \mathbb{P}^n` of degree :math:`d` degenerates to a
union :math:`X_1 \cup X_2` of two blown up varieties. A curve on :math:`X_1` whose normal
bundle is computed from known pieces is joined to lines on :math:`X_2` with trivial normal
bundle. The lines are the teeth of a comb whose smoothing reduction predicts the normal
bundle of a smoothing on :math:`X`.

* For :math:`d = n` the curve on :math:`X_1` is a rational curve in :math:`\mathbb{P}^{n-1}`
  of degree :math:`e_1`, down modified at :math:`a` points.
* For :math:`d < n` the curve is a section of a projective bundle over a base curve of
  degree :math:`e_0` in :math:`\mathbb{P}^{d-1}`, and its normal bundle is an extension
  of the base normal bundle by the vertical normal bundle.
"""

import functools
import logging

from ..exceptions import AccessibilityError, ConsistencyError, InvalidInputError
from ..interp import q_max
from ..oracle.profile import splitting_from_h0_function
from ..splitcalc import (
    Direction,
    SplitType,
    balance_info,
    balanced_extension,
    general_kernel,
    general_modification,
    h_split,
)
from ..treebundle import build_comb, smoothing_reduce
from .normal import pn_normal
from .record import Assumption, PipelineRecord, Stage

logger = logging.getLogger(__name__)

__all__ = ["fan_assembly_d_eq_n", "fang_assembly", "restricted_cokernel"]


def _trivial_teeth(rank: int, count: int) -> list[SplitType]:
    return [SplitType((0,) * rank)] * count


def _certify(predicted: SplitType, rank: int, degree: int, kind: str):
    if predicted.rank != rank or predicted.c1 != degree or not predicted.is_balanced:
        raise ConsistencyError(
            f"{kind} pipeline predicted {predicted}, expected balanced rank {rank} degree {degree}"
        )


def fan_assembly_d_eq_n(n: int, e: int) -> PipelineRecord:
    r"""Balanced rational curves of degree :math:`e` on hypersurfaces of degree :math:`n`.

    Writes :math:`e = e_1 n - a`. For :math:`e \geq (n-1)^2` take
    :math:`e_1 = \lceil e/n \rceil`, otherwise :math:`e_1 = n - 1` and
    :math:`a = n(n-1) - e`. The curve on :math:`X_1` has normal bundle a colength
    :math:`a` down modification of the normal bundle of a degree :math:`e_1` curve in
    :math:`\mathbb{P}^{n-1}`; it meets :math:`X_2` in :math:`e_1(n-1) - a` points, where
    lines with trivial normal bundle are attached.

    Args:
        n: Dimension of the ambient projective space, at least 4

        e: Degree of the curve, at least ``n - 1``

    Returns:
        The pipeline record, with a balanced prediction of rank :math:`n - 2` and degree
        :math:`e - 2`

    Raises:
        InvalidInputError: if ``n < 4`` or ``e < n - 1``

    Examples:
    >>> record = fan_assembly_d_eq_n(5, 20)
    >>> record.parameters["e1"], record.parameters["a"], str(record.predicted)
    (4, 0, '(6,6,6)')
    >>> str(fan_assembly_d_eq_n(4, 3).predicted)
    '(1,0)'
    """
    if n < 4:
        raise InvalidInputError(f"Need n >= 4, got {n}")
    if e < n - 1:
        raise InvalidInputError(f"Need e >= n - 1, got n={n}, e={e}")

    assumptions = [Assumption.TRANSVERSE_UPPER_SUBSPACES]
    notes = []
    if e >= (n - 1) ** 2:
        case = 1
        e1 = -(-e // n)
        a = e1 * n - e
    else:
        case = 2
        e1 = n - 1
        a = n * (n - 1) - e
        assumptions.append(Assumption.RATHMANN_VANISHING)
        notes.append(f"general tangent hyperplanes need n - 1 >= 3, here n - 1 = {n - 1}")

    curve = pn_normal(n - 1, e1)
    stages = [Stage("hyperplane_normal", curve)]
    base = curve
    if a > 0:
        base = general_modification(curve, a, Direction.DOWN)
        stages.append(Stage("blowdown_modification", base))

    teeth = e1 * (n - 1) - a
    comb = build_comb(base, _trivial_teeth(n - 2, teeth))
    predicted = smoothing_reduce(comb).predicted
    _certify(predicted, n - 2, e - 2, "fan")

    q = q_max(n, n, e)
    if h_split(predicted, -q)[1] != 0 or h_split(predicted, -q - 1)[1] == 0:
        raise ConsistencyError(f"Fan prediction {predicted} misses q_max = {q} for e={e}")

    logger.debug("Fan n=%d e=%d: e1=%d, a=%d, %d teeth -> %s", n, e, e1, a, teeth, predicted)
    return PipelineRecord(
        "fan",
        {"n": n, "d": n, "e": e, "case": case, "e1": e1, "a": a, "teeth": teeth, "q_max": q},
        tuple(stages),
        predicted,
        comb=comb,
        assumptions=tuple(assumptions),
        notes=tuple(notes),
    )


@functools.cache
def restricted_cokernel(n: int, d: int, e0: int) -> SplitType:
    r"""The bundle :math:`G` restricted to a base curve of degree :math:`e_0`.

    On the base curve :math:`G` is the cokernel of
    :math:`\mathcal{O}(-(d-1)e_0) \to \mathcal{O}(e_0) \oplus (n-d+1)\mathcal{O}`, so
    :math:`\check{G}` is the kernel of the dual map onto :math:`\mathcal{O}((d-1)e_0)`.
    For general binary forms every multiplication map on sections has maximal rank, which
    gives

    .. math::

        h^0(\check{G}(t)) = \max\bigl(0, h^0(\mathcal{O}(t - e_0)) + (n-d+1)h^0(\mathcal{O}(t))
        - h^0(\mathcal{O}(t + (d-1)e_0))\bigr)

    and the splitting type follows from this profile. It is balanced exactly when
    :math:`(n-d)(e_0-1) \leq (d-1)e_0`. Special forms only make it less balanced.

    Args:
        n: Dimension of the ambient projective space

        d: Degree of the hypersurface, ``3 <= d <= n - 1``

        e0: Degree of the base curve, positive

    Returns:
        The splitting type of :math:`G|_{C_0}`, of rank :math:`n - d + 1` and degree
        :math:`de_0`

    Raises:
        InvalidInputError: if the parameters are out of range

    Examples:
    >>> str(restricted_cokernel(4, 3, 2)), str(restricted_cokernel(6, 3, 3))
    ('(3,3)', '(3,2,2,2)')
    >>> str(restricted_cokernel(6, 3, 4))
    '(4,3,3,2)'
    """
    if not 3 <= d <= n - 1:
        raise InvalidInputError(f"Need 3 <= d <= n - 1, got n={n}, d={d}")
    if e0 < 1:
        raise InvalidInputError(f"Need e0 >= 1, got {e0}")

    rank = n - d + 1
    m = (d - 1) * e0

    def h0(t: int) -> int:
        source = max(0, t - e0 + 1) + rank * max(0, t + 1)
        return max(0, source - max(0, t + m + 1))

    return splitting_from_h0_function(h0, rank, upper=0, lower=-d * e0).dual()


def fang_assembly(n: int, d: int, e: int, e0: int) -> PipelineRecord:
    r"""Balanced rational curves of degree :math:`e` on hypersurfaces of degree :math:`d < n`.

    The pipeline, with base curve :math:`C_0` of degree :math:`e_0` in
    :math:`\mathbb{P}^{d-1}`:

    1. :math:`G|_{C_0}` from :func:`restricted_cokernel`, which must be balanced;
    2. :math:`K`: kernel of a general surjection :math:`G|_{C_0} \to \mathcal{O}(e)`;
    3. vertical normal bundle :math:`\check{K}(e)`;
    4. :math:`N_0`: normal bundle of :math:`C_0` in :math:`\mathbb{P}^{d-1}`;
    5. :math:`N_{C_1/X_1}`: the extension of :math:`N_0` by the vertical bundle, balanced
       exactly when the slope floors agree;
    6. :math:`e - e_0` lines with trivial normal bundle attached on :math:`X_2`.

    Args:
        n: Dimension of the ambient projective space

        d: Degree of the hypersurface, ``3 <= d <= n - 1``

        e: Degree of the curve

        e0: Degree of the base curve, ``d - 1 <= e0 <= e``

    Returns:
        The pipeline record, with a balanced prediction of rank :math:`n - 2` and degree
        :math:`e(n+1-d) - 2`

    Raises:
        InvalidInputError: if the parameters are out of range
        AccessibilityError: if :math:`G|_{C_0}` is unbalanced, no general surjection exists
            or the slope floors differ

    Examples:
    >>> record = fang_assembly(4, 3, 5, 2)
    >>> [str(record.stage(label)) for label in ("restricted_cokernel", "kernel", "vertical")]
    ['(3,3)', '(1)', '(4)']
    >>> str(record.predicted)
    '(4,4)'
    """
    if not 3 <= d <= n - 1:
        raise InvalidInputError(f"Need 3 <= d <= n - 1, got n={n}, d={d}")
    if not d - 1 <= e0 <= e:
        raise InvalidInputError(f"Need d - 1 <= e0 <= e, got d={d}, e0={e0}, e={e}")

    cokernel = restricted_cokernel(n, d, e0)
    if not cokernel.is_balanced:
        raise AccessibilityError(
            f"Restricted cokernel {cokernel} is unbalanced for n={n}, d={d}, e0={e0}"
        )
    upper = balance_info(cokernel).upper_degree
    if e < upper:
        raise AccessibilityError(
            f"No surjection {cokernel} -> O({e}) exists for n={n}, d={d}, e0={e0}"
        )

    kernel = general_kernel(cokernel, e)
    vertical = kernel.dual().twist(e)
    base_normal = pn_normal(d - 1, e0)
    if vertical.slope_floor != base_normal.slope_floor:
        raise AccessibilityError(
            f"Slope floors differ for n={n}, d={d}, e={e}, e0={e0}: vertical {vertical} "
            f"has {vertical.slope_floor}, base {base_normal} has {base_normal.slope_floor}"
        )
    curve = balanced_extension(vertical, base_normal)

    teeth = e - e0
    comb = build_comb(curve, _trivial_teeth(n - 2, teeth))
    predicted = smoothing_reduce(comb).predicted
    _certify(predicted, n - 2, e * (n + 1 - d) - 2, "fang")

    logger.debug("Fang n=%d d=%d e=%d e0=%d -> %s", n, d, e, e0, predicted)
    return PipelineRecord(
        "fang",
        {"n": n, "d": d, "e": e, "e0": e0, "m": d - 1, "teeth": teeth},
        (
            Stage("restricted_cokernel", cokernel),
            Stage("kernel", kernel),
            Stage("vertical", vertical),
            Stage("base_normal", base_normal),
            Stage("curve_normal", curve),
        ),
        predicted,
        comb=comb,
        assumptions=(
            Assumption.RESTRICTED_FORMS_GENERAL,
            Assumption.TRANSVERSE_UPPER_SUBSPACES,
        ),
    )
