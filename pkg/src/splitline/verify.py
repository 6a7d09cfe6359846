# SPDX-FileCopyrightText: 2025 Battelle Memorial Institute
# SPDX-License-Identifier: BSD-2-Clause
r"""Cross-checks of the closed-form rules against the exact oracle.

Each check sweeps a family of cases, compares a closed-form answer against an independent
computation, and returns a :class:`CheckResult`. The default sizes are the acceptance
sizes; :data:`QUICK_SIZES` holds reduced ones for a desk run. Random cases are drawn from
:func:`numpy.random.default_rng` seeded by the suite's seeds, so runs are reproducible.

>>> [r.name for r in run_suite([0], checks=["duality", "numerology"])]
['duality', 'numerology']
"""

import dataclasses
import itertools
import logging
from collections.abc import Callable, Iterable, Sequence
from dataclasses import dataclass

import numpy as np

from .exceptions import AccessibilityError, InvalidInputError, SplitlineError
from .geometry import fan_assembly_d_eq_n, fang_assembly, pn_pipeline, restricted_cokernel
from .interp import e_min, is_accessible, is_point_minimal, q_max
from .oracle import (
    ExactField,
    ModificationPoint,
    end_tree,
    extension_splitting,
    general_morphism,
    kernel_splitting,
    modification_splitting,
    random_extension,
    tree_cohomology,
    tree_data_from_comb,
)
from .splitcalc import (
    Direction,
    SplitType,
    balance_info,
    balanced_extension,
    balanced_of,
    general_kernel,
    general_modification,
    h_split,
    is_rigid,
    partition_of,
    point_modification,
)
from .treebundle import build_comb, smoothing_reduce

logger = logging.getLogger(__name__)

__all__ = ["CHECKS", "QUICK_SIZES", "CheckResult", "run_suite"]

# number of mismatch descriptions kept per check
MAX_REPORTED = 10


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one check.

    Args:
        name: Name of the check

        cases: Number of cases compared

        mismatches: Number of cases where the two sides disagreed or raised

        failures: Descriptions of the first few mismatching cases
    """

    name: str
    cases: int
    mismatches: int
    failures: tuple[str, ...] = ()

    @property
    def passed(self) -> bool:
        return self.mismatches == 0

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "cases": self.cases,
            "mismatches": self.mismatches,
            "passed": self.passed,
            "failures": list(self.failures),
        }


@dataclass
class _Tally:
    name: str
    cases: int = 0
    mismatches: int = 0
    failures: list[str] = dataclasses.field(default_factory=list)

    def record(self, ok: bool, description: Callable[[], str]):
        self.cases += 1
        if not ok:
            self.mismatches += 1
            if len(self.failures) < MAX_REPORTED:
                self.failures.append(description())

    def result(self) -> CheckResult:
        return CheckResult(self.name, self.cases, self.mismatches, tuple(self.failures))


def _random_split(rng: np.random.Generator, max_rank: int, low: int, high: int) -> SplitType:
    rank = int(rng.integers(1, max_rank + 1))
    return SplitType(tuple(rng.integers(low, high + 1, size=rank).tolist()))


def _random_balanced(rng: np.random.Generator, min_rank: int, max_rank: int) -> SplitType:
    rank = int(rng.integers(min_rank, max_rank + 1))
    return balanced_of(rank, int(rng.integers(-2 * rank, 3 * rank + 1)))


def _balanced_with_floor(rng: np.random.Generator, floor: int) -> SplitType:
    rank = int(rng.integers(1, 4))
    return balanced_of(rank, rank * floor + int(rng.integers(0, rank)))


def _window(split: SplitType) -> range:
    return range(-split.max_degree - 2, -split.min_degree + 3)


def check_rigidity(seeds: Sequence[int], field: ExactField) -> CheckResult:
    """Balanced iff :math:`h^1(\\mathrm{End}) = 0`, over every type of rank at most 5 with
    degrees in :math:`[-5, 5]`"""
    tally = _Tally("rigidity")
    for rank in range(1, 6):
        for degrees in itertools.combinations_with_replacement(range(5, -6, -1), rank):
            split = SplitType(degrees)
            tally.record(
                split.is_balanced == is_rigid(split),
                lambda split=split: f"{split}: balanced={split.is_balanced}",
            )
    return tally.result()


def check_modification(seeds: Sequence[int], field: ExactField, cases: int = 500) -> CheckResult:
    """General modifications against random modifications.

    Three in four cases spread the colength over distinct points; the rest put a corank
    :math:`c \\leq r` quotient at a single point.
    """
    tally = _Tally("modification")
    for seed in seeds:
        rng = np.random.default_rng(seed)
        for _ in range(cases):
            split = _random_split(rng, 4, -3, 3)
            direction = Direction.DOWN if rng.integers(2) == 0 else Direction.UP
            if rng.integers(4) == 0:
                colength = int(rng.integers(1, split.rank + 1))
                points = [ModificationPoint(1, colength, direction)]
                expected = point_modification(split, colength, direction)
            else:
                colength = int(rng.integers(1, 2 * split.rank + 1))
                points = [ModificationPoint(x, 1, direction) for x in range(1, colength + 1)]
                expected = general_modification(split, colength, direction)
            try:
                actual = modification_splitting(split, points, seed, field=field)
            except SplitlineError as e:
                actual = e
            tally.record(
                actual == expected,
                lambda s=split, p=len(points), c=colength, d=direction, a=actual, x=expected: (
                    f"{s} {d.value} {c} at {p} points: oracle {a}, rule {x}"
                ),
            )
    return tally.result()


def check_kernel(seeds: Sequence[int], field: ExactField, cases: int = 200) -> CheckResult:
    """Kernels of general surjections onto a line bundle"""
    tally = _Tally("kernel")
    for seed in seeds:
        rng = np.random.default_rng(seed)
        for _ in range(cases):
            split = _random_balanced(rng, 2, 4)
            m = balance_info(split).upper_degree + int(rng.integers(0, 4))
            expected = general_kernel(split, m)
            try:
                phi = general_morphism(split, SplitType((m,)), seed, field=field, surjective=True)
                actual = kernel_splitting(phi)
            except SplitlineError as e:
                actual = e
            tally.record(
                actual == expected,
                lambda s=split, m=m, a=actual, x=expected: f"{s} -> O({m}): oracle {a}, rule {x}",
            )
    return tally.result()


def check_extension(
    seeds: Sequence[int], field: ExactField, cases: int = 40, mismatched: int = 10
) -> CheckResult:
    """Random extensions of balanced bundles.

    With equal slope floors the extension splits balanced. With different floors nothing
    is claimed about balance, but the middle term has the rank and degree of the direct
    sum and no more sections in any twist.
    """
    tally = _Tally("extension")
    for seed in seeds:
        rng = np.random.default_rng(seed)
        for _ in range(cases):
            floor = int(rng.integers(-2, 3))
            sub, quotient = _balanced_with_floor(rng, floor), _balanced_with_floor(rng, floor)
            expected = balanced_extension(sub, quotient)
            actual = extension_splitting(sub, quotient, seed, field=field)
            tally.record(
                actual == expected and actual == sub.direct_sum(quotient),
                lambda s=sub, q=quotient, a=actual: f"0 -> {s} -> E -> {q} -> 0: oracle {a}",
            )

        for _ in range(mismatched):
            floor = int(rng.integers(-2, 3))
            offset = int(rng.choice([-3, -2, -1, 1, 2, 3]))
            sub = _balanced_with_floor(rng, floor)
            quotient = _balanced_with_floor(rng, floor + offset)
            split = sub.direct_sum(quotient)
            actual = extension_splitting(sub, quotient, seed, field=field)
            ok = (
                actual.rank == split.rank
                and actual.c1 == split.c1
                and all(h_split(actual, t)[0] <= h_split(split, t)[0] for t in _window(split))
            )
            tally.record(
                ok, lambda s=sub, q=quotient, a=actual: f"mismatched {s} by {q}: oracle {a}"
            )
    return tally.result()


def check_window(seeds: Sequence[int], field: ExactField, cases: int = 20) -> CheckResult:
    """Widening the :math:`h^0` window never changes a recovered splitting type"""
    tally = _Tally("window")
    for seed in seeds:
        rng = np.random.default_rng(seed)
        for _ in range(cases):
            margin = int(rng.integers(1, 5))

            split = _random_split(rng, 3, -3, 3)
            points = [ModificationPoint(x, 1, Direction.DOWN) for x in range(1, split.rank + 2)]
            narrow = modification_splitting(split, points, seed, field=field)
            wide = modification_splitting(split, points, seed, field=field, margin=margin)
            tally.record(narrow == wide, lambda s=split, m=margin: f"modification of {s} +{m}")

            source = _random_balanced(rng, 2, 3)
            target = SplitType((source.max_degree + int(rng.integers(0, 3)),))
            phi = general_morphism(source, target, seed, field=field, surjective=True)
            tally.record(
                kernel_splitting(phi) == kernel_splitting(phi, margin),
                lambda s=source, t=target, m=margin: f"kernel of {s} -> {t} +{m}",
            )

            sub, quotient = _random_split(rng, 2, -2, 2), _random_split(rng, 2, -2, 2)
            bundle = random_extension(sub, quotient, seed, field=field)
            tally.record(
                bundle.splitting() == bundle.splitting(margin),
                lambda s=sub, q=quotient, m=margin: f"extension of {q} by {s} +{m}",
            )
    return tally.result()


def check_duality(seeds: Sequence[int], field: ExactField) -> CheckResult:
    """Up modifications are dual to down modifications, and Serre duality of split types"""
    tally = _Tally("duality")
    for rank in range(1, 4):
        for degrees in itertools.combinations_with_replacement(range(3, -4, -1), rank):
            split = SplitType(degrees)
            for colength in range(1, 2 * rank + 1):
                up = general_modification(split, colength, Direction.UP)
                down = general_modification(split.dual(), colength, Direction.DOWN).dual()
                tally.record(up == down, lambda s=split, c=colength: f"{s} up {c}")
            for t in range(-4, 3):
                tally.record(
                    h_split(split, t)[1] == h_split(split.dual(), -t - 2)[0],
                    lambda s=split, t=t: f"h1({s}({t}))",
                )
    return tally.result()


def check_example_comb(seeds: Sequence[int], field: ExactField) -> CheckResult:
    r"""The endomorphism bundle of a comb with :math:`\mathcal{O} \oplus \mathcal{O}(-1)`
    teeth has :math:`\chi = 4` and :math:`h^0 \geq t`, so :math:`h^1 > 0` once
    :math:`t \geq 5`"""
    tally = _Tally("example_comb")
    for seed in seeds[:2]:
        for base in (SplitType((0, 0)), SplitType((2, 0))):
            for t in range(1, 7):
                comb = build_comb(base, [SplitType((0, -1))] * t)
                h = tree_cohomology(end_tree(tree_data_from_comb(comb, seed, field=field)))
                ok = h.chi == 4 and h.h0 >= t and (t < 5 or h.h1 >= 1)
                tally.record(ok, lambda b=base, t=t, h=h: f"base {b}, t={t}: {h}")
    return tally.result()


def check_comb_bound(seeds: Sequence[int], field: ExactField, cases: int = 100) -> CheckResult:
    """Smoothing predictions against the partition bound, and the two-summand estimate.

    Degree and order independence are checked for every comb, the bound with equality for
    balanced bases. Unbalanced bases may exceed the bound; those are counted and logged.
    """
    tally = _Tally("comb_bound")
    exceeded = 0
    for seed in seeds:
        rng = np.random.default_rng(seed)
        for _ in range(cases):
            base = _random_split(rng, 4, -3, 3)
            teeth = [
                [
                    balanced_of(base.rank, int(rng.integers(-2 * base.rank, base.rank + 1)))
                    for _ in range(int(rng.integers(1, 4)))
                ]
                for _ in range(int(rng.integers(0, 7)))
            ]
            comb = build_comb(base, teeth)
            result = smoothing_reduce(comb)
            reverse = smoothing_reduce(comb, order=comb.roots[::-1])
            exceeded += result.exceeds_bound
            ok = (
                result.predicted.c1 == base.c1 + comb.k
                and reverse.predicted == result.predicted
                and not (result.strict_bound and result.exceeds_bound)
                and (not base.is_balanced or partition_of(result.predicted) == result.bound)
            )
            tally.record(ok, lambda c=comb, r=result: f"{c.base.split} k={c.k}: {r.predicted}")

    for gap, t in itertools.product(range(9), range(1, 9)):
        predicted = smoothing_reduce(build_comb(SplitType((gap, 0)), [SplitType((0, -1))] * t))
        b1, b2 = predicted.predicted.degrees
        tally.record(b1 - b2 <= max(gap - t, 1), lambda g=gap, t=t: f"gap {g}, t={t}")

    logger.info("comb_bound: %d predictions from unbalanced bases exceed the bound", exceeded)
    return tally.result()


def check_pn(seeds: Sequence[int], field: ExactField, n_max: int = 7) -> CheckResult:
    """The assembled nodal unions of rational curves in :math:`\\mathbb{P}^n` are balanced"""
    tally = _Tally("pn")
    for n in range(2, n_max + 1):
        for e in range(n, 3 * n + 1):
            try:
                record = pn_pipeline(n, e)
                actual = record.predicted
                ok = actual == balanced_of(n - 1, e * (n + 1) - 2) and not record.notes
            except SplitlineError as err:
                actual, ok = err, False
            tally.record(ok, lambda n=n, e=e, a=actual: f"n={n}, e={e}: {a}")
    return tally.result()


def check_fan(
    seeds: Sequence[int],
    field: ExactField,
    n_max: int = 8,
    e_max: int = 60,
    oracle_n_max: int = 5,
    oracle_e_max: int = 10,
) -> CheckResult:
    """Fan assemblies for :math:`d = n`, and their stages against the oracle.

    For small cases the blowdown modification is recomputed at explicit points, and the
    :math:`h^0` of the explicit comb bundle is compared with the prediction in every twist.
    """
    tally = _Tally("fan")
    for n in range(4, n_max + 1):
        for e in range(n - 1, e_max + 1):
            try:
                record = fan_assembly_d_eq_n(n, e)
                ok = record.predicted == balanced_of(n - 2, e - 2)
            except SplitlineError:
                ok = False
            tally.record(ok, lambda n=n, e=e: f"n={n}, e={e}")

    seed = seeds[0]
    for n in range(4, oracle_n_max + 1):
        for e in range(n - 1, oracle_e_max + 1):
            record = fan_assembly_d_eq_n(n, e)
            a = record.parameters["a"]
            if a > 0:
                points = [ModificationPoint(x) for x in range(1, a + 1)]
                actual = modification_splitting(
                    record.stage("hyperplane_normal"), points, seed, field=field
                )
                tally.record(
                    actual == record.stage("blowdown_modification"),
                    lambda n=n, e=e, a=actual: f"n={n}, e={e}: oracle blowdown {a}",
                )

            comb = record.comb
            for t in _window(record.predicted):
                data = tree_data_from_comb(comb, seed, field=field, base_twist=t)
                h0 = tree_cohomology(data).h0
                tally.record(
                    h0 == h_split(record.predicted, t)[0],
                    lambda n=n, e=e, t=t, h0=h0: f"n={n}, e={e}: comb h0 {h0} in twist {t}",
                )
    return tally.result()


def check_restricted_cokernel(
    seeds: Sequence[int], field: ExactField, n_max: int = 7, e0_max: int = 5
) -> CheckResult:
    """The closed form of :math:`G|_{C_0}` against the dual of an explicit kernel"""
    tally = _Tally("restricted_cokernel")
    for seed in seeds[:2]:
        for n in range(4, n_max + 1):
            for d in range(3, n):
                for e0 in range(d - 1, e0_max + 1):
                    source = SplitType((0,) * (n - d + 1) + (-e0,))
                    target = SplitType(((d - 1) * e0,))
                    phi = general_morphism(source, target, seed, field=field, surjective=True)
                    actual = kernel_splitting(phi).dual()
                    expected = restricted_cokernel(n, d, e0)
                    tally.record(
                        actual == expected,
                        lambda n=n, d=d, e0=e0, a=actual, x=expected: (
                            f"n={n}, d={d}, e0={e0}: oracle {a}, closed form {x}"
                        ),
                    )
    return tally.result()


def check_fang(
    seeds: Sequence[int], field: ExactField, n_max: int = 8, e_max: int = 60
) -> CheckResult:
    """Fang assemblies succeed exactly at an accessibility witness with balanced
    :math:`G|_{C_0}`"""
    tally = _Tally("fang")
    for n in range(4, n_max + 1):
        for d in range(3, n):
            for e in range(d - 1, e_max + 1):
                found: list[int | str] = []
                for e0 in range(d - 1, e + 1):
                    try:
                        fang_assembly(n, d, e, e0)
                        found.append(e0)
                    except AccessibilityError:
                        pass
                    except SplitlineError as err:
                        found.append(f"{e0}: {err}")
                accessible, witness = is_accessible(n, d, e)
                certified = accessible and restricted_cokernel(n, d, witness).is_balanced
                expected = [witness] if certified else []
                tally.record(
                    found == expected,
                    lambda n=n, d=d, e=e, f=found, x=expected: (
                        f"n={n}, d={d}, e={e}: assembled at {f}, witness {x}"
                    ),
                )
    return tally.result()


def check_numerology(seeds: Sequence[int], field: ExactField) -> CheckResult:
    """Point counts and minimal degrees are inverse to each other"""
    tally = _Tally("numerology")
    for n in range(4, 9):
        for d in range(4, n + 1):
            for q in range(1, 31):
                tally.record(
                    q_max(n, d, e_min(n, d, q)) == q, lambda n=n, d=d, q=q: f"q={q} at {n},{d}"
                )
        for d in range(3, n + 1):
            for e in range(1, 101):
                q = q_max(n, d, e)
                if q < 1:
                    continue
                emin = e_min(n, d, q)
                tally.record(
                    emin <= e and (emin == e) == is_point_minimal(n, d, e),
                    lambda n=n, d=d, e=e: f"e={e} at {n},{d}",
                )
    return tally.result()


def check_field_independence(seeds: Sequence[int], field: ExactField) -> CheckResult:
    """The oracle gives the same answer over the given field and over the rationals"""
    tally = _Tally("field_independence")
    rationals = ExactField.rationals()
    for seed in seeds[:3]:
        rng = np.random.default_rng(seed)
        for _ in range(2):
            split = _random_split(rng, 3, -2, 2)
            points = [ModificationPoint(1, 1), ModificationPoint(2, 1, Direction.UP)]
            here = modification_splitting(split, points, seed, field=field)
            there = modification_splitting(split, points, seed, field=rationals)
            tally.record(here == there, lambda s=split, a=here, b=there: f"{s}: {a} vs {b}")
    return tally.result()


CHECKS: dict[str, Callable[..., CheckResult]] = {
    "rigidity": check_rigidity,
    "modification": check_modification,
    "kernel": check_kernel,
    "extension": check_extension,
    "window": check_window,
    "duality": check_duality,
    "example_comb": check_example_comb,
    "comb_bound": check_comb_bound,
    "pn": check_pn,
    "fan": check_fan,
    "restricted_cokernel": check_restricted_cokernel,
    "fang": check_fang,
    "numerology": check_numerology,
    "field_independence": check_field_independence,
}

# desk-scale sizes; the defaults of the checks are the acceptance sizes
QUICK_SIZES: dict[str, dict[str, int]] = {
    "modification": {"cases": 10},
    "kernel": {"cases": 5},
    "extension": {"cases": 5, "mismatched": 3},
    "window": {"cases": 2},
    "comb_bound": {"cases": 25},
    "pn": {"n_max": 6},
    "fan": {"n_max": 6, "e_max": 36, "oracle_e_max": 7},
    "restricted_cokernel": {"n_max": 6, "e0_max": 4},
    "fang": {"n_max": 6, "e_max": 30},
}


def run_suite(
    seeds: Iterable[int],
    field: ExactField | None = None,
    checks: Iterable[str] | None = None,
    quick: bool = False,
) -> list[CheckResult]:
    """Runs the cross-checks.

    Args:
        seeds: Seeds for the random cases

        field: Coefficient field of the oracle, the default prime field if omitted

        checks: Names from :data:`CHECKS` to run, all of them if omitted

        quick: Whether to use the reduced sizes of :data:`QUICK_SIZES` instead of the
            acceptance sizes

    Returns:
        One result per check, in the order requested

    Raises:
        InvalidInputError: if a check name is unknown
    """
    field = field or ExactField()
    seeds = list(seeds)
    if not seeds:
        raise InvalidInputError("Need at least one seed")
    names = list(CHECKS) if checks is None else list(checks)
    if unknown := [name for name in names if name not in CHECKS]:
        raise InvalidInputError(f"Unknown checks {unknown}, expected names from {list(CHECKS)}")

    results = []
    for name in names:
        sizes = QUICK_SIZES.get(name, {}) if quick else {}
        result = CHECKS[name](seeds, field, **sizes)
        log = logger.info if result.passed else logger.warning
        log("%s: %d cases, %d mismatches", name, result.cases, result.mismatches)
        results.append(result)
    return results
