# SPDX-FileCopyrightText: 2025 Battelle Memorial Institute
# SPDX-License-Identifier: BSD-2-Clause
import pytest

from splitline.exceptions import InvalidInputError
from splitline.verify import CHECKS, QUICK_SIZES, CheckResult, run_suite

FAST_CHECKS = ["rigidity", "duality", "numerology", "pn", "fan", "fang", "restricted_cokernel"]
RANDOM_CHECKS = ["modification", "kernel", "extension", "window", "comb_bound"]


@pytest.mark.unit
class TestCheckResult:
    def test_passed(self):
        assert CheckResult("x", 3, 0).passed
        assert not CheckResult("x", 3, 1, ("case",)).passed

    def test_to_dict(self):
        assert CheckResult("x", 3, 1, ("case",)).to_dict() == {
            "name": "x",
            "cases": 3,
            "mismatches": 1,
            "passed": False,
            "failures": ["case"],
        }


@pytest.mark.unit
class TestRunSuite:
    def test_no_seeds(self):
        with pytest.raises(InvalidInputError, match="at least one seed"):
            run_suite([])

    def test_unknown_check(self):
        with pytest.raises(InvalidInputError, match=r"Unknown checks \['bogus'\]"):
            run_suite([0], checks=["duality", "bogus"])

    def test_order(self):
        names = ["numerology", "duality"]
        assert [r.name for r in run_suite([0], checks=names)] == names

    def test_quick_sizes_name_checks(self):
        assert set(QUICK_SIZES) <= set(CHECKS)

    @pytest.mark.parametrize("name", FAST_CHECKS)
    def test_deterministic_checks(self, name):
        (result,) = run_suite([0], checks=[name], quick=True)
        assert result.cases > 0
        assert result.passed, result.failures

    @pytest.mark.parametrize("name", [*RANDOM_CHECKS, "field_independence"])
    def test_random_checks(self, name, prime_field):
        (result,) = run_suite([0, 1], prime_field, [name], quick=True)
        assert result.cases > 0
        assert result.passed, result.failures

    def test_quick_is_smaller(self):
        (quick,) = run_suite([0], checks=["comb_bound"], quick=True)
        (full,) = run_suite([0], checks=["comb_bound"])
        assert quick.cases < full.cases

    def test_reproducible(self):
        checks = ["comb_bound", "modification"]
        first = run_suite([3, 4], checks=checks, quick=True)
        assert run_suite([3, 4], checks=checks, quick=True) == first


@pytest.mark.slow
class TestAcceptanceScale:
    @pytest.mark.parametrize(
        "name, per_seed",
        [("modification", 500), ("kernel", 200), ("extension", 50), ("comb_bound", 100)],
    )
    def test_sample_sizes(self, name, per_seed, prime_field):
        (result,) = run_suite(range(5), prime_field, [name])
        assert result.cases >= 5 * per_seed
        assert result.passed, result.failures

    def test_mismatched_floor_extensions(self, prime_field):
        # 10 of the 50 extensions per seed have different slope floors
        (result,) = run_suite(range(5), prime_field, ["extension"])
        assert result.cases == 5 * (40 + 10)
        assert result.passed, result.failures

    @pytest.mark.parametrize("name", ["window", "fan", "fang", "restricted_cokernel", "pn"])
    def test_sweeps(self, name, prime_field):
        (result,) = run_suite(range(3), prime_field, [name])
        assert result.passed, result.failures

    def test_example_comb(self, prime_field):
        (result,) = run_suite([5], prime_field, ["example_comb"])
        assert result.cases == 12
        assert result.passed, result.failures

    def test_full_suite(self):
        results = run_suite(range(3))
        assert [r.name for r in results] == list(CHECKS)
        assert all(r.passed for r in results)
