# SPDX-FileCopyrightText: 2025 Battelle Memorial Institute
# SPDX-License-Identifier: BSD-2-Clause
import json

import pytest

from splitline.exceptions import AccessibilityError, InvalidInputError
from splitline.geometry import (
    Assumption,
    fan_assembly_d_eq_n,
    fang_assembly,
    restricted_cokernel,
)
from splitline.interp import is_accessible, q_max
from splitline.oracle import (
    ModificationPoint,
    general_morphism,
    kernel_splitting,
    modification_splitting,
)
from splitline.splitcalc import SplitType, balanced_of


def _check_witnesses(n, d, e_max):
    for e in range(1, e_max + 1):
        accessible, e0 = is_accessible(n, d, e)
        if not accessible:
            continue
        if not restricted_cokernel(n, d, e0).is_balanced:
            with pytest.raises(AccessibilityError, match="unbalanced"):
                fang_assembly(n, d, e, e0)
            continue
        record = fang_assembly(n, d, e, e0)
        assert record.predicted == balanced_of(n - 2, e * (n + 1 - d) - 2)


@pytest.mark.unit
class TestFanAssembly:
    @pytest.mark.parametrize(
        "n, e, e1, a, teeth, predicted",
        [
            (5, 20, 4, 0, 16, (6, 6, 6)),
            (4, 3, 3, 9, 0, (1, 0)),
            (4, 12, 3, 0, 9, (5, 5)),
            (4, 10, 3, 2, 7, (4, 4)),
        ],
    )
    def test_parameters(self, n, e, e1, a, teeth, predicted):
        record = fan_assembly_d_eq_n(n, e)
        assert record.parameters["e1"] == e1
        assert record.parameters["a"] == a
        assert record.parameters["teeth"] == teeth
        assert record.predicted == SplitType(predicted)

    @pytest.mark.parametrize("n", range(4, 7))
    def test_sweep(self, n):
        for e in range(n - 1, n * n + 1):
            record = fan_assembly_d_eq_n(n, e)
            assert record.predicted == balanced_of(n - 2, e - 2)
            assert record.parameters["q_max"] == q_max(n, n, e)

    def test_case_two_assumptions(self):
        record = fan_assembly_d_eq_n(5, 10)
        assert record.parameters["case"] == 2
        assert Assumption.RATHMANN_VANISHING in record.assumptions
        assert record.notes

    def test_case_one(self):
        record = fan_assembly_d_eq_n(5, 17)
        assert record.parameters["case"] == 1
        assert record.assumptions == (Assumption.TRANSVERSE_UPPER_SUBSPACES,)

    @pytest.mark.parametrize("n, e", [(3, 5), (5, 3)])
    def test_out_of_range(self, n, e):
        with pytest.raises(InvalidInputError, match="Need"):
            fan_assembly_d_eq_n(n, e)


@pytest.mark.unit
class TestFangAssembly:
    def test_stages(self):
        record = fang_assembly(4, 3, 5, 2)
        assert record.stage("restricted_cokernel") == SplitType((3, 3))
        assert record.stage("kernel") == SplitType((1,))
        assert record.stage("vertical") == SplitType((4,))
        assert record.stage("base_normal") == SplitType((4,))
        assert record.stage("curve_normal") == SplitType((4, 4))
        assert record.parameters["teeth"] == 3
        assert record.predicted == SplitType((4, 4))

    def test_slope_floors_differ(self):
        with pytest.raises(AccessibilityError, match="Slope floors differ"):
            fang_assembly(4, 3, 4, 2)

    def test_no_surjection(self):
        with pytest.raises(AccessibilityError, match="No surjection"):
            fang_assembly(6, 5, 5, 4)

    @pytest.mark.parametrize(
        "n, d, e, e0", [(4, 4, 5, 3), (5, 2, 5, 2), (4, 3, 5, 1), (4, 3, 5, 6)]
    )
    def test_out_of_range(self, n, d, e, e0):
        with pytest.raises(InvalidInputError, match="Need"):
            fang_assembly(n, d, e, e0)

    @pytest.mark.parametrize("n, d", [(n, d) for n in range(4, 7) for d in range(3, n)])
    def test_witnesses_assemble(self, n, d):
        _check_witnesses(n, d, 30)

    @pytest.mark.parametrize("e", [11, 14, 29])
    def test_unbalanced_restricted_cokernel(self, e):
        accessible, e0 = is_accessible(6, 3, e)
        assert accessible and e0 >= 4
        with pytest.raises(AccessibilityError, match="Restricted cokernel .* is unbalanced"):
            fang_assembly(6, 3, e, e0)

    def test_vertical_from_unbalanced_shape(self):
        record = fang_assembly(6, 3, 8, 3)
        assert record.stage("restricted_cokernel") == SplitType((3, 2, 2, 2))
        assert record.stage("kernel") == SplitType((1, 0, 0))
        assert record.stage("vertical") == SplitType((8, 8, 7))
        assert record.stage("base_normal") == SplitType((7,))
        assert record.stage("curve_normal") == SplitType((8, 8, 7, 7))


@pytest.mark.unit
class TestRestrictedCokernel:
    @pytest.mark.parametrize(
        "n, d, e0, expected",
        [
            ((4, 3, 2, (3, 3))),
            ((6, 3, 3, (3, 2, 2, 2))),
            ((6, 3, 4, (4, 3, 3, 2))),
            ((7, 3, 4, (4, 2, 2, 2, 2))),
            ((5, 4, 3, (6, 6))),
        ],
    )
    def test_values(self, n, d, e0, expected):
        assert restricted_cokernel(n, d, e0) == SplitType(expected)

    @pytest.mark.parametrize("n, d", [(n, d) for n in range(4, 9) for d in range(3, n)])
    def test_rank_degree_and_balance_criterion(self, n, d):
        for e0 in range(1, 13):
            cokernel = restricted_cokernel(n, d, e0)
            assert cokernel.rank == n - d + 1
            assert cokernel.c1 == d * e0
            assert cokernel.is_balanced == ((n - d) * (e0 - 1) <= (d - 1) * e0)

    @pytest.mark.oracle
    @pytest.mark.parametrize(
        "n, d, e0", [(4, 3, 2), (5, 3, 3), (6, 3, 3), (6, 3, 4), (7, 3, 4), (6, 4, 3)]
    )
    def test_matches_kernel_of_general_forms(self, n, d, e0, prime_field, seed):
        source = SplitType((0,) * (n - d + 1) + (-e0,))
        target = SplitType(((d - 1) * e0,))
        phi = general_morphism(source, target, seed, field=prime_field, surjective=True)
        assert kernel_splitting(phi).dual() == restricted_cokernel(n, d, e0)

    @pytest.mark.parametrize("n, d, e0", [(4, 4, 2), (5, 2, 2), (5, 3, 0)])
    def test_out_of_range(self, n, d, e0):
        with pytest.raises(InvalidInputError, match="Need"):
            restricted_cokernel(n, d, e0)


@pytest.mark.slow
class TestAssemblySweeps:
    @pytest.mark.parametrize("n", range(4, 9))
    def test_fan(self, n):
        for e in range(n - 1, 61):
            assert fan_assembly_d_eq_n(n, e).predicted == balanced_of(n - 2, e - 2)

    @pytest.mark.oracle
    @pytest.mark.parametrize("n, e", [(4, 3), (4, 7), (4, 10), (5, 6), (5, 12)])
    def test_fan_blowdown_against_oracle(self, n, e, prime_field):
        record = fan_assembly_d_eq_n(n, e)
        points = [ModificationPoint(x) for x in range(1, record.parameters["a"] + 1)]
        curve = record.stage("hyperplane_normal")
        actual = modification_splitting(curve, points, field=prime_field)
        assert actual == record.stage("blowdown_modification")

    @pytest.mark.parametrize("n, d", [(n, d) for n in range(4, 9) for d in range(3, n)])
    def test_fang_witnesses(self, n, d):
        _check_witnesses(n, d, 60)

    @pytest.mark.parametrize("n, d", [(n, d) for n in range(4, 9) for d in range(3, n)])
    def test_fang_only_at_witness(self, n, d):
        for e in range(d - 1, 61):
            _, witness = is_accessible(n, d, e)
            for e0 in range(d - 1, e + 1):
                if e0 == witness:
                    continue
                with pytest.raises(AccessibilityError):
                    fang_assembly(n, d, e, e0)


@pytest.mark.unit
class TestPipelineRecord:
    def test_unknown_stage(self):
        with pytest.raises(InvalidInputError, match="No stage 'kernel'"):
            fan_assembly_d_eq_n(4, 12).stage("kernel")

    def test_to_dict(self):
        payload = fang_assembly(4, 3, 5, 2).to_dict()
        assert payload["kind"] == "fang"
        assert payload["predicted"] == [4, 4]
        assert payload["balanced"] is True
        assert payload["comb"] == {"base": [4, 4], "teeth": 3, "k": 0}
        assert payload["assumptions"] == [
            "restricted_forms_general",
            "transverse_upper_subspaces",
        ]
        assert json.loads(json.dumps(payload)) == payload

    def test_parameters_are_read_only(self):
        record = fan_assembly_d_eq_n(4, 12)
        with pytest.raises(TypeError):
            record.parameters["e1"] = 7
        assert record.parameters["e1"] == 3
