# SPDX-FileCopyrightText: 2025 Battelle Memorial Institute
# SPDX-License-Identifier: BSD-2-Clause
import pytest

from splitline.exceptions import GenericityError, InvalidInputError, PreconditionError
from splitline.oracle import PolyMorphism, general_morphism, kernel_splitting
from splitline.splitcalc import SplitType, general_kernel


@pytest.mark.unit
class TestPolyMorphism:
    def test_shape(self):
        with pytest.raises(InvalidInputError, match="Expected 1 rows"):
            PolyMorphism(SplitType((1,)), SplitType((2,)), ((1,), (1,)))

    def test_row_length(self):
        with pytest.raises(InvalidInputError, match="Expected 2 entries"):
            PolyMorphism(SplitType((1, 1)), SplitType((2,)), (((1,),),))

    def test_entry_degree(self):
        with pytest.raises(InvalidInputError, match="exceeds degree 1"):
            PolyMorphism(SplitType((1,)), SplitType((2,)), (((1, 2, 3),),))

    def test_zero(self):
        phi = PolyMorphism(SplitType((0,)), SplitType((1,)), (((0, 0),),))
        assert phi.is_zero


@pytest.mark.unit
class TestGeneralMorphism:
    def test_entry_degrees(self):
        phi = general_morphism(SplitType((1, 0)), SplitType((2,)), seed=4)
        assert [len(poly) for poly in phi.entries[0]] == [2, 3]
        assert not phi.is_zero

    def test_reproducible(self):
        source, target = SplitType((1, 1, 0)), SplitType((3,))
        assert general_morphism(source, target, 9).entries == general_morphism(
            source, target, 9
        ).entries

    def test_no_morphism(self):
        with pytest.raises(GenericityError, match="No nonzero morphism"):
            general_morphism(SplitType((0, 0)), SplitType((-1,)))

    def test_rank_too_small(self):
        with pytest.raises(GenericityError, match="rank too small"):
            general_morphism(SplitType((1,)), SplitType((1, 1)), surjective=True)

    def test_surjective(self):
        phi = general_morphism(SplitType((1, 1)), SplitType((2,)), surjective=True)
        assert phi.corank_at(phi.surjectivity_twist()) == 0


@pytest.mark.unit
class TestKernelSplitting:
    @pytest.mark.parametrize(
        "source, m",
        [((1, 1), 2), ((1, 1, 0), 2), ((2, 2, 2), 3), ((3, 3, 3, 3), 4), ((1, 1, 1), 5)],
    )
    def test_matches_general_kernel(self, source, m, seed):
        split = SplitType(source)
        phi = general_morphism(split, SplitType((m,)), seed, surjective=True)
        assert kernel_splitting(phi) == general_kernel(split, m)

    def test_not_surjective(self):
        # both entries vanish at infinity
        phi = PolyMorphism(SplitType((1, 1)), SplitType((2,)), (((1, 0), (2, 0)),))
        with pytest.raises(PreconditionError, match="not surjective"):
            kernel_splitting(phi)

    def test_rank_zero_kernel(self):
        phi = PolyMorphism(SplitType((1,)), SplitType((1,)), (((1,),),))
        with pytest.raises(InvalidInputError, match="has rank 0"):
            kernel_splitting(phi)

    @pytest.mark.parametrize("margin", [1, 4])
    def test_wider_window_agrees(self, margin, seed):
        phi = general_morphism(SplitType((2, 0, -1)), SplitType((3,)), seed, surjective=True)
        assert kernel_splitting(phi, margin) == kernel_splitting(phi)
