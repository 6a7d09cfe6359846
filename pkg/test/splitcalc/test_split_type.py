# SPDX-FileCopyrightText: 2025 Battelle Memorial Institute
# SPDX-License-Identifier: BSD-2-Clause
import itertools
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from splitline.exceptions import InvalidInputError, PreconditionError
from splitline.splitcalc import (
    SplitType,
    balance_info,
    balanced_of,
    end_bundle,
    h1_vanishing_threshold,
    h_split,
    is_rigid,
    make_split,
    upper_subbundle,
)

splits = st.lists(st.integers(-5, 5), min_size=1, max_size=5).map(make_split)


@pytest.mark.unit
class TestMakeSplit:
    @pytest.mark.parametrize(
        "degrees, expected, c1",
        [([0, 1, 1], (1, 1, 0), 2), ([5, 5], (5, 5), 10), ([-1, 0, 0], (0, 0, -1), -1)],
    )
    def test_sorted(self, degrees, expected, c1):
        split = make_split(degrees)
        assert split.degrees == expected
        assert split.rank == len(degrees)
        assert split.c1 == c1

    def test_empty(self):
        with pytest.raises(InvalidInputError, match="at least one summand"):
            make_split([])

    def test_non_integer(self):
        with pytest.raises(InvalidInputError, match="must be integers"):
            make_split([1.5, 0])

    @given(splits)
    def test_idempotent(self, split):
        assert make_split(split.degrees) == split
        assert make_split(reversed(split.degrees)) == split

    def test_str(self):
        assert str(make_split([0, -1, 3])) == "(3,0,-1)"


@pytest.mark.unit
class TestSplitTypeOperations:
    def test_dual_and_twist(self):
        split = SplitType((2, 0, -1))
        assert split.dual().degrees == (1, 0, -2)
        assert split.twist(3).degrees == (5, 3, 2)
        assert split.direct_sum(SplitType((1,))).degrees == (2, 1, 0, -1)

    def test_slope(self):
        split = SplitType((2, 1, 1))
        assert split.slope == Fraction(4, 3)
        assert split.slope_floor == 1
        assert SplitType((-1, -2)).slope_floor == -2


@pytest.mark.unit
class TestBalancedOf:
    @pytest.mark.parametrize(
        "rank, degree, expected",
        [(3, 18, (6, 6, 6)), (3, 23, (8, 8, 7)), (2, -5, (-2, -3)), (1, 4, (4,))],
    )
    def test_values(self, rank, degree, expected):
        assert balanced_of(rank, degree).degrees == expected

    @given(st.integers(1, 8), st.integers(-30, 30))
    def test_balanced(self, rank, degree):
        split = balanced_of(rank, degree)
        assert split.is_balanced
        assert (split.rank, split.c1) == (rank, degree)

    def test_rank_zero(self):
        with pytest.raises(InvalidInputError, match="at least 1"):
            balanced_of(0, 3)


@pytest.mark.unit
class TestBalanceInfo:
    @pytest.mark.parametrize(
        "degrees, expected",
        [
            ((6, 6, 6), (True, 3, 6, 6)),
            ((1, 0, 0), (True, 1, 1, 0)),
            ((2, 0), (False, 1, 2, 1)),
        ],
    )
    def test_values(self, degrees, expected):
        assert tuple(balance_info(SplitType(degrees))) == expected

    @given(splits)
    def test_upper_rank_full_iff_twist_of_trivial(self, split):
        info = balance_info(split)
        assert (info.upper_rank == split.rank) == (len(set(split.degrees)) == 1)

    def test_upper_subbundle(self):
        assert upper_subbundle(SplitType((3, 3, 2))).degrees == (3, 3)
        with pytest.raises(PreconditionError, match="balanced"):
            upper_subbundle(SplitType((2, 0)))


@pytest.mark.unit
class TestCohomology:
    @pytest.mark.parametrize(
        "degrees, t, expected",
        [((5, 5), 0, (12, 0)), ((-2, -3), 0, (0, 3)), ((0, 0), -1, (0, 0)), ((1, -3), 0, (2, 2))],
    )
    def test_values(self, degrees, t, expected):
        assert h_split(SplitType(degrees), t) == expected

    @given(splits, st.integers(-8, 8))
    def test_euler_characteristic(self, split, t):
        h0, h1 = h_split(split, t)
        assert h0 - h1 == split.c1 + split.rank * (t + 1)

    @given(st.integers(1, 6), st.integers(-20, 20))
    def test_vanishing_threshold(self, rank, degree):
        split = balanced_of(rank, degree)
        t = h1_vanishing_threshold(split)
        assert t == degree // rank + 1
        assert h_split(split, -t)[1] == 0
        assert h_split(split, -t - 1)[1] > 0

    def test_vanishing_threshold_unbalanced(self):
        with pytest.raises(PreconditionError, match="balanced"):
            h1_vanishing_threshold(SplitType((3, 0)))


@pytest.mark.unit
class TestEndBundle:
    def test_pairwise_differences(self):
        assert sorted(end_bundle(SplitType((1, 1, 0))).degrees) == [-1, -1, 0, 0, 0, 0, 0, 1, 1]
        assert end_bundle(SplitType((4, 4))).degrees == (0,) * 4

    def test_unbalanced(self):
        end = end_bundle(SplitType((2, 0)))
        assert end.degrees == (2, 0, 0, -2)
        assert h_split(end, 0)[1] == 1

    @pytest.mark.slow
    def test_rigidity_exhaustive(self):
        for rank in range(1, 6):
            for degrees in itertools.combinations_with_replacement(range(-5, 6), rank):
                split = SplitType(degrees)
                assert split.is_balanced == is_rigid(split), split

    @given(splits)
    def test_rigidity(self, split):
        assert balance_info(split).balanced == is_rigid(split)
