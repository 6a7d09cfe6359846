# SPDX-FileCopyrightText: 2025 Battelle Memorial Institute
# SPDX-License-Identifier: BSD-2-Clause
import pytest
from hypothesis import given
from hypothesis import strategies as st

from splitline.exceptions import InvalidInputError
from splitline.oracle import h0_window, splitting_from_h0_function, splitting_from_h0_profile
from splitline.splitcalc import SplitType, h_split, make_split

splits = st.lists(st.integers(-6, 6), min_size=1, max_size=5).map(make_split)


@pytest.mark.unit
class TestH0Window:
    def test_window(self):
        assert h0_window(1, -1) == range(-3, 4)
        assert h0_window(3, 3, margin=2) == range(-7, 2)

    def test_empty_range(self):
        with pytest.raises(InvalidInputError, match="Empty degree range"):
            h0_window(0, 1)


@pytest.mark.unit
class TestSplittingFromProfile:
    def test_twice_o3(self):
        profile = {t: 2 * max(0, t + 4) for t in range(-5, 1)}
        assert splitting_from_h0_profile(profile).degrees == (3, 3)

    def test_mixed(self):
        profile = {t: max(0, t + 2) + max(0, t) for t in range(-4, 4)}
        assert splitting_from_h0_profile(profile).degrees == (1, -1)

    @given(splits)
    def test_inverts_h_split(self, split):
        recovered = splitting_from_h0_function(
            lambda t: h_split(split, t)[0], split.rank, split.max_degree, split.min_degree
        )
        assert recovered == split

    @pytest.mark.parametrize(
        "profile, match",
        [
            ({0: 0, 1: 1}, "at least three"),
            ({0: 0, 1: 1, 3: 3}, "consecutive"),
            ({0: 1, 1: 2, 2: 3}, "vanishes"),
            ({-1: 0, 0: 2, 1: 3}, "not convex"),
            ({-1: 0, 0: 1, 1: 3}, "not linear"),
        ],
    )
    def test_inconsistent(self, profile, match):
        with pytest.raises(InvalidInputError, match=match):
            splitting_from_h0_profile(profile)

    def test_rank_mismatch(self):
        profile = {t: max(0, t + 1) for t in range(-2, 2)}
        with pytest.raises(InvalidInputError, match="widen the window"):
            splitting_from_h0_profile(profile, rank=2)

    def test_rank_given(self):
        profile = {t: h_split(SplitType((2, 0)), t)[0] for t in range(-4, 3)}
        assert splitting_from_h0_profile(profile, rank=2).degrees == (2, 0)
