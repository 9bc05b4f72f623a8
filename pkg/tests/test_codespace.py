"""Imperative allocator: splitting, batch allocation, invariant reports."""

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from omegalib.bits import prefix_free
from omegalib.codespace import (AllocatorState, allocate, allocate_all,
                                check_invariants, extend_prefix,
                                new_allocator, parse_request_lines,
                                pool_measure)
from omegalib.errors import InsufficientMass, TargetTooShort
from omegalib.exact import Dyadic, measure_of_lengths


class TestExtendPrefix:
    def test_reference_split(self):
        assert extend_prefix("001", 5) == ["00100", "00101", "0011"]

    def test_zero_depth(self):
        assert extend_prefix("001", 3) == ["001"]

    def test_from_empty_word(self):
        assert extend_prefix("", 2) == ["00", "01", "1"]

    def test_target_too_short(self):
        with pytest.raises(TargetTooShort):
            extend_prefix("001", 2)

    @given(st.integers(min_value=0, max_value=10))
    def test_split_is_a_partition(self, depth):
        words = extend_prefix("01", 2 + depth)
        assert prefix_free(words)
        assert pool_measure(words) == pool_measure(["01"])


class TestAllocate:
    def test_first_allocation(self):
        state = new_allocator()
        assert state.free == [""]
        assert allocate(state, 2) == "00"
        assert state.free == ["01", "1"]
        assert state.mass_allocated == Fraction(1, 4)

    def test_second_allocation(self):
        state = new_allocator()
        allocate(state, 2)
        assert allocate(state, 3) == "010"
        assert state.free == ["011", "1"]

    def test_zero_length_takes_everything(self):
        state = new_allocator()
        assert allocate(state, 0) == ""
        assert state.free == []
        assert state.mass_allocated == 1
        with pytest.raises(InsufficientMass):
            allocate(state, 5)

    def test_rejects_negative_length(self):
        with pytest.raises(ValueError):
            allocate(new_allocator(), -1)


class TestAllocateAll:
    def test_reference_run(self):
        table = allocate_all([(2, "0"), (3, "1"), (4, "")])
        assert [w for w, _ in table] == ["00", "010", "0110"]
        assert [y for _, y in table] == ["0", "1", ""]

    def test_empty_batch(self):
        assert allocate_all([]) == []

    def test_mass_exhaustion_reports_index(self):
        with pytest.raises(InsufficientMass) as info:
            allocate_all([(1, ""), (1, ""), (1, "")])
        assert info.value.index == 2
        assert info.value.length == 1

    def test_boundary_full_mass_succeeds(self):
        table = allocate_all([(1, ""), (2, ""), (2, "")])
        assert measure_of_lengths(len(w) for w, _ in table) == 1

    def test_prefix_stability_under_extension(self):
        first = allocate_all([(3, ""), (1, ""), (4, "")])
        extended = allocate_all([(3, ""), (1, ""), (4, ""), (4, ""), (5, "")])
        assert extended[:3] == first


class TestCheckInvariants:
    def test_fresh_state_passes(self):
        report = check_invariants(new_allocator())
        assert report.ok
        assert report.remaining_requests_fit is None

    def test_remaining_requests_checked_when_supplied(self):
        state = new_allocator()
        allocate(state, 2)
        fits = check_invariants(state, remaining_lengths=[1, 2])
        assert fits.ok and fits.remaining_requests_fit is True
        too_much = check_invariants(state, remaining_lengths=[1, 1])
        assert too_much.remaining_requests_fit is False
        assert not too_much.ok
        assert too_much.failures() == ["remaining_requests_fit"]

    def test_hand_built_overlapping_pool_fails(self):
        state = AllocatorState(free=["0", "01"], allocated=[],
                               mass_allocated=Dyadic(0))
        report = check_invariants(state)
        assert not report.union_prefix_free
        assert not report.ok

    def test_wrong_ledger_detected(self):
        state = new_allocator()
        allocate(state, 3)
        state.mass_allocated = Dyadic(1, 2)
        assert not check_invariants(state).mass_matches_ledger

    def test_invariants_hold_along_a_run(self):
        lengths = [3, 1, 4, 4, 5, 6, 6, 3]
        state = new_allocator()
        for i, n in enumerate(lengths):
            allocate(state, n)
            report = check_invariants(state, remaining_lengths=lengths[i + 1:])
            assert report.ok, report.failures()


class TestRequestParsing:
    def test_round_trip(self):
        lines = ["2\t01", "3\t-", "", "0\t1"]
        assert parse_request_lines(lines) == [(2, "01"), (3, ""), (0, "1")]

    def test_rejects_malformed(self):
        with pytest.raises(ValueError):
            parse_request_lines(["2 01"])
        with pytest.raises(ValueError):
            parse_request_lines(["-1\t0"])
        with pytest.raises(ValueError):
            parse_request_lines(["2\t012"])
