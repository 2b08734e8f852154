# -*- coding: utf-8 -*-
"""inner 거리 MD-Homology 테스트"""
import pytest
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from src.errors import DomainError, InputError, PreconditionError
from src.exponents import Exponent, profile_eval, profile_from_cases
from src.holder_complex import HolderComplex, link_betti, simplify
from src.inner_homology import (apply_A_b, apply_B_b, b_reduce, cut_edges, inner_profile,
                                is_b_reduced, mdh_inner)
from src.quotient import QuotientInput, quotient_rank
from tests.strategies import LABELS, complexes


class TestContractions:
    """A_b, B_b"""

    def test_cut_edges_ignore_parallel_edges(self, theta):
        """평행 간선은 cut edge가 아니다"""
        assert cut_edges(theta) == []
        c = HolderComplex.from_edges([("a", "b", 1), ("b", "c", 2), ("b", "c", 2)])
        assert [e.key for e in cut_edges(c)] == ["e1"]

    def test_A_b_contracts_low_cut_edge(self):
        """라벨 ≤ b인 cut edge를 축약"""
        c = HolderComplex.from_edges([("a", "b", 1), ("b", "c", 2), ("b", "c", 2)])
        out = apply_A_b(c, "e1", 2)
        assert len(out.vertices) == 2
        assert len(out.edges) == 2

    def test_A_b_needs_low_label(self):
        """라벨 > b면 A_b 불가"""
        c = HolderComplex.from_edges([("a", "b", 3), ("b", "c", 2), ("b", "c", 2)])
        with pytest.raises(PreconditionError):
            apply_A_b(c, "e1", 2)

    def test_A_b_needs_cut_edge(self, theta):
        """cut edge가 아니면 A_b 불가"""
        with pytest.raises(PreconditionError):
            apply_A_b(theta, "e1", 2)

    def test_B_b_doubles_low_edges(self, theta):
        """라벨 > b 간선의 양 끝을 합친다"""
        out = apply_B_b(theta, "a", "b", 2)
        assert sorted(out.vertices) == ["w1", "w1_1"]
        assert len(out.edges) == 2
        assert link_betti(out) == (1, 1)

    def test_B_b_needs_high_edge(self, single_edge):
        """라벨 > b 간선이 있어야 한다"""
        with pytest.raises(PreconditionError):
            apply_B_b(single_edge, "a", "b", 2)


class TestReduction:
    def test_b_reduce_reaches_fixed_point(self, theta):
        """더 적용할 축약이 없을 때까지"""
        reduced, trace = b_reduce(theta, 2)
        assert is_b_reduced(reduced, 2)
        assert [s.operation for s in trace.steps] == ["B_b"]
        records = trace.to_records()
        assert records[0]["site"] == ["a", "b"]
        assert records[0]["complex"] == reduced.to_mapping()

    def test_reduced_complex_needs_no_steps(self, theta):
        """이미 b-reduced면 trace가 비어 있다"""
        _, trace = b_reduce(theta, 7)
        assert trace.steps == []


class TestMdhInner:
    """rank와 프로파일"""

    def test_single_edge_is_contractible(self, single_edge):
        """간선 하나는 rank 0"""
        assert mdh_inner(single_edge, "7/2") == 0
        assert mdh_inner(single_edge, 1) == 0
        assert inner_profile(single_edge) == profile_from_cases([(1, "inf", 0)])

    def test_theta_profile(self, theta):
        """theta: [1, 5) 1, [5, ∞] 2"""
        expected = profile_from_cases([(1, 5, 1), (5, "inf", 2)])
        assert inner_profile(theta) == expected
        assert mdh_inner(theta, "inf") == 2

    def test_cycle_profile(self):
        """순환 하나의 프로파일"""
        c = HolderComplex.from_edges([("v1", "v2", 2), ("v2", "v3", 3), ("v3", "v4", "5/2"),
                                      ("v4", "v1", 4)])
        p = inner_profile(c)
        assert p == profile_from_cases([(1, 2, 0), (2, "inf", 1)])
        assert p.jumping_rates == (Exponent(2),)

    def test_degree_zero_and_higher(self, theta):
        """차수 0은 성분 수, 2 이상은 0"""
        assert mdh_inner(theta, 2, degree=0) == 1
        assert mdh_inner(theta, 2, degree=2) == 0
        assert inner_profile(theta, degree=0) == profile_from_cases([(1, "inf", 1)])

    def test_bad_arguments(self, theta):
        """음수 차수"""
        with pytest.raises(DomainError):
            mdh_inner(theta, 2, degree=-1)
        with pytest.raises(DomainError):
            mdh_inner(theta, "1/2")

    def test_invalid_complex(self):
        """잘못된 complex는 계산하지 않는다"""
        c = HolderComplex.from_edges([("a", "a", 2)])
        with pytest.raises(InputError, match="loop"):
            mdh_inner(c, 2)


@pytest.mark.property
class TestAgainstOracle:
    """inner rank와 quotient oracle의 일치"""

    @settings(max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])
    @given(c=complexes(), b=st.sampled_from(LABELS + ["inf"]))
    def test_rank_matches_oracle(self, c, b):
        """축약 rank = oracle rank"""
        oracle = quotient_rank(QuotientInput.from_complex(c), b)
        assert mdh_inner(c, b) == oracle.rank

    @settings(max_examples=40, deadline=None)
    @given(c=complexes())
    def test_simplify_preserves_profile(self, c):
        """단순화해도 프로파일은 같다"""
        assert inner_profile(simplify(c)) == inner_profile(c)

    @settings(max_examples=40, deadline=None)
    @given(c=complexes(), b=st.sampled_from(LABELS))
    def test_profile_agrees_with_pointwise_rank(self, c, b):
        """프로파일 값 = 그 점에서의 rank"""
        assert profile_eval(inner_profile(c), b) == mdh_inner(c, b)
