# -*- coding: utf-8 -*-
"""quotient oracle 테스트"""
import pytest

from src.errors import InputError
from src.exponents import INF, Exponent
from src.quotient import QuotientInput, check_ultrametric, quotient_rank


def edges(*items):
    return tuple((u, v, Exponent(s)) for u, v, s in items)


class TestQuotientRank:
    def test_high_edges_collapse(self, theta):
        """라벨 > b 간선은 양 끝을 합친다"""
        result = quotient_rank(QuotientInput.from_complex(theta), 2)
        assert result.rank == 1
        assert result.components == 1
        assert result.classes == {"a": "a", "b": "a"}

    def test_nothing_collapses_at_infinity(self, theta):
        """b = ∞면 아무것도 합치지 않는다"""
        assert quotient_rank(QuotientInput.from_complex(theta), INF).rank == 2

    def test_merges_create_loops(self):
        """merge 쌍이 루프를 만든다"""
        q = QuotientInput(("a", "b", "c"), edges(("a", "b", 1), ("b", "c", 1)), merges=(("a", "c"),))
        assert quotient_rank(q, 1).rank == 1

    def test_parallel_identification(self):
        """평행 간선을 하나로 볼 때"""
        q = QuotientInput(("a", "b", "c", "d"), edges(("a", "b", 1), ("b", "c", 1), ("c", "d", 1)),
                          merges=(("a", "c"), ("b", "d")))
        assert quotient_rank(q, 1).rank == 2
        identified = QuotientInput(q.vertices, q.edges, q.merges, identify_parallel=True)
        assert quotient_rank(identified, 1).rank == 0

    def test_disconnected_components(self):
        """성분이 여럿"""
        q = QuotientInput(("a", "b", "c", "d"), edges(("a", "b", 1), ("c", "d", 1)))
        result = quotient_rank(q, 1)
        assert (result.rank, result.components) == (0, 2)

    def test_unknown_vertex_in_merge(self):
        """merge의 정점이 없으면 InputError"""
        q = QuotientInput(("a", "b"), edges(("a", "b", 1)), merges=(("a", "z"),))
        with pytest.raises(InputError):
            quotient_rank(q, 1)

    def test_representative_is_smallest_name(self):
        """대표는 가장 작은 이름"""
        q = QuotientInput(("v10", "v2", "v3"), edges(("v10", "v2", 3), ("v2", "v3", 1)))
        assert quotient_rank(q, 2).classes == {"v10": "v2", "v2": "v2", "v3": "v3"}


class TestUltrametric:
    def test_accepts_ultrametric(self):
        m = {("a", "b"): Exponent(3), ("b", "c"): Exponent(2), ("a", "c"): Exponent(2)}
        check_ultrametric(["a", "b", "c"], m)

    def test_rejects_violation(self):
        """부등식이 깨지면 InputError"""
        m = {("a", "b"): Exponent(3), ("b", "c"): Exponent(2), ("a", "c"): Exponent(1)}
        with pytest.raises(InputError, match="ultrametric"):
            check_ultrametric(["a", "b", "c"], m)

    def test_missing_pair_is_named(self):
        """빠진 쌍은 KeyError가 아니라 InputError로"""
        m = {("a", "b"): Exponent(3), ("a", "c"): Exponent(2)}
        with pytest.raises(InputError, match=r"\(b, c\)"):
            check_ultrametric(["a", "b", "c"], m)

    def test_matrix_is_checked_before_counting(self):
        """행렬 검사가 rank 계산보다 먼저"""
        m = {("a", "b"): Exponent(3), ("b", "c"): Exponent(2), ("a", "c"): Exponent(1)}
        q = QuotientInput(("a", "b", "c"), edges(("a", "b", 3), ("b", "c", 2)), matrix=m)
        with pytest.raises(InputError):
            quotient_rank(q, 1)
