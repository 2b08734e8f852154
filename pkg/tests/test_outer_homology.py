# -*- coding: utf-8 -*-
"""outer 거리 MD-Homology 테스트"""
import pytest
from hypothesis import HealthCheck, given, settings

from src.errors import InputError, PreconditionError
from src.exponents import Exponent, profile_add_on_interval, profile_from_cases
from src.outer_homology import (ELEMENTARY_PAIR, WORD_PROXY, LinkModel, alpha_multiplicity,
                                build_target_snake, check_simple_contact, family_zones,
                                link_model_from_arcs, matrix_to_frame, outer_profile, outer_rank,
                                snake_surface, subsegment_exponents, weak_equiv_same_homology,
                                zone_multiplicity, zone_tord)
from src.realization import (SegmentContact, realize_bubble_snake, realize_horn,
                             realize_nonsnake_bubble, realize_snake, tord_numeric)
from src.snakes import SnakeSpec, make_gluing_word, mdh1_basic_snake
from tests.strategies import betas, gaps, snake_words

WEAK_WORD = ("x1", "x2", "x3", "x1", "x4", "x3", "x2", "x4")
RADII = [10.0 ** -i for i in range(1, 7)]


def model_of(spec, contacts=()):
    return snake_surface(spec, contacts).model


def mismatch_pair():
    """같은 이름, 대응 노드의 spectrum만 다른 두 snake."""
    contact = [SegmentContact(2, 6, ("2",))]
    x = SnakeSpec(Exponent(1), WEAK_WORD, {"x1": {3}, "x2": {2}, "x3": {2}, "x4": {3}})
    y = SnakeSpec.uniform(WEAK_WORD, 1, 3)
    return snake_surface(x, contact), snake_surface(y, contact)


class TestLinkModel:
    """행렬 검증과 JSON"""

    def test_from_mapping_records_assumption(self):
        """행렬 입력은 가정을 기록한다"""
        model = LinkModel.from_mapping({
            "beta": "1", "arcs": ["a", "b", "c"],
            "matrix": [["inf", "1", "2"], ["1", "inf", "1"], ["2", "1", "inf"]],
        })
        assert ELEMENTARY_PAIR in model.assumptions
        assert model.edge_exponents == (Exponent(1), Exponent(1))
        assert LinkModel.from_mapping(model.to_mapping()) == model

    def test_ultrametric_violation(self):
        """ultrametric 위반"""
        with pytest.raises(InputError, match="ultrametric"):
            LinkModel.from_mapping({
                "beta": "1", "arcs": ["a", "b", "c"],
                "matrix": [["inf", "3", "1"], ["3", "inf", "2"], ["1", "2", "inf"]],
            })

    def test_asymmetric_matrix(self):
        """비대칭 행렬"""
        with pytest.raises(InputError, match="symmetric"):
            LinkModel.from_mapping({"beta": "1", "arcs": ["a", "b"],
                                    "matrix": [["inf", "1"], ["2", "inf"]]})

    def test_entry_below_beta(self):
        """β보다 작은 항목"""
        with pytest.raises(InputError):
            LinkModel.from_mapping({"beta": "2", "arcs": ["a", "b"],
                                    "matrix": [["inf", "1"], ["1", "inf"]]})

    def test_declared_edge_exponents_must_agree(self):
        """선언한 간선 지수는 행렬과 같아야 한다"""
        with pytest.raises(InputError):
            LinkModel.from_mapping({"beta": "1", "arcs": ["a", "b"], "edge_exponents": ["2"],
                                    "matrix": [["inf", "1"], ["1", "inf"]]})

    def test_realized_models_need_no_assumption(self, bubble_model):
        """실현한 모델은 가정이 없다"""
        assert bubble_model.assumptions == ()

    def test_family_without_zones_gets_one_zone_per_arc(self):
        """zone이 없으면 arc마다 하나"""
        zones = family_zones(realize_horn(2))
        assert [(z.name, z.start) for z in zones] == [("Z1", 0), ("Z2", 1)]

    def test_matrix_frame(self, bubble_model):
        """tord 행렬 표"""
        df = matrix_to_frame(bubble_model)
        assert list(df.columns) == ["gamma1", "lambda1", "lambda2", "gamma2"]
        assert df.loc["gamma1", "gamma2"] == "2"


class TestOuterProfiles:
    """oracle 프로파일과 닫힌 공식"""

    def test_bubble_snake(self, bubble_model):
        """bubble snake: [1, 2)에서 1"""
        assert outer_profile(bubble_model) == profile_from_cases([(1, 2, 1), (2, "inf", 0)])

    def test_w2_staircase(self, w2_spec):
        """W_2의 계산값 = 공식"""
        profile = outer_profile(model_of(w2_spec))
        assert profile == profile_from_cases([(1, 2, 2), (2, "inf", 0)])
        assert profile == mdh1_basic_snake(w2_spec)

    def test_horn_is_a_circle(self):
        """horn의 링크는 원"""
        model = link_model_from_arcs(realize_horn("3/2"))
        assert outer_profile(model) == profile_from_cases([(1, "3/2", 0), ("3/2", "inf", 1)])
        assert outer_rank(model, "inf") == 1

    def test_nonsnake_bubble(self):
        """non-snake bubble k = 2"""
        model = link_model_from_arcs(realize_nonsnake_bubble(2, 1, [2, 3]))
        assert outer_profile(model) == profile_from_cases([(1, 2, 2), (2, 3, 1), (3, "inf", 0)])

    def test_weakly_outer_refined_segments(self):
        """segment 접촉이 계단을 하나 더 만든다"""
        spec = SnakeSpec.uniform(WEAK_WORD, 1, 2)
        model = model_of(spec, [SegmentContact(2, 6, ("2", "3"))])
        assert outer_profile(model) == profile_from_cases([(1, 2, 3), (2, 3, 1), (3, "inf", 0)])

    def test_spectra_change_the_profile(self):
        """대응 노드의 spectrum이 프로파일을 바꾼다"""
        x, y = mismatch_pair()
        assert outer_profile(x.model) == profile_from_cases([(1, 2, 3), (2, 3, 2), (3, "inf", 0)])
        assert outer_profile(y.model) == profile_from_cases([(1, 2, 3), (2, 3, 4), (3, "inf", 0)])

    def test_different_names_same_profile(self):
        """이름이 달라도 프로파일은 같을 수 있다"""
        a = SnakeSpec.uniform(WEAK_WORD, 1, 2)
        b = SnakeSpec.uniform(("x1", "x2", "x1", "x2", "x3", "x1", "x3"), 1, 2)
        assert outer_profile(model_of(a)) == outer_profile(model_of(b))

    def test_degrees(self, bubble_model):
        """차수 0은 1, 2 이상은 0"""
        assert outer_profile(bubble_model, degree=0) == profile_from_cases([(1, "inf", 1)])
        assert outer_profile(bubble_model, degree=2) == profile_from_cases([(1, "inf", 0)])

    @pytest.mark.parametrize("b", ["1/1", "2", "5/2", "7", "inf"])
    def test_rank_vanishes_outside_snake_range(self, b):
        """[β, α) 밖에서는 0"""
        model = link_model_from_arcs(realize_bubble_snake("3/2", 2))
        expected = 1 if Exponent("3/2") <= Exponent(b) < Exponent(2) else 0
        assert outer_rank(model, b) == expected

    def test_gluing_adds_one_bubble_at_a_time(self):
        """W_k → W_{k+1}은 [β, α)에 1을 더한다"""
        profile = outer_profile(model_of(SnakeSpec.uniform(make_gluing_word(2), 1, "5/2")))
        for k in range(3, 6):
            profile = profile_add_on_interval(profile, 1, "5/2", 1)
            glued = SnakeSpec.uniform(make_gluing_word(k), 1, "5/2")
            assert outer_profile(model_of(glued)) == profile

    def test_numeric_tord_tracks_symbolic(self, w2_spec):
        """수치 tord는 기호값과 0.05 안"""
        for family in (realize_snake(w2_spec), realize_bubble_snake(1, 2)):
            model = link_model_from_arcs(family)
            for i in range(len(family.arcs)):
                for j in range(i + 1, len(family.arcs)):
                    estimate = tord_numeric(family.arcs[i], family.arcs[j], RADII)
                    assert abs(estimate - float(model.entry(i, j))) <= 0.05


@pytest.mark.property
class TestBasicSnakeOracle:
    """임의의 basic snake에서 oracle과 공식의 일치"""

    @settings(max_examples=40, deadline=None,
              suppress_health_check=[HealthCheck.filter_too_much, HealthCheck.too_slow])
    @given(word=snake_words(), beta=betas, gap=gaps)
    def test_profile_matches_formula(self, word, beta, gap):
        """basic snake의 oracle = Z^(m−k) 공식"""
        alpha = Exponent(beta).fraction + gap
        spec = SnakeSpec.uniform(word, beta, alpha)
        assert outer_profile(link_model_from_arcs(realize_snake(spec))) == mdh1_basic_snake(spec)

    @settings(max_examples=50, deadline=None,
              suppress_health_check=[HealthCheck.filter_too_much, HealthCheck.too_slow])
    @given(word=snake_words(), beta=betas)
    def test_guaranteed_verdicts_are_sound(self, word, beta):
        """guaranteed면 프로파일도 같다"""
        alpha = Exponent(beta).fraction + 1
        s1 = snake_surface(SnakeSpec.uniform(word, beta, alpha))
        s2 = snake_surface(SnakeSpec.uniform(word, beta, alpha))
        verdict = weak_equiv_same_homology(s1, s2)
        assert verdict.guaranteed
        assert outer_profile(s1.model) == outer_profile(s2.model)


class TestTargetSnake:
    """실현 정리의 목표 프로파일"""

    @pytest.mark.parametrize("ks, qs", [
        ((1,), (2,)),
        ((1, 3), (2, 3)),
        ((1, 2), (2, 3)),
        ((0, 2), (2, 3)),
        ((2, 3, 5), ("3/2", 2, 4)),
        ((0, 1, 4), (2, "5/2", 3)),
    ])
    def test_realized_profile_reaches_target(self, ks, qs):
        """실현한 snake가 목표 계단에 닿는다"""
        target = build_target_snake(ks, qs, 1)
        assert outer_profile(link_model_from_arcs(target.family)) == target.expected

    def test_staircase_values(self):
        """목표 계단 값과 그룹 크기"""
        target = build_target_snake((1, 3), (2, 3), 1)
        assert target.expected == profile_from_cases([(1, 2, 3), (2, 3, 1), (3, "inf", 0)])
        assert target.group_sizes == (2, 1)
        assert target.spec.word == make_gluing_word(3)

    def test_base_case_is_bubble(self):
        """ks = (1,)은 bubble snake"""
        target = build_target_snake((1,), (2,), 1)
        assert target.spec is None
        assert target.family.names == ("gamma1", "lambda1", "lambda2", "gamma2")

    @pytest.mark.parametrize("ks, qs", [
        ((0,), (2,)),
        ((2, 1), (2, 3)),
        ((1, 2), (3, 2)),
        ((1,), ("inf",)),
        ((1, 2), (2,)),
    ])
    def test_bad_targets(self, ks, qs):
        """감소하거나 ∞인 목표는 거부"""
        with pytest.raises(PreconditionError):
            build_target_snake(ks, qs, 1)


class TestZones:
    """α-multiplicity, subsegment, simple contact"""

    def test_alpha_multiplicity(self, w2_spec):
        """α-multiplicity는 경로 위 성분 수"""
        model = model_of(w2_spec)
        assert alpha_multiplicity(model, 0, 2) == 2
        assert alpha_multiplicity(model, 0, 1) == 1

    def test_zone_tord_and_multiplicity(self, w2_spec):
        model = model_of(w2_spec)
        z1, z3 = model.zone("Z1"), model.zone("Z3")
        assert zone_tord(model, z1, z3) == Exponent(2)
        assert zone_multiplicity(model, z1, z3, 2) == 2
        assert zone_multiplicity(model, z1, z3, 3) == 1

    def test_subsegment_exponents(self, w2_spec):
        """zone 쌍의 subsegment 지수 집합"""
        model = model_of(w2_spec)
        assert subsegment_exponents(model, model.zone("Z1"), model.zone("Z3")) == {Exponent(2)}
        assert subsegment_exponents(model, model.zone("Z1"), model.zone("Z2")) == frozenset()
        with pytest.raises(PreconditionError):
            subsegment_exponents(model, model.zone("Z1"), model.zone("S1"))

    def test_simple_contact(self):
        """지수 하나면 simple contact"""
        spec = SnakeSpec.uniform(WEAK_WORD, 1, 2)
        model = model_of(spec, [SegmentContact(2, 6, ("2", "3"))])
        assert check_simple_contact(model, model.zone("S2"), model.zone("S6"))

    def test_non_simple_contact(self):
        """지수가 여럿이면 simple이 아니다"""
        spec = SnakeSpec.uniform(WEAK_WORD, 1, 2)
        model = model_of(spec, [SegmentContact(2, 6, ("3", "2", "3"))])
        assert not check_simple_contact(model, model.zone("S2"), model.zone("S6"))


class TestWeakEquivalence:
    """같은 호몰로지 증명서"""

    def test_identical_basic_snakes(self, w2_spec):
        """같은 basic snake는 guaranteed"""
        verdict = weak_equiv_same_homology(snake_surface(w2_spec), snake_surface(w2_spec))
        assert verdict.guaranteed
        assert WORD_PROXY in verdict.assumptions

    def test_spectra_mismatch_reports_failing_pair(self):
        """실패한 zone 쌍을 알려 준다"""
        x, y = mismatch_pair()
        verdict = weak_equiv_same_homology(x, y)
        assert verdict.verdict == "not-guaranteed"
        assert verdict.failing_pair == ("Z2", "Z7")
        assert verdict.to_mapping()["failing_pair"] == ["Z2", "Z7"]

    def test_different_names(self):
        """이름이 다르면 not-guaranteed"""
        a = snake_surface(SnakeSpec.uniform(WEAK_WORD, 1, 2))
        b = snake_surface(SnakeSpec.uniform(("x1", "x2", "x1", "x2", "x3", "x1", "x3"), 1, 2))
        verdict = weak_equiv_same_homology(a, b)
        assert verdict.verdict == "not-guaranteed"
        assert "snake names differ" in verdict.reasons[0]
        assert verdict.failing_pair is None

    def test_correspondence_must_be_bijection(self, w2_spec):
        """zone 대응은 전단사"""
        s = snake_surface(w2_spec)
        mapping = {z.name: z.name for z in s.zones}
        mapping["Z1"] = "Z2"
        with pytest.raises(InputError):
            weak_equiv_same_homology(s, s, mapping)

    def test_correspondence_must_preserve_kind(self, w2_spec):
        """nodal은 nodal로, segment는 segment로"""
        s = snake_surface(w2_spec)
        mapping = {z.name: z.name for z in s.zones}
        mapping["Z1"], mapping["S1"] = "S1", "Z1"
        with pytest.raises(InputError, match="kind"):
            weak_equiv_same_homology(s, s, mapping)

    def test_non_simple_snake_is_rejected(self):
        """simple이 아닌 snake는 판정하지 않는다"""
        spec = SnakeSpec.uniform(WEAK_WORD, 1, 2)
        s = snake_surface(spec, [SegmentContact(2, 6, ("3", "2", "3"))])
        with pytest.raises(PreconditionError):
            weak_equiv_same_homology(s, s)
