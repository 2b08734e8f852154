# -*- coding: utf-8 -*-
"""검증 코퍼스 테스트 (큰 코퍼스는 slow)"""
import random
from collections import Counter

import pytest

from src.config import MdhSettings, set_settings
from src.errors import InputError
from src.exponents import Exponent, profile_from_cases
from src.realization import realize_nonsnake_bubble
from src.snakes import validate_snake_name
from src.validation import (check_certificates, check_complexes, check_nonsnake,
                            check_numeric, check_snake_names, check_spectra, check_staircases,
                            check_subdivisions, check_targets, compositions, nonsnake_profile,
                            nonsnake_tord_violations, random_targets, run_corpora, snake_names,
                            spectra_cases, staircase_profile)


def assert_clean(result):
    assert result.ok, "\n".join(result.failures[:10])
    assert result.checked > 0


class TestHelpers:
    """코퍼스 생성기"""

    def test_compositions(self):
        """4의 합 분할은 8가지, 두 조각 이하는 4가지"""
        assert len(compositions(4, 4)) == 8
        assert sorted(compositions(4, 2)) == [(1, 3), (2, 2), (3, 1), (4,)]
        assert all(sum(c) == 6 for c in compositions(6, 4))

    def test_spectra_cases_use_distinct_increasing_qs(self):
        """q는 서로 다르고 증가한다"""
        for k, qs, sizes in spectra_cases(range(3, 5)):
            assert sum(sizes) == k
            assert len(set(qs)) == len(qs) == len(sizes)
            assert [Exponent(q) for q in qs] == sorted(Exponent(q) for q in qs)

    def test_staircase_profile(self):
        """그룹 (2, 1)에 q = (2, 3): [1,2) 3, [2,3) 1"""
        assert staircase_profile(3, Exponent(1), [2, 3], [2, 1]) == \
            profile_from_cases([(1, 2, 3), (2, 3, 1), (3, "inf", 0)])

    def test_nonsnake_profile(self):
        assert nonsnake_profile(2, Exponent(1), [2, 3]) == \
            profile_from_cases([(1, 2, 2), (2, 3, 1), (3, "inf", 0)])

    def test_nonsnake_tord_table_is_clean(self):
        """올바른 α 표에는 위반이 없다"""
        family = realize_nonsnake_bubble(3, "3/2", [2, "5/2", 3])
        assert nonsnake_tord_violations(family, 3, "3/2", [2, "5/2", 3]) == []

    def test_nonsnake_tord_table_catches_swapped_alphas(self):
        """α 표가 어긋나면 위반을 보고한다"""
        family = realize_nonsnake_bubble(2, 1, [2, 3])
        problems = nonsnake_tord_violations(family, 2, 1, [3, 4])
        assert any("delta1, delta5" in p for p in problems)

    def test_snake_names_small(self):
        """길이 6 이하: x1x2x1x2와 길이 6짜리 5개"""
        names = snake_names(6)
        assert Counter(len(w) for w in names) == {4: 1, 6: 5}
        assert names[0] == ("x1", "x2", "x1", "x2")

    def test_snake_names_are_valid_and_distinct(self):
        names = snake_names(8)
        assert len(names) == len(set(names)) == 1 + 5 + 36
        for word in names:
            assert validate_snake_name(word) == []
            assert set(Counter(word).values()) == {2}

    def test_random_targets(self):
        """ks는 증가하고 k_m ≤ 8, qs도 증가"""
        for ks, qs in random_targets(random.Random(3), 20):
            assert 1 <= len(ks) <= 4
            assert list(ks) == sorted(set(ks)) and ks[-1] <= 8 and ks != (0,)
            assert [Exponent(q) for q in qs] == sorted(Exponent(q) for q in qs)

    def test_unknown_corpus(self):
        """없는 코퍼스 이름"""
        with pytest.raises(InputError, match="unknown corpora"):
            run_corpora(["nope"])

    def test_seed_makes_runs_repeatable(self):
        """같은 시드면 같은 complex 코퍼스"""
        a = run_corpora(["complexes"], seed=5, count=3)
        b = run_corpora(["complexes"], seed=5, count=3)
        assert a == b

    def test_seed_comes_from_settings(self, isolated_settings):
        """시드를 안 주면 MdhSettings.seed를 쓴다"""
        set_settings(MdhSettings(seed=9))
        from_settings = run_corpora(["certificates"], count=2, max_length=6)
        explicit = run_corpora(["certificates"], seed=9, count=2, max_length=6)
        assert from_settings == explicit


class TestSmallCorpora:
    """빠른 코퍼스는 기본 실행에 포함"""

    def test_staircases(self):
        assert_clean(check_staircases(max_k=4))

    def test_nonsnake(self):
        """k = 2..4 프로파일과 tord 표"""
        assert_clean(check_nonsnake(range(2, 5)))

    def test_numeric(self):
        """모든 예제 arc 쌍에서 수치 tord가 0.05 안"""
        assert_clean(check_numeric())


@pytest.mark.slow
class TestAcceptanceCorpora:
    """큰 코퍼스: oracle 대조 전체"""

    def test_random_complexes_match_oracle(self):
        """임의 complex 200개, 차수 2~4는 0"""
        assert_clean(check_complexes(random.Random(7), 200))

    def test_subdivisions(self):
        """complex 100개 × 세분 3번"""
        assert_clean(check_subdivisions(random.Random(11), 100, cuts=3))

    def test_gluing_staircases(self):
        """W_2 ~ W_6"""
        assert_clean(check_staircases(max_k=6))

    def test_spectra_compositions(self):
        """k = 3..6, 모든 합 분할 × {2, 5/2, 3, 4}에서 고른 q"""
        result = check_spectra(range(3, 7))
        assert_clean(result)
        assert result.checked == len(spectra_cases(range(3, 7)))

    def test_random_targets(self):
        """임의 (ks, qs) 20개, m ≤ 4, k_m ≤ 8"""
        assert_clean(check_targets(random_targets(random.Random(13), 20)))

    def test_all_snake_names_up_to_ten(self):
        """글자마다 두 번 나오는 길이 10 이하 이름 371개"""
        names = snake_names(10)
        assert len(names) == 371
        result = check_snake_names(names)
        assert_clean(result)
        assert result.checked == 371

    def test_certificates(self):
        """같은 이름과 spectrum의 쌍 50개는 guaranteed이고 프로파일도 같다"""
        assert_clean(check_certificates(random.Random(17), 50))
