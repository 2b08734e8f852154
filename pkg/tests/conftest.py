# -*- coding: utf-8 -*-
"""
pytest 설정 파일
"""
import sys
from pathlib import Path

import pytest

# 프로젝트 루트를 sys.path에 추가
PROJECT_ROOT = Path(__file__).parent.parent
sys.path.insert(0, str(PROJECT_ROOT))

FIXTURES = PROJECT_ROOT / "tests" / "fixtures"


@pytest.fixture(scope="session")
def fixtures_dir():
    return FIXTURES


@pytest.fixture
def theta():
    """세 평행 간선 (1, 5, 5)의 theta complex"""
    from src.holder_complex import HolderComplex

    return HolderComplex.from_edges([("a", "b", 1), ("a", "b", 5), ("a", "b", 5)])


@pytest.fixture
def single_edge():
    from src.holder_complex import HolderComplex

    return HolderComplex.from_edges([("a", "b", "3/2")])


@pytest.fixture
def w2_spec():
    """W_2 = x1x2x1x2, β = 1, α = 2"""
    from src.snakes import SnakeSpec, make_gluing_word

    return SnakeSpec.uniform(make_gluing_word(2), 1, 2)


@pytest.fixture
def bubble_model():
    """β = 1, α = 2 인 bubble snake의 링크 모델"""
    from src.outer_homology import link_model_from_arcs
    from src.realization import realize_bubble_snake

    return link_model_from_arcs(realize_bubble_snake(1, 2))


@pytest.fixture
def isolated_settings():
    """테스트가 바꾼 전역 설정을 되돌린다."""
    from src.config import get_settings, set_settings

    previous = get_settings()
    yield previous
    set_settings(previous)
