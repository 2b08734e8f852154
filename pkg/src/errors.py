# -*- coding: utf-8 -*-
"""MD-Homology 라이브러리 예외 계층."""


class MdhError(ValueError):
    """모든 라이브러리 예외의 기반 클래스."""

    def __init__(self, message, violations=None):
        super().__init__(message)
        self.violations = list(violations or [])


class CoverageError(MdhError):
    """프로파일 구간에 빈틈이나 겹침이 있음."""


class DomainError(MdhError):
    """허용 범위 밖의 값 (b < 1, degree < 0 등)."""


class ArithmeticRankError(MdhError):
    """음수 rank가 만들어지는 연산."""


class DegeneracyError(MdhError):
    """고립 정점."""


class InputError(MdhError):
    """잘못된 입력 데이터."""


class ConsistencyError(MdhError):
    """subdivision 라벨이 원래 라벨과 맞지 않음."""


class PreconditionError(MdhError):
    """연산의 선행 조건 위반."""


class UnsupportedSizeError(MdhError):
    """구성이 지원하지 않는 크기."""


class CapacityError(MdhError):
    """설정된 크기 상한 초과."""
