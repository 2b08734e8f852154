# -*- coding: utf-8 -*-
"""
지수(Exponent)와 rank 프로파일.

Exponent는 1 이상의 정확한 유리수 또는 무한대이다. RankProfile은 해상도
b ∈ [1, ∞] 위의 계단 함수로, 반열린 구간 [lo, hi)마다 rank 하나와
점 {∞}에서의 값을 따로 가진다.
"""

import bisect
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import total_ordering
from typing import Callable, Iterable, List, Optional, Sequence, Tuple

import pandas as pd

from src.errors import ArithmeticRankError, CoverageError, DomainError, InputError


_INF_TOKENS = {"inf", "+inf", "infinity", "∞", "oo"}


@total_ordering
class Exponent:
    """정확한 유리수 지수 (≥ 1) 또는 ∞."""

    __slots__ = ("_value",)

    def __init__(self, value):
        if isinstance(value, Exponent):
            frac = value._value
        elif value is None:
            frac = None
        elif isinstance(value, str):
            frac = _parse_fraction(value)
        elif isinstance(value, float):
            if math.isinf(value) and value > 0:
                frac = None
            else:
                raise DomainError(f"float exponents are not exact: {value!r}")
        elif isinstance(value, (int, Fraction)) and not isinstance(value, bool):
            frac = Fraction(value)
        else:
            raise InputError(f"cannot read an exponent from {value!r}")
        if frac is not None and frac < 1:
            raise DomainError(f"exponent {frac} is below 1")
        object.__setattr__(self, "_value", frac)

    def __setattr__(self, name, value):
        raise AttributeError("Exponent is immutable")

    @classmethod
    def parse(cls, text) -> "Exponent":
        return cls(text)

    @property
    def is_infinite(self) -> bool:
        return self._value is None

    @property
    def fraction(self) -> Fraction:
        if self._value is None:
            raise DomainError("infinite exponent has no rational value")
        return self._value

    def __float__(self):
        return math.inf if self._value is None else float(self._value)

    def _key(self):
        return (1, Fraction(0)) if self._value is None else (0, self._value)

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._value == other._value

    def __lt__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._key() < other._key()

    def __hash__(self):
        return hash(math.inf) if self._value is None else hash(self._value)

    def __str__(self):
        if self._value is None:
            return "inf"
        if self._value.denominator == 1:
            return str(self._value.numerator)
        return f"{self._value.numerator}/{self._value.denominator}"

    def __repr__(self):
        return f"Exponent({str(self)!r})"

    def __reduce__(self):
        return (Exponent, (str(self),))


def _parse_fraction(text):
    token = text.strip().lower()
    if token in _INF_TOKENS:
        return None
    try:
        return Fraction(token)
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"cannot read an exponent from {text!r}") from exc


def _coerce(other):
    if isinstance(other, Exponent):
        return other
    if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
        if other < 1:
            return NotImplemented
        return Exponent(other)
    if isinstance(other, float) and math.isinf(other) and other > 0:
        return INF
    return NotImplemented


def as_exponent(value) -> Exponent:
    return value if isinstance(value, Exponent) else Exponent(value)


INF = Exponent(None)
ONE = Exponent(1)


class Ordering(Enum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


def exponent_compare(a, b) -> Ordering:
    """두 지수의 순서."""
    a, b = as_exponent(a), as_exponent(b)
    if a == b:
        return Ordering.EQUAL
    return Ordering.LESS if a < b else Ordering.GREATER


@dataclass(frozen=True)
class RankProfile:
    """해상도 b에 대한 rank 계단 함수 (정규형)."""

    breakpoints: Tuple[Exponent, ...]
    ranks: Tuple[int, ...]
    at_infinity: int

    def __post_init__(self):
        if not self.breakpoints or self.breakpoints[0] != ONE:
            raise InputError("breakpoints must start at 1")
        if len(self.breakpoints) != len(self.ranks):
            raise InputError("one rank per breakpoint is required")
        for lo, hi in zip(self.breakpoints, self.breakpoints[1:]):
            if not lo < hi:
                raise InputError("breakpoints must be strictly increasing")
        if self.breakpoints[-1].is_infinite:
            raise InputError("breakpoints must be finite")
        if any(r < 0 for r in self.ranks) or self.at_infinity < 0:
            raise InputError("ranks must be non-negative")
        for left, right in zip(self.ranks, self.ranks[1:]):
            if left == right:
                raise InputError("adjacent intervals must carry distinct ranks")

    @classmethod
    def constant(cls, rank: int) -> "RankProfile":
        return cls((ONE,), (rank,), rank)

    def intervals(self) -> List[Tuple[Exponent, Exponent, int]]:
        """(lo, hi, rank) 목록. 마지막 구간의 hi는 ∞ (점 ∞ 제외)."""
        his = list(self.breakpoints[1:]) + [INF]
        return list(zip(self.breakpoints, his, self.ranks))

    @property
    def jumping_rates(self) -> Tuple[Exponent, ...]:
        return self.breakpoints[1:]

    def max_rank(self) -> int:
        return max(max(self.ranks), self.at_infinity)

    def __str__(self):
        parts = [f"[{lo},{hi}):{r}" for lo, hi, r in self.intervals()]
        parts.append(f"{{inf}}:{self.at_infinity}")
        return " ".join(parts)


def _canonical(points: Sequence[Tuple[Exponent, int]], at_infinity: int) -> RankProfile:
    bps, ranks = [], []
    for bp, rank in points:
        if ranks and ranks[-1] == rank:
            continue
        bps.append(bp)
        ranks.append(rank)
    return RankProfile(tuple(bps), tuple(ranks), at_infinity)


def profile_from_cases(cases: Iterable[Tuple[object, object, int]],
                       at_infinity: Optional[int] = None) -> RankProfile:
    """
    (lo, hi, rank) 케이스 표로 프로파일을 만든다.

    hi = ∞인 케이스는 점 ∞까지 포함한다 ([α, ∞]). at_infinity를 주면 그 값이 우선한다.
    빈 구간 [q, q)는 무시한다.
    """
    normalized = []
    for lo, hi, rank in cases:
        lo, hi = as_exponent(lo), as_exponent(hi)
        if lo.is_infinite or hi < lo:
            raise CoverageError(f"malformed interval [{lo}, {hi})")
        if lo == hi:
            continue
        if rank < 0:
            raise ArithmeticRankError(f"negative rank {rank} on [{lo}, {hi})")
        normalized.append((lo, hi, int(rank)))
    if not normalized:
        raise CoverageError("no intervals given")
    normalized.sort(key=lambda c: c[0])

    expected = ONE
    for lo, hi, _ in normalized:
        if lo < expected:
            raise CoverageError(f"overlap at {lo}")
        if lo > expected:
            raise CoverageError(f"gap [{expected}, {lo})")
        expected = hi
    if not expected.is_infinite:
        raise CoverageError(f"gap [{expected}, inf]")

    if at_infinity is None:
        at_infinity = normalized[-1][2]
    return _canonical([(lo, rank) for lo, _, rank in normalized], int(at_infinity))


def profile_eval(p: RankProfile, b) -> int:
    """b가 속한 구간의 rank."""
    b = as_exponent(b)
    if b.is_infinite:
        return p.at_infinity
    idx = bisect.bisect_right(p.breakpoints, b) - 1
    return p.ranks[idx]


def profile_add_on_interval(p: RankProfile, lo, hi, delta: int) -> RankProfile:
    """[lo, hi) 위에서만 rank를 delta만큼 바꾼다."""
    lo, hi = as_exponent(lo), as_exponent(hi)
    if lo.is_infinite or not lo < hi:
        raise DomainError(f"empty or reversed interval [{lo}, {hi})")
    if delta == 0:
        return p
    cuts = set(p.breakpoints) | {lo}
    if not hi.is_infinite:
        cuts.add(hi)
    points = []
    for bp in sorted(cuts):
        rank = profile_eval(p, bp)
        if lo <= bp < hi:
            rank += delta
        if rank < 0:
            raise ArithmeticRankError(f"rank {rank} at b={bp}")
        points.append((bp, rank))
    return _canonical(points, p.at_infinity)


def sample_profile(rank_at: Callable[[Exponent], int], candidates: Iterable,
                   workers: int = 1) -> RankProfile:
    """후보 breakpoint마다 (구간 왼쪽 끝에서) rank_at을 평가해 프로파일을 만든다."""
    finite = {as_exponent(c) for c in candidates}
    finite = sorted(c for c in finite if not c.is_infinite)
    points = [ONE] + [c for c in finite if c > ONE]
    samples = points + [INF]
    if workers > 1 and len(samples) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            values = list(pool.map(rank_at, samples))
    else:
        values = [rank_at(b) for b in samples]
    return _canonical(list(zip(points, values[:-1])), values[-1])


def profile_to_records(p: RankProfile) -> List[dict]:
    records = [{"from": str(lo), "to": str(hi), "rank": r} for lo, hi, r in p.intervals()]
    records.append({"at_infinity": p.at_infinity})
    return records


def profile_from_records(records: Sequence[dict]) -> RankProfile:
    at_infinity = None
    cases = []
    for rec in records:
        if "at_infinity" in rec:
            at_infinity = int(rec["at_infinity"])
            continue
        try:
            cases.append((rec["from"], rec["to"], int(rec["rank"])))
        except KeyError as exc:
            raise InputError(f"profile record is missing {exc}") from exc
    if at_infinity is None:
        raise InputError("profile records need an at_infinity entry")
    return profile_from_cases(cases, at_infinity=at_infinity)


def profile_to_frame(p: RankProfile) -> pd.DataFrame:
    """CSV 출력용 (from, to, rank). 점 ∞는 from=to=inf 행."""
    rows = [{"from": str(lo), "to": str(hi), "rank": r} for lo, hi, r in p.intervals()]
    rows.append({"from": "inf", "to": "inf", "rank": p.at_infinity})
    return pd.DataFrame(rows, columns=["from", "to", "rank"])
