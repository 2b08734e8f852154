# -*- coding: utf-8 -*-
"""Snake name, node / nodal zone 조합론, basic snake의 outer MD-Homology."""

from collections import Counter
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Mapping, Optional, Sequence, Tuple

from src.errors import DomainError, InputError, PreconditionError
from src.exponents import INF, ONE, Exponent, RankProfile, as_exponent, profile_from_cases

try:
    from src.utils import normalize_identifier
except ImportError:
    from utils import normalize_identifier


Word = Tuple[str, ...]


@dataclass(frozen=True)
class WordViolation:
    clause: str
    position: int
    detail: str

    def __str__(self):
        return f"{self.clause} at position {self.position}: {self.detail}"


def letter(i: int) -> str:
    return f"x{i}"


def validate_snake_name(word: Sequence[str]) -> List[WordViolation]:
    """연속 반복 / 첫 등장 순서 / 두 번 이상 등장 조건을 검사한다."""
    word = tuple(word)
    violations = []
    if not word:
        return [WordViolation("empty word", 0, "a snake name has at least one letter")]
    for i in range(1, len(word)):
        if word[i] == word[i - 1]:
            violations.append(WordViolation("consecutive repeat", i, f"{word[i]} follows itself"))
    seen = []
    for i, w in enumerate(word):
        if w in seen:
            continue
        expected = letter(len(seen) + 1)
        if w != expected:
            violations.append(WordViolation("canonical order", i, f"expected {expected}, found {w}"))
            break
        seen.append(w)
    counts = Counter(word)
    for i, w in enumerate(word):
        if counts[w] == 1:
            violations.append(WordViolation("single occurrence", i, f"{w} occurs once"))
    return violations


def ensure_snake_name(word: Sequence[str]) -> Word:
    word = tuple(word)
    violations = validate_snake_name(word)
    if violations:
        raise InputError("invalid snake name: " + "; ".join(map(str, violations)), violations)
    return word


def normalize_word(word: Sequence[str]) -> Word:
    """첫 등장 순서대로 글자를 x1, x2, ...로 바꾼다."""
    names: Dict[str, str] = {}
    out = []
    for w in word:
        w = normalize_identifier(w)
        if w not in names:
            names[w] = letter(len(names) + 1)
        out.append(names[w])
    return tuple(out)


def reverse_word(word: Sequence[str]) -> Word:
    return normalize_word(tuple(reversed(tuple(word))))


def same_snake_name(w1: Sequence[str], w2: Sequence[str]) -> bool:
    """글자 이름 바꾸기와 역순을 허용한 같음."""
    n1 = normalize_word(w1)
    return n1 == normalize_word(w2) or n1 == reverse_word(w2)


def node_counts(word: Sequence[str]) -> Tuple[int, int]:
    """(k 글자 수, m 길이)."""
    word = ensure_snake_name(word)
    return len(set(word)), len(word)


def make_gluing_word(k: int) -> Word:
    """W_2 = x1x2x1x2, W_k = [w_1 … w_{r−1} x_k w_r x_k]."""
    if k < 2:
        raise DomainError(f"gluing words need k >= 2, got {k}")
    word = [letter(1), letter(2), letter(1), letter(2)]
    for new in range(3, k + 1):
        last = word[-1]
        word = word[:-1] + [letter(new), last, letter(new)]
    return tuple(word)


def second_occurrences(word: Sequence[str]) -> List[int]:
    """두 번째 이후 등장 위치 (0부터)."""
    seen = set()
    out = []
    for i, w in enumerate(word):
        if w in seen:
            out.append(i)
        seen.add(w)
    return out


@dataclass(frozen=True)
class SnakeSpec:
    beta: Exponent
    word: Word
    spectra: Mapping[str, FrozenSet[Exponent]]

    def __post_init__(self):
        object.__setattr__(self, "beta", as_exponent(self.beta))
        object.__setattr__(self, "word", tuple(self.word))
        object.__setattr__(self, "spectra", {
            k: frozenset(as_exponent(q) for q in v) for k, v in dict(self.spectra).items()})
        ensure_snake_name(self.word)
        if self.beta.is_infinite:
            raise DomainError("beta must be finite")
        for w in set(self.word):
            values = self.spectra.get(w)
            if not values:
                raise InputError(f"node {w} has no spectrum")
            low = min(values)
            if not low > self.beta:
                raise InputError(f"spectrum of {w} must exceed beta={self.beta}, found {low}")
        extra = set(self.spectra) - set(self.word)
        if extra:
            raise InputError(f"spectra for letters not in the word: {sorted(extra)}")

    def __hash__(self):
        return hash((self.beta, self.word, tuple(sorted((k, tuple(sorted(v))) for k, v in self.spectra.items()))))

    @classmethod
    def uniform(cls, word: Sequence[str], beta, alpha) -> "SnakeSpec":
        alpha = as_exponent(alpha)
        return cls(as_exponent(beta), tuple(word), {w: frozenset({alpha}) for w in set(word)})

    @classmethod
    def from_mapping(cls, data: dict) -> "SnakeSpec":
        try:
            word = tuple(normalize_identifier(w) for w in data["word"])
            spectra = {normalize_identifier(k): [Exponent.parse(q) for q in v]
                       for k, v in data["spectra"].items()}
            return cls(Exponent.parse(data["beta"]), word, spectra)
        except KeyError as exc:
            raise InputError(f"snake JSON is missing {exc}") from exc

    def to_mapping(self) -> dict:
        return {
            "beta": str(self.beta),
            "word": list(self.word),
            "spectra": {k: [str(q) for q in sorted(self.spectra[k])] for k in sorted(self.spectra)},
        }

    @property
    def counts(self) -> Tuple[int, int]:
        return len(set(self.word)), len(self.word)

    def node_exponent(self, w) -> Optional[Exponent]:
        values = self.spectra[w]
        return next(iter(values)) if len(values) == 1 else None

    def node_exponents(self) -> Dict[str, Exponent]:
        """모든 노드가 singleton spectrum일 때 글자별 지수."""
        exps = {}
        for w in sorted(set(self.word)):
            q = self.node_exponent(w)
            if q is None:
                raise PreconditionError(f"node {w} has a non-singleton spectrum; it cannot be realized")
            exps[w] = q
        return exps

    @property
    def common_alpha(self) -> Optional[Exponent]:
        values = set().union(*self.spectra.values())
        return next(iter(values)) if len(values) == 1 else None

    @property
    def is_basic(self) -> bool:
        return self.common_alpha is not None


def mdh1_basic_snake(spec: SnakeSpec) -> RankProfile:
    """Z^(m−k) on [β, α), 그 밖에서는 0."""
    alpha = spec.common_alpha
    if alpha is None:
        raise PreconditionError("basic snake formula needs one common singleton spectrum")
    k, m = spec.counts
    return profile_from_cases([(ONE, spec.beta, 0), (spec.beta, alpha, m - k), (alpha, INF, 0)])
