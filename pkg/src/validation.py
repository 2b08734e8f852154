# -*- coding: utf-8 -*-
"""
닫힌 공식 / 축약 알고리즘 / 실현 결과를 quotient oracle과 대조하는 검증 코퍼스.

코퍼스 함수는 검사한 개수와 불일치 설명을 CorpusResult로 돌려준다.
`mdh validate`, scripts/validate_oracle.py, 느린 테스트가 모두 여기를 쓴다.
"""

import itertools
import logging
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from tqdm import tqdm

from src.config import get_settings
from src.errors import InputError, MdhError
from src.exponents import INF, ONE, Exponent, RankProfile, as_exponent, profile_from_cases
from src.holder_complex import HolderComplex, is_isomorphic, simplify, subdivide_edge
from src.inner_homology import inner_profile, mdh_inner
from src.outer_homology import (build_target_snake, link_model_from_arcs, outer_profile,
                                snake_surface, weak_equiv_same_homology)
from src.quotient import QuotientInput, quotient_rank
from src.realization import (ArcFamily, SegmentContact, assignment_from_sizes,
                             realize_bubble_snake, realize_horn, realize_nonsnake_bubble,
                             realize_snake, realize_snake_nodes, realize_snake_spectra,
                             tord_numeric)
from src.snakes import SnakeSpec, letter, make_gluing_word, mdh1_basic_snake

LABELS = ["1", "3/2", "2", "5/2", "3", "5"]
# 라벨 사이의 값도 본다
PROBE_POINTS = LABELS + ["7/4", "4", "11"]
SPECTRA_POOL = ("2", "5/2", "3", "4")
TARGET_POOL = ("3/2", "2", "5/2", "3", "7/2", "4", "5")
NODE_POOL = ("2", "5/2", "3", "4")
WEAK_WORD = ("x1", "x2", "x3", "x1", "x4", "x3", "x2", "x4")
NUMERIC_TOLERANCE = 0.05

CORPORA = ("complexes", "subdivisions", "staircases", "spectra", "targets", "nonsnake",
           "snake_names", "certificates", "numeric")


@dataclass
class CorpusResult:
    name: str
    checked: int = 0
    failures: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def fail(self, message: str) -> None:
        logging.warning(f"{self.name}: {message}")
        self.failures.append(message)

    def to_mapping(self) -> dict:
        return {"checked": self.checked, "failures": list(self.failures)}


def _progress(items, desc: str, progress: bool):
    return tqdm(items, desc=desc, leave=False, disable=not progress)


# ---------------------------------------------------------------------------
# inner 거리
# ---------------------------------------------------------------------------

def random_complex(rng: random.Random, max_vertices: int = 8, max_edges: int = 14) -> HolderComplex:
    """루프 없는 임의 complex (연결일 필요는 없다)."""
    n = rng.randint(2, max_vertices)
    names = [f"v{i}" for i in range(1, n + 1)]
    edges = []
    for _ in range(rng.randint(1, max_edges)):
        u, v = rng.sample(names, 2)
        edges.append((u, v, rng.choice(LABELS)))
    return HolderComplex.from_edges(edges)


def subdivide_randomly(c: HolderComplex, rng: random.Random, cuts: int = 3) -> HolderComplex:
    """간선을 cuts번 나눈다. 한쪽은 원래 라벨, 다른 쪽은 그 이상."""
    for _ in range(cuts):
        e = rng.choice(c.edges)
        other = rng.choice([Fraction(x) for x in LABELS if Fraction(x) >= e.sigma])
        if rng.random() < 0.5:
            c = subdivide_edge(c, e.key, e.sigma, other)
        else:
            c = subdivide_edge(c, e.key, other, e.sigma)
    return c


def check_complexes(rng: random.Random, count: int, progress: bool = False) -> CorpusResult:
    """축약 rank = oracle rank, 차수 2~4는 0."""
    result = CorpusResult("complexes")
    points = [Exponent(x) for x in PROBE_POINTS] + [INF]
    for i in _progress(range(count), "complexes", progress):
        c = random_complex(rng)
        for b in points:
            got = mdh_inner(c, b)
            want = quotient_rank(QuotientInput.from_complex(c), b).rank
            if got != want:
                result.fail(f"complex #{i} at b={b}: reduction {got}, oracle {want}")
            for degree in (2, 3, 4):
                if mdh_inner(c, b, degree) != 0:
                    result.fail(f"complex #{i}: degree {degree} does not vanish at b={b}")
        result.checked += 1
    return result


def check_subdivisions(rng: random.Random, count: int, cuts: int = 3,
                       progress: bool = False) -> CorpusResult:
    """세분해도 정규형은 동형이고 inner 프로파일은 그대로."""
    result = CorpusResult("subdivisions")
    bound = 8 + cuts + 1
    for i in _progress(range(count), "subdivisions", progress):
        c = random_complex(rng)
        finer = subdivide_randomly(c, rng, cuts)
        if not is_isomorphic(simplify(c), simplify(finer), max_vertices=bound):
            result.fail(f"complex #{i}: canonical forms differ after {cuts} subdivisions")
        if inner_profile(c, workers=1) != inner_profile(finer, workers=1):
            result.fail(f"complex #{i}: inner profile changed by subdivision")
        result.checked += 1
    return result


# ---------------------------------------------------------------------------
# outer 거리
# ---------------------------------------------------------------------------

def _profile_of(family: ArcFamily) -> RankProfile:
    return outer_profile(link_model_from_arcs(family), workers=1)


def check_staircases(max_k: int = 6, progress: bool = False) -> CorpusResult:
    """W_k 위의 basic snake는 Z^k on [β, α)."""
    result = CorpusResult("staircases")
    for k in _progress(range(2, max_k + 1), "staircases", progress):
        spec = SnakeSpec.uniform(make_gluing_word(k), 1, "5/2")
        got = _profile_of(realize_snake(spec))
        if got != mdh1_basic_snake(spec):
            result.fail(f"W_{k}: {got}")
        result.checked += 1
    return result


def compositions(k: int, max_parts: int) -> List[Tuple[int, ...]]:
    """k를 순서 있는 양의 정수 합으로 나누는 방법 (조각 수 ≤ max_parts)."""
    out = []
    for n in range(1, min(k, max_parts) + 1):
        for cuts in itertools.combinations(range(1, k), n - 1):
            edges = (0,) + cuts + (k,)
            out.append(tuple(b - a for a, b in zip(edges, edges[1:])))
    return out


def staircase_profile(k: int, beta, qs: Sequence, sizes: Sequence[int]) -> RankProfile:
    """그룹 l이 q_l을 받을 때: [β, q₁)에서 k, [q_l, q_{l+1})에서 k − (앞 그룹 크기 합)."""
    qs = [as_exponent(q) for q in qs]
    cases = [(ONE, beta, 0), (beta, qs[0], k)]
    done = 0
    for l in range(len(qs)):
        done += sizes[l]
        hi = qs[l + 1] if l + 1 < len(qs) else INF
        cases.append((qs[l], hi, k - done))
    return profile_from_cases(cases)


def spectra_cases(ks: Iterable[int] = range(3, 7),
                  pool: Sequence = SPECTRA_POOL) -> List[Tuple[int, Tuple[str, ...], Tuple[int, ...]]]:
    """(k, qs, sizes): k의 모든 합 분할과 pool에서 고른 서로 다른 q들."""
    pool = sorted(pool, key=as_exponent)
    cases = []
    for k in ks:
        for sizes in compositions(k, len(pool)):
            n = len(sizes)
            for picked in itertools.combinations(pool, n):
                cases.append((k, tuple(picked), sizes))
    return cases


def check_spectra(ks: Iterable[int] = range(3, 7), beta="3/2",
                  progress: bool = False) -> CorpusResult:
    result = CorpusResult("spectra")
    beta = as_exponent(beta)
    for k, qs, sizes in _progress(spectra_cases(ks), "spectra", progress):
        family = realize_snake_spectra(k, beta, assignment_from_sizes(k, qs, sizes))
        want = staircase_profile(k, beta, qs, sizes)
        got = _profile_of(family)
        if got != want:
            result.fail(f"k={k} qs={list(qs)} sizes={list(sizes)}: {got} vs {want}")
        result.checked += 1
    return result


def random_targets(rng: random.Random, count: int, max_groups: int = 4,
                   max_rank: int = 8) -> List[Tuple[Tuple[int, ...], Tuple[str, ...]]]:
    """증가하는 ks (k_m ≤ max_rank)와 증가하는 qs. ks = (0,)은 뺀다."""
    targets = []
    while len(targets) < count:
        m = rng.randint(1, max_groups)
        ks = tuple(sorted(rng.sample(range(0, max_rank + 1), m)))
        if ks == (0,):
            continue
        qs = tuple(sorted(rng.sample(TARGET_POOL, m), key=as_exponent))
        targets.append((ks, qs))
    return targets


def check_targets(targets: Sequence[Tuple[Sequence[int], Sequence]], beta=1,
                  progress: bool = False) -> CorpusResult:
    result = CorpusResult("targets")
    for ks, qs in _progress(targets, "targets", progress):
        target = build_target_snake(ks, qs, beta)
        got = _profile_of(target.family)
        if got != target.expected:
            result.fail(f"ks={list(ks)} qs={[str(q) for q in qs]}: {got} vs {target.expected}")
        result.checked += 1
    return result


def nonsnake_profile(k: int, beta, alphas: Sequence) -> RankProfile:
    """[β, α₁)에서 k, [α_i, α_{i+1})에서 k − i, [α_k, ∞]에서 0."""
    alphas = [as_exponent(a) for a in alphas]
    cases = [(ONE, beta, 0), (beta, alphas[0], k)]
    for i in range(1, k + 1):
        hi = alphas[i] if i < k else INF
        cases.append((alphas[i - 1], hi, k - i))
    return profile_from_cases(cases)


def nonsnake_tord_violations(family: ArcFamily, k: int, beta, alphas: Sequence) -> List[str]:
    """대칭 δ 쌍만 α_i, 나머지 δ·σ 쌍은 β."""
    beta = as_exponent(beta)
    alphas = [as_exponent(a) for a in alphas]
    m = 2 * k + 1
    out = []
    for x in family.names:
        for y in family.names:
            if x >= y:
                continue
            want = beta
            if x.startswith("delta") and y.startswith("delta"):
                i, j = int(x[5:]), int(y[5:])
                if i + j == 2 * k + 2:
                    want = alphas[min(i, j) - 1]
            got = family.tord(x, y)
            if got != want:
                out.append(f"tord({x}, {y}) = {got}, expected {want}")
    if len(family.names) != 2 * m - 1:
        out.append(f"{len(family.names)} arcs, expected {2 * m - 1}")
    return out


def check_nonsnake(ks: Iterable[int] = range(2, 5), beta="3/2",
                   progress: bool = False) -> CorpusResult:
    result = CorpusResult("nonsnake")
    beta = as_exponent(beta)
    for k in _progress(list(ks), "nonsnake", progress):
        alphas = [beta.fraction + Fraction(1, 2) * (i + 1) for i in range(k)]
        family = realize_nonsnake_bubble(k, beta, alphas)
        for problem in nonsnake_tord_violations(family, k, beta, alphas):
            result.fail(f"k={k}: {problem}")
        got = _profile_of(family)
        want = nonsnake_profile(k, beta, alphas)
        if got != want:
            result.fail(f"k={k}: {got} vs {want}")
        result.checked += 1
    return result


def snake_names(max_length: int = 10) -> List[Tuple[str, ...]]:
    """글자마다 정확히 두 번 나오는 정규 snake name 전부 (길이 ≤ max_length)."""
    names = []

    def grow(word: List[str], counts: Dict[str, int]):
        if len(word) >= 4 and all(n == 2 for n in counts.values()):
            names.append(tuple(word))
        if 2 * (len(counts) + 1) <= max_length:
            new = letter(len(counts) + 1)
            grow(word + [new], dict(counts, **{new: 1}))
        for w, n in counts.items():
            if n == 1 and (not word or word[-1] != w):
                grow(word + [w], dict(counts, **{w: 2}))

    grow([], {})
    return sorted(names, key=lambda w: (len(w), w))


def check_snake_names(names: Sequence[Sequence[str]], beta="3/2", alpha=3,
                      progress: bool = False) -> CorpusResult:
    result = CorpusResult("snake_names")
    for word in _progress(names, "snake names", progress):
        spec = SnakeSpec.uniform(word, beta, alpha)
        try:
            got = _profile_of(realize_snake(spec))
        except MdhError as exc:
            result.fail(f"{''.join(word)}: {exc}")
            continue
        if got != mdh1_basic_snake(spec):
            result.fail(f"{''.join(word)}: {got}")
        result.checked += 1
    return result


def check_certificates(rng: random.Random, count: int, max_length: int = 8,
                       progress: bool = False) -> CorpusResult:
    """같은 이름, 같은 spectrum의 두 snake는 guaranteed이고 프로파일도 같다."""
    result = CorpusResult("certificates")
    names = snake_names(max_length)
    for i in _progress(range(count), "certificates", progress):
        word = rng.choice(names)
        beta = rng.choice(["1", "3/2"])
        exps = {w: rng.choice(NODE_POOL) for w in sorted(set(word))}
        spec = SnakeSpec(as_exponent(beta), word, {w: {q} for w, q in exps.items()})
        s1, s2 = snake_surface(spec), snake_surface(spec)
        verdict = weak_equiv_same_homology(s1, s2)
        if not verdict.guaranteed:
            result.fail(f"pair #{i} ({''.join(word)}): {verdict.reasons[0]}")
        elif outer_profile(s1.model, workers=1) != outer_profile(s2.model, workers=1):
            result.fail(f"pair #{i} ({''.join(word)}): guaranteed but profiles differ")
        result.checked += 1
    return result


def numeric_families() -> Dict[str, ArcFamily]:
    """수치 tord 검사에 쓰는 실현 예."""
    return {
        "w2": realize_snake(SnakeSpec.uniform(make_gluing_word(2), 1, 2)),
        "bubble": realize_bubble_snake(1, 2),
        "horn": realize_horn("3/2"),
        "nonsnake": realize_nonsnake_bubble(2, 1, [2, 3]),
        "spectra": realize_snake_spectra(3, 1, assignment_from_sizes(3, [2, 3], [2, 1])),
        "weak": realize_snake_nodes(WEAK_WORD, 1, {w: 2 for w in set(WEAK_WORD)},
                                    [SegmentContact(2, 6, ("2", "3"))]),
    }


def check_numeric(families: Optional[Dict[str, ArcFamily]] = None,
                  radii: Optional[Sequence[float]] = None,
                  progress: bool = False) -> CorpusResult:
    """모든 arc 쌍에서 |수치 추정 − 기호 tord| ≤ 0.05."""
    result = CorpusResult("numeric")
    families = families if families is not None else numeric_families()
    radii = radii if radii is not None else get_settings().numeric_radii
    for name, family in _progress(list(families.items()), "numeric", progress):
        for i in range(len(family.arcs)):
            for j in range(i + 1, len(family.arcs)):
                symbolic = family.tord(family.names[i], family.names[j])
                if symbolic.is_infinite:
                    continue
                estimate = tord_numeric(family.arcs[i], family.arcs[j], radii)
                if abs(estimate - float(symbolic)) > NUMERIC_TOLERANCE:
                    result.fail(f"{name} ({family.names[i]}, {family.names[j]}): "
                                f"estimate {estimate:.4f}, symbolic {symbolic}")
                result.checked += 1
    return result


def run_corpora(names: Optional[Sequence[str]] = None, seed: Optional[int] = None,
                count: int = 100, max_length: int = 10,
                progress: bool = False) -> List[CorpusResult]:
    """고른 코퍼스를 차례로 돌린다. seed가 없으면 설정값."""
    names = list(names) if names else list(CORPORA)
    unknown = [n for n in names if n not in CORPORA]
    if unknown:
        raise InputError(f"unknown corpora {unknown}; choose from {list(CORPORA)}")
    seed = get_settings().seed if seed is None else seed
    rng = random.Random(seed)
    logging.info(f"validate: corpora {names}, seed {seed}, count {count}")

    runners = {
        "complexes": lambda: check_complexes(rng, count, progress),
        "subdivisions": lambda: check_subdivisions(rng, count, progress=progress),
        "staircases": lambda: check_staircases(progress=progress),
        "spectra": lambda: check_spectra(progress=progress),
        "targets": lambda: check_targets(random_targets(rng, 20), progress=progress),
        "nonsnake": lambda: check_nonsnake(progress=progress),
        "snake_names": lambda: check_snake_names(snake_names(max_length), progress=progress),
        "certificates": lambda: check_certificates(rng, count, progress=progress),
        "numeric": lambda: check_numeric(progress=progress),
    }
    return [runners[n]() for n in names]
