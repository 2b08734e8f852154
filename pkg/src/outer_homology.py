# -*- coding: utf-8 -*-
"""
Outer 거리 MD-Homology.

링크를 arc 경로 (LinkModel)로 이산화하고 tord 행렬로 b-동치를 정한 뒤 quotient oracle로
rank를 센다. snake / bubble / horn 프로파일, 실현 정리의 목표 snake, α-multiplicity,
subsegment, 그리고 weak outer equivalence에 대한 같은-호몰로지 증명서를 제공한다.
"""

import logging
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Mapping, Optional, Sequence, Tuple

import pandas as pd

from src.config import get_settings
from src.errors import DomainError, InputError, PreconditionError
from src.exponents import (INF, ONE, Exponent, RankProfile, as_exponent, profile_from_cases,
                           sample_profile)
from src.quotient import QuotientInput, check_ultrametric, quotient_rank
from src.realization import (ArcFamily, SegmentContact, ZoneRef,
                             assignment_from_sizes, realize_bubble_snake, realize_snake_nodes,
                             realize_snake_spectra, tord_symbolic)
from src.snakes import SnakeSpec, make_gluing_word, same_snake_name


ELEMENTARY_PAIR = ("elementary-pair: every arc of the triangle bounded by consecutive link arcs "
                   "is b-equivalent to an endpoint for b below the edge exponent")
WORD_PROXY = ("weak outer equivalence is checked by a word-level proxy: same snake name up to "
              "renaming and reversal, with the caller's zone correspondence")


@dataclass(frozen=True)
class LinkModel:
    """arc 경로와 전체 tord 행렬."""

    arcs: Tuple[str, ...]
    beta: Exponent
    matrix: Tuple[Tuple[Exponent, ...], ...]
    closed: bool = False
    zones: Tuple[ZoneRef, ...] = ()
    assumptions: Tuple[str, ...] = ()

    def __post_init__(self):
        n = len(self.arcs)
        if n == 0:
            raise InputError("a link model needs at least one arc")
        if len(set(self.arcs)) != n:
            raise InputError("arc names must be unique")
        if len(self.matrix) != n or any(len(row) != n for row in self.matrix):
            raise InputError(f"tord matrix must be {n}x{n}")
        if self.closed and n < 2:
            raise InputError("a closed link needs at least two arcs")
        for i in range(n):
            if not self.matrix[i][i].is_infinite:
                raise InputError(f"diagonal entry {i} must be inf")
            for j in range(i + 1, n):
                if self.matrix[i][j] != self.matrix[j][i]:
                    raise InputError(f"tord matrix is not symmetric at ({self.arcs[i]}, {self.arcs[j]})")
                if self.matrix[i][j] < self.beta:
                    raise InputError(f"tord({self.arcs[i]}, {self.arcs[j]}) is below beta={self.beta}")
        taken = set()
        for z in self.zones:
            if z.stop >= n:
                raise InputError(f"zone {z.name} runs past the last arc")
            if taken & set(z.indices):
                raise InputError(f"zone {z.name} overlaps another zone")
            taken |= set(z.indices)

    @property
    def edge_exponents(self) -> Tuple[Exponent, ...]:
        n = len(self.arcs)
        edges = [self.matrix[i][i + 1] for i in range(n - 1)]
        if self.closed:
            edges.append(self.matrix[n - 1][0])
        return tuple(edges)

    def entry(self, i: int, j: int) -> Exponent:
        return self.matrix[i][j]

    def zone(self, name) -> ZoneRef:
        for z in self.zones:
            if z.name == name:
                return z
        raise InputError(f"no zone named {name!r}")

    def check_ultrametric(self) -> None:
        entries = {(a, b): self.matrix[i][j]
                   for i, a in enumerate(self.arcs) for j, b in enumerate(self.arcs) if i != j}
        check_ultrametric(self.arcs, entries)

    @classmethod
    def from_mapping(cls, data: dict) -> "LinkModel":
        """직접 작성한 모델 JSON. ultrametric을 검사하고 elementary-pair 가정을 기록한다."""
        try:
            arcs = tuple(str(a) for a in data["arcs"])
            beta = Exponent.parse(data["beta"])
            matrix = tuple(tuple(Exponent.parse(x) for x in row) for row in data["matrix"])
        except KeyError as exc:
            raise InputError(f"model JSON is missing {exc}") from exc
        zones = tuple(ZoneRef(z["kind"], int(z["span"][0]), int(z["span"][1]), z["name"], z.get("node"))
                      for z in data.get("zones", []))
        assumptions = tuple(data.get("assumptions", []))
        if ELEMENTARY_PAIR not in assumptions:
            assumptions += (ELEMENTARY_PAIR,)
        model = cls(arcs, beta, matrix, bool(data.get("closed", False)), zones, assumptions)
        declared = data.get("edge_exponents")
        if declared is not None:
            if tuple(Exponent.parse(x) for x in declared) != model.edge_exponents:
                raise InputError("edge_exponents disagree with the consecutive matrix entries")
        model.check_ultrametric()
        return model

    def to_mapping(self) -> dict:
        return {
            "beta": str(self.beta),
            "arcs": list(self.arcs),
            "closed": self.closed,
            "edge_exponents": [str(e) for e in self.edge_exponents],
            "matrix": [[str(x) for x in row] for row in self.matrix],
            "zones": [z.to_mapping() for z in self.zones],
            "assumptions": list(self.assumptions),
        }


def family_zones(family: ArcFamily) -> Tuple[ZoneRef, ...]:
    """기록된 zone이 없으면 arc 하나하나를 nodal zone으로 본다."""
    if family.zones:
        return family.zones
    return tuple(ZoneRef("nodal", i, i, f"Z{i + 1}") for i in range(len(family.arcs)))


def link_model_from_arcs(arcs, beta=None, closed: Optional[bool] = None) -> LinkModel:
    """arc 족 (또는 (이름, arc) 목록)에서 tord_symbolic으로 행렬을 채운다."""
    zones: Tuple[ZoneRef, ...] = ()
    if isinstance(arcs, ArcFamily):
        names, items = arcs.names, arcs.arcs
        beta = arcs.beta if beta is None else beta
        closed = arcs.closed if closed is None else closed
        zones = family_zones(arcs)
    else:
        pairs = [a if isinstance(a, tuple) else (f"a{i}", a) for i, a in enumerate(arcs, start=1)]
        names = tuple(name for name, _ in pairs)
        items = tuple(arc for _, arc in pairs)
    if beta is None:
        raise InputError("beta is required")
    beta = as_exponent(beta)
    matrix = tuple(tuple(tord_symbolic(a, b) for b in items) for a in items)
    for i in range(len(items) - 1):
        if matrix[i][i + 1] < beta:
            raise InputError(f"consecutive arcs {names[i]}, {names[i + 1]} have tord below beta")
    return LinkModel(tuple(names), beta, matrix, bool(closed), zones)


def link_quotient(model: LinkModel, b: Exponent):
    n = len(model.arcs)
    merges = tuple((model.arcs[i], model.arcs[j]) for i in range(n) for j in range(i + 1, n)
                   if model.matrix[i][j] > b or model.matrix[i][j].is_infinite)
    edges = tuple((model.arcs[i], model.arcs[i + 1], model.matrix[i][i + 1]) for i in range(n - 1))
    return quotient_rank(QuotientInput(model.arcs, edges, merges, identify_parallel=True), b)


def outer_rank(model: LinkModel, b) -> int:
    """b > tord인 쌍을 합친 몫 그래프의 cycle rank."""
    b = as_exponent(b)
    rank = link_quotient(model, b).rank
    if model.closed and not model.edge_exponents[-1] > b:
        rank += 1
    return rank


def outer_profile(model: LinkModel, degree: int = 1, workers: Optional[int] = None) -> RankProfile:
    if degree < 0:
        raise DomainError(f"degree must be non-negative, got {degree}")
    if degree >= 2:
        return RankProfile.constant(0)
    if workers is None:
        workers = get_settings().workers
    candidates = {model.beta} | {x for row in model.matrix for x in row if not x.is_infinite}
    if degree == 0:
        return sample_profile(lambda b: link_quotient(model, b).components, candidates, workers)
    return sample_profile(lambda b: outer_rank(model, b), candidates, workers)


@dataclass(frozen=True)
class TargetSnake:
    beta: Exponent
    ks: Tuple[int, ...]
    qs: Tuple[Exponent, ...]
    family: ArcFamily
    expected: RankProfile
    spec: Optional[SnakeSpec] = None
    group_sizes: Tuple[int, ...] = ()


def build_target_snake(ks: Sequence[int], qs: Sequence, beta) -> TargetSnake:
    """
    Z^{k_m} on [β, q₁), Z^{k_{m−1}} on [q₁, q₂), …, Z^{k₁} on [q_{m−1}, q_m)인 snake를 만든다.

    k₁ = 0이면 마지막 구간이 0이 되므로 (k₁, q_m)을 떼고 만든다.
    """
    beta = as_exponent(beta)
    ks = tuple(int(k) for k in ks)
    qs = tuple(as_exponent(q) for q in qs)
    if not ks or len(ks) != len(qs):
        raise PreconditionError("ks and qs must be non-empty and of equal length")
    if ks[0] < 0 or any(not a < b for a, b in zip(ks, ks[1:])):
        raise PreconditionError(f"ks must be strictly increasing non-negative integers: {ks}")
    if not qs[0] > beta or any(not a < b for a, b in zip(qs, qs[1:])) or qs[-1].is_infinite:
        raise PreconditionError("qs must be finite, strictly increasing and exceed beta")

    m = len(ks)
    cases = [(ONE, beta, 0), (beta, qs[0], ks[-1])]
    for l in range(1, m):
        cases.append((qs[l - 1], qs[l], ks[m - l - 1]))
    cases.append((qs[-1], INF, 0))
    expected = profile_from_cases(cases)

    rk, rq = ks, qs
    if rk[0] == 0:
        rk, rq = rk[1:], rq[:-1]
    if not rk:
        raise PreconditionError("the zero profile needs no snake; ks = (0,) is not realized")

    if rk[-1] == 1:
        family = realize_bubble_snake(beta, rq[0])
        return TargetSnake(beta, ks, qs, family, expected, group_sizes=(1,))

    k, n = rk[-1], len(rk)
    sizes = [rk[n - l] - rk[n - l - 1] for l in range(1, n)] + [rk[0]]
    assignment = assignment_from_sizes(k, rq, sizes)
    family = realize_snake_spectra(k, beta, assignment)
    spec = SnakeSpec(beta, make_gluing_word(k), {w: {q} for w, q in assignment.items()})
    logging.debug(f"target snake: k={k}, group sizes {sizes}")
    return TargetSnake(beta, ks, qs, family, expected, spec, tuple(sizes))


def alpha_multiplicity(model: LinkModel, arc: int, alpha) -> int:
    """tord(arc, γ′) ≥ α인 arc들이 링크 경로 위에서 이루는 연결 성분 수."""
    alpha = as_exponent(alpha)
    if alpha < model.beta:
        raise DomainError(f"alpha={alpha} is below beta={model.beta}")
    n = len(model.arcs)
    if not 0 <= arc < n:
        raise InputError(f"arc index {arc} out of range")
    inside = [model.matrix[arc][j] >= alpha for j in range(n)]
    runs = sum(1 for j in range(n) if inside[j] and (j == 0 or not inside[j - 1]))
    if model.closed and runs > 1 and inside[0] and inside[-1]:
        runs -= 1
    return runs


def zone_tord(model: LinkModel, z: ZoneRef, z2: ZoneRef) -> Exponent:
    return max(model.matrix[i][j] for i in z.indices for j in z2.indices)


def zone_multiplicity(model: LinkModel, z: ZoneRef, z2: ZoneRef, alpha) -> int:
    """zone 쌍의 α-multiplicity: tord(Z, Z′) ≥ α이면 2."""
    return 2 if zone_tord(model, z, z2) >= as_exponent(alpha) else 1


def _check_pair(z: ZoneRef, z2: ZoneRef):
    if z.kind != z2.kind:
        raise PreconditionError(f"zones {z.name} ({z.kind}) and {z2.name} ({z2.kind}) differ in kind")
    if set(z.indices) & set(z2.indices):
        raise PreconditionError(f"zones {z.name} and {z2.name} overlap")


def _contact_values(model: LinkModel, z: ZoneRef, z2: ZoneRef) -> List[Exponent]:
    return [max(model.matrix[i][j] for j in z2.indices) for i in z.indices]


def subsegment_exponents(model: LinkModel, z: ZoneRef, z2: ZoneRef) -> FrozenSet[Exponent]:
    """E^α_{Z,Z′} ≠ ∅ 인 α들 (β보다 큰 값만)."""
    _check_pair(z, z2)
    return frozenset(v for v in _contact_values(model, z, z2) if v > model.beta)


def check_simple_contact(model: LinkModel, z: ZoneRef, z2: ZoneRef) -> bool:
    """Z를 따라 tord(γ, Z′) 값이 사이값 조건을 만족하는지 (모든 세 점에 대해)."""
    _check_pair(z, z2)
    values = [v for v in _contact_values(model, z, z2) if v > model.beta]
    if not values:
        raise PreconditionError(f"zones {z.name} and {z2.name} have no subsegments")
    n = len(values)
    for i in range(n):
        for l in range(i + 2, n):
            low, high = min(values[i], values[l]), max(values[i], values[l])
            if any(not low <= values[j] <= high for j in range(i + 1, l)):
                return False
    return True


@dataclass(frozen=True)
class SnakeSurface:
    spec: SnakeSpec
    model: LinkModel

    @property
    def zones(self) -> Tuple[ZoneRef, ...]:
        return self.model.zones


def snake_surface(spec: SnakeSpec, segment_contacts: Sequence[SegmentContact] = ()) -> SnakeSurface:
    """노드마다 singleton spectrum을 가진 snake를 실현해 zone 데이터와 함께 돌려준다."""
    family = realize_snake_nodes(spec.word, spec.beta, spec.node_exponents(), segment_contacts)
    return SnakeSurface(spec, link_model_from_arcs(family))


@dataclass(frozen=True)
class Verdict:
    verdict: str
    reasons: Tuple[str, ...]
    assumptions: Tuple[str, ...]
    failing_pair: Optional[Tuple[str, str]] = None

    @property
    def guaranteed(self) -> bool:
        return self.verdict == "guaranteed-equal"

    def to_mapping(self) -> dict:
        data = {"verdict": self.verdict, "reasons": list(self.reasons),
                "assumptions": list(self.assumptions)}
        if self.failing_pair is not None:
            data["failing_pair"] = list(self.failing_pair)
        return data


def _correspondence(s1: SnakeSurface, s2: SnakeSurface,
                    mapping: Optional[Mapping[str, str]]) -> Dict[str, str]:
    names1 = [z.name for z in s1.zones]
    names2 = [z.name for z in s2.zones]
    if mapping is None:
        if sorted(names1) != sorted(names2):
            raise InputError("zone names differ; a zone correspondence is required")
        mapping = {n: n for n in names1}
    mapping = dict(mapping)
    if sorted(mapping) != sorted(names1) or sorted(mapping.values()) != sorted(names2):
        raise InputError("the correspondence is not a bijection between the zones")
    for a, b in mapping.items():
        if s1.model.zone(a).kind != s2.model.zone(b).kind:
            raise InputError(f"zones {a} and {b} differ in kind")
    return mapping


def _require_simple(s: SnakeSurface):
    for z in s.zones:
        for z2 in s.zones:
            if z is z2 or z.kind != z2.kind:
                continue
            if subsegment_exponents(s.model, z, z2) and not check_simple_contact(s.model, z, z2):
                raise PreconditionError(f"zones {z.name}, {z2.name} do not have simple contact")


def weak_equiv_same_homology(s1: SnakeSurface, s2: SnakeSurface,
                             correspondence: Optional[Mapping[str, str]] = None) -> Verdict:
    """
    같은 MD-Homology가 보장되는지 판정한다.

    not-guaranteed는 호몰로지가 다르다는 뜻이 아니다. 이름이 다르면 zone 대응은 검사하지 않는다.
    """
    _require_simple(s1)
    _require_simple(s2)
    assumptions = [WORD_PROXY]
    for a in s1.model.assumptions + s2.model.assumptions:
        if a not in assumptions:
            assumptions.append(a)
    assumptions = tuple(assumptions)

    if not same_snake_name(s1.spec.word, s2.spec.word):
        k1, m1 = s1.spec.counts
        k2, m2 = s2.spec.counts
        reason = (f"snake names differ: {''.join(s1.spec.word)} ({k1} nodes, length {m1}) vs "
                  f"{''.join(s2.spec.word)} ({k2} nodes, length {m2})")
        return Verdict("not-guaranteed", (reason,), assumptions)

    mapping = _correspondence(s1, s2, correspondence)
    for z in s1.zones:
        for z2 in s1.zones:
            if z is z2 or z.kind != z2.kind:
                continue
            w, w2 = s2.model.zone(mapping[z.name]), s2.model.zone(mapping[z2.name])
            e1 = subsegment_exponents(s1.model, z, z2)
            e2 = subsegment_exponents(s2.model, w, w2)
            if e1 != e2:
                fmt = lambda s: "{" + ", ".join(str(x) for x in sorted(s)) + "}"
                reason = (f"subsegment exponents of ({z.name}, {z2.name}) are {fmt(e1)} but "
                          f"({w.name}, {w2.name}) has {fmt(e2)}")
                return Verdict("not-guaranteed", (reason,), assumptions, (z.name, z2.name))
    return Verdict("guaranteed-equal",
                   ("same snake name and equal subsegment exponents on every zone pair",),
                   assumptions)


def matrix_to_frame(model: LinkModel) -> pd.DataFrame:
    """tord 행렬 CSV용 표."""
    return pd.DataFrame([[str(x) for x in row] for row in model.matrix],
                        index=list(model.arcs), columns=list(model.arcs))
