# -*- coding: utf-8 -*-
"""
Inner 거리 MD-Homology: b-contraction (A_b, B_b), b-reduction, rank 공식.

차수 1의 rank는 canonical complex를 b-reduce한 결과의 e − v + k이다.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Tuple

import networkx as nx

from src.config import get_settings
from src.errors import DomainError, PreconditionError
from src.exponents import Exponent, RankProfile, as_exponent, sample_profile
from src.holder_complex import Edge, HolderComplex, ensure_valid, link_betti, simplify

try:
    from src.utils import fresh_name, natural_key
except ImportError:
    from utils import fresh_name, natural_key


def _above(sigma: Fraction, b: Exponent) -> bool:
    return not b.is_infinite and sigma > b.fraction


def cut_edges(c: HolderComplex) -> List[Edge]:
    """cut-edge 목록 (간선 key 순). 평행 간선은 cut-edge가 아니다."""
    simple = nx.Graph()
    simple.add_nodes_from(c.vertices)
    simple.add_edges_from((e.u, e.v) for e in c.edges)
    bridges = {frozenset(pair) for pair in nx.bridges(simple)}
    result = [e for e in c.edges
              if frozenset((e.u, e.v)) in bridges and len(c.between(e.u, e.v)) == 1]
    return sorted(result, key=lambda e: natural_key(e.key))


def _merge(c: HolderComplex, u, v, drop) -> Tuple[str, List[Edge], List[str]]:
    w = fresh_name(set(c.vertices), "w")
    vertices = [x for x in c.vertices if x not in (u, v)] + [w]
    edges = []
    for e in c.edges:
        if e.key in drop:
            continue
        a = w if e.u in (u, v) else e.u
        z = w if e.v in (u, v) else e.v
        edges.append(Edge(e.key, a, z, e.sigma))
    return w, edges, vertices


def apply_A_b(c: HolderComplex, key, b) -> HolderComplex:
    """σ ≤ b인 cut-edge의 양 끝을 새 정점 w로 합친다."""
    b = as_exponent(b)
    e = c.edge(key)
    if _above(e.sigma, b):
        raise PreconditionError(f"A_b needs sigma({key}) <= {b}")
    if e.key not in {x.key for x in cut_edges(c)}:
        raise PreconditionError(f"{key} is not a cut-edge")
    _, edges, vertices = _merge(c, e.u, e.v, {e.key})
    return HolderComplex(tuple(vertices), tuple(edges))


def apply_B_b(c: HolderComplex, u, v, b) -> HolderComplex:
    """u, v를 합치고 σ > b인 u–v 간선을 지운다. 나머지 u–v 간선은 w–w_i 이중 간선이 된다."""
    b = as_exponent(b)
    joining = c.between(u, v)
    high = [e for e in joining if _above(e.sigma, b)]
    if not high:
        raise PreconditionError(f"B_b needs an edge between {u} and {v} with sigma > {b}")
    low = [e for e in joining if not _above(e.sigma, b)]
    w, edges, vertices = _merge(c, u, v, {e.key for e in joining})

    keys = {e.key for e in c.edges}
    for e in sorted(low, key=lambda x: natural_key(x.key)):
        wi = fresh_name(set(vertices), f"{w}_")
        vertices.append(wi)
        k1 = fresh_name(keys, "e")
        keys.add(k1)
        k2 = fresh_name(keys, "e")
        keys.add(k2)
        edges.append(Edge(k1, w, wi, e.sigma))
        edges.append(Edge(k2, w, wi, e.sigma))
    return HolderComplex(tuple(vertices), tuple(edges))


def _potential(c: HolderComplex, b: Exponent) -> int:
    return len(cut_edges(c)) + sum(1 for e in c.edges if _above(e.sigma, b))


@dataclass(frozen=True)
class ReductionStep:
    operation: str
    site: Tuple[str, ...]
    complex: HolderComplex


@dataclass
class ReductionTrace:
    b: Exponent
    steps: List[ReductionStep] = field(default_factory=list)

    def to_records(self) -> List[dict]:
        return [{"operation": s.operation, "site": list(s.site), "complex": s.complex.to_mapping()}
                for s in self.steps]


def _b_site(c: HolderComplex, b: Exponent) -> Optional[Tuple[str, str]]:
    order = sorted(c.vertices, key=natural_key)
    for i, u in enumerate(order):
        for v in order[i + 1:]:
            if any(_above(e.sigma, b) for e in c.between(u, v)):
                return u, v
    return None


def _a_site(c: HolderComplex, b: Exponent) -> Optional[Edge]:
    for e in cut_edges(c):
        if not _above(e.sigma, b):
            return e
    return None


def is_b_reduced(c: HolderComplex, b) -> bool:
    b = as_exponent(b)
    return _b_site(c, b) is None and _a_site(c, b) is None


def b_reduce(c: HolderComplex, b) -> Tuple[HolderComplex, ReductionTrace]:
    """B_b 자리를 먼저, 그다음 A_b 자리를 처리해 b-reduced complex를 얻는다."""
    b = as_exponent(b)
    ensure_valid(c)
    trace = ReductionTrace(b)
    potential = _potential(c, b)
    while True:
        site = _b_site(c, b)
        if site is not None:
            c = apply_B_b(c, site[0], site[1], b)
            trace.steps.append(ReductionStep("B_b", site, c))
        else:
            edge = _a_site(c, b)
            if edge is None:
                break
            c = apply_A_b(c, edge.key, b)
            trace.steps.append(ReductionStep("A_b", (edge.key, edge.u, edge.v), c))
        after = _potential(c, b)
        if after >= potential:
            raise RuntimeError(f"b-reduction stalled at f_A + f_B = {after}")
        potential = after
    logging.debug(f"b_reduce(b={b}): {len(trace.steps)} steps")
    return c, trace


def mdh_inner(c: HolderComplex, b, degree: int = 1) -> int:
    """inner 거리 b-MD-Homology의 rank."""
    if degree < 0:
        raise DomainError(f"degree must be non-negative, got {degree}")
    b = as_exponent(b)
    ensure_valid(c)
    if degree >= 2:
        return 0
    k, b1 = link_betti(c)
    if degree == 0:
        return k
    if b.is_infinite:
        return b1
    reduced, _ = b_reduce(simplify(c), b)
    return link_betti(reduced)[1]


def inner_profile(c: HolderComplex, degree: int = 1, workers: Optional[int] = None) -> RankProfile:
    """간선 라벨을 후보 breakpoint로 삼아 프로파일을 만든다."""
    ensure_valid(c)
    if degree < 0:
        raise DomainError(f"degree must be non-negative, got {degree}")
    if workers is None:
        workers = get_settings().workers
    labels = {e.sigma for e in c.edges}
    return sample_profile(lambda b: mdh_inner(c, b, degree), labels, workers=workers)
