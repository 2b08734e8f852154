# -*- coding: utf-8 -*-
"""
Quotient oracle: b-동치 병합으로 라벨 그래프를 몫으로 보내고 cycle rank를 센다.

두 거리(inner / outer) 모두의 독립 검증용으로 쓰인다.
"""

from dataclasses import dataclass, field
from typing import Dict, Optional, Sequence, Tuple

from networkx.utils import UnionFind

from src.errors import InputError
from src.exponents import INF, Exponent, as_exponent

try:
    from src.utils import natural_key
except ImportError:
    from utils import natural_key


@dataclass(frozen=True)
class QuotientInput:
    vertices: Tuple[str, ...]
    edges: Tuple[Tuple[str, str, Exponent], ...]
    merges: Tuple[Tuple[str, str], ...] = ()
    matrix: Optional[Dict[Tuple[str, str], Exponent]] = field(default=None, compare=False)
    identify_parallel: bool = False

    @classmethod
    def from_complex(cls, c, merges=()) -> "QuotientInput":
        edges = tuple((e.u, e.v, as_exponent(e.sigma)) for e in c.edges)
        return cls(tuple(c.vertices), edges, tuple(merges))


@dataclass(frozen=True)
class QuotientResult:
    rank: int
    components: int
    classes: Dict[str, str] = field(compare=False, default_factory=dict)


def check_ultrametric(vertices: Sequence[str], matrix: Dict[Tuple[str, str], Exponent]) -> None:
    """tord(a,c) ≥ min(tord(a,b), tord(b,c))를 확인한다."""
    def entry(a, b):
        if a == b:
            return INF
        if (a, b) in matrix:
            return matrix[(a, b)]
        if (b, a) in matrix:
            return matrix[(b, a)]
        raise InputError(f"tord matrix has no entry for ({a}, {b})")

    for a in vertices:
        for b in vertices:
            if a == b:
                continue
            ab = entry(a, b)
            if ab != entry(b, a):
                raise InputError(f"tord matrix is not symmetric at ({a}, {b})")
            for c in vertices:
                if c in (a, b):
                    continue
                if entry(a, c) < min(ab, entry(b, c)):
                    raise InputError(f"ultrametric inequality fails on ({a}, {b}, {c})")


def quotient_rank(q: QuotientInput, b) -> QuotientResult:
    """
    1) merge 관계의 폐포와 라벨 > b 간선의 양 끝을 합친다.
    2) 라벨 > b 간선은 (루프가 되었어도) 지운다.
    3) 라벨 ≤ b 간선은 양 끝이 합쳐졌으면 루프로 남아 rank에 들어간다.
    4) rank = e′ − v′ + k′.
    """
    b = as_exponent(b)
    known = set(q.vertices)
    for u, v in q.merges:
        if u not in known or v not in known:
            raise InputError(f"merge ({u}, {v}) names an unknown vertex")
    if q.matrix is not None:
        check_ultrametric(q.vertices, q.matrix)

    uf = UnionFind(q.vertices)
    for u, v in q.merges:
        uf.union(u, v)
    kept = []
    for u, v, label in q.edges:
        if u not in known or v not in known:
            raise InputError(f"edge ({u}, {v}) names an unknown vertex")
        if label > b:
            uf.union(u, v)
        else:
            kept.append((u, v))

    # 대표 = 가장 작은 정점 이름
    rep = {}
    for group in uf.to_sets():
        smallest = min(group, key=natural_key)
        for w in group:
            rep[w] = smallest

    retained = [(rep[u], rep[v]) for u, v in kept]
    if q.identify_parallel:
        retained = sorted({tuple(sorted(pair, key=natural_key)) for pair in retained})

    classes = sorted(set(rep.values()), key=natural_key)
    components = UnionFind(classes)
    for u, v in retained:
        components.union(u, v)
    k = len(list(components.to_sets())) if classes else 0
    rank = len(retained) - len(classes) + k
    return QuotientResult(rank, k, rep)
