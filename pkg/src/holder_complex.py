# -*- coding: utf-8 -*-
"""
Hölder complex: 간선마다 지수 라벨 σ를 가진 유한 멀티그래프 (루프 없음).

평행 간선은 고유 key로 구분된다. 모든 연산은 새 HolderComplex를 돌려주는 순수 함수이다.
"""

import logging
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import networkx as nx
from networkx.algorithms.isomorphism import MultiGraphMatcher

from src.config import get_settings
from src.errors import CapacityError, ConsistencyError, DegeneracyError, InputError
from src.exponents import Exponent

try:
    from src.utils import fresh_name, natural_key, normalize_identifier
except ImportError:
    from utils import fresh_name, natural_key, normalize_identifier


@dataclass(frozen=True)
class Edge:
    key: str
    u: str
    v: str
    sigma: Fraction

    def other(self, w):
        return self.v if w == self.u else self.u

    def touches(self, w):
        return w == self.u or w == self.v


@dataclass(frozen=True)
class HolderComplex:
    vertices: Tuple[str, ...]
    edges: Tuple[Edge, ...]

    @classmethod
    def from_edges(cls, edges: Iterable[Tuple[str, str, object]],
                   vertices: Optional[Sequence[str]] = None) -> "HolderComplex":
        """(u, v, σ) 목록에서 complex를 만든다. 간선 key는 e1, e2, ..."""
        built = []
        for i, (u, v, sigma) in enumerate(edges, start=1):
            built.append(Edge(f"e{i}", str(u), str(v), _label(sigma)))
        if vertices is None:
            seen = []
            for e in built:
                for w in (e.u, e.v):
                    if w not in seen:
                        seen.append(w)
            vertices = seen
        return cls(tuple(str(w) for w in vertices), tuple(built))

    @classmethod
    def from_mapping(cls, data: dict) -> "HolderComplex":
        try:
            vertices = [normalize_identifier(w) for w in data["vertices"]]
            raw_edges = data["edges"]
        except (KeyError, TypeError) as exc:
            raise InputError(f"complex JSON is missing {exc}") from exc
        edges = []
        for i, item in enumerate(raw_edges, start=1):
            try:
                key = str(item.get("key") or f"e{i}")
                edges.append(Edge(key, normalize_identifier(item["u"]),
                                  normalize_identifier(item["v"]), _label(item["sigma"])))
            except KeyError as exc:
                raise InputError(f"edge #{i} is missing {exc}") from exc
        return cls(tuple(vertices), tuple(edges))

    def to_mapping(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "edges": [{"key": e.key, "u": e.u, "v": e.v, "sigma": _fmt(e.sigma)} for e in self.edges],
        }

    def edge(self, key) -> Edge:
        for e in self.edges:
            if e.key == key:
                return e
        raise InputError(f"no edge with key {key!r}")

    def incident(self, w) -> List[Edge]:
        return [e for e in self.edges if e.touches(w)]

    def between(self, u, v) -> List[Edge]:
        return [e for e in self.edges if {e.u, e.v} == {u, v} and e.u != e.v]

    def relabel(self, mapping: Dict[str, str]) -> "HolderComplex":
        m = lambda w: mapping.get(w, w)
        return HolderComplex(
            tuple(m(w) for w in self.vertices),
            tuple(Edge(e.key, m(e.u), m(e.v), e.sigma) for e in self.edges),
        )

    def to_networkx(self) -> nx.MultiGraph:
        g = nx.MultiGraph()
        g.add_nodes_from(self.vertices)
        for e in self.edges:
            g.add_edge(e.u, e.v, key=e.key, sigma=e.sigma)
        return g

    def labels(self) -> List[Fraction]:
        return sorted(e.sigma for e in self.edges)


def _label(sigma) -> Fraction:
    if isinstance(sigma, Exponent):
        return sigma.fraction
    if isinstance(sigma, str) and sigma.strip().lower() in {"inf", "∞", "infinity"}:
        raise InputError("edge labels must be finite")
    try:
        return Fraction(sigma)
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise InputError(f"cannot read edge label {sigma!r}") from exc


def _fmt(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


@dataclass(frozen=True)
class Violation:
    kind: str
    detail: str

    def __str__(self):
        return f"{self.kind}: {self.detail}"


def validate(c: HolderComplex) -> List[Violation]:
    """위반 목록을 돌려준다. 빈 목록이면 정상."""
    violations = []
    counts = Counter(c.vertices)
    for w, n in counts.items():
        if n > 1:
            violations.append(Violation("duplicate vertex", w))
    known = set(c.vertices)
    keys = Counter(e.key for e in c.edges)
    for key, n in keys.items():
        if n > 1:
            violations.append(Violation("duplicate edge", key))
    for e in c.edges:
        if e.u == e.v:
            violations.append(Violation("loop", f"{e.key} at {e.u}"))
        if e.sigma < 1:
            violations.append(Violation("label below 1", f"{e.key} has sigma {_fmt(e.sigma)}"))
        for w in (e.u, e.v):
            if w not in known:
                violations.append(Violation("dangling endpoint", f"{e.key} -> {w}"))
    touched = {w for e in c.edges for w in (e.u, e.v)}
    for w in c.vertices:
        if w not in touched:
            violations.append(Violation("isolated vertex", w))
    return violations


def ensure_valid(c: HolderComplex) -> HolderComplex:
    violations = validate(c)
    if violations:
        raise InputError("invalid Hölder complex: " + "; ".join(map(str, violations)), violations)
    return c


class VertexKind(str, Enum):
    LOOP = "loop-vertex"
    NON_CRITICAL = "non-critical"
    CRITICAL = "critical"
    ENDPOINT = "endpoint"


def classify_vertex(c: HolderComplex, v) -> VertexKind:
    if v not in c.vertices:
        raise InputError(f"unknown vertex {v!r}")
    inc = c.incident(v)
    if not inc:
        raise DegeneracyError(f"vertex {v!r} is isolated")
    if len(inc) == 1:
        return VertexKind.ENDPOINT
    if len(inc) >= 3:
        return VertexKind.CRITICAL
    a, b = inc[0].other(v), inc[1].other(v)
    return VertexKind.LOOP if a == b else VertexKind.NON_CRITICAL


def _omega(c: HolderComplex, v) -> HolderComplex:
    e1, e2 = c.incident(v)
    a, b = e1.other(v), e2.other(v)
    key = fresh_name({e.key for e in c.edges}, "e")
    merged = Edge(key, a, b, min(e1.sigma, e2.sigma))
    edges = tuple(e for e in c.edges if e.key not in (e1.key, e2.key)) + (merged,)
    return HolderComplex(tuple(w for w in c.vertices if w != v), edges)


def _delta(c: HolderComplex, v) -> Optional[HolderComplex]:
    e1, e2 = c.incident(v)
    if e1.sigma == e2.sigma:
        return None
    low = min(e1.sigma, e2.sigma)
    edges = tuple(Edge(e.key, e.u, e.v, low) if e.key in (e1.key, e2.key) else e for e in c.edges)
    return HolderComplex(c.vertices, edges)


def simplify(c: HolderComplex) -> HolderComplex:
    """Ω_v / Δ_v를 더 이상 적용할 수 없을 때까지 반복한다 (정점 이름 순)."""
    ensure_valid(c)
    steps = 0
    while True:
        for v in sorted(c.vertices, key=natural_key):
            kind = classify_vertex(c, v)
            if kind is VertexKind.NON_CRITICAL:
                c = _omega(c, v)
                break
            if kind is VertexKind.LOOP:
                reduced = _delta(c, v)
                if reduced is not None:
                    c = reduced
                    break
        else:
            logging.debug(f"simplify: {steps} operations")
            return c
        steps += 1


def subdivide_edge(c: HolderComplex, key, sigma1, sigma2) -> HolderComplex:
    """간선 하나를 새 중점을 지나는 두 간선 (σ1, σ2)으로 나눈다."""
    e = c.edge(key)
    s1, s2 = _label(sigma1), _label(sigma2)
    if min(s1, s2) != e.sigma:
        raise ConsistencyError(
            f"min({_fmt(s1)}, {_fmt(s2)}) must equal the label {_fmt(e.sigma)} of {key}")
    mid = fresh_name(set(c.vertices), "m")
    keys = {x.key for x in c.edges}
    k1 = fresh_name(keys, "e")
    k2 = fresh_name(keys | {k1}, "e")
    edges = []
    for x in c.edges:
        if x.key == key:
            edges.append(Edge(k1, e.u, mid, s1))
            edges.append(Edge(k2, mid, e.v, s2))
        else:
            edges.append(x)
    return HolderComplex(c.vertices + (mid,), tuple(edges))


@dataclass(frozen=True)
class IsomorphismResult:
    isomorphic: bool
    mapping: Optional[Dict[str, str]] = None

    def __bool__(self):
        return self.isomorphic


def _same_labels(d1, d2):
    return sorted(a["sigma"] for a in d1.values()) == sorted(a["sigma"] for a in d2.values())


def is_isomorphic(c1: HolderComplex, c2: HolderComplex,
                  max_vertices: Optional[int] = None) -> IsomorphismResult:
    """라벨과 간선 중복도를 보존하는 그래프 동형을 찾는다."""
    ensure_valid(c1)
    ensure_valid(c2)
    bound = max_vertices if max_vertices is not None else get_settings().max_iso_vertices
    for c in (c1, c2):
        if len(c.vertices) > bound:
            raise CapacityError(f"{len(c.vertices)} vertices exceed the isomorphism bound {bound}")

    if len(c1.vertices) != len(c2.vertices) or len(c1.edges) != len(c2.edges):
        return IsomorphismResult(False)
    if c1.labels() != c2.labels():
        return IsomorphismResult(False)
    g1, g2 = c1.to_networkx(), c2.to_networkx()
    if sorted(d for _, d in g1.degree()) != sorted(d for _, d in g2.degree()):
        return IsomorphismResult(False)

    matcher = MultiGraphMatcher(g1, g2, edge_match=_same_labels)
    if matcher.is_isomorphic():
        return IsomorphismResult(True, dict(matcher.mapping))
    return IsomorphismResult(False)


def link_betti(c: HolderComplex) -> Tuple[int, int]:
    """링크 그래프의 (b0, b1)."""
    g = c.to_networkx()
    k = nx.number_connected_components(g) if c.vertices else 0
    return k, len(c.edges) - len(c.vertices) + k


def complex_to_dot(c: HolderComplex, name: str = "holder_complex") -> str:
    lines = [f"graph {name} {{"]
    for w in sorted(c.vertices, key=natural_key):
        lines.append(f'  "{w}";')
    for e in sorted(c.edges, key=lambda x: natural_key(x.key)):
        lines.append(f'  "{e.u}" -- "{e.v}" [key="{e.key}", label="{_fmt(e.sigma)}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"