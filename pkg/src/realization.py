# -*- coding: utf-8 -*-
"""
R^N 안의 단항식 arc 족 (monomial arc family).

arc γ(t) = Σ c · t^q · e_axis 를 정확한 유리수 데이터로 들고 있으며, tangency order는
계수 벡터가 처음 달라지는 지수로 계산한다. 부동소수점은 tord_numeric에서만 쓴다.
"""

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

import numpy as np

from src.errors import DomainError, InputError, PreconditionError, UnsupportedSizeError
from src.exponents import INF, ONE, Exponent, as_exponent
from src.snakes import SnakeSpec, ensure_snake_name, make_gluing_word, second_occurrences

try:
    from scipy.stats import linregress
except ImportError:  # pragma: no cover
    linregress = None


@dataclass(frozen=True, order=True)
class Term:
    exponent: Exponent
    axis: int
    coeff: Fraction

    def to_mapping(self):
        return {"axis": self.axis, "coeff": _fmt(self.coeff), "exp": str(self.exponent)}


def _fmt(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


@dataclass(frozen=True)
class MonomialArc:
    """정규화된 단항식 arc. 항 t·e₁ (축 1, 계수 1)을 반드시 가진다."""

    terms: Tuple[Term, ...]

    def __post_init__(self):
        merged: Dict[Tuple[Exponent, int], Fraction] = {}
        for term in self.terms:
            if term.axis < 1:
                raise InputError(f"axis index must be positive, got {term.axis}")
            exp = as_exponent(term.exponent)
            if exp.is_infinite:
                raise InputError("term exponents must be finite")
            key = (exp, term.axis)
            merged[key] = merged.get(key, Fraction(0)) + Fraction(term.coeff)
        terms = tuple(sorted(Term(exp, axis, c) for (exp, axis), c in merged.items() if c != 0))
        if not any(t.exponent == ONE and t.axis == 1 and t.coeff == 1 for t in terms):
            raise InputError("an arc needs the leading term t·e1")
        object.__setattr__(self, "terms", terms)

    @classmethod
    def base(cls) -> "MonomialArc":
        return cls((Term(ONE, 1, Fraction(1)),))

    @classmethod
    def from_records(cls, records: Sequence[dict]) -> "MonomialArc":
        try:
            return cls(tuple(Term(Exponent.parse(r["exp"]), int(r["axis"]), Fraction(r["coeff"]))
                             for r in records))
        except (KeyError, ValueError, ZeroDivisionError) as exc:
            raise InputError(f"malformed arc term: {exc}") from exc

    def plus(self, axis: int, exponent, coeff=1) -> "MonomialArc":
        return MonomialArc(self.terms + (Term(as_exponent(exponent), axis, Fraction(coeff)),))

    @property
    def dimension(self) -> int:
        return max(t.axis for t in self.terms)

    def coefficients(self) -> Dict[Tuple[Exponent, int], Fraction]:
        return {(t.exponent, t.axis): t.coeff for t in self.terms}

    def evaluate(self, t: float, dimension: Optional[int] = None) -> np.ndarray:
        point = np.zeros(dimension or self.dimension)
        for term in self.terms:
            point[term.axis - 1] += float(term.coeff) * t ** float(term.exponent)
        return point

    def to_records(self) -> List[dict]:
        return [t.to_mapping() for t in self.terms]


def tord_symbolic(a: MonomialArc, b: MonomialArc) -> Exponent:
    """계수 벡터가 처음 달라지는 지수. 같은 arc면 ∞."""
    ca, cb = a.coefficients(), b.coefficients()
    differing = [exp for exp, axis in set(ca) | set(cb)
                 if ca.get((exp, axis), 0) != cb.get((exp, axis), 0)]
    return min(differing) if differing else INF


def tord_numeric(a: MonomialArc, b: MonomialArc, t_values: Sequence) -> float:
    """log‖a(t) − b(t)‖ 대 log t의 최소제곱 기울기 (추정값)."""
    ts = [float(t) for t in t_values]
    if len(ts) < 4:
        raise DomainError("tord_numeric needs at least 4 radii")
    if any(t <= 0 for t in ts):
        raise DomainError("radii must be positive")
    if math.log10(max(ts) / min(ts)) < 3 - 1e-9:
        raise DomainError("radii must span at least 3 decades")
    dim = max(a.dimension, b.dimension)
    xs, ys = [], []
    for t in ts:
        norm = float(np.linalg.norm(a.evaluate(t, dim) - b.evaluate(t, dim)))
        if norm > 0:
            xs.append(math.log(t))
            ys.append(math.log(norm))
    if len(xs) < 2:
        return math.inf
    if linregress is not None:
        return float(linregress(xs, ys).slope)
    logging.debug("scipy unavailable, using numpy.polyfit")
    return float(np.polyfit(xs, ys, 1)[0])


@dataclass(frozen=True)
class ZoneRef:
    """링크 모델 안의 zone: arc 인덱스 구간 [start, stop]."""

    kind: str
    start: int
    stop: int
    name: str
    node: Optional[str] = None

    def __post_init__(self):
        if self.kind not in ("nodal", "segment"):
            raise InputError(f"zone kind must be nodal or segment, got {self.kind!r}")
        if self.start < 0 or self.stop < self.start:
            raise InputError(f"zone {self.name} has an empty span")

    @property
    def indices(self) -> range:
        return range(self.start, self.stop + 1)

    def to_mapping(self) -> dict:
        data = {"kind": self.kind, "span": [self.start, self.stop], "name": self.name}
        if self.node is not None:
            data["node"] = self.node
        return data


@dataclass(frozen=True)
class ArcFamily:
    names: Tuple[str, ...]
    arcs: Tuple[MonomialArc, ...]
    beta: Exponent
    zones: Tuple[ZoneRef, ...] = ()
    closed: bool = False
    word: Tuple[str, ...] = ()

    @property
    def dimension(self) -> int:
        return max(a.dimension for a in self.arcs)

    def arc(self, name) -> MonomialArc:
        return self.arcs[self.names.index(name)]

    def tord(self, x, y) -> Exponent:
        return tord_symbolic(self.arc(x), self.arc(y))

    def tord_matrix(self) -> List[List[Exponent]]:
        return [[tord_symbolic(a, b) for b in self.arcs] for a in self.arcs]

    def to_mapping(self) -> dict:
        return {
            "beta": str(self.beta),
            "dimension": self.dimension,
            "closed": self.closed,
            "arcs": [{"name": n, "terms": a.to_records()} for n, a in zip(self.names, self.arcs)],
            "zones": [z.to_mapping() for z in self.zones],
        }


@dataclass(frozen=True)
class SegmentContact:
    """두 segment (1부터 센 번호)를 r개 arc로 나누고 l번째 arc끼리 orders[l]로 붙인다."""

    first: int
    second: int
    orders: Tuple[Exponent, ...]

    def __post_init__(self):
        object.__setattr__(self, "orders", tuple(as_exponent(q) for q in self.orders))
        if self.first == self.second:
            raise PreconditionError("a segment cannot be in contact with itself")
        if not self.orders:
            raise PreconditionError("segment contacts need at least one order")


def realize_snake_nodes(word: Sequence[str], beta, node_exponents: Mapping[str, object],
                        segment_contacts: Sequence[SegmentContact] = ()) -> ArcFamily:
    """
    δ₁ = t e₁, 첫 등장 글자는 δ_j = δ₁ + t^β e_j, 반복 글자는 δ_j = δ_{r(j)} + t^q e_j,
    σ_j = δ₁ + t^β e_{m+j}. 링크 순서는 δ₁, σ₁, δ₂, …, δ_m.
    """
    m = len(tuple(word))
    if m <= 3:
        raise UnsupportedSizeError(f"snake realization needs m > 3, got m = {m}")
    word = ensure_snake_name(word)
    beta = as_exponent(beta)
    exps = {}
    for w in sorted(set(word)):
        if w not in node_exponents:
            raise InputError(f"no tangency exponent for node {w}")
        q = as_exponent(node_exponents[w])
        if not q > beta:
            raise PreconditionError(f"node {w}: exponent {q} must exceed beta={beta}")
        exps[w] = q

    base = MonomialArc.base()
    deltas: List[MonomialArc] = [base]
    first_index = {word[0]: 0}
    for j in range(1, m):
        w = word[j]
        if w in first_index:
            deltas.append(deltas[first_index[w]].plus(j + 1, exps[w]))
        else:
            first_index[w] = j
            deltas.append(base.plus(j + 1, beta))

    segments: Dict[int, List[Tuple[str, MonomialArc]]] = {
        j: [(f"sigma{j}", base.plus(m + j, beta))] for j in range(1, m)}
    next_axis = 2 * m
    used = set()
    for contact in segment_contacts:
        for s in (contact.first, contact.second):
            if not 1 <= s < m:
                raise InputError(f"segment {s} does not exist in a word of length {m}")
            if s in used:
                raise PreconditionError(f"segment {s} appears in two contacts")
            used.add(s)
        for q in contact.orders:
            if not q > beta:
                raise PreconditionError(f"contact order {q} must exceed beta={beta}")
        ends1 = (word[contact.first - 1], word[contact.first])
        ends2 = (word[contact.second - 1], word[contact.second])
        if ends2 == ends1:
            reverse = False
        elif ends2 == ends1[::-1]:
            reverse = True
        else:
            raise PreconditionError(
                f"segments {contact.first} and {contact.second} do not join the same pair of nodes")

        r = len(contact.orders)
        near = [base.plus(m + contact.first, beta)]
        for _ in range(1, r):
            near.append(base.plus(next_axis, beta))
            next_axis += 1
        far = [near[0].plus(m + contact.second, contact.orders[0])]
        for arc, q in zip(near[1:], contact.orders[1:]):
            far.append(arc.plus(next_axis, q))
            next_axis += 1
        if r == 1:
            segments[contact.first] = [(f"sigma{contact.first}", near[0])]
            segments[contact.second] = [(f"sigma{contact.second}", far[0])]
        else:
            segments[contact.first] = [(f"sigma{contact.first}_{l}", a) for l, a in enumerate(near, 1)]
            far_named = [(f"sigma{contact.second}_{l}", a) for l, a in enumerate(far, 1)]
            segments[contact.second] = far_named[::-1] if reverse else far_named
    names, arcs, zones = [], [], []
    for j in range(1, m + 1):
        zones.append(ZoneRef("nodal", len(arcs), len(arcs), f"Z{j}", word[j - 1]))
        names.append(f"delta{j}")
        arcs.append(deltas[j - 1])
        if j < m:
            start = len(arcs)
            for name, arc in segments[j]:
                names.append(name)
                arcs.append(arc)
            zones.append(ZoneRef("segment", start, len(arcs) - 1, f"S{j}"))
    logging.debug(f"realized {word}: {len(arcs)} arcs")
    return ArcFamily(tuple(names), tuple(arcs), beta, tuple(zones), word=word)


def realize_snake(spec: SnakeSpec) -> ArcFamily:
    """공통 singleton spectrum {α}를 가진 snake의 arc 족."""
    alpha = spec.common_alpha
    if alpha is None:
        raise PreconditionError(
            "realize_snake needs one common singleton spectrum; "
            "use realize_snake_spectra or realize_snake_nodes for varying spectra")
    return realize_snake_nodes(spec.word, spec.beta, {w: alpha for w in set(spec.word)})


def assignment_from_sizes(k: int, qs: Sequence, sizes: Sequence[int]) -> Dict[str, Exponent]:
    """W_k의 두 번째 등장 위치를 단어 순서대로 크기 sizes의 그룹에 나눠 준다."""
    if len(qs) != len(sizes):
        raise InputError("one group size per exponent is required")
    if any(s < 1 for s in sizes) or sum(sizes) != k:
        raise InputError(f"group sizes {list(sizes)} do not partition {k} letters")
    word = make_gluing_word(k)
    letters = [word[i] for i in second_occurrences(word)]
    assignment, pos = {}, 0
    for q, size in zip(qs, sizes):
        for w in letters[pos:pos + size]:
            assignment[w] = as_exponent(q)
        pos += size
    return assignment


def realize_snake_spectra(k: int, beta, assignment: Mapping[str, object]) -> ArcFamily:
    """W_k 위에서 반복 글자마다 자기 그룹의 지수 q_l을 쓴다."""
    beta = as_exponent(beta)
    word = make_gluing_word(k)
    for w, q in assignment.items():
        if not as_exponent(q) > beta:
            raise PreconditionError(f"group exponent {q} of {w} must exceed beta={beta}")
    missing = set(word) - set(assignment)
    if missing:
        raise InputError(f"letters without a group: {sorted(missing)}")
    return realize_snake_nodes(word, beta, assignment)


def realize_nonsnake_bubble(k: int, beta, alphas: Sequence) -> ArcFamily:
    """
    m = 2k+1 개의 δ와 m−1 개의 σ로 이루어진 non-snake β-bubble.

    tord(δ_i, δ_{2k+2−i}) = α_i 이고 나머지 쌍은 모두 β.
    """
    if k < 2:
        raise DomainError(f"non-snake bubbles need k >= 2, got {k}")
    beta = as_exponent(beta)
    alphas = [as_exponent(a) for a in alphas]
    if len(alphas) != k:
        raise InputError(f"expected {k} exponents, got {len(alphas)}")
    if not alphas[0] > beta or any(not x < y for x, y in zip(alphas, alphas[1:])):
        raise PreconditionError("alphas must be strictly increasing and exceed beta")

    m = 2 * k + 1
    base = MonomialArc.base()
    deltas = [base]
    for j in range(2, m + 1):
        if j <= k + 1:
            deltas.append(base.plus(j, beta))
        else:
            deltas.append(deltas[2 * k + 1 - j].plus(j, alphas[2 * k + 1 - j]))
    nodes = [f"x{min(j, 2 * k + 2 - j)}" for j in range(1, m + 1)]

    names, arcs, zones = [], [], []
    for j in range(1, m + 1):
        zones.append(ZoneRef("nodal", len(arcs), len(arcs), f"Z{j}", nodes[j - 1]))
        names.append(f"delta{j}")
        arcs.append(deltas[j - 1])
        if j < m:
            zones.append(ZoneRef("segment", len(arcs), len(arcs), f"S{j}"))
            names.append(f"sigma{j}")
            arcs.append(base.plus(m + j, beta))
    return ArcFamily(tuple(names), tuple(arcs), beta, tuple(zones))


def realize_bubble_snake(beta, alpha) -> ArcFamily:
    """γ_i = (t, (−1)^i t^α, 0), λ_i = (t, (−1)^i t^β, t^β). 링크 순서 γ₁, λ₁, λ₂, γ₂."""
    beta, alpha = as_exponent(beta), as_exponent(alpha)
    if not alpha > beta or alpha.is_infinite:
        raise PreconditionError(f"bubble snakes need beta < alpha < inf, got {beta}, {alpha}")
    base = MonomialArc.base()
    gamma1 = base.plus(2, alpha, -1)
    gamma2 = base.plus(2, alpha, 1)
    lambda1 = base.plus(2, beta, -1).plus(3, beta)
    lambda2 = base.plus(2, beta, 1).plus(3, beta)
    zones = (
        ZoneRef("nodal", 0, 0, "Z1", "x1"),
        ZoneRef("segment", 1, 2, "S1"),
        ZoneRef("nodal", 3, 3, "Z2", "x1"),
    )
    return ArcFamily(("gamma1", "lambda1", "lambda2", "gamma2"),
                     (gamma1, lambda1, lambda2, gamma2), beta, zones)


def realize_horn(beta) -> ArcFamily:
    """링크가 원이 되는 β-horn: (t, t^β, 0), (t, −t^β, 0)를 닫힌 링크로 잇는다."""
    beta = as_exponent(beta)
    if beta.is_infinite:
        raise DomainError("beta must be finite")
    base = MonomialArc.base()
    return ArcFamily(("lambda1", "lambda2"),
                     (base.plus(2, beta, 1), base.plus(2, beta, -1)), beta, closed=True)
