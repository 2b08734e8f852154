# -*- coding: utf-8 -*-
"""입력 파일 읽기: JSON → pydantic 검증 → 라이브러리 객체."""

import hashlib
import json
from pathlib import Path
from typing import Any, Dict, List, Sequence, Tuple

from pydantic import BaseModel, ValidationError

from cli.schemas import ArcFile, ComplexFile, ModelFile, SnakeFile
from src.errors import InputError
from src.exponents import Exponent
from src.holder_complex import HolderComplex, ensure_valid
from src.outer_homology import LinkModel, link_model_from_arcs
from src.realization import ArcFamily, MonomialArc, SegmentContact, ZoneRef
from src.snakes import SnakeSpec


class Source:
    """읽은 파일들의 원본 바이트를 모아 digest를 만든다."""

    def __init__(self):
        self._chunks: List[bytes] = []

    def read(self, path) -> Any:
        raw = Path(path).read_bytes()
        self._chunks.append(raw)
        try:
            return json.loads(raw.decode("utf-8"))
        except (UnicodeDecodeError, json.JSONDecodeError) as exc:
            raise InputError(f"{path}: not valid JSON ({exc})") from exc

    def add_params(self, params: Dict[str, Any]) -> None:
        self._chunks.append(json.dumps(params, sort_keys=True).encode("utf-8"))

    def digest(self) -> str:
        h = hashlib.sha256()
        for chunk in self._chunks:
            h.update(hashlib.sha256(chunk).digest())
        return h.hexdigest()


def parse(schema, data, what: str) -> BaseModel:
    try:
        return schema.model_validate(data)
    except ValidationError as exc:
        problems = [f"{'.'.join(str(p) for p in err['loc'])}: {err['msg']}" for err in exc.errors()]
        raise InputError(f"malformed {what}: " + "; ".join(problems), problems) from exc


def complex_from_data(data) -> HolderComplex:
    doc = parse(ComplexFile, data, "complex JSON")
    return ensure_valid(HolderComplex.from_mapping(doc.model_dump()))


def load_complex(source: Source, path) -> HolderComplex:
    return complex_from_data(source.read(path))


def snake_from_data(data) -> Tuple[SnakeSpec, Tuple[SegmentContact, ...]]:
    doc = parse(SnakeFile, data, "snake JSON")
    spec = SnakeSpec.from_mapping(doc.model_dump())
    contacts = tuple(SegmentContact(c.first, c.second, tuple(c.orders)) for c in doc.segment_contacts)
    return spec, contacts


def load_snake(source: Source, path) -> Tuple[SnakeSpec, Tuple[SegmentContact, ...]]:
    return snake_from_data(source.read(path))


def _zones(items) -> Tuple[ZoneRef, ...]:
    return tuple(ZoneRef(z.kind, z.span[0], z.span[1], z.name, z.node) for z in items)


def family_from_data(data) -> ArcFamily:
    doc = parse(ArcFile, data, "arc family JSON")
    names = tuple(a.name for a in doc.arcs)
    arcs = tuple(MonomialArc.from_records([t.model_dump() for t in a.terms]) for a in doc.arcs)
    return ArcFamily(names, arcs, Exponent.parse(doc.beta), _zones(doc.zones), doc.closed)


def is_arc_family(data) -> bool:
    arcs = data.get("arcs") if isinstance(data, dict) else None
    return bool(arcs) and isinstance(arcs[0], dict)


def model_from_data(data) -> LinkModel:
    """모델 JSON (행렬) 또는 arc 족 JSON (항 목록) 둘 다 받는다."""
    if is_arc_family(data):
        return link_model_from_arcs(family_from_data(data))
    doc = parse(ModelFile, data, "model JSON")
    return LinkModel.from_mapping(doc.model_dump(exclude_none=True))


def load_model(source: Source, path) -> LinkModel:
    return model_from_data(source.read(path))


def load_mapping(source: Source, path) -> Dict[str, str]:
    data = source.read(path)
    if not isinstance(data, dict) or not all(isinstance(v, str) for v in data.values()):
        raise InputError(f"{path}: a zone correspondence is a JSON object of names")
    return {str(k): v for k, v in data.items()}


def split_list(text: str, what: str) -> Sequence[str]:
    items = [x.strip() for x in str(text).split(",") if x.strip()]
    if not items:
        raise InputError(f"{what} must be a comma-separated list")
    return items
