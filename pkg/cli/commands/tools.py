# -*- coding: utf-8 -*-
"""oracle / simplify / iso / export."""

from cli.loaders import (Source, complex_from_data, is_arc_family, load_complex, model_from_data,
                         parse, split_list)
from cli.output import CommandResult, complex_frame
from cli.schemas import IsoResult, OracleResult, ProfileFile, RunReport
from src.config import get_settings
from src.errors import InputError
from src.exponents import Exponent, profile_from_cases, profile_to_frame, profile_to_records
from src.holder_complex import complex_to_dot, is_isomorphic, simplify
from src.outer_homology import link_quotient, matrix_to_frame
from src.quotient import QuotientInput, quotient_rank

try:
    from src.utils import natural_key
except ImportError:
    from utils import natural_key


def _merges(items):
    merges = []
    for item in items or []:
        pair = split_list(item, "--merge")
        if len(pair) != 2:
            raise InputError(f"--merge takes two vertex names, got {item!r}")
        merges.append(tuple(pair))
    return merges


def cmd_oracle(args) -> CommandResult:
    """quotient oracle를 직접 돌려 본다 (디버깅용)."""
    source = Source()
    data = source.read(args.input)
    b = Exponent.parse(args.b)
    merges = _merges(args.merge)
    if isinstance(data, dict) and "vertices" in data:
        c = complex_from_data(data)
        result = quotient_rank(QuotientInput.from_complex(c, merges), b)
        assumptions = []
    else:
        if merges:
            raise InputError("--merge applies to complexes; link models merge by their matrix")
        model = model_from_data(data)
        result = link_quotient(model, b)
        assumptions = list(model.assumptions)
    classes = {w: result.classes[w] for w in sorted(result.classes, key=natural_key)}
    oracle = OracleResult(b=str(b), rank=result.rank, components=result.components, classes=classes)
    report = RunReport(command="oracle", input_digest=source.digest(), assumptions=assumptions,
                       rank=result.rank, data=oracle.model_dump())
    return CommandResult(report)


def cmd_simplify(args) -> CommandResult:
    source = Source()
    c = load_complex(source, args.complex)
    s = simplify(c)
    report = RunReport(
        command="simplify",
        input_digest=source.digest(),
        data={"complex": s.to_mapping(), "removed_vertices": len(c.vertices) - len(s.vertices)},
    )
    return CommandResult(report, table=complex_frame(s), dot=complex_to_dot(s))


def cmd_iso(args) -> CommandResult:
    source = Source()
    c1 = load_complex(source, args.first)
    c2 = load_complex(source, args.second)
    found = is_isomorphic(c1, c2, max_vertices=get_settings().max_iso_vertices)
    result = IsoResult(isomorphic=found.isomorphic, mapping=found.mapping)
    return CommandResult(RunReport(command="iso", input_digest=source.digest(),
                                   data=result.model_dump(exclude_none=True)))


def cmd_export(args) -> CommandResult:
    """complex → DOT/CSV, 프로파일 → CSV, 모델 / arc 족 → 행렬 CSV."""
    source = Source()
    data = source.read(args.input)
    digest = source.digest()

    if isinstance(data, dict) and "command" in data:
        profiles = data.get("profiles") or {}
        if not profiles:
            raise InputError("the report has no profile to export")
        name = args.profile or sorted(profiles)[0]
        if name not in profiles:
            raise InputError(f"no profile named {name!r}; available: {sorted(profiles)}")
        data = profiles[name]

    if isinstance(data, list):
        doc = parse(ProfileFile, data, "profile records")
        profile = profile_from_cases(doc.to_cases(), at_infinity=doc.at_infinity)
        report = RunReport(command="export", input_digest=digest,
                           profiles={"profile": profile_to_records(profile)})
        return CommandResult(report, table=profile_to_frame(profile))

    if isinstance(data, dict) and "vertices" in data:
        c = complex_from_data(data)
        report = RunReport(command="export", input_digest=digest, data={"complex": c.to_mapping()})
        return CommandResult(report, table=complex_frame(c), dot=complex_to_dot(c))

    if isinstance(data, dict) and ("matrix" in data or is_arc_family(data)):
        model = model_from_data(data)
        report = RunReport(command="export", input_digest=digest,
                           assumptions=list(model.assumptions), data={"model": model.to_mapping()})
        return CommandResult(report, table=matrix_to_frame(model), table_index=True)

    raise InputError(f"{args.input}: not a complex, profile, model or report")
