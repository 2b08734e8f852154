# -*- coding: utf-8 -*-
"""arc 족 실현과 tord 행렬 출력."""

import math

from cli.loaders import Source, load_snake, split_list
from cli.output import CommandResult
from cli.schemas import NumericEstimate, RunReport
from src.config import get_settings
from src.errors import InputError
from src.exponents import profile_to_records
from src.outer_homology import link_model_from_arcs, matrix_to_frame, outer_profile
from src.realization import (assignment_from_sizes, realize_bubble_snake, realize_horn,
                             realize_nonsnake_bubble, realize_snake_nodes, realize_snake_spectra,
                             tord_numeric)


def _int_list(text, what):
    try:
        return [int(x) for x in split_list(text, what)]
    except ValueError as exc:
        raise InputError(f"{what} must list integers: {exc}") from exc


def _family(args, source: Source):
    kind = args.realize_command
    if kind == "snake":
        spec, contacts = load_snake(source, args.spec)
        return realize_snake_nodes(spec.word, spec.beta, spec.node_exponents(), contacts)

    params = {k: str(v) for k, v in sorted(vars(args).items())
              if k in ("beta", "alpha", "k", "alphas", "qs", "sizes")}
    source.add_params(dict(params, kind=kind))
    if kind == "bubble":
        return realize_bubble_snake(args.beta, args.alpha)
    if kind == "nonsnake":
        return realize_nonsnake_bubble(args.k, args.beta, split_list(args.alphas, "--alphas"))
    if kind == "horn":
        return realize_horn(args.beta)
    if kind == "spectra":
        qs = split_list(args.qs, "--qs")
        assignment = assignment_from_sizes(args.k, qs, _int_list(args.sizes, "--sizes"))
        return realize_snake_spectra(args.k, args.beta, assignment)
    raise InputError(f"unknown realization {kind!r}")


def _estimates(family, model):
    radii = get_settings().numeric_radii
    pairs = [(i, i + 1) for i in range(len(family.arcs) - 1)]
    if family.closed:
        pairs.append((len(family.arcs) - 1, 0))
    out = []
    for i, j in pairs:
        symbolic = model.entry(i, j)
        if symbolic.is_infinite:
            continue
        estimate = tord_numeric(family.arcs[i], family.arcs[j], radii)
        if math.isinf(estimate):
            continue
        out.append(NumericEstimate(pair=[family.names[i], family.names[j]],
                                   symbolic=str(symbolic), estimate=estimate))
    return out


def cmd_realize(args) -> CommandResult:
    source = Source()
    family = _family(args, source)
    model = link_model_from_arcs(family)
    data = family.to_mapping()
    data["matrix"] = [[str(x) for x in row] for row in model.matrix]
    data["edge_exponents"] = [str(e) for e in model.edge_exponents]
    report = RunReport(
        command=f"realize {args.realize_command}",
        input_digest=source.digest(),
        profiles={"mdh1": profile_to_records(outer_profile(model))},
        data=data,
        numeric_estimates=_estimates(family, model) if args.numeric else None,
    )
    return CommandResult(report, table=matrix_to_frame(model), table_index=True)
