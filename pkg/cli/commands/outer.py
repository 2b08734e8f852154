# -*- coding: utf-8 -*-
import logging

from cli.loaders import Source, load_mapping, load_model, load_snake, split_list
from cli.output import CommandResult
from cli.schemas import RunReport
from src.errors import InputError
from src.exponents import profile_to_frame, profile_to_records
from src.outer_homology import (build_target_snake, link_model_from_arcs, outer_profile,
                                snake_surface, weak_equiv_same_homology)
from src.snakes import mdh1_basic_snake


def _outer_profile(args) -> CommandResult:
    source = Source()
    formula = None
    if args.from_snake:
        if args.model:
            raise InputError("give either a model file or --from-snake, not both")
        spec, contacts = load_snake(source, args.from_snake)
        model = snake_surface(spec, contacts).model
        if spec.is_basic and not contacts and args.degree == 1:
            formula = mdh1_basic_snake(spec)
    elif args.model:
        model = load_model(source, args.model)
    else:
        raise InputError("give a model file or --from-snake")

    profile = outer_profile(model, args.degree)
    profiles = {f"mdh{args.degree}": profile_to_records(profile)}
    if formula is not None:
        profiles["basic_snake_formula"] = profile_to_records(formula)
        if formula != profile:
            logging.warning("outer profile disagrees with the basic snake formula")
    report = RunReport(
        command="outer profile",
        input_digest=source.digest(),
        assumptions=list(model.assumptions),
        profiles=profiles,
        data={
            "arcs": list(model.arcs),
            "closed": model.closed,
            "edge_exponents": [str(e) for e in model.edge_exponents],
        },
    )
    return CommandResult(report, table=profile_to_frame(profile))


def _outer_target(args) -> CommandResult:
    try:
        ks = [int(k) for k in split_list(args.ks, "--ks")]
    except ValueError as exc:
        raise InputError(f"--ks must list integers: {exc}") from exc
    qs = list(split_list(args.qs, "--qs"))
    source = Source()
    source.add_params({"ks": ks, "qs": qs, "beta": str(args.beta)})

    target = build_target_snake(ks, qs, args.beta)
    computed = outer_profile(link_model_from_arcs(target.family))
    agrees = computed == target.expected
    if not agrees:
        logging.warning(f"realized snake does not reach the target profile: {computed} vs {target.expected}")
    report = RunReport(
        command="outer target",
        input_digest=source.digest(),
        profiles={
            "expected": profile_to_records(target.expected),
            "computed": profile_to_records(computed),
        },
        data={
            "word": list(target.spec.word) if target.spec is not None else [],
            "group_sizes": list(target.group_sizes),
            "dimension": target.family.dimension,
            "agrees": agrees,
            "family": target.family.to_mapping(),
        },
    )
    return CommandResult(report, table=profile_to_frame(computed))


def _outer_equiv(args) -> CommandResult:
    source = Source()
    spec1, contacts1 = load_snake(source, args.first)
    spec2, contacts2 = load_snake(source, args.second)
    mapping = load_mapping(source, args.map) if args.map else None
    s1, s2 = snake_surface(spec1, contacts1), snake_surface(spec2, contacts2)
    verdict = weak_equiv_same_homology(s1, s2, mapping)
    report = RunReport(
        command="outer equiv",
        input_digest=source.digest(),
        assumptions=list(verdict.assumptions),
        verdict=verdict.to_mapping(),
        profiles={
            "first": profile_to_records(outer_profile(s1.model)),
            "second": profile_to_records(outer_profile(s2.model)),
        },
    )
    return CommandResult(report)


HANDLERS = {
    "profile": _outer_profile,
    "target": _outer_target,
    "equiv": _outer_equiv,
}


def cmd_outer(args) -> CommandResult:
    """outer 거리: 모델 프로파일, 실현 정리 목표, weak equivalence 판정."""
    return HANDLERS[args.outer_command](args)
