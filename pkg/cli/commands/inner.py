# -*- coding: utf-8 -*-
import logging

import pandas as pd

from cli.loaders import Source, load_complex
from cli.output import CommandResult
from cli.schemas import RunReport
from src.errors import InputError
from src.exponents import Exponent, profile_to_frame, profile_to_records
from src.holder_complex import simplify
from src.inner_homology import b_reduce, inner_profile, mdh_inner


def cmd_inner(args) -> CommandResult:
    """inner 거리: 한 b에서의 rank 또는 전체 프로파일."""
    source = Source()
    c = load_complex(source, args.complex)
    degree = args.degree

    if args.b is None:
        if args.trace:
            raise InputError("--trace needs --b")
        profile = inner_profile(c, degree)
        report = RunReport(
            command="inner",
            input_digest=source.digest(),
            profiles={f"mdh{degree}": profile_to_records(profile)},
            data={"degree": degree, "jumping_rates": [str(q) for q in profile.jumping_rates]},
        )
        return CommandResult(report, table=profile_to_frame(profile))

    b = Exponent.parse(args.b)
    rank = mdh_inner(c, b, degree)
    trace = None
    if args.trace:
        if degree != 1 or b.is_infinite:
            raise InputError("--trace needs degree 1 and a finite b")
        _, steps = b_reduce(simplify(c), b)
        trace = steps.to_records()
        logging.info(f"inner: {len(trace)} reduction steps at b={b}")
    report = RunReport(
        command="inner",
        input_digest=source.digest(),
        rank=rank,
        trace=trace,
        data={"b": str(b), "degree": degree},
    )
    table = pd.DataFrame([{"b": str(b), "degree": degree, "rank": rank}])
    return CommandResult(report, table=table)
