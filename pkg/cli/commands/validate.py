# -*- coding: utf-8 -*-
"""검증 코퍼스 실행."""

import logging

import pandas as pd

from cli.output import CommandResult
from cli.schemas import RunReport
from src.config import get_settings
from src.errors import InputError
from src.validation import run_corpora


def cmd_validate(args) -> CommandResult:
    """코퍼스를 돌려 불일치가 있으면 종료 코드 1."""
    if args.count < 1:
        raise InputError(f"--count must be positive, got {args.count}")
    seed = get_settings().seed
    results = run_corpora(args.corpus, seed=seed, count=args.count,
                          max_length=args.max_length, progress=args.progress)
    failed = [r.name for r in results if not r.ok]
    if failed:
        logging.warning(f"validate: mismatches in {failed}")
    report = RunReport(
        command="validate",
        data={"seed": seed, "count": args.count,
              "corpora": {r.name: r.to_mapping() for r in results}},
    )
    table = pd.DataFrame([{"corpus": r.name, "checked": r.checked, "failures": len(r.failures)}
                          for r in results], columns=["corpus", "checked", "failures"])
    return CommandResult(report, table=table, exit_code=1 if failed else 0)
