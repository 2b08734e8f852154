# -*- coding: utf-8 -*-
"""명령 결과를 JSON / CSV / DOT 텍스트로 바꾼다."""

from dataclasses import dataclass
from pathlib import Path
from typing import Optional

import pandas as pd

from cli.schemas import RunReport
from src.errors import InputError


@dataclass
class CommandResult:
    report: RunReport
    table: Optional[pd.DataFrame] = None
    table_index: bool = False
    dot: Optional[str] = None
    exit_code: int = 0


def render(result: CommandResult, fmt: str) -> str:
    if fmt == "json":
        return result.report.model_dump_json(indent=2, exclude_none=True) + "\n"
    if fmt == "csv":
        if result.table is None:
            raise InputError(f"csv output is not available for `{result.report.command}`")
        return result.table.to_csv(index=result.table_index, lineterminator="\n")
    if fmt == "dot":
        if result.dot is None:
            raise InputError(f"dot output is not available for `{result.report.command}`")
        return result.dot
    raise InputError(f"unknown format {fmt!r}")


def write(text: str, out: Optional[str], stream) -> None:
    if out is None:
        stream.write(text)
        return
    Path(out).write_text(text, encoding="utf-8")


def complex_frame(c) -> pd.DataFrame:
    rows = [{"key": e["key"], "u": e["u"], "v": e["v"], "sigma": e["sigma"]}
            for e in c.to_mapping()["edges"]]
    return pd.DataFrame(rows, columns=["key", "u", "v", "sigma"])
