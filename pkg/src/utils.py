# -*- coding: utf-8 -*-
"""Common utilities for the MD-Homology toolkit."""
import re
import pandas as pd


_TOKEN = re.compile(r"(\d+)")


def normalize_identifier(name):
    """Normalize vertex / letter identifiers read from JSON or CSV."""
    if name is None or (not isinstance(name, str) and pd.isna(name)):
        return ""
    name = str(name)
    name = re.sub(r"\s+", "", name)
    return name.strip()


def natural_key(name):
    """'v2' < 'v10' 순서가 되도록 정렬 키를 만든다."""
    parts = _TOKEN.split(str(name))
    return tuple((0, int(p)) if p.isdigit() else (1, p) for p in parts if p != "")


def fresh_name(existing, prefix):
    """existing에 없는 prefix+번호 이름."""
    n = 1
    while f"{prefix}{n}" in existing:
        n += 1
    return f"{prefix}{n}"
