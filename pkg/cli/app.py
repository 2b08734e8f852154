# -*- coding: utf-8 -*-
"""
mdh 명령줄 도구

  mdh inner theta.json --profile
  mdh outer target --ks 1,3 --qs 2,3 --beta 1
  mdh realize bubble --beta 1 --alpha 2 --format csv
  mdh validate --seed 7 --count 200

데이터는 stdout, 진단 메시지는 stderr. 오류가 없을 때만 종료 코드 0.
"""
import argparse
import logging
import sys
import time
from dataclasses import replace
from typing import List, Optional

from cli.commands import (cmd_export, cmd_inner, cmd_iso, cmd_oracle, cmd_outer, cmd_realize,
                          cmd_simplify, cmd_validate)
from cli.output import render, write
from src.config import get_settings, set_settings
from src.errors import MdhError
from src.validation import CORPORA

LOG_LEVELS = ["DEBUG", "INFO", "WARNING", "ERROR"]


def _common() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "csv", "dot"], default="json")
    common.add_argument("--out", default=None, help="stdout 대신 파일에 쓴다")
    common.add_argument("--seed", type=int, default=None, help="validate 코퍼스의 난수 시드")
    common.add_argument("--max-size", type=int, default=None,
                        help="동형 판정의 정점 수 상한")
    common.add_argument("--workers", type=int, default=None)
    common.add_argument("--log-level", choices=LOG_LEVELS, default=None)
    common.add_argument("--timing", action="store_true", help="RunReport에 실행 시간을 넣는다")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(
        prog="mdh",
        description="MD-Homology rank profiles of surface germs from combinatorial input",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("inner", parents=[common], help="inner metric MD-Homology of a Hölder complex")
    p.add_argument("complex")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--b", default=None)
    mode.add_argument("--profile", action="store_true")
    p.add_argument("--degree", type=int, default=1)
    p.add_argument("--trace", action="store_true")
    p.set_defaults(handler=cmd_inner)

    p = sub.add_parser("outer", help="outer metric MD-Homology")
    outer = p.add_subparsers(dest="outer_command", required=True)
    q = outer.add_parser("profile", parents=[common])
    q.add_argument("model", nargs="?", default=None)
    q.add_argument("--from-snake", default=None)
    q.add_argument("--degree", type=int, default=1)
    q.set_defaults(handler=cmd_outer)
    q = outer.add_parser("target", parents=[common])
    q.add_argument("--ks", required=True)
    q.add_argument("--qs", required=True)
    q.add_argument("--beta", required=True)
    q.set_defaults(handler=cmd_outer)
    q = outer.add_parser("equiv", parents=[common])
    q.add_argument("first")
    q.add_argument("second")
    q.add_argument("--map", default=None)
    q.set_defaults(handler=cmd_outer)

    p = sub.add_parser("realize", help="monomial arc families and their tord matrices")
    realize = p.add_subparsers(dest="realize_command", required=True)
    q = realize.add_parser("snake", parents=[common])
    q.add_argument("spec")
    q = realize.add_parser("bubble", parents=[common])
    q.add_argument("--beta", required=True)
    q.add_argument("--alpha", required=True)
    q = realize.add_parser("nonsnake", parents=[common])
    q.add_argument("--k", type=int, required=True)
    q.add_argument("--beta", required=True)
    q.add_argument("--alphas", required=True)
    q = realize.add_parser("horn", parents=[common])
    q.add_argument("--beta", required=True)
    q = realize.add_parser("spectra", parents=[common])
    q.add_argument("--k", type=int, required=True)
    q.add_argument("--beta", required=True)
    q.add_argument("--qs", required=True)
    q.add_argument("--sizes", required=True)
    for q in realize.choices.values():
        q.add_argument("--numeric", action="store_true", help="tord 수치 추정값을 함께 낸다")
        q.set_defaults(handler=cmd_realize)

    p = sub.add_parser("oracle", parents=[common], help="quotient-graph oracle (debugging)")
    p.add_argument("input")
    p.add_argument("--b", required=True)
    p.add_argument("--merge", action="append", help="u,v")
    p.set_defaults(handler=cmd_oracle)

    p = sub.add_parser("simplify", parents=[common])
    p.add_argument("complex")
    p.set_defaults(handler=cmd_simplify)

    p = sub.add_parser("iso", parents=[common])
    p.add_argument("first")
    p.add_argument("second")
    p.set_defaults(handler=cmd_iso)

    p = sub.add_parser("export", parents=[common])
    p.add_argument("input")
    p.add_argument("--profile", default=None, help="report 안의 프로파일 이름")
    p.set_defaults(handler=cmd_export)

    p = sub.add_parser("validate", parents=[common],
                       help="cross-check closed forms and realizations against the oracle")
    p.add_argument("--corpus", action="append", choices=CORPORA, help="여러 번 줄 수 있다. 기본은 전부")
    p.add_argument("--count", type=int, default=100, help="임의 complex / 인증서 쌍 개수")
    p.add_argument("--max-length", type=int, default=10, help="snake name 최대 길이")
    p.add_argument("--progress", action="store_true", help="tqdm 진행 표시 (stderr)")
    p.set_defaults(handler=cmd_validate)
    return parser


def _configure(args):
    settings = get_settings()
    overrides = {}
    if args.seed is not None:
        overrides["seed"] = args.seed
    if args.max_size is not None:
        overrides["max_iso_vertices"] = args.max_size
    if args.workers is not None:
        overrides["workers"] = max(1, args.workers)
    if args.log_level is not None:
        overrides["log_level"] = args.log_level
    settings = replace(settings, **overrides)
    logging.basicConfig(stream=sys.stderr, level=settings.log_level,
                        format="%(levelname)s %(name)s: %(message)s", force=True)
    return settings


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    previous = get_settings()
    set_settings(_configure(args))
    try:
        started = time.perf_counter()
        result = args.handler(args)
        if args.timing:
            result.report.timing = {"seconds": round(time.perf_counter() - started, 6)}
        write(render(result, args.format), args.out, sys.stdout)
        code = result.exit_code
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except MdhError as exc:
        print(f"error: {exc}", file=sys.stderr)
        for violation in exc.violations:
            print(f"  - {violation}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: cannot write output: {exc}", file=sys.stderr)
        return 2
    finally:
        set_settings(previous)
    return code


if __name__ == "__main__":
    raise SystemExit(main())
