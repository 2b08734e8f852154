# -*- coding: utf-8 -*-
"""
닫힌 공식 / 축약 알고리즘을 quotient oracle과 대조한다.

  python scripts/validate_oracle.py --seed 7 --count 200
  python scripts/validate_oracle.py --corpus spectra --corpus nonsnake

불일치가 하나라도 있으면 종료 코드 1.
"""
import argparse
import logging
import sys
from pathlib import Path

PROJECT_ROOT = Path(__file__).parent.parent
sys.path.insert(0, str(PROJECT_ROOT))

from src.config import get_settings  # noqa: E402
from src.validation import CORPORA, run_corpora  # noqa: E402


def print_report(results, seed):
    print('=' * 60)
    print(f'MD-Homology Oracle Validation Report (seed {seed})')
    print('=' * 60)
    for result in results:
        status = 'ok' if result.ok else f'{len(result.failures)} mismatches'
        print(f'{result.name:<14} {result.checked:>6} checked  {status}')
        for line in result.failures[:10]:
            print(f'  {line}')
    print('=' * 60)


def main():
    parser = argparse.ArgumentParser(description='Cross-check closed forms against the quotient oracle')
    parser.add_argument('--seed', type=int, default=None, help='default: MDH_SEED')
    parser.add_argument('--count', type=int, default=100, help='random complexes / certificate pairs')
    parser.add_argument('--max-length', type=int, default=10, help='longest snake name to enumerate')
    parser.add_argument('--corpus', action='append', choices=CORPORA)
    args = parser.parse_args()
    logging.basicConfig(level=logging.WARNING)

    seed = get_settings().seed if args.seed is None else args.seed
    results = run_corpora(args.corpus, seed=seed, count=args.count,
                          max_length=args.max_length, progress=True)
    print_report(results, seed)
    if not all(r.ok for r in results):
        sys.exit(1)


if __name__ == '__main__':
    main()
