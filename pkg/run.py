# -*- coding: utf-8 -*-
"""
mdh 진입점
실행: python run.py inner tests/fixtures/theta.json --profile
"""
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

from cli.app import main  # noqa: E402


if __name__ == "__main__":
    sys.exit(main())
