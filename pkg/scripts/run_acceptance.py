#!/usr/bin/env python3
"""Run the acceptance gate and show one PASS/FAIL line per criterion.

Equivalent to `pytest tests/test_acceptance.py -s`; kept as a script so the
gate can be reproduced without remembering pytest flags.
"""

import pathlib
import sys

import pytest

ROOT = pathlib.Path(__file__).resolve().parent.parent

if __name__ == "__main__":
    sys.exit(pytest.main(
        [str(ROOT / "tests" / "test_acceptance.py"), "-s", "-q"]
        + sys.argv[1:]))
