"""Run the acceptance suite and echo its PASS/FAIL lines.

    python3 scripts/run_acceptance.py            # all seven criteria
    python3 scripts/run_acceptance.py -k "not criterion_3"   # skip the ~10 min period sweep
"""

import subprocess
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent


def main(argv: list[str]) -> int:
    cmd = [sys.executable, "-m", "pytest", str(ROOT / "tests" / "test_acceptance.py"), "-v", "-s", *argv]
    return subprocess.call(cmd, cwd=ROOT)


if __name__ == "__main__":
    sys.exit(main(sys.argv[1:]))
