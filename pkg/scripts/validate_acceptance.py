"""Run the full acceptance grid and print a summary per check."""

import logging
import sys
import time
from collections import Counter

from app.config import configure_settings
from app.verify import default_suite, run_checks

logging.basicConfig(
    level=logging.WARNING,
    format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
)
logger = logging.getLogger(__name__)


def validate_acceptance(jobs: int = 1) -> bool:
    """Run every check of the acceptance grid.

    Args:
        jobs: Worker processes

    Returns:
        Whether every check passed
    """
    print("🔧 Acceptance run")
    print("=" * 50)

    settings = configure_settings(jobs=jobs)
    specs = default_suite()
    print(f"📋 {len(specs)} checks, identity order {settings.identity_order}, "
          f"conjecture order {settings.conjecture_order}, {jobs} worker(s)")
    print()

    start = time.time()
    reports = run_checks(specs, jobs=jobs)
    elapsed = time.time() - start

    totals = Counter(r.check for r in reports)
    failures = Counter(r.check for r in reports if not r.passed)
    for name in totals:
        marker = "✅" if not failures[name] else "❌"
        print(f"{marker} {name:9} {totals[name] - failures[name]:4}/{totals[name]} passed")

    for report in reports:
        if not report.passed:
            print(f"   ❌ {report.check} {report.params}: {report.witness}")

    print()
    print(f"⏱️  {elapsed:.1f}s")
    return not failures


if __name__ == "__main__":
    workers = int(sys.argv[1]) if len(sys.argv) > 1 else 1
    sys.exit(0 if validate_acceptance(workers) else 1)
