"""Sweep command - run one exhaustive verification suite."""

from prvkit.prv.sweep import run_suite
from prvkit.utils.logging import ViolationError
from prvkit.utils.ui import print_json, print_json_lines, print_report


def cmd_sweep(args):
    """Run a suite, print its records as JSON lines and finish with the summary."""
    types = [t for t in args.types.split(",") if t] if args.types else None
    records, summary = run_suite(args.suite, types, args.bound, args.jobs)
    print_json_lines(records)
    if args.json:
        print_json({**summary.to_json(), "summary": True, "replay": args.replay})
    else:
        print_report(f"Suite {summary.suite}", summary.to_json())
    if not summary.ok:
        raise ViolationError("{} of {} instances violate suite {}", len(summary.violations), summary.instances,
                             summary.suite)
