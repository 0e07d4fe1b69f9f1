"""Report assembly and emission shared by the CLI subcommands.

A report carries its checks (name/status/details) separately from timings so
that the check payload is byte-identical across runs with identical flags;
a report with any failing check maps to a nonzero exit code.
"""

from __future__ import annotations

import json

SCHEMA = "groupoid-reps/1"

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3


def make_report(command: str, parameters: dict, checks: list[dict], timings: dict | None = None) -> dict:
    return {
        "schema": SCHEMA,
        "command": command,
        "parameters": parameters,
        "checks": checks,
        "timings": timings or {},
    }


def report_ok(report: dict) -> bool:
    return all(c.get("status") == "pass" for c in report["checks"])


def checks_payload(report: dict) -> str:
    """The deterministic part of a report (everything except timings)."""
    stripped = {k: v for k, v in report.items() if k != "timings"}
    return json.dumps(stripped, sort_keys=True, separators=(",", ":"))


def emit(report: dict, out: str) -> None:
    if out == "json":
        print(json.dumps(report, sort_keys=True, indent=2))
        return
    print(f"# {report['command']} {report['parameters']}")
    for c in report["checks"]:
        line = f"[{c['status'].upper():4}] {c['name']}"
        print(line)
    npass = sum(1 for c in report["checks"] if c["status"] == "pass")
    print(f"-- {npass}/{len(report['checks'])} checks passed")


def exit_code(report: dict) -> int:
    return EXIT_OK if report_ok(report) else EXIT_CHECK_FAILED
