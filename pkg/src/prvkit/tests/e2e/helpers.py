"""Helpers for prvkit end-to-end tests.

A Workdir is a throwaway directory with its own HOME; prvkit runs there as a
subprocess, so config files and colors come from the test and not the host.
"""
from __future__ import annotations

import dataclasses
import json
import os
import subprocess
import sys
from pathlib import Path
from typing import Any, Dict, List

import prvkit

_SRC_DIR = Path(prvkit.__file__).resolve().parent.parent


@dataclasses.dataclass
class RunResult:
    returncode: int
    stdout: str
    stderr: str

    def json_lines(self) -> List[Dict[str, Any]]:
        return [json.loads(line) for line in self.stdout.splitlines() if line.strip()]


@dataclasses.dataclass
class Workdir:
    path: Path

    def _env(self) -> dict:
        env = dict(os.environ)
        # ~/.prvkitconfig must not leak in from the host.
        env["HOME"] = str(self.path.parent)
        env["PYTHONPATH"] = os.pathsep.join(p for p in (str(_SRC_DIR), env.get("PYTHONPATH", "")) if p)
        env["NO_COLOR"] = "1"
        return env

    def run_prvkit(self, *args: str, check: bool = False) -> RunResult:
        """Invoke `python -m prvkit <args>` in the work directory."""
        sp = subprocess.run(
            [sys.executable, "-m", "prvkit", *args],
            cwd=self.path,
            env=self._env(),
            capture_output=True,
            text=True,
        )
        result = RunResult(sp.returncode, sp.stdout, sp.stderr)
        if check and sp.returncode != 0:
            raise AssertionError(
                f"prvkit {' '.join(args)} failed ({sp.returncode}).\n"
                f"stdout:\n{sp.stdout}\nstderr:\n{sp.stderr}"
            )
        return result

    def write_config(self, text: str) -> None:
        (self.path / ".prvkitconfig").write_text(text)


def run_json(workdir: Workdir, *args: str) -> Dict[str, Any]:
    """Run with --json and return the last JSON object printed."""
    result = workdir.run_prvkit("--json", *args)
    lines = result.json_lines()
    if not lines:
        raise AssertionError(f"prvkit {' '.join(args)} printed no JSON.\nstderr:\n{result.stderr}")
    return lines[-1]
