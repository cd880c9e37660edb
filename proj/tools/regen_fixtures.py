#!/usr/bin/env python3
"""Regenerate fixtures/*.expected.json from the CLI and check them against analytic values.

Usage: tools/regen_fixtures.py path/to/wtype [--check]
With --check nothing is written; the script fails if any stored file differs.
"""

import json
import math
import subprocess
import sys
from pathlib import Path

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"
TOL = 1e-12


def close(a, b, what):
    if isinstance(b, list):
        assert len(a) == len(b), what
        for i, (p, q) in enumerate(zip(a, b)):
            close(p, q, f"{what}[{i}]")
    elif abs(a - b) > TOL:
        raise AssertionError(f"{what}: {a!r} vs {b!r}")


def analytic(name, out):
    if name == "canonicalize_shear3":
        close(out["canonical"]["u"], 0.75, "u")
        close(out["canonical"]["c"], [1 / 12] * 3, "c")
    elif name == "canonicalize_w4":
        close(out["canonical"]["u"], 0.0, "u")
        close(out["canonical"]["c"], [0.25] * 4, "c")
    elif name == "reconstruct_gbranch":
        assert out["branch"] == "G" and out["pivot"] == 1
        close(out["A"], 0.9, "A")
        close(out["canonical"]["u"], 0.1, "u")
        close(out["canonical"]["c"], [0.5, 0.3, 0.1], "c")
    elif name.startswith("reconstruct_symmetric_w"):
        n = out["canonical"]["n"]
        assert out["branch"] == "F" and "pivot" not in out
        close(out["A"], 1.0, "A")
        close(out["canonical"]["u"], 0.0, "u")
        close(out["canonical"]["c"], [1 / n] * n, "c")
    elif name == "reconstruct_infeasible":
        assert out == {"no_solution": True}
    elif name == "invariants_gbranch":
        close(out["dets"], [0.2, 0.18, 0.08], "dets")
        close(out["spectra"][0], [(1 - math.sqrt(0.2)) / 2, (1 + math.sqrt(0.2)) / 2], "spectrum")
    elif name == "invariants_n4":
        close(out["dets"], [0.07, 0.12, 0.15, 0.12], "dets")
    elif name == "equiv_shear_self":
        assert out["equivalent"] is True and "witness" in out
    elif name == "equiv_permuted":
        assert out["equivalent"] is False
        close(out["max_profile_gap"], 0.02, "gap")


def main():
    cli = sys.argv[1]
    check = "--check" in sys.argv[2:]
    manifest = json.loads((FIXTURES / "manifest.json").read_text())
    stale = []
    for entry in manifest["fixtures"]:
        args = [cli, entry["command"]]
        for item in entry["inputs"]:
            args += ["--input", str(FIXTURES / item)]
        args += entry.get("args", [])
        run = subprocess.run(args, capture_output=True, text=True)
        assert run.returncode == entry["exit_code"], (entry["name"], run.returncode, run.stderr)
        analytic(entry["name"], json.loads(run.stdout))
        target = FIXTURES / entry["expected"]
        if check:
            if not target.exists() or target.read_text() != run.stdout:
                stale.append(entry["name"])
        else:
            target.write_text(run.stdout)
    if stale:
        sys.exit("stale fixtures: " + ", ".join(stale))


if __name__ == "__main__":
    main()
