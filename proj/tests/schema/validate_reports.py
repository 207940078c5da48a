"""Run every subcommand on a set of inputs and validate the reports.

usage: validate_reports.py <phm> <report.schema.json>
"""

import json
import subprocess
import sys
import tempfile
from pathlib import Path

import jsonschema

MATRICES = {
    "rotation": [[[0, 0], [1, 0]], [[-1, 0], [0, 0]]],
    "imaginary_diag": [[[0, 1], [0, 0]], [[0, 0], [0, 2]]],
    "jordan": [[[0, 0], [1, 0]], [[0, 0], [0, 0]]],
    "hermitian": [[[1, 0], [2, 1]], [[2, -1], [3, 0]]],
    "gray": [[[1, 1e-6], [0, 0]], [[0, 0], [2, 0]]],
    "paired3": [[[1, 0], [2, 1], [0, 0]], [[0, 0], [1, 0], [0, 0]], [[0.5, 0], [0, 0], [3, 0]]],
}


def run(phm, args):
    proc = subprocess.run([phm, *args], capture_output=True, text=True, check=False)
    return proc.returncode, proc.stdout, proc.stderr


def main():
    phm, schema_path = sys.argv[1], sys.argv[2]
    schema = json.loads(Path(schema_path).read_text())
    jsonschema.Draft202012Validator.check_schema(schema)
    validator = jsonschema.Draft202012Validator(schema)
    failures = 0

    def check(label, args, expect_code=0):
        nonlocal failures
        code, out, err = run(phm, args)
        if code != expect_code:
            print(f"FAIL {label}: exit {code}, expected {expect_code}: {err.strip()}")
            failures += 1
            return None
        if expect_code != 0:
            print(f"ok   {label}: exit {code}")
            return None
        errors = sorted(validator.iter_errors(json.loads(out)), key=lambda e: list(e.path))
        if errors:
            print(f"FAIL {label}: {errors[0].message[:300]}")
            failures += 1
        else:
            print(f"ok   {label}")
        return out

    with tempfile.TemporaryDirectory() as tmp:
        for name, entries in MATRICES.items():
            path = Path(tmp) / f"{name}.json"
            path.write_text(json.dumps({"n": len(entries), "entries": entries}))
            for cmd in ("analyze", "realform"):
                check(f"{cmd} {name}", [cmd, str(path)])
                check(f"{cmd} {name} --strict", [cmd, str(path), "--strict", "--seed", "3"])
            first = check(f"determinism {name}", ["realform", str(path), "--seed", "11"])
            second = check(f"determinism {name} (repeat)", ["realform", str(path), "--seed", "11"])
            if first != second:
                print(f"FAIL determinism {name}: reports differ")
                failures += 1

        out_path = Path(tmp) / "report.json"
        code, out, _ = run(phm, ["analyze", str(Path(tmp) / "rotation.json"), "--output", str(out_path)])
        if code != 0 or out or not out_path.exists() or not validator.is_valid(json.loads(out_path.read_text())):
            print("FAIL analyze --output did not write a valid report to the file")
            failures += 1
        else:
            print("ok   analyze --output")

        bad = Path(tmp) / "bad.json"
        bad.write_text('{"n": 2, "entries": [[[1, 0]]]}')
        check("malformed matrix", ["analyze", str(bad)], expect_code=2)
        check("missing file", ["analyze", str(Path(tmp) / "missing.json")], expect_code=2)
        check("unknown flag", ["analyze", str(bad), "--bogus"], expect_code=2)

    check("morse default", ["morse"])
    check("morse flat", ["morse", "--A", "1", "--B", "0", "--C", "0", "--N", "64"])
    check("morse coarse", ["morse", "--N", "16"])
    check("morse bad grid", ["morse", "--N", "100"], expect_code=2)
    check("morse overflow", ["morse", "--N", "4096", "--B", "40"], expect_code=2)
    check("morse degenerate", ["morse", "--A", "0", "--B", "0"], expect_code=2)
    check("selftest", ["selftest"])

    print("all reports valid" if failures == 0 else f"{failures} failure(s)")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
