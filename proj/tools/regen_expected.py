#!/usr/bin/env python3
"""Regenerate the pinned reports under data/expected from data/manifest.json.

usage: regen_expected.py <equideform binary> [data dir]
"""
import json
import os
import subprocess
import sys


def main() -> int:
    binary = sys.argv[1]
    data = sys.argv[2] if len(sys.argv) > 2 else os.path.join(os.path.dirname(__file__), "..", "data")
    manifest = json.load(open(os.path.join(data, "manifest.json")))
    env = {k: v for k, v in os.environ.items() if k != "EQUIDEFORM_MAX_ORDER"}
    for job in manifest["jobs"]:
        cmd = [binary, job["command"], "--input", os.path.join(data, job["input"]), *job["args"]]
        proc = subprocess.run(cmd, capture_output=True, env=env)
        if proc.returncode != job["exit"]:
            print(f"unexpected exit {proc.returncode}: {' '.join(cmd)}", file=sys.stderr)
            return 1
        if "expected" in job:
            path = os.path.join(data, job["expected"])
            os.makedirs(os.path.dirname(path), exist_ok=True)
            with open(path, "wb") as f:
                f.write(proc.stdout)
    return 0


if __name__ == "__main__":
    sys.exit(main())
