#!/usr/bin/env python3
"""End-to-end checks for the command-line tool.

Usage: cli_tests.py <gmicol-binary> <fixture-dir>

Each case runs the real binary and asserts on exit code, stdout JSON, and
stderr text. Failures print the offending command and its output.
"""

import json
import os
import subprocess
import sys
import tempfile

BINARY = sys.argv[1]
FIXTURES = sys.argv[2]

failures = []


def run(*args):
    return subprocess.run([BINARY, *args], capture_output=True, text=True)


def fixture(name):
    return os.path.join(FIXTURES, name + ".json")


def case(name, proc, expect_code, checks=()):
    problems = []
    if proc.returncode != expect_code:
        problems.append(f"exit {proc.returncode}, expected {expect_code}")
    for check in checks:
        err = check(proc)
        if err:
            problems.append(err)
    if problems:
        failures.append(name)
        print(f"FAIL  {name}: {'; '.join(problems)}")
        print(f"      stdout: {proc.stdout[:400]!r}")
        print(f"      stderr: {proc.stderr[:400]!r}")
    else:
        print(f"ok    {name}")


def stdout_json(*path_and_value):
    *path, value = path_and_value

    def check(proc):
        try:
            doc = json.loads(proc.stdout)
        except json.JSONDecodeError as e:
            return f"stdout is not JSON ({e})"
        node = doc
        for key in path:
            if key not in node:
                return f"missing {'.'.join(path)}"
            node = node[key]
        if node != value:
            return f"{'.'.join(path)} = {node!r}, expected {value!r}"
        return None

    return check


def stderr_contains(text):
    def check(proc):
        if text not in proc.stderr:
            return f"stderr lacks {text!r}"
        return None

    return check


def jsonl_stream(min_pivots):
    def check(proc):
        lines = [ln for ln in proc.stdout.splitlines() if ln]
        try:
            events = [json.loads(ln) for ln in lines]
        except json.JSONDecodeError as e:
            return f"stream line is not JSON ({e})"
        if not events or events[-1]["type"] != "report":
            return "stream does not end with a report"
        pivots = sum(1 for e in events if e["type"] == "pivot")
        if pivots < min_pivots:
            return f"only {pivots} pivot records"
        return None

    return check


case("solve box", run("solve", fixture("box")), 0,
     [stdout_json("status", "optimal"), stdout_json("value", "2"),
      stdout_json("y", ["1", "1"])])

case("solve mixed", run("solve", fixture("mixed")), 0,
     [stdout_json("value", "1"), stdout_json("y", ["1", "3/2"])])

case("solve forced_half", run("solve", fixture("forced_half")), 2,
     [stdout_json("status", "infeasible")])

case("solve integral_lp", run("solve", fixture("integral_lp")), 0,
     [stdout_json("value", "2"), stdout_json("cut_iterations", 0)])

case("solve --lp stops at the relaxation", run("solve", "--lp", fixture("box")), 0,
     [stdout_json("value", "3")])

case("lp subcommand", run("lp", fixture("forced_half")), 0,
     [stdout_json("value", "1/2")])

case("solve rejects fractional data", run("solve", fixture("bad_fractional_b")), 1,
     [stderr_contains("integral")])

case("solve rejects an empty integer set", run("solve", fixture("bad_empty_int_set")), 1,
     [stderr_contains("int_set")])

case("solve rejects a missing file", run("solve", "/nonexistent.json"), 1,
     [stderr_contains("cannot open")])

case("oracle box", run("oracle", fixture("box")), 0,
     [stdout_json("value", "2"), stdout_json("witness", ["1", "1"])])

with tempfile.TemporaryDirectory() as tmp:
    bounds_path = os.path.join(tmp, "bounds.json")
    with open(bounds_path, "w") as fh:
        fh.write("[[1, 1], [0, 0]]")
    case("oracle --bounds restricts the search",
         run("oracle", fixture("box"), "--bounds", bounds_path), 0,
         [stdout_json("value", "1"), stdout_json("witness", ["1", "0"])])

case("oracle refuses an open region", run("oracle", fixture("unbounded_region")), 1,
     [stderr_contains("bound")])

case("check box", run("check", fixture("box")), 0,
     [stdout_json("passed", True)])

case("check flags corrupted cuts",
     run("check", fixture("box"), "--inject-bad-cut"), 1,
     [stdout_json("passed", False)])

case("trace streams JSONL", run("trace", fixture("box")), 0, [jsonl_stream(3)])

with tempfile.TemporaryDirectory() as tmp:
    trace_path = os.path.join(tmp, "trace.jsonl")
    proc = run("solve", fixture("box"), "--trace", trace_path)
    case("solve --trace keeps the report on stdout", proc, 0,
         [stdout_json("value", "2")])
    with open(trace_path) as fh:
        lines = [json.loads(ln) for ln in fh if ln.strip()]
    if not lines or lines[-1]["type"] != "report":
        failures.append("solve --trace file")
        print("FAIL  solve --trace file: stream does not end with a report")
    else:
        print("ok    solve --trace file")

case("iteration limit exits 3",
     run("solve", fixture("box"), "--max-iter", "1"), 3,
     [stdout_json("status", "limit_reached")])

case("pivot limit exits 3",
     run("solve", fixture("box"), "--max-pivots", "1"), 3,
     [stdout_json("status", "limit_reached")])

case("boundedness check passes on a closed region",
     run("solve", fixture("box"), "--verify-bounded"), 0,
     [stdout_json("value", "2")])

case("boundedness check rejects an open region",
     run("solve", fixture("unbounded_region"), "--verify-bounded"), 1,
     [stderr_contains("unbounded along direction")])

case("open region without the check reads as infeasible",
     run("solve", fixture("unbounded_region")), 2,
     [stdout_json("status", "infeasible")])

case("uncertified objective is refused",
     run("solve", fixture("unverified_value")), 1,
     [stderr_contains("assume-integer-value")])

case("assumption flag admits the instance",
     run("solve", fixture("unverified_value"), "--assume-integer-value"), 0,
     [stdout_json("value", "4")])

case("false value assumption is refuted",
     run("solve", fixture("false_value_hypothesis"), "--assume-integer-value"), 1,
     [stderr_contains("hypothesis")])

print(f"\n{len(failures)} failing case(s)" if failures else "\nall cases passed")
sys.exit(1 if failures else 0)
