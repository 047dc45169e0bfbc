#!/usr/bin/env python3
"""CLI contract checks: schema validity, exit codes, determinism, CSV headers."""
import json
import pathlib
import subprocess
import sys
import tempfile

import jsonschema

BIN = pathlib.Path(sys.argv[1])
ROOT = pathlib.Path(sys.argv[2])
SCHEMAS = ROOT / "schemas"
DATA = ROOT / "data"
failures = []


def run(*args):
    return subprocess.run([str(BIN), *map(str, args)], capture_output=True, text=True, timeout=600)


def check(name, cond, info=""):
    print(f"[{'ok' if cond else 'FAIL'}] {name}")
    if not cond:
        failures.append(name)
        if info:
            print(info)


def validate(command, args):
    r = run(command, *args)
    if r.returncode != 0:
        check(f"{command} runs", False, r.stderr)
        return None
    doc = json.loads(r.stdout)
    schema = json.loads((SCHEMAS / f"{command}.schema.json").read_text())
    try:
        jsonschema.validate(doc, schema)
        check(f"{command} output matches schema", True)
    except jsonschema.ValidationError as e:
        check(f"{command} output matches schema", False, str(e))
    return r.stdout


catalan = DATA / "catalan.txt"
validate("fekete", ["--p", 13, "--count", 20])
validate("charsum", ["--p", 101, "--max-length", 60])
validate("charsum", ["--p", 101, "--max-length", 60, "--shift", "0,1"])
validate("alg2rec", [catalan])
validate("alg2rec", [DATA / "constant.txt"])
validate("extend", ["--h", catalan, "--initial", "1", "--count", 30])
validate("guess", ["--terms", "1,1,2,5,14,42,132,429,1430,4862,16796,58786,208012,742900,2674440"])
validate("guess", ["--terms", "1,2,4,8,16,32,64,128,256,512,1024,2048,4096,8192,16384,32768",
                   "--order", 1, "--coeff-degree", 0])
validate("dpn", ["--primes", "7,11", "--n-min", 2, "--n-max", 6])
validate("oscillation", ["--suite", "all", "--trials", 10])
validate("repro", ["--criteria", "1,2,4"])

# extend with a recurrence file produced by alg2rec
with tempfile.TemporaryDirectory() as tmp:
    rec = pathlib.Path(tmp) / "rec.json"
    r = run("--out", rec, "alg2rec", catalan)
    check("--out writes the file, stdout empty", r.returncode == 0 and r.stdout == "" and rec.exists())
    r = run("extend", "--rec", rec, "--initial", "1", "--count", 8, "--format", "csv")
    values = [line.split(",")[1] for line in r.stdout.strip().splitlines()[1:]]
    check("extend --rec reproduces Catalan numbers", values == ["1", "1", "2", "5", "14", "42", "132", "429"], r.stdout)

# exit codes
codes = {
    "non-prime modulus -> 3": (run("fekete", "--p", 15, "--count", 5), 3),
    "malformed h -> 2": (run("alg2rec", DATA / "malformed.txt"), 2),
    "missing h file -> 2": (run("alg2rec", DATA / "does_not_exist.txt"), 2),
    "reducible h -> 3": (run("alg2rec", DATA / "reducible.txt"), 3),
    "unknown flag -> 2": (run("fekete", "--p", 7, "--count", 3, "--bogus"), 2),
    "bad format -> 2": (run("--format", "xml", "fekete", "--p", 7, "--count", 3), 2),
    "missing subcommand -> 2": (run(), 2),
    "dpn N < 2 -> 2": (run("dpn", "--primes", "7", "--n-min", 1, "--n-max", 3), 2),
    "extend needs one source -> 2": (run("extend", "--initial", "1", "--count", 3), 2),
    "singular index -> 3": (run("extend", "--rec", DATA / "singular_rec.json", "--initial", "1", "--count", 6), 3),
}
for name, (r, want) in codes.items():
    check(f"exit code: {name}", r.returncode == want, f"got {r.returncode}: {r.stderr}")

# logs on stderr, data on stdout
r = run("alg2rec", catalan)
check("logs go to stderr", r.stderr.startswith("holo:") and "holo:" not in r.stdout)

# determinism across runs and worker counts
for args in (["oscillation", "--suite", "legendre", "--trials", 30],
             ["oscillation", "--suite", "grid"],
             ["dpn", "--primes", "5,7", "--n-min", 2, "--n-max", 5],
             ["charsum", "--p", 211, "--max-length", 150]):
    outs = {run("--seed", 7, "--workers", w, *args).stdout for w in (1, 1, 3)}
    check(f"deterministic output: {' '.join(map(str, args[:3]))}", len(outs) == 1)
r1 = run("--seed", 1, "oscillation", "--suite", "legendre", "--trials", 5).stdout
r2 = run("--seed", 2, "oscillation", "--suite", "legendre", "--trials", 5).stdout
check("seed changes the sampled instances", r1 != r2)

# CSV headers
headers = {
    ("fekete", "--p", 7, "--count", 3): "n,value",
    ("dpn", "--primes", "7", "--n-min", 2, "--n-max", 3): "p,N,d_p(N),bound_value",
    ("alg2rec", catalan): "quantity,measured,bound,satisfied,formula",
    ("oscillation", "--suite", "constant"): "suite,ok,summary",
}
for args, header in headers.items():
    r = run("--format", "csv", *args)
    check(f"csv header: {args[0]}", r.stdout.splitlines()[0] == header, r.stdout[:200])

print(f"{len(failures)} failure(s)")
sys.exit(1 if failures else 0)
