"""Exit codes, key output fragments and reproducibility of the kms command line tool."""

import json
import os
import subprocess
import sys
import tempfile

KMS = sys.argv[1]
failures = []


def run(expected, needle, *args):
    proc = subprocess.run([KMS, *args], capture_output=True, text=True)
    label = "kms " + " ".join(args)
    if proc.returncode != expected:
        failures.append(f"{label}: exit {proc.returncode}, expected {expected}\n{proc.stdout}{proc.stderr}")
    elif needle and needle not in proc.stdout:
        failures.append(f"{label}: output lacks {needle!r}\n{proc.stdout}")
    return proc.stdout


A2 = "[[2,-1],[-1,2]]"
AFF = "[[2,-2],[-2,2]]"

run(0, '"kind": "Finite"', "classify", "--gcm", A2)
run(0, '"kind": "Affine"', "classify", "--gcm", AFF)
run(2, "NonReducedWord", "dl-apply", "--gcm", A2, "--word", "0,0", "--lambda", "1,1")
run(2, "AsymmetricZero", "classify", "--gcm", "[[2,-1],[0,2]]")
run(2, "", "roots", "--gcm", "[[2]]", "--depth", "notanumber")
run(2, "ParseError", "satake", "--gcm", "[[2]]", "--lambda", "2", "--q", "two")
run(0, '"-1": 4', "oracle-spherical", "--lambda", "1", "--precision", "4", "--q", "2")
run(2, "PrecisionTooLow", "oracle-spherical", "--lambda", "2", "--precision", "4", "--q", "2")
run(0, '"value": "27/8"', "cfunction", "--gcm", A2, "--q", "2")
run(0, '"coeff": "1/2"', "satake", "--gcm", "[[2]]", "--lambda", "2", "--q", "2")
run(0, '"stabilized": true', "approx-check", "--gcm", AFF, "--chain", "2,2;3,3;4,4", "--depth", "2")
run(0, '"matches_upsilon": true', "approx-check", "--gcm", "[[2]]", "--chain", "2,4,6", "--depth", "2", "--q", "2")
run(0, '"sums_match": true', "oracle-iwahori", "--lambda", "1", "--precision", "4", "--q", "3")
run(0, '"all_passed": true', "verify-all")

doc = json.loads(run(0, "", "roots", "--gcm", '{"cartan": ' + AFF + ', "labels": ["a0", "a1"]}', "--depth", "3"))
if doc["version"] != "0.1.0" or doc["config"]["command"] != "roots":
    failures.append("missing version or config echo")

first = run(0, "", "satake", "--gcm", A2, "--lambda", "2,1", "--q", "formal")
second = run(0, "", "satake", "--gcm", A2, "--lambda", "2,1", "--q", "formal")
if first != second:
    failures.append("satake output differs between identical runs")

with tempfile.TemporaryDirectory() as tmp:
    path = os.path.join(tmp, "ups.json")
    run(0, "", "upsilon", "--gcm", "[[2]]", "--depth", "3", "--q", "2", "--out", path)
    with open(path) as f:
        written = f.read()
    if written != run(0, "", "upsilon", "--gcm", "[[2]]", "--depth", "3", "--q", "2"):
        failures.append("--out file differs from stdout")

for f in failures:
    print("FAIL", f)
print(f"{len(failures)} failures")
sys.exit(1 if failures else 0)
