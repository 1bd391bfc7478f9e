# Copyright 2026 The qe7 Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.


"""End-to-end checks of the qe7 command-line tool: exit codes, schemas, round trips."""

import json
import pathlib
import subprocess
import sys

import jsonschema

QE7 = sys.argv[1]
SCHEMA_DIR = pathlib.Path(sys.argv[2])

failures = []


def run(*args):
    return subprocess.run([QE7, *args], capture_output=True, text=True)


def check(name, cond, detail=""):
    print(("PASS " if cond else "FAIL ") + name + ("" if cond else "  " + detail))
    if not cond:
        failures.append(name)


def validated(name, schema, *args):
    proc = run(*args)
    check(name + " exit 0", proc.returncode == 0, proc.stderr)
    if proc.returncode != 0:
        return None
    doc = json.loads(proc.stdout)
    schema_doc = json.loads((SCHEMA_DIR / (schema + ".schema.json")).read_text())
    try:
        jsonschema.validate(doc, schema_doc)
        check(name + " schema", True)
    except jsonschema.ValidationError as e:
        check(name + " schema", False, e.message)
    return doc


roots = validated("enumerate roots", "enumerate", "enumerate", "roots")
check("roots count", roots is not None and roots["count"] == 63 and len(roots["items"]) == 63)
weights = validated("enumerate weights", "enumerate", "enumerate", "weights")
check("weights count", weights is not None and weights["count"] == 56)
lags = validated("enumerate lagrangians", "enumerate", "enumerate", "lagrangians", "--k", "3")
check("lagrangian count", lags is not None and lags["count"] == 135)
quads = validated("enumerate quadforms", "enumerate", "enumerate", "quadforms", "--k", "3")
if quads is not None:
    zeros = sorted({q["zeros"] for q in quads["items"]})
    check("quadform zero counts", zeros == [28, 36], str(zeros))
count = validated("count only", "enumerate", "enumerate", "roots", "--count-only")
check("count only value", count is not None and count["count"] == 63)
proc = run("enumerate", "roots", "--count-only", "--text")
check("count only text", proc.stdout.strip() == "63", proc.stdout)

dec = validated("decompose", "decompose", "decompose")
if dec is not None:
    fgb = [l for l in dec["lines"] if l.get("name") == "FGB"]
    check("decompose FGB weights", len(fgb) == 1 and sorted(fgb[0]["weights"]) == ["W18", "W23", "W45", "W67"])
    all_weights = sorted(w for l in dec["lines"] for w in l["weights"])
    check("decompose partitions 28 weights", len(set(all_weights)) == 28 == len(all_weights))
dec2 = validated("decompose other", "decompose", "decompose", "--lagrangian", "100:000,010:000,000:001")

lift = validated("lift", "lift", "lift", "--v", "1:0", "--k", "1")
check("lift M_1 entries", lift is not None and lift["entries"] == [
    [["1/2^1", "0/2^0", "-1/2^1", "0/2^0"], ["1/2^1", "0/2^0", "1/2^1", "0/2^0"]],
    [["1/2^1", "0/2^0", "1/2^1", "0/2^0"], ["1/2^1", "0/2^0", "-1/2^1", "0/2^0"]]])
pi = validated("pi", "pi", "pi", "--root", "R2568")
check("pi R2568", pi is not None and pi["pi"] == "100:000" and pi["simple_coords"] == [1, 1, 1, 2, 2, 1, 0])
orders = validated("orders k2", "orders", "orders", "--k", "2")
check("orders k2 values", orders is not None and orders["sp_order"] == 720 and orders["lagrangians"] == 15)

rep = validated("verify hopf", "verify", "verify", "hopf", "--json")
check("verify hopf passed", rep is not None and rep["passed"])

# Round trip: every exported name is accepted back by the tool.
if roots is not None:
    bad = [r["name"] for r in roots["items"]
           if json.loads(run("pi", "--root", r["name"]).stdout or "{}").get("root") != r["name"]]
    check("root names round trip", not bad, ",".join(bad))
if lags is not None:
    sample = lags["items"][::17]
    bad = [l["basis"] for l in sample
           if json.loads(run("decompose", "--lagrangian", l["basis"]).stdout or "{}").get("lagrangian") != l["basis"]]
    check("lagrangian bases round trip", not bad, ",".join(bad))
if quads is not None:
    odd = [q for q in quads["items"] if q["parity"] == "odd"]
    check("odd labels cover weights", weights is not None and
          sorted({w["odd_form"] for w in weights["items"]}) == sorted(q["label"] for q in odd))

for name, args, code in [
    ("unknown suite", ["verify", "bogus"], 2),
    ("no subcommand", [], 2),
    ("bad enumerate kind", ["enumerate", "foo"], 2),
    ("malformed vector", ["lift", "--v", "1x0"], 2),
    ("rank mismatch", ["lift", "--v", "10:01", "--k", "3"], 2),
    ("bad k", ["enumerate", "lagrangians", "--k", "9"], 2),
    ("non-lagrangian", ["decompose", "--lagrangian", "100:000,010:000,000:100"], 2),
    ("bad root", ["pi", "--root", "R99"], 2),
    ("help", ["--help"], 0),
]:
    proc = run(*args)
    check("exit code " + name, proc.returncode == code, f"got {proc.returncode}: {proc.stderr.strip()}")

print(f"{len(failures)} failure(s)")
sys.exit(1 if failures else 0)
