#!/usr/bin/env python3
"""End-to-end checks of the primeveil CLI: exit codes, JSON schema
conformance, determinism, and the replay flag."""

import json
import os
import subprocess
import sys
import tempfile

BINARY = sys.argv[1]
SCHEMA_PATH = sys.argv[2]

try:
    import jsonschema
except ImportError:  # pragma: no cover
    jsonschema = None

with open(SCHEMA_PATH) as fh:
    SCHEMA = json.load(fh)

failures = []


def check(name, cond, detail=""):
    if cond:
        print(f"ok   {name}")
    else:
        print(f"FAIL {name} {detail}")
        failures.append(name)


def run(*args, env_extra=None, stdin_text=None):
    env = dict(os.environ)
    if env_extra:
        env.update(env_extra)
    proc = subprocess.run(
        [BINARY, *args],
        capture_output=True,
        text=True,
        env=env,
        input=stdin_text,
    )
    return proc


def run_json(*args, expect_code=0, env_extra=None):
    proc = run(*args, "--format", "json", env_extra=env_extra)
    check(f"exit[{' '.join(args)}]", proc.returncode == expect_code,
          f"got {proc.returncode}: {proc.stdout} {proc.stderr}")
    doc = json.loads(proc.stdout)
    validate(doc, " ".join(args))
    return doc


def validate(doc, label):
    if jsonschema is None:
        return
    try:
        jsonschema.validate(doc, SCHEMA)
        check(f"schema[{label}]", True)
    except jsonschema.ValidationError as e:
        check(f"schema[{label}]", False, str(e)[:200])


def no_raw_numbers(node):
    if isinstance(node, dict):
        return all(no_raw_numbers(v) for v in node.values())
    if isinstance(node, list):
        return all(no_raw_numbers(v) for v in node)
    return not isinstance(node, (int, float)) or isinstance(node, bool)


# --- certify verdicts -------------------------------------------------------

free = run_json("certify", "--poly", "4*x*y")
check("certify prime_free", free["verdict"] == "prime_free")
check("certify bound_B", free["bound_B"] == "16")
check("certify certificate", free["certificate"]["sweep_points"] == "256")
check("primality flag present", free["primality_probabilistic"] is False)
check("no raw numbers", no_raw_numbers(free))

inc = run_json("certify", "--poly", "x^2+2*x*y+y^2")
check("certify inconclusive", inc["verdict"] == "inconclusive")
check("certify violation tuple",
      (inc["violation"]["a"], inc["violation"]["b"], inc["violation"]["c"],
       inc["violation"]["d"], inc["violation"]["x"], inc["violation"]["y"]) ==
      ("1", "1", "1", "1", "1", "2"))
check("certify violation values",
      (inc["violation"]["f_ab"], inc["violation"]["f_cd"], inc["violation"]["f_xy"]) ==
      ("4", "4", "9"))

found = run_json("certify", "--poly", "x^2+y^2+x*y")
check("certify prime_found", found["verdict"] == "prime_found")
check("certify witness", found["witness"] == {"x": "1", "y": "1", "value": "3"})

uni_free = run_json("certify", "--poly", "4*x", "--univariate")
check("univariate prime_free", uni_free["verdict"] == "prime_free")
check("univariate bound f(2)", uni_free["bound_B"] == "8")

uni_inc = run_json("certify", "--poly", "x^2", "--univariate")
check("univariate inconclusive", uni_inc["verdict"] == "inconclusive")
check("univariate violation", (uni_inc["violation"]["a"], uni_inc["violation"]["x"]) ==
      ("1", "2"))

uni_found = run_json("certify", "--poly", "x", "--univariate")
check("univariate prime_found", uni_found["witness"]["value"] == "2")

# --- errors and exit codes --------------------------------------------------

bad = run_json("certify", "--poly", "x + 1", expect_code=2)
check("constant term kind", bad["error"]["parse_kind"] == "constant_term")
check("constant term offset", bad["error"]["offset"] == "4")

neg = run_json("search", "--poly", "x - y", expect_code=2)
check("negative kind", neg["error"]["parse_kind"] == "negative")

not_uni = run_json("certify", "--poly", "4*x*y", "--univariate", expect_code=2)
check("not univariate kind", not_uni["error"]["kind"] == "not_univariate")

capped = run_json("certify", "--poly", "4*x*y", expect_code=3,
                  env_extra={"PRIMEVEIL_B_CAP": "8"})
check("resource limit kind", capped["error"]["kind"] == "resource_limit")

flag_over_env = run_json("certify", "--poly", "4*x*y", "--b-cap", "100",
                         env_extra={"PRIMEVEIL_B_CAP": "8"})
check("flag overrides env", flag_over_env["verdict"] == "prime_free")

# --- search / early / analyze ----------------------------------------------

s = run_json("search", "--poly", "x*y", "--bound", "12")
check("search prime", s["outcome"] == "prime" and s["steps"] == "2")

s2 = run_json("search", "--poly", "4*x*y", "--bound", "100")
check("search exhausted", s2["outcome"] == "exhausted" and s2["points_scanned"] == "10000")

e = run_json("early", "--poly", "4*x*y", "--bound", "12")
check("early collision", e["outcome"] == "collision_first")
check("early collision detail",
      (e["collision"]["x"], e["collision"]["y"], e["collision"]["value"],
       e["collision"]["first_x"], e["collision"]["first_y"], e["steps"]) ==
      ("2", "1", "8", "1", "2", "13"))

e_prime = run_json("early", "--poly", "x^2+y^2+x*y", "--bound", "12")
check("early prime first", e_prime["outcome"] == "prime_first" and e_prime["steps"] == "1")

e_neither = run_json("early", "--poly", "4*x*y", "--bound", "1")
check("early neither", e_neither["outcome"] == "neither" and
      e_neither["points_scanned"] == "1")

a = run_json("analyze", "--poly", "4xy")
check("analyze gcd", a["grid_gcd"]["value"] == "4")
check("analyze specialize", a["specialize_y_1"]["polynomial"] == "4*x")
check("analyze values", a["values_upto"]["count"] == "3")

# --- claims -----------------------------------------------------------------

c = run_json("claims", "--poly", "x^2", "--bound", "10", "--claim", "shift_lemma")
ids = [r["claim_id"] for r in c["reports"]]
check("claims filter", ids == ["shift_lemma_1", "shift_lemma_2", "shift_lemma_3"])
check("claims part3 falsified", c["reports"][2]["status"] == "falsified")
check("claims part3 witness",
      c["reports"][2]["counterexamples"][0]["assignment"] ==
      {"e": "2", "a": "1", "x": "2", "y": "1"})

allc = run_json("claims", "--poly", "x", "--bound", "6")
by_id = {r["claim_id"]: r for r in allc["reports"]}
check("claims full set", len(by_id) == 11)
check("gcd_composite falsified", by_id["gcd_composite"]["status"] == "falsified")
has24 = any(ce["assignment"] == {"x": "2", "y": "4"}
            for ce in by_id["gcd_composite"]["counterexamples"])
check("gcd_composite contains (2,4)", has24)

with tempfile.TemporaryDirectory() as tmp:
    corpus = os.path.join(tmp, "corpus.txt")
    with open(corpus, "w") as fh:
        fh.write("# prime-free and not\n4*x*y\n\nx^2+2*x*y+y^2\nx*y\n")
    mo = run_json("claims", "--corpus", corpus)
    summary = mo["minimal_obstruction"]["summary"]
    check("corpus upheld", summary["status"] == "upheld")
    check("corpus counts", (summary["checked"], summary["skipped"]) == ("2", "1"))
    entries = mo["minimal_obstruction"]["entries"]
    check("corpus entry obstruction",
          entries[0]["obstruction"]["status"] == "obstruction_equal_composite")
    check("corpus excluded witness",
          entries[2]["prime_witness"] == {"x": "1", "y": "2", "value": "2"})

    seeded = run_json("claims", "--seed-corpus", corpus)
    check("seed-corpus alias", seeded["minimal_obstruction"]["summary"]["status"] == "upheld")

    # --- replay -------------------------------------------------------------
    rep_path = os.path.join(tmp, "report.json")
    with open(rep_path, "w") as fh:
        json.dump(inc, fh)
    ok = run("certify", "--replay", rep_path, "--format", "json")
    check("replay verified", ok.returncode == 0 and
          json.loads(ok.stdout)["replay"] == "verified")
    validate(json.loads(ok.stdout), "replay")

    doctored = dict(inc)
    doctored["violation"] = dict(inc["violation"], f_xy="5")
    with open(rep_path, "w") as fh:
        json.dump(doctored, fh)
    bad_replay = run("certify", "--replay", rep_path, "--format", "json")
    check("replay rejects doctored report", bad_replay.returncode == 4)

    with open(rep_path, "w") as fh:
        fh.write("not json at all")
    malformed = run("certify", "--replay", rep_path, "--format", "json")
    check("replay rejects malformed input", malformed.returncode == 2)

stdin_replay = run("certify", "--replay", "-", "--format", "json",
                   stdin_text=json.dumps(free))
check("replay from stdin", stdin_replay.returncode == 0)

# --- determinism ------------------------------------------------------------

one = run("certify", "--poly", "x^2+2*x*y+y^2", "--format", "json", "--no-timing")
two = run("certify", "--poly", "x^2+2*x*y+y^2", "--format", "json", "--no-timing")
check("byte-identical output (jobs 1)", one.stdout == two.stdout and one.stdout)

j4 = json.loads(run("certify", "--poly", "x^2+2*x*y+y^2", "--jobs", "4",
                    "--format", "json", "--no-timing").stdout)
j1 = json.loads(one.stdout)
j4.pop("jobs"), j1.pop("jobs")
check("jobs 4 matches jobs 1", j4 == j1)

timed = json.loads(run("certify", "--poly", "4*x*y", "--format", "json").stdout)
check("wall_ms is decimal", timed["wall_ms"].isdigit())

# --- text format -----------------------------------------------------------

text = run("certify", "--poly", "4*x*y", "--no-timing")
check("text format", "verdict: prime_free" in text.stdout and
      "certificate.tuples_checked:" in text.stdout)
text_err = run("certify", "--poly", "x + 1")
check("text error to stderr", text_err.returncode == 2 and "constant" in text_err.stderr)

print()
if failures:
    print(f"{len(failures)} CLI check(s) failed")
    sys.exit(1)
print("all CLI checks passed")
