"""Runs the built CLI and compares its JSON against the frozen oracle values.

  python3 cli_crosscheck.py path/to/dpq frozen.json
"""
import json
import subprocess
import sys
from fractions import Fraction


def run(exe, *args, code=0):
    p = subprocess.run([exe, *args, "--format", "json"], capture_output=True, text=True)
    if p.returncode != code:
        raise SystemExit(f"{' '.join(args)}: exit {p.returncode}, wanted {code}\n{p.stderr}")
    return json.loads(p.stdout)


def frac(v):
    return Fraction(str(v))


def main():
    exe, frozen = sys.argv[1], sys.argv[2]
    with open(frozen) as f:
        want = json.load(f)
    bad = []

    # the CLI takes degrees 4..9 only
    for deg, n in want["line_counts"].items():
        if int(deg) < 4:
            continue
        got = run(exe, "lines", "--degree", deg)
        if got["count"] != n:
            bad.append(f"lines degree {deg}: {got['count']} != {n}")
    for deg, n in want["weyl_orders"].items():
        if int(deg) < 4:
            continue
        got = run(exe, "weyl-order", "--degree", deg)
        if got["order"] != n:
            bad.append(f"weyl-order degree {deg}: {got['order']} != {n}")

    rows = run(exe, "table1")
    for got, w in zip(rows, want["table1"], strict=True):
        same = (got["m"], got["q"], got["chain"]) == (w["m"], w["q"], w["chain"]) and all(
            frac(got[k]) == frac(w[k]) for k in ("delta_K2", "delta_C2", "delta_D2"))
        if not same:
            bad.append(f"table1 row {w['m']},{w['q']}")

    s5 = run(exe, "s5-lemma")
    if (s5["subgroups_checked"], s5["conjugacy_classes"]) != (want["s5"]["subgroups"], want["s5"]["classes"]):
        bad.append("s5-lemma counts")

    # exit 2: the stated Jacobian at p1 does not hold, and the oracle agrees
    cr = run(exe, "cremona", code=2)
    stated = want["cremona"]["points"]
    for point in ("p1", "p2"):
        rows = [c for c in cr["checks"] if c["name"].startswith("Jacobian characteristic polynomial at " + point)]
        if len(rows) != 1 or rows[0]["ok"] != stated[point]["matches_stated"]:
            bad.append(f"cremona Jacobian at {point}")

    for b in bad:
        print("mismatch:", b, file=sys.stderr)
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
