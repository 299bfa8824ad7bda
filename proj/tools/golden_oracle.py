#!/usr/bin/env python3
"""Brute-force oracle for the survey and search-xlower golden files.

Works on plain Python sets of residues; shares no code with the C++ library.
Writes the full command documents the CLI prints, so a golden check is a
byte comparison of CLI stdout against these files.
"""

import argparse
import json
import math
import os

TOOL_VERSION = "addbase 0.1.0"
SCHEMA_VERSION = 1


def canonical(doc):
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def command_doc(command, echo, payload):
    return {
        "command": command,
        "inputsEcho": echo,
        "payload": payload,
        "schemaVersion": SCHEMA_VERSION,
        "status": {"ok": True},
        "toolVersion": TOOL_VERSION,
    }


def step(cur, a, n):
    return frozenset((x + y) % n for x in cur for y in a)


def generates_by_differences(a, n):
    a0 = min(a)
    g = n
    for x in a:
        g = math.gcd(g, (x - a0) % n)
    return g == 1


def profile(a, n):
    """Orders plus stabilization via first repeat of the sequence hA."""
    full = frozenset(range(n))
    seen = {}
    seq = []
    cur = frozenset(a)
    acc = set()
    nice = weak = None
    h = 1
    while True:
        acc |= cur
        if nice is None and cur == full:
            nice = h
        if weak is None and len(acc) == n:
            weak = h
        if cur in seen:
            stab = seen[cur]
            break
        seen[cur] = h
        seq.append(cur)
        cur = step(cur, a, n)
        h += 1
    return {
        "generatesByDifferences": generates_by_differences(a, n),
        "niceOrder": nice,
        "weakNiceOrder": weak,
        "stabilization": stab,
    }


def survey(h_cap, n_max):
    groups, rows = [], []
    for n in range(2, n_max + 1):
        spec = "C(%d)" % n
        found = []
        for mask in range(1, 1 << n):
            a = [x for x in range(n) if mask >> x & 1]
            if not generates_by_differences(a, n):
                continue
            p = profile(a, n)
            if p["weakNiceOrder"] is not None and p["weakNiceOrder"] <= h_cap:
                found.append((mask, p["niceOrder"]))
        best = max((o for _, o in found), default=0)
        for mask, o in found:
            rows.append({
                "groupSpec": spec,
                "weakOrderCap": h_cap,
                "setMask": mask,
                "niceOrder": o,
                "isMaxForGroup": o == best,
            })
        groups.append({
            "groupSpec": spec,
            "qualifying": len(found),
            "maxNiceOrder": best,
            "argmaxMasks": [m for m, o in found if o == best],
        })
    payload = {"hCap": h_cap, "nMax": n_max, "groups": groups, "rows": rows}
    return command_doc("survey", {"hCap": h_cap, "nMax": n_max}, payload)


def xlower(h):
    g = h * (h + 4) // 3 + 1
    k = g - 1
    full = frozenset(range(g))
    for a in range(g):
        for b in range(a + 1, g):
            s = [a, b]
            cur, acc = frozenset(s), set(s)
            for _ in range(h - 1):
                cur = step(cur, s, g)
                acc |= cur
            if len(acc) != g:
                continue
            cur = frozenset(s)
            for _ in range(k - 2):
                cur = step(cur, s, g)
            if k >= 2 and cur == full:
                continue
            if k == 1:
                continue
            if step(cur, s, g) != full:
                continue
            payload = {
                "params": {"h": h, "g": g, "k": k},
                "groupSpec": "C(%d)" % g,
                "elements": [[a], [b]],
                "profile": profile(s, g),
                "extraChecks": {"weakCoversAtH": True, "kMinusOneFails": True, "kCovers": True},
                "toolVersion": TOOL_VERSION,
            }
            return command_doc("search-xlower", {"h": h, "all": False}, payload)
    raise SystemExit("no witness for h=%d" % h)


def write(path, doc):
    os.makedirs(os.path.dirname(path), exist_ok=True)
    with open(path, "w") as f:
        f.write(canonical(doc))


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", default=os.path.join(os.path.dirname(__file__), "..", "golden"))
    args = ap.parse_args()
    write(os.path.join(args.out, "survey", "hCap2_nMax10.json"), survey(2, 10))
    write(os.path.join(args.out, "survey", "hCap2_nMax5.json"), survey(2, 5))
    write(os.path.join(args.out, "survey", "hCap1_nMax4.json"), survey(1, 4))
    for h in range(2, 6):
        write(os.path.join(args.out, "xlower", "h%d.json" % h), xlower(h))


if __name__ == "__main__":
    main()
