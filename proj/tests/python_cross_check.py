#!/usr/bin/env python3
"""Independent oracle: recompute policy revenues in pure Python and compare
against the CLI on randomly generated markets."""

import json
import math
import os
import random
import subprocess
import sys
import tempfile

BIN = sys.argv[1]
TOL = 1e-9


def quantile_bins(atoms, thresholds):
    """Split atoms across quantile bins by footprint overlap.

    atoms: list of (value, mass); returns per-bin lists of (value, mass).
    """
    cum = 0.0
    footprints = []
    for value, mass in atoms:
        footprints.append((value, cum, cum + mass))
        cum += mass
    footprints[-1] = (footprints[-1][0], footprints[-1][1], 1.0)

    bins = []
    for lo, hi in zip(thresholds, thresholds[1:]):
        if hi <= lo:
            continue
        members = []
        for value, q_lo, q_hi in footprints:
            overlap = min(q_hi, hi) - max(q_lo, lo)
            if overlap > 0:
                members.append((value, overlap))
        bins.append((hi - lo, members))
    return bins


def posted_price_revenue(val, types, posterior):
    total = sum(m for _, m in posterior)
    willingness = []
    for theta, _ in types:
        w = sum(val(theta, omega) * m for omega, m in posterior) / total
        willingness.append(w)
    best = 0.0
    for price in willingness:
        if price <= 0:
            continue
        demand = sum(m for (_, m), w in zip(types, willingness) if w >= price)
        best = max(best, price * demand)
    return best


def policy_revenue(val, types, prior, thresholds):
    rev = 0.0
    for weight, members in quantile_bins(prior, thresholds):
        rev += weight * posted_price_revenue(val, types, members)
    return rev


def optimal_revenue(val, types, prior):
    return sum(m * posted_price_revenue(val, types, [(v, 1.0)]) for v, m in prior)


def random_dist(rng, n_max):
    n = rng.randint(1, n_max)
    values = sorted(rng.uniform(0, 1) for _ in range(n))
    masses = [rng.uniform(0.05, 1) for _ in range(n)]
    total = sum(masses)
    return [(v, m / total) for v, m in zip(values, masses)]


def main():
    rng = random.Random(20240817)
    failures = []
    for trial in range(40):
        types = random_dist(rng, 5)
        prior = random_dist(rng, 5)

        kind = rng.choice(["additive", "hinge", "multiplicative", "affine"])
        if kind == "additive":
            val = lambda t, w: t + w
            kind_json = "additive"
        elif kind == "hinge":
            val = lambda t, w: t * (1 - w) + w
            kind_json = "hinge"
        elif kind == "multiplicative":
            val = lambda t, w: t * w + t
            kind_json = "multiplicative"
        else:
            tgrid = [t for t, _ in types]
            a, s = [], []
            acc_a, acc_s = rng.uniform(0, 0.3), rng.uniform(0.3, 1.0)
            for _ in tgrid:
                acc_a += rng.uniform(0, 0.4)
                acc_s = max(acc_s, acc_a + 0.05) + rng.uniform(0, 0.4)
                a.append(acc_a)
                s.append(acc_s)
            b = [si - ai for si, ai in zip(s, a)]
            table = {t: (ai, bi) for t, ai, bi in zip(tgrid, a, b)}
            val = lambda t, w: table[t][0] + table[t][1] * w
            kind_json = {"affine": {"types": tgrid, "a": a, "b": b}}

        k = rng.randint(1, 5)
        thresholds = [0.0] + sorted(rng.uniform(0.02, 0.98) for _ in range(k - 1)) + [1.0]

        instance = {
            "valuation": {"kind": kind_json},
            "types": {"atoms": [{"value": v, "mass": m} for v, m in types]},
            "prior": {"atoms": [{"value": v, "mass": m} for v, m in prior]},
        }
        with tempfile.NamedTemporaryFile("w", suffix=".json", delete=False) as handle:
            json.dump(instance, handle)
            path = handle.name
        try:
            out = subprocess.run(
                [BIN, "simulate", "--instance", path, "--policy",
                 ",".join(repr(t) for t in thresholds), "--format", "json"],
                capture_output=True, text=True, check=True).stdout
        finally:
            os.unlink(path)
        got = json.loads(out)

        want_rev = policy_revenue(val, types, prior, thresholds)
        want_opt = optimal_revenue(val, types, prior)
        if not math.isclose(got["rev"], want_rev, rel_tol=0, abs_tol=TOL):
            failures.append(f"trial {trial}: rev {got['rev']} vs oracle {want_rev}")
        if not math.isclose(got["opt"], want_opt, rel_tol=0, abs_tol=TOL):
            failures.append(f"trial {trial}: opt {got['opt']} vs oracle {want_opt}")

    if failures:
        print("cross-check failures:")
        for f in failures:
            print(" -", f)
        sys.exit(1)
    print("python cross-check ok (40 markets)")


if __name__ == "__main__":
    main()
