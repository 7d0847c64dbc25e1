#!/usr/bin/env python3
"""Regenerate the newform fixtures with PARI/GP (cypari2).

Test-only oracle; the C++ library never calls this. Each fixture is a
FourierExpansion JSON of a rational newform. Forms are picked out of the
eigenbasis by their leading coefficients so that the choice is explicit.
"""
import json
import sys
from pathlib import Path

import cypari2

pari = cypari2.Pari()
PREC = 150
OUT = Path(__file__).resolve().parent


def rational_newforms(N, k):
    mf = pari.mfinit([N, k, 1], 0)
    forms = []
    for f in pari.mfeigenbasis(mf):
        coeffs = pari.mfcoefs(f, PREC)
        if all(str(pari.type(c)) in ("t_INT", "t_FRAC") for c in coeffs):
            forms.append([int(c) for c in coeffs])
    return forms


def pick(N, k, **want):
    for a in rational_newforms(N, k):
        if all(a[int(n[1:])] == v for n, v in want.items()):
            return a
    raise SystemExit(f"no rational newform at ({N},{k}) with {want}")


def fourier_json(k, coeffs):
    return {
        "schema": 1,
        "weight": k,
        "width": 1,
        "field_order": 1,
        "precision": len(coeffs) - 1,
        "coeffs": [{"order": 1, "coeffs": [str(c)]} for c in coeffs],
    }


def eta_delta():
    # q * prod (1 - q^n)^24, independent of PARI
    series = [0] * (PREC + 1)
    series[1] = 1
    for n in range(1, PREC + 1):
        for _ in range(24):
            for i in range(PREC, n - 1, -1):
                series[i] -= series[i - n]
    return series


FIXTURES = {
    "delta": (12, eta_delta),
    "f11": (2, lambda: pick(11, 2, a2=-2)),
    "f32": (2, lambda: pick(32, 2, a5=-2)),
    "f37_rank0": (2, lambda: pick(37, 2, a2=0, a3=1)),
    "f37_rank1": (2, lambda: pick(37, 2, a2=-2, a3=-3)),
    "f49": (2, lambda: pick(49, 2, a2=1)),
    "f8_k16_a": (16, lambda: pick(8, 16, a3=-3444)),
    "f8_k16_b": (16, lambda: pick(8, 16, a3=2700)),
    "f36_k8": (8, lambda: pick(36, 8, a5=-270)),
    "f243_k4": (4, lambda: pick(243, 4, a2=-3, a5=3)),
}

DIMENSIONS = [(1, 12), (8, 16), (11, 2), (11, 4), (32, 2), (32, 4), (36, 8),
              (37, 2), (49, 2), (243, 4)]


def main():
    for name, (k, make) in FIXTURES.items():
        coeffs = make()
        (OUT / f"{name}.json").write_text(json.dumps(fourier_json(k, coeffs)) + "\n")
        print(name, coeffs[:8], file=sys.stderr)
    table = []
    for N, k in DIMENSIONS:
        table.append({
            "level": N, "weight": k,
            "dim_full": int(pari.mfdim([N, k, 1], 4)),
            "dim_cusp": int(pari.mfdim([N, k, 1], 1)),
        })
    (OUT / "dimensions.json").write_text(json.dumps({"schema": 1, "spaces": table}, indent=1) + "\n")
    print(table, file=sys.stderr)


if __name__ == "__main__":
    main()
