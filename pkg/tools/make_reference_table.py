#!/usr/bin/env python3
"""Regenerate the frozen hypergeometric reference table.

Samples 200 deterministic (alpha, k, t) points, sums the Gauss series for
F(-alpha/2, k-alpha/2; k+1; t) with 50-digit Decimal arithmetic (rigorous
geometric tail cut), cross-checks each value against mpmath's independent
hyp2f1, and writes src/alphaharm/_data/hyp2f1_reference.json. The library
itself never performs extended-precision arithmetic; it only consumes the
frozen values.

Usage: python tools/make_reference_table.py
"""

import json
import pathlib
from decimal import Decimal, getcontext

import numpy as np

TABLE_SEED = 20250810
N_POINTS = 200
OUT = pathlib.Path(__file__).resolve().parents[1] / "src/alphaharm/_data/hyp2f1_reference.json"


def decimal_hyp2f1(a: Decimal, b: Decimal, c: Decimal, t: Decimal) -> Decimal:
    getcontext().prec = 50
    s = Decimal(1)
    term = Decimal(1)
    n = 0
    while True:
        ratio = (a + n) * (b + n) / ((c + n) * (n + 1))
        term *= ratio * t
        s += term
        if abs(term) < Decimal("1e-40") * abs(s) and abs(ratio * t) < 1:
            break
        n += 1
        if n > 500_000:
            raise RuntimeError("decimal summation did not converge")
    return s


def main():
    import mpmath as mp

    mp.mp.dps = 60
    rng = np.random.default_rng(TABLE_SEED)
    rows = []
    for _ in range(N_POINTS):
        alpha = round(float(rng.uniform(-0.99, 4.0)), 6)
        k = int(rng.integers(0, 11))
        t = round(float(rng.uniform(0.0, 0.9)), 6)
        a = -Decimal(str(alpha)) / 2
        b = k - Decimal(str(alpha)) / 2
        c = Decimal(k + 1)
        val = decimal_hyp2f1(a, b, c, Decimal(str(t)))
        ref = mp.hyp2f1(mp.mpf(str(a)), mp.mpf(str(b)), k + 1, mp.mpf(str(t)))
        rel = abs(mp.mpf(str(val)) - ref) / abs(ref)
        if rel > mp.mpf("1e-35"):
            raise RuntimeError(f"oracle disagreement {rel} at {(alpha, k, t)}")
        rows.append({"alpha": alpha, "k": k, "t": t,
                     "value": str(+val.normalize())})
    OUT.parent.mkdir(parents=True, exist_ok=True)
    OUT.write_text(json.dumps(rows, indent=1) + "\n")
    print(f"wrote {len(rows)} rows to {OUT}")


if __name__ == "__main__":
    main()
