"""Compare the compiled kernels with the NumPy fallback.

Run with ``python3 benchmarks/bench_kernels.py``.  Both backends are imported
directly, so the comparison does not depend on ``OPOLY_PURE``.
"""

import argparse
import json
import timeit

import numpy as np

from opoly import _pykernels

try:
    from opoly import _ckernels
except ImportError:
    _ckernels = None


def _cases(rng, size, degree):
    z = rng.uniform(-30, 30, size) + 1j * rng.uniform(-40, 40, size)
    coeffs = rng.standard_normal(degree + 1) + 0j
    coeffs[-1] = 1.0
    d = degree
    z0 = (1 + np.max(np.abs(coeffs[:-1]))) * np.exp(1j * (2 * np.pi * np.arange(d) / d + 0.4))
    return {
        "loggamma": lambda m: m.loggamma(z),
        "horner": lambda m: m.horner(coeffs, z),
        "aberth": lambda m: m.aberth(coeffs, z0, 200),
    }


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--size", type=int, default=20000, help="evaluation points")
    ap.add_argument("--degree", type=int, default=40, help="root-finding degree")
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args(argv)

    rng = np.random.default_rng(0)
    cases = _cases(rng, args.size, args.degree)
    rows = []
    for name, fn in cases.items():
        row = {"kernel": name}
        for label, mod in (("python", _pykernels), ("cython", _ckernels)):
            if mod is None:
                row[label] = None
                continue
            n = max(1, int(0.2 / max(timeit.timeit(lambda: fn(mod), number=1), 1e-6)))
            best = min(timeit.repeat(lambda: fn(mod), number=n, repeat=args.repeat)) / n
            row[label] = best
        if row["python"] and row["cython"]:
            row["speedup"] = row["python"] / row["cython"]
            a, b = fn(_pykernels), fn(_ckernels)
            a = a[0] if isinstance(a, tuple) else a
            b = b[0] if isinstance(b, tuple) else b
            if name == "aberth":
                # root order may differ; match each root to its nearest partner
                diff = np.array([np.min(np.abs(r - b)) for r in a])
            else:
                diff = np.abs(a - b)
            row["max_rel_diff"] = float(np.max(diff / np.maximum(1.0, np.abs(a))))
        rows.append(row)

    if args.json:
        print(json.dumps(rows, indent=2))
        return
    print(f"{'kernel':<10}{'python [s]':>14}{'cython [s]':>14}{'speedup':>10}{'max rel diff':>14}")
    for r in rows:
        c = f"{r['cython']:.3e}" if r["cython"] else "n/a"
        s = f"{r.get('speedup', float('nan')):.1f}x"
        print(f"{r['kernel']:<10}{r['python']:>14.3e}{c:>14}{s:>10}{r.get('max_rel_diff', float('nan')):>14.1e}")


if __name__ == "__main__":
    main()
