"""Compare the compiled and pure-Python cyclotomic kernels.

Usage: python benchmarks/bench_kernels.py [--repeat N]
"""

from __future__ import annotations

import argparse
import random
import timeit

from wreathvo import kernels
from wreathvo.groups import build_group, mckay_eigencheck, mckay_xi
from wreathvo.scalar import Cyclo


def products(conductor: int, count: int = 400, seed: int = 0):
    rng = random.Random(seed)
    xs = [Cyclo(conductor, [rng.randint(-9, 9) for _ in range(conductor)]) for _ in range(count)]

    def run():
        acc = Cyclo.rational(0)
        for a, b in zip(xs, xs[1:]):
            acc = acc + a * b
        return acc

    return run


def eigencheck_bi():
    xf = mckay_xi(build_group("bi"))
    return lambda: mckay_eigencheck(xf)


WORKLOADS = {
    "Q(zeta_12) products": products(12),
    "Q(zeta_60) products": products(60),
    "Q(zeta_120) products": products(120, 200),
    "binary icosahedral eigencheck": eigencheck_bi(),
}


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    backends = kernels.available_backends()
    previous = kernels.BACKEND
    print(f"{'workload':<32}" + "".join(f"{b:>12}" for b in backends) + ("   speedup" if len(backends) > 1 else ""))
    for name, fn in WORKLOADS.items():
        times = []
        for b in backends:
            kernels.use_backend(b)
            fn()  # warm caches
            times.append(min(timeit.repeat(fn, number=1, repeat=args.repeat)))
        line = f"{name:<32}" + "".join(f"{t * 1e3:>10.2f}ms" for t in times)
        if len(times) > 1:
            line += f"   {times[0] / times[1]:>6.2f}x"
        print(line)
    kernels.use_backend(previous)


if __name__ == "__main__":
    main()
