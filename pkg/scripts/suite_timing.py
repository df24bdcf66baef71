"""Time the exhaustive checks at chosen bounds.

    python scripts/suite_timing.py --cmax 100000 --involution 1000 --generation 500 --semigroup 200
"""
import argparse
import time
from dataclasses import dataclass

from bstriples import oracle_enumerate
from bstriples.verify import (
    generation_suite,
    involution_suite,
    oracle_bijection,
    semigroup_exhaustive,
)


@dataclass
class Config:
    cmax: int = 20000
    involution: int = 300
    generation: int = 150
    semigroup: int = 100


def main():
    p = argparse.ArgumentParser()
    for name, default in vars(Config()).items():
        p.add_argument(f"--{name}", type=int, default=default)
    cfg = Config(**vars(p.parse_args()))

    t0 = time.perf_counter()
    oracle = oracle_enumerate(cfg.cmax)
    print(f"oracle scan c <= {cfg.cmax}: {len(oracle)} triples in {time.perf_counter() - t0:.2f}s")
    for res in (
        oracle_bijection(cfg.cmax, oracle),
        involution_suite(cfg.involution),
        generation_suite(cfg.generation),
        semigroup_exhaustive(cfg.semigroup),
    ):
        print(res.line())


if __name__ == "__main__":
    main()
