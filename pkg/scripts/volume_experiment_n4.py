#!/usr/bin/env python3
"""Hull-level experiment at n=4: both polytopes in dimension 10.

Computes exact facet systems and normalized volumes of the superpotential
polytope and the Newton-Okounkov body, checks they agree with each other
and with the staircase SYT count (768), and reports timings.  The time
budget makes an overrun a clean report instead of a hang.

Usage: python scripts/volume_experiment_n4.py [--time-budget 1800]
"""

import argparse
import sys
import time

from lgrnok import polytope
from lgrnok.equivalence import image_of_antichains
from lgrnok.partitions import staircase_syt_count
from lgrnok.superpotential import gamma_vertex_set
from lgrnok.valuation import delta_vertices


def main() -> int:
    parser = argparse.ArgumentParser()
    parser.add_argument("--time-budget", type=float, default=1800.0)
    args = parser.parse_args()
    budget = args.time_budget

    gamma = polytope.VPolytope.from_points(gamma_vertex_set(4))
    delta = polytope.VPolytope.from_points(delta_vertices(4))
    image = polytope.VPolytope.from_points(image_of_antichains(4).values())
    expected = staircase_syt_count(4)

    try:
        t0 = time.monotonic()
        facets_delta = polytope.facets(delta, budget).row_set()
        facets_image = polytope.facets(image, budget).row_set()
        print(f"facets: {len(facets_delta)} rows on each side "
              f"[{time.monotonic() - t0:.1f}s]")
        print(f"facet systems equal: {facets_delta == facets_image}")

        t0 = time.monotonic()
        vol_gamma = polytope.normalized_volume(gamma, budget)
        print(f"normalized volume, superpotential polytope: {vol_gamma} "
              f"[{time.monotonic() - t0:.1f}s]")
        t0 = time.monotonic()
        vol_delta = polytope.normalized_volume(delta, budget)
        print(f"normalized volume, Newton-Okounkov body:    {vol_delta} "
              f"[{time.monotonic() - t0:.1f}s]")
    except polytope.TimeBudgetExceeded:
        print("time budget exceeded; rerun with a larger --time-budget")
        return 3

    ok = vol_gamma == vol_delta == expected and facets_delta == facets_image
    print(f"expected degree: {expected}; all checks {'pass' if ok else 'FAIL'}")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
