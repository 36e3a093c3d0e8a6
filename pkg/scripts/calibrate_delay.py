"""One-off calibration of the delay constant used by the acceptance suite.

Prints the largest observed (work between outputs) / (n * m * maxdeg^2) on
random 50-vertex instances drawn from seeds disjoint from the test's own.
"""
import random
import sys
from itertools import combinations

from minenum.model import build_graph
from minenum.registry import make_property
from minenum.runner import collect


def main(seeds=range(5), emissions=300):
    worst = 0.0
    for seed in seeds:
        rng = random.Random(seed)
        pairs = list(combinations(range(50), 2))
        for name, k in (("vc", 30), ("eds", 10)):
            g = build_graph(50, rng.sample(pairs, rng.randint(60, 120)))
            _, outcome = collect(make_property(name, g), k, force=True, max_solutions=emissions)
            s = outcome.summary
            ratio = max(s.max_gap_work, s.tail_work) / (50 * g.edge_count * g.max_degree ** 2)
            worst = max(worst, ratio)
            print(f"seed {seed} {name}: m={g.edge_count} maxdeg={g.max_degree} "
                  f"emitted={s.emitted} ratio={ratio:.4f}")
    print(f"largest ratio {worst:.4f}")


if __name__ == "__main__":
    main(range(int(sys.argv[1])) if len(sys.argv) > 1 else range(5))
