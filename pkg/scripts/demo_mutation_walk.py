#!/usr/bin/env python3
"""Random mutation walk demo: start from the builtin A3 module and take a
few random exchange steps, printing the exchange sequence, the new cluster
variable, and the exchange matrix after each step.

Usage: python3 scripts/demo_mutation_walk.py [steps] [rng-seed]
"""

import random
import sys

from ppalg.approx import canonical_slots, initial_rigid, mutate_slots
from ppalg.catalog import build_catalog
from ppalg.cluster import Seed, seed_mutate
from ppalg.endo import exchange_data


def main():
    steps = int(sys.argv[1]) if len(sys.argv) > 1 else 6
    rng = random.Random(int(sys.argv[2]) if len(sys.argv) > 2 else 0)

    cat = build_catalog("A3")
    slots = canonical_slots(initial_rigid(cat))
    seed = Seed.initial(cat.r, exchange_data(cat.sum_of(slots),
                                             order=slots).b_cols)
    print("start:", " + ".join(cat.entry(i).display() for i in slots))

    for step in range(1, steps + 1):
        k = rng.choice(range(1, cat.r - cat.n + 1))
        slots, seq = mutate_slots(cat, slots, k)
        seed = seed_mutate(seed, k)
        print(f"\nstep {step}: direction {k}")
        print("  sequence:", seq.display())
        print("  new variable:", seed.variables[k - 1])
        print("  matrix:", seed.matrix)

    print("\nfinal:", " + ".join(cat.entry(i).display() for i in slots))


if __name__ == "__main__":
    main()
