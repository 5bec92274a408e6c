"""Walk through one honest exchange and one key recovery for each scheme.

Usage: python scripts/demo_attacks.py [--seed N]
"""

import argparse
import time
from random import Random

from twoside import digital_kex, twisted_kex
from twoside.digital import value_to_json


def show_matrix(label, mat):
    print(f"  {label}:")
    for row in mat.rows:
        print("    [" + ", ".join(str(value_to_json(v)) for v in row) + "]")


def demo_digital(seed):
    print("== digital scheme, n = 4 ==")
    rng = Random(seed)
    params = digital_kex.random_params(4, rng)
    tr = digital_kex.run_exchange(params, rng)
    show_matrix("public matrix M", params.matrix)
    show_matrix("Alice's public key", tr.alice.pk)
    show_matrix("Bob's public key", tr.bob.pk)
    print(f"  keys agree: {tr.keys_agree}")
    t0 = time.perf_counter()
    recovered = digital_kex.attack(params, tr.alice.pk, tr.bob.pk)
    ms = (time.perf_counter() - t0) * 1000
    print(f"  attack recovered the shared key from public data alone: "
          f"{recovered == tr.shared_key} ({ms:.1f} ms)")
    show_matrix("recovered shared key", recovered)
    print()


def demo_twisted(seed):
    print("== twisted scheme, p=3 n=2 m=4 ==")
    rng = Random(seed)
    params = twisted_kex.random_params(3, 2, 4, rng)
    tr = twisted_kex.run_exchange(params, rng)
    print(f"  ring: F_{{3^2}} twisted over the dihedral group of order 8")
    print(f"  public element h: {params.h}")
    print(f"  Alice pk: {tr.alice.pk}")
    print(f"  Bob pk:   {tr.bob.pk}")
    print(f"  keys agree: {tr.keys_agree}")
    t0 = time.perf_counter()
    recovered = twisted_kex.attack(params, tr.alice.pk, tr.bob.pk)
    ms = (time.perf_counter() - t0) * 1000
    print(f"  attack recovered the shared key from public data alone: "
          f"{recovered == tr.shared_key} ({ms:.1f} ms)")
    print(f"  recovered key: {recovered}")
    print()


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", type=int, default=2024)
    args = ap.parse_args()
    demo_digital(args.seed)
    demo_twisted(args.seed)


if __name__ == "__main__":
    main()
