"""Fraction of edges lost by a per-instant snapshot representation, versus tau.

For uniform random MAGs with signature (V, tau) the measured fraction of
non-contiguous edges is compared with the fraction of non-contiguous pairs,
which is its expectation.

    python scripts/snapshot_loss_curve.py --vertices 8 --taus 3 5 9 17 33
"""

import argparse

from magrand import GeneratorSpec, MagSignature, generate, snapshot_loss
from magrand.temporal import noncontiguous_pair_mask


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--vertices", type=int, default=8)
    ap.add_argument("--taus", type=int, nargs="+", default=[3, 5, 9, 17, 33])
    ap.add_argument("--seeds", type=int, default=5)
    args = ap.parse_args()

    print(f"{'tau':>5} {'N':>6} {'expected':>9} {'measured':>9} {'max|err|':>9}")
    for tau in args.taus:
        sig = MagSignature((args.vertices, tau))
        expected = float(noncontiguous_pair_mask(sig, 2).mean())
        fr = [snapshot_loss(generate(GeneratorSpec(sig, "uniform-half", s)), 2).fraction for s in range(args.seeds)]
        mean = sum(fr) / len(fr)
        print(f"{tau:>5} {sig.n_composite:>6} {expected:>9.4f} {mean:>9.4f} {max(abs(f - expected) for f in fr):>9.4f}")


if __name__ == "__main__":
    main()
