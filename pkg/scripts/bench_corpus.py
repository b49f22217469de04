#!/usr/bin/env python3
"""Middle-path vs classic counted operations on a synthetic corpus, per N."""
import argparse
import time

from middlepath.corpus import make_corpus
from middlepath.middle_path import MiddlePathParams
from middlepath.pipeline import PipelineConfig, compare_modes
from middlepath.scoring import make_dna_scheme
from middlepath.seeding import SeedingParams
from middlepath.ungapped import ExtensionParams


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--queries", type=int, default=50)
    p.add_argument("--targets", type=int, default=200)
    p.add_argument("--length", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--s1", type=int, default=20)
    p.add_argument("--s2", type=int, default=40)
    p.add_argument("--n-values", default="1,2,5,10,20,50,100")
    p.add_argument("--threads", type=int, default=1)
    args = p.parse_args()

    queries, targets = make_corpus(args.queries, args.targets, args.length, seed=args.seed)
    scheme = make_dna_scheme()
    print("N\thsps\tdirect\tgapped\tbelow\tskip\tmp_ops\tclassic_ops\treduction\tlost\tsecs")
    for n_step in (int(x) for x in args.n_values.split(",")):
        cfg = PipelineConfig(scheme, SeedingParams(11, 40), ExtensionParams(20, args.s1),
                             MiddlePathParams(n_step, args.s2))
        t0 = time.perf_counter()
        cmp = compare_modes(queries, targets, cfg, threads=args.threads)
        st = cmp.mp_stats
        print(f"{n_step}\t{st.hsps_total}\t{st.routed_direct}\t{st.routed_gapped}\t"
              f"{st.routed_below}\t{st.skip_fraction:.3f}\t{cmp.mp_ops}\t{cmp.classic_ops}\t"
              f"{cmp.reduction:.3f}\t{len(cmp.lost)}\t{time.perf_counter() - t0:.2f}")


if __name__ == "__main__":
    main()
