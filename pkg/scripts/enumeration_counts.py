"""Count enumerated solutions and time per item on random sP2-free graphs."""
import argparse
import sys
import time

from conntrans.corpus import generate_corpus
from conntrans.enumerators import StreamKind, enumerate_maximal_independent_sets, enumerate_minimal_transversals
from conntrans.kinds import TransversalKind


def streams(G):
    yield StreamKind.MIS, enumerate_maximal_independent_sets(G)
    for kind in TransversalKind:
        yield StreamKind(kind.value), enumerate_minimal_transversals(G, kind)


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--s", type=int, default=2)
    parser.add_argument("--sizes", default="8,10,12,14,16")
    parser.add_argument("--per-n", type=int, default=3)
    parser.add_argument("--seed", type=int, default=1)
    args = parser.parse_args(argv)

    print(f"{'n':>3} {'stream':>5} {'mean count':>11} {'n^(2s)+1':>10} {'us/item':>9}")
    for n in map(int, args.sizes.split(",")):
        corpus = generate_corpus("random-filtered-sP2free",
                                 {"n": n, "s": args.s, "count": args.per_n}, seed=args.seed * 1000 + n)
        totals = {}
        for entry in corpus:
            for kind, stream in streams(entry.graph):
                start = time.perf_counter()
                count = sum(1 for _ in stream.masks())
                c, t = totals.get(kind, (0, 0.0))
                totals[kind] = (c + count, t + time.perf_counter() - start)
        for kind, (count, elapsed) in totals.items():
            print(f"{n:>3} {kind.value:>5} {count / len(corpus):>11.1f} {n ** (2 * args.s) + 1:>10} "
                  f"{1e6 * elapsed / max(count, 1):>9.1f}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
