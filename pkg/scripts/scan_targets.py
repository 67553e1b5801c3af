"""List every minimal-degree target up to a size bound with its verdict."""
import argparse

from tricover.classifier import classify, cyclic_example
from tricover.cohomology import ProjSpace, Quadric, Scroll, Veronese


def scroll_types(r, m, lo=1):
    if m == 0:
        if r == 0:
            yield ()
        return
    for x in range(lo, r // m + 1):
        for rest in scroll_types(r - x, m - 1, x):
            yield (x,) + rest


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-dim", type=int, default=9)
    ap.add_argument("--max-scroll-dim", type=int, default=5)
    ap.add_argument("--max-scroll-degree", type=int, default=8)
    args = ap.parse_args()

    targets = [ProjSpace(m) for m in range(2, args.max_dim + 1)]
    targets += [Quadric(m) for m in range(2, args.max_dim + 1)]
    targets += [
        Scroll(e)
        for m in range(2, args.max_scroll_dim + 1)
        for r in range(m, args.max_scroll_degree + 1)
        for e in scroll_types(r, m)
    ]
    targets.append(Veronese())

    n_ok = 0
    for Y in targets:
        v = classify(Y)
        if v.allowed:
            n_ok += 1
            ex = cyclic_example(Y)
            print(f"{str(Y):<24} allowed  L = {v.L}  branch = {ex.branch_class}  h0(K_X) = {ex.h0_KX}")
        else:
            print(f"{str(Y):<24} rejected ({v.reason})")
    print(f"\n{n_ok} of {len(targets)} targets admit a flat triple canonical cover")


if __name__ == "__main__":
    main()
