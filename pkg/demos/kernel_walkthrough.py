"""Follow one instance through preprocessing, decomposition and component selection.

The graph has three odd components hanging off a two-vertex set A.  With
no budget to spare (ell = 0) the selection keeps one of them; the others are
deleted and paid for at their tight cover size.
"""

import json

from vckernel import kernelize, nice_decomposition, nt_reduce
from vckernel.generators import decomposable, suggested_k
from vckernel.oracle import vc_size


def show(label, sets) -> None:
    print(f"  {label:<6} " + " ".join(str(sorted(c)) for c in sets))


def main() -> None:
    g = decomposable(18, n_unmatched=3, n_a=2, n_b_pairs=0, p_cross=0.9, sizes=(3, 5), clique_prob=0.1)
    print(f"input: {g.n} vertices, {g.m} edges, minimum cover {vc_size(g)}")

    g1 = nt_reduce(g, 0).graph
    dec = nice_decomposition(g1)
    print("decomposition after LP preprocessing:")
    show("A", [dec.a])
    show("A1/A3", [dec.a1, dec.a3])
    show("C3hat", sorted(dec.c3hat, key=min))

    for ell in (0, 1):
        k = suggested_k(g, ell)
        out = kernelize(g, k, seed=0)
        answer = vc_size(out.g_out) <= out.k_out
        print(f"\nk = {k} (ell = {ell}): kept {[sorted(c) for c in out.c_rel]}, "
              f"output {out.g_out.n} vertices with k' = {out.k_out}, answer {'yes' if answer else 'no'}")
        print(json.dumps({key: out.stats()[key] for key in ("rounds", "p_out", "error_bound")}))


if __name__ == "__main__":
    main()
