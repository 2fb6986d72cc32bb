"""Why the parameter is measured above 2LP - MM rather than above LP.

On t disjoint odd cycles of length 2s+1 the optimum cover is t(s+1).  The LP
bound falls short by t/2, which grows with the number of cycles, while the
bound 2LP - MM is exact: the excess over it is zero for every t.
"""

from fractions import Fraction

from vckernel import compute_ell, kernelize, lp_value, maximum_matching
from vckernel.generators import odd_cycles


def main() -> None:
    print(f"{'t':>2} {'s':>2} {'n':>3} {'MM':>3} {'2LP':>4} {'k=VC':>5} {'k-LP':>5} {'ell':>3}  verdict")
    for t in range(1, 5):
        for s in range(1, 4):
            g = odd_cycles(t, s)
            k = t * (s + 1)  # one extra vertex per cycle
            two_lp, _ = lp_value(g)
            mm = len(maximum_matching(g))
            gap = k - Fraction(two_lp, 2)
            out = kernelize(g, k)
            print(f"{t:>2} {s:>2} {g.n:>3} {mm:>3} {two_lp:>4} {k:>5} {str(gap):>5} {compute_ell(g, k):>3}  {out.verdict}")
    print("\nOne vertex short of the optimum, every instance is rejected outright:")
    g = odd_cycles(3, 2)
    out = kernelize(g, 8)
    print(f"  odd_cycles(3, 2), k = 8: ell = {out.ell_in}, verdict {out.verdict}")


if __name__ == "__main__":
    main()
