"""Tour of the norm selectors and the identities the test suite leans on.

Run:  python3 demos/norm_basics.py
"""

import numpy as np

from normlab import FRO, OP, TR, NormKind, Rng, norm
from normlab.matcore import direct_sum, haar_unitary
from normlab.norms import direct_sum_norm


def main() -> None:
    a = np.diag([3.0, 2.0, 1.0])
    print("A = diag(3, 2, 1)")
    for sel in ("op", "tr", "fro", "schatten:3", "kyfan:2"):
        kind = NormKind.parse(sel)
        print(f"  |A| under {kind.label:<12} = {norm(a, kind):.6f}")

    # The trace and Frobenius selectors are the p = 1 and p = 2 points of
    # the Schatten family, not separate implementations.
    print("labels:", TR.label, FRO.label, OP.label)

    rng = Rng(42)
    u = haar_unitary(4, rng.substream(0))
    v = haar_unitary(4, rng.substream(1))
    x = rng.substream(2).generator().normal(size=(4, 4))
    for kind in (OP, TR, FRO, NormKind.kyfan(3)):
        drift = abs(norm(u @ x @ v, kind) - norm(x, kind))
        print(f"  unitary invariance drift ({kind.label}): {drift:.2e}")

    # Direct sums: operator norm takes the max, Schatten-p adds p-th powers.
    y = rng.substream(3).generator().normal(size=(3, 3))
    s = direct_sum(x, y)
    print("direct sum identities:")
    print(f"  max rule gap  = {abs(norm(s, OP) - max(norm(x, OP), norm(y, OP))):.2e}")
    p = 3.0
    kind = NormKind.schatten(p)
    gap = abs(norm(s, kind) ** p - (norm(x, kind) ** p + norm(y, kind) ** p))
    print(f"  p-power gap   = {gap:.2e}")
    print(f"  explicit block norm equals direct_sum_norm: "
          f"{abs(norm(s, FRO) - direct_sum_norm(x, y, FRO)):.2e}")


if __name__ == "__main__":
    main()
