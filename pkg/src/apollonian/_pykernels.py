"""Pure-Python reference versions of the compiled kernels in ``_ckernels.pyx``.

Both modules must return identical lists for identical arguments.
"""
from math import gcd, isqrt


def solve_params_raw(B):
    """All ``(k, n, mu)`` with ``B^2 + mu^2 == k*n``, ``3 mu^2 <= B^2``, ``2 mu <= k <= n``, gcd 1.

    Sorted by ``(mu, k)``. ``B`` must be positive.
    """
    out = []
    B2 = B * B
    mu = 0
    while 3 * mu * mu <= B2:
        N = B2 + mu * mu
        g_bm = gcd(B, mu)
        kmin = max(2 * mu, 1)
        for k in range(kmin, isqrt(N) + 1):
            if N % k == 0:
                n = N // k
                if gcd(g_bm, gcd(k, n)) == 1:
                    out.append((k, n, mu))
        mu += 1
    return out


def oracle_completions(B, bound):
    """Integral fourth curvatures of tricycles ``(-B, b1, b2)`` with ``-B < b1 <= b2 <= bound``.

    Returns ``(b1, b2, d)`` triples, one per root ``d`` (two per tricycle
    unless the radicand is zero).
    """
    out = []
    B2 = B * B
    for b1 in range(-B + 1, bound + 1):
        u = b1 - B
        for b2 in range(b1, bound + 1):
            r = u * (b2 - B) - B2
            if r < 0:
                continue
            s = isqrt(r)
            if s * s != r:
                continue
            base = b1 + b2 - B
            out.append((b1, b2, base - 2 * s))
            if s:
                out.append((b1, b2, base + 2 * s))
    return out
