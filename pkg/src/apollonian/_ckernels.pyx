# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the enumeration hot loops.

Arguments are bounded by the Python wrapper so that every intermediate fits
in a signed 64-bit integer; see ``kernels.C_LIMIT``.
"""
from libc.math cimport sqrt


cdef inline long long _isqrt(long long r) nogil:
    cdef long long s = <long long>sqrt(<double>r)
    while s * s > r:
        s -= 1
    while (s + 1) * (s + 1) <= r:
        s += 1
    return s


cdef inline long long _gcd(long long a, long long b) nogil:
    cdef long long t
    if a < 0:
        a = -a
    if b < 0:
        b = -b
    while b:
        t = a % b
        a = b
        b = t
    return a


def solve_params_raw(long long B):
    cdef list out = []
    cdef long long B2 = B * B
    cdef long long mu = 0, N, k, n, kmin, kmax, g_bm
    while 3 * mu * mu <= B2:
        N = B2 + mu * mu
        g_bm = _gcd(B, mu)
        kmin = 2 * mu if 2 * mu > 1 else 1
        kmax = _isqrt(N)
        k = kmin
        while k <= kmax:
            if N % k == 0:
                n = N // k
                if _gcd(g_bm, _gcd(k, n)) == 1:
                    out.append((k, n, mu))
            k += 1
        mu += 1
    return out


def oracle_completions(long long B, long long bound):
    cdef list out = []
    cdef long long B2 = B * B
    cdef long long b1, b2, u, r, s, base
    b1 = -B + 1
    while b1 <= bound:
        u = b1 - B
        b2 = b1
        while b2 <= bound:
            r = u * (b2 - B) - B2
            if r >= 0:
                s = _isqrt(r)
                if s * s == r:
                    base = b1 + b2 - B
                    out.append((b1, b2, base - 2 * s))
                    if s:
                        out.append((b1, b2, base + 2 * s))
            b2 += 1
        b1 += 1
    return out
