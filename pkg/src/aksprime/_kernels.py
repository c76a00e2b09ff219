"""Hot loops for ring arithmetic, JIT-compiled with numba.

Backend selection
-----------------
The environment variable AKSPRIME_BACKEND picks the implementation of the
cyclic-convolution hot path:

    auto    (default) numba kernels when numba imports, else numpy
    numba   force the JIT kernels; raises if numba is unavailable
    numpy   pure-numpy fallback (object-dtype convolution, exact for any n)

The numba kernels work on int64 and are only used for moduli up to
KERNEL_N_MAX, chosen so that a reduced accumulator plus one coefficient
product always stays below 2**63.  Larger moduli take a big-integer path
(see polyring).
"""

from __future__ import annotations

import os

import numpy as np

ENV_BACKEND = "AKSPRIME_BACKEND"

# largest n with (n-1)**2 + (n-1) < 2**63, i.e. chunk_for(n) >= 1
KERNEL_N_MAX = 3037000499

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - exercised via AKSPRIME_BACKEND=numpy
    HAVE_NUMBA = False


def backend() -> str:
    """Resolve the active backend name ("numba" or "numpy")."""
    mode = os.environ.get(ENV_BACKEND, "auto").lower()
    if mode == "numpy":
        return "numpy"
    if mode == "numba":
        if not HAVE_NUMBA:
            raise RuntimeError("AKSPRIME_BACKEND=numba but numba is not importable")
        return "numba"
    if mode != "auto":
        raise RuntimeError(f"unknown {ENV_BACKEND} value: {mode!r}")
    return "numba" if HAVE_NUMBA else "numpy"


def chunk_for(n: int) -> int:
    """How many coefficient products fit in an int64 accumulator.

    The convolution loops reduce the accumulator mod n every `chunk`
    additions; chunk >= 1 exactly when n <= KERNEL_N_MAX.
    """
    return max(1, ((1 << 63) - 1 - (n - 1)) // ((n - 1) * (n - 1)))


if HAVE_NUMBA:

    @njit(cache=True)
    def cyclic_mul_i64(p, q, out, n, chunk):
        # out[k] = sum_{i+j = k mod r} p[i]*q[j]  (mod n), schoolbook
        r = p.shape[0]
        for k in range(r):
            s = 0
            cnt = 0
            for i in range(r):
                j = k - i
                if j < 0:
                    j += r
                s += p[i] * q[j]
                cnt += 1
                if cnt == chunk:
                    s %= n
                    cnt = 0
            out[k] = s % n

    @njit(cache=True)
    def congruence_sweep_i64(n, r, l, chunk):
        # For a = 1..l test (x+a)^n == x^(n mod r) + a in Z_n[x]/(x^r - 1).
        # Returns (first failing a or 0, total ring multiplications).
        n_mod_r = n % r
        nbits = 0
        t = n
        while t > 0:
            nbits += 1
            t >>= 1
        acc = np.zeros(r, dtype=np.int64)
        tmp = np.zeros(r, dtype=np.int64)
        mults = 0
        for a in range(1, l + 1):
            am = a % n
            for i in range(r):
                acc[i] = 0
            acc[1] = 1
            acc[0] = am
            for bit in range(nbits - 2, -1, -1):
                for k in range(r):
                    s = 0
                    cnt = 0
                    for i in range(r):
                        j = k - i
                        if j < 0:
                            j += r
                        s += acc[i] * acc[j]
                        cnt += 1
                        if cnt == chunk:
                            s %= n
                            cnt = 0
                    tmp[k] = s % n
                mults += 1
                if (n >> bit) & 1:
                    # multiply by the sparse factor (x + a): a shift plus a scale
                    for k in range(r):
                        km1 = k - 1
                        if km1 < 0:
                            km1 += r
                        acc[k] = (tmp[km1] + am * tmp[k]) % n
                    mults += 1
                else:
                    for k in range(r):
                        acc[k] = tmp[k]
            for k in range(r):
                e = 1 if k == n_mod_r else 0
                if k == 0:
                    e += am
                if acc[k] != e % n:
                    return a, mults
        return 0, mults


def mul_via_kernel(c1: list[int], c2: list[int], n: int, r: int) -> list[int]:
    """Cyclic multiply through the int64 kernel; n must be <= KERNEL_N_MAX."""
    if n > KERNEL_N_MAX:
        raise ValueError(f"modulus {n} exceeds the int64 kernel range")
    p = np.array(c1, dtype=np.int64)
    q = p if c2 is c1 else np.array(c2, dtype=np.int64)
    out = np.empty(r, dtype=np.int64)
    cyclic_mul_i64(p, q, out, n, chunk_for(n))
    return out.tolist()


def sweep_via_kernel(n: int, r: int, l: int) -> tuple[int, int]:
    """Run the fused step-5 sweep; returns (first failing a or 0, mults)."""
    if n > KERNEL_N_MAX:
        raise ValueError(f"modulus {n} exceeds the int64 kernel range")
    fail_a, mults = congruence_sweep_i64(n, r, l, chunk_for(n))
    return int(fail_a), int(mults)
