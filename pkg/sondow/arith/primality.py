"""
Primality testing

Below 2^64 the Miller-Rabin test with the first twelve prime bases is
deterministic. Above 2^64 we run Baillie-PSW (strong base-2 Miller-Rabin plus
a strong Lucas test with Selfridge parameters). No BPSW counterexample is
known, but none has been proven impossible either: results above 2^64 are
probable primes.
"""

from math import isqrt

_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97)
_LIMIT = 1 << 64


def _decompose_pow2(n: int):
    """n = 2^r · d with d odd"""
    r = (n & -n).bit_length() - 1
    return r, n >> r


def _miller_rabin_round(n: int, a: int) -> bool:
    r, d = _decompose_pow2(n - 1)
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(r - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def jacobi(a: int, n: int) -> int:
    """Jacobi symbol (a/n) for odd n > 0"""
    if n <= 0 or n % 2 == 0:
        raise ValueError(f"Jacobi symbol needs an odd positive modulus, got {n}")
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def _selfridge_parameters(n: int):
    d = 5
    while True:
        j = jacobi(d, n)
        if j == -1:
            return d, 1, (1 - d) // 4
        if j == 0 and abs(d) != n:
            return None
        d = -d - 2 if d > 0 else -d + 2


def _strong_lucas(n: int) -> bool:
    params = _selfridge_parameters(n)
    if params is None:
        return False
    d, p, q = params
    s, k = _decompose_pow2(n + 1)

    # Binary ladder for U_k, V_k mod n.
    u, v, qk = 1, p, q % n
    inv2 = (n + 1) // 2
    for bit in bin(k)[3:]:
        u, v = u * v % n, (v * v - 2 * qk) % n
        qk = qk * qk % n
        if bit == "1":
            u, v = (p * u + v) * inv2 % n, (d * u + p * v) * inv2 % n
            qk = qk * q % n

    if u == 0 or v == 0:
        return True
    for _ in range(s - 1):
        v = (v * v - 2 * qk) % n
        qk = qk * qk % n
        if v == 0:
            return True
    return False


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n == p:
            return True
        if n % p == 0:
            return False
    if n < 97 * 97:
        return True

    if n < _LIMIT:
        return all(_miller_rabin_round(n, a) for a in _BASES)

    if isqrt(n) ** 2 == n:
        return False
    return _miller_rabin_round(n, 2) and _strong_lucas(n)
