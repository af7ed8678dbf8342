"""Exact integer arithmetic helpers: base-q digits, mixed-radix digits,
L1/Hamming metrics, Manhattan sphere volume, and prime-field GF(p)
arithmetic (inverse, square root, quadratic roots, signed lifting).

Everything works on plain Python ints, so there is no overflow to guard
against; values are exact at any size.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

# Exhaustive square-root search is used up to this modulus; Tonelli-Shanks above.
SQRT_EXHAUSTIVE_LIMIT = 10_000

_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic primality test (Miller-Rabin, exact for n < 3.3e24)."""
    if n < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
    if n in small:
        return True
    if any(n % s == 0 for s in small):
        return False
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def next_prime(n: int) -> int:
    """Smallest prime >= n."""
    c = max(n, 2)
    while not is_prime(c):
        c += 1
    return c


def ceil_log(base: int, x: int) -> int:
    """Smallest m >= 0 with base**m >= x (exact, no float)."""
    if base < 2:
        raise ValueError(f"base must be >= 2, got {base}")
    if x < 1:
        raise ValueError(f"x must be >= 1, got {x}")
    m = 0
    power = 1
    while power < x:
        power *= base
        m += 1
    return m


def base_q_digits(x: int, q: int, m: int) -> list[int]:
    """Base-q expansion of x with exactly m digits, least significant first."""
    if q < 2:
        raise ValueError(f"base must be >= 2, got {q}")
    if m < 0:
        raise ValueError(f"digit count must be >= 0, got {m}")
    if not 0 <= x < q**m:
        raise ValueError(f"{x} is not representable with {m} base-{q} digits")
    digits = []
    for _ in range(m):
        digits.append(x % q)
        x //= q
    return digits


def base_q_value(digits: Sequence[int], q: int) -> int:
    """Inverse of base_q_digits: sum of digits[j] * q**j."""
    value = 0
    for d in reversed(digits):
        if not 0 <= d < q:
            raise ValueError(f"digit {d} out of range for base {q}")
        value = value * q + d
    return value


def jacobsthal_weight(q: int, j: int) -> int:
    """j-th mixed-radix weight (q^(j+1) + (-1)^j) / (q+1) for even q > 2.

    These weights are all odd, start at 1, and generalize the Jacobsthal
    sequence; m of them represent every integer in [0, (q-1)*sum(weights)]
    with digits in [0, q).
    """
    if q <= 2 or q % 2 != 0:
        raise ValueError(f"weights are defined for even bases > 2, got {q}")
    if j < 0:
        raise ValueError(f"index must be >= 0, got {j}")
    num = q ** (j + 1) + (-1) ** j
    assert num % (q + 1) == 0
    return num // (q + 1)


def jacobsthal_weights(q: int, m: int) -> list[int]:
    """First m mixed-radix weights for even base q."""
    return [jacobsthal_weight(q, j) for j in range(m)]


def mixed_radix_digits(x: int, weights: Sequence[int], q: int) -> list[int]:
    """Digits (b_0..b_{m-1}) with b_j in [0,q) and sum b_j*weights[j] == x.

    Greedy most-significant-first extraction; weights must be increasing
    positive ints (as produced by jacobsthal_weights).
    """
    if x < 0:
        raise ValueError(f"x must be >= 0, got {x}")
    digits = [0] * len(weights)
    rest = x
    for j in range(len(weights) - 1, -1, -1):
        digits[j] = min(q - 1, rest // weights[j])
        rest -= digits[j] * weights[j]
    if rest != 0:
        raise ValueError(f"{x} is not representable with weights {list(weights)} base {q}")
    return digits


def mixed_radix_value(digits: Sequence[int], weights: Sequence[int]) -> int:
    return sum(d * w for d, w in zip(digits, weights, strict=True))


def l1_norm(e: Iterable[int]) -> int:
    """Manhattan weight: sum of absolute values."""
    return sum(abs(v) for v in e)


def l1_dist(x: Sequence[int], y: Sequence[int]) -> int:
    if len(x) != len(y):
        raise ValueError(f"length mismatch: {len(x)} vs {len(y)}")
    return sum(abs(a - b) for a, b in zip(x, y))


def hamming_weight(e: Iterable[int]) -> int:
    return sum(1 for v in e if v != 0)


def hamming_dist(x: Sequence[int], y: Sequence[int]) -> int:
    if len(x) != len(y):
        raise ValueError(f"length mismatch: {len(x)} vs {len(y)}")
    return sum(1 for a, b in zip(x, y) if a != b)


def sphere_volume_l1(n: int, t: int) -> int:
    """Number of integer vectors of length n with L1 norm <= t."""
    if n < 1:
        raise ValueError(f"length must be >= 1, got {n}")
    if t < 0:
        raise ValueError(f"radius must be >= 0, got {t}")
    return sum(2**i * math.comb(n, i) * math.comb(t, i) for i in range(min(t, n) + 1))


def gfp_solve(matrix: Sequence[Sequence[int]], rhs: Sequence[int], p: int) -> list[int] | None:
    """Solve a square linear system over GF(p); None if the matrix is singular."""
    size = len(matrix)
    aug = [[v % p for v in row] + [rhs[i] % p] for i, row in enumerate(matrix)]
    for col in range(size):
        pivot = next((r for r in range(col, size) if aug[r][col] % p != 0), None)
        if pivot is None:
            return None
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = pow(aug[col][col], p - 2, p)
        aug[col] = [v * inv % p for v in aug[col]]
        for r in range(size):
            if r != col and aug[r][col]:
                factor = aug[r][col]
                aug[r] = [(v - factor * w) % p for v, w in zip(aug[r], aug[col])]
    return [aug[r][size] for r in range(size)]


def compositions(total: int, parts: int):
    """All tuples of `parts` positive ints summing to `total`."""
    if parts == 1:
        yield (total,)
        return
    for first in range(1, total - parts + 2):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


def iter_l1_errors(n: int, max_weight: int, include_zero: bool = False):
    """All integer vectors of length n with L1 norm in [1, max_weight].

    Enumerates supports, positive magnitude splits, and signs; the count
    equals sphere_volume_l1(n, max_weight) - 1.
    """
    import itertools

    if include_zero:
        yield [0] * n
    for weight in range(1, max_weight + 1):
        for r in range(1, min(weight, n) + 1):
            for positions in itertools.combinations(range(n), r):
                for magnitudes in compositions(weight, r):
                    for signs in itertools.product((1, -1), repeat=r):
                        e = [0] * n
                        for pos, mag, sign in zip(positions, magnitudes, signs):
                            e[pos] = sign * mag
                        yield e


@dataclass(frozen=True)
class PrimeField:
    """GF(p) for an odd prime p.  Elements are ints in [0, p)."""

    p: int

    def __post_init__(self) -> None:
        if self.p < 3 or self.p % 2 == 0 or not is_prime(self.p):
            raise ValueError(f"modulus must be an odd prime >= 3, got {self.p}")


def gfp_inv(a: int, field: PrimeField) -> int:
    """Multiplicative inverse of a modulo p."""
    a %= field.p
    if a == 0:
        raise ZeroDivisionError("0 has no inverse")
    return pow(a, field.p - 2, field.p)


def _tonelli_shanks(a: int, p: int) -> int:
    # Assumes a is a nonzero quadratic residue mod p.
    if p % 4 == 3:
        return pow(a, (p + 1) // 4, p)
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1
    m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
    while t != 1:
        t2, i = t, 0
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c = i, b * b % p
        t, r = t * c % p, r * b % p
    return r


def gfp_sqrt(a: int, field: PrimeField) -> int | None:
    """A square root of a modulo p, or None if a is a non-residue."""
    p = field.p
    a %= p
    if a == 0:
        return 0
    if pow(a, (p - 1) // 2, p) != 1:
        return None
    if p <= SQRT_EXHAUSTIVE_LIMIT:
        for x in range(1, p):
            if x * x % p == a:
                return x
        raise AssertionError("residue with no root")  # unreachable
    return _tonelli_shanks(a, p)


def gfp_quadratic_roots(b: int, c: int, field: PrimeField) -> set[int]:
    """All x in GF(p) with x^2 + b*x + c == 0."""
    p = field.p
    b %= p
    c %= p
    disc = (b * b - 4 * c) % p
    root = gfp_sqrt(disc, field)
    if root is None:
        return set()
    half = gfp_inv(2, field)
    return {(-b + root) * half % p, (-b - root) * half % p}


def signed_value(z: int, field: PrimeField) -> int:
    """Lift z in GF(p) to the signed representative in [-(p-1)/2, (p-1)/2]."""
    p = field.p
    if not 0 <= z < p:
        raise ValueError(f"{z} is not in [0, {p})")
    return z if z <= (p - 1) // 2 else z - p


def lee_abs(z: int, field: PrimeField) -> int:
    """Lee absolute value: min(z, p - z)."""
    return abs(signed_value(z % field.p, field))


def lee_weight(vec: Iterable[int], field: PrimeField) -> int:
    return sum(lee_abs(v, field) for v in vec)


class ExtField:
    """GF(p^h) as polynomials over GF(p) modulo a monic irreducible of degree h.

    Elements are tuples of h coefficients, lowest degree first.  Only the
    operations needed for syndrome evaluation and exhaustive decoding are
    provided; h == 1 instances are rejected (use PrimeField directly).
    """

    def __init__(self, p: int, h: int, modulus_poly: Sequence[int] | None = None):
        if h < 2:
            raise ValueError("extension degree must be >= 2")
        self.base = PrimeField(p)
        self.p = p
        self.h = h
        if modulus_poly is None:
            modulus_poly = self._find_irreducible(p, h)
        if len(modulus_poly) != h + 1 or modulus_poly[-1] != 1:
            raise ValueError("modulus polynomial must be monic of degree h")
        if not self._is_irreducible(tuple(modulus_poly), p):
            raise ValueError("modulus polynomial is reducible")
        self.modulus_poly = tuple(v % p for v in modulus_poly)
        self.zero = (0,) * h
        self.one = (1,) + (0,) * (h - 1)

    @staticmethod
    def _poly_mod(poly: list[int], mod: tuple[int, ...], p: int) -> list[int]:
        deg = len(mod) - 1
        poly = [v % p for v in poly]
        for i in range(len(poly) - 1, deg - 1, -1):
            coeff = poly[i]
            if coeff:
                for j in range(deg + 1):
                    poly[i - deg + j] = (poly[i - deg + j] - coeff * mod[j]) % p
        return poly[:deg] + [0] * max(0, deg - len(poly))

    @classmethod
    def _is_irreducible(cls, mod: tuple[int, ...], p: int) -> bool:
        # Degree <= 3 suffices for our use: irreducible iff no roots in GF(p)
        # (plus squarefree-by-roots argument does not extend past 3, so guard).
        deg = len(mod) - 1
        if deg > 3:
            raise ValueError("irreducibility check supports degree <= 3")
        return all(
            sum(c * pow(x, i, p) for i, c in enumerate(mod)) % p != 0 for x in range(p)
        )

    @classmethod
    def _find_irreducible(cls, p: int, h: int) -> tuple[int, ...]:
        if h > 3:
            raise ValueError("automatic modulus search supports degree <= 3")
        import itertools

        for tail in itertools.product(range(p), repeat=h):
            cand = tuple(tail) + (1,)
            if cls._is_irreducible(cand, p):
                return cand
        raise AssertionError("no irreducible polynomial found")  # unreachable

    def element(self, coeffs: Sequence[int]) -> tuple[int, ...]:
        if len(coeffs) > self.h:
            raise ValueError("too many coefficients")
        vals = [v % self.p for v in coeffs] + [0] * (self.h - len(coeffs))
        return tuple(vals)

    def from_int(self, n: int) -> tuple[int, ...]:
        """Embed a base-field integer as a constant polynomial."""
        return (n % self.p,) + (0,) * (self.h - 1)

    def add(self, a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
        return tuple((x + y) % self.p for x, y in zip(a, b))

    def neg(self, a: tuple[int, ...]) -> tuple[int, ...]:
        return tuple((-x) % self.p for x in a)

    def scale(self, c: int, a: tuple[int, ...]) -> tuple[int, ...]:
        return tuple(c * x % self.p for x in a)

    def mul(self, a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
        prod = [0] * (2 * self.h - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    prod[i + j] += x * y
        return tuple(self._poly_mod(prod, self.modulus_poly, self.p))

    def power(self, a: tuple[int, ...], e: int) -> tuple[int, ...]:
        result = self.one
        base = a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def all_elements(self):
        import itertools

        for coeffs in itertools.product(range(self.p), repeat=self.h):
            yield tuple(coeffs)
