"""Hamming-metric protection: pack each row's redundancy digits into
GF(p) symbols that extend the (mod-p) data row to an inner-code codeword.

With p chosen above twice the worst per-entry error magnitude, reducing an
output entry mod p loses nothing: the packing map is a homomorphism, it
never increases Hamming weight, and the inner code's bounded-distance
decoder recovers the error symbols, whose signed lifts fix the data prefix.
Erasures (unreadable columns) erase the single packed symbol they feed and
are passed to the inner decoder as known-location unknowns.

The inner code here is a Reed-Solomon code in parity-check form (checks at
consecutive powers of distinct nonzero points, an MDS construction) with a
small-scale errors-and-erasures syndrome decoder; any linear code given by
an explicit check matrix can stand in, decoded by codeword enumeration.
"""

from __future__ import annotations

import itertools
from typing import Sequence

from .basemath import PrimeField, base_q_digits, ceil_log, gfp_solve, is_prime, signed_value
from .core import (
    DECODE_FAILURE,
    DecodeOutcome,
    QMatrix,
    ReadVector,
    decoded,
    guard_limit,
    output_alphabet,
)

# Codeword-enumeration decoding refuses more than this many codewords.
ENUMERATION_GUARD = 1_000_000


class ReedSolomonCode:
    """[n, k, n-k+1] code over GF(p) with checks at gamma^1 .. gamma^(d-1)."""

    def __init__(self, field: PrimeField, length: int, k: int, points: Sequence[int] | None = None):
        if not 1 <= k < length:
            raise ValueError(f"need 1 <= k < length, got k={k}, length={length}")
        if length > field.p - 1:
            raise ValueError(
                f"length {length} exceeds p - 1 = {field.p - 1} distinct nonzero points"
            )
        self.field = field
        self.length = length
        self.k = k
        self.d = length - k + 1
        self.gamma = tuple(points) if points is not None else tuple(range(1, length + 1))
        if len(self.gamma) != length or len(set(self.gamma)) != length:
            raise ValueError("points must be distinct")
        if any(not 0 < g < field.p for g in self.gamma):
            raise ValueError("points must be nonzero field elements")
        p = field.p
        self._powers = [
            tuple(pow(g, v + 1, p) for g in self.gamma) for v in range(self.d - 1)
        ]
        self._encoder: list[list[int]] | None = None

    def syndromes(self, values: Sequence[int]) -> list[int]:
        p = self.field.p
        return [sum(v * row[j] for j, v in enumerate(values)) % p for row in self._powers]

    def encode(self, message: Sequence[int]) -> list[int]:
        """Systematic: message passes through, redundancy fills the tail."""
        if len(message) != self.k:
            raise ValueError(f"message length {len(message)} != {self.k}")
        p = self.field.p
        r = self.d - 1
        if self._encoder is None:
            # redundancy = -(tail submatrix)^-1 * (message submatrix) * msg
            tail = [[self._powers[v][self.k + t] for t in range(r)] for v in range(r)]
            columns = []
            for j in range(self.k):
                rhs = [(-self._powers[v][j]) % p for v in range(r)]
                col = gfp_solve(tail, rhs, p)
                if col is None:
                    raise AssertionError("MDS tail submatrix cannot be singular")
                columns.append(col)
            self._encoder = [[columns[j][t] for j in range(self.k)] for t in range(r)]
        msg = [v % p for v in message]
        redundancy = [
            sum(self._encoder[t][j] * msg[j] for j in range(self.k)) % p for t in range(r)
        ]
        return msg + redundancy

    def decode_errors_erasures(
        self, values: Sequence[int], erased: Sequence[int], radius: int
    ) -> list[int] | None:
        """Return the full error vector (values mod p, erased entries counted
        as errors against the zero-filled input) or None.

        Corrects up to `radius` errors alongside the given erasures whenever
        2*radius + len(erased) < d; syndrome-driven with an exhaustive scan
        over error supports (every square locator submatrix of an MDS check
        matrix is invertible, so each support is solved directly).
        """
        p = self.field.p
        erased = sorted(set(erased))
        rho = len(erased)
        if rho >= self.d:
            return None
        t_max = min(radius, (self.d - 1 - rho) // 2)
        filled = [0 if j in erased else values[j] % p for j in range(self.length)]
        syn = self.syndromes(filled)
        free = [j for j in range(self.length) if j not in erased]
        for t in range(t_max + 1):
            for support in itertools.combinations(free, t):
                positions = sorted(erased + list(support))
                width = len(positions)
                if width == 0:
                    if any(syn):
                        continue
                    return [0] * self.length
                matrix = [[self._powers[v][j] for j in positions] for v in range(width)]
                sol = gfp_solve(matrix, syn[:width], p)
                if sol is None:
                    raise AssertionError("MDS locator submatrix cannot be singular")
                if any(
                    sum(sol[i] * self._powers[v][j] for i, j in enumerate(positions)) % p
                    != syn[v]
                    for v in range(width, self.d - 1)
                ):
                    continue
                if any(sol[positions.index(j)] == 0 for j in support):
                    continue  # a zero "error" there means a smaller support
                error = [0] * self.length
                for value, j in zip(sol, positions):
                    error[j] = value
                return error
        return None


class LinearInnerCode:
    """Any linear code from an explicit parity-check matrix over GF(p),
    systematic on its tail, decoded by enumerating all codewords."""

    def __init__(self, field: PrimeField, check_matrix: Sequence[Sequence[int]], distance: int):
        self.field = field
        self.check = [list(map(lambda v: v % field.p, row)) for row in check_matrix]
        self.length = len(self.check[0])
        self.k = self.length - len(self.check)
        self.d = distance
        if self.k < 1:
            raise ValueError("check matrix leaves no message symbols")
        p = field.p
        r = len(self.check)
        tail = [[self.check[v][self.k + t] for t in range(r)] for v in range(r)]
        self._encoder_cols = []
        for j in range(self.k):
            rhs = [(-self.check[v][j]) % p for v in range(r)]
            col = gfp_solve(tail, rhs, p)
            if col is None:
                raise ValueError("check matrix tail is singular; reorder columns")
            self._encoder_cols.append(col)

    def encode(self, message: Sequence[int]) -> list[int]:
        if len(message) != self.k:
            raise ValueError(f"message length {len(message)} != {self.k}")
        p = self.field.p
        msg = [v % p for v in message]
        r = len(self.check)
        redundancy = [
            sum(self._encoder_cols[j][t] * msg[j] for j in range(self.k)) % p
            for t in range(r)
        ]
        return msg + redundancy

    def decode_errors_erasures(
        self, values: Sequence[int], erased: Sequence[int], radius: int
    ) -> list[int] | None:
        p = self.field.p
        erased = sorted(set(erased))
        rho = len(erased)
        if rho >= self.d:
            return None
        t_max = min(radius, (self.d - 1 - rho) // 2)
        count = p**self.k
        limit = guard_limit(ENUMERATION_GUARD)
        if count > limit:
            raise ValueError(
                f"enumerating {count} codewords exceeds the guard ({limit}); "
                "set DPE_CODEC_GUARD_OVERRIDE to raise it"
            )
        filled = [0 if j in erased else values[j] % p for j in range(self.length)]
        for msg in itertools.product(range(p), repeat=self.k):
            cw = self.encode(list(msg))
            dist = sum(
                1 for j in range(self.length) if j not in erased and filled[j] != cw[j]
            )
            if dist <= t_max:
                return [(filled[j] - cw[j]) % p for j in range(self.length)]
        return None


def smallest_inner_prime(theta: int, length: int) -> int:
    """Smallest prime exceeding 2*theta that offers `length` distinct
    nonzero evaluation points."""
    p = 2 * theta + 1
    while True:
        if is_prime(p) and p - 1 >= length:
            return p
        p += 1


class HammingScheme:
    """Correct tau position errors of magnitude <= theta; optional extra
    detection (sigma) and erasure budget (rho_max) widen the inner code."""

    def __init__(
        self,
        q: int,
        ell: int,
        k: int,
        tau: int,
        theta: int | None = None,
        sigma: int = 0,
        rho_max: int = 0,
        p: int | None = None,
        inner=None,
    ):
        if tau < 1:
            raise ValueError(f"error budget must be >= 1, got {tau}")
        if min(sigma, rho_max) < 0:
            raise ValueError("sigma and rho_max must be >= 0")
        self.q = q
        self.ell = ell
        self.k = k
        self.tau = tau
        self.sigma = sigma
        self.rho_max = rho_max
        self.q_out = output_alphabet(q, ell)
        self.theta = self.q_out - 1 if theta is None else theta
        if not 1 <= self.theta <= self.q_out - 1:
            raise ValueError(
                f"theta must be in [1, {self.q_out - 1}], got {self.theta}"
            )
        self.d = 2 * tau + sigma + rho_max + 1
        self.ntilde = k + self.d - 1
        if p is None:
            p = smallest_inner_prime(self.theta, self.ntilde)
        else:
            if not is_prime(p):
                raise ValueError(f"{p} is not prime")
            if p <= 2 * self.theta:
                raise ValueError(f"need p > 2*theta = {2 * self.theta}, got {p}")
            if inner is None and p - 1 < self.ntilde:
                raise ValueError(
                    f"p = {p} offers only {p - 1} evaluation points but the inner "
                    f"code needs length {self.ntilde}; next usable prime is "
                    f"{smallest_inner_prime(self.theta, self.ntilde)}"
                )
        if rho_max > 0 and p < self.q_out:
            raise ValueError(
                f"erasure recovery of data columns needs p >= Q = {self.q_out}, got {p}"
            )
        self.p = p
        self.field = PrimeField(p)
        self.m = ceil_log(q, p)
        self.n = k + self.m * (self.ntilde - k)
        self.inner = inner if inner is not None else ReedSolomonCode(self.field, self.ntilde, k)
        if self.inner.length != self.ntilde or self.inner.k != k or self.inner.d < self.d:
            raise ValueError("inner code does not match the scheme parameters")
        if sigma == 0 and rho_max == 0:
            assert self.n - self.k <= self.redundancy_bound()

    def redundancy_bound(self) -> int:
        """Upper bound on n - k when the inner code is from the BCH family."""
        p, tau = self.p, self.tau
        first = (p + (p - 1) * (2 * tau - 1) + p - 1) // p  # ceil(1 + (p-1)(2tau-1)/p)
        return first * ceil_log(p, self.ntilde) * ceil_log(self.q, p)

    # -- the packing map ----------------------------------------------------

    def pack(self, values: Sequence[int], erased: Sequence[bool] | None = None):
        """Map n output columns to ntilde field symbols (the row-level
        homomorphism); returns (symbols, erased symbol indices)."""
        if len(values) != self.n:
            raise ValueError(f"need {self.n} values, got {len(values)}")
        p = self.p
        block = self.ntilde - self.k
        symbols = [values[v] % p for v in range(self.k)]
        for v in range(block):
            symbols.append(
                sum(values[self.k + v + j * block] * self.q**j for j in range(self.m)) % p
            )
        erased_symbols: set[int] = set()
        if erased is not None:
            for col, gone in enumerate(erased):
                if not gone:
                    continue
                if col < self.k:
                    erased_symbols.add(col)
                else:
                    erased_symbols.add(self.k + (col - self.k) % block)
        return symbols, erased_symbols

    # -- encode / decode -----------------------------------------------------

    def encode(self, aprime: QMatrix) -> QMatrix:
        if aprime.q != self.q or aprime.ncols != self.k:
            raise ValueError("matrix does not match the scheme parameters")
        block = self.ntilde - self.k
        rows = []
        for row in aprime.rows:
            cw = self.inner.encode([v % self.p for v in row])
            digits = [base_q_digits(cw[self.k + v], self.q, self.m) for v in range(block)]
            tail = [digits[v][j] for j in range(self.m) for v in range(block)]
            rows.append(tuple(row) + tuple(tail))
        return QMatrix(self.q, tuple(rows))

    def decode(self, y: ReadVector) -> DecodeOutcome:
        if y.n != self.n:
            raise ValueError(f"read vector length {y.n} != {self.n}")
        y.check_alphabet(self.q_out)
        symbols, erased_symbols = self.pack(y.entries, y.erased)
        if len(erased_symbols) > self.rho_max:
            raise ValueError(
                f"{len(erased_symbols)} erased symbols exceed the budget {self.rho_max}"
            )
        err = self.inner.decode_errors_erasures(symbols, erased_symbols, self.tau)
        if err is None:
            return DECODE_FAILURE
        prefix = []
        for j in range(self.k):
            if y.erased[j]:
                # the symbol was solved outright: c mod p, unique since p >= Q
                value = (-err[j]) % self.p
            else:
                value = y.entries[j] - signed_value(err[j], self.field)
            if not 0 <= value < self.q_out:
                return DECODE_FAILURE
            prefix.append(value)
        return decoded(prefix)
