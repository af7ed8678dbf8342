"""Row-wise encoders whose output matrices keep every dot-product result
decodable after one L1 error (optionally detecting a second).

The base scheme appends m digit columns so that every row, weighted by the
code locators, sums to 0 modulo 2n+1.  Any output vector y = uA + e with
one +-1 error then has syndrome +-alpha_j, identifying position and sign.

Three variants buy double-error detection: an extra parity column (any q,
and the only choice for q = 2), or odd locators modulo 4n+2 where the
syndrome's parity counts the errors (odd q directly; even q > 2 after
swapping digit weights for the odd mixed-radix sequence).
"""

from __future__ import annotations

from typing import Sequence

from .basemath import base_q_digits, ceil_log, mixed_radix_digits
from .core import (
    DECODE_FAILURE,
    DecodeOutcome,
    QMatrix,
    ReadVector,
    decoded,
    output_alphabet,
)
from .locators import (
    SUFFIX_FSEQ,
    Locators,
    build_locators_basic,
    build_locators_ded,
)

VARIANT_PARITY = "parity"
VARIANT_ODD_Q = "odd_q"
VARIANT_EVEN_Q = "even_q"


def redundancy_lower_bound(q: int, n: int) -> int:
    """Sphere-packing floor on the redundancy of any single-error scheme."""
    return ceil_log(q, n + 1)


def redundancy_digits(residue: int, loc: Locators) -> list[int]:
    if loc.suffix_kind == SUFFIX_FSEQ:
        return mixed_radix_digits(residue, loc.suffix_weights(), loc.q)
    return base_q_digits(residue, loc.q, loc.m)


def encode_row(row: Sequence[int], loc: Locators) -> tuple[int, ...]:
    """Append the digit suffix that zeroes the row's locator checksum."""
    if len(row) != loc.k:
        raise ValueError(f"row length {len(row)} != dimension {loc.k}")
    residue = (-sum(a * loc.alpha[j] for j, a in enumerate(row))) % loc.modulus
    return tuple(row) + tuple(redundancy_digits(residue, loc))


def checksum(values: Sequence[int], loc: Locators) -> int:
    """Locator-weighted sum of the first n entries, reduced by the modulus."""
    if len(values) < loc.n:
        raise ValueError(f"need {loc.n} entries, got {len(values)}")
    return sum(v * loc.alpha[j] for j, v in enumerate(values[: loc.n])) % loc.modulus


def locate_unit_error(s: int, loc: Locators) -> tuple[int, int] | None:
    """Map a nonzero syndrome to (position, error value +-1), if possible."""
    j = loc.index_of(s)
    if j is not None:
        return j, 1
    j = loc.index_of(loc.modulus - s)
    if j is not None:
        return j, -1
    return None


def _corrected_prefix(
    values: Sequence[int], k: int, hit: tuple[int, int] | None, q_out: int
) -> DecodeOutcome:
    prefix = list(values[:k])
    if hit is not None:
        j, e = hit
        if j < k:
            prefix[j] -= e
            if not 0 <= prefix[j] < q_out:
                return DECODE_FAILURE
    return decoded(prefix)


def _reject_erasures(y: ReadVector) -> None:
    if y.has_erasures:
        raise ValueError("erasures are outside this decoder's contract")


class ParityDetectScheme:
    """Minimal scheme: one parity column, detects a single L1 error."""

    def __init__(self, q: int, k: int, ell: int):
        if k < 1:
            raise ValueError("dimension must be >= 1")
        self.q = q
        self.k = k
        self.n = k + 1
        self.ell = ell
        self.q_out = output_alphabet(q, ell)

    def encode(self, aprime: QMatrix) -> QMatrix:
        if aprime.q != self.q or aprime.ncols != self.k:
            raise ValueError("matrix does not match the scheme parameters")
        rows = tuple(row + (sum(row) % 2,) for row in aprime.rows)
        return QMatrix(self.q, rows)

    def decode(self, y: ReadVector) -> DecodeOutcome:
        _reject_erasures(y)
        if y.n != self.n:
            raise ValueError(f"read vector length {y.n} != {self.n}")
        y.check_alphabet(self.q_out)
        if sum(y.entries) % 2:
            return DECODE_FAILURE
        return decoded(y.entries[: self.k])


class SingleErrorScheme:
    """Correct one L1 error (no extra detection): redundancy ceil(log_q(2n+1))."""

    def __init__(self, q: int, n: int, ell: int, allow_suffix_ambiguity: bool = False):
        self.loc = build_locators_basic(q, n, allow_suffix_ambiguity)
        self.q = q
        self.n = n
        self.ell = ell
        self.m = self.loc.m
        self.k = self.loc.k
        self.modulus = self.loc.modulus
        self.q_out = output_alphabet(q, ell)

    def encode(self, aprime: QMatrix) -> QMatrix:
        if aprime.q != self.q or aprime.ncols != self.k:
            raise ValueError("matrix does not match the scheme parameters")
        return QMatrix(self.q, tuple(encode_row(row, self.loc) for row in aprime.rows))

    def syndrome(self, y: ReadVector) -> int:
        return checksum(y.entries, self.loc)

    def decode(self, y: ReadVector) -> DecodeOutcome:
        _reject_erasures(y)
        if y.n != self.n:
            raise ValueError(f"read vector length {y.n} != {self.n}")
        y.check_alphabet(self.q_out)
        s = self.syndrome(y)
        if s == 0:
            return decoded(y.entries[: self.k])
        hit = locate_unit_error(s, self.loc)
        if hit is None:
            return DECODE_FAILURE
        return _corrected_prefix(y.entries, self.k, hit, self.q_out)


class SecDedScheme:
    """Correct one L1 error and detect two (induced distance >= 4)."""

    def __init__(
        self,
        q: int,
        n: int,
        ell: int,
        variant: str | None = None,
        allow_suffix_ambiguity: bool = False,
    ):
        if variant is None:
            variant = VARIANT_PARITY if q == 2 else (VARIANT_ODD_Q if q % 2 else VARIANT_EVEN_Q)
        if variant == VARIANT_ODD_Q and (q < 3 or q % 2 == 0):
            raise ValueError("odd-locator variant needs odd q >= 3")
        if variant == VARIANT_EVEN_Q and (q < 4 or q % 2 == 1):
            raise ValueError("mixed-radix variant needs even q >= 4")
        self.variant = variant
        self.q = q
        self.n = n
        self.ell = ell
        self.q_out = output_alphabet(q, ell)
        if variant == VARIANT_PARITY:
            self.loc = build_locators_basic(q, n - 1, allow_suffix_ambiguity)
            self.m = self.loc.m + 1
        else:
            self.loc = build_locators_ded(q, n, allow_suffix_ambiguity)
            self.m = self.loc.m
        self.k = self.n - self.m
        self.modulus = self.loc.modulus

    def encode(self, aprime: QMatrix) -> QMatrix:
        if aprime.q != self.q or aprime.ncols != self.k:
            raise ValueError("matrix does not match the scheme parameters")
        rows = []
        for row in aprime.rows:
            inner = encode_row(row, self.loc)
            if self.variant == VARIANT_PARITY:
                inner = inner + (sum(inner) % 2,)
            rows.append(inner)
        return QMatrix(self.q, tuple(rows))

    def syndrome(self, y: ReadVector) -> int:
        return checksum(y.entries, self.loc)

    def decode(self, y: ReadVector) -> DecodeOutcome:
        _reject_erasures(y)
        if y.n != self.n:
            raise ValueError(f"read vector length {y.n} != {self.n}")
        y.check_alphabet(self.q_out)
        s = self.syndrome(y)
        if self.variant == VARIANT_PARITY:
            # Row sums are even, so total parity counts the errors mod 2.
            odd_count = sum(y.entries) % 2 == 1
            if odd_count:
                if s == 0:
                    return decoded(y.entries[: self.k])  # the error hit the parity column
                hit = locate_unit_error(s, self.loc)
                if hit is None:
                    return DECODE_FAILURE
                return _corrected_prefix(y.entries, self.k, hit, self.q_out)
            if s == 0:
                return decoded(y.entries[: self.k])
            return DECODE_FAILURE  # an even, nonzero pattern: two errors
        # Odd locators modulo 4n+2: the syndrome parity counts the errors.
        if s == 0:
            return decoded(y.entries[: self.k])
        if s % 2 == 1:
            hit = locate_unit_error(s, self.loc)
            if hit is None:
                return DECODE_FAILURE
            return _corrected_prefix(y.entries, self.k, hit, self.q_out)
        return DECODE_FAILURE
