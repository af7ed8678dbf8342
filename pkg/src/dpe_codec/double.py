"""Double-error correction: a three-part redundancy suffix and a decoder
that dispatches on which parts look damaged.

The encoder composes three stages per row (all on top of the single-error
stage run modulo a prime p = 2*n1 + 1):

  1. the single-error digit suffix, zeroing the locator checksum mod p;
  2. m more digits recording the *cubed*-locator checksum mod p;
  3. one parity symbol over those m digits.

A read vector splits as y = (y1 | y2) with y1 the n1-prefix.  The decoder
computes s1 (linear checksum of y1), s2 (cubed checksum of y1 minus the
digit-encoded value in y2), and the parity of y2.  Depending on the
split, either y1 is clean, or the pair (s1, s2) is a weight-2 Lee syndrome
handled by the quadratic decoder, or a lone error in y1 is located from s1.

The triple-detecting variants either add one more overall parity column
(mandatory for q = 2) or run both checksums modulo 2p over odd locators,
where the parities of s1 and s2 replace the parity column (Table-driven
dispatch; see decode).
"""

from __future__ import annotations

from .basemath import PrimeField, ceil_log, is_prime
from .berlekamp import BerlekampCode, decode_double_error
from .core import (
    DECODE_FAILURE,
    DecodeOutcome,
    QMatrix,
    ReadVector,
    decoded,
    output_alphabet,
)
from .locators import Locators, build_locators_basic, build_locators_ded
from .single import encode_row, locate_unit_error, redundancy_digits

VARIANT_PARITY = "parity"
VARIANT_ODD_Q = "odd_q"
VARIANT_EVEN_Q = "even_q"


def _suggest_prime(q: int, p: int) -> int:
    candidate = p + 1
    while True:
        if is_prime(candidate) and (candidate - 1) // 2 - ceil_log(q, candidate) >= 1:
            return candidate
        candidate += 1


def _check_prime(q: int, p: int) -> None:
    if p <= 3 or not is_prime(p):
        raise ValueError(f"need a prime p > 3, got {p}")
    n1 = (p - 1) // 2
    if n1 - ceil_log(q, p) < 1:
        raise ValueError(
            f"p = {p} leaves no information columns for q = {q}; "
            f"smallest workable prime is {_suggest_prime(q, p)}"
        )


def _pair_code(loc: Locators, p: int) -> tuple[BerlekampCode, list[int]]:
    """Embed locators into GF(p) for the weight-2 decoder.

    Positions whose locator vanishes mod p (possible only under the
    suffix-ambiguity opt-in) are excluded: their errors are invisible to
    the mod-p syndrome and sit in redundancy columns.
    """
    positions = [j for j in range(loc.n) if loc.alpha[j] % p != 0]
    beta = [loc.alpha[j] % p for j in positions]
    code = BerlekampCode(
        PrimeField(p), beta, tau=2, validate=not loc.allow_suffix_ambiguity
    )
    return code, positions


class DoubleErrorScheme:
    """Correct any two L1 errors (induced distance >= 5)."""

    def __init__(self, q: int, p: int, ell: int, allow_suffix_ambiguity: bool = False):
        _check_prime(q, p)
        self.q = q
        self.p = p
        self.ell = ell
        self.n1 = (p - 1) // 2
        self.loc = build_locators_basic(q, self.n1, allow_suffix_ambiguity)
        assert self.loc.modulus == p
        self.m = self.loc.m
        self.k = self.n1 - self.m
        self.n2 = self.n1 + self.m
        self.n = self.n2 + 1
        self.q_out = output_alphabet(q, ell)
        self.ber, self.ber_positions = _pair_code(self.loc, p)

    def encode(self, aprime: QMatrix) -> QMatrix:
        if aprime.q != self.q or aprime.ncols != self.k:
            raise ValueError("matrix does not match the scheme parameters")
        rows = []
        for row in aprime.rows:
            inner = encode_row(row, self.loc)
            cubes = sum(v * self.loc.alpha[j] ** 3 for j, v in enumerate(inner)) % self.p
            digits = redundancy_digits(cubes, self.loc)
            rows.append(inner + tuple(digits) + (sum(digits) % 2,))
        return QMatrix(self.q, tuple(rows))

    def syndromes(self, y: ReadVector) -> tuple[int, int, int]:
        v = y.entries
        alpha = self.loc.alpha
        s1 = sum(v[j] * alpha[j] for j in range(self.n1)) % self.p
        s2 = (
            sum(v[j] * alpha[j] ** 3 for j in range(self.n1))
            - sum(v[self.n1 + j] * self.q**j for j in range(self.m))
        ) % self.p
        s2_hat = sum(v[self.n1 + j] for j in range(self.m + 1)) % 2
        return s1, s2, s2_hat

    def _correct_pair(self, y: ReadVector, s1: int, s2: int) -> DecodeOutcome:
        sub = decode_double_error(self.ber, (s1, s2))
        if sub is None:
            return DECODE_FAILURE
        y1 = list(y.entries[: self.n1])
        for idx, pos in enumerate(self.ber_positions):
            y1[pos] -= sub[idx]
        prefix = y1[: self.k]
        if not all(0 <= v < self.q_out for v in prefix):
            return DECODE_FAILURE
        return decoded(prefix)

    def _correct_single(self, y: ReadVector, s1: int) -> DecodeOutcome:
        hit = locate_unit_error(s1, self.loc)
        if hit is None:
            return DECODE_FAILURE
        j, e = hit
        prefix = list(y.entries[: self.k])
        if j < self.k:
            prefix[j] -= e
            if not 0 <= prefix[j] < self.q_out:
                return DECODE_FAILURE
        return decoded(prefix)

    def decode(self, y: ReadVector) -> DecodeOutcome:
        if y.has_erasures:
            raise ValueError("erasures are outside this decoder's contract")
        if y.n != self.n:
            raise ValueError(f"read vector length {y.n} != {self.n}")
        y.check_alphabet(self.q_out)
        s1, s2, s2_hat = self.syndromes(y)
        if s1 == 0:
            return decoded(y.entries[: self.k])  # the n1-prefix is clean
        if s2_hat == 0:
            return self._correct_pair(y, s1, s2)
        return self._correct_single(y, s1)


class TripleDetectScheme:
    """Correct two L1 errors and detect three (induced distance >= 6)."""

    def __init__(
        self,
        q: int,
        p: int,
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
        self.p = p
        self.ell = ell
        self.q_out = output_alphabet(q, ell)
        if variant == VARIANT_PARITY:
            self.base = DoubleErrorScheme(q, p, ell, allow_suffix_ambiguity)
            self.loc = self.base.loc
            self.n1 = self.base.n1
            self.m = self.base.m
            self.k = self.base.k
            self.n = self.base.n + 1
            self.ber = self.base.ber
            self.ber_positions = self.base.ber_positions
        else:
            _check_prime(q, p)
            self.n1 = (p - 1) // 2
            self.loc = build_locators_ded(q, self.n1, allow_suffix_ambiguity)
            assert self.loc.modulus == 2 * p
            self.m = self.loc.m
            self.k = self.n1 - self.m
            if self.k < 1:
                raise ValueError(
                    f"p = {p} leaves no information columns for q = {q} "
                    "in the modulus-2p variant"
                )
            self.n = self.n1 + self.m
            self.ber, self.ber_positions = _pair_code(self.loc, p)

    # -- encoding ---------------------------------------------------------

    def encode(self, aprime: QMatrix) -> QMatrix:
        if aprime.q != self.q or aprime.ncols != self.k:
            raise ValueError("matrix does not match the scheme parameters")
        if self.variant == VARIANT_PARITY:
            inner = self.base.encode(aprime)
            return QMatrix(self.q, tuple(row + (sum(row) % 2,) for row in inner.rows))
        modulus = 2 * self.p
        rows = []
        for row in aprime.rows:
            inner = encode_row(row, self.loc)
            cubes = sum(v * self.loc.alpha[j] ** 3 for j, v in enumerate(inner)) % modulus
            rows.append(inner + tuple(redundancy_digits(cubes, self.loc)))
        return QMatrix(self.q, tuple(rows))

    # -- decoding ---------------------------------------------------------

    def syndromes(self, y: ReadVector) -> tuple[int, int] | tuple[int, int, int, int]:
        if self.variant == VARIANT_PARITY:
            base_part = ReadVector.exact(y.entries[: self.base.n])
            s1, s2, s2_hat = self.base.syndromes(base_part)
            total_parity = sum(y.entries) % 2
            return s1, s2, s2_hat, total_parity
        v = y.entries
        alpha = self.loc.alpha
        modulus = 2 * self.p
        weights = self.loc.suffix_weights()
        s1 = sum(v[j] * alpha[j] for j in range(self.n1)) % modulus
        s2 = (
            sum(v[j] * alpha[j] ** 3 for j in range(self.n1))
            - sum(v[self.n1 + j] * weights[j] for j in range(self.m))
        ) % modulus
        return s1, s2

    def _correct_single(self, y: ReadVector, s1: int) -> DecodeOutcome:
        hit = locate_unit_error(s1, self.loc)
        if hit is None:
            return DECODE_FAILURE
        j, e = hit
        prefix = list(y.entries[: self.k])
        if j < self.k:
            prefix[j] -= e
            if not 0 <= prefix[j] < self.q_out:
                return DECODE_FAILURE
        return decoded(prefix)

    def _correct_pair(self, y: ReadVector, s1p: int, s2p: int) -> DecodeOutcome:
        sub = decode_double_error(self.ber, (s1p, s2p))
        if sub is None:
            return DECODE_FAILURE
        y1 = list(y.entries[: self.n1])
        for idx, pos in enumerate(self.ber_positions):
            y1[pos] -= sub[idx]
        prefix = y1[: self.k]
        if not all(0 <= v < self.q_out for v in prefix):
            return DECODE_FAILURE
        return decoded(prefix)

    def _decode_parity(self, y: ReadVector) -> DecodeOutcome:
        s1, s2, s2_hat, total_parity = self.syndromes(y)
        prefix = decoded(y.entries[: self.k])
        if s1 == 0:
            # Only an all-prefix triple with a vanishing checksum is unsafe
            # here; it shows up as odd total parity, even digit-block parity
            # and a nonzero cubes checksum.
            if total_parity == 1 and s2_hat == 0 and s2 != 0:
                return DECODE_FAILURE
            return prefix
        if s2_hat == 1:
            if total_parity == 1:
                return DECODE_FAILURE  # three errors split 2+1 or 1+1+1
            return self._correct_single(y, s1)
        if total_parity == 0:
            return self._correct_pair(y, s1, s2)
        # Odd count, clean-looking digit block: only a lone error whose two
        # checksums agree may be corrected; anything else is a triple.
        if s2 == pow(s1, 3, self.p) and locate_unit_error(s1, self.loc) is not None:
            return self._correct_single(y, s1)
        return DECODE_FAILURE

    def _decode_mod2p(self, y: ReadVector) -> DecodeOutcome:
        s1, s2 = self.syndromes(y)
        if s1 == 0:
            return decoded(y.entries[: self.k])
        odd1, odd2 = s1 % 2 == 1, s2 % 2 == 1
        if not odd1 and not odd2:
            return self._correct_pair(y, s1 % self.p, s2 % self.p)
        if odd1 and not odd2:
            return self._correct_single(y, s1)
        if not odd1 and odd2:
            return DECODE_FAILURE
        if (s2 - s1**3) % self.p == 0:
            return self._correct_single(y, s1)
        return DECODE_FAILURE

    def decode(self, y: ReadVector) -> DecodeOutcome:
        if y.has_erasures:
            raise ValueError("erasures are outside this decoder's contract")
        if y.n != self.n:
            raise ValueError(f"read vector length {y.n} != {self.n}")
        y.check_alphabet(self.q_out)
        if self.variant == VARIANT_PARITY:
            return self._decode_parity(y)
        return self._decode_mod2p(y)


class ShortenedScheme:
    """Fix leading information columns of a base scheme to zero and drop
    them, freeing the choice of dimension from the base's parameter grid."""

    def __init__(self, base, drop: int):
        if not 0 < drop < base.k:
            raise ValueError(f"drop must be in (0, {base.k}), got {drop}")
        self.base = base
        self.drop = drop
        self.q = base.q
        self.ell = base.ell
        self.q_out = base.q_out
        self.k = base.k - drop
        self.n = base.n - drop

    def encode(self, aprime: QMatrix) -> QMatrix:
        if aprime.q != self.q or aprime.ncols != self.k:
            raise ValueError("matrix does not match the scheme parameters")
        padded = QMatrix(self.q, tuple((0,) * self.drop + row for row in aprime.rows))
        full = self.base.encode(padded)
        return QMatrix(self.q, tuple(row[self.drop :] for row in full.rows))

    def decode(self, y: ReadVector) -> DecodeOutcome:
        full = ReadVector(
            (0,) * self.drop + y.entries, (False,) * self.drop + y.erased
        )
        outcome = self.base.decode(full)
        if outcome.failed:
            return outcome
        return decoded(outcome.prefix[self.drop :])
