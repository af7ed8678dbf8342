"""Lee-metric linear codes over GF(p) checked at odd locator powers.

A code instance is the right kernel of the tau x n check matrix whose rows
are beta_j, beta_j^3, ..., beta_j^(2*tau-1); with nonzero, distinct,
pairwise non-negating locators beta the minimum Lee distance is at least
2*tau + 1.  Decoders return *signed integer* error vectors (each entry is
the Lee-lifted error value) or None for an uncorrectable syndrome.

Closed-form decoding is provided for tau = 1 and tau = 2 (the tau = 2 case
solves a quadratic built from the two syndrome components); any tau is
served by the exhaustive decoder, which is also the ground-truth oracle for
cross-checking and the only decoder available over extension fields.
"""

from __future__ import annotations

from typing import Sequence

from .basemath import (
    ExtField,
    PrimeField,
    gfp_inv,
    gfp_quadratic_roots,
    gfp_solve,
    iter_l1_errors,
    sphere_volume_l1,
)
from .core import guard_limit

# Exhaustive decoding refuses to enumerate spheres larger than this.
ORACLE_VOLUME_GUARD = 10_000_000


class SyndromeAmbiguityError(RuntimeError):
    """Two distinct in-budget errors share a syndrome (contradicts the
    designed minimum distance); raised by the exhaustive decoder."""


class BerlekampCode:
    """Check-matrix data for one code instance.

    For the base-field case (ext is None) locators are ints in [1, p).
    Over an extension field, locators are coefficient tuples and only
    syndrome computation and exhaustive decoding are supported.
    """

    def __init__(
        self,
        field: PrimeField,
        beta: Sequence,
        tau: int,
        ext: ExtField | None = None,
        validate: bool = True,
    ):
        if tau < 1:
            raise ValueError(f"error budget must be >= 1, got {tau}")
        if 2 * tau >= field.p:
            raise ValueError(f"need 2*tau < p, got tau={tau}, p={field.p}")
        self.field = field
        self.tau = tau
        self.ext = ext
        self.n = len(beta)
        if self.n < 1:
            raise ValueError("code length must be >= 1")
        p = field.p
        if ext is None:
            self.beta = tuple(b % p for b in beta)
            if validate:
                if len(set(self.beta)) != self.n or 0 in self.beta:
                    raise ValueError("locators must be nonzero and distinct")
                values = set(self.beta)
                for b in self.beta:
                    if (p - b) % p in values:
                        raise ValueError(f"locators {b} and {p - b} negate each other")
            # power_cols[v][j] = beta_j ** (2v+1) mod p
            self.power_cols = [
                tuple(pow(b, 2 * v + 1, p) for b in self.beta) for v in range(tau)
            ]
            self._index = {b: j for j, b in enumerate(self.beta)}
            self._encoder_rows: list[list[int]] | None = None
        else:
            if ext.p != p:
                raise ValueError("extension field characteristic must match")
            self.beta = tuple(ext.element(b) for b in beta)
            if validate:
                if len(set(self.beta)) != self.n or ext.zero in self.beta:
                    raise ValueError("locators must be nonzero and distinct")
                values = set(self.beta)
                for b in self.beta:
                    if ext.neg(b) in values:
                        raise ValueError("two locators negate each other")
            self.power_cols = [
                tuple(ext.power(b, 2 * v + 1) for b in self.beta) for v in range(tau)
            ]

    @property
    def redundancy(self) -> int:
        return self.tau  # base-field case: check matrix has full rank tau

    @property
    def dimension(self) -> int:
        return self.n - self.tau

    def locator_index(self, value: int) -> int | None:
        return self._index.get(value % self.field.p)

    def syndrome(self, y: Sequence[int]) -> tuple:
        """Components (s_1, s_2, ..) of y against the odd-power checks."""
        if len(y) != self.n:
            raise ValueError(f"vector length {len(y)} != code length {self.n}")
        p = self.field.p
        if self.ext is None:
            return tuple(
                sum(v * col[j] for j, v in enumerate(y)) % p for col in self.power_cols
            )
        ext = self.ext
        out = []
        for col in self.power_cols:
            acc = ext.zero
            for j, v in enumerate(y):
                acc = ext.add(acc, ext.scale(v % p, col[j]))
            out.append(acc)
        return tuple(out)

    def zero_syndrome(self) -> tuple:
        if self.ext is None:
            return (0,) * self.tau
        return (self.ext.zero,) * self.tau


def decode_single_error(code: BerlekampCode, syn: Sequence[int] | int) -> list[int] | None:
    """Invert the syndrome of at most one +-1 error (tau = 1 codes)."""
    if code.tau != 1 or code.ext is not None:
        raise ValueError("single-error decoding needs a base-field tau=1 code")
    s = syn[0] if not isinstance(syn, int) else syn
    s %= code.field.p
    if s == 0:
        return [0] * code.n
    j = code.locator_index(s)
    if j is not None:
        e = [0] * code.n
        e[j] = 1
        return e
    j = code.locator_index(code.field.p - s)
    if j is not None:
        e = [0] * code.n
        e[j] = -1
        return e
    return None


def decode_double_error(code: BerlekampCode, syn: Sequence[int]) -> list[int] | None:
    """Invert the syndrome of an error of Lee weight <= 2 (tau = 2 codes).

    Hypotheses tried in turn: no error; one +-1 error (s2 == s1^3); a +-2
    error at one position; +-1 errors at two positions via the quadratic
    whose roots are the signed locator contributions.  The weight classes
    have disjoint syndrome sets, so the order does not matter.
    """
    if code.tau != 2 or code.ext is not None:
        raise ValueError("double-error decoding needs a base-field tau=2 code")
    p = code.field.p
    field = code.field
    s1, s2 = syn[0] % p, syn[1] % p
    if s1 == 0 and s2 == 0:
        return [0] * code.n
    if s1 == 0:
        # A weight <= 2 error always leaves a nonzero first component.
        return None

    if s2 == pow(s1, 3, p):
        j = code.locator_index(s1)
        if j is not None:
            e = [0] * code.n
            e[j] = 1
            return e
        j = code.locator_index(p - s1)
        if j is not None:
            e = [0] * code.n
            e[j] = -1
            return e

    half = gfp_inv(2, field)
    g = s1 * half % p
    j = code.locator_index(g)
    if j is not None and s2 == 2 * pow(g, 3, p) % p:
        e = [0] * code.n
        e[j] = 2
        return e
    j = code.locator_index(p - g)
    if j is not None and s2 == (-2) * pow(p - g, 3, p) % p:
        e = [0] * code.n
        e[j] = -2
        return e

    # Two distinct positions: x^2 - s1*x + (s1^2 - s2/s1)/3 has roots
    # e_i*beta_i and e_j*beta_j.
    c0 = (s1 * s1 - s2 * gfp_inv(s1, field)) % p * gfp_inv(3, field) % p
    roots = gfp_quadratic_roots(-s1, c0, field)
    if not roots:
        return None

    def locate(root: int) -> tuple[int, int] | None:
        idx = code.locator_index(root)
        if idx is not None:
            return idx, 1
        idx = code.locator_index(p - root)
        if idx is not None:
            return idx, -1
        return None

    if len(roots) == 1:
        # Double root: only consistent with a pair of locators negating
        # each other (possible only in suffix-ambiguous embeddings).
        (r,) = roots
        i = code.locator_index(r)
        j = code.locator_index(p - r)
        if i is None or j is None or i == j:
            return None
        e = [0] * code.n
        e[i] = 1
        e[j] = -1
        return e

    r1, r2 = sorted(roots)
    hit1, hit2 = locate(r1), locate(r2)
    if hit1 is None or hit2 is None:
        return None
    (i, ei), (j, ej) = hit1, hit2
    if i == j:
        return None
    e = [0] * code.n
    e[i] = ei
    e[j] = ej
    return e


def decode_exhaustive(
    code: BerlekampCode, syn: Sequence, budget: int | None = None
) -> list[int] | None:
    """Ground-truth decoder: enumerate every error with L1 weight <= budget
    and return the unique one matching the syndrome.

    Raises SyndromeAmbiguityError if two in-budget errors match, which
    would contradict the code's designed minimum distance.
    """
    budget = code.tau if budget is None else budget
    volume = sphere_volume_l1(code.n, budget)
    limit = guard_limit(ORACLE_VOLUME_GUARD)
    if volume > limit:
        raise ValueError(
            f"enumeration of {volume} error patterns exceeds the guard ({limit}); "
            "set DPE_CODEC_GUARD_OVERRIDE to raise it"
        )
    target = tuple(syn)
    if target == code.zero_syndrome():
        return [0] * code.n
    match: list[int] | None = None
    for e in iter_l1_errors(code.n, budget):
        if code.syndrome(e) == target:
            if match is not None:
                raise SyndromeAmbiguityError(
                    f"errors {match} and {e} share syndrome {target}"
                )
            match = list(e)
    return match


def decode_bounded(code: BerlekampCode, syn: Sequence, budget: int | None = None) -> list[int] | None:
    """Dispatch to the closed-form decoder when one exists, else enumerate."""
    budget = code.tau if budget is None else budget
    if code.ext is None and budget == code.tau:
        if code.tau == 1:
            return decode_single_error(code, syn)
        if code.tau == 2:
            return decode_double_error(code, syn)
    return decode_exhaustive(code, syn, budget)


def systematic_encode(code: BerlekampCode, message: Sequence[int]) -> list[int]:
    """Extend a length-(n - tau) message to a zero-syndrome codeword.

    The tau redundancy symbols occupy the last positions; the linear system
    they satisfy is solvable whenever the locators meet the code conditions.
    """
    if code.ext is not None:
        raise ValueError("systematic encoding is supported over the base field only")
    k = code.dimension
    if len(message) != k:
        raise ValueError(f"message length {len(message)} != dimension {k}")
    p = code.field.p
    if code._encoder_rows is None:
        matrix = [[code.power_cols[v][k + t] for t in range(code.tau)] for v in range(code.tau)]
        identity = [[1 if r == c else 0 for c in range(code.tau)] for r in range(code.tau)]
        inverse = []
        for col in range(code.tau):
            sol = gfp_solve(matrix, [identity[r][col] for r in range(code.tau)], p)
            if sol is None:
                raise ValueError("redundancy locator submatrix is singular")
            inverse.append(sol)
        # inverse[c][r]: column c of M^-1
        code._encoder_rows = [[inverse[c][r] for c in range(code.tau)] for r in range(code.tau)]
    rhs = [
        (-sum(message[j] * code.power_cols[v][j] for j in range(k))) % p
        for v in range(code.tau)
    ]
    redundancy = [
        sum(code._encoder_rows[r][v] * rhs[v] for v in range(code.tau)) % p
        for r in range(code.tau)
    ]
    codeword = [m % p for m in message] + redundancy
    return codeword


