import pytest

from dpe_codec.basemath import (
    ExtField,
    PrimeField,
    iter_l1_errors,
    lee_weight,
)
from dpe_codec.berlekamp import (
    BerlekampCode,
    SyndromeAmbiguityError,
    decode_bounded,
    decode_double_error,
    decode_exhaustive,
    decode_single_error,
    systematic_encode,
)

ALPHA15 = (3, 5, 6, 7, 9, 10, 11, 12, 13, 14, 1, 2, 4, 8, 16)


@pytest.fixture
def code31_tau1():
    return BerlekampCode(PrimeField(31), ALPHA15, tau=1)


@pytest.fixture
def code31_tau2():
    return BerlekampCode(PrimeField(31), ALPHA15, tau=2)


class TestConstruction:
    def test_rejects_bad_locators(self):
        f = PrimeField(11)
        with pytest.raises(ValueError):
            BerlekampCode(f, (1, 2, 2), tau=1)
        with pytest.raises(ValueError):
            BerlekampCode(f, (1, 2, 0), tau=1)
        with pytest.raises(ValueError):
            BerlekampCode(f, (2, 9), tau=1)  # 2 + 9 = 11
        with pytest.raises(ValueError):
            BerlekampCode(f, (1, 2, 3), tau=6)  # 2*tau >= p

    def test_relaxed_validation_allows_negating_pair(self):
        code = BerlekampCode(PrimeField(11), (2, 9, 1), tau=1, validate=False)
        assert code.n == 3


class TestSyndrome:
    def test_zero_for_codewords(self, code31_tau2):
        message = [5, 1, 0, 30, 2, 7, 8, 9, 10, 11, 12, 13, 14]
        cw = systematic_encode(code31_tau2, message)
        assert code31_tau2.syndrome(cw) == (0, 0)

    def test_known_read_vector(self, code31_tau1):
        y = (1, 1, 1, 2, 0, 2, 1, 1, 2, 2, 1, 1, 2, 1, 2)
        assert code31_tau1.syndrome(y) == (21,)

    def test_known_error_pattern(self, code31_tau2):
        e = [0] * 15
        e[5], e[13] = -1, 1
        assert code31_tau2.syndrome(e) == (29, 8)

    def test_linearity(self, code31_tau2):
        import random

        rng = random.Random(7)
        p = 31
        for _ in range(50):
            x = [rng.randrange(-5, 6) for _ in range(15)]
            y = [rng.randrange(-5, 6) for _ in range(15)]
            a, b = rng.randrange(p), rng.randrange(p)
            combo = [a * xi + b * yi for xi, yi in zip(x, y)]
            sx, sy = code31_tau2.syndrome(x), code31_tau2.syndrome(y)
            expect = tuple((a * u + b * v) % p for u, v in zip(sx, sy))
            assert code31_tau2.syndrome(combo) == expect


class TestSingleErrorDecoding:
    def test_zero(self, code31_tau1):
        assert decode_single_error(code31_tau1, (0,)) == [0] * 15

    def test_known_location(self, code31_tau1):
        e = decode_single_error(code31_tau1, (10,))
        expected = [0] * 15
        expected[5] = 1
        assert e == expected

    def test_exhaustive_inversion(self, code31_tau1):
        for j in range(15):
            for sign in (1, -1):
                e = [0] * 15
                e[j] = sign
                syn = code31_tau1.syndrome(e)
                assert decode_single_error(code31_tau1, syn) == e

    def test_unmatched(self):
        # shortened code: locators (1..5) mod 13 leave 6 and 7 uncovered
        code = BerlekampCode(PrimeField(13), (1, 2, 3, 4, 5), tau=1)
        assert decode_single_error(code, (6,)) is None
        assert decode_single_error(code, (7,)) is None


class TestDoubleErrorDecoding:
    def test_worked_pair(self, code31_tau2):
        e = decode_double_error(code31_tau2, (29, 8))
        expected = [0] * 15
        expected[13], expected[5] = 1, -1
        assert e == expected

    def test_zero(self, code31_tau2):
        assert decode_double_error(code31_tau2, (0, 0)) == [0] * 15

    def test_s1_zero_nonzero_s2(self, code31_tau2):
        assert decode_double_error(code31_tau2, (0, 5)) is None

    def test_exhaustive_inversion_and_oracle_agreement(self, code31_tau2):
        for e in iter_l1_errors(15, 2):
            syn = code31_tau2.syndrome(e)
            assert decode_double_error(code31_tau2, syn) == e
            assert decode_exhaustive(code31_tau2, syn) == e

    def test_oracle_agreement_on_worked_example(self, code31_tau2):
        assert decode_exhaustive(code31_tau2, (29, 8)) == decode_double_error(
            code31_tau2, (29, 8)
        )

    def test_oracle_agreement_second_code(self):
        code = BerlekampCode(PrimeField(13), (1, 2, 3, 4, 5, 6), tau=2)
        for e in iter_l1_errors(6, 2, include_zero=True):
            syn = code.syndrome(e)
            assert decode_double_error(code, syn) == decode_exhaustive(code, syn) == e


class TestExhaustiveDecoder:
    def test_overweight_syndrome(self):
        code = BerlekampCode(PrimeField(11), (1, 2, 3, 4, 5), tau=1)
        e = [0] * 5
        e[0], e[2] = 1, 1  # weight 2 on a distance-3 code
        syn = code.syndrome(e)
        got = decode_exhaustive(code, syn)
        # either no weight-1 match, or a wrong weight-1 vector; never e itself
        assert got != e

    def test_ambiguity_detection(self):
        code = BerlekampCode(PrimeField(11), (2, 9, 1), tau=1, validate=False)
        with pytest.raises(SyndromeAmbiguityError):
            decode_exhaustive(code, (2,))

    def test_guard(self):
        code = BerlekampCode(PrimeField(101), tuple(range(1, 51)), tau=2)
        with pytest.raises(ValueError, match="guard"):
            decode_exhaustive(code, (1, 1), budget=9)


class TestSystematicEncode:
    def test_zero_message(self, code31_tau2):
        assert systematic_encode(code31_tau2, [0] * 13) == [0] * 15

    def test_unit_messages(self, code31_tau2):
        for i in range(13):
            msg = [0] * 13
            msg[i] = 1
            cw = code31_tau2.syndrome(systematic_encode(code31_tau2, msg))
            assert cw == (0, 0)

    def test_random_messages(self, code31_tau2):
        import random

        rng = random.Random(3)
        for _ in range(25):
            msg = [rng.randrange(31) for _ in range(13)]
            cw = systematic_encode(code31_tau2, msg)
            assert cw[:13] == msg
            assert code31_tau2.syndrome(cw) == (0, 0)

    def test_redundancy_is_tau(self, code31_tau2):
        cw = systematic_encode(code31_tau2, [1] * 13)
        assert len(cw) - 13 == code31_tau2.tau


def _min_lee_distance(code: BerlekampCode) -> int:
    """Enumerate the whole code through its systematic encoder."""
    import itertools

    p = code.field.p
    k = code.dimension
    best = None
    for msg in itertools.product(range(p), repeat=k):
        if all(v == 0 for v in msg):
            continue
        w = lee_weight(systematic_encode(code, list(msg)), code.field)
        best = w if best is None else min(best, w)
    return best


class TestMinimumDistance:
    @pytest.mark.parametrize(
        "p,n,tau",
        [(5, 2, 1), (7, 3, 1), (11, 5, 2), (13, 5, 2), (13, 6, 2)],
    )
    def test_designed_distance(self, p, n, tau):
        code = BerlekampCode(PrimeField(p), tuple(range(1, n + 1)), tau=tau)
        assert _min_lee_distance(code) >= 2 * tau + 1


class TestExtensionField:
    def test_syndrome_and_oracle(self):
        ext = ExtField(3, 2)
        # distinct nonzero non-negating locators over GF(9)
        beta = [(1, 0), (0, 1), (1, 1), (2, 1)]
        code = BerlekampCode(PrimeField(3), beta, tau=1, ext=ext)
        for e in iter_l1_errors(4, 1):
            syn = code.syndrome(e)
            assert decode_exhaustive(code, syn) == e

    def test_min_distance_by_enumeration(self):
        import itertools

        ext = ExtField(3, 2)
        beta = [(1, 0), (0, 1), (1, 1), (2, 1)]
        code = BerlekampCode(PrimeField(3), beta, tau=1, ext=ext)
        field = PrimeField(3)
        best = None
        for vec in itertools.product(range(3), repeat=4):
            if any(vec) and code.syndrome(vec) == code.zero_syndrome():
                w = lee_weight(vec, field)
                best = w if best is None else min(best, w)
        assert best is not None and best >= 3

    def test_encode_rejected(self):
        ext = ExtField(3, 2)
        code = BerlekampCode(PrimeField(3), [(1, 0), (0, 1)], tau=1, ext=ext)
        with pytest.raises(ValueError):
            systematic_encode(code, [1])


class TestDispatch:
    def test_bounded_dispatch(self, code31_tau1, code31_tau2):
        e = [0] * 15
        e[3] = 1
        assert decode_bounded(code31_tau1, code31_tau1.syndrome(e)) == e
        e[7] = -1
        assert decode_bounded(code31_tau2, code31_tau2.syndrome(e)) == e

    def test_bounded_tau3_uses_enumeration(self):
        code = BerlekampCode(PrimeField(23), tuple(range(1, 9)), tau=3)
        for e in ([0, 1, 0, -1, 0, 0, 1, 0], [0, 0, 3, 0, 0, 0, 0, 0]):
            syn = code.syndrome(e)
            assert decode_bounded(code, syn) == e
