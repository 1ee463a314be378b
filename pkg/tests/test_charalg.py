from fractions import Fraction

import numpy as np
import pytest

from thetarel import (
    Characteristic,
    CycleClass,
    MixedClassError,
    char_linear_combine,
    class_of,
    cycle_number,
    enumerate_shifts,
    smith_matrix,
    apply_to_args,
)

F = Fraction

CYCLE_TABLE = {3: 3, 4: 2, 5: 5, 6: 3, 7: 7, 8: 4, 9: 9, 10: 5}


def test_cycle_number_table():
    for n, lam in CYCLE_TABLE.items():
        assert cycle_number(n) == lam


def test_cycle_number_small_and_parity():
    assert cycle_number(2) == 1
    for n in range(2, 40):
        lam = cycle_number(n)
        if n % 2:
            assert lam == n
        else:
            assert 2 * lam == n


@pytest.mark.parametrize("bad", [1, 0, -3])
def test_cycle_number_domain(bad):
    with pytest.raises(ValueError):
        cycle_number(bad)


def test_class_of_examples():
    assert class_of([F(1, 3), F(4, 3), F(-2, 3)], 3) == CycleClass(1, 3)
    assert class_of([0, 1, -2], 3) == CycleClass(0, 3)
    with pytest.raises(MixedClassError):
        class_of([F(1, 2), F(1, 3)], 6)


def test_class_of_rejects_incompatible_lambda():
    with pytest.raises(ValueError):
        class_of([F(1, 2), F(3, 2)], 3)
    with pytest.raises(ValueError):
        class_of([], 3)


def test_enumerate_shifts_counts():
    assert len(enumerate_shifts(1, 3)) == 9
    assert len(enumerate_shifts(2, 3)) == 81
    assert enumerate_shifts(1, 1) == [Characteristic.zero(1)]


def test_enumerate_shifts_no_duplicates_and_order():
    for g, lam in [(1, 2), (1, 3), (1, 5), (2, 2), (2, 3)]:
        shifts = enumerate_shifts(g, lam)
        assert len(shifts) == lam ** (2 * g)
        assert len(set(shifts)) == len(shifts)
        keys = [s.top + s.bottom for s in shifts]
        assert keys == sorted(keys)
        for s in shifts:
            for v in s.top + s.bottom:
                assert 0 <= v < 1
                assert (v * lam).denominator == 1


def test_char_linear_combine_examples():
    zero = Characteristic.zero(1)
    third = Characteristic((F(1, 3),), (0,))
    assert char_linear_combine([1, 1], [zero, third]) == third
    half = Characteristic((F(1, 2),), (0,))
    combo = char_linear_combine([F(2, 3)] * 3, [half, half, half]) - half
    assert combo == half
    one = Characteristic((1,), (0,))
    out = char_linear_combine([F(-1, 3), F(2, 3), F(2, 3)], [one, zero, zero])
    assert out == Characteristic((F(-1, 3),), (0,))


def test_char_linear_combine_errors():
    zero = Characteristic.zero(1)
    with pytest.raises(ValueError):
        char_linear_combine([1], [zero, zero])
    with pytest.raises(ValueError):
        char_linear_combine([1, 1], [zero, Characteristic.zero(2)])
    with pytest.raises(ValueError):
        char_linear_combine([], [])


def test_characteristic_text_roundtrip():
    for text in ["1/3,2/3;1/3,0", "0;0", "-1/4;5/4", "1/2,0;0,1/2"]:
        c = Characteristic.parse(text)
        assert str(c) == text
        assert Characteristic.parse(str(c)) == c


def test_characteristic_parse_errors():
    with pytest.raises(ValueError):
        Characteristic.parse("1/3,2/3")
    with pytest.raises(ValueError):
        Characteristic.parse("1/3;2/3;0")
    with pytest.raises(ValueError, match="bogus"):
        Characteristic.parse("bogus;0")
    with pytest.raises(ValueError):
        Characteristic.parse("1/0;0")


def test_characteristic_stays_unreduced():
    c = Characteristic((F(5, 3),), (F(-7, 3),))
    assert c.top == (F(5, 3),)
    assert c.bottom == (F(-7, 3),)
    shifted = c + Characteristic((1,), (2,))
    assert shifted.top == (F(8, 3),)


def test_characteristic_validation():
    with pytest.raises(ValueError):
        Characteristic((F(1, 2),), (0, 0))
    with pytest.raises(ValueError):
        Characteristic((), ())
    with pytest.raises(ValueError):
        Characteristic.zero(1) + Characteristic.zero(2)


def test_rational_arithmetic_exactness():
    rng = np.random.default_rng(11)
    for _ in range(200):
        a = F(int(rng.integers(-50, 51)), int(rng.integers(1, 17)))
        b = F(int(rng.integers(-50, 51)), int(rng.integers(1, 17)))
        assert (a + b) - b == a
        ca = Characteristic((a,), (b,))
        cb = Characteristic((b,), (a,))
        assert (ca + cb) - cb == ca


def test_transformed_integer_tuples_share_class():
    # Images of integer tuples under the order-n involution always land in
    # one class Z + l/lambda; class_of must never raise on them.
    rng = np.random.default_rng(12)
    for _ in range(200):
        n = int(rng.integers(2, 9))
        xi = tuple(int(v) for v in rng.integers(-8, 9, n))
        eta = apply_to_args(smith_matrix(n), xi)
        cls = class_of(eta, cycle_number(n))
        assert 0 <= cls.ell < cls.lam
