import pytest

from arcfact.core.errors import InvalidArgumentError
from arcfact.numtheory import (
    factorial_p_part,
    factorize,
    is_primitive_prime_divisor,
    legendre_exponent,
    multiplicative_order,
    p_part,
    ppd,
    prime_power,
    prime_set,
    zsigmondy_exception,
)


def test_p_part():
    assert p_part(720, 2) == 16
    assert p_part(720, 3) == 9
    assert p_part(720, 7) == 1
    assert p_part(1, 5) == 1


def test_p_part_rejects_bad_input():
    with pytest.raises(InvalidArgumentError):
        p_part(12, 4)
    with pytest.raises(InvalidArgumentError):
        p_part(0, 2)


def test_prime_set_and_factorize():
    assert prime_set(95040) == {2, 3, 5, 11}
    assert factorize(95040) == {2: 6, 3: 3, 5: 1, 11: 1}
    assert factorize(2**61 - 1) == {2**61 - 1: 1}
    assert prime_set(1) == frozenset()


def test_prime_power():
    assert prime_power(81) == (3, 4)
    assert prime_power(7) == (7, 1)
    with pytest.raises(InvalidArgumentError):
        prime_power(12)


def test_legendre_exponent():
    assert legendre_exponent(10, 2) == 8
    assert legendre_exponent(100, 5) == 24
    assert factorial_p_part(6, 2).value == 16
    assert factorial_p_part(6, 2).exponent == 4


def test_factorial_bound_holds_on_small_grid():
    for p in (2, 3, 5, 7, 97):
        for n in range(1, 120):
            assert factorial_p_part(n, p).bound_holds


def test_multiplicative_order():
    assert multiplicative_order(2, 7) == 3
    assert multiplicative_order(3, 7) == 6


def test_ppd_convention_for_2_6():
    result = ppd(2, 6)
    assert result.primes == {7}
    assert result.exceptional


def test_ppd_empty_for_mersenne_plus_one():
    assert ppd(3, 2).primes == frozenset()
    assert ppd(7, 2).primes == frozenset()
    assert zsigmondy_exception(3, 2)
    assert not zsigmondy_exception(5, 2)


def test_ppd_values():
    assert ppd(2, 4).primes == {5}
    assert ppd(3, 4).primes == {5}
    assert ppd(2, 11).primes == {23, 89}
    assert ppd(10, 6).primes == {7, 13}


def test_ppd_agrees_with_definition():
    for a in range(2, 11):
        for m in range(2, 13):
            if (a, m) == (2, 6):
                continue
            result = ppd(a, m)
            for r in result.primes:
                assert is_primitive_prime_divisor(r, a, m)
                assert r % m == 1
            assert bool(result.primes) != zsigmondy_exception(a, m)


def test_ppd_rejects_small_arguments():
    with pytest.raises(InvalidArgumentError):
        ppd(1, 5)
    with pytest.raises(InvalidArgumentError):
        ppd(2, 1)
