import pytest

from rankperm.errors import CapExceeded
from rankperm.field import build_field, factorize, is_prime, prime_power


def test_prime_helpers():
    assert [p for p in range(30) if is_prime(p)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert factorize(360) == {2: 3, 3: 2, 5: 1}
    assert prime_power(343) == (7, 3)
    assert prime_power(12) is None and prime_power(1) is None


@pytest.mark.parametrize("p, e", [(2, 1), (2, 3), (2, 4), (3, 2), (3, 3), (5, 3), (7, 3), (11, 2)])
def test_field_axioms(p, e):
    F = build_field(p, e)
    assert F.size == p ** e
    assert F.multiplicative_order(F.primitive) == F.order
    # powers of the primitive element enumerate every nonzero element once
    assert sorted(int(x) for x in F.antilog) == list(range(1, F.size))
    for x in range(1, F.size):
        assert int(F.antilog[F.element_log(x)]) == x
        assert F.mul(x, F.inv(x)) == 1
        assert F.add(x, F.neg(x)) == 0
    # distributivity and Frobenius on a sample
    sample = range(0, F.size, max(1, F.size // 17))
    for a in sample:
        for b in sample:
            for c in sample:
                assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
            assert F.power(F.add(a, b), p) == F.add(F.power(a, p), F.power(b, p))


def test_small_field_examples():
    F = build_field(2, 1)
    assert F.size == 2 and F.primitive == 1
    F = build_field(3, 3)
    assert F.size == 27 and F.multiplicative_order(F.primitive) == 26
    assert build_field(7, 3).size == 343


def test_prime_field_is_integers_mod_p():
    F = build_field(13, 1)
    for a in range(13):
        for b in range(13):
            assert F.add(a, b) == (a + b) % 13
            assert F.mul(a, b) == a * b % 13


def test_subfield():
    F = build_field(5, 3)
    sub = F.subfield(1)
    assert sorted(sub) == [0, 1, 2, 3, 4]
    G = build_field(2, 4)
    quad = G.subfield(2)
    assert len(quad) == 4
    for a in quad:
        for b in quad:
            assert G.add(a, b) in quad and G.mul(a, b) in quad
    with pytest.raises(ValueError):
        F.subfield(2)


def test_field_errors():
    with pytest.raises(ValueError):
        build_field(4, 1)
    with pytest.raises(ValueError):
        build_field(3, 0)
    with pytest.raises(CapExceeded):
        build_field(2, 30)
    F = build_field(3, 1)
    with pytest.raises(ZeroDivisionError):
        F.inv(0)
    with pytest.raises(ValueError):
        F.element_log(0)


def test_deterministic():
    a, b = build_field(5, 3), build_field(5, 3)
    assert a.modulus == b.modulus and a.primitive == b.primitive
    assert (a.antilog == b.antilog).all()
