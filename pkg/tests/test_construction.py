import itertools
import math

import pytest

from rankperm.construction import (
    ParityCheck, SidonSet, bose_chowla_set, build_code, build_syndrome_table,
    choose_q, codeword_index, coset_profile, decode, error_vectors,
    exhaustive_sidon_set, improve_assignment, is_sidon, lift_check,
    lift_ranges_hold, min_kendall_distance, min_l1_distance,
    proof_sum_properties_hold, shorten, syndrome, syndromes_distinct,
)
from rankperm.enumeration import kendall_ball_volume
from rankperm.errors import CapExceeded
from rankperm.perm import (
    Permutation, kendall_distance, l1_distance, to_inversion_vector,
)

from oracles import all_perms, kendall_ball, sidon_sets


@pytest.fixture(scope="module")
def code72():
    return build_code(7, 2)


@pytest.fixture(scope="module")
def code71():
    return build_code(7, 1)


@pytest.fixture(scope="module")
def code52():
    return build_code(5, 2)


def test_is_sidon_examples():
    assert is_sidon((0, 1, 3), 2, 7)
    assert not is_sidon((0, 1, 2), 2, 7)
    assert is_sidon((0,), 3, 5)


@pytest.mark.parametrize("q, t", [(2, 1), (2, 2), (3, 2), (4, 2), (2, 3), (3, 3), (5, 2), (7, 2), (8, 2), (5, 3)])
def test_bose_chowla_sets_are_sidon(q, t):
    J = bose_chowla_set(q, t)
    assert J.m == (q ** (t + 1) - 1) // (q - 1)
    assert len(J.elements) == q + 1 and J.elements[0] == 0
    assert list(J.elements) == sorted(set(J.elements))
    assert is_sidon(J.elements, t, J.m)


@pytest.mark.parametrize("q, m", [(2, 7), (3, 13)])
def test_bose_chowla_in_exhaustive_list(q, m):
    found = sidon_sets(q, 2, m)
    J = bose_chowla_set(q, 2)
    assert J.elements in found
    assert exhaustive_sidon_set(q, 2) in found
    # {0,1,3} and {0,1,3,9} are in the lists; every set is a translate/scaling class member
    assert {(0, 1, 3), (0, 1, 3, 9)} & set(found)


def test_bose_chowla_rejects_non_prime_power():
    with pytest.raises(ValueError):
        bose_chowla_set(6, 2)


def test_lift_examples():
    J = SidonSet(3, 2, 13, (0, 1, 3, 9))
    P = lift_check(J)
    assert P.h == (13, 14, 16, 22) and P.m_t == 104
    P = lift_check(SidonSet(2, 2, 7, (0, 1, 3)))
    assert P.h == (7, 8, 10) and P.m_t == 56
    J3 = bose_chowla_set(3, 3)
    P = lift_check(J3)
    assert P.m_t == 12 * J3.m
    assert all(J3.m <= h < 2 * J3.m for h in P.h)
    with pytest.raises(ValueError):
        lift_check(bose_chowla_set(3, 1))


def test_syndromes_distinct_examples():
    assert syndromes_distinct(ParityCheck(2, 13, 104, (13, 14, 16, 22)))
    assert not syndromes_distinct(ParityCheck(1, 4, 4, (1, 2)))
    assert syndromes_distinct(ParityCheck(3, 5, 60, ()))


def test_error_vector_count():
    # |{e in Z^L : |e|_1 <= t}| = sum_k 2^k C(L,k) C(t,k)
    for L in range(6):
        for t in range(4):
            expect = sum(2 ** k * math.comb(L, k) * math.comb(t, k) for k in range(min(L, t) + 1))
            assert sum(1 for _ in error_vectors(L, t)) == expect


def test_shorten():
    P = ParityCheck(2, 13, 104, (13, 14, 16, 22))
    assert shorten(P, 3).h == (13, 14, 16)
    assert shorten(P, 4) == P
    assert shorten(P, 0).h == ()
    with pytest.raises(ValueError):
        shorten(P, 5)


def test_coset_profile_matches_enumeration(code52):
    P = ParityCheck(2, 13, 104, (13, 14, 16, 22))
    prof = coset_profile(5, P)
    brute = [0] * 104
    for p in all_perms(5):
        x = to_inversion_vector(p).coords
        brute[sum(a * b for a, b in zip(x, P.h)) % 104] += 1
    assert prof == brute
    assert sum(prof) == 120 and max(prof) >= 2


def test_coset_profile_t1_n7(code71):
    prof = coset_profile(7, code71.parity)
    brute = [0] * 13
    for p in all_perms(7):
        x = to_inversion_vector(p).coords
        brute[sum(a * b for a, b in zip(x, range(1, 7))) % 13] += 1
    assert prof == brute and max(prof) >= 388


def test_choose_q():
    assert [choose_q(n) for n in (4, 5, 7, 8, 9, 10, 12)] == [2, 3, 5, 7, 7, 8, 11]


def test_build_code_52(code52):
    assert code52.q == 3 and code52.m == 13 and code52.m_t == 104
    assert len(code52) >= 2
    assert min_kendall_distance(code52) >= 5


@pytest.mark.parametrize("n, t", [(4, 1), (5, 1), (5, 2), (6, 2), (7, 1), (7, 2), (7, 3), (8, 2)])
def test_code_invariants(n, t):
    code = build_code(n, t)
    prof = coset_profile(n, code.parity)
    assert len(code) == max(prof) >= -(-math.factorial(n) // code.m_t)
    assert code.coset == prof.index(max(prof))
    assert syndromes_distinct(code.parity)
    if t >= 2:
        assert is_sidon(code.sidon.elements, t, code.m)
        assert lift_ranges_hold(code.parity) and proof_sum_properties_hold(code.parity)
        assert sorted(code.h) == sorted(lift_check(code.sidon).h[: n - 1])
    vecs = code.vectors()
    assert [tuple(v) for v in vecs] == sorted(tuple(v) for v in vecs)
    assert all(syndrome(v, code) == 0 for v in vecs)
    assert min_l1_distance(vecs) >= 2 * t + 1
    assert min_kendall_distance(code) >= 2 * t + 1
    assert len(code) <= math.factorial(n) // kendall_ball_volume(n, t)


def test_sorted_assignment_keeps_band_order():
    code = build_code(7, 2, assignment="sorted")
    assert code.h == tuple(sorted(code.h))
    assert len(code) >= 21 and min_kendall_distance(code) >= 5
    with pytest.raises(ValueError):
        build_code(7, 2, assignment="random")


def test_improve_assignment_never_shrinks():
    code = build_code(8, 2, assignment="sorted")
    better = improve_assignment(8, code.parity)
    assert sorted(better.h) == sorted(code.h)
    assert max(coset_profile(8, better)) >= max(coset_profile(8, code.parity))


def test_syndrome_linearity(code72):
    c = to_inversion_vector(code72.codebook[0]).coords
    for i in range(6):
        e = [0] * 6
        e[i] = 1
        y = tuple(a + b for a, b in zip(c, e))
        assert syndrome(y, code72) == code72.h[i] % code72.m_t
        assert code72.syndrome_table[syndrome(y, code72)] == tuple(e)
    with pytest.raises(ValueError):
        syndrome((0, 0), code72)


def test_decode_exhaustive_t1(code71):
    for c in code71.codebook:
        assert decode(c, code71) == c
        # one Kendall step exchanges the values k and k+1
        for k in range(1, 7):
            r = tuple(k + 1 if v == k else k if v == k + 1 else v for v in c.entries)
            assert kendall_distance(r, c) == 1
            assert decode(r, code71) == c


def test_decode_exhaustive_radius2(code72):
    for c in code72.codebook:
        for r in kendall_ball(c.entries, 2):
            assert decode(r, code72) == c


def test_decode_answers_lie_within_l1_radius(code72):
    # beyond radius t the decoder may give up; any answer it gives is a
    # codeword whose inversion vector is within l1 distance t of the input
    words = set(code72.codebook)
    answered = 0
    for p in all_perms(7)[::7]:
        out = decode(p, code72)
        if out is not None:
            answered += 1
            assert out in words
            assert l1_distance(to_inversion_vector(out), to_inversion_vector(p)) <= 2
    assert answered > 0


def test_syndrome_table_size():
    P = ParityCheck(2, 13, 104, (13, 14, 16, 22))
    table = build_syndrome_table(P)
    assert len(table) == sum(1 for _ in error_vectors(4, 2)) == 41
    assert table[0] == (0, 0, 0, 0)


def test_codeword_index_and_sentinel(code52):
    assert codeword_index(code52, 0) == code52.codebook[0]
    with pytest.raises(IndexError):
        codeword_index(code52, len(code52))
    assert min_kendall_distance([Permutation((1, 2, 3, 4))]) == 7
    assert min_kendall_distance([(1, 2, 3), (3, 2, 1)]) == 3


def test_min_distance_matches_pairwise():
    code = build_code(6, 1)
    words = code.codebook
    ref = min(kendall_distance(a, b) for a, b in itertools.combinations(words, 2))
    assert min_kendall_distance(code) == ref
    assert min_kendall_distance(code, chunk=7) == ref


def test_build_code_errors():
    with pytest.raises(ValueError):
        build_code(3, 1)
    with pytest.raises(ValueError):
        build_code(6, 0)
    with pytest.raises(CapExceeded):
        build_code(10, 1, codebook_cap=1000)


def test_build_is_deterministic():
    a, b = build_code(8, 2), build_code(8, 2)
    assert a.h == b.h and a.coset == b.coset and a.codebook == b.codebook
