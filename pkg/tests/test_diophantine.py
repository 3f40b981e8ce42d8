from fractions import Fraction

import pytest

from brieskorn import diophantine as dio
from brieskorn.contact import d3_e0m2_closed, d3_quadruple_closed, h1_e0m2_closed
from brieskorn.diophantine import AdmissibleTriple

LISTED_FINITE = {
    (5, 7, 2, 2),
    (4, 11, 2, 2),
    (2, 7, 3, 4),
    (3, 14, 2, 3),
    (3, 10, 2, 4),
    (4, 5, 2, 5),
    (3, 8, 2, 6),
    (3, 7, 2, 10),
    (2, 9, 3, 2),
}


def as_abuv(triples):
    return {(t.a, t.b, t.u, t.v) for t in triples}


def test_divisors():
    assert dio.divisors(35) == [1, 5, 7, 35]
    assert dio.divisors(1) == [1]
    assert dio.divisors(36) == [1, 2, 3, 4, 6, 9, 12, 18, 36]


def test_quadruples():
    sol = dio.quadruples_unit()
    assert sol.finite == ((2, 3, 7, 41), (2, 3, 11, 13))
    assert sol.family is None
    for a, b, c, d in sol.finite:
        assert (c - 6) * (d - 6) == 35
        lhs = Fraction(1, a) + Fraction(1, b) + Fraction(1, c) + Fraction(1, d)
        assert lhs == 1 + Fraction(1, a * b * c * d)


@pytest.mark.parametrize("bound, expected", [(10, ()), (41, ((2, 3, 7, 41), (2, 3, 11, 13)))])
def test_quadruples_oracle_small(bound, expected):
    assert dio.quadruples_unit_oracle(bound).finite == expected


def test_quadruple_closed_form_on_solutions():
    values = {q: d3_quadruple_closed(*q) for q in dio.quadruples_unit().finite}
    assert values == {(2, 3, 7, 41): -418, (2, 3, 11, 13): -208}


def test_prop_new_small_and_replay():
    assert dio.prop_new_check(40).finite == ()
    a, b, c = 2, 3, 5
    coeff = 3 * a * b * c - 2 * a * b - 2 * a * c - 2 * b * c
    assert (coeff, a * b * c - 2) == (28, 28)  # d = 1 < 3, rejected


def test_u2_lemma_row_a3():
    audit = []
    rows = {(t.v, t.b) for t in dio._u2_branch(audit) if t.a == 3}
    assert rows == {(3, 14), (4, 10), (6, 8), (10, 7)}


def test_u2_a4_divisor_audit():
    # divisors of 14: t = 1 and t = 7 give v = 2 and v = 5; t = 2, 14 give no v
    audit = []
    found = {(t.v, t.b) for t in dio._u2_branch(audit) if t.a == 4}
    assert found == {(2, 11), (5, 5)}
    dropped = [line for line in audit if line.startswith("u=2 a=4 ")]
    assert {line.split()[2].rstrip(":") for line in dropped} == {"t=2", "t=14"}


def test_u3_a3_has_no_solutions():
    audit = []
    assert [t for t in dio._u3_branch(audit) if t.a == 3] == []
    assert sum(line.startswith("u=3 a=3 ") and "v not an integer" in line for line in audit) == 4


def test_admissible_triples_finite_part():
    sol = dio.admissible_triples(25)
    assert as_abuv(sol.finite) == LISTED_FINITE
    assert sol.family is not None and sol.family.descriptor == "(2,3,6v-1), v >= 2"
    assert [t.c for t in sol.family_members[:3]] == [11, 17, 23]
    assert list(sol.finite) == sorted(sol.finite, key=lambda t: t.key())
    assert all(t.is_admissible() for t in sol.all_members())


def test_oracle_agreement_small():
    ref = dio.admissible_triples_oracle(8, 12)
    sol = dio.admissible_triples(12)
    assert ref.finite == sol.finite
    assert ref.family_members == sol.family_members


def test_lemma_identities():
    for a in range(3, 40):
        for v in range(2, 60):
            t = v * (a - 2) - (a - 1)
            n = 4 * v * v - 5 * v + 2
            assert (a - 2) ** 2 * n == 4 * t * t + (3 * a + 2) * t + (a * a - a + 2)
            t = v * (2 * a - 3) - (a - 1)
            n = 9 * v * v - 8 * v + 2
            assert (2 * a - 3) ** 2 * n == 9 * t * t + (2 * a + 6) * t + (a * a - 2 * a + 3)


def test_factorization_identities():
    for t in dio.admissible_triples(25).finite:
        a, b, v = t.a, t.b, t.v
        if t.u == 2:
            assert ((v - 1) * a - (2 * v - 1)) * ((v - 1) * b - (2 * v - 1)) == 4 * v * v - 5 * v + 2
        elif t.u == 3:
            assert ((2 * v - 1) * a - (3 * v - 1)) * ((2 * v - 1) * b - (3 * v - 1)) == 9 * v * v - 8 * v + 2


def test_spades_formula():
    for v in range(2, 30):
        assert dio.spades_b(6, v) == 3
    assert dio.spades_b(2, 5) == Fraction(17, -1)


def test_property4_examples():
    kept = AdmissibleTriple(5, 7, 2, 2)
    assert kept.a + kept.b + kept.u + kept.v == 16 and kept.property4()
    dropped = AdmissibleTriple(3, 14, 2, 3)
    assert not dropped.property4()
    sol = dio.property4_filter(dio.admissible_triples(25))
    assert {(t.a, t.b, t.c) for t in sol.finite} == {(5, 7, 3), (4, 11, 3), (2, 7, 11)}


def test_homology_bridge():
    sol = dio.admissible_triples(25)
    for t in sol.all_members():
        assert h1_e0m2_closed(t.u - 2, t.v - 2, t.a, t.b) == 1


def test_d3_bridge():
    sol = dio.admissible_triples(25)
    for t in sol.all_members():
        assert t.property4() == (d3_e0m2_closed(t.u - 2, t.v - 2, t.a, t.b) == 0)


def test_bitmask_and_tsv():
    assert AdmissibleTriple(5, 7, 2, 2).bitmask() == 0b1111
    assert AdmissibleTriple(3, 14, 2, 3).bitmask() == 0b0111
    text = dio.triples_tsv(dio.admissible_triples(3))
    lines = text.splitlines()
    assert lines[0] == "a\tb\tu\tv\tuv-1\tproperties"
    assert "5\t7\t2\t2\t3\t1111" in lines
    assert lines[-1] == "FAMILY\t(2,3,6v-1), v >= 2"
    assert "FAMILY\t2\t3\t6\t2\t11\t0111" in lines
    assert dio.quadruples_tsv(dio.quadruples_unit()).splitlines()[1] == "2\t3\t7\t41"
