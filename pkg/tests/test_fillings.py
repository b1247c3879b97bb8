"""Standard fillings, inversion statistics, the phi monomial, the split into
corner-below/corner-above classes, signature monomials and complementation."""

from itertools import product
from math import factorial

import pytest

from hookgh import (
    HookShape,
    Monomial,
    StandardFilling,
    complement,
    dual_signature_monomial,
    enumerate_fillings,
    inversions,
    phi,
    signature_monomial,
    split_fillings,
)
from hookgh.fillings import UNIT, filling_from_json, filling_to_json
from hookgh.shapes import Cell, b_stat, conjugate

# The two worked fillings on (5,1^4) used as frozen anchors throughout:
# same row word, different column words, n = 9.
ROW_EXAMPLE = StandardFilling(HookShape(5, 4), (5, 6, 3, 2, 8), (7, 9, 1, 4))
CROSSING_EXAMPLE = StandardFilling(HookShape(5, 4), (5, 6, 3, 2, 8), (4, 7, 1, 9))


def hooks(n_max):
    return [HookShape(a, n - a)
            for n in range(1, n_max + 1) for a in range(1, n + 1)]


def small_monomials(n, top):
    """Every monomial whose dense exponent vector lies in {0..top}^(2n)."""
    out = []
    for vec in product(range(top + 1), repeat=2 * n):
        out.append(Monomial.from_vectors(vec[:n], vec[n:]))
    return out


# ---------------------------------------------------------------- monomials


def test_monomial_normalization():
    m = Monomial(x=((3, 1), (1, 2), (2, 0)), y=((1, 0),))
    assert m.x == ((1, 2), (3, 1))
    assert m.y == ()
    assert m.degree == 3
    assert str(UNIT) == "1"
    assert str(m) == "x1^2*x3"


@pytest.mark.parametrize("bad", [((0, 1),), ((2, -1),), ((-3, 2),)])
def test_monomial_rejects_bad_pairs(bad):
    with pytest.raises(ValueError):
        Monomial(x=bad)


def test_monomial_vector_round_trip():
    n = 3
    for vec in product(range(3), repeat=2 * n):
        m = Monomial.from_vectors(vec[:n], vec[n:])
        assert m.dense(n) == vec
        assert m.x_degree() == sum(vec[:n])
        assert m.y_degree() == sum(vec[n:])


def test_monomial_product_divides_quotient():
    ms = small_monomials(1, 2)
    for m1 in ms:
        for m2 in ms:
            prod = m1 * m2
            assert prod.dense(1) == tuple(a + b for a, b
                                          in zip(m1.dense(1), m2.dense(1)))
            assert m1.divides(prod) and m2.divides(prod)
            assert prod.quotient(m2) == m1
            expect = all(a <= b for a, b in zip(m1.dense(1), m2.dense(1)))
            assert m1.divides(m2) == expect
    with pytest.raises(ValueError):
        Monomial(x=((1, 2),)).quotient(Monomial(x=((1, 3),)))


def test_monomial_bump_is_multiplication_by_a_variable():
    for m in small_monomials(2, 2):
        for i in (1, 2):
            assert m.bump("x", i) == m * Monomial(x=((i, 1),))
            assert m.bump("y", i) == m * Monomial(y=((i, 1),))


def test_monomial_order_is_graded_lex_on_dense_vectors():
    ms = small_monomials(2, 2)
    by_key = sorted(ms, key=lambda m: (m.degree, m.dense(2)))
    assert sorted(ms) == by_key
    x1 = Monomial(x=((1, 1),))
    x2 = Monomial(x=((2, 1),))
    y1 = Monomial(y=((1, 1),))
    assert UNIT < y1 < x2 < x1 < x1 * y1
    assert Monomial(x=((1, 1), (2, 1))) < Monomial(x=((1, 2),))


def test_monomial_hash_follows_equality():
    a = Monomial(x=((1, 1),), y=((2, 3),))
    b = Monomial(x=[(1, 1)], y=[(2, 3)])
    assert a == b and hash(a) == hash(b)
    assert len({m: 0 for m in small_monomials(1, 2)}) == 9


# ----------------------------------------------------------------- fillings


def test_filling_validation():
    s = HookShape(2, 1)
    with pytest.raises(ValueError):
        StandardFilling(s, (1, 2, 3), ())
    with pytest.raises(ValueError):
        StandardFilling(s, (1, 2), (2,))
    with pytest.raises(ValueError):
        StandardFilling(s, (0, 1), (2,))
    StandardFilling(s, [3, 1], [2])  # lists coerce to tuples


def test_entry_and_position_are_inverse():
    for s in hooks(5):
        for S in enumerate_fillings(s):
            for cell in [Cell(1, j) for j in range(1, s.arm + 1)] + \
                        [Cell(i, 1) for i in range(2, s.leg + 2)]:
                assert S.position_of(S.entry(*cell)) == cell
    S = ROW_EXAMPLE
    with pytest.raises(ValueError):
        S.entry(2, 2)
    with pytest.raises(ValueError):
        S.position_of(10)


def test_words_and_diagram_of_the_worked_filling():
    S = ROW_EXAMPLE
    assert S.column_word() == (5, 7, 9, 1, 4)
    assert S.reading_word() == (5, 6, 3, 2, 8, 7, 9, 1, 4)
    assert S.diagram() == "4\n1\n9\n7\n5 6 3 2 8"


def test_enumeration_counts_and_order():
    for s in hooks(6):
        fs = enumerate_fillings(s)
        assert len(fs) == factorial(s.n)
        assert len(set(fs)) == len(fs)
        words = [S.reading_word() for S in fs]
        assert words == sorted(words)
    first, *_, last = enumerate_fillings(HookShape(2, 1))
    assert (first.row, first.col) == ((1, 2), (3,))
    assert (last.row, last.col) == ((3, 2), (1,))


def test_filling_json_round_trip():
    for S in enumerate_fillings(HookShape(2, 2)):
        assert filling_from_json(filling_to_json(S)) == S
    assert filling_to_json(ROW_EXAMPLE) == {
        "shape": {"a": 5, "leg": 4}, "row": [5, 6, 3, 2, 8], "col": [7, 9, 1, 4]}


# ------------------------------------------------------- inversions and phi


def test_worked_example_inversions_and_phi():
    inv = inversions(ROW_EXAMPLE)
    assert inv.row_pairs == {(3, 2), (5, 2), (5, 3), (6, 2), (6, 3)}
    assert inv.col_pairs == {(7, 5), (9, 5), (9, 7), (4, 1)}
    assert str(phi(ROW_EXAMPLE)) == "x4*x7*x9^2*y2^3*y3^2"
    assert str(phi(CROSSING_EXAMPLE)) == "x7^2*x9^4*y2^3*y3^2"


def test_phi_agrees_with_the_inversion_pair_sets():
    for s in hooks(5):
        n = s.n
        for S in enumerate_fillings(s):
            inv = inversions(S)
            xv = [0] * n
            for d, _ in inv.col_pairs:
                xv[d - 1] += 1
            yv = [0] * n
            for _, r in inv.row_pairs:
                yv[r - 1] += 1
            assert phi(S) == Monomial.from_vectors(xv, yv)


def test_phi_is_injective():
    for s in hooks(6):
        seen = {phi(S) for S in enumerate_fillings(s)}
        assert len(seen) == factorial(s.n)


def test_inversion_counts_are_bounded_and_attain_the_bounds():
    for s in hooks(5):
        col_max = b_stat(s)
        row_max = b_stat(conjugate(s))
        col_seen, row_seen = set(), set()
        for S in enumerate_fillings(s):
            inv = inversions(S)
            assert len(inv.col_pairs) <= col_max
            assert len(inv.row_pairs) <= row_max
            col_seen.add(len(inv.col_pairs))
            row_seen.add(len(inv.row_pairs))
        assert col_max in col_seen and 0 in col_seen
        assert row_max in row_seen and 0 in row_seen


# -------------------------------------------------------------------- split


def test_split_halves_every_class():
    for s in hooks(6):
        if s.arm >= 2:
            less, greater = split_fillings(s, "mu")
            assert len(less) == len(greater) == factorial(s.n) // 2
            assert all(S.row[0] < S.row[-1] for S in less)
            assert all(S.row[0] > S.row[-1] for S in greater)
        if s.leg >= 1:
            less, greater = split_fillings(s, "rho")
            assert len(less) == len(greater) == factorial(s.n) // 2
            assert all(S.col[-1] < S.row[0] for S in less)
            assert all(S.col[-1] > S.row[0] for S in greater)


def test_split_rejects_bad_roles_and_shapes():
    with pytest.raises(ValueError):
        split_fillings(HookShape(1, 2), "mu")
    with pytest.raises(ValueError):
        split_fillings(HookShape(3, 0), "rho")
    with pytest.raises(ValueError):
        split_fillings(HookShape(2, 1), "nu")


# ------------------------------------------------------ signature monomials


def test_signature_monomial_frozen_example():
    S = StandardFilling(HookShape(3, 1), (3, 1, 2), (4,))
    m = signature_monomial(S)
    assert m == Monomial(y=((1, 1), (2, 1)))
    assert m.divides(phi(S))


def test_dual_signature_frozen_example():
    T = StandardFilling(HookShape(2, 2), (2, 3), (1, 4))
    m = dual_signature_monomial(T)
    assert m == Monomial(x=((4, 2),))
    assert m.divides(phi(T))


def test_signature_requires_the_corner_above_class():
    with pytest.raises(ValueError):
        signature_monomial(StandardFilling(HookShape(3, 1), (1, 2, 3), (4,)))
    with pytest.raises(ValueError):
        signature_monomial(StandardFilling(HookShape(1, 2), (1,), (2, 3)))
    with pytest.raises(ValueError):
        dual_signature_monomial(StandardFilling(HookShape(2, 2), (3, 4), (1, 2)))
    with pytest.raises(ValueError):
        dual_signature_monomial(StandardFilling(HookShape(3, 0), (1, 2, 3), ()))


def test_signature_reading_including_the_last_entry_coincides():
    # Counting the final row entry among the smaller row entries lowers the
    # power of its variable by one and adds the same variable back as an
    # extra factor, so both readings define the same monomial.
    for s in hooks(6):
        if s.arm < 2:
            continue
        for S in split_fillings(s, "mu")[1]:
            leader, r = S.row[0], S.row[-1]
            ts = [e for e in S.row[1:] if e < leader]
            j = sum(1 for e in ts if e > r)
            y = {r: s.arm - len(ts) - 1 + j}
            for t in ts:
                y[t] = y.get(t, 0) + 1
            assert Monomial((), y.items()) == signature_monomial(S)


def test_signature_divides_own_phi_and_excludes_the_partner_shape():
    for mu in hooks(5):
        if mu.arm < 2:
            continue
        rho = HookShape(mu.arm - 1, mu.leg + 1)
        rho_phis = [phi(T) for T in enumerate_fillings(rho)]
        for S in split_fillings(mu, "mu")[1]:
            m = signature_monomial(S)
            assert m.x == ()
            assert m.divides(phi(S))
            assert not any(m.divides(p) for p in rho_phis)


def test_dual_signature_divides_own_phi_and_excludes_the_partner_shape():
    for rho in hooks(5):
        if rho.leg < 1 or rho.arm < 1:
            continue
        mu = HookShape(rho.arm + 1, rho.leg - 1)
        mu_phis = [phi(S) for S in enumerate_fillings(mu)]
        for T in split_fillings(rho, "rho")[1]:
            m = dual_signature_monomial(T)
            assert m.y == ()
            assert m.divides(phi(T))
            assert not any(m.divides(p) for p in mu_phis)


# ---------------------------------------------------------- complementation


def test_complement_is_an_involution():
    assert complement(ROW_EXAMPLE) == StandardFilling(
        HookShape(5, 4), (5, 4, 7, 8, 2), (3, 1, 9, 6))
    for s in hooks(6):
        for S in enumerate_fillings(s):
            assert complement(complement(S)) == S


def test_complement_flips_the_inversion_counts():
    for s in hooks(6):
        col_top = b_stat(s)
        row_top = b_stat(conjugate(s))
        for S in enumerate_fillings(s):
            C = complement(S)
            assert len(inversions(S).col_pairs) + \
                len(inversions(C).col_pairs) == col_top
            assert len(inversions(S).row_pairs) + \
                len(inversions(C).row_pairs) == row_top
