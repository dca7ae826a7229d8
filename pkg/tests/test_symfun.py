import itertools
from fractions import Fraction
from math import factorial

import pytest

from parkhopf.combinat import compositions
from parkhopf.exact import Poly, RatFun, assert_polynomial
from parkhopf.symfun import (R_to_S, S_to_R, SymElem, VirtualAlphabet,
                             as2_axioms_check, binomial_poly,
                             cycle_enumerator, evaluate, ribbon_product,
                             rising_factorial, s_product)


def _coarsenings(j):
    out = set()
    r = len(j)
    for cuts in itertools.product((0, 1), repeat=max(r - 1, 0)):
        blocks, current = [], j[0] if j else 0
        for part, cut in zip(j[1:], cuts):
            if cut:
                blocks.append(current)
                current = part
            else:
                current += part
        if j:
            blocks.append(current)
        out.add(tuple(blocks))
    return out


def test_s_product():
    assert s_product(SymElem.s((2,)), SymElem.s((1, 1))) == SymElem.s((2, 1, 1))
    one = SymElem.one("S")
    assert s_product(one, SymElem.s((3,))) == SymElem.s((3,))
    ext = s_product(SymElem.s((1,), extended=True),
                    SymElem.s((0,), extended=True))
    assert ext == SymElem.s((1, 0), extended=True)
    with pytest.raises(ValueError):
        s_product(SymElem.s((1,)), SymElem.r((1,)))


def test_basis_change_against_block_oracle():
    # S^I = sum of R_J over the coarsenings J of I
    for n in range(7):
        for i in compositions(n):
            expected = SymElem.zero("R")
            for j in _coarsenings(i):
                expected = expected + SymElem.r(j)
            assert S_to_R(SymElem.s(i)) == expected


def test_basis_change_small_cases():
    assert S_to_R(SymElem.s((2,))) == SymElem.r((2,))
    assert S_to_R(SymElem.s((1, 1))) == SymElem.r((1, 1)) + SymElem.r((2,))
    assert R_to_S(SymElem.r((1, 1))) == SymElem.s((1, 1)) - SymElem.s((2,))


def test_basis_changes_mutually_inverse():
    for n in range(9):
        for i in compositions(n):
            assert R_to_S(S_to_R(SymElem.s(i))) == SymElem.s(i)
            assert S_to_R(R_to_S(SymElem.r(i))) == SymElem.r(i)


def test_ribbon_product_rule():
    assert ribbon_product(SymElem.r((1,)), SymElem.r((1,))) == \
        SymElem.r((1, 1)) + SymElem.r((2,))
    with pytest.raises(ValueError):
        ribbon_product(SymElem.s((1,)), SymElem.s((1,)))


def test_ribbon_product_transports_s_product():
    for n1 in range(1, 7):
        for n2 in range(1, 8 - n1):
            for i in compositions(n1):
                for j in compositions(n2):
                    lhs = S_to_R(s_product(SymElem.s(i), SymElem.s(j)))
                    rhs = ribbon_product(S_to_R(SymElem.s(i)),
                                         S_to_R(SymElem.s(j)))
                    assert lhs == rhs


def test_ribbon_associativity():
    for i, j, k in [((1,), (2,), (1, 1)), ((2, 1), (1,), (3,)),
                    ((1, 1), (1, 1), (1,)), ((3,), (2,), (2, 2))]:
        a, b, c = SymElem.r(i), SymElem.r(j), SymElem.r(k)
        assert ribbon_product(ribbon_product(a, b), c) == \
            ribbon_product(a, ribbon_product(b, c))


def test_as2_axioms():
    assert as2_axioms_check(0)
    for n in range(3, 7):
        assert as2_axioms_check(n)


def test_mixed_as2_example():
    from parkhopf.combinat import comp_concat, comp_near_concat
    assert comp_near_concat(comp_concat((1,), (1,)), (1,)) == (1, 2)
    assert comp_concat((1,), comp_near_concat((1,), (1,))) == (1, 2)


def test_binomial_alphabet():
    A = VirtualAlphabet("binomial")
    for n in range(1, 6):
        assert assert_polynomial(A.h(n)) == binomial_poly(n - 1, n)
        assert assert_polynomial(A.e(n)) == binomial_poly(0, n)
    assert A.p(3) == RatFun(Poly.var("a"))


def test_two_parameter_alphabet():
    A = VirtualAlphabet("one_minus_x_over_one_minus_q")
    x, q = Poly.var("x"), Poly.var("q")
    assert A.h(1) == RatFun(1 - x, 1 - q)
    # h_n multiplied by (q)_n is the q-binomial-type product (1-x)(1-xq)...
    qfact = (1 - q) * (1 - q ** 2)
    assert A.h(2) * RatFun(qfact) == RatFun((1 - x) * (1 - x * q))


def test_rank_one_alphabet():
    A = VirtualAlphabet("m_times_one_minus_x", m=3)
    x = Poly.var("x")
    assert A.p(2) == RatFun((1 - x ** 2).scale(3))
    with pytest.raises(ValueError):
        VirtualAlphabet("m_times_one_minus_x")


def test_evaluate_is_algebra_morphism():
    A = VirtualAlphabet("one_minus_x_over_one_minus_q")
    pairs = [((2,), (1, 1)), ((1, 2), (2,)), ((3,), (1, 1, 1)), ((1,), (2, 2))]
    for i, j in pairs:
        lhs = evaluate(s_product(SymElem.s(i), SymElem.s(j)), A)
        rhs = evaluate(SymElem.s(i), A) * evaluate(SymElem.s(j), A)
        assert lhs == rhs


def test_evaluate_rejects_extended_and_ribbon():
    A = VirtualAlphabet("binomial")
    with pytest.raises(ValueError):
        evaluate(SymElem.s((1, 0), extended=True), A)
    with pytest.raises(ValueError):
        evaluate(SymElem.r((1,)), A)


def test_basis_change_rejects_extended():
    with pytest.raises(ValueError):
        S_to_R(SymElem.s((1, 0), extended=True))


def _cycle_count(sigma):
    seen = [False] * len(sigma)
    k = 0
    for i in range(len(sigma)):
        if not seen[i]:
            k += 1
            j = i
            while not seen[j]:
                seen[j] = True
                j = sigma[j] - 1
    return k


def test_cycle_enumerator_against_brute_force():
    alpha = Poly.var("a")
    for parts in [(2,), (3,), (1, 1), (2, 1), (2, 2), (3, 1)]:
        # brute force over the Young subgroup
        pools = [list(itertools.permutations(range(1, p + 1))) for p in parts]
        total = Poly()
        for pieces in itertools.product(*pools):
            cycles = sum(_cycle_count(s) for s in pieces)
            total = total + alpha ** cycles
        assert cycle_enumerator(parts) == total
    assert cycle_enumerator((2,)) == alpha ** 2 + alpha
    assert cycle_enumerator((1, 1)) == alpha ** 2
    assert cycle_enumerator((3,)) == alpha ** 3 + 3 * alpha ** 2 + 2 * alpha


def test_cycle_enumerator_vs_binomial_character():
    # Z_I(a) / prod(i_k!) = prod h_(i_k)(binomial)
    A = VirtualAlphabet("binomial")
    for n in range(1, 7):
        for i in compositions(n):
            h_prod = RatFun(1)
            denom = 1
            for part in i:
                h_prod = h_prod * A.h(part)
                denom *= factorial(part)
            lhs = cycle_enumerator(i).scale(Fraction(1, denom))
            assert RatFun(lhs) == h_prod


def test_rising_factorial():
    alpha = Poly.var("a")
    assert rising_factorial(alpha, 0) == Poly.const(1)
    assert rising_factorial(alpha, 3) == alpha * (alpha + 1) * (alpha + 2)
