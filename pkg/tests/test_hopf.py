from fractions import Fraction

import pytest

from parkhopf.combinat import (NotInSubalgebraError, QuasiRibbon, ndpfs,
                               parking_functions, permutations, quasi_ribbons)
from parkhopf.exact import LinComb
from parkhopf import hopf
from parkhopf.symfun import SymElem


def P(w):
    return LinComb.term(tuple(w))


F = G = M = P


def QR(text):
    return LinComb.term(QuasiRibbon.parse(text))


# -- parking-word products -----------------------------------------------------


def test_pqsym_product():
    assert hopf.pqsym_product(F((1,)), F((1,))) == F((1, 2)) + F((2, 1))
    assert hopf.pqsym_product(F((1, 1)), hopf.unit()) == F((1, 1))
    # grouping by sorted word reproduces the multiplicative basis product
    prod = hopf.pqsym_product(hopf.cqsym_expand_F(P((1, 2))),
                              hopf.cqsym_expand_F(P((1, 1, 3))))
    assert hopf.pqsym_project_P(prod) == P((1, 2, 3, 3, 5))


def test_pqsym_dup_prec_normalization():
    assert hopf.pqsym_dup_prec(F((1,)), F((1,))) == F((1, 1))
    # restriction to the multiplicative basis reproduces the concatenation rule
    for a in [(1,), (1, 1), (1, 2)]:
        for b in [(1,), (1, 1)]:
            lhs = hopf.pqsym_dup_prec(hopf.cqsym_expand_F(P(a)),
                                      hopf.cqsym_expand_F(P(b)))
            rhs = hopf.cqsym_expand_F(hopf.cqsym_prec(P(a), P(b)))
            assert lhs == rhs
    with pytest.raises(ValueError):
        hopf.pqsym_dup_prec(hopf.unit(), F((1,)))


def test_pqsym_duplicial_axioms():
    assert hopf.duplicial_axioms_pqsym(5)


# -- the multiplicative basis and its coproduct ----------------------------------


def test_cqsym_products():
    assert hopf.cqsym_prec(P((1, 2)), P((1, 1, 3))) == P((1, 2, 2, 2, 4))
    assert hopf.cqsym_succ(P((1, 2)), P((1, 1, 3))) == P((1, 2, 3, 3, 5))
    x = P((1,))
    lhs = hopf.cqsym_succ(hopf.cqsym_prec(x, x), x)
    rhs = hopf.cqsym_prec(x, hopf.cqsym_succ(x, x))
    assert lhs == P((1, 1, 3)) and rhs == P((1, 1, 2)) and lhs != rhs
    with pytest.raises(ValueError):
        hopf.cqsym_prec(hopf.unit(), x)


def test_cqsym_duplicial_axioms_and_counterexample():
    assert hopf.duplicial_axioms_cqsym(6)
    assert hopf.cross_relation_fails_cqsym()


def test_expand_and_project():
    assert hopf.cqsym_expand_F(P((1, 1))) == F((1, 1))
    assert hopf.cqsym_expand_F(P((1, 2))) == F((1, 2)) + F((2, 1))
    with pytest.raises(NotInSubalgebraError):
        hopf.pqsym_project_P(F((1, 2)))  # incomplete reordering class


def test_dup_coproduct():
    assert not hopf.dup_coproduct(P((1,)))
    x = P((1,))
    assert not hopf.dup_coproduct(hopf.dup_bracket(x, x))
    delta = hopf.dup_coproduct(P((1, 1, 3)))
    assert delta == LinComb.term(((1,), (1, 2))) + LinComb.term(((1, 1), (1,)))
    # both degree-2 basis coproducts collapse to the same pure tensor,
    # which is what makes the degree-2 kernel one-dimensional
    pure = LinComb.term(((1,), (1,)))
    assert hopf.dup_coproduct(P((1, 1))) == pure
    assert hopf.dup_coproduct(P((1, 2))) == pure


def test_dup_bracket_values():
    x = P((1,))
    b = hopf.dup_bracket
    assert b(x, x) == P((1, 1)) - P((1, 2))
    assert b(b(x, x), x) == \
        P((1, 1, 1)) - P((1, 2, 2)) - P((1, 1, 3)) + P((1, 2, 3))
    assert b(x, b(x, x)) == \
        P((1, 1, 1)) - P((1, 2, 2)) - P((1, 1, 2)) + P((1, 2, 3))
    for elem in (b(b(x, x), x), b(x, b(x, x))):
        assert not hopf.dup_coproduct(elem)


def test_primitive_dimension():
    assert [hopf.primitive_dimension(n) for n in range(1, 7)] == \
        [1, 1, 2, 5, 14, 42]


def test_bialgebra_axiom_and_coassociativity():
    assert hopf.bialgebra_axiom_check(5)
    assert hopf.coassociativity_check(5)


# -- quasi-ribbon algebra ----------------------------------------------------------


def test_sqsym_expand():
    assert hopf.sqsym_expand_F(QR("11|3")) == F((1, 3, 1)) + F((3, 1, 1))
    assert hopf.sqsym_expand_F(QR("113")) == F((1, 1, 3))


def test_sqsym_product():
    prod = hopf.sqsym_product(QR("1"), QR("1"))
    assert prod == QR("12") + QR("1|2")


def test_sqsym_closure_exhaustive():
    for n1 in range(1, 5):
        for n2 in range(1, 6 - n1):
            for q1 in quasi_ribbons(n1):
                for q2 in quasi_ribbons(n2):
                    hopf.sqsym_product(LinComb.term(q1), LinComb.term(q2))


def test_tridup_operations():
    one = QuasiRibbon((1,))
    assert str(hopf.qr_mid(one, one)) == "1|2"
    assert str(hopf.qr_prec(one, one)) == "11"
    assert str(hopf.qr_succ(one, one)) == "12"
    with pytest.raises(ValueError):
        hopf.qr_prec(QuasiRibbon(()), one)


def test_tridup_generates_all_quasi_ribbons():
    span = {QuasiRibbon((1,))}
    for _ in range(2):
        new = set(span)
        for a in span:
            for b in span:
                new |= {hopf.qr_succ(a, b), hopf.qr_prec(a, b),
                        hopf.qr_mid(a, b)}
        span = new
    generated3 = {q for q in span if len(q) == 3}
    assert generated3 == set(quasi_ribbons(3))


def test_triduplicial_axioms():
    assert hopf.triduplicial_axioms(6)


# -- permutation algebra --------------------------------------------------------------


def test_fqsym_product_and_halves():
    assert hopf.fqsym_product(G((1,)), G((1,))) == G((1, 2)) + G((2, 1))
    assert hopf.fqsym_left(G((1,)), G((1,))) == G((2, 1))
    assert hopf.fqsym_right(G((1,)), G((1,))) == G((1, 2))
    for a in permutations(2):
        for b in permutations(2):
            ga, gb = G(a), G(b)
            assert hopf.fqsym_product(ga, gb) == \
                hopf.fqsym_left(ga, gb) + hopf.fqsym_right(ga, gb)


def test_fqsym_dendriform_axioms():
    assert hopf.dendriform_axioms_fqsym(6)


def test_fqsym_duality():
    assert hopf.fqsym_F((2, 3, 1)) == G((3, 1, 2))
    assert hopf.fqsym_scalar(G((1, 2)), G((1, 2))) == 1
    assert hopf.fqsym_scalar(G((2, 1, 3)), G((1, 3, 2))) == 0
    assert hopf.fqsym_scalar(G((2, 1, 3)), G((2, 1, 3))) == 1


# -- packed-word algebra -----------------------------------------------------------------


def test_wqsym_product_and_thirds():
    assert hopf.wqsym_product(M((1,)), M((1,))) == \
        M((1, 1)) + M((1, 2)) + M((2, 1))
    assert hopf.wqsym_mid(M((1,)), M((1,))) == M((1, 1))
    left, mid, right = hopf.wqsym_thirds(M((1,)), M((1,)))
    assert left + mid + right == hopf.wqsym_product(M((1,)), M((1,)))


def test_wqsym_tridendriform_axioms():
    assert hopf.tridendriform_axioms_wqsym(5)


def test_embed_fqsym_wqsym():
    assert hopf.embed_fqsym_wqsym(G((1,))) == M((1,))
    assert hopf.embed_fqsym_wqsym(G((1, 2))) == M((1, 2)) + M((1, 1))
    # algebra morphism, including a few random degree-6 pairs
    import random
    rng = random.Random(7)
    pairs = [((1,), (1,)), ((1, 2), (2, 1)), ((2, 1), (2, 1)),
             ((1, 2), (1,)), ((2, 1, 3), (2, 1, 3)), ((1, 3, 2), (3, 1, 2))]
    pairs += [(rng.choice(permutations(2)), rng.choice(permutations(4)))
              for _ in range(2)]
    for a, b in pairs:
        lhs = hopf.embed_fqsym_wqsym(hopf.fqsym_product(G(a), G(b)))
        rhs = hopf.wqsym_product(hopf.embed_fqsym_wqsym(G(a)),
                                 hopf.embed_fqsym_wqsym(G(b)))
        assert lhs == rhs


# -- morphisms ------------------------------------------------------------------------------


def _random_parking_pairs(rng, total, count):
    out = []
    for _ in range(count):
        n1 = rng.randrange(1, total)
        n2 = total - n1
        out.append((rng.choice(parking_functions(n1)),
                    rng.choice(parking_functions(n2))))
    return out


def test_morphism_istar():
    assert hopf.morphism_istar(F((1, 3, 1))) == F((1, 3, 2))
    # algebra morphism on random pairs up to total degree 6
    import random
    rng = random.Random(20240817)
    pairs = [((1, 1), (1, 2, 1)), ((1,), (2, 1, 1)), ((1, 2), (1, 1)),
             ((3, 1, 1), (1, 2))]
    pairs += _random_parking_pairs(rng, 6, 8)
    for a, b in pairs:
        lhs = hopf.morphism_istar(hopf.pqsym_product(F(a), F(b)))
        rhs = hopf.fqsym_product_F(hopf.morphism_istar(F(a)),
                                   hopf.morphism_istar(F(b)))
        assert lhs == rhs


def test_istar_on_subalgebras():
    assert hopf.istar_on_cqsym(P((1, 1, 3))) == SymElem.s((2, 1))
    assert hopf.istar_on_sqsym(QR("11|3")) == SymElem.r((2, 1))
    # multiplicativity of the quasi-ribbon restriction, small degrees
    for q1 in quasi_ribbons(2):
        for q2 in quasi_ribbons(2):
            prod = hopf.sqsym_product(LinComb.term(q1), LinComb.term(q2))
            lhs = hopf.istar_on_sqsym(prod)
            rhs = hopf.istar_on_sqsym(LinComb.term(q1)) * \
                hopf.istar_on_sqsym(LinComb.term(q2))
            assert lhs == rhs
    # multiplicativity on the nondecreasing basis
    for a in ndpfs(2):
        for b in ndpfs(3):
            lhs = hopf.istar_on_cqsym(hopf.cqsym_succ(P(a), P(b)))
            rhs = hopf.istar_on_cqsym(P(a)) * hopf.istar_on_cqsym(P(b))
            assert lhs == rhs


def test_morphism_psi():
    assert hopf.morphism_psi(F((1, 1))) == \
        SymElem.s((2,), Fraction(1, 2))
    assert hopf.morphism_psi(hopf.unit()) == SymElem.one("S")
    lhs = hopf.morphism_psi(hopf.pqsym_product(F((1,)), F((1,))))
    rhs = hopf.morphism_psi(F((1,))) * hopf.morphism_psi(F((1,)))
    assert lhs == rhs == SymElem.s((1, 1))
    # multiplicative on pairs of total degree <= 5, plus random degree 6
    import random
    for n1 in range(1, 4):
        for n2 in range(1, 6 - n1):
            for a in parking_functions(n1)[:6]:
                for b in parking_functions(n2)[:6]:
                    lhs = hopf.morphism_psi(hopf.pqsym_product(F(a), F(b)))
                    rhs = hopf.morphism_psi(F(a)) * hopf.morphism_psi(F(b))
                    assert lhs == rhs
    rng = random.Random(99)
    for a, b in _random_parking_pairs(rng, 6, 6):
        lhs = hopf.morphism_psi(hopf.pqsym_product(F(a), F(b)))
        assert lhs == hopf.morphism_psi(F(a)) * hopf.morphism_psi(F(b))


def test_serialization():
    elem = P((1, 2)) + P((1, 1)).scale(2)
    data = hopf.element_to_json(elem, "P")
    assert data == {"basis": "P",
                    "terms": [{"key": "11", "coeff": "2"},
                              {"key": "12", "coeff": "1"}]}
