"""Noncommutative Lagrange inversion: the graded series g, f, G, X; the
bilinear map B; the bijection between binary trees and nondecreasing parking
functions; Tamari intervals; and the mirror involution.
"""

from __future__ import annotations

from functools import lru_cache

from .combinat import (binary_trees, canopy, comp_conjugate, is_ndpf, ndpfs,
                       packed_evaluation, tree_mirror, shifted_concat_len,
                       shifted_concat_max)
from .exact import LinComb
from .hopf import (cqsym_prec, cqsym_succ, fqsym_left, fqsym_right,
                   istar_on_cqsym, unit)
from .symfun import SymElem


def _weak_compositions(total: int, parts: int):
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(total + 1):
        for rest in _weak_compositions(total - first, parts - 1):
            yield (first,) + rest


# -- the series g and f in the S bases ----------------------------------------


def solve_g(order: int) -> list[SymElem]:
    """Degreewise solution of g = sum_k S_k g^k (with S_0 = 1), g_0 = 1."""
    if order > 8:
        raise ValueError("solve_g supports order <= 8")
    g = [SymElem.one("S")]
    for n in range(1, order + 1):
        comp = SymElem.zero("S")
        for k in range(1, n + 1):
            for ms in _weak_compositions(n - k, k):
                term = SymElem.s((k,))
                for m in ms:
                    term = term * g[m]
                comp = comp + term
        g.append(comp)
    return g


def residual_g(g: list[SymElem]) -> bool:
    """True iff g - sum_k S_k g^k vanishes through the truncation order."""
    for n in range(len(g)):
        rhs = SymElem.one("S") if n == 0 else SymElem.zero("S")
        for k in range(1, n + 1):
            for ms in _weak_compositions(n - k, k):
                term = SymElem.s((k,))
                for m in ms:
                    term = term * g[m]
                rhs = rhs + term
        if rhs != g[n]:
            return False
    return True


def solve_f(order: int) -> list[SymElem]:
    """Degreewise solution of f = S_0 + S_1 f + S_2 f^2 + ... in the algebra
    extended by the degree-zero indeterminate S_0."""
    if order > 8:
        raise ValueError("solve_f supports order <= 8")
    f = [SymElem.s((0,), extended=True)]
    for n in range(1, order + 1):
        comp = SymElem.zero("S", extended=True)
        for k in range(1, n + 1):
            for ms in _weak_compositions(n - k, k):
                term = SymElem.s((k,), extended=True)
                for m in ms:
                    term = term * f[m]
                comp = comp + term
        f.append(comp)
    return f


def residual_f(f: list[SymElem]) -> bool:
    for n in range(len(f)):
        rhs = SymElem.s((0,), extended=True) if n == 0 \
            else SymElem.zero("S", extended=True)
        for k in range(1, n + 1):
            for ms in _weak_compositions(n - k, k):
                term = SymElem.s((k,), extended=True)
                for m in ms:
                    term = term * f[m]
                rhs = rhs + term
        if rhs != f[n]:
            return False
    return True


def f_closed_form(n: int) -> SymElem:
    """f_n = sum over nondecreasing parking functions pi of S^(ev(pi).0),
    the evaluation taken over the letters 1..n."""
    out = SymElem.zero("S", extended=True)
    for pi in ndpfs(n):
        counts = [0] * n
        for v in pi:
            counts[v - 1] += 1
        out = out + SymElem.s(tuple(counts) + (0,), extended=True)
    return out


def f_unit_specialization(fn: SymElem) -> SymElem:
    """Set the degree-zero generator to 1: drop zero parts from every key."""
    out = SymElem.zero("S")
    for key, c in fn.terms:
        out = out + SymElem.s(tuple(p for p in key if p), c)
    return out


# -- the bilinear map B and the quadratic equations ----------------------------


def bilinear_B(f: LinComb, g: LinComb, algebra: str = "cqsym") -> LinComb:
    """B(F, G) = F > x < G with x the one-letter generator.

    Unit conventions (forced by B(1,1) = x): B(1,1) = x, B(F,1) = F > x,
    B(1,G) = x < G.  The partial operations only act on the augmentation
    ideal, so the unit coefficient is split off first.
    """
    if algebra == "cqsym":
        succ, prec = cqsym_succ, cqsym_prec
    elif algebra == "fqsym":
        succ, prec = fqsym_right, fqsym_left
    else:
        raise ValueError(f"unknown algebra {algebra!r}")
    x = LinComb.term((1,))
    cf = f.coeff(())
    cg = g.coeff(())
    fplus = f - LinComb.term((), cf)
    gplus = g - LinComb.term((), cg)
    out = x.scale(cf * cg)
    if fplus:
        out = out + succ(fplus, x).scale(cg)
    if gplus:
        out = out + prec(x, gplus).scale(cf)
    if fplus and gplus:
        out = out + prec(succ(fplus, x), gplus)
    return out


def solve_series_B(order: int, algebra: str) -> list[LinComb]:
    """Degreewise solution of Y = 1 + B(Y, Y)."""
    y = [unit()]
    for n in range(1, order + 1):
        comp = LinComb()
        for i in range(n):
            comp = comp + bilinear_B(y[i], y[n - 1 - i], algebra)
        y.append(comp)
    return y


def solve_G_cqsym(order: int) -> list[LinComb]:
    if order > 8:
        raise ValueError("solve_G_cqsym supports order <= 8")
    return solve_series_B(order, "cqsym")


def solve_X_fqsym(order: int) -> list[LinComb]:
    if order > 6:
        raise ValueError("solve_X_fqsym supports order <= 6")
    return solve_series_B(order, "fqsym")


def tree_term(t, algebra: str = "cqsym") -> LinComb:
    """B_T(1): evaluate the binary tree T with 1 at the leaves and B inside."""
    if t is None:
        return unit()
    return bilinear_B(tree_term(t[0], algebra), tree_term(t[1], algebra),
                      algebra)


# -- the tree <-> nondecreasing parking function bijection ---------------------


def tree_to_ndpf(t) -> tuple:
    """Label the root by (size of left subtree) + 1 and read the tree in order,
    right-subtree labels shifted by that size."""
    if t is None:
        return ()
    left, right = t
    lw = tree_to_ndpf(left)
    m = len(lw) + 1
    return lw + (m,) + tuple(v + m - 1 for v in tree_to_ndpf(right))


def ndpf_to_tree(pi):
    """Inverse bijection via the unique decomposition pi = alpha > 1 < beta."""
    pi = tuple(pi)
    if not is_ndpf(pi):
        raise ValueError(f"not a nondecreasing parking function: {pi}")
    if not pi:
        return None
    k = max(i for i in range(1, len(pi) + 1) if pi[i - 1] == i)
    alpha = pi[:k - 1]
    beta = tuple(v - (k - 1) for v in pi[k:])
    return (ndpf_to_tree(alpha), ndpf_to_tree(beta))


# -- the Tamari order -----------------------------------------------------------


def _down_rotations(t):
    """All results of one rotation (A ^ B) ^ C -> A ^ (B ^ C) anywhere in t."""
    out = []
    if t is None:
        return out
    left, right = t
    if left is not None:
        a, b = left
        out.append((a, (b, right)))
    for nl in _down_rotations(left):
        out.append((nl, right))
    for nr in _down_rotations(right):
        out.append((t[0], nr))
    return out


@lru_cache(maxsize=None)
def tamari_poset(n: int):
    """(trees, index, descendant bitmasks, cover edge list) for size n.

    The orientation makes the right comb (the word 1^n) minimal and the left
    comb (the word 12...n) maximal; covers go down by one rotation.
    """
    if n > 7:
        raise ValueError("tamari_poset supports n <= 7")
    trees = binary_trees(n)
    index = {t: i for i, t in enumerate(trees)}
    covers = [[index[s] for s in _down_rotations(t)] for t in trees]
    masks = [0] * len(trees)

    def mask(i):
        if masks[i]:
            return masks[i]
        m = 1 << i
        for j in covers[i]:
            m |= mask(j)
        masks[i] = m
        return m

    for i in range(len(trees)):
        mask(i)
    edges = [(i, j) for i in range(len(trees)) for j in covers[i]]
    return trees, index, masks, edges


def tamari_leq(t1, t2) -> bool:
    """t1 <= t2 in the Tamari order (same size required)."""
    n1 = tree_to_ndpf(t1)
    n2 = tree_to_ndpf(t2)
    if len(n1) != len(n2):
        raise ValueError("tamari_leq compares trees of equal size")
    trees, index, masks, _ = tamari_poset(len(n1))
    return bool(masks[index[t2]] >> index[t1] & 1)


def tamari_hasse_ndpf(n: int):
    """Cover pairs (upper word, lower word) transported through the bijection."""
    trees, _, _, edges = tamari_poset(n)
    return [(tree_to_ndpf(trees[i]), tree_to_ndpf(trees[j])) for i, j in edges]


def tamari_interval_check(i_comp) -> tuple[bool, int]:
    """Is the packed-evaluation class of I an interval, and how large is it?"""
    i_comp = tuple(i_comp)
    n = sum(i_comp)
    if n > 7:
        raise ValueError("tamari_interval_check supports |I| <= 7")
    members = [pi for pi in ndpfs(n) if packed_evaluation(pi) == i_comp]
    if not members:
        return False, 0
    trees, index, masks, _ = tamari_poset(n)
    ids = [index[ndpf_to_tree(pi)] for pi in members]
    bot = [i for i in ids if all(masks[j] >> i & 1 for j in ids)]
    top = [i for i in ids if all(masks[i] >> j & 1 for j in ids)]
    if len(bot) != 1 or len(top) != 1:
        return False, len(members)
    interval = {i for i in range(len(trees))
                if masks[top[0]] >> i & 1 and masks[i] >> bot[0] & 1}
    return interval == set(ids), len(members)


def canopy_evaluation_correspondence(n: int) -> tuple[bool, int]:
    """The canopy partition of trees equals the packed-evaluation partition
    of their words; returns (equal, number of blocks)."""
    by_canopy: dict[str, set] = {}
    by_eval: dict[tuple, set] = {}
    for t in binary_trees(n):
        word = tree_to_ndpf(t)
        by_canopy.setdefault(canopy(t), set()).add(word)
        by_eval.setdefault(packed_evaluation(word), set()).add(word)
    part1 = {frozenset(b) for b in by_canopy.values()}
    part2 = {frozenset(b) for b in by_eval.values()}
    return part1 == part2, len(part1)


# -- the mirror involution -------------------------------------------------------


def iota(pi) -> tuple:
    """Mirror symmetry of binary trees, transported to nondecreasing parking
    functions through the bijection."""
    return tree_to_ndpf(tree_mirror(ndpf_to_tree(pi)))


def q_basis_product_check(n: int) -> bool:
    """Q^pi := P^iota(pi) is multiplicative for the max-shifted concatenation:
    Q^a Q^b = Q^(b o a), on all pairs of total degree <= n.

    The mirror involution reverses factors, exchanging the two shifted
    concatenations as an anti-isomorphism; hence the transposed arguments.
    """
    for n1 in range(1, n):
        for n2 in range(1, n - n1 + 1):
            for a in ndpfs(n1):
                for b in ndpfs(n2):
                    lhs = shifted_concat_len(iota(a), iota(b))
                    rhs = iota(shifted_concat_max(b, a))
                    if lhs != rhs:
                        return False
    return True


def symmetry_of_g(order: int) -> bool:
    """The coefficients of g are invariant under composition conjugation."""
    g = solve_g(order)
    for n in range(1, order + 1):
        for key, c in g[n].terms:
            if g[n].coeff(comp_conjugate(key)) != c:
                return False
    return True


def phi_of_G(order: int) -> bool:
    """Applying P^pi -> S^t(pi) degreewise to G gives g."""
    g = solve_g(order)
    big_g = solve_G_cqsym(order)
    return all(istar_on_cqsym(big_g[n]) == g[n] for n in range(order + 1))
