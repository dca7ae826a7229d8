"""Evaluation-tree rewriting for the two-operation and three-operation
duplicial structures: normal forms, dimension counts, and the dictionary
between normal forms and the Catalan / Schroeder algebra bases.

An evaluation tree is either the leaf (the generator), encoded as None, or a
node (op, left, right) with op one of "<", ">", "o".  Two-operation mode
("dup") restricts the ops to {"<", ">"}; three-operation mode is "tri".

Every relation rewrites a left comb into a right comb:

    node(r, node(l, A, B), C)  ->  node(l, A, node(r, B, C))

In tri mode the seven oriented rules are the pairs (r, l) other than
("o", "<") and (">", "<"); in dup mode the three rules are the pairs other
than (">", "<").  Rewriting always terminates: the sum over nodes of
left-subtree sizes strictly decreases.
"""

from __future__ import annotations

import itertools

from .combinat import QuasiRibbon, binary_trees
from .exact import LinComb
from .hopf import qr_mid, qr_prec, qr_succ
from .combinat import shifted_concat_len, shifted_concat_max

DUP_OPS = ("<", ">")
TRI_OPS = ("<", ">", "o")

LEAF = None


def _ops(mode: str):
    if mode == "dup":
        return DUP_OPS
    if mode == "tri":
        return TRI_OPS
    raise ValueError(f"unknown mode {mode!r} (use 'dup' or 'tri')")


def _rule_applies(root_op: str, left_op: str) -> bool:
    # the surviving (root, left-child) pairs are exactly ("o","<") and (">","<")
    return not (left_op == "<" and root_op in (">", "o"))


def tree_leaves(t) -> int:
    return 1 if t is LEAF else tree_leaves(t[1]) + tree_leaves(t[2])


def eval_tree_to_text(t) -> str:
    if t is LEAF:
        return "x"
    return f"({eval_tree_to_text(t[1])} {t[0]} {eval_tree_to_text(t[2])})"


def eval_tree_parse(text: str):
    tokens = text.replace("(", " ( ").replace(")", " ) ").split()
    pos = 0

    def rec():
        nonlocal pos
        tok = tokens[pos]
        pos += 1
        if tok == "x":
            return LEAF
        if tok != "(":
            raise ValueError(f"bad token {tok!r} in {text!r}")
        left = rec()
        op = tokens[pos]
        pos += 1
        if op not in TRI_OPS:
            raise ValueError(f"bad operation {op!r} in {text!r}")
        right = rec()
        if tokens[pos] != ")":
            raise ValueError(f"missing ')' in {text!r}")
        pos += 1
        return (op, left, right)

    out = rec()
    if pos != len(tokens):
        raise ValueError(f"trailing tokens in {text!r}")
    return out


def all_eval_trees(mode: str, n: int):
    """All op-labeled trees with n leaves, shapes ordered as binary_trees."""
    ops = _ops(mode)

    def label(shape):
        if shape is None:
            yield LEAF
            return
        left_shape, right_shape = shape
        for op in ops:
            for left in label(left_shape):
                for right in label(right_shape):
                    yield (op, left, right)

    for shape in binary_trees(n - 1):
        yield from label(shape)


def rewrite_step(t, mode: str):
    """One leftmost-outermost rewrite, or None if t is a normal form."""
    if t is LEAF:
        return None
    op, left, right = t
    if left is not LEAF and _rule_applies(op, left[0]):
        lop, a, b = left
        return (lop, a, (op, b, right))
    new_left = rewrite_step(left, mode)
    if new_left is not None:
        return (op, new_left, right)
    new_right = rewrite_step(right, mode)
    if new_right is not None:
        return (op, left, new_right)
    return None


def rewrite_normal_form(t, mode: str):
    """Iterate oriented rules to a fixed point (leftmost-outermost strategy)."""
    while True:
        nxt = rewrite_step(t, mode)
        if nxt is None:
            return t
        t = nxt


def is_normal(t, mode: str) -> bool:
    if t is LEAF:
        return True
    op, left, right = t
    if left is not LEAF and _rule_applies(op, left[0]):
        return False
    return is_normal(left, mode) and is_normal(right, mode)


def count_normal_forms(mode: str, n: int) -> int:
    limit = 8 if mode == "tri" else 10
    if n > limit:
        raise ValueError(f"count_normal_forms({mode}) supports n <= {limit}")
    return sum(1 for t in all_eval_trees(mode, n) if is_normal(t, mode))


def _matches_characterization(t, mode: str) -> bool:
    """Structural description of the fixed points, as in the counting proof:
    a leaf; or any operation at the root with a leaf as left child; or a root
    "o"/">" whose left child is a "<"-node with leaf left child - recursively.
    """
    if t is LEAF:
        return True
    op, left, right = t
    if left is LEAF:
        return _matches_characterization(right, mode)
    if op in (">", "o") and left[0] == "<" and left[1] is LEAF:
        return (_matches_characterization(left[2], mode)
                and _matches_characterization(right, mode))
    return False


def normal_form_shape_check(mode: str, n: int) -> bool:
    return all(is_normal(t, mode) == _matches_characterization(t, mode)
               for t in all_eval_trees(mode, n))


def eval_tree(t, mode: str):
    """Evaluate with the generator at the leaves; always a single basis key.

    In tri mode the leaf is the one-letter quasi-ribbon and the nodes apply
    the three quasi-ribbon operations; in dup mode the leaf is the word (1)
    and the nodes apply the two shifted concatenations.
    """
    if mode == "tri":
        if t is LEAF:
            return QuasiRibbon((1,))
        op, left, right = t
        f = {"<": qr_prec, ">": qr_succ, "o": qr_mid}[op]
        return f(eval_tree(left, mode), eval_tree(right, mode))
    if mode == "dup":
        if t is LEAF:
            return (1,)
        op, left, right = t
        f = {"<": shifted_concat_max, ">": shifted_concat_len}[op]
        return f(eval_tree(left, mode), eval_tree(right, mode))
    raise ValueError(f"unknown mode {mode!r}")


def rewrite_all_steps(t, mode: str):
    """Every tree reachable by one rewrite anywhere (for confluence testing)."""
    out = []
    if t is LEAF:
        return out
    op, left, right = t
    if left is not LEAF and _rule_applies(op, left[0]):
        lop, a, b = left
        out.append((lop, a, (op, b, right)))
    for nl in rewrite_all_steps(left, mode):
        out.append((op, nl, right))
    for nr in rewrite_all_steps(right, mode):
        out.append((op, left, nr))
    return out


def reachable_normal_forms(t, mode: str, memo=None) -> frozenset:
    if memo is None:
        memo = {}
    if t in memo:
        return memo[t]
    steps = rewrite_all_steps(t, mode)
    if not steps:
        result = frozenset((t,))
    else:
        acc = set()
        for s in steps:
            acc |= reachable_normal_forms(s, mode, memo)
        result = frozenset(acc)
    memo[t] = result
    return result


def confluence_check(mode: str, n: int) -> bool:
    """Empirical confluence: every size-n tree reaches a unique normal form."""
    memo: dict = {}
    return all(len(reachable_normal_forms(t, mode, memo)) == 1
               for t in all_eval_trees(mode, n))


def eval_tree_wqsym(t) -> LinComb:
    """Evaluate a three-operation tree in the packed-word algebra with the
    one-letter generator at the leaves and the tridendriform thirds inside."""
    from .hopf import wqsym_left, wqsym_mid, wqsym_right
    if t is LEAF:
        return LinComb.term((1,))
    op, left, right = t
    f = {"<": wqsym_left, ">": wqsym_right, "o": wqsym_mid}[op]
    return f(eval_tree_wqsym(left), eval_tree_wqsym(right))


def tridendriform_span_dimension(n: int) -> int:
    """Dimension of the span of all degree-n products of the one-letter
    generator under the three tridendriform operations of the packed-word
    algebra."""
    from .exact import span_dimension
    if n > 5:
        raise ValueError("tridendriform_span_dimension supports n <= 5")
    return span_dimension(eval_tree_wqsym(t) for t in all_eval_trees("tri", n))


# -- dual-operad dimension statements ------------------------------------------


def dup_dual_hooks(n: int):
    """Hook words x > ... > x < ... < x with n leaves (n of them)."""
    return [(">",) * k + ("<",) * (n - 1 - k) for k in range(n)]


def tridup_dual_hooks(n: int):
    """Mixed hooks x *...* x < ... < x with * in {>, o}: 2^n - 1 of them."""
    out = []
    for k in range(n):
        for head in itertools.product((">", "o"), repeat=k):
            out.append(tuple(head) + ("<",) * (n - 1 - k))
    return out


def dual_dimension(mode: str, n: int) -> int:
    hooks = dup_dual_hooks(n) if mode == "dup" else tridup_dual_hooks(n)
    return len(set(hooks))
