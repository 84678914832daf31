"""Planar binary trees: construction, decomposition, enumeration, text encoding.

A tree is either the root tree ``e`` (zero internal vertices) or the graft
``l v r`` of two smaller trees.  Trees are interned, so structural equality
coincides with identity and hashing is cheap.  The over and under products
graft one tree onto the leftmost / rightmost branch of the other; ``e`` is a
two-sided unit for both and each product is associative.
"""

from __future__ import annotations

import math
import re
import threading
from typing import Optional


class Tree:
    """Immutable planar binary tree.  Build via :data:`E` and :func:`graft`."""

    __slots__ = ("left", "right", "order", "_key")

    def __init__(self, left: Optional["Tree"], right: Optional["Tree"]):
        self.left = left
        self.right = right
        self.order = 0 if left is None else left.order + right.order + 1
        self._key = None

    @property
    def is_root(self) -> bool:
        return self.left is None

    def sort_key(self):
        """Canonical comparison key.

        Within a fixed order, trees with a larger left subtree come first;
        ties are broken by the left subtrees, then the right ones.  Across
        orders, smaller order comes first and ``e`` is the minimum.
        """
        if self._key is None:
            if self.left is None:
                self._key = (0,)
            else:
                self._key = (
                    self.order,
                    -self.left.order,
                    self.left.sort_key(),
                    self.right.sort_key(),
                )
        return self._key

    def __lt__(self, other: "Tree") -> bool:
        return self.sort_key() < other.sort_key()

    def __le__(self, other: "Tree") -> bool:
        return self.sort_key() <= other.sort_key()

    def __repr__(self) -> str:
        return f"Tree({render(self)})"

    def __str__(self) -> str:
        return render(self)


E = Tree(None, None)

_pool: dict[tuple[int, int], Tree] = {}
_pool_lock = threading.Lock()


def graft(left: Tree, right: Tree) -> Tree:
    """Join two trees under a new root.  order(l v r) = |l| + |r| + 1."""
    key = (id(left), id(right))
    t = _pool.get(key)
    if t is None:
        with _pool_lock:
            t = _pool.get(key)
            if t is None:
                t = Tree(left, right)
                _pool[key] = t
    return t


def un_graft(t: Tree) -> tuple[Tree, Tree]:
    """Split a nonroot tree into its unique pair of grafted subtrees."""
    if t.is_root:
        raise ValueError("the root tree e does not decompose")
    return t.left, t.right


def v_wrap(t: Tree) -> Tree:
    """V(t) = e v t, the generators of the over product."""
    return graft(E, t)


def over(t: Tree, s: Tree) -> Tree:
    """t / s: graft t onto the leftmost branch of s."""
    if s.is_root:
        return t
    return graft(over(t, s.left), s.right)


def under(t: Tree, s: Tree) -> Tree:
    """t \\ s: graft s onto the rightmost branch of t."""
    if t.is_root:
        return s
    return graft(t.left, under(t.right, s))


def decompose_over(t: Tree) -> list[Tree]:
    """Arguments (u_1, ..., u_k) of the unique factorization t = V(u_1)/.../V(u_k)."""
    out: list[Tree] = []
    while not t.is_root:
        out.append(t.right)
        t = t.left
    out.reverse()
    return out


def decompose_under(t: Tree) -> list[Tree]:
    """Arguments (u_1, ..., u_k) of the unique factorization t = (u_1 v e)\\...\\(u_k v e)."""
    out: list[Tree] = []
    while not t.is_root:
        out.append(t.left)
        t = t.right
    return out


def compose_over(us: list[Tree]) -> Tree:
    t = E
    for u in us:
        t = over(t, v_wrap(u))
    return t


def compose_under(us: list[Tree]) -> Tree:
    t = E
    for u in us:
        t = under(t, graft(u, E))
    return t


def catalan(n: int) -> int:
    return math.factorial(2 * n) // (math.factorial(n) * math.factorial(n + 1))


_enum_cache: list[list[Tree]] = [[E]]
_enum_lock = threading.Lock()


def enumerate_trees(n: int) -> list[Tree]:
    """All trees of order n, in canonical order.  Length is the n-th Catalan number."""
    if n < 0:
        raise ValueError("order must be non-negative")
    if n >= len(_enum_cache):
        with _enum_lock:
            while n >= len(_enum_cache):
                m = len(_enum_cache)
                level = [
                    graft(l, r)
                    for k in range(m)
                    for l in _enum_cache[m - 1 - k]
                    for r in _enum_cache[k]
                ]
                level.sort(key=Tree.sort_key)
                _enum_cache.append(level)
    return list(_enum_cache[n])


def all_trees_up_to(n: int) -> list[Tree]:
    out: list[Tree] = []
    for m in range(n + 1):
        out.extend(enumerate_trees(m))
    return out


def tree_index(t: Tree) -> tuple[int, int]:
    """(n, k) such that t is the k-th tree (1-based) of order n in canonical order."""
    level = enumerate_trees(t.order)
    return t.order, level.index(t) + 1


def tree_name(t: Tree) -> str:
    n, k = tree_index(t)
    return f"Y{n}.{k}"


def render(t: Tree) -> str:
    """Canonical text: ``e`` or ``(l v r)`` with single spaces."""
    if t.is_root:
        return "e"
    return f"({render(t.left)} v {render(t.right)})"


_NAME_RE = re.compile(r"Y(\d+)\.(\d+)$")


def parse(text: str) -> Tree:
    """Parse the tree grammar; also accepts canonical names ``Yn.k``."""
    s = text.strip()
    m = _NAME_RE.match(s)
    if m:
        n, k = int(m.group(1)), int(m.group(2))
        level = enumerate_trees(n)
        if not 1 <= k <= len(level):
            raise ValueError(f"no tree named {s}: order {n} has {len(level)} trees")
        return level[k - 1]

    pos = 0

    def skip_ws():
        nonlocal pos
        while pos < len(s) and s[pos].isspace():
            pos += 1

    def expect(ch: str):
        nonlocal pos
        skip_ws()
        if pos >= len(s) or s[pos] != ch:
            raise ValueError(f"expected {ch!r} at position {pos} in {text!r}")
        pos += 1

    def tree() -> Tree:
        nonlocal pos
        skip_ws()
        if pos < len(s) and s[pos] == "e":
            pos += 1
            return E
        expect("(")
        l = tree()
        expect("v")
        r = tree()
        expect(")")
        return graft(l, r)

    t = tree()
    skip_ws()
    if pos != len(s):
        raise ValueError(f"trailing input at position {pos} in {text!r}")
    return t


# Named small trees, in the canonical display order of each level.
Y = graft(E, E)
DEUXUN = graft(Y, E)
DEUXDEUX = graft(E, Y)
TROISUN = graft(DEUXUN, E)
TROISDEUX = graft(DEUXDEUX, E)
TROISTROIS = graft(Y, Y)
TROISQUATRE = graft(E, DEUXUN)
TROISCINQ = graft(E, DEUXDEUX)
