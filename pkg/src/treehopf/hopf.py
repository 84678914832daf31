"""Coproducts, coactions and antipodes on the tree algebras.

The pruning coproducts split a tree along all factorizations for the over /
under product; the free-monoid factorization and the structural recursion are
both implemented and cross-checked in the test suite.  The charge coproduct
and its coaction are computed tree-level (every slot entry stays a single
tree) and then read into the commutative algebra or its noncommutative lift.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable

from .trees import Tree, E, graft, v_wrap, over, decompose_over, decompose_under, compose_over, compose_under
from .algebra import (
    Element,
    Tag,
    TensorElement,
    Word,
    embed_tree,
    from_word,
    lift_linear,
    multiply_words,
    tensor,
    unit,
    zero,
)

TreePairs = dict[tuple[Tree, Tree], int]

# -- tree-level recursions --------------------------------------------------

_charge_cache: dict[Tree, TreePairs] = {}
_charge_small_cache: dict[Tree, TreePairs] = {}


def _pair_over(a: TreePairs, b: TreePairs) -> TreePairs:
    """Slotwise over product of two sums of tree pairs."""
    out: TreePairs = {}
    for (a1, a2), ca in a.items():
        for (b1, b2), cb in b.items():
            key = (over(a1, b1), over(a2, b2))
            out[key] = out.get(key, 0) + ca * cb
    return out


def charge_coproduct_tree(t: Tree) -> TreePairs:
    """Charge coproduct of a single tree, with single-tree slot entries."""
    got = _charge_cache.get(t)
    if got is None:
        if t is E:
            got = {(E, E): 1}
        elif t.left is E:
            got = dict(charge_coaction_tree(t))
            got[(E, t)] = got.get((E, t), 0) + 1
        else:
            got = _pair_over(
                charge_coproduct_tree(t.left),
                charge_coproduct_tree(v_wrap(t.right)),
            )
        _charge_cache[t] = got
    return got


def charge_coaction_tree(t: Tree) -> TreePairs:
    """Coaction partner of the charge coproduct, on a single tree."""
    got = _charge_small_cache.get(t)
    if got is None:
        if t is E:
            got = {(E, E): 1}
        elif t.left is E:
            got = {}
            for (a, b), c in charge_coaction_tree(t.right).items():
                key = (v_wrap(a), b)
                got[key] = got.get(key, 0) + c
        else:
            got = _pair_over(
                charge_coproduct_tree(t.left),
                charge_coaction_tree(v_wrap(t.right)),
            )
        _charge_small_cache[t] = got
    return got


def pruning_pairs_over(t: Tree) -> list[tuple[Tree, Tree]]:
    """All factorizations t = t1 / t2, via the free over-monoid."""
    us = decompose_over(t)
    return [
        (compose_over(us[:j]), compose_over(us[j:])) for j in range(len(us) + 1)
    ]


def pruning_pairs_under(t: Tree) -> list[tuple[Tree, Tree]]:
    """All factorizations t = t1 \\ t2, via the free under-monoid."""
    us = decompose_under(t)
    return [
        (compose_under(us[:j]), compose_under(us[j:])) for j in range(len(us) + 1)
    ]


# -- pruning coproducts -----------------------------------------------------


def _pruning_tensor(tag: Tag, word: Word, pairs_fn) -> TensorElement:
    out = TensorElement((tag, tag), {((), ()): Fraction(1)})
    for t in word:
        piece = TensorElement(
            (tag, tag),
            {
                (
                    () if a is E else (a,),
                    () if b is E else (b,),
                ): Fraction(1)
                for a, b in pairs_fn(t)
            },
        )
        out = out * piece
    return out


def delta_p_gamma(x: Element) -> TensorElement:
    """Pruning coproduct dual to the over product, on the photon algebra."""
    return lift_linear(Tag.HGAMMA, lambda w: _pruning_tensor(Tag.HGAMMA, w, pruning_pairs_over))(x)


def delta_p_e(x: Element) -> TensorElement:
    """Pruning coproduct dual to the under product, on the electron algebra."""
    return lift_linear(Tag.HE, lambda w: _pruning_tensor(Tag.HE, w, pruning_pairs_under))(x)


def _delta_p_gamma_tree_rec(t: Tree) -> TreePairs:
    if t is E:
        return {(E, E): 1}
    out: TreePairs = {(t, E): 1}
    for (a, b), c in _delta_p_gamma_tree_rec(t.left).items():
        key = (a, graft(b, t.right))
        out[key] = out.get(key, 0) + c
    return out


def _delta_p_e_tree_rec(t: Tree) -> TreePairs:
    if t is E:
        return {(E, E): 1}
    out: TreePairs = {(E, t): 1}
    for (a, b), c in _delta_p_e_tree_rec(t.right).items():
        key = (graft(t.left, a), b)
        out[key] = out.get(key, 0) + c
    return out


def delta_p_gamma_recursive(x: Element) -> TensorElement:
    """Structural-recursion implementation, for cross-checking."""
    return lift_linear(
        Tag.HGAMMA,
        lambda w: _pruning_tensor(Tag.HGAMMA, w, lambda t: list(_delta_p_gamma_tree_rec(t))),
    )(x)


def delta_p_e_recursive(x: Element) -> TensorElement:
    return lift_linear(
        Tag.HE,
        lambda w: _pruning_tensor(Tag.HE, w, lambda t: list(_delta_p_e_tree_rec(t))),
    )(x)


def reduced_pruning(t: Tree) -> TensorElement:
    """Reduced under-pruning coproduct of a single nonroot tree."""
    if t is E:
        raise ValueError("the reduced pruning coproduct needs a nonroot tree")
    full = delta_p_e(embed_tree(Tag.HE, t))
    prim = TensorElement(
        (Tag.HE, Tag.HE), {((t,), ()): Fraction(1), ((), (t,)): Fraction(1)}
    )
    return full - prim


# -- charge coproduct and coaction ------------------------------------------


def _pairs_to_tensor(tag: Tag, pairs: TreePairs) -> TensorElement:
    terms: dict[tuple[Word, ...], Fraction] = {}
    for (a, b), c in pairs.items():
        wa = tuple(decompose_over(a))
        wb = tuple(decompose_over(b))
        if tag is Tag.HALPHA:
            wa = multiply_words(tag, wa, ())
            wb = multiply_words(tag, wb, ())
        key = (wa, wb)
        terms[key] = terms.get(key, Fraction(0)) + c
    return TensorElement((tag, tag), terms)


def _generator_coproduct(tag: Tag, u: Tree) -> TensorElement:
    return _pairs_to_tensor(tag, charge_coproduct_tree(v_wrap(u)))


def _generator_coaction(tag: Tag, u: Tree) -> TensorElement:
    return _pairs_to_tensor(tag, charge_coaction_tree(v_wrap(u)))


def _multiplicative(tag: Tag, word: Word, gen_fn) -> TensorElement:
    out = TensorElement((tag, tag), {((), ()): Fraction(1)})
    for u in word:
        out = out * gen_fn(tag, u)
    return out


def delta_alpha(x: Element) -> TensorElement:
    """Charge coproduct on the commutative charge algebra."""
    return lift_linear(Tag.HALPHA, lambda w: _multiplicative(Tag.HALPHA, w, _generator_coproduct))(x)


def delta_small(x: Element) -> TensorElement:
    """Charge coaction on the commutative charge algebra."""
    return lift_linear(Tag.HALPHA, lambda w: _multiplicative(Tag.HALPHA, w, _generator_coaction))(x)


def delta_alpha_nc(x: Element) -> TensorElement:
    """Charge coproduct on the noncommutative lift."""
    return lift_linear(Tag.HALPHA_NC, lambda w: _multiplicative(Tag.HALPHA_NC, w, _generator_coproduct))(x)


def delta_small_nc(x: Element) -> TensorElement:
    return lift_linear(Tag.HALPHA_NC, lambda w: _multiplicative(Tag.HALPHA_NC, w, _generator_coaction))(x)


COPRODUCTS: dict[Tag, Callable[[Element], TensorElement]] = {
    Tag.HGAMMA: delta_p_gamma,
    Tag.HE: delta_p_e,
    Tag.HALPHA: delta_alpha,
    Tag.HALPHA_NC: delta_alpha_nc,
}


def abelianize(x: Element) -> Element:
    """Project the noncommutative lift onto the commutative charge algebra."""
    if x.tag is not Tag.HALPHA_NC:
        raise ValueError("abelianize expects a noncommutative-lift element")
    out = zero(Tag.HALPHA)
    for w, c in x.terms.items():
        out = out + from_word(Tag.HALPHA, w, c)
    return out


# -- antipodes --------------------------------------------------------------

_antipode_letter_cache: dict[tuple[Tag, Tree], Element] = {}
_antipode_gen_cache: dict[tuple[Tag, Tree], Element] = {}


def _antipode_word(tag: Tag, word: Word) -> Element:
    """Antipode of a basis word: the anti-morphism extension of the antipode
    on generators (for a commutative algebra this is also a morphism)."""
    out = unit(tag)
    for letter in reversed(word):
        out = out * _antipode_letter(tag, letter)
    return out


def _antipode_element(tag: Tag, x: Element) -> Element:
    out = zero(tag)
    for w, c in x.terms.items():
        out = out + _antipode_word(tag, w).scale(c)
    return out


def _antipode_letter(tag: Tag, t: Tree) -> Element:
    """Antipode of a single generator, by the reduced-coproduct recursion
    S(g) = -g - sum S(g') g'' over the reduced coproduct of g."""
    key = (tag, t)
    got = _antipode_letter_cache.get(key)
    if got is None:
        gen = from_word(tag, (t,))
        full = COPRODUCTS[tag](gen)
        got = -gen
        for (w1, w2), c in full.terms.items():
            if not w1 or not w2:
                continue
            got = got - _antipode_word(tag, w1).scale(c) * from_word(tag, w2)
        _antipode_letter_cache[key] = got
    return got


def antipode_p_e(x: Element) -> Element:
    """Antipode of the electron propagator Hopf algebra."""
    return _antipode_element(Tag.HE, x)


def antipode_p_gamma(x: Element) -> Element:
    """Antipode of the photon propagator Hopf algebra."""
    return _antipode_element(Tag.HGAMMA, x)


def antipode_alpha(x: Element) -> Element:
    """Antipode of the charge Hopf algebra."""
    return _antipode_element(Tag.HALPHA, x)


def antipode_alpha_nc(x: Element) -> Element:
    """Antipode of the noncommutative lift, from the same recursion."""
    return _antipode_element(Tag.HALPHA_NC, x)


ANTIPODES: dict[Tag, Callable[[Element], Element]] = {
    Tag.HGAMMA: antipode_p_gamma,
    Tag.HE: antipode_p_e,
    Tag.HALPHA: antipode_alpha,
    Tag.HALPHA_NC: antipode_alpha_nc,
}
