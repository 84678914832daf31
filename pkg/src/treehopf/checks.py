"""Named axiom sweeps over finite basis ranges.

Every law the structure maps are supposed to satisfy is checked exactly,
term by term, over all basis elements up to a total order bound.  Each check
reports the first counterexample it finds, so a corrupted map fails loudly.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Optional

from .trees import (
    Tree,
    E,
    all_trees_up_to,
    catalan,
    decompose_over,
    enumerate_trees,
)
from .algebra import (
    Element,
    Tag,
    TensorElement,
    Word,
    embed_tree,
    from_word,
    tensor,
    unit,
    word_as_tree,
)
from . import hopf, qed
from .hopf import abelianize

CoproductMap = Callable[[Element], TensorElement]


@dataclass
class CheckResult:
    name: str
    ok: bool
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        suffix = f"  ({self.detail})" if self.detail and not self.ok else ""
        return f"[{status}] {self.name}{suffix}"


def default_maps() -> dict[str, Callable]:
    return {
        "delta-p-gamma": hopf.delta_p_gamma,
        "delta-p-e": hopf.delta_p_e,
        "delta-alpha": hopf.delta_alpha,
        "delta-small": hopf.delta_small,
        "delta-alpha-nc": hopf.delta_alpha_nc,
        "delta-small-nc": hopf.delta_small_nc,
        "antipode-p-gamma": hopf.antipode_p_gamma,
        "antipode-p-e": hopf.antipode_p_e,
        "antipode-alpha": hopf.antipode_alpha,
        "antipode-alpha-nc": hopf.antipode_alpha_nc,
        "delta-gamma-coaction": qed.delta_gamma_coaction,
        "delta-e-coaction": qed.delta_e_coaction,
        "delta-e": qed.electron_renorm_coaction,
        "delta-gamma": qed.photon_renorm_coaction,
        "sigma": qed.sigma,
        "qed-coproduct": qed.qed_coproduct,
        "qed-antipode": qed.qed_antipode,
    }


def corrupt_map(maps: dict[str, Callable], name: str) -> dict[str, Callable]:
    """Replace one structure map by a damaged variant: multi-term outputs
    silently lose their last term, single nonunit terms are squared (wrong
    degree).  Negative control for the axiom sweeps."""
    if name not in maps:
        raise KeyError(f"unknown map {name!r}")
    inner = maps[name]

    def corrupted(x):
        out = inner(x)
        if not isinstance(out, (Element, TensorElement)):
            return out
        if len(out.terms) > 1:
            victim = out.sorted_terms()[-1][0]
            terms = dict(out.terms)
            del terms[victim]
            if isinstance(out, TensorElement):
                return TensorElement(out.tags, terms)
            return Element(out.tag, terms)
        if len(out.terms) == 1:
            (key,) = out.terms
            is_unit = (
                not any(key)
                if isinstance(out, TensorElement)
                else not key
            )
            if not is_unit:
                return out * out
        return out

    out = dict(maps)
    out[name] = corrupted
    return out


# -- basis enumeration ------------------------------------------------------


def basis_words(tag: Tag, n: int) -> list[Word]:
    """All basis words of total degree <= n, unit word included."""
    if tag in (Tag.HGAMMA, Tag.HE):
        letters = [t for t in all_trees_up_to(n) if t is not E]
        weight = {t: t.order for t in letters}
    else:
        letters = all_trees_up_to(max(n - 1, 0))
        weight = {t: t.order + 1 for t in letters}
    out: list[Word] = []

    def rec(prefix: tuple[Tree, ...], budget: int):
        out.append(prefix)
        for t in letters:
            if weight[t] <= budget:
                if tag is Tag.HALPHA and prefix and t.sort_key() < prefix[-1].sort_key():
                    continue  # commutative normal form: nondecreasing letters
                rec(prefix + (t,), budget - weight[t])

    rec((), n)
    return out


def basis_elements(tag: Tag, n: int) -> list[Element]:
    return [from_word(tag, w) for w in basis_words(tag, n)]


def qed_basis(n: int) -> list[TensorElement]:
    out = []
    for wa in basis_words(Tag.HALPHA, n):
        da = sum(u.order + 1 for u in wa)
        for wb in basis_words(Tag.HE, n - da):
            out.append(
                TensorElement((Tag.HALPHA, Tag.HE), {(wa, wb): Fraction(1)})
            )
    return out


def _sweep(
    name: str,
    items: Iterable,
    law: Callable[[object], Optional[str]],
    jobs: int = 1,
) -> CheckResult:
    """Run a per-item law; the law returns None on success or a description
    of the violation.  Output is order-stable regardless of job count."""
    items = list(items)
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(law, items))
    else:
        results = [law(x) for x in items]
    for detail in results:
        if detail is not None:
            return CheckResult(name, False, detail)
    return CheckResult(name, True)


# -- coalgebra laws ---------------------------------------------------------


def check_coassoc(tag: Tag, n: int, maps=None, jobs: int = 1) -> CheckResult:
    maps = maps or default_maps()
    delta = {
        Tag.HGAMMA: maps["delta-p-gamma"],
        Tag.HE: maps["delta-p-e"],
        Tag.HALPHA: maps["delta-alpha"],
        Tag.HALPHA_NC: maps["delta-alpha-nc"],
    }[tag]

    def law(x: Element) -> Optional[str]:
        d = delta(x)
        lhs = d.map_slot(0, lambda w: delta(from_word(tag, w)))
        rhs = d.map_slot(1, lambda w: delta(from_word(tag, w)))
        if lhs != rhs:
            return f"coassociativity fails on {x!r}: {lhs - rhs!r}"
        return None

    return _sweep(f"coassoc[{tag.value}] order<={n}", basis_elements(tag, n), law, jobs)


def check_counit(tag: Tag, n: int, maps=None, jobs: int = 1) -> CheckResult:
    maps = maps or default_maps()
    delta = {
        Tag.HGAMMA: maps["delta-p-gamma"],
        Tag.HE: maps["delta-p-e"],
        Tag.HALPHA: maps["delta-alpha"],
        Tag.HALPHA_NC: maps["delta-alpha-nc"],
    }[tag]

    def law(x: Element) -> Optional[str]:
        d = delta(x)
        left = d.contract_counit(0).slot_element()
        right = d.contract_counit(1).slot_element()
        if left != x or right != x:
            return f"counit law fails on {x!r}"
        return None

    return _sweep(f"counit[{tag.value}] order<={n}", basis_elements(tag, n), law, jobs)


def check_antipode(tag: Tag, n: int, maps=None, jobs: int = 1) -> CheckResult:
    maps = maps or default_maps()
    delta = {
        Tag.HGAMMA: maps["delta-p-gamma"],
        Tag.HE: maps["delta-p-e"],
        Tag.HALPHA: maps["delta-alpha"],
        Tag.HALPHA_NC: maps["delta-alpha-nc"],
    }[tag]
    antipode = {
        Tag.HGAMMA: maps["antipode-p-gamma"],
        Tag.HE: maps["antipode-p-e"],
        Tag.HALPHA: maps["antipode-alpha"],
        Tag.HALPHA_NC: maps["antipode-alpha-nc"],
    }[tag]

    def law(x: Element) -> Optional[str]:
        d = delta(x)
        target = unit(tag).scale(x.counit())
        left = (
            d.map_slot(0, lambda w: antipode(from_word(tag, w)))
            .slot_multiply(0, 1, 0)
            .slot_element()
        )
        right = (
            d.map_slot(1, lambda w: antipode(from_word(tag, w)))
            .slot_multiply(0, 1, 0)
            .slot_element()
        )
        if left != target or right != target:
            return f"antipode axiom fails on {x!r}"
        return None

    return _sweep(f"antipode[{tag.value}] order<={n}", basis_elements(tag, n), law, jobs)


def check_alpha_trees(n: int, maps=None, jobs: int = 1) -> CheckResult:
    """Coassociativity, counit and antipode on the charge algebra over the
    images of all single trees (not just low-degree monomials)."""
    maps = maps or default_maps()
    delta = maps["delta-alpha"]
    antipode = maps["antipode-alpha"]

    def law(t: Tree) -> Optional[str]:
        x = embed_tree(Tag.HALPHA, t)
        d = delta(x)
        lhs = d.map_slot(0, lambda w: delta(from_word(Tag.HALPHA, w)))
        rhs = d.map_slot(1, lambda w: delta(from_word(Tag.HALPHA, w)))
        if lhs != rhs:
            return f"coassociativity fails on tree {t}"
        if d.contract_counit(0).slot_element() != x:
            return f"counit fails on tree {t}"
        axiom = (
            d.map_slot(0, lambda w: antipode(from_word(Tag.HALPHA, w)))
            .slot_multiply(0, 1, 0)
            .slot_element()
        )
        if axiom != unit(Tag.HALPHA).scale(x.counit()):
            return f"antipode fails on tree {t}"
        return None

    return _sweep(f"hopf[Halpha] single trees order<={n}", all_trees_up_to(n), law, jobs)


def check_primitive_pairing(n: int, maps=None, jobs: int = 1) -> CheckResult:
    """The charge coproduct of a tree contains t (x) 1 and 1 (x) t exactly once."""
    maps = maps or default_maps()
    delta = maps["delta-alpha"]

    def law(t: Tree) -> Optional[str]:
        if t is E:
            return None
        d = delta(embed_tree(Tag.HALPHA, t))
        w = tuple(sorted(decompose_over(t), key=Tree.sort_key))
        if d.terms.get((w, ())) != 1 or d.terms.get(((), w)) != 1:
            return f"primitive pairing fails on tree {t}"
        return None

    return _sweep(f"primitive-pairing order<={n}", all_trees_up_to(n), law, jobs)


# -- coactions --------------------------------------------------------------


def check_coaction_d1(which: str, n: int, maps=None, jobs: int = 1) -> CheckResult:
    """(coact (x) Id) coact == (Id (x) charge coproduct) coact."""
    maps = maps or default_maps()
    tag, coact = {
        "gamma": (Tag.HGAMMA, maps["delta-gamma-coaction"]),
        "e": (Tag.HE, maps["delta-e-coaction"]),
        "alpha": (Tag.HALPHA, maps["delta-small"]),
        "alpha-nc": (Tag.HALPHA_NC, maps["delta-small-nc"]),
    }[which]
    delta_alpha = maps["delta-alpha-nc" if which == "alpha-nc" else "delta-alpha"]
    charge_tag = Tag.HALPHA_NC if which == "alpha-nc" else Tag.HALPHA

    def law(x: Element) -> Optional[str]:
        d = coact(x)
        lhs = d.map_slot(0, lambda w: coact(from_word(tag, w)))
        rhs = d.map_slot(1, lambda w: delta_alpha(from_word(charge_tag, w)))
        if lhs != rhs:
            return f"(D1) fails on {x!r}"
        return None

    return _sweep(f"(D1)[{which}] order<={n}", basis_elements(tag, n), law, jobs)


def check_coaction_d2(which: str, n: int, maps=None, jobs: int = 1) -> CheckResult:
    """(pruning (x) Id) coact == merge-middle of (coact (x) coact) pruning."""
    maps = maps or default_maps()
    tag, coact, pruning = {
        "gamma": (Tag.HGAMMA, maps["delta-gamma-coaction"], maps["delta-p-gamma"]),
        "e": (Tag.HE, maps["delta-e-coaction"], maps["delta-p-e"]),
    }[which]

    def law(x: Element) -> Optional[str]:
        lhs = coact(x).map_slot(0, lambda w: pruning(from_word(tag, w)))
        rhs = (
            pruning(x)
            .map_slot(0, lambda w: coact(from_word(tag, w)))
            .map_slot(2, lambda w: coact(from_word(tag, w)))
            .slot_multiply(1, 3, 2)
        )
        if lhs != rhs:
            return f"(D2) fails on {x!r}"
        return None

    return _sweep(f"(D2)[{which}] order<={n}", basis_elements(tag, n), law, jobs)


# -- QED Hopf algebra -------------------------------------------------------


def _apply_qed_pair(t: TensorElement, i: int, f) -> TensorElement:
    """Apply a map on 2-slot (charge, electron) elements to slots (i, i+1)."""
    out = None
    for ws, c in t.terms.items():
        pair = TensorElement((Tag.HALPHA, Tag.HE), {(ws[i], ws[i + 1]): Fraction(1)})
        image = f(pair)
        tags = t.tags[:i] + image.tags + t.tags[i + 2 :]
        piece_terms = {}
        for iws, ic in image.terms.items():
            key = ws[:i] + iws + ws[i + 2 :]
            piece_terms[key] = piece_terms.get(key, Fraction(0)) + c * ic
        piece = TensorElement(tags, piece_terms)
        out = piece if out is None else out + piece
    assert out is not None
    return out


def check_qed_hopf(n: int, maps=None, jobs: int = 1) -> CheckResult:
    maps = maps or default_maps()
    coproduct = maps["qed-coproduct"]
    antipode = maps["qed-antipode"]

    def law(x: TensorElement) -> Optional[str]:
        d = coproduct(x)
        lhs = _apply_qed_pair(d, 0, coproduct)
        rhs = _apply_qed_pair(d, 2, coproduct)
        if lhs != rhs:
            return f"qed coassociativity fails on {x!r}"
        if d.contract_counit(0).contract_counit(0) != x:
            return f"qed counit (left) fails on {x!r}"
        if d.contract_counit(2).contract_counit(2) != x:
            return f"qed counit (right) fails on {x!r}"
        target = qed.qed_unit().scale(qed.qed_counit(x))
        for side in (0, 2):
            m = _apply_qed_pair(d, side, antipode)
            m = m.slot_multiply(0, 2, 0).slot_multiply(1, 2, 1)
            if m != target:
                return f"qed antipode fails on {x!r}"
        return None

    return _sweep(f"hopf[Hqed] order<={n}", qed_basis(n), law, jobs)


def check_electron_coaction_law(n: int, maps=None, jobs: int = 1) -> CheckResult:
    """Coassociativity of the electron renormalization coaction with respect
    to the QED coproduct, after regrouping the last two slots."""
    maps = maps or default_maps()
    de = maps["delta-e"]
    dqed = maps["qed-coproduct"]

    def law(x: Element) -> Optional[str]:
        d = qed.regroup_as_qed(de(x))
        lhs = d.map_slot(0, lambda w: de(from_word(Tag.HE, w)))
        rhs = _apply_qed_pair(d, 1, dqed)
        if lhs != rhs:
            return f"electron coaction law fails on {x!r}"
        return None

    return _sweep(
        f"coaction-law[delta-e vs qed] order<={n}",
        basis_elements(Tag.HE, n),
        law,
        jobs,
    )


def check_electron_coaction_morphism(n: int, maps=None, jobs: int = 1) -> CheckResult:
    maps = maps or default_maps()
    de = maps["delta-e"]

    def law(pair) -> Optional[str]:
        x, y = pair
        if de(x * y) != de(x) * de(y):
            return f"morphism fails on {x!r}, {y!r}"
        return None

    words = basis_elements(Tag.HE, n)
    pairs = [
        (x, y)
        for x, y in itertools.product(words, repeat=2)
        if _degree(x) + _degree(y) <= n
    ]
    return _sweep(f"morphism[delta-e] order<={n}", pairs, law, jobs)


def _degree(x: Element) -> int:
    comps = x.grade_components()
    return max(comps) if comps else 0


def check_intertwine(n: int, maps=None, jobs: int = 1) -> CheckResult:
    """The over-multiplication morphism intertwines the photon coaction and
    the charge coproduct."""
    maps = maps or default_maps()
    sig = maps["sigma"]
    dgamma = maps["delta-gamma"]
    dalpha = maps["delta-alpha"]

    def law(x: Element) -> Optional[str]:
        lhs = dalpha(sig(x))
        rhs = dgamma(x).map_slot(0, lambda w: sig(from_word(Tag.HGAMMA, w)))
        if lhs != rhs:
            return f"intertwining fails on {x!r}"
        return None

    return _sweep(f"intertwine order<={n}", basis_elements(Tag.HGAMMA, n), law, jobs)


def check_photon_coassoc(n: int, maps=None, jobs: int = 1) -> CheckResult:
    maps = maps or default_maps()
    dgamma = maps["delta-gamma"]
    dalpha = maps["delta-alpha"]

    def law(x: Element) -> Optional[str]:
        d = dgamma(x)
        lhs = d.map_slot(0, lambda w: dgamma(from_word(Tag.HGAMMA, w)))
        rhs = d.map_slot(1, lambda w: dalpha(from_word(Tag.HALPHA, w)))
        if lhs != rhs:
            return f"photon coaction coassociativity fails on {x!r}"
        return None

    return _sweep(
        f"coassoc[delta-gamma] order<={n}", basis_elements(Tag.HGAMMA, n), law, jobs
    )


def check_single_tree_restriction(n: int, maps=None, jobs: int = 1) -> CheckResult:
    """On single trees the photon coaction equals the noncommutative charge
    coproduct read through the word/tree identification."""
    maps = maps or default_maps()
    dgamma = maps["delta-gamma"]
    dnc = maps["delta-alpha-nc"]

    def law(t: Tree) -> Optional[str]:
        lhs = dgamma(embed_tree(Tag.HGAMMA, t))
        nc = dnc(embed_tree(Tag.HALPHA_NC, t))
        terms = {}
        for (w1, w2), c in nc.terms.items():
            t1 = word_as_tree(Tag.HALPHA_NC, w1)
            key = (
                () if t1 is E else (t1,),
                tuple(sorted(w2, key=Tree.sort_key)),
            )
            terms[key] = terms.get(key, Fraction(0)) + c
        rhs = TensorElement((Tag.HGAMMA, Tag.HALPHA), terms)
        if lhs != rhs:
            return f"single-tree restriction fails on tree {t}"
        for ws in lhs.terms:
            if len(ws[0]) > 1:
                return f"left slot not a single tree on {t}"
        return None

    return _sweep(f"single-tree-restriction order<={n}", all_trees_up_to(n), law, jobs)


# -- combinatorial counts ---------------------------------------------------


def check_catalan(n: int, maps=None, jobs: int = 1) -> CheckResult:
    for m in range(n + 1):
        got = len(enumerate_trees(m))
        if got != catalan(m):
            return CheckResult(
                f"catalan n<={n}", False, f"|Y_{m}| = {got} != {catalan(m)}"
            )
    return CheckResult(f"catalan n<={n}", True)


def check_term_counts(n: int, maps=None, jobs: int = 1) -> CheckResult:
    maps = maps or default_maps()
    dpg = maps["delta-p-gamma"]

    def law(t: Tree) -> Optional[str]:
        got = len(dpg(embed_tree(Tag.HGAMMA, t)).terms)
        want = len(decompose_over(t)) + 1
        if got != want:
            return f"term count {got} != {want} on {t}"
        return None

    return _sweep(f"term-count order<={n}", all_trees_up_to(n), law, jobs)


def check_cross(n: int, maps=None, jobs: int = 1) -> CheckResult:
    """Recursive vs factorization implementations agree."""

    def law(t: Tree) -> Optional[str]:
        xg = embed_tree(Tag.HGAMMA, t)
        xe = embed_tree(Tag.HE, t)
        if hopf.delta_p_gamma(xg) != hopf.delta_p_gamma_recursive(xg):
            return f"over pruning mismatch on {t}"
        if hopf.delta_p_e(xe) != hopf.delta_p_e_recursive(xe):
            return f"under pruning mismatch on {t}"
        if qed.delta_e_coaction(xe) != qed.delta_e_coaction_recursive(xe):
            return f"electron coaction mismatch on {t}"
        if qed.electron_renorm_coaction(xe) != qed.electron_renorm_coaction_recursive(xe):
            return f"electron renorm coaction mismatch on {t}"
        return None

    return _sweep(f"cross-check order<={n}", all_trees_up_to(n), law, jobs)


# -- suites -----------------------------------------------------------------


def run_suite(
    suite: str, order: int | None = None, maps=None, jobs: int = 1
) -> list[CheckResult]:
    maps = maps or default_maps()
    n = order

    def d(default: int) -> int:
        return default if n is None else n

    suites: dict[str, Callable[[], list[CheckResult]]] = {
        "coassoc": lambda: [
            check_coassoc(Tag.HGAMMA, d(5), maps, jobs),
            check_coassoc(Tag.HE, d(5), maps, jobs),
            check_coassoc(Tag.HALPHA, d(5), maps, jobs),
            check_coassoc(Tag.HALPHA_NC, d(5), maps, jobs),
        ],
        "counit": lambda: [
            check_counit(tag, d(5), maps, jobs) for tag in Tag
        ],
        "antipode": lambda: [
            check_antipode(tag, d(4), maps, jobs) for tag in Tag
        ],
        "hopf-alpha-trees": lambda: [check_alpha_trees(d(6), maps, jobs)],
        "coaction": lambda: [
            check_coaction_d1("gamma", d(4), maps, jobs),
            check_coaction_d1("e", d(4), maps, jobs),
            check_coaction_d1("alpha", d(4), maps, jobs),
            check_coaction_d1("alpha-nc", d(4), maps, jobs),
        ],
        "compat": lambda: [
            check_coaction_d2("gamma", d(4), maps, jobs),
            check_coaction_d2("e", d(4), maps, jobs),
        ],
        "qed": lambda: [
            check_qed_hopf(d(4), maps, jobs),
            check_electron_coaction_law(d(4), maps, jobs),
            check_electron_coaction_morphism(d(4), maps, jobs),
        ],
        "intertwine": lambda: [check_intertwine(d(5), maps, jobs)],
        "photon": lambda: [
            check_photon_coassoc(d(4), maps, jobs),
            check_single_tree_restriction(d(6), maps, jobs),
        ],
        "primitive": lambda: [check_primitive_pairing(d(6), maps, jobs)],
        "counts": lambda: [
            check_catalan(d(12), maps, jobs),
            check_term_counts(d(8), maps, jobs),
        ],
        "crosscheck": lambda: [check_cross(d(8), maps, jobs)],
    }
    if suite == "all":
        out: list[CheckResult] = []
        for name in suites:
            out.extend(suites[name]())
        return out
    if suite not in suites:
        raise KeyError(f"unknown suite {suite!r}; choose from {sorted(suites)} or 'all'")
    return suites[suite]()
