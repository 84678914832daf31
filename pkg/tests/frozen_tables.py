"""Hand-frozen expected values for the small-tree structure maps.

Shared by the unit tests and the acceptance suite.  Every entry was written
out independently of the implementation.
"""

from fractions import Fraction

from treehopf.trees import (
    E,
    Y,
    DEUXUN,
    DEUXDEUX,
    TROISUN,
    TROISDEUX,
    TROISTROIS,
    TROISQUATRE,
    TROISCINQ,
)
from treehopf.algebra import Tag, embed_tree, tensor


def _he(t):
    return embed_tree(Tag.HE, t)


def _hg(t):
    return embed_tree(Tag.HGAMMA, t)


def _ha(t):
    return embed_tree(Tag.HALPHA, t)


def _e3(t1, t2, t3, coeff=1):
    return tensor([_he(t1), _ha(t2), _he(t3)]).scale(Fraction(coeff))


def _g2(t1, t2, coeff=1):
    return tensor([_hg(t1), _ha(t2)]).scale(Fraction(coeff))


def _a2(t1, t2, coeff=1):
    return tensor([_ha(t1), _ha(t2)]).scale(Fraction(coeff))


# electron pruning antipode on the five listed trees
UNDER_ANTIPODE = {
    Y: -_he(Y),
    DEUXUN: -_he(DEUXUN),
    DEUXDEUX: -_he(DEUXDEUX) + _he(Y) * _he(Y),
    TROISCINQ: (
        -_he(TROISCINQ)
        + _he(DEUXDEUX) * _he(Y)
        + _he(Y) * _he(DEUXDEUX)
        - _he(Y) * _he(Y) * _he(Y)
    ),
    TROISQUATRE: -_he(TROISQUATRE) + _he(Y) * _he(DEUXUN),
}

# charge coproduct on the four listed generators
CHARGE_COPRODUCT = {
    Y: _a2(Y, E) + _a2(E, Y),
    DEUXDEUX: _a2(DEUXDEUX, E) + _a2(E, DEUXDEUX),
    TROISQUATRE: _a2(TROISQUATRE, E) + _a2(DEUXDEUX, Y) + _a2(E, TROISQUATRE),
    TROISCINQ: _a2(TROISCINQ, E) + _a2(E, TROISCINQ),
}

# charge coaction on the four listed generators
CHARGE_COACTION = {
    Y: _a2(Y, E),
    DEUXDEUX: _a2(DEUXDEUX, E),
    TROISQUATRE: _a2(TROISQUATRE, E) + _a2(DEUXDEUX, Y),
    TROISCINQ: _a2(TROISCINQ, E),
}

# electron renormalization coaction on all nine trees of order <= 3
ELECTRON_COACTION = {
    E: _e3(E, E, E),
    Y: _e3(Y, E, E) + _e3(E, E, Y),
    DEUXUN: _e3(DEUXUN, E, E) + _e3(Y, Y, E) + _e3(E, E, DEUXUN),
    DEUXDEUX: _e3(DEUXDEUX, E, E) + _e3(Y, E, Y) + _e3(E, E, DEUXDEUX),
    TROISUN: (
        _e3(TROISUN, E, E)
        + _e3(DEUXUN, Y, E, coeff=2)
        + _e3(Y, DEUXUN, E)
        + _e3(E, E, TROISUN)
    ),
    TROISDEUX: _e3(TROISDEUX, E, E) + _e3(Y, DEUXDEUX, E) + _e3(E, E, TROISDEUX),
    TROISTROIS: (
        _e3(TROISTROIS, E, E)
        + _e3(DEUXDEUX, Y, E)
        + _e3(DEUXUN, E, Y)
        + _e3(Y, Y, Y)
        + _e3(E, E, TROISTROIS)
    ),
    TROISQUATRE: (
        _e3(TROISQUATRE, E, E)
        + _e3(DEUXDEUX, Y, E)
        + _e3(Y, E, DEUXUN)
        + _e3(E, E, TROISQUATRE)
    ),
    TROISCINQ: (
        _e3(TROISCINQ, E, E)
        + _e3(DEUXDEUX, E, Y)
        + _e3(Y, E, DEUXDEUX)
        + _e3(E, E, TROISCINQ)
    ),
}

# photon renormalization coaction on all nine trees of order <= 3
PHOTON_COACTION = {
    E: _g2(E, E),
    Y: _g2(Y, E) + _g2(E, Y),
    DEUXUN: _g2(DEUXUN, E) + _g2(Y, Y, coeff=2) + _g2(E, DEUXUN),
    DEUXDEUX: _g2(DEUXDEUX, E) + _g2(E, DEUXDEUX),
    TROISUN: (
        _g2(TROISUN, E)
        + _g2(DEUXUN, Y, coeff=3)
        + _g2(Y, DEUXUN, coeff=3)
        + _g2(E, TROISUN)
    ),
    TROISDEUX: (
        _g2(TROISDEUX, E) + _g2(DEUXDEUX, Y) + _g2(Y, DEUXDEUX) + _g2(E, TROISDEUX)
    ),
    TROISTROIS: (
        _g2(TROISTROIS, E)
        + _g2(DEUXDEUX, Y)
        + _g2(Y, DEUXDEUX)
        + _g2(E, TROISTROIS)
    ),
    TROISQUATRE: _g2(TROISQUATRE, E) + _g2(DEUXDEUX, Y) + _g2(E, TROISQUATRE),
    TROISCINQ: _g2(TROISCINQ, E) + _g2(E, TROISCINQ),
}

# over and under products on small trees
OVER_EXAMPLES = [
    (DEUXDEUX, Y, TROISDEUX),
    (Y, DEUXDEUX, TROISTROIS),
]
UNDER_EXAMPLES = [
    (DEUXUN, Y, TROISTROIS),
    (Y, DEUXUN, TROISQUATRE),
]
