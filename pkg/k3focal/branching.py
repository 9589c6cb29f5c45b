#!/usr/bin/env python
# coding: utf-8

"""
Branching of G-irreducibles to the isotropy group K of each focal manifold:
`U(2) < SU(3)`, `Sp(2)Sp(1) < Sp(3)` and `Spin(9) < F4`.

A G-weight is sent through a rational torus map to a K-weight, which is a
tuple with one coordinate tuple per factor of K. The restricted multiset is
peeled by repeatedly taking its highest remaining weight and subtracting the
weight system of the K-irreducible with that highest weight.
"""

import collections
import itertools
import logging
from dataclasses import dataclass
from dataclasses import field
from fractions import Fraction

from . import rep_core
from . import root_data
from .errors import ConfigurationError
from .errors import InputError
from .errors import InternalError
from .errors import InvariantViolation
from .normalization import FocalSpaceId
from .root_data import DominantWeight
from .root_data import WeightVector

logger = logging.getLogger(__name__)

_h = Fraction(1, 2)


@dataclass(frozen=True)
class TorusEmbedding(object):
    """
    Rational map from G-weight coordinates to K-weight coordinates.

    Attributes:
        factors(tuple):         the `KFactor` of the space, in order.
        blocks(tuple):          one matrix per factor, rows are the factor's
                                coordinates, columns the G coordinates. A
                                circle factor has a single row: its charge.
    """

    factors: tuple
    blocks: tuple

    @property
    def matrix(self):
        rows = []
        for f, b in zip(self.factors, self.blocks):
            if not f.is_circle:
                rows.extend(b)
        return tuple(rows)

    @property
    def center_charge(self):
        for f, b in zip(self.factors, self.blocks):
            if f.is_circle:
                return b[0]
        return None

    def restrict(self, mu):
        return tuple(
            tuple(sum((c * x for c, x in zip(row, mu)), Fraction(0)) for row in block)
            for block in self.blocks)


def _frac_rows(rows):
    return tuple(tuple(Fraction(x) for x in row) for row in rows)


_blocks = {
    # SU(2) weight (a1-a2)/2 * (1, -1); U(1) charge a1 + a2.
    FocalSpaceId.CP2: (
        _frac_rows([[_h, -_h, 0],
                    [-_h, _h, 0]]),
        _frac_rows([[1, 1, 0]]),
    ),
    # Sp(2) weight (x1, x2); Sp(1) weight x3, written in su(2) coordinates.
    FocalSpaceId.HP2: (
        _frac_rows([[1, 0, 0],
                    [0, 1, 0]]),
        _frac_rows([[0, 0, _h],
                    [0, 0, -_h]]),
    ),
    # The standard B4 and F4 coordinates share the torus: the long roots of F4
    # are the long roots of B4 and the short roots +-e_i of B4 are short roots
    # of F4.
    FocalSpaceId.OP2: (
        _frac_rows([[1, 0, 0, 0],
                    [0, 1, 0, 0],
                    [0, 0, 1, 0],
                    [0, 0, 0, 1]]),
    ),
}


def torus_embedding(space):
    return TorusEmbedding(factors=space.k_factors, blocks=_blocks[space.id])


def check_embedding(space):
    """
    Check that the torus map of `space` sends every fundamental weight of G
    to an integral weight of each semisimple factor of K, and for `OP2` that
    it sends the roots of Spin(9) to roots of F4, long onto long.

    Raises:
        ConfigurationError
    """

    emb = torus_embedding(space)
    g = root_data.build_root_system(space.g_alg)

    for omega in g.fundamental_weights:
        image = emb.restrict(omega)
        for f, coords in zip(space.k_factors, image):
            if f.is_circle:
                continue
            k = root_data.build_root_system(f.alg)
            levels = rep_core.levels_of(k, coords)
            if any(x.denominator != 1 for x in levels):
                raise ConfigurationError('{}: {} maps {} to non-integral {} levels {}'.format(
                    space.name, g.id.value, omega, f.name, levels))

    if space.id == FocalSpaceId.OP2:
        k = root_data.build_root_system(space.isotropy_alg)
        g_roots = set(g.roots)
        g_long = {a for a in g.roots if a.dot(a) == 2}
        images = [WeightVector(emb.restrict(a)[0]) for a in k.roots]
        if not set(images) <= g_roots:
            raise ConfigurationError('{}: a root of {} is not a root of {}'.format(
                space.name, k.id.value, g.id.value))
        k_long = {a for a in images if a.dot(a) == 2}
        if k_long != g_long:
            raise ConfigurationError('{}: long roots of {} and {} differ'.format(
                space.name, k.id.value, g.id.value))


@dataclass(frozen=True, order=True)
class KIrrepLabel(object):
    """
    An irreducible representation of K.

    Attributes:
        semisimple_part(DominantWeight):    levels on the first factor.
        extra_part:                         U(1) charge (`Fraction`) for `CP2`,
                                            Sp(1) level (`int`) for `HP2`,
                                            None for `OP2`.
    """

    semisimple_part: DominantWeight
    extra_part: object = None

    def __str__(self):
        s = str(self.semisimple_part)
        if self.extra_part is not None:
            s += ' [' + str(self.extra_part) + ']'
        return s


@dataclass(frozen=True)
class BranchingResult(object):
    """
    `constituents` maps each `KIrrepLabel` to its multiplicity in `V_lambda`
    restricted to K.
    """

    rep: DominantWeight
    constituents: dict = field(compare=False)

    def multiplicity(self, label):
        return self.constituents.get(label, 0)


def slice_label(space):
    extra = None
    if len(space.k_factors) > 1:
        extra = Fraction(0) if space.k_factors[1].is_circle else 0
    return KIrrepLabel(DominantWeight(space.slice_levels), extra)


def trivial_label(space):
    k = root_data.build_root_system(space.isotropy_alg)
    extra = None
    if len(space.k_factors) > 1:
        extra = Fraction(0) if space.k_factors[1].is_circle else 0
    return KIrrepLabel(DominantWeight.zero(k.rank), extra)


def _factor_parts(space, label):
    parts = [label.semisimple_part]
    if len(space.k_factors) > 1:
        f = space.k_factors[1]
        if f.is_circle:
            parts.append(Fraction(label.extra_part))
        else:
            parts.append(DominantWeight.of(label.extra_part))
    return parts


def _label_of(space, kweight):
    parts = []
    for f, coords in zip(space.k_factors, kweight):
        if f.is_circle:
            parts.append(coords[0])
            continue
        k = root_data.build_root_system(f.alg)
        try:
            parts.append(rep_core.dominant_weight_from_vector(k, coords))
        except InputError as e:
            raise InternalError('{}: highest remaining weight {} is not dominant: {}'.format(
                space.name, kweight, e.reason))

    extra = None
    if len(parts) > 1:
        extra = parts[1] if space.k_factors[1].is_circle else parts[1].levels[0]
    return KIrrepLabel(parts[0], extra)


def k_dimension(space, label):
    dim = 1
    for f, part in zip(space.k_factors, _factor_parts(space, label)):
        if not f.is_circle:
            dim *= rep_core.weyl_dimension(root_data.build_root_system(f.alg), part)
    return dim


def _k_weight_system(space, label, dim_guard):
    per_factor = []
    for f, part in zip(space.k_factors, _factor_parts(space, label)):
        if f.is_circle:
            per_factor.append({(part,): 1})
        else:
            k = root_data.build_root_system(f.alg)
            per_factor.append(rep_core.weight_system(k, part, dim_guard).entries)

    weights = collections.Counter()
    for combo in itertools.product(*[list(p.items()) for p in per_factor]):
        key = tuple(tuple(w) for w, _ in combo)
        m = 1
        for _, x in combo:
            m *= x
        weights[key] += m
    return weights


def restrict_weights(space, ws):
    """
    Image of a G weight system under the torus map, as a `Counter` of
    K-weights.
    """
    emb = torus_embedding(space)
    restricted = collections.Counter()
    for mu, m in ws.entries.items():
        restricted[emb.restrict(mu)] += m
    return restricted


def _height_key(space, kweight):
    height = Fraction(0)
    for f, coords in zip(space.k_factors, kweight):
        if not f.is_circle:
            k = root_data.build_root_system(f.alg)
            height += k.weyl_vector.dot(WeightVector(coords))
    return (height, tuple(itertools.chain.from_iterable(kweight)))


def branch(space, dw, dim_guard=None):
    """
    Decompose `V_lambda` restricted to K.

    Args:
        space(FocalSpace):      the focal manifold `G/K`.
        dw(DominantWeight):     highest weight of the G-representation.
        dim_guard(int):         passed on to `rep_core.weight_system`.

    Returns:
        BranchingResult

    Raises:
        ConfigurationError: if the torus map is not integral.
        ResourceError:      if a weight system exceeds the guard.
        InternalError:      if peeling leaves a negative remainder.
    """

    check_embedding(space)

    g = root_data.build_root_system(space.g_alg)
    ws = rep_core.weight_system(g, dw, dim_guard)
    remaining = restrict_weights(space, ws)

    constituents = {}
    while remaining:
        top = max(remaining, key=lambda w: _height_key(space, w))
        count = remaining[top]
        label = _label_of(space, top)

        for w, m in _k_weight_system(space, label, dim_guard).items():
            left = remaining[w] - count * m
            if left < 0:
                raise InternalError('{} {}: removing {} x {} leaves {} at {}'.format(
                    space.name, dw, count, label, left, w))
            if left:
                remaining[w] = left
            else:
                del remaining[w]

        constituents[label] = count

    result = BranchingResult(rep=ws.rep, constituents=constituents)

    total = sum(m * k_dimension(space, label) for label, m in constituents.items())
    if total != ws.dimension():
        raise InvariantViolation('{} {}: dimension of the restriction'.format(space.name, dw),
                                 ws.dimension(), total)

    logger.debug('%s %s: %d constituents: %s', space.name, ws.rep, len(constituents),
                 ', '.join('{}x{}'.format(m, label) for label, m in sorted(constituents.items())))
    return result


def slice_multiplicity(space, dw, dim_guard=None):
    """
    `m_lambda = dim Hom_K(V_lambda, W)` for the slice representation `W`.
    """
    return branch(space, dw, dim_guard).multiplicity(slice_label(space))


def spherical_multiplicity(space, dw, dim_guard=None):
    """
    Multiplicity of the trivial K-representation in `V_lambda`.
    """
    return branch(space, dw, dim_guard).multiplicity(trivial_label(space))
