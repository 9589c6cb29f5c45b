#!/usr/bin/env python
# coding: utf-8

"""
Representation kernels on top of `root_data`: Weyl dimension formula,
Freudenthal multiplicity recursion, Casimir eigenvalues and the enumeration of
dominant weights below a Casimir bound.
"""

import logging
from dataclasses import dataclass
from dataclasses import field
from fractions import Fraction

from . import root_data
from .errors import InputError
from .errors import InternalError
from .errors import ResourceError
from .normalization import ScaleMeaning
from .root_data import DominantWeight
from .root_data import WeightVector

logger = logging.getLogger(__name__)

DEFAULT_DIM_GUARD = 10 ** 5


@dataclass(frozen=True)
class WeightSystem(object):
    """
    All weights of the irreducible representation `rep`, with multiplicities.
    """

    rep: DominantWeight
    entries: dict = field(compare=False)

    def dimension(self):
        return sum(self.entries.values())

    def multiplicity(self, mu):
        return self.entries.get(WeightVector(mu), 0)


def _check_levels(rs, dw):
    if not isinstance(dw, DominantWeight):
        dw = DominantWeight(tuple(dw))
    if len(dw.levels) != rs.rank:
        raise InputError('levels', dw.levels,
                         'expected {} levels for {}'.format(rs.rank, rs.id.value))
    return dw


def levels_of(rs, mu):
    """
    The coordinates `<mu, alpha_i^vee>` of `mu` in the fundamental-weight
    basis.
    """
    mu = WeightVector(mu)
    return tuple(mu.dot(c) for c in rs.simple_coroots)


def is_dominant(rs, mu):
    return all(x >= 0 for x in levels_of(rs, mu))


def dominant_conjugate(rs, mu):
    """
    The dominant element of the Weyl orbit of `mu`.
    """

    mu = WeightVector(mu)
    while True:
        for i, c in enumerate(rs.simple_coroots):
            if mu.dot(c) < 0:
                mu = root_data.simple_reflection(rs, mu, i)
                break
        else:
            return mu


def weyl_orbit(rs, mu):
    mu = WeightVector(mu)
    orbit = {mu}
    todo = [mu]
    while todo:
        v = todo.pop()
        for i in range(rs.rank):
            w = root_data.simple_reflection(rs, v, i)
            if w not in orbit:
                orbit.add(w)
                todo.append(w)
    return orbit


def dominant_weight_from_vector(rs, mu):
    """
    Inverse of `root_data.weight_of` on dominant integral weights.

    Raises:
        InputError: if `mu` is not a dominant integral weight of `rs`.
    """

    mu = WeightVector(mu)
    levels = levels_of(rs, mu)
    if any(x < 0 or x.denominator != 1 for x in levels):
        raise InputError('mu', mu, 'not a dominant integral weight of ' + rs.id.value)

    dw = DominantWeight(tuple(int(x) for x in levels))
    if root_data.weight_of(rs, dw) != mu:
        raise InputError('mu', mu, 'not in the weight lattice of ' + rs.id.value)
    return dw


def weyl_dimension(rs, dw):
    """
    Weyl dimension formula: the product over positive roots `alpha` of
    `<lambda + rho, alpha> / <rho, alpha>`.

    Args:
        rs(RootSystem):         root system.
        dw(DominantWeight):     highest weight.

    Returns:
        int
    """

    dw = _check_levels(rs, dw)
    rho = rs.weyl_vector
    shifted = root_data.weight_of(rs, dw) + rho

    dim = Fraction(1)
    for alpha in rs.positive_roots:
        dim *= shifted.dot(alpha) / rho.dot(alpha)

    if dim.denominator != 1:
        raise InternalError('{} {}: non-integral Weyl dimension {}'.format(rs.id.value, dw, dim))
    return int(dim)


def casimir_value(rs, dw):
    """
    `<lambda, lambda + 2 rho>` in standard coordinates.
    """
    dw = _check_levels(rs, dw)
    lam = root_data.weight_of(rs, dw)
    return lam.dot(lam + rs.weyl_vector * 2)


def casimir_eigenvalue(rs, dw, s):
    """
    Freudenthal formula `c = s * <lambda, lambda + 2 rho>`.

    Args:
        rs(RootSystem):         root system.
        dw(DominantWeight):     highest weight.
        s(MetricScale):         an `INDUCED_ON_DUAL` scale, as returned by
                                `normalization.casimir_dual_scale`.

    Returns:
        Fraction
    """

    if s.meaning != ScaleMeaning.INDUCED_ON_DUAL:
        raise InputError('s', s, 'a Casimir eigenvalue needs the scale induced on the dual')
    return s.value * casimir_value(rs, dw)


def _resolve_guard(dim_guard):
    if dim_guard is None:
        dim_guard = DEFAULT_DIM_GUARD
    return dim_guard


def _dominant_weights_below(rs, lam):
    """
    Dominant weights reachable from `lam` by subtracting positive roots,
    highest first.
    """

    found = {lam}
    todo = [lam]
    while todo:
        mu = todo.pop()
        for alpha in rs.positive_roots:
            nu = mu - alpha
            if nu not in found and is_dominant(rs, nu):
                found.add(nu)
                todo.append(nu)

    rho = rs.weyl_vector
    return sorted(found, key=lambda mu: (-mu.dot(rho), tuple(-x for x in mu)))


def weight_system(rs, dw, dim_guard=None):
    """
    Build the full weight multiset of `V_lambda` by the Freudenthal
    recursion over dominant weights, then spread each multiplicity over its
    Weyl orbit.

    Args:
        rs(RootSystem):         root system.
        dw(DominantWeight):     highest weight.
        dim_guard(int):         refuse representations larger than this.
                                Defaults to `DEFAULT_DIM_GUARD`.

    Returns:
        WeightSystem

    Raises:
        ResourceError:  if the Weyl dimension exceeds `dim_guard`.
        InternalError:  if the recursion hits a zero denominator or a
                        non-integral multiplicity.
    """

    dw = _check_levels(rs, dw)
    dim_guard = _resolve_guard(dim_guard)

    dim = weyl_dimension(rs, dw)
    if dim > dim_guard:
        raise ResourceError(dim, dim_guard)

    rho = rs.weyl_vector
    lam = root_data.weight_of(rs, dw)
    top = (lam + rho).dot(lam + rho)

    conjugates = {}

    def dominant_mult(mu):
        if mu not in conjugates:
            conjugates[mu] = dominant_conjugate(rs, mu)
        return mult.get(conjugates[mu], 0)

    dominant = _dominant_weights_below(rs, lam)
    mult = {lam: 1}

    for mu in dominant[1:]:
        denom = top - (mu + rho).dot(mu + rho)
        if denom == 0:
            raise InternalError('{} {}: zero Freudenthal denominator at {}'.format(rs.id.value, dw, mu))

        total = Fraction(0)
        for alpha in rs.positive_roots:
            k = 1
            while True:
                nu = mu + alpha * k
                m = dominant_mult(nu)
                if m == 0:
                    break
                total += m * nu.dot(alpha)
                k += 1

        m = 2 * total / denom
        if m < 0 or m.denominator != 1:
            raise InternalError('{} {}: multiplicity {} at {}'.format(rs.id.value, dw, m, mu))
        mult[mu] = int(m)

    entries = {}
    for mu, m in mult.items():
        if m == 0:
            continue
        for w in weyl_orbit(rs, mu):
            entries[w] = m

    ws = WeightSystem(rep=dw, entries=entries)
    if ws.dimension() != dim:
        raise InternalError('{} {}: weight system has {} weights, Weyl dimension is {}'.format(
            rs.id.value, dw, ws.dimension(), dim))

    logger.debug('%s %s: %d distinct weights, %d dominant, dim %d',
                 rs.id.value, dw, len(entries), len(mult), dim)
    return ws


def enumerate_dominant(rs, s, bound):
    """
    All dominant weights whose Casimir eigenvalue is at most `bound`.

    A depth-first walk adds fundamental weights in non-decreasing index order
    starting from 0, so each weight is reached once. Adding a fundamental
    weight strictly raises the Casimir eigenvalue, so every prefix of a path
    to an admissible weight is admissible too and pruning is exact.

    Args:
        rs(RootSystem):     root system.
        s(MetricScale):     scale passed to `casimir_eigenvalue`.
        bound:              rational upper bound, inclusive.

    Returns:
        list: of `DominantWeight`, sorted by Casimir eigenvalue then levels.
    """

    bound = Fraction(bound)
    if bound < 0:
        raise InputError('bound', bound, 'the Casimir bound must be non-negative')

    found = []
    zero = DominantWeight.zero(rs.rank)
    stack = [(zero, 0, Fraction(0))]

    while stack:
        dw, start, c = stack.pop()
        found.append((c, dw))

        for i in range(start, rs.rank):
            levels = list(dw.levels)
            levels[i] += 1
            nxt = DominantWeight(tuple(levels))
            cn = casimir_eigenvalue(rs, nxt, s)
            if cn <= c:
                raise InternalError('{}: Casimir does not grow from {} to {}'.format(rs.id.value, dw, nxt))
            if cn <= bound:
                stack.append((nxt, i, cn))

    found.sort()
    logger.debug('%s: %d dominant weights with casimir <= %s', rs.id.value, len(found), bound)
    return [dw for _, dw in found]
