#!/usr/bin/env python
# coding: utf-8

"""
Spectrum of the Jacobi operator of the cubic focal manifolds `KP^2` in `S^n`.

On the normal bundle the Jacobi operator is `Cas^{G,b_K} - 2d`, so every
irreducible `V_lambda` of G with slice multiplicity `m_lambda > 0` contributes
`m_lambda * dim(V_lambda)` eigensections with eigenvalue `c_lambda - 2d`.
"""

import enum
import logging
from dataclasses import dataclass
from fractions import Fraction

from . import branching
from . import clifford
from . import normalization
from . import rep_core
from . import root_data
from .errors import FocalError
from .errors import InputError
from .errors import InternalError
from .errors import InvariantViolation
from .normalization import CasimirGroup
from .normalization import FocalSpaceId
from .root_data import DominantWeight

logger = logging.getLogger(__name__)


class SpectrumClass(enum.Enum):
    NEGATIVE = 'negative'
    NULL = 'null'
    POSITIVE = 'positive'

    @classmethod
    def of(cls, eigenvalue):
        if eigenvalue < 0:
            return cls.NEGATIVE
        if eigenvalue == 0:
            return cls.NULL
        return cls.POSITIVE


@dataclass(frozen=True)
class TableFamily(object):
    """
    A one-parameter family of representations listed in the published
    spectral tables, with its closed-form Casimir eigenvalue for `b_K`.

    Attributes:
        name(str):          the family written in fundamental weights.
        start(int):         least admissible `k`.
        levels:             `k -> tuple` of levels.
        eigenvalue:         `k -> Fraction`.
    """

    name: str
    start: int
    levels: object
    eigenvalue: object

    def weight(self, k):
        if k < self.start:
            raise InternalError('{}: k={} is below {}'.format(self.name, k, self.start))
        return DominantWeight(self.levels(k))


_t = Fraction(4, 3)

_families = {
    FocalSpaceId.CP2: (
        TableFamily('(k+1)w1+(k+1)w2', 0,
                    lambda k: (k + 1, k + 1),
                    lambda k: _t * (k + 1) * (k + 3)),
        TableFamily('(k-1)w1+(k+2)w2', 1,
                    lambda k: (k - 1, k + 2),
                    lambda k: _t * (k + 1) * (k + 2)),
        TableFamily('(k+3)w1+kw2', 0,
                    lambda k: (k + 3, k),
                    lambda k: _t * (k + 2) * (k + 3)),
    ),
    FocalSpaceId.HP2: (
        TableFamily('kw2', 1,
                    lambda k: (0, k, 0),
                    lambda k: _t * k * (k + 5)),
        TableFamily('w1+kw2+w3', 0,
                    lambda k: (1, k, 1),
                    lambda k: _t * (k * k + 8 * k + 12)),
    ),
    FocalSpaceId.OP2: (
        TableFamily('kw4', 1,
                    lambda k: (0, 0, 0, k),
                    lambda k: _t * (k * k + 11 * k)),
        TableFamily('w3+kw4', 0,
                    lambda k: (0, 0, 1, k),
                    lambda k: _t * (k * k + 14 * k + 24)),
    ),
}


def table_families(space):
    space = normalization.focal_space(space)
    return list(_families[space.id])


def family_of(space, dw):
    """
    Find the table family containing `dw`.

    Returns:
        (TableFamily, int): the family and its parameter `k`, or None.
    """

    space = normalization.focal_space(space)
    if not isinstance(dw, DominantWeight):
        dw = DominantWeight(tuple(dw))

    for fam in _families[space.id]:
        for k in range(fam.start, max(dw.levels) + 2):
            if fam.levels(k) == dw.levels:
                return fam, k
    return None


@dataclass(frozen=True)
class SpectrumEntry(object):
    """
    One irreducible `V_lambda` contributing to the normal-bundle spectrum.

    Attributes:
        weight(DominantWeight):         `lambda`.
        casimir(Fraction):              `c_lambda` for `b_K`.
        jacobi_eigenvalue(Fraction):    `c_lambda - 2d`.
        dim(int):                       `dim V_lambda`.
        multiplicity(int):              `m_lambda`.
        classification(SpectrumClass):  sign of `jacobi_eigenvalue`.
        family(str):                    name of the table family, or None.
    """

    weight: DominantWeight
    casimir: Fraction
    jacobi_eigenvalue: Fraction
    dim: int
    multiplicity: int
    classification: SpectrumClass
    family: str = None

    def __post_init__(self):
        if SpectrumClass.of(self.jacobi_eigenvalue) != self.classification:
            raise InternalError('{}: eigenvalue {} classified {}'.format(
                self.weight, self.jacobi_eigenvalue, self.classification.value))

    @property
    def eigenspace_dim(self):
        return self.multiplicity * self.dim


@dataclass(frozen=True)
class SpectrumReport(object):
    """
    Attributes:
        space(FocalSpace):              the focal manifold.
        margin(Fraction):               headroom above `2d` used to list entries.
        entries(tuple):                 of `SpectrumEntry`, sorted by Casimir then levels.
        index(int):                     sum of `m * dim` over negative entries.
        nullity(int):                   sum of `m * dim` over null entries.
        killing_nullity(int):           `dim SO(n+1) - dim G`.
        expanded_consistency(bool):     the curvature form of the operator
                                        agrees with the Casimir form.
        codimension(int):               `n - d`.
        index_lower_bound(int):         `n + 1`.
        attains_lower_bound(bool):      `index == n + 1`.
    """

    space: object
    margin: Fraction
    entries: tuple
    index: int
    nullity: int
    killing_nullity: int
    expanded_consistency: bool
    codimension: int
    index_lower_bound: int
    attains_lower_bound: bool

    def entries_of(self, cls):
        return [e for e in self.entries if e.classification == cls]


def slice_casimir(space):
    """
    Casimir eigenvalue of the slice representation for `b_K` restricted to
    the first factor of K. Equals `2d/3`.
    """

    space = normalization.focal_space(space)
    k = root_data.build_root_system(space.isotropy_alg)
    s = normalization.casimir_dual_scale(space, CasimirGroup.ISOTROPY)
    return rep_core.casimir_eigenvalue(k, DominantWeight(space.slice_levels), s)


def expanded_shift(space):
    """
    `-Ric_perp + A` as a multiple of the identity, read off the Clifford
    system. Equals `4d/3`.
    """
    space = normalization.focal_space(space)
    ric, a = clifford.jacobi_curvature_constants(space)
    return -ric + a


def _check_shift(space):
    shift = slice_casimir(space) + expanded_shift(space)
    if shift != 2 * space.d:
        raise InvariantViolation('{}: slice Casimir plus curvature shift'.format(space.name),
                                 2 * space.d, shift)


def jacobi_eigenvalue(space, dw):
    """
    Eigenvalue `c_lambda - 2d` of the Jacobi operator on the
    `V_lambda`-isotypic sections of the normal bundle.

    Args:
        space(FocalSpace):      the focal manifold.
        dw(DominantWeight):     highest weight of a G-representation.

    Returns:
        Fraction

    Raises:
        InvariantViolation: if `slice_casimir + 4d/3 != 2d`.
    """

    space = normalization.focal_space(space)
    _check_shift(space)

    g = root_data.build_root_system(space.g_alg)
    s = normalization.casimir_dual_scale(space, CasimirGroup.AMBIENT)
    return rep_core.casimir_eigenvalue(g, dw, s) - 2 * space.d


def killing_nullity(space):
    """
    `dim SO(n+1) - dim G`: the normal projections of Killing fields of the
    sphere that do not come from G.
    """
    space = normalization.focal_space(space)
    g = root_data.build_root_system(space.g_alg)
    return (space.n + 1) * space.n // 2 - g.algebra_dim


def index_bounds(space):
    """
    Returns:
        (int, int): the codimension `n - d`, a lower bound for the index of
            any minimal submanifold, and `n + 1`, the bound for one that is
            not totally geodesic.
    """
    space = normalization.focal_space(space)
    return space.n - space.d, space.n + 1


def _resolve_margin(margin):
    if margin is None:
        margin = Fraction(0)
    margin = Fraction(margin)
    if margin < 0:
        raise InputError('margin', margin, 'the margin must be non-negative')
    return margin


def compute_spectrum(space, margin=None, dim_guard=None):
    """
    Enumerate every G-representation with `c_lambda <= 2d + margin`, branch
    it to K and collect those containing the slice representation.

    Args:
        space:              `FocalSpace`, `FocalSpaceId` or a name such as ``"cp2"``.
        margin:             extra Casimir headroom above `2d`. Defaults to 0.
        dim_guard(int):     passed on to the weight-system builder.

    Returns:
        SpectrumReport

    Raises:
        ResourceError:      if a representation exceeds the guard.
        InvariantViolation: if the operator's two forms disagree, or Killing
            nullity exceeds nullity.
    """

    space = normalization.focal_space(space)
    margin = _resolve_margin(margin)

    expanded_consistency = True
    try:
        _check_shift(space)
    except InvariantViolation as e:
        logger.error(repr(e) + ' while checking the Jacobi shift')
        expanded_consistency = False

    g = root_data.build_root_system(space.g_alg)
    s = normalization.casimir_dual_scale(space, CasimirGroup.AMBIENT)
    top = 2 * space.d

    entries = []
    for dw in rep_core.enumerate_dominant(g, s, top + margin):
        try:
            m = branching.slice_multiplicity(space, dw, dim_guard)
        except FocalError as e:
            logger.error(repr(e) + ' while branching {} {}'.format(space.name, dw))
            raise

        logger.debug('%s %s: m=%d', space.name, dw, m)
        if m == 0:
            continue

        c = rep_core.casimir_eigenvalue(g, dw, s)
        fam = family_of(space, dw)
        entries.append(SpectrumEntry(
            weight=dw,
            casimir=c,
            jacobi_eigenvalue=c - top,
            dim=rep_core.weyl_dimension(g, dw),
            multiplicity=m,
            classification=SpectrumClass.of(c - top),
            family=fam[0].name if fam is not None else None,
        ))

    entries.sort(key=lambda e: (e.casimir, e.weight))

    index = sum(e.eigenspace_dim for e in entries if e.classification == SpectrumClass.NEGATIVE)
    nullity = sum(e.eigenspace_dim for e in entries if e.classification == SpectrumClass.NULL)
    kn = killing_nullity(space)
    if kn > nullity:
        raise InvariantViolation('{}: Killing nullity bounded by nullity'.format(space.name), nullity, kn)

    codim, lower = index_bounds(space)
    report = SpectrumReport(
        space=space,
        margin=margin,
        entries=tuple(entries),
        index=index,
        nullity=nullity,
        killing_nullity=kn,
        expanded_consistency=expanded_consistency,
        codimension=codim,
        index_lower_bound=lower,
        attains_lower_bound=index == lower,
    )

    logger.debug('%s: index=%d nullity=%d killing nullity=%d', space.name, index, nullity, kn)
    return report


def first_laplace_eigenvalue(space, dim_guard=None):
    """
    Least nonzero eigenvalue of the Laplacian on functions of `KP^2` with
    the induced metric: the least Casimir of a nonzero spherical
    representation. Equals `d`.

    Raises:
        InternalError: if no spherical representation lies below `2d`.
    """

    space = normalization.focal_space(space)
    g = root_data.build_root_system(space.g_alg)
    s = normalization.casimir_dual_scale(space, CasimirGroup.AMBIENT)

    for dw in rep_core.enumerate_dominant(g, s, 2 * space.d):
        if dw.is_zero():
            continue
        if branching.spherical_multiplicity(space, dw, dim_guard) > 0:
            return rep_core.casimir_eigenvalue(g, dw, s)

    raise InternalError('{}: no spherical representation with Casimir <= {}'.format(
        space.name, 2 * space.d))
