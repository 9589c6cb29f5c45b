#!/usr/bin/env python
# coding: utf-8

"""
Metric-scaling constants.

An invariant inner product `c * b` on a Lie algebra induces `1/c` times the
dual product of `b` on weights, so a Casimir eigenvalue computed against
`c * b` is `1/c` times the one against `b`. `MetricScale` keeps track of which
side of that reciprocity a number lives on.
"""

import enum
import logging
from dataclasses import dataclass
from fractions import Fraction

from . import root_data
from .errors import InputError
from .errors import UnsupportedCaseError
from .root_data import RootSystemId

logger = logging.getLogger(__name__)


class FocalSpaceId(enum.Enum):
    CP2 = 'cp2'
    HP2 = 'hp2'
    OP2 = 'op2'


class ScaleMeaning(enum.Enum):
    FORM_ON_ALGEBRA = 'form_on_algebra'
    INDUCED_ON_DUAL = 'induced_on_dual'


class CasimirGroup(enum.Enum):
    AMBIENT = 'ambient_group'
    ISOTROPY = 'isotropy_group'


@dataclass(frozen=True)
class MetricScale(object):
    """
    A positive rational factor between two invariant bilinear forms
    (`FORM_ON_ALGEBRA`) or between the dual products they induce on weights
    (`INDUCED_ON_DUAL`).
    """

    value: Fraction
    meaning: ScaleMeaning

    def __post_init__(self):
        value = Fraction(self.value)
        if value <= 0:
            raise InputError('value', self.value, 'a metric scale must be positive')
        object.__setattr__(self, 'value', value)

    def dual(self):
        if self.meaning == ScaleMeaning.FORM_ON_ALGEBRA:
            other = ScaleMeaning.INDUCED_ON_DUAL
        else:
            other = ScaleMeaning.FORM_ON_ALGEBRA
        return MetricScale(1 / self.value, other)

    def __mul__(self, other):
        if other.meaning != self.meaning:
            raise InputError('other', other, 'can not compose a form scale with a dual scale')
        return MetricScale(self.value * other.value, self.meaning)

    def __str__(self):
        return '{} ({})'.format(self.value, self.meaning.value)


def form_scale(value):
    return MetricScale(value, ScaleMeaning.FORM_ON_ALGEBRA)


def dual_scale(value):
    return MetricScale(value, ScaleMeaning.INDUCED_ON_DUAL)


@dataclass(frozen=True)
class KFactor(object):
    """
    One factor of the isotropy group. `alg` is None for a circle factor.
    """

    name: str
    alg: object = None

    @property
    def is_circle(self):
        return self.alg is None


@dataclass(frozen=True)
class FocalSpace(object):
    """
    A cubic focal manifold `KP^2 = G/K` in `S^n`.

    Attributes:
        id(FocalSpaceId):       `CP2`, `HP2` or `OP2`.
        title(str):             e.g. ``"CP2 = SU(3)/U(2)"``.
        d(int):                 dimension of the focal manifold.
        n(int):                 dimension of the ambient sphere.
        g_alg(RootSystemId):    Lie algebra of G.
        k_factors(tuple):       of `KFactor`; the first one carries the slice
                                representation, the others act trivially on it.
        slice_levels(tuple):    highest weight of the slice representation on
                                the first factor.
    """

    id: FocalSpaceId
    title: str
    d: int
    n: int
    g_alg: RootSystemId
    k_factors: tuple
    slice_levels: tuple

    def __post_init__(self):
        if 2 * self.n != 3 * self.d + 2:
            raise InputError('n', self.n, 'a cubic focal manifold of dimension {} lies in '
                             'S^{}'.format(self.d, 3 * self.d // 2 + 1))

    @property
    def name(self):
        return self.id.value

    @property
    def isotropy_alg(self):
        return self.k_factors[0].alg

    @property
    def k_alg(self):
        return '+'.join(f.alg.value if f.alg is not None else 'U1' for f in self.k_factors)


_focal_spaces = {
    FocalSpaceId.CP2: FocalSpace(
        id=FocalSpaceId.CP2,
        title='CP2 = SU(3)/U(2)',
        d=4,
        n=7,
        g_alg=RootSystemId.A2,
        k_factors=(KFactor('SU(2)', RootSystemId.A1), KFactor('U(1)')),
        slice_levels=(2,),
    ),
    FocalSpaceId.HP2: FocalSpace(
        id=FocalSpaceId.HP2,
        title='HP2 = Sp(3)/Sp(2)Sp(1)',
        d=8,
        n=13,
        g_alg=RootSystemId.C3,
        k_factors=(KFactor('Sp(2)', RootSystemId.C2), KFactor('Sp(1)', RootSystemId.A1)),
        slice_levels=(0, 1),
    ),
    FocalSpaceId.OP2: FocalSpace(
        id=FocalSpaceId.OP2,
        title='OP2 = F4/Spin(9)',
        d=16,
        n=25,
        g_alg=RootSystemId.F4,
        k_factors=(KFactor('Spin(9)', RootSystemId.B4),),
        slice_levels=(1, 0, 0, 0),
    ),
}


def focal_space(key):
    """
    Look up a focal manifold by `FocalSpaceId` or by name (``"cp2"``).
    """

    if isinstance(key, FocalSpace):
        return key

    if not isinstance(key, FocalSpaceId):
        try:
            key = FocalSpaceId(str(key).lower())
        except ValueError:
            raise InputError('space', key, 'expected one of cp2, hp2, op2')

    return _focal_spaces[key]


def all_focal_spaces():
    return [_focal_spaces[k] for k in FocalSpaceId]


def normal_rank(space):
    return space.d // 2 + 1


def strange_dual_factor(rs):
    """
    The factor `c` such that the dual product of the negative Killing form is
    `c` times the standard dot product, from `b(rho, rho) = dim(g) / 24`.

    Args:
        rs(RootSystem): the root system.

    Returns:
        MetricScale: an `INDUCED_ON_DUAL` scale.
    """
    rho = rs.weyl_vector
    return dual_scale(Fraction(rs.algebra_dim, 24) / rho.dot(rho))


_matrix_size = {
    RootSystemId.A1: 2,
    RootSystemId.A2: 3,
    RootSystemId.C2: 2,
    RootSystemId.C3: 3,
}


def killing_trace_ratio(rs_id):
    """
    Ratio between the Killing form and the trace form: `2n` for su(n) and
    `2(n+1)` for sp(n).

    Raises:
        UnsupportedCaseError: for spin(9) and f4.
    """

    if rs_id not in _matrix_size:
        raise UnsupportedCaseError('rs_id', rs_id, 'only su(n) and sp(n) have a trace-form ratio here')

    size = _matrix_size[rs_id]
    if rs_id in (RootSystemId.A1, RootSystemId.A2):
        return Fraction(2 * size)
    return Fraction(2 * (size + 1))


def killing_scalar(space):
    """
    Scalar curvature of the negative Killing metric on the symmetric space
    `G/K`, which is `dim(G/K) / 2`.
    """
    return Fraction(space.d, 2)


def gauss_scalar(d):
    """
    Scalar curvature of the induced metric, from the Gauss equation summed
    over an orthonormal frame: `d(d-1) - d/3 * (d/2 + 1)`.

    Raises:
        InputError: if `d` is not 4, 8 or 16.
    """

    if d not in (4, 8, 16):
        raise InputError('d', d, 'cubic focal manifolds have dimension 4, 8 or 16')

    d = Fraction(d)
    return d * (d - 1) - d / 3 * (d / 2 + 1)


def focal_metric_factor(space):
    """
    The factor `f` with `b_K = f * b_g`, where `b_K` induces the metric from
    the sphere and `b_g` is the negative Killing form.

    Scalar curvature scales inversely with the metric, so `f` is the ratio of
    the Killing-metric scalar curvature to the Gauss-equation one.
    """

    f = killing_scalar(space) / gauss_scalar(space.d)
    logger.debug('%s: focal metric factor %s', space.name, f)
    return form_scale(f)


def restriction_factor_by_trace(space):
    """
    `b_g|_k = r * b_k` from Killing-to-trace ratios. Block embeddings
    preserve the trace form.
    """

    ratio = killing_trace_ratio(space.g_alg) / killing_trace_ratio(space.isotropy_alg)
    return form_scale(ratio)


def restriction_factor_by_strange(space):
    """
    `b_g|_k = r * b_k` from the strange formula on both algebras.

    The isotropy torus sits isometrically inside the ambient one in standard
    coordinates, so both dual products are multiples of the same dot
    product. Forms scale by the reciprocal of their dual products.
    """

    g = root_data.build_root_system(space.g_alg)
    k = root_data.build_root_system(space.isotropy_alg)

    g_form = strange_dual_factor(g).dual()
    k_form = strange_dual_factor(k).dual()
    return form_scale(g_form.value / k_form.value)


def restriction_factor(space):
    """
    `b_g|_k = r * b_k` on the semisimple factor carrying the slice
    representation.

    Classical pairs use the trace-form ratios; `f4 > spin(9)` uses the strange
    formula.
    """

    if space.g_alg in _matrix_size:
        return restriction_factor_by_trace(space)
    return restriction_factor_by_strange(space)


def casimir_dual_scale(space, which):
    """
    The rational `s` with `Cas = s * <lambda, lambda + 2 rho>` for the metric
    `b_K` on G, or its restriction to the first factor of K.

    Args:
        space(FocalSpace):      the focal manifold.
        which(CasimirGroup):    `AMBIENT` or `ISOTROPY`.

    Returns:
        MetricScale: an `INDUCED_ON_DUAL` scale.
    """

    which = CasimirGroup(which)
    form = focal_metric_factor(space)

    if which == CasimirGroup.AMBIENT:
        rs = root_data.build_root_system(space.g_alg)
    else:
        rs = root_data.build_root_system(space.isotropy_alg)
        form = form * restriction_factor(space)

    s = strange_dual_factor(rs) * form.dual()
    logger.debug('%s: %s casimir scale %s', space.name, which.value, s.value)
    return s


_reference_metric = {
    # Fubini-Study metric
    FocalSpaceId.CP2: Fraction(1, 3),
    FocalSpaceId.HP2: Fraction(1),
    FocalSpaceId.OP2: Fraction(1, 18),
}


def reference_metric_factor(space):
    """
    Metric of the published Laplace spectra of `KP^2`, as a multiple of the
    negative Killing form.
    """
    return form_scale(_reference_metric[space.id])


def literature_scale_factor(space):
    """
    Factor turning a published eigenvalue into an eigenvalue for `b_K`.
    """
    return reference_metric_factor(space).value / focal_metric_factor(space).value
