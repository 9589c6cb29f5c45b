#!/usr/bin/env python
# coding: utf-8

"""
Named checks of every published constant and result the package reproduces.

A check is a zero-argument callable returning `(ok, detail)`. `run_checks`
runs them all; an exception inside a check counts as a failure.
"""

import functools
import logging
from dataclasses import dataclass
from fractions import Fraction

from . import branching
from . import clifford
from . import jacobi
from . import normalization
from . import rep_core
from . import root_data
from .normalization import CasimirGroup
from .normalization import FocalSpaceId
from .root_data import DominantWeight
from .root_data import RootSystemId

logger = logging.getLogger(__name__)

# Last table member whose slice multiplicity is recomputed, per family.
TABLE_LAST_BRANCHED = 5
# Table members whose closed-form Casimir is compared, per family.
TABLE_MEMBERS_EVALUATED = 6

# OP2 members past these stay out of the branching comparison: 5w4 and w3+kw4 for k >= 3.
_last_branched = {
    (FocalSpaceId.OP2, 'kw4'): 4,
    (FocalSpaceId.OP2, 'w3+kw4'): 2,
}


@dataclass(frozen=True)
class Check(object):
    anchor: str
    description: str
    func: object


@dataclass(frozen=True)
class CheckResult(object):
    anchor: str
    description: str
    ok: bool
    detail: str

    def to_dict(self):
        return {'anchor': self.anchor,
                'description': self.description,
                'ok': self.ok,
                'detail': self.detail}

    def __str__(self):
        return '{}: {} ... {}'.format(self.anchor, self.description, 'OK' if self.ok else 'FAIL')


def _equal(actual, expected):
    return actual == expected, 'got {}, expected {}'.format(actual, expected)


def _space(space_id):
    return normalization.focal_space(space_id)


_spaces = (FocalSpaceId.CP2, FocalSpaceId.HP2, FocalSpaceId.OP2)

_gauss_scalars = {4: Fraction(8), 8: Fraction(128, 3), 16: Fraction(192)}

_focal_metric = {
    FocalSpaceId.CP2: Fraction(1, 4),
    FocalSpaceId.HP2: Fraction(3, 32),
    FocalSpaceId.OP2: Fraction(1, 24),
}

_strange = {
    RootSystemId.A1: Fraction(1, 4),
    RootSystemId.A2: Fraction(1, 6),
    RootSystemId.C2: Fraction(1, 12),
    RootSystemId.C3: Fraction(1, 16),
    RootSystemId.B4: Fraction(1, 14),
    RootSystemId.F4: Fraction(1, 18),
}

_restriction = {
    FocalSpaceId.CP2: Fraction(3, 2),
    FocalSpaceId.HP2: Fraction(4, 3),
    FocalSpaceId.OP2: Fraction(9, 7),
}

_dual_scales = (
    (FocalSpaceId.CP2, CasimirGroup.AMBIENT, Fraction(2, 3)),
    (FocalSpaceId.HP2, CasimirGroup.AMBIENT, Fraction(2, 3)),
    (FocalSpaceId.OP2, CasimirGroup.AMBIENT, Fraction(4, 3)),
    (FocalSpaceId.OP2, CasimirGroup.ISOTROPY, Fraction(4, 3)),
)

_slice_casimirs = {
    FocalSpaceId.CP2: Fraction(8, 3),
    FocalSpaceId.HP2: Fraction(16, 3),
    FocalSpaceId.OP2: Fraction(32, 3),
}

_dimensions = (
    (RootSystemId.A2, (1, 1), 8),
    (RootSystemId.A2, (3, 0), 10),
    (RootSystemId.A2, (0, 3), 10),
    (RootSystemId.C3, (0, 1, 0), 14),
    (RootSystemId.C3, (1, 0, 1), 70),
    (RootSystemId.F4, (0, 0, 0, 1), 26),
    (RootSystemId.F4, (0, 0, 1, 0), 273),
)

_totals = {
    FocalSpaceId.CP2: (8, 20, 20),
    FocalSpaceId.HP2: (14, 70, 70),
    FocalSpaceId.OP2: (26, 273, 273),
}

_literature = {
    FocalSpaceId.CP2: Fraction(4, 3),
    FocalSpaceId.HP2: Fraction(32, 3),
    FocalSpaceId.OP2: Fraction(4, 3),
}


def _check_totals(space_id, r):
    got = (r.index, r.nullity, r.killing_nullity)
    ok = got == _totals[space_id] and r.index == r.space.n + 1 and r.expanded_consistency
    return ok, 'index, nullity, Killing nullity = {}, n+1 = {}'.format(got, r.space.n + 1)


def _check_negative_entry(space_id, r):
    neg = r.entries_of(jacobi.SpectrumClass.NEGATIVE)
    ok = (len(neg) == 1
          and neg[0].dim == r.space.n + 1
          and neg[0].casimir == r.space.d)
    return ok, 'negative entries: {}'.format(
        ', '.join('{} dim {} casimir {}'.format(e.weight, e.dim, e.casimir) for e in neg))


def branched_members(space):
    """
    Table members whose slice multiplicity `verify` recomputes.

    Returns:
        list: of `(TableFamily, k)`.
    """

    space = _space(space)
    members = []
    for fam in jacobi.table_families(space):
        last = _last_branched.get((space.id, fam.name), TABLE_LAST_BRANCHED)
        members.extend((fam, k) for k in range(fam.start, last + 1))
    return members


@functools.lru_cache(maxsize=None)
def _slice_multiplicity(space_id, dw):
    return branching.slice_multiplicity(_space(space_id), dw)


def table_slice_multiplicity(space, dw):
    """
    `branching.slice_multiplicity`, remembered across runs. Branching does not
    depend on the metric normalization.
    """
    return _slice_multiplicity(_space(space).id, dw)


def _check_families(space_id):
    space = _space(space_id)
    g = root_data.build_root_system(space.g_alg)
    s = normalization.casimir_dual_scale(space, CasimirGroup.AMBIENT)

    bad = []
    for fam in jacobi.table_families(space):
        for k in range(fam.start, fam.start + TABLE_MEMBERS_EVALUATED):
            c = rep_core.casimir_eigenvalue(g, fam.weight(k), s)
            if c != fam.eigenvalue(k):
                bad.append('{} k={}: casimir {} != {}'.format(fam.name, k, c, fam.eigenvalue(k)))

    members = branched_members(space)
    for fam, k in members:
        m = table_slice_multiplicity(space, fam.weight(k))
        if m != 1:
            bad.append('{} k={}: slice multiplicity {}'.format(fam.name, k, m))

    if bad:
        return False, '; '.join(bad)
    return True, '{} families, {} members branched'.format(len(jacobi.table_families(space)), len(members))


def _check_completeness(space_id, r):
    stray = [str(e.weight) for e in r.entries if e.family is None]
    return not stray, 'outside the tables: {}'.format(', '.join(stray) or 'none')


def _check_clifford(d):
    cs = clifford.build_clifford_system(d)
    failures = clifford.clifford_failures(cs)
    traces = [int(p.trace()) for p in cs.matrices]
    if any(traces):
        failures.append('traces {}'.format(traces))
    if len(cs.matrices) != d // 2 + 1:
        failures.append('{} generators'.format(len(cs.matrices)))

    total = clifford.shape_trace_sum(cs)
    if total != Fraction(d, 3) * (d // 2 + 1):
        failures.append('shape trace sum {}'.format(total))
    if total + normalization.gauss_scalar(d) != d * (d - 1):
        failures.append('gauss scalar plus shape trace sum is not d(d-1)')

    return not failures, '; '.join(failures) or '{} generators'.format(len(cs.matrices))


def _check_restriction_routes(space_id):
    space = _space(space_id)
    a = normalization.restriction_factor_by_trace(space).value
    b = normalization.restriction_factor_by_strange(space).value
    return a == b, 'trace-form route {}, strange-formula route {}'.format(a, b)


def _check_reciprocity(space_id):
    space = _space(space_id)
    r = normalization.restriction_factor(space)
    g = root_data.build_root_system(space.g_alg)
    k = root_data.build_root_system(space.isotropy_alg)
    lhs = normalization.strange_dual_factor(k).value
    # the Killing form of k is b_G/r on k, so its dual product is r times that of b_G
    rhs = (normalization.strange_dual_factor(g) * normalization.form_scale(1 / r.value).dual()).value
    return lhs == rhs, 'dual factor of K {}, restricted from G {}'.format(lhs, rhs)


def all_checks():
    """
    Returns:
        list: of `Check`, in the order they are reported.
    """

    checks = []
    reports = {}

    def report(sid):
        if sid not in reports:
            reports[sid] = jacobi.compute_spectrum(sid)
        return reports[sid]

    def add(anchor, description, func):
        checks.append(Check(anchor, description, func))

    for d, v in sorted(_gauss_scalars.items()):
        add('gauss equation', 'scalar curvature of the focal metric, d={} is {}'.format(d, v),
            lambda d=d, v=v: _equal(normalization.gauss_scalar(d), v))

    for sid in _spaces:
        add('gauss equation', '{}: b_K = {} b_Killing'.format(sid.value, _focal_metric[sid]),
            lambda sid=sid: _equal(normalization.focal_metric_factor(_space(sid)).value, _focal_metric[sid]))

    for rid, c in _strange.items():
        add('strange formula', '{}: dual of the Killing form is {} times the dot product'.format(rid.value, c),
            lambda rid=rid, c=c: _equal(normalization.strange_dual_factor(root_data.build_root_system(rid)).value, c))

    for sid in _spaces:
        add('restriction', '{}: b_G restricted to K is {} b_K'.format(sid.value, _restriction[sid]),
            lambda sid=sid: _equal(normalization.restriction_factor(_space(sid)).value, _restriction[sid]))

    for sid in (FocalSpaceId.CP2, FocalSpaceId.HP2):
        add('restriction', '{}: trace-form and strange-formula routes agree'.format(sid.value),
            lambda sid=sid: _check_restriction_routes(sid))

    for sid in _spaces:
        add('restriction', '{}: form scaling and dual scaling are reciprocal'.format(sid.value),
            lambda sid=sid: _check_reciprocity(sid))

    for sid, which, v in _dual_scales:
        add('casimir scale', '{} {}: Casimir = {} <l, l+2rho>'.format(sid.value, which.value, v),
            lambda sid=sid, which=which, v=v: _equal(
                normalization.casimir_dual_scale(_space(sid), which).value, v))

    for sid in _spaces:
        add('slice casimir', '{}: Casimir of the slice representation is {}'.format(sid.value, _slice_casimirs[sid]),
            lambda sid=sid: _equal(jacobi.slice_casimir(sid), _slice_casimirs[sid]))

    for sid in _spaces:
        add('jacobi operator', '{}: slice Casimir + 4d/3 = 2d'.format(sid.value),
            lambda sid=sid: _equal(jacobi.slice_casimir(sid) + jacobi.expanded_shift(sid), 2 * _space(sid).d))

    for rid, levels, dim in _dimensions:
        dw = DominantWeight(levels)
        add('dimension', '{} {}: dim = {}'.format(rid.value, dw, dim),
            lambda rid=rid, dw=dw, dim=dim: _equal(
                rep_core.weyl_dimension(root_data.build_root_system(rid), dw), dim))

    for sid in _spaces:
        add('spectrum tables', '{}: closed forms and slice multiplicity 1'.format(sid.value),
            lambda sid=sid: _check_families(sid))

    for sid in _spaces:
        add('index theorem', '{}: index, nullity, Killing nullity = {}'.format(sid.value, _totals[sid]),
            lambda sid=sid: _check_totals(sid, report(sid)))

    for sid in _spaces:
        add('index theorem', '{}: one negative representation, of dimension n+1 and Casimir d'.format(sid.value),
            lambda sid=sid: _check_negative_entry(sid, report(sid)))

    for sid in _spaces:
        add('spectrum tables', '{}: no contributing representation outside the tables'.format(sid.value),
            lambda sid=sid: _check_completeness(sid, report(sid)))

    for sid in _spaces:
        add('first eigenvalue', '{}: lambda_1 = d = {}'.format(sid.value, _space(sid).d),
            lambda sid=sid: _equal(jacobi.first_laplace_eigenvalue(sid), _space(sid).d))

    for sid in _spaces:
        add('spectrum tables', '{}: published eigenvalues scale by {}'.format(sid.value, _literature[sid]),
            lambda sid=sid: _equal(normalization.literature_scale_factor(_space(sid)), _literature[sid]))

    for d in (4, 8, 16):
        add('clifford system', 'd={}: symmetric anticommuting traceless involutions'.format(d),
            lambda d=d: _check_clifford(d))

    return checks


def run_checks(checks=None):
    """
    Run `checks`, all of them by default.

    Returns:
        list: of `CheckResult`.
    """

    if checks is None:
        checks = all_checks()

    results = []
    for c in checks:
        try:
            ok, detail = c.func()
        except Exception as e:
            logger.error(repr(e) + ' while checking ' + c.description)
            ok, detail = False, '{}: {}'.format(type(e).__name__, str(e).replace('\n', ' '))

        results.append(CheckResult(c.anchor, c.description, bool(ok), detail))
        logger.info('%s: %s', c.description, 'OK' if ok else 'FAIL: ' + detail)

    return results
