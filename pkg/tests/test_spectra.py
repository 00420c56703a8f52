import math

import numpy as np
import pytest

from fockshift import (
    left_growth_certificate,
    parse_word,
    resolvent_check,
    right_membership,
    zero_left_inverses,
)
from fockshift.spectra import IN_SPECTRUM, INCONCLUSIVE, NOT_IN_SPECTRUM
from fockshift.words import EMPTY


def test_resolvent_origin():
    report = resolvent_check((0.0, 0.0), 6)
    assert report.low_level_defect == 0.0
    assert report.top_level_defect == 0.0


def test_resolvent_single_path_tail():
    report = resolvent_check((0.5, 0.0), 8)
    assert report.low_level_defect == 0.0
    assert report.top_level_defect == pytest.approx(0.5**8, rel=1e-12)


def test_resolvent_random_points():
    rng = np.random.default_rng(4)
    for _ in range(5):
        direction = rng.standard_normal(2) + 1j * rng.standard_normal(2)
        point = tuple(0.7 * direction / np.linalg.norm(direction))
        report = resolvent_check(point, 8)
        assert report.low_level_defect <= 1e-12
        assert report.top_level_defect == pytest.approx(0.7**8, rel=1e-10)


def test_resolvent_tail_decays_geometrically():
    point = (0.4, 0.3)
    norm = math.hypot(*point)
    tops = [resolvent_check(point, depth).top_level_defect for depth in (6, 7, 8)]
    assert tops[1] / tops[0] == pytest.approx(norm, rel=1e-10)
    assert tops[2] / tops[1] == pytest.approx(norm, rel=1e-10)


def test_resolvent_requires_unit_ball():
    with pytest.raises(ValueError):
        resolvent_check((1.0, 0.2), 6)


def test_right_membership_origin():
    report = right_membership((0.0, 0.0), 6)
    assert report.verdict == IN_SPECTRUM
    assert report.defects["eigen_residual"] == 0.0


def test_right_membership_inside():
    report = right_membership((0.6, 0.3), 8)
    assert report.verdict == IN_SPECTRUM
    assert report.defects["eigen_residual"] <= 1e-12


def test_right_membership_outside():
    report = right_membership((2.0, 0.0), 8)
    assert report.verdict == NOT_IN_SPECTRUM
    assert report.defects["identity_low_levels"] <= 1e-12
    assert report.defects["identity_top_level"] > 0


def test_right_membership_boundary():
    assert right_membership((1.0, 0.0), 6).verdict == INCONCLUSIVE
    assert right_membership((1.0 + 5e-10, 0.0), 6).verdict == INCONCLUSIVE


def test_growth_marginal_sqrt_table():
    cert = left_growth_certificate((1.0, 0.0), 100, 0.0)
    assert cert.case == "marginal"
    assert cert.operator_index == 1 and cert.run_letter == 1
    assert cert.bounds[-1] == pytest.approx(10.0)
    assert cert.unbounded
    # with an assumed vacuum bound of 5 the table turns positive at k = 26
    cert = left_growth_certificate((1.0, 0.0), 30, 5.0)
    positive = [k for k, b in zip(cert.ks, cert.bounds) if b > 0]
    assert positive[0] == 26


def test_growth_geometric_table():
    cert = left_growth_certificate((2.0, 0.0), 10, 1.0)
    assert cert.case == "geometric"
    assert cert.operator_index == 2 and cert.run_letter == 1
    assert cert.bounds == pytest.approx([2.0**k for k in range(1, 11)])
    assert cert.unbounded


def test_growth_second_coordinate_symmetric():
    cert = left_growth_certificate((0.3, 1.0), 9, 0.0)
    assert cert.case == "marginal" and cert.run_letter == 2 and cert.operator_index == 2
    cert = left_growth_certificate((0.3, 1.5), 9, 2.0)
    assert cert.case == "geometric" and cert.run_letter == 2 and cert.operator_index == 1
    assert cert.bounds == pytest.approx([2.0 * 1.5**k for k in range(1, 10)])


def test_growth_tables_monotone():
    for point, bound in (((1.0, 0.0), 3.0), ((1.7, 0.2), 0.5)):
        cert = left_growth_certificate(point, 20, bound)
        assert all(b2 >= b1 for b1, b2 in zip(cert.bounds, cert.bounds[1:]))


def test_growth_requires_admissible_point():
    with pytest.raises(ValueError):
        left_growth_certificate((0.5, 0.5), 10, 1.0)


def test_zero_left_inverses_unperturbed():
    report = zero_left_inverses({}, {}, 6)
    assert report.max_identity_defect == 0.0
    assert report.reconstruction_residual <= 1e-9


def test_zero_left_inverses_perturbed():
    # (eta_i at the vacuum column) annihilates every shift range
    report = zero_left_inverses({parse_word("21"): 1.0}, {EMPTY: 0.5 - 0.25j}, 6)
    assert report.max_identity_defect == 0.0
    assert report.reconstruction_residual <= 1e-9
