"""Серии на случайных отображениях с фиксированным seed"""
import random
from fractions import Fraction

import pytest

from domain.entity.certificate import ExpectedSign
from domain.entity.poly import Poly
from domain.entity.verdict import Conclusion
from domain.service.git_service import GitService
from domain.service.henon_service import HenonService
from domain.value_object.weight_vector import WeightVector
from strategies import random_map, random_weights

SEED = 20190101
WITNESS = WeightVector.of(1, 0, -1)


@pytest.fixture
def quadratic_henon_maps(henon_service):
    rng = random.Random(SEED)
    return [henon_service.homogenize_map(henon_service.random_quadratic_plane(rng)) for _ in range(25)]


def test_quadratic_henon_mu_is_zero(git_service, quadratic_henon_maps):
    assert all(git_service.mu(m, WITNESS) == 0 for m in quadratic_henon_maps)


@pytest.mark.parametrize("N", [2, 3, 4, 5])
def test_block_certificate_destabilizes(git_service, henon_service, N):
    rng = random.Random(SEED + N)
    for k in range(2, N + 1):
        for d in range(2, 5):
            if d == 2 and k == 2:
                continue
            parameters = GitService.certificate_parameters(N, k, d)
            weights = git_service.block_certificate(N, k, d)
            for _ in range(5):
                spec = henon_service.random_spec(rng, N, k, d)
                m = henon_service.homogenize_map(spec)
                certificate = git_service.verify_certificate(m, weights, ExpectedSign.POSITIVE)
                assert certificate.verified, spec.to_text()
                table = git_service.symbolic_table(spec)
                assert [value for _, value in table.evaluate(parameters)] == git_service.mu_multiset(m, weights)


def test_quadratic_henon_is_semistable(classify_service, git_service, quadratic_henon_maps):
    for m in quadratic_henon_maps:
        verdict = classify_service.rat22_verdict(m)
        assert verdict.conclusion is Conclusion.SEMISTABLE, m.format()
        assert git_service.find_destabilizing_diag(m, strict=True) is None
        assert git_service.find_destabilizing_diag(m, strict=False).mu == 0


def test_quadratic_henon_iterate_degrees(rational_maps, quadratic_henon_maps, parse_map):
    for m in quadratic_henon_maps[:10]:
        assert rational_maps.iterate_degrees(m, 3) == [2, 4, 8]
    assert rational_maps.iterate_degrees(parse_map("[y^2 : z*x : z^2]"), 2) == [2, 2]


def test_line_image_trichotomy(classify_service, henon_service):
    rng = random.Random(SEED)
    for _ in range(10):
        spec = henon_service.random_quadratic_plane(rng)
        report = classify_service.henon_line_audit(spec, rng=rng, samples=5)
        assert len(report.checks) == 11
        assert report.passed, report.summary()


def test_phi_bar_is_fibered_over_x(classify_service, henon_service):
    rng = random.Random(SEED)
    t = Poly.variable(1, 0)
    for _ in range(5):
        P = (t ** 2).scale(HenonService.random_coefficient(rng)) + t.scale(rng.randint(-5, 5)) + rng.randint(-5, 5)
        F = HenonService.phi_bar(P)
        assert classify_service.fibering_centers(F).centers == ((0, 1, 0),)
        witness = classify_service.check_fibering(F, (0, 1, 0))
        assert witness.pi == ((1, 0, 0), (0, 0, 1))
        L1, L2 = (Poly.linear_form(row) for row in witness.pi)
        for L, G in zip((L1, L2), witness.G):
            assert L.compose(list(F.coords)) == G.compose([L1, L2])


def test_mu_matches_conjugation(git_service):
    rng = random.Random(SEED)
    for _ in range(50):
        N = rng.choice([2, 3])
        d = rng.choice([2, 3])
        m = random_map(rng, N, d)
        w = random_weights(rng, N + 1)
        assert git_service.mu(m, w) == git_service.mu_by_conjugation(m, w)


@pytest.mark.parametrize("t", [1, 2, Fraction(-1, 3)])
def test_family_morphisms(henon_service, t):
    assert henon_service.is_family_morphism(2, t)
