from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from domain.entity.certificate import CertificateKind, ExpectedSign
from domain.entity.poly import Poly
from domain.entity.proj_map import ProjMap
from domain.exception.errors import RangeError, StructuralError, ValidationError, VerificationError
from domain.service.git_service import NOT_STABLE, SEMISTABLE, UNSTABLE, GitService
from domain.value_object.weight_vector import ExponentFunctional, WeightVector
from strategies import proj_maps, weight_vectors


class TestWeights:
    def test_sum_must_vanish(self):
        with pytest.raises(ValidationError):
            WeightVector.of(1, 1, -1)

    def test_trivial_weight(self):
        with pytest.raises(ValidationError):
            WeightVector.of(0, 0, 0)

    def test_permuted(self):
        assert WeightVector.of(3, -1, -2).permuted([2, 0, 1]) == WeightVector.of(-1, -2, 3)

    def test_primitive(self):
        assert WeightVector.of(4, -2, -2).primitive() == WeightVector.of(2, -1, -1)

    def test_exponent_functional(self):
        functional = ExponentFunctional.from_pair(1, (1, 0, 1))
        assert functional.covector == (-1, 1, -1)
        assert functional.value([1, 0, -1]) == 0


class TestMu:
    def test_quadratic_henon(self, git_service, henon22):
        w = WeightVector.of(1, 0, -1)
        assert sorted(git_service.mu_multiset(henon22, w)) == [0, 0, 1, 2]
        assert git_service.mu(henon22, w) == 0

    def test_cubic_henon_certificate(self, git_service, henon23):
        assert git_service.mu(henon23, WeightVector.of(4, -1, -3)) == 1

    def test_length_mismatch(self, git_service, henon22):
        with pytest.raises(StructuralError):
            git_service.mu(henon22, WeightVector.of(1, -1))

    @settings(max_examples=200, deadline=None)
    @given(proj_maps(), weight_vectors(3), st.integers(1, 5))
    def test_positive_homogeneity(self, git_service, m, w, factor):
        assert git_service.mu(m, w.scaled(factor)) == factor * git_service.mu(m, w)

    @settings(max_examples=200, deadline=None)
    @given(st.lists(st.integers(0, 3), min_size=3, max_size=3), st.integers(0, 2),
           st.lists(st.integers(-9, 9), min_size=3, max_size=3),
           st.lists(st.integers(-9, 9), min_size=3, max_size=3))
    def test_exponent_linearity(self, monomial, coordinate, v, w):
        total = [a + b for a, b in zip(v, w)]
        assert (GitService.exponent(coordinate, tuple(monomial), total)
                == GitService.exponent(coordinate, tuple(monomial), v)
                + GitService.exponent(coordinate, tuple(monomial), w))

    @settings(max_examples=200, deadline=None)
    @given(proj_maps(), weight_vectors(3), st.permutations(range(3)))
    def test_permutation_equivariance(self, git_service, rational_maps, m, w, permutation):
        matrix = [[1 if row == permutation[column] else 0 for column in range(3)] for row in range(3)]
        moved = rational_maps.conjugate(m, matrix)
        moved_weights = w.permuted(permutation)
        assert sorted(git_service.mu_multiset(moved, moved_weights)) == sorted(git_service.mu_multiset(m, w))

    @settings(max_examples=100, deadline=None)
    @given(proj_maps(degrees=(1, 2, 3)), weight_vectors(3))
    def test_conjugation_oracle(self, git_service, m, w):
        assert git_service.mu_by_conjugation(m, w) == git_service.mu(m, w)

    @settings(max_examples=100, deadline=None)
    @given(proj_maps(degrees=(1, 2, 3)), weight_vectors(3), st.randoms(use_true_random=False))
    def test_mu_depends_only_on_support(self, git_service, m, w, rng):
        rescaled = [Poly(c.num_vars, {monomial: coefficient * rng.choice([-3, -1, Fraction(1, 2), 2, 7])
                                      for monomial, coefficient in c.terms.items()}) for c in m.coords]
        assert git_service.mu(ProjMap(N=m.N, d=m.d, coords=tuple(rescaled)), w) == git_service.mu(m, w)


class TestBlockCertificates:
    def test_block_weights(self):
        assert GitService.henon_block_weights(2, 2, 1, 0, 1) == WeightVector.of(1, 0, -1)
        assert GitService.henon_block_weights(3, 2, 4, 1, 2) == WeightVector.of(4, -1, -1, -2)

    def test_unbalanced_block_weights(self):
        with pytest.raises(ValidationError):
            GitService.henon_block_weights(2, 2, 1, 1, 1)

    def test_block_range(self):
        with pytest.raises(RangeError):
            GitService.henon_block_weights(2, 3, 1, 0, 1)

    @pytest.mark.parametrize("N, k, d, expected", [
        (2, 2, 2, (1, 0, 1)),
        (2, 2, 3, (4, 1, 3)),
        (3, 3, 2, (5, 2, 8)),
        (5, 4, 4, (8, 3, 18)),
    ])
    def test_certificate_parameters(self, N, k, d, expected):
        assert GitService.certificate_parameters(N, k, d) == expected
        r, s, t = expected
        assert r * (k - 1) - s * (N - k + 1) - t == 0

    def test_expected_verdicts(self):
        assert GitService.expected_verdict(2, 2, 3)['verdict'] == UNSTABLE
        assert GitService.expected_verdict(3, 3, 2)['verdict'] == UNSTABLE
        assert GitService.expected_verdict(2, 2, 2) == {'verdict': SEMISTABLE, 'certificate_sign': ">=0"}
        verdict = GitService.expected_verdict(4, 2, 2)
        assert verdict['verdict'] == NOT_STABLE
        assert verdict['semistability'] == "unknown"


class TestTables:
    @staticmethod
    def value(table, label, parameters, m=None):
        rows = [row for row in table.rows_with_label(label) if row.m == m]
        return rows[0].form, rows[0].form.evaluate(parameters)

    def test_quadratic_row_v(self, git_service):
        table = git_service.generic_table(2, 2, 2)
        form, value = self.value(table, "V", (1, 0, 1))
        assert form.format() == "-r - s + t"
        assert value == 0

    def test_cubic_row_v(self, git_service):
        table = git_service.generic_table(2, 2, 3)
        _, value = self.value(table, "V", GitService.certificate_parameters(2, 2, 3))
        assert value == 1

    def test_row_iv_without_x(self, git_service):
        table = git_service.generic_table(3, 3, 2)
        form, value = self.value(table, "IV", GitService.certificate_parameters(3, 3, 2), m=0)
        assert form.format() == "-s + 2t"
        assert value == 14

    def test_labels(self, git_service):
        assert git_service.generic_table(4, 3, 2).labels() == ["I", "II", "III", "IV", "V", "VI"]
        assert git_service.generic_table(2, 2, 2).labels() == ["II", "IV", "V", "VI"]

    @pytest.mark.parametrize("N", [2, 3, 4, 5])
    @pytest.mark.parametrize("d", [2, 3, 4])
    def test_minimum_sign(self, git_service, N, d):
        for k in range(2, N + 1):
            parameters = GitService.certificate_parameters(N, k, d)
            table = git_service.generic_table(N, k, d)
            if d == 2 and k == 2:
                assert table.minimum(parameters) == 0
            else:
                assert table.minimum(parameters) > 0

    def test_closed_forms(self, git_service):
        # dt - s = (k-1)(d(N+1)-1), -r - s + (d-1)t = ((d-1)(k-1)-2)(N+1)+1
        for N in range(2, 6):
            for k in range(2, N + 1):
                for d in range(3, 5):
                    parameters = GitService.certificate_parameters(N, k, d)
                    table = git_service.generic_table(N, k, d)
                    assert self.value(table, "IV", parameters, m=0)[1] == (k - 1) * (d * (N + 1) - 1)
                    assert self.value(table, "V", parameters)[1] == ((d - 1) * (k - 1) - 2) * (N + 1) + 1

    def test_symbolic_table_matches_exponents(self, git_service, henon_service, parse_spec):
        spec = parse_spec("henon N=3 k=2 d=2 b=(1,2,3) P3=(x2^2) P4=(x2*x3 + 1/2*x3^2)")
        table = git_service.symbolic_table(spec)
        parameters = (4, 1, 2)
        weights = GitService.henon_block_weights(3, 2, *parameters)
        m = henon_service.homogenize_map(spec)
        assert [value for _, value in table.evaluate(parameters)] == git_service.mu_multiset(m, weights)

    def test_table2(self, git_service):
        table = git_service.table2()
        assert len(table.rows) == 18
        forms = {(row.label, row.monomial): row.form.format() for row in table.rows}
        assert forms[("y", (1, 0, 1))] == "-2r + 2s"
        assert forms[("x", (0, 1, 1))] == "2r"
        assert forms[("x", (2, 0, 0))] == "-r"
        assert forms[("z", (0, 0, 2))] == "s"


class TestDestabilizingSearch:
    def test_quadratic_henon(self, git_service_any, henon22):
        assert git_service_any.find_destabilizing_diag(henon22, strict=True) is None
        certificate = git_service_any.find_destabilizing_diag(henon22, strict=False)
        assert certificate.weights == WeightVector.of(1, 0, -1)
        assert certificate.mu == 0
        assert certificate.kind is CertificateKind.NON_STABLE_WITNESS

    def test_cubic_henon(self, git_service_any, henon23):
        certificate = git_service_any.find_destabilizing_diag(henon23, strict=True)
        assert certificate is not None
        assert certificate.mu > 0
        assert certificate.verified
        assert certificate.weights.primitive() == certificate.weights

    def test_stable_map(self, git_service_any, parse_map):
        # x^2 + y^2 + z^2 во всех координатах: показатели w_j - 2 w_i принимают обоих знаков
        m = parse_map("[x^2 + y^2 + z^2 : x^2 + y^2 + z^2 : x^2 + y^2 + z^2]")
        assert git_service_any.find_destabilizing_diag(m, strict=False) is None


class TestVerification:
    def test_failed_certificate(self, git_service, henon22):
        certificate = git_service.verify_certificate(henon22, WeightVector.of(1, 0, -1), ExpectedSign.POSITIVE)
        assert not certificate.verified
        assert certificate.mu == 0

    def test_require_certificate(self, git_service, henon22):
        with pytest.raises(VerificationError) as error:
            git_service.require_certificate(henon22, WeightVector.of(1, 0, -1), ExpectedSign.POSITIVE)
        assert error.value.certificate.mu == 0

    def test_negative_mu(self, git_service, henon22):
        certificate = git_service.verify_certificate(henon22, WeightVector.of(-1, 0, 1), ExpectedSign.NONNEGATIVE)
        assert certificate.mu < 0
        assert not certificate.verified
        assert certificate.kind is None

    def test_exact_fraction_free(self, git_service):
        point = [Fraction(1, 2), Fraction(-1, 3)]
        assert git_service._integer_weights(point) == WeightVector.of(3, -2, -1)
