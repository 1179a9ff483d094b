import random
from fractions import Fraction
from itertools import combinations
from typing import List, Optional, Sequence, Tuple

from domain.entity.henon_spec import HenonSpec
from domain.entity.poly import Poly, monomials_of_degree
from domain.entity.proj_map import ProjMap
from domain.entity.verdict import (
    AuditReport, Branch, CenterReport, Conclusion, DegreeDrop, FiberingWitness, LineCheck, Rat22Verdict,
)
from domain.exception.errors import RangeError, UnsupportedError, VerificationError
from domain.service.elimination_service import EliminationService
from domain.service.henon_service import HenonService
from domain.service.linear_algebra_service import LinearAlgebraService
from domain.service.rational_map_service import RationalMapService
from domain.value_object.projective import ImageKind, LineP2, normalize_point
from infrastructure.monitoring.logging import StructuredLogger

POINT_AT_INFINITY = (Fraction(0), Fraction(1), Fraction(0))


class ClassifyService:
    """Классификация квадратичных доминантных отображений P^2: расслоения, падение степени, вердикт"""

    def __init__(self, rational_maps: RationalMapService, elimination: EliminationService,
                 linear: LinearAlgebraService, henon: HenonService):
        self.rational_maps = rational_maps
        self.elimination = elimination
        self.linear = linear
        self.henon = henon
        self.logger = StructuredLogger("classify_service")

    # --- центры линейных расслоений ---------------------------------------

    def center_equations(self, F: ProjMap) -> List[Poly]:
        """p_j ∇F_i(p) - p_i ∇F_j(p) для трёх пар (i, j): 9 квадратичных форм от p"""
        p = Poly.variables(3)
        gradients = [[c.derivative(l) for l in range(3)] for c in F.coords]
        equations = []
        for i, j in combinations(range(3), 2):
            for l in range(3):
                equations.append(p[j] * gradients[i][l] - p[i] * gradients[j][l])
        return equations

    def fibering_centers(self, F: ProjMap) -> CenterReport:
        """Рациональные точки p, для которых F переводит пучок прямых через p в пучок прямых"""
        self._require_quadratic_dominant(F)
        equations = [e for e in self.center_equations(F) if not e.is_zero()]
        if not equations:
            raise VerificationError("center equations vanish identically for a dominant map")
        solution = self.elimination.solve_p2(equations)
        centers = [p for p in solution.points if all(e.evaluate(p) == 0 for e in equations)]
        self.logger.debug("Fibering centers computed", extra={
            'map': F.format(), 'centers': len(centers), 'residuals': len(solution.residuals)})
        return CenterReport(centers=tuple(centers), residuals=tuple(solution.residuals))

    def check_fibering(self, F: ProjMap, p: Sequence) -> Optional[FiberingWitness]:
        """pi = [L1 : L2] с L1(p) = L2(p) = 0 и G из L_a ∘ F = G_a(L1, L2), если p центр"""
        center = normalize_point(p)
        pivot = next(i for i, c in enumerate(center) if c)
        rows: List[Tuple[Fraction, Fraction, Fraction]] = []
        for j in range(3):
            if j == pivot:
                continue
            row = [Fraction(0)] * 3
            row[j] = center[pivot]
            row[pivot] = -center[j]
            rows.append(tuple(row))
        L1, L2 = (Poly.linear_form(row) for row in rows)
        basis = [L1 ** 2, L1 * L2, L2 ** 2]
        quadrics = monomials_of_degree(3, 2)
        matrix = [[b.coefficient(monomial) for b in basis] for monomial in quadrics]

        v, w = Poly.variables(2)
        binary = [v ** 2, v * w, w ** 2]
        G = []
        for L in (L1, L2):
            pulled = L.compose(F.coords)
            solution = self.linear.solve(matrix, [pulled.coefficient(monomial) for monomial in quadrics])
            if solution is None:
                return None
            G.append(sum((b.scale(c) for b, c in zip(binary, solution)), Poly.zero(2)))
        drops = not self.rational_maps.algebra.gcd(G[0], G[1]).is_constant()
        return FiberingWitness(center=center, pi=(rows[0], rows[1]), G=(G[0], G[1]), g_degree_drops=drops)

    # --- вторая итерация ------------------------------------------------

    def degree_drop_22(self, F: ProjMap) -> DegreeDrop:
        self._require_quadratic(F)
        second = self.rational_maps.iterates(F, 2)[1]
        return DegreeDrop(deg_F2=second.d, drops=second.d <= 2)

    # --- вердикт --------------------------------------------------------

    def rat22_verdict(self, F: ProjMap) -> Rat22Verdict:
        """Не расслоено и deg F^2 > 2 влечёт полустабильность; иначе вывода нет"""
        F = self.rational_maps.normalize(F)
        self._require_quadratic_dominant(F)
        centers = self.fibering_centers(F)
        witnesses = []
        for center in centers.centers:
            witness = self.check_fibering(F, center)
            if witness is None:
                raise VerificationError(f"center {list(map(str, center))} admits no factorization",
                                        map=F.format())
            witnesses.append(witness)
        degree_drop = self.degree_drop_22(F)
        branch = Branch.from_flags(bool(witnesses), degree_drop.drops)
        semistable = branch is Branch.NEITHER and centers.resolved
        conclusion = Conclusion.SEMISTABLE if semistable else Conclusion.UNKNOWN
        self.logger.info("Quadratic map classified", extra={
            'map': F.format(), 'branch': branch.value, 'conclusion': conclusion.value,
            'deg_F2': degree_drop.deg_F2})
        return Rat22Verdict(branch=branch, conclusion=conclusion, centers=centers,
                            witnesses=tuple(witnesses), degree_drop=degree_drop)

    # --- образы прямых под квадратичным Хеноном -----------------------------

    @staticmethod
    def classify_henon_line(line: LineP2) -> str:
        u, v, _ = line.coefficients
        if u:
            return "affine-non-horizontal"
        if v:
            return "horizontal"
        return "infinity"

    def henon_line_audit(self, spec: HenonSpec, rng: Optional[random.Random] = None,
                         lines: Optional[Sequence[LineP2]] = None, samples: int = 3) -> AuditReport:
        """{z=0} -> [0:1:0], {y=Bz} -> {x=aBz}, остальные аффинные прямые -> неприводимая коника"""
        if spec.N != 2 or spec.k != 2 or spec.d != 2:
            raise RangeError(f"the line audit needs N = k = d = 2, got N={spec.N}, k={spec.k}, d={spec.d}")
        F = self.henon.homogenize_map(spec)
        a = spec.b[1]
        if lines is None:
            rng = rng or random.Random(0)
            lines = [LineP2.of(0, 0, 1)]
            for _ in range(samples):
                lines.append(LineP2.of(0, 1, -self.henon.random_coefficient(rng)))
            for _ in range(samples):
                lines.append(LineP2.of(1, -self.henon.random_coefficient(rng), -self.henon.random_coefficient(rng)))

        report = AuditReport()
        for line in lines:
            line_class = self.classify_henon_line(line)
            image = self.rational_maps.line_image(F, line)
            if line_class == "infinity":
                expected = "point [0 : 1 : 0]"
                passed = image.kind is ImageKind.POINT and image.point == POINT_AT_INFINITY
            elif line_class == "horizontal":
                B = -line.coefficients[2] / line.coefficients[1]
                target = LineP2.of(1, 0, -a * B)
                expected = f"line {target.format()}"
                passed = image.kind is ImageKind.LINE and image.line == target
            else:
                expected = "irreducible conic"
                passed = image.kind is ImageKind.IRREDUCIBLE_CONIC
            if not passed:
                self.logger.warning("Line image check failed", extra={
                    'line': line.format(), 'expected': expected, 'image': image.to_dict()})
            report.checks.append(LineCheck(line_class=line_class, line=line, expected=expected,
                                           image=image, passed=passed))
        return report

    # --- проверки --------------------------------------------------------

    @staticmethod
    def _require_quadratic(F: ProjMap):
        if F.N != 2 or F.d != 2:
            raise UnsupportedError(f"classification covers quadratic maps of P^2, got N={F.N}, d={F.d}")

    def _require_quadratic_dominant(self, F: ProjMap):
        self._require_quadratic(F)
        if not self.rational_maps.is_dominant(F):
            raise UnsupportedError("map is not dominant: the Jacobian determinant vanishes identically",
                                  map=F.format())
