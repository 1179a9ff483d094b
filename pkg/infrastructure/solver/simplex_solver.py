from fractions import Fraction
from typing import List, Optional

from domain.interfaces.cone_solver import Inequality
from infrastructure.solver.base_cone_solver import BaseConeSolver


class SimplexSolver(BaseConeSolver):
    """Фаза I симплекс-метода на Fraction с правилом Бленда"""

    def __init__(self):
        super().__init__("simplex")
        self.pivots = 0

    def _solve(self, system: List[Inequality], dimension: int) -> Optional[List[Fraction]]:
        # x = x_plus - x_minus, a.x - s = b, все переменные >= 0
        m = len(system)
        if m == 0:
            return [Fraction(0)] * dimension
        width = 2 * dimension + m
        tableau: List[List[Fraction]] = []
        for i, (coeffs, rhs) in enumerate(system):
            row = list(coeffs) + [-c for c in coeffs] + [Fraction(-int(i == k)) for k in range(m)]
            if rhs < 0:
                row = [-v for v in row]
                rhs = -rhs
            artificial = [Fraction(int(i == k)) for k in range(m)]
            tableau.append(row + artificial + [rhs])
        total = width + m
        basis = [width + i for i in range(m)]

        # приведённые стоимости для цели "сумма искусственных"
        cost = [Fraction(0)] * (total + 1)
        for row in tableau:
            for j in range(total + 1):
                cost[j] -= row[j]
        for j in range(width, total):
            cost[j] = Fraction(0)

        self.pivots = 0
        while True:
            entering = next((j for j in range(total) if cost[j] < 0), None)
            if entering is None:
                break
            leaving = None
            for i, row in enumerate(tableau):
                if row[entering] > 0:
                    ratio = row[-1] / row[entering]
                    if leaving is None or ratio < leaving[0] or (ratio == leaving[0] and basis[i] < basis[leaving[1]]):
                        leaving = (ratio, i)
            if leaving is None:
                break
            self._pivot(tableau, cost, leaving[1], entering)
            basis[leaving[1]] = entering
            self.pivots += 1

        self.logger.metric("simplex_pivots", self.pivots)
        if -cost[-1] > 0:
            return None
        values = [Fraction(0)] * total
        for i, j in enumerate(basis):
            values[j] = tableau[i][-1]
        return [values[j] - values[dimension + j] for j in range(dimension)]

    @staticmethod
    def _pivot(tableau: List[List[Fraction]], cost: List[Fraction], row_index: int, column: int):
        pivot_row = tableau[row_index]
        lead = pivot_row[column]
        pivot_row[:] = [v / lead for v in pivot_row]
        for i, row in enumerate(tableau):
            if i != row_index and row[column]:
                factor = row[column]
                row[:] = [a - factor * b for a, b in zip(row, pivot_row)]
        if cost[column]:
            factor = cost[column]
            cost[:] = [a - factor * b for a, b in zip(cost, pivot_row)]
