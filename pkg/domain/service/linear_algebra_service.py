from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from domain.exception.errors import StructuralError, ValidationError

Matrix = List[List[Fraction]]


class LinearAlgebraService:
    """Точная линейная алгебра над Q (метод Гаусса на Fraction)"""

    @staticmethod
    def to_matrix(rows: Sequence[Sequence]) -> Matrix:
        matrix = [[Fraction(v) for v in row] for row in rows]
        if matrix and any(len(row) != len(matrix[0]) for row in matrix):
            raise StructuralError("ragged matrix")
        return matrix

    def row_echelon(self, rows: Sequence[Sequence]) -> Tuple[Matrix, List[int]]:
        """Приведённый ступенчатый вид и список столбцов-ведущих"""
        matrix = self.to_matrix(rows)
        if not matrix:
            return [], []
        width = len(matrix[0])
        pivots: List[int] = []
        row = 0
        for column in range(width):
            if row == len(matrix):
                break
            pivot = next((i for i in range(row, len(matrix)) if matrix[i][column]), None)
            if pivot is None:
                continue
            matrix[row], matrix[pivot] = matrix[pivot], matrix[row]
            lead = matrix[row][column]
            matrix[row] = [v / lead for v in matrix[row]]
            for i in range(len(matrix)):
                if i != row and matrix[i][column]:
                    factor = matrix[i][column]
                    matrix[i] = [a - factor * b for a, b in zip(matrix[i], matrix[row])]
            pivots.append(column)
            row += 1
        return matrix, pivots

    def rank(self, rows: Sequence[Sequence]) -> int:
        return len(self.row_echelon(rows)[1])

    def nullspace(self, rows: Sequence[Sequence], width: Optional[int] = None) -> Matrix:
        """Базис ядра: векторы v с rows * v = 0"""
        matrix, pivots = self.row_echelon(rows)
        if width is None:
            if not matrix:
                raise StructuralError("nullspace of an empty matrix needs an explicit width")
            width = len(matrix[0])
        free = [c for c in range(width) if c not in pivots]
        basis: Matrix = []
        for f in free:
            vector = [Fraction(0)] * width
            vector[f] = Fraction(1)
            for r, p in enumerate(pivots):
                vector[p] = -matrix[r][f]
            basis.append(vector)
        return basis

    def solve(self, rows: Sequence[Sequence], rhs: Sequence) -> Optional[List[Fraction]]:
        """Одно решение системы rows * x = rhs или None, если система несовместна"""
        if len(rows) != len(rhs):
            raise StructuralError("right-hand side length differs from the number of rows")
        if not rows:
            return []
        width = len(rows[0])
        augmented = [list(row) + [value] for row, value in zip(rows, rhs)]
        matrix, pivots = self.row_echelon(augmented)
        if width in pivots:
            return None
        solution = [Fraction(0)] * width
        for r, p in enumerate(pivots):
            solution[p] = matrix[r][width]
        return solution

    def determinant(self, rows: Sequence[Sequence]) -> Fraction:
        matrix = self.to_matrix(rows)
        size = len(matrix)
        if any(len(row) != size for row in matrix):
            raise StructuralError("determinant needs a square matrix")
        result = Fraction(1)
        for column in range(size):
            pivot = next((i for i in range(column, size) if matrix[i][column]), None)
            if pivot is None:
                return Fraction(0)
            if pivot != column:
                matrix[column], matrix[pivot] = matrix[pivot], matrix[column]
                result = -result
            lead = matrix[column][column]
            result *= lead
            for i in range(column + 1, size):
                factor = matrix[i][column] / lead
                if factor:
                    matrix[i] = [a - factor * b for a, b in zip(matrix[i], matrix[column])]
        return result

    def inverse(self, rows: Sequence[Sequence]) -> Matrix:
        matrix = self.to_matrix(rows)
        size = len(matrix)
        if any(len(row) != size for row in matrix):
            raise StructuralError("inverse needs a square matrix")
        augmented = [row + [Fraction(int(i == j)) for j in range(size)] for i, row in enumerate(matrix)]
        reduced, pivots = self.row_echelon(augmented)
        if pivots[:size] != list(range(size)):
            raise ValidationError("matrix is singular")
        return [row[size:] for row in reduced]

    @staticmethod
    def multiply(left: Sequence[Sequence], right: Sequence[Sequence]) -> Matrix:
        if left and len(left[0]) != len(right):
            raise StructuralError("inner dimensions differ")
        return [[sum((Fraction(a) * Fraction(right[k][j]) for k, a in enumerate(row)), Fraction(0))
                 for j in range(len(right[0]))] for row in left]

    @staticmethod
    def apply(matrix: Sequence[Sequence], vector: Sequence) -> List[Fraction]:
        return [sum((Fraction(a) * Fraction(v) for a, v in zip(row, vector)), Fraction(0)) for row in matrix]
