from typing import Optional

from config.settings import config
from domain.interfaces.cone_solver import ConeSolverInterface
from infrastructure.monitoring.logging import StructuredLogger
from infrastructure.solver.fourier_motzkin_solver import FourierMotzkinSolver
from infrastructure.solver.simplex_solver import SimplexSolver


class SolverFactory:
    @staticmethod
    def create_solver(name: Optional[str] = None) -> ConeSolverInterface:
        """Создать решатель на основе конфигурации (GITSTAB_CONE_SOLVER) или явного имени"""
        logger = StructuredLogger("solver_factory")

        solver = (name or config.analysis.cone_solver).lower().replace("-", "_")

        logger.debug(f"Creating cone solver: {solver}")

        if solver in ("fourier_motzkin", "fm"):
            return FourierMotzkinSolver()

        elif solver == "simplex":
            return SimplexSolver()

        else:
            logger.warning(f"Unknown cone solver: {solver}. Using Fourier-Motzkin as default.")
            return FourierMotzkinSolver()
