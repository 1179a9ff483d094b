import os
import random
import sys

import pytest

# Добавляем путь к проекту
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from domain.service.classify_service import ClassifyService  # noqa: E402
from domain.service.elimination_service import EliminationService  # noqa: E402
from domain.service.git_service import GitService  # noqa: E402
from domain.service.henon_service import HenonService  # noqa: E402
from domain.service.linear_algebra_service import LinearAlgebraService  # noqa: E402
from domain.service.poly_algebra_service import PolyAlgebraService  # noqa: E402
from domain.service.rational_map_service import RationalMapService  # noqa: E402
from infrastructure.solver.fourier_motzkin_solver import FourierMotzkinSolver  # noqa: E402
from infrastructure.solver.simplex_solver import SimplexSolver  # noqa: E402
from presentation.cli.parsers import MapParser, SpecParser  # noqa: E402


@pytest.fixture(scope="session")
def algebra():
    return PolyAlgebraService()


@pytest.fixture(scope="session")
def linear():
    return LinearAlgebraService()


@pytest.fixture(scope="session")
def elimination(algebra):
    return EliminationService(algebra)


@pytest.fixture(scope="session")
def rational_maps(algebra, linear, elimination):
    return RationalMapService(algebra, linear, elimination)


@pytest.fixture(scope="session")
def henon_service(rational_maps):
    return HenonService(rational_maps)


@pytest.fixture(scope="session", params=["fourier_motzkin", "simplex"])
def solver(request):
    return FourierMotzkinSolver() if request.param == "fourier_motzkin" else SimplexSolver()


@pytest.fixture(scope="session")
def git_service(henon_service):
    return GitService(henon_service, FourierMotzkinSolver())


@pytest.fixture(scope="session")
def git_service_any(henon_service, solver):
    """GitService поверх каждого из решателей"""
    return GitService(henon_service, solver)


@pytest.fixture(scope="session")
def classify_service(rational_maps, elimination, linear, henon_service):
    return ClassifyService(rational_maps, elimination, linear, henon_service)


@pytest.fixture
def rng():
    return random.Random(20190101)


@pytest.fixture(scope="session")
def parse_map():
    parser = MapParser()
    return parser.parse


@pytest.fixture(scope="session")
def parse_spec():
    parser = SpecParser()
    return parser.parse


@pytest.fixture(scope="session")
def henon22(parse_map):
    return parse_map("[y*z : x*z + y^2 : z^2]")


@pytest.fixture(scope="session")
def henon23(parse_map):
    return parse_map("[2*y*z^2 : 3*x*z^2 + y^3 : z^3]")
