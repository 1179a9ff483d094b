import argparse
import sys
from typing import List, Optional, TextIO

from application.handler.command_handlers import CommandHandlers
from application.use_case.analyze_dynamics import AnalyzeDynamicsUseCase
from application.use_case.analyze_stability import AnalyzeStabilityUseCase
from application.use_case.build_henon import BuildHenonUseCase
from application.use_case.classify_quadratic import ClassifyQuadraticUseCase
from application.use_case.run_sweep import SWEEPS, RunSweepUseCase
from config.settings import config
from domain.entity.report import AnalysisRequest, Command
from domain.exception.errors import GitStabError, RangeError, VerificationError
from domain.service.classify_service import ClassifyService
from domain.service.elimination_service import EliminationService
from domain.service.git_service import GitService
from domain.service.henon_service import HenonService
from domain.service.linear_algebra_service import LinearAlgebraService
from domain.service.poly_algebra_service import PolyAlgebraService
from domain.service.rational_map_service import RationalMapService
from infrastructure.monitoring.logging import StructuredLogger, setup_logging
from infrastructure.monitoring.metrics import metrics_collector
from infrastructure.monitoring.tracing import trace_manager
from infrastructure.solver.solver_factory import SolverFactory
from infrastructure.storage.input_repository import InputRepository
from presentation.cli.formatters import ReportFormatter
from presentation.cli.loader import InputLoader
from presentation.cli.parsers import parse_line, parse_weights

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_INPUT = 2


class GitStabCli:
    """Командная строка: сборка зависимостей, разбор аргументов, запуск и вывод отчёта"""

    def __init__(self, solver_name: Optional[str] = None, maps_dir: Optional[str] = None,
                 stdout: Optional[TextIO] = None, stderr: Optional[TextIO] = None):
        self.stdout = stdout or sys.stdout
        self.stderr = stderr or sys.stderr
        self.logger = StructuredLogger('cli')

        # Алгебра
        self.algebra = PolyAlgebraService()
        self.linear = LinearAlgebraService()
        self.elimination = EliminationService(self.algebra)
        self.rational_maps = RationalMapService(self.algebra, self.linear, self.elimination)
        self.henon_service = HenonService(self.rational_maps)
        self.solver = SolverFactory.create_solver(solver_name)
        self.git_service = GitService(self.henon_service, self.solver)
        self.classify_service = ClassifyService(self.rational_maps, self.elimination, self.linear,
                                                self.henon_service)

        # Ввод
        self.repository = InputRepository(maps_dir)
        self.loader = InputLoader(self.repository, self.rational_maps, self.henon_service)

        # Use cases
        self.handlers = CommandHandlers(
            loader=self.loader,
            henon_service=self.henon_service,
            stability_uc=AnalyzeStabilityUseCase(self.git_service),
            dynamics_uc=AnalyzeDynamicsUseCase(self.rational_maps),
            classify_uc=ClassifyQuadraticUseCase(self.classify_service),
            build_uc=BuildHenonUseCase(self.henon_service, self.git_service),
            sweep_uc=RunSweepUseCase(self.henon_service, self.git_service, self.classify_service),
        )

    def execute(self, request: AnalysisRequest, seed: int, output_format: str = "json") -> int:
        try:
            report = self.handlers.handle(request, seed)
        except Exception as e:
            return self.fail(e)
        finally:
            metrics_collector.flush()

        if output_format == "text" and request.command is Command.TABLE:
            print(ReportFormatter.table_text(report.result), file=self.stdout)
        else:
            print(ReportFormatter.to_json(report), file=self.stdout)
        if report.result.get('passed') is False:
            return EXIT_INTERNAL
        return EXIT_OK

    def fail(self, error: Exception) -> int:
        print(ReportFormatter.error_json(error), file=self.stderr)
        if isinstance(error, VerificationError) or not isinstance(error, GitStabError):
            self.logger.error(f"Analysis failed: {error}", extra={'error_type': type(error).__name__})
            return EXIT_INTERNAL
        self.logger.warning(f"Invalid input: {error}", extra={'error_type': type(error).__name__})
        return EXIT_INPUT


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--seed', type=int, default=None, help="seed for random specs and sweeps")
    common.add_argument('--solver', choices=["fourier_motzkin", "fm", "simplex"], default=None,
                        help="exact cone solver (default from GITSTAB_CONE_SOLVER)")
    common.add_argument('--log-level', default=None, help="override LOG_LEVEL")

    parser = argparse.ArgumentParser(
        prog="gitstab",
        description="Exact GIT stability analysis of rational self-maps of P^N and generalized Henon maps")
    commands = parser.add_subparsers(dest='command', required=True)

    mu = commands.add_parser(Command.MU.value, parents=[common], help="mu(f, L) for a diagonal 1-PS")
    mu.add_argument('--map', required=True, help="map file, bundled fixture or inline map/spec")
    mu.add_argument('--weights', required=True, help="comma-separated integer weights summing to 0")
    mu.add_argument('--expect', choices=[">0", ">=0"], default=None, help="verify the sign of mu")

    destab = commands.add_parser(Command.DESTAB.value, parents=[common],
                                 help="search a diagonal destabilizing weight")
    destab.add_argument('--map', required=True)
    mode = destab.add_mutually_exclusive_group()
    mode.add_argument('--strict', dest='strict', action='store_true', default=True, help="mu > 0 (default)")
    mode.add_argument('--nonstrict', dest='strict', action='store_false', help="mu >= 0")

    build = commands.add_parser(Command.HENON_BUILD.value, parents=[common],
                                help="build a generalized Henon map from a spec or at random")
    build.add_argument('--spec', default=None)
    build.add_argument('--N', type=int, default=None)
    build.add_argument('--k', type=int, default=None)
    build.add_argument('--d', type=int, default=None)
    build.add_argument('--verdict', action='store_true', help="attach the expected GIT verdict and certificate")

    iterate = commands.add_parser(Command.ITERATE.value, parents=[common], help="degrees of iterates")
    iterate.add_argument('--map', required=True)
    iterate.add_argument('--n', type=int, default=2)

    classify = commands.add_parser(Command.CLASSIFY22.value, parents=[common],
                                   help="classify a dominant quadratic map of P^2")
    classify.add_argument('--map', required=True)

    line_image = commands.add_parser(Command.LINE_IMAGE.value, parents=[common],
                                     help="image of a line under a quadratic map of P^2")
    line_image.add_argument('--map', required=True)
    line_image.add_argument('--line', required=True, help="linear form in x, y, z, e.g. 'y - 3*z'")

    table = commands.add_parser(Command.TABLE.value, parents=[common], help="symbolic exponent table")
    table.add_argument('--N', type=int, default=None)
    table.add_argument('--k', type=int, default=None)
    table.add_argument('--d', type=int, default=None)
    table.add_argument('--quadratic', action='store_true',
                       help="generic quadratic map of P^2 under weights (r, s - r, -s)")
    table.add_argument('--format', choices=["json", "text"], default="json")

    audit = commands.add_parser(Command.AUDIT.value, parents=[common],
                                help="check images of lines under a quadratic Henon map")
    audit.add_argument('--spec', default=None)
    audit.add_argument('--line', action='append', default=None, help="explicit line (repeatable)")
    audit.add_argument('--samples', type=int, default=5, help="random lines per class")

    sweep = commands.add_parser(Command.SWEEP.value, parents=[common], help="seeded verification sweeps")
    sweep.add_argument('--kind', choices=list(SWEEPS), default="theorem")
    sweep.add_argument('--count', type=int, default=5, help="instances per cell (theorem) or in total")
    sweep.add_argument('--max-N', dest='max_N', type=int, default=5)
    sweep.add_argument('--max-d', dest='max_d', type=int, default=4)
    return parser


def request_from_args(args: argparse.Namespace) -> AnalysisRequest:
    """Проверить опции до вычислений и собрать AnalysisRequest"""
    command = Command(args.command)
    source = getattr(args, 'map', None) or getattr(args, 'spec', None)
    options = {}
    if command is Command.MU:
        options = {'weights': parse_weights(args.weights), 'expect': args.expect}
    elif command is Command.DESTAB:
        options = {'strict': args.strict}
    elif command is Command.HENON_BUILD:
        options = {'N': args.N, 'k': args.k, 'd': args.d, 'verdict': args.verdict}
    elif command is Command.ITERATE:
        if args.n < 1:
            raise RangeError(f"--n must be positive, got {args.n}")
        options = {'n': args.n}
    elif command is Command.LINE_IMAGE:
        options = {'line': parse_line(args.line)}
    elif command is Command.TABLE:
        options = {'N': args.N, 'k': args.k, 'd': args.d, 'quadratic': args.quadratic}
    elif command is Command.AUDIT:
        options = {'lines': [parse_line(text) for text in args.line or []], 'samples': args.samples}
    elif command is Command.SWEEP:
        options = {'kind': args.kind, 'count': args.count, 'max_N': args.max_N, 'max_d': args.max_d}
    return AnalysisRequest(command=command, source=source, options=options)


def main(argv: Optional[List[str]] = None, stdout: Optional[TextIO] = None,
         stderr: Optional[TextIO] = None) -> int:
    args = build_parser().parse_args(argv)
    setup_logging(args.log_level or config.logging.level, config.logging.file)
    trace_manager.setup_tracing()

    cli = GitStabCli(solver_name=args.solver, stdout=stdout, stderr=stderr)
    seed = args.seed if args.seed is not None else config.analysis.seed
    try:
        request = request_from_args(args)
    except GitStabError as e:
        return cli.fail(e)
    try:
        return cli.execute(request, seed, output_format=getattr(args, 'format', "json"))
    finally:
        trace_manager.shutdown()
