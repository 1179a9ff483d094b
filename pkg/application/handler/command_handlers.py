import random
from typing import Any, Callable, Dict

from application.use_case.analyze_dynamics import AnalyzeDynamicsUseCase
from application.use_case.analyze_stability import AnalyzeStabilityUseCase
from application.use_case.build_henon import BuildHenonUseCase
from application.use_case.classify_quadratic import ClassifyQuadraticUseCase
from application.use_case.run_sweep import RunSweepUseCase
from domain.entity.certificate import ExpectedSign
from domain.entity.report import AnalysisRequest, Command, Report
from domain.exception.errors import ValidationError
from domain.service.henon_service import HenonService
from infrastructure.monitoring.logging import StructuredLogger
from infrastructure.monitoring.metrics import Timer, metrics_collector


class CommandHandlers:
    """Диспетчер: AnalysisRequest -> use case -> Report"""

    def __init__(self, loader, henon_service: HenonService,
                 stability_uc: AnalyzeStabilityUseCase, dynamics_uc: AnalyzeDynamicsUseCase,
                 classify_uc: ClassifyQuadraticUseCase, build_uc: BuildHenonUseCase, sweep_uc: RunSweepUseCase):
        self.loader = loader
        self.henon_service = henon_service
        self.stability_uc = stability_uc
        self.dynamics_uc = dynamics_uc
        self.classify_uc = classify_uc
        self.build_uc = build_uc
        self.sweep_uc = sweep_uc
        self.logger = StructuredLogger('command_handlers')

        self._handlers: Dict[Command, Callable[[AnalysisRequest, random.Random], Dict[str, Any]]] = {
            Command.MU: self._mu,
            Command.DESTAB: self._destab,
            Command.HENON_BUILD: self._henon_build,
            Command.ITERATE: self._iterate,
            Command.CLASSIFY22: self._classify22,
            Command.LINE_IMAGE: self._line_image,
            Command.TABLE: self._table,
            Command.AUDIT: self._audit,
            Command.SWEEP: self._sweep,
        }

    def handle(self, request: AnalysisRequest, seed: int) -> Report:
        command = request.command.value
        rng = random.Random(seed)
        self.logger.debug(f"Handling {command}", extra={'command': command, 'seed': seed})
        try:
            with Timer(metrics_collector, command):
                result = self._handlers[request.command](request, rng)
        except Exception:
            metrics_collector.record_analysis(command, "error")
            raise
        metrics_collector.record_analysis(command, "success")
        return Report(request=request, result=result, seed=seed)

    # --- команды ---------------------------------------------------------

    def _require_source(self, request: AnalysisRequest) -> str:
        if not request.source:
            raise ValidationError(f"command {request.command.value} needs an input (--map or --spec)")
        return request.source

    def _mu(self, request: AnalysisRequest, rng: random.Random) -> Dict[str, Any]:
        m, _ = self.loader.load_map(self._require_source(request))
        expect = request.option('expect')
        return self.stability_uc.mu(m, request.option('weights'),
                                    ExpectedSign.parse(expect) if expect else None)

    def _destab(self, request: AnalysisRequest, rng: random.Random) -> Dict[str, Any]:
        m, _ = self.loader.load_map(self._require_source(request))
        return self.stability_uc.destab(m, strict=request.option('strict', True))

    def _henon_build(self, request: AnalysisRequest, rng: random.Random) -> Dict[str, Any]:
        if request.source:
            spec, _ = self.loader.load_spec(request.source)
        else:
            N, k, d = (request.option(name) for name in ('N', 'k', 'd'))
            if None in (N, k, d):
                raise ValidationError("henon-build needs --spec or all of --N, --k, --d for a random spec")
            spec = self.henon_service.random_spec(rng, N, k, d)
        return self.build_uc.build(spec, with_verdict=request.option('verdict', False))

    def _iterate(self, request: AnalysisRequest, rng: random.Random) -> Dict[str, Any]:
        m, _ = self.loader.load_map(self._require_source(request))
        return self.dynamics_uc.iterate(m, request.option('n', 2))

    def _classify22(self, request: AnalysisRequest, rng: random.Random) -> Dict[str, Any]:
        m, _ = self.loader.load_map(self._require_source(request))
        return self.classify_uc.classify(m)

    def _line_image(self, request: AnalysisRequest, rng: random.Random) -> Dict[str, Any]:
        m, _ = self.loader.load_map(self._require_source(request))
        return self.dynamics_uc.line_image(m, request.option('line'))

    def _table(self, request: AnalysisRequest, rng: random.Random) -> Dict[str, Any]:
        if request.option('quadratic'):
            return self.build_uc.table2()
        N, k, d = (request.option(name) for name in ('N', 'k', 'd'))
        if None in (N, k, d):
            raise ValidationError("table needs --N, --k and --d")
        return self.build_uc.table(N, k, d)

    def _audit(self, request: AnalysisRequest, rng: random.Random) -> Dict[str, Any]:
        if request.source:
            spec, _ = self.loader.load_spec(request.source)
        else:
            spec = self.henon_service.random_quadratic_plane(rng)
        lines = request.option('lines')
        return self.classify_uc.audit(spec, rng, lines=lines or None, samples=request.option('samples', 5))

    def _sweep(self, request: AnalysisRequest, rng: random.Random) -> Dict[str, Any]:
        return self.sweep_uc.run(request.option('kind', 'theorem'), rng, count=request.option('count', 5),
                                 max_N=request.option('max_N', 5), max_d=request.option('max_d', 4))
