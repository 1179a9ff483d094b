import time
from typing import Optional

from prometheus_client import CollectorRegistry, Counter, Histogram, write_to_textfile

from config.settings import config
from infrastructure.monitoring.logging import StructuredLogger


class MetricsCollector:
    """Сборщик метрик пакетных запусков; выгрузка в textfile для node_exporter"""

    def __init__(self, registry: Optional[CollectorRegistry] = None):
        self.logger = StructuredLogger("metrics")
        self.registry = registry or CollectorRegistry()

        self.analyses = Counter(
            'gitstab_analyses_total',
            'Total number of analyses run',
            ['command', 'status'],
            registry=self.registry
        )

        self.analysis_time = Histogram(
            'gitstab_analysis_duration_seconds',
            'Time spent in one analysis',
            ['command'],
            registry=self.registry
        )

        self.cone_solver_calls = Counter(
            'gitstab_cone_solver_calls_total',
            'Cone feasibility problems solved',
            ['solver', 'result'],
            registry=self.registry
        )

        self.cone_inequalities = Histogram(
            'gitstab_cone_inequalities',
            'Largest inequality system seen during one cone solve',
            ['solver'],
            buckets=[4, 8, 16, 32, 64, 128, 256, 1024, 4096, 20000],
            registry=self.registry
        )

        self.sweep_instances = Counter(
            'gitstab_sweep_instances_total',
            'Random instances checked by sweeps',
            ['sweep', 'outcome'],
            registry=self.registry
        )

    def record_analysis(self, command: str, status: str = "success"):
        self.analyses.labels(command=command, status=status).inc()

    def record_analysis_time(self, command: str, duration: float):
        self.analysis_time.labels(command=command).observe(duration)

    def record_cone_solve(self, solver: str, feasible: bool, inequalities: int):
        self.cone_solver_calls.labels(solver=solver, result="feasible" if feasible else "infeasible").inc()
        self.cone_inequalities.labels(solver=solver).observe(inequalities)

    def record_sweep_instance(self, sweep: str, outcome: str):
        self.sweep_instances.labels(sweep=sweep, outcome=outcome).inc()

    def flush(self):
        """Записать метрики в METRICS_FILE, если метрики включены"""
        if not config.metrics.enabled or not config.metrics.file:
            return
        try:
            write_to_textfile(config.metrics.file, self.registry)
            self.logger.debug(f"Metrics written to {config.metrics.file}")
        except OSError as e:
            self.logger.error(f"Failed to write metrics file: {e}", extra={'path': config.metrics.file})


class Timer:
    """Контекстный менеджер для измерения времени"""

    def __init__(self, metrics: MetricsCollector, command: str):
        self.metrics = metrics
        self.command = command
        self.start_time = None
        self.duration = None

    def __enter__(self):
        self.start_time = time.time()
        return self

    def __exit__(self, exc_type, exc_val, exc_tb):
        self.duration = time.time() - self.start_time
        self.metrics.record_analysis_time(self.command, self.duration)


metrics_collector = MetricsCollector()
