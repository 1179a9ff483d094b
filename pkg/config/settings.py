import os
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

PROJECT_ROOT = Path(__file__).resolve().parent.parent


@dataclass
class LoggingConfig:
    @property
    def level(self):
        return os.getenv("LOG_LEVEL", "WARNING")

    @property
    def file(self) -> Optional[str]:
        return os.getenv("LOG_FILE") or None


@dataclass
class AnalysisConfig:
    """Параметры вычислений и воспроизводимости"""

    @property
    def seed(self):
        return int(os.getenv("GITSTAB_SEED", "20190101"))

    @property
    def cone_solver(self):
        return os.getenv("GITSTAB_CONE_SOLVER", "fourier_motzkin").lower()

    @property
    def fm_max_inequalities(self):
        return int(os.getenv("GITSTAB_FM_MAX_INEQUALITIES", "20000"))

    @property
    def maps_dir(self):
        return os.getenv("GITSTAB_MAPS_DIR", str(PROJECT_ROOT / "maps"))


@dataclass
class TracingConfig:
    @property
    def enabled(self):
        return os.getenv("ENABLE_TRACING", "false").lower() == "true"

    @property
    def jaeger_host(self):
        return os.getenv("JAEGER_HOST", "localhost")

    @property
    def jaeger_port(self):
        return int(os.getenv("JAEGER_PORT", "6831"))


@dataclass
class MetricsConfig:
    @property
    def enabled(self):
        return os.getenv("ENABLE_METRICS", "false").lower() == "true"

    @property
    def file(self) -> Optional[str]:
        return os.getenv("METRICS_FILE") or None


class Config:
    def __init__(self):
        self._logging = LoggingConfig()
        self._analysis = AnalysisConfig()
        self._tracing = TracingConfig()
        self._metrics = MetricsConfig()

    @property
    def logging(self):
        return self._logging

    @property
    def analysis(self):
        return self._analysis

    @property
    def tracing(self):
        return self._tracing

    @property
    def metrics(self):
        return self._metrics


config = Config()
