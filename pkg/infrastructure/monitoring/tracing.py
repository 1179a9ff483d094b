import functools
from typing import Any, Dict

from opentelemetry import trace
from opentelemetry.exporter.jaeger.thrift import JaegerExporter
from opentelemetry.sdk.resources import Resource
from opentelemetry.sdk.trace import TracerProvider
from opentelemetry.sdk.trace.export import BatchSpanProcessor

from config.settings import config
from infrastructure.monitoring.logging import StructuredLogger


class TraceManager:
    """Менеджер трассировки: спаны экспортируются в Jaeger только при ENABLE_TRACING"""

    def __init__(self):
        self.logger = StructuredLogger("tracing")
        self._tracing_setup = False

    def setup_tracing(self):
        """Настройка OpenTelemetry трассировки"""
        if self._tracing_setup:
            return

        if not config.tracing.enabled:
            self.logger.debug("Tracing disabled by configuration")
            return

        try:
            resource = Resource.create({
                "service.name": "gitstab",
                "service.version": "1.0.0"
            })

            trace.set_tracer_provider(TracerProvider(resource=resource))

            jaeger_exporter = JaegerExporter(
                agent_host_name=config.tracing.jaeger_host,
                agent_port=config.tracing.jaeger_port,
            )

            trace.get_tracer_provider().add_span_processor(
                BatchSpanProcessor(jaeger_exporter)
            )

            self._tracing_setup = True
            self.logger.info(
                f"Tracing setup completed with Jaeger exporter "
                f"({config.tracing.jaeger_host}:{config.tracing.jaeger_port})")
        except Exception as e:
            self.logger.error(f"Failed to setup tracing: {e}")

    def shutdown(self):
        if not self._tracing_setup:
            return
        provider = trace.get_tracer_provider()
        if hasattr(provider, "shutdown"):
            provider.shutdown()

    @staticmethod
    def get_tracer(name: str):
        return trace.get_tracer(name)


def trace_span(name: str, attributes: Dict[str, Any] = None):
    def decorator(func):
        @functools.wraps(func)
        def wrapper(*args, **kwargs):
            tracer = trace_manager.get_tracer(func.__module__)
            logger = StructuredLogger(func.__module__)

            with tracer.start_as_current_span(name, attributes=attributes) as span:
                try:
                    logger.debug(f"Starting {name}", extra={'operation': name})
                    result = func(*args, **kwargs)
                    logger.debug(f"Completed {name}", extra={'operation': name})
                    return result

                except Exception as e:
                    logger.error(f"Error in {name}: {str(e)}", extra={'operation': name})

                    span.record_exception(e)
                    span.set_status(trace.Status(trace.StatusCode.ERROR, str(e)))

                    raise

        return wrapper

    return decorator


trace_manager = TraceManager()
