import logging
import sys
import os
from datetime import datetime, timezone
from typing import Dict, Any, Optional
import uuid
from pythonjsonlogger.json import JsonFormatter

SERVICE_NAME = 'gitstab'


class ELKJSONFormatter(JsonFormatter):
    """Форматтер для ELK-совместимого JSON-логирования"""

    def add_fields(self, log_record, record, message_dict):
        super().add_fields(log_record, record, message_dict)

        # Стандартные поля для ELK
        log_record['@timestamp'] = datetime.now(timezone.utc).isoformat().replace('+00:00', 'Z')
        log_record['level'] = record.levelname
        log_record['logger_name'] = record.name
        log_record['service'] = SERVICE_NAME
        log_record['environment'] = os.getenv('ENVIRONMENT', 'development')

        # Убираем дублирующиеся поля
        if 'message' in log_record and 'msg' in log_record:
            log_record.pop('msg')


class StructuredLogger:
    """Структурированное логирование с trace_id и именем компонента"""

    def __init__(self, name: str):
        self.logger = logging.getLogger(name)
        self.trace_id = str(uuid.uuid4())

    def set_trace_id(self, trace_id: str):
        self.trace_id = trace_id

    def _log_with_context(self, level: int, message: str, extra: Optional[Dict[str, Any]] = None):
        if not self.logger.isEnabledFor(level):
            return
        extra_data = dict(extra or {})
        extra_data['trace_id'] = self.trace_id
        extra_data['service'] = SERVICE_NAME
        extra_data['component'] = self.logger.name

        self.logger.log(level, message, extra=extra_data)

    def info(self, message: str, extra: Dict[str, Any] = None):
        self._log_with_context(logging.INFO, message, extra)

    def error(self, message: str, extra: Dict[str, Any] = None):
        self._log_with_context(logging.ERROR, message, extra)

    def warning(self, message: str, extra: Dict[str, Any] = None):
        self._log_with_context(logging.WARNING, message, extra)

    def debug(self, message: str, extra: Dict[str, Any] = None):
        self._log_with_context(logging.DEBUG, message, extra)

    def metric(self, name: str, value: float, tags: Dict[str, str] = None):
        """Логирование числовых фактов вычисления"""
        extra = {
            'metric_name': name,
            'metric_value': value,
            'type': 'metric'
        }
        if tags:
            extra.update(tags)
        self.debug(f"METRIC: {name} = {value}", extra=extra)


def setup_logging(log_level: Optional[str] = None, log_file: Optional[str] = None):
    """Настройка логирования: JSON в stderr (stdout занят отчётами) и, по желанию, в файл"""
    root_logger = logging.getLogger()
    level_name = (log_level or os.getenv("LOG_LEVEL", "WARNING")).upper()
    root_logger.setLevel(getattr(logging, level_name, logging.WARNING))

    formatter = ELKJSONFormatter(
        '%(levelname)s %(name)s %(message)s',
        rename_fields={
            'levelname': 'level',
            'name': 'logger_name'
        }
    )

    for handler in list(root_logger.handlers):
        if getattr(handler, '_gitstab', False):
            root_logger.removeHandler(handler)

    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setFormatter(formatter)
    console_handler._gitstab = True
    root_logger.addHandler(console_handler)

    log_file = log_file or os.getenv("LOG_FILE")
    if log_file:
        directory = os.path.dirname(log_file)
        if directory:
            os.makedirs(directory, exist_ok=True)
        file_handler = logging.FileHandler(log_file)
        file_handler.setFormatter(formatter)
        file_handler._gitstab = True
        root_logger.addHandler(file_handler)

    return root_logger
