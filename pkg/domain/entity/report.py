import json
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, Optional

SCHEMA = "gitstab/1"


class Command(Enum):
    MU = "mu"
    DESTAB = "destab"
    HENON_BUILD = "henon-build"
    ITERATE = "iterate"
    CLASSIFY22 = "classify22"
    LINE_IMAGE = "line-image"
    TABLE = "table"
    AUDIT = "audit-henon22"
    SWEEP = "sweep"


@dataclass(frozen=True)
class AnalysisRequest:
    """Ровно одна команда; опции проверяются до вычислений"""
    command: Command
    source: Optional[str] = None  # путь к файлу или строка отображения/спецификации
    options: Dict[str, Any] = field(default_factory=dict)

    def option(self, name: str, default: Any = None) -> Any:
        return self.options.get(name, default)

    def echo(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {'name': self.command.value}
        if self.source is not None:
            data['source'] = self.source
        data.update({key: _plain(value) for key, value in sorted(self.options.items()) if value is not None})
        return data


@dataclass
class Report:
    """Машиночитаемый отчёт одной команды"""
    request: AnalysisRequest
    result: Dict[str, Any]
    seed: Optional[int] = None
    exact: bool = True

    def to_dict(self) -> Dict[str, Any]:
        return {
            'schema': SCHEMA,
            'command': self.request.echo(),
            'seed': self.seed,
            'exact': self.exact,
            'result': self.result,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), ensure_ascii=False, indent=2)


def _plain(value: Any) -> Any:
    """Значение опции в виде, пригодном для JSON"""
    if isinstance(value, (str, int, float, bool)):
        return value
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    return str(value)
