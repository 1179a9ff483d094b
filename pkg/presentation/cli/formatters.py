"""
Вывод отчётов: JSON в stdout, ошибки JSON в stderr, текстовая таблица показателей.
"""
import json
from typing import Any, Dict, List

from domain.entity.report import SCHEMA, Report
from domain.exception.errors import GitStabError


class ReportFormatter:
    """Форматирование отчётов командной строки"""

    @staticmethod
    def to_json(report: Report) -> str:
        return report.to_json()

    @staticmethod
    def error_json(error: Exception) -> str:
        if isinstance(error, GitStabError):
            payload = error.to_dict()
        else:
            payload = {'kind': 'internal', 'message': str(error) or type(error).__name__,
                       'type': type(error).__name__}
        return json.dumps({'schema': SCHEMA, 'error': _jsonable(payload)}, ensure_ascii=False, indent=2)

    @staticmethod
    def table_text(result: Dict[str, Any]) -> str:
        """Строки I-VI с линейными формами и значениями в сертификате"""
        header = ["row", "coordinate", "monomial", "form"]
        has_values = any('value' in row for row in result['rows'])
        if has_values:
            header.append("value")
        body: List[List[str]] = []
        for row in result['rows']:
            label = row['row'] + (f" (m={row['m']})" if 'm' in row else "")
            line = [label, str(row['coordinate']), row['monomial'], row['form']]
            if has_values:
                line.append(str(row.get('value', "")))
            body.append(line)
        widths = [max(len(cells[i]) for cells in [header] + body) for i in range(len(header))]

        def render(cells: List[str]) -> str:
            return "  ".join(cell.ljust(width) for cell, width in zip(cells, widths)).rstrip()

        lines = []
        if result.get('N') is not None:
            title = f"N={result['N']} k={result.get('k')} d={result['d']}"
            if result.get('parameters'):
                title += "  " + " ".join(f"{name}={value}" for name, value in result['parameters'].items())
            lines.append(title)
        lines.append(render(header))
        lines.append(render(["-" * w for w in widths]))
        lines.extend(render(cells) for cells in body)
        if 'minimum' in result:
            lines.append(f"min = {result['minimum']}")
        return "\n".join(lines)


def _jsonable(value: Any) -> Any:
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, (str, int, float, bool)) or value is None:
        return value
    if hasattr(value, 'to_dict'):
        return value.to_dict()
    return str(value)
