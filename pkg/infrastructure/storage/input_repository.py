from pathlib import Path
from typing import List, Optional, Tuple

from config.settings import config
from domain.exception.errors import ValidationError
from infrastructure.monitoring.logging import StructuredLogger

FIXTURE_SUFFIXES = (".map", ".spec")


class InputRepository:
    """Источник текста отображений и спецификаций: путь, встроенные фикстуры или сама строка"""

    def __init__(self, maps_dir: Optional[str] = None):
        self.maps_dir = Path(maps_dir or config.analysis.maps_dir)
        self.logger = StructuredLogger('input_repository')

    def read(self, source: str) -> Tuple[str, str]:
        """Текст и его происхождение: "file:<path>", "fixture:<name>" или "inline" """
        if not source or not source.strip():
            raise ValidationError("empty input source")

        if self._looks_like_expression(source):
            return source, "inline"

        path = Path(source)
        if path.is_file():
            self.logger.debug("Reading input file", extra={'path': str(path)})
            return path.read_text(encoding="utf-8"), f"file:{path}"

        fixture = self.fixture_path(source)
        if fixture is not None:
            self.logger.debug("Reading bundled fixture", extra={'fixture': fixture.name})
            return fixture.read_text(encoding="utf-8"), f"fixture:{fixture.name}"

        if source.endswith(FIXTURE_SUFFIXES) or "/" in source:
            raise ValidationError(f"input file not found: {source}", source=source)
        return source, "inline"

    def fixture_path(self, name: str) -> Optional[Path]:
        candidate = self.maps_dir / Path(name).name
        if candidate.suffix in FIXTURE_SUFFIXES and candidate.is_file():
            return candidate
        return None

    def list_fixtures(self) -> List[str]:
        if not self.maps_dir.is_dir():
            return []
        return sorted(p.name for p in self.maps_dir.iterdir() if p.suffix in FIXTURE_SUFFIXES)

    @staticmethod
    def _looks_like_expression(source: str) -> bool:
        return source.lstrip().startswith(("[", "map ", "henon ", "#"))
