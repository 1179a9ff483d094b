from typing import Tuple

from domain.entity.henon_spec import HenonSpec
from domain.entity.proj_map import ProjMap
from domain.exception.errors import ValidationError
from domain.service.henon_service import HenonService
from domain.service.rational_map_service import RationalMapService
from infrastructure.monitoring.logging import StructuredLogger
from infrastructure.storage.input_repository import InputRepository
from presentation.cli.parsers import MapParser, SpecParser, is_spec_text


class InputLoader:
    """Текст из репозитория -> разобранное и нормализованное отображение или спецификация"""

    def __init__(self, repository: InputRepository, rational_maps: RationalMapService, henon: HenonService):
        self.repository = repository
        self.rational_maps = rational_maps
        self.henon = henon
        self.map_parser = MapParser()
        self.spec_parser = SpecParser()
        self.logger = StructuredLogger('input_loader')

    def load_map(self, source: str) -> Tuple[ProjMap, str]:
        """Отображение из записи map или гомогенизация спецификации Хенона"""
        text, origin = self.repository.read(source)
        if is_spec_text(text):
            m = self.henon.homogenize_map(self.spec_parser.parse(text))
        else:
            m = self.map_parser.parse(text)
        normalized = self.rational_maps.normalize(m)
        if normalized.d != m.d:
            self.logger.info("Common factor removed from input map", extra={
                'origin': origin, 'degree': m.d, 'normalized_degree': normalized.d})
        return normalized, origin

    def load_spec(self, source: str) -> Tuple[HenonSpec, str]:
        text, origin = self.repository.read(source)
        if not is_spec_text(text):
            raise ValidationError(f"expected a Henon spec ('henon N=.. k=.. d=.. b=(..) ...'), got {origin} input")
        return self.spec_parser.parse(text), origin
