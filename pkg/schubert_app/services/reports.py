from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from weyl_app.services import WeylElement


@dataclass
class IdentityReport:
    """
    Результат проверки одного тождества для одного элемента

    element: приведённое слово элемента (пустое для единицы)
    identity: имя тождества, например 'coproduct'
    passed: True, если тождество выполнено
    witnesses: подстановки или элементы, на которых оно нарушено, пусто при PASS
    substitutions: число выполненных подстановок оракула
    details: данные конкретного тождества (разложения, seed, носители)
    """
    element: List[int]
    identity: str
    passed: bool
    witnesses: List[Any] = field(default_factory=list)
    substitutions: int = 0
    details: Dict[str, Any] = field(default_factory=dict)

    @classmethod
    def for_element(cls, w: Optional[WeylElement], identity: str, **kwargs) -> 'IdentityReport':
        return cls(element=list(w.word) if w is not None else [], identity=identity, **kwargs)

    @property
    def status(self) -> str:
        return 'PASS' if self.passed else 'FAIL'

    def to_json(self) -> Dict[str, Any]:
        data = {
            'element': self.element,
            'identity': self.identity,
            'pass': self.passed,
            'witnesses': self.witnesses,
            'substitutions': self.substitutions,
        }
        if self.details:
            data['details'] = self.details
        return data
