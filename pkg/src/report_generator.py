"""
Módulo generador de reportes de verificación.

Exporta los resultados de una suite o escenario:
- Texto legible con tabla de chequeos y conclusiones
- JSON con esquema estable (report_v1), chequeos ordenados por id
- Guardado de ambos formatos en results/reportes

Autor: Sistema de Verificación Chern-Simons/BF
Fecha: Octubre 2026
"""

import json
import logging
from dataclasses import dataclass, field
from datetime import datetime
from fractions import Fraction
from pathlib import Path
from typing import Dict, List, Optional

import pandas as pd
from tabulate import tabulate

# Configurar logging
logger = logging.getLogger(__name__)

REPORT_SCHEMA = "report_v1"
PASS = 'PASS'
FAIL = 'FAIL'


@dataclass
class CheckResult:
    """
    Registro de un chequeo.

    Atributos:
        id (str): Identificador del chequeo
        backend (str): 'symbolic' o 'instance'
        passed (bool): Veredicto
        valid_order (int): Orden válido al que se afirmó la igualdad
        certificate (str): Forma normal o término no nulo si falla
        value (str): Valor reportado (chequeos 'report' de escenarios)
        detail (str): Descripción o resumen de ensayos
        wall_time (float): Segundos de ejecución (None sin medición)
    """
    id: str
    backend: str
    passed: bool
    valid_order: Optional[int] = None
    certificate: str = ''
    value: str = ''
    detail: str = ''
    wall_time: Optional[float] = None

    @property
    def verdict(self) -> str:
        return PASS if self.passed else FAIL

    def to_dict(self) -> Dict:
        return {
            'id': self.id,
            'backend': self.backend,
            'verdict': self.verdict,
            'valid_order': self.valid_order,
            'certificate': self.certificate,
            'value': self.value,
            'detail': self.detail,
            'wall_time': None if self.wall_time is None else round(self.wall_time, 6),
        }


@dataclass
class Report:
    """
    Reporte de una ejecución (suite de verificación o escenario).

    El veredicto global es PASS si y solo si todos los chequeos pasan.
    """
    kind: str
    name: str
    algebra: str
    cap: int
    seed: Optional[int] = None
    trials: Optional[int] = None
    checks: List[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def verdict(self) -> str:
        return PASS if self.passed else FAIL

    @property
    def n_passed(self) -> int:
        return sum(1 for c in self.checks if c.passed)

    def sorted_checks(self) -> List[CheckResult]:
        return sorted(self.checks, key=lambda c: (c.id, c.backend))

    def to_dict(self, schema: str = REPORT_SCHEMA) -> Dict:
        data = {
            'schema': schema,
            'kind': self.kind,
            'algebra': self.algebra,
            'cap': self.cap,
            'seed': self.seed,
            'trials': self.trials,
            'verdict': self.verdict,
            'n_checks': len(self.checks),
            'n_passed': self.n_passed,
            'checks': [c.to_dict() for c in self.sorted_checks()],
        }
        data['suite' if self.kind == 'verify' else 'scenario'] = self.name
        return data


class ReportGenerator:
    """
    Clase para renderizar y exportar reportes de verificación.
    """

    def __init__(self, output_dir: str = './results/reportes', schema: str = REPORT_SCHEMA,
                 timing: bool = True):
        """
        Inicializa el generador de reportes.

        Args:
            output_dir (str): Directorio de salida para reportes
            schema (str): Etiqueta de esquema del JSON
            timing (bool): Incluir fecha en el texto (los tiempos ya vienen en el reporte)
        """
        self.output_dir = Path(output_dir)
        self.schema = schema
        self.timing = timing
        self.timestamp = datetime.now().strftime('%Y%m%d_%H%M%S')

    def to_dataframe(self, report: Report) -> pd.DataFrame:
        """Tabla de chequeos ordenada por id."""
        rows = []
        for check in report.sorted_checks():
            rows.append({
                'Chequeo': check.id,
                'Backend': check.backend,
                'Veredicto': check.verdict,
                'Orden válido': '-' if check.valid_order is None else check.valid_order,
                'Valor': check.value or '-',
                'Tiempo (s)': '-' if check.wall_time is None else f"{check.wall_time:.3f}",
            })
        return pd.DataFrame(rows, columns=['Chequeo', 'Backend', 'Veredicto', 'Orden válido',
                                           'Valor', 'Tiempo (s)'])

    def render_text(self, report: Report, interpretation: str = '') -> str:
        """
        Reporte legible: encabezado, tabla de chequeos, fallos y conclusiones.

        Args:
            report (Report): Reporte a renderizar
            interpretation (str): Interpretación global (config.get_verdict_interpretation)

        Returns:
            str: Texto del reporte
        """
        lines = ["=" * 80]
        title = 'SUITE' if report.kind == 'verify' else 'ESCENARIO'
        lines.append(f"REPORTE DE VERIFICACIÓN - {title}: {report.name}")
        lines.append("=" * 80)
        lines.append(f"Álgebra: {report.algebra}   Cap: {report.cap}"
                     + (f"   Semilla: {report.seed}" if report.seed is not None else '')
                     + (f"   Ensayos: {report.trials}" if report.trials is not None else ''))
        if self.timing:
            lines.append(f"Fecha de generación: {datetime.now().strftime('%d/%m/%Y %H:%M:%S')}")
        lines.append('')

        df = self.to_dataframe(report)
        lines.append(tabulate(df, headers='keys', tablefmt='github', showindex=False))
        lines.append('')

        failures = [c for c in report.sorted_checks() if not c.passed]
        if failures:
            lines.append("CERTIFICADOS DE FALLO")
            lines.append("-" * 80)
            for check in failures:
                lines.append(f"✗ {check.id} [{check.backend}]: {check.certificate}")
            lines.append('')

        lines.append("=" * 80)
        lines.append("CONCLUSIONES")
        lines.append("=" * 80)
        lines.append(f"Veredicto: {report.verdict} ({report.n_passed}/{len(report.checks)})")
        if interpretation:
            lines.append(f"Interpretación: {interpretation}")
        return '\n'.join(lines) + '\n'

    def render_json(self, report: Report) -> str:
        """JSON estable: claves ordenadas, chequeos ordenados por id."""
        data = self._clean_for_json(report.to_dict(self.schema))
        return json.dumps(data, indent=2, ensure_ascii=False, sort_keys=True) + '\n'

    def render(self, report: Report, fmt: str, interpretation: str = '') -> str:
        if fmt == 'json':
            return self.render_json(report)
        return self.render_text(report, interpretation)

    def save(self, report: Report, fmt: str, filename: str = None,
             interpretation: str = '') -> Optional[str]:
        """
        Guarda el reporte en el directorio de salida.

        Returns:
            str: Ruta del archivo generado (None si falla la escritura)
        """
        extension = 'json' if fmt == 'json' else 'txt'
        filename = filename or f"verificacion_{report.name}_{self.timestamp}"
        filepath = self.output_dir / f"{filename}.{extension}"

        try:
            self.output_dir.mkdir(parents=True, exist_ok=True)
            with open(filepath, 'w', encoding='utf-8') as f:
                f.write(self.render(report, fmt, interpretation))
            logger.info(f"✓ Reporte guardado: {filepath}")
            return str(filepath)

        except OSError as e:
            logger.error(f"✗ Error al guardar reporte: {str(e)}")
            return None

    def _clean_for_json(self, obj):
        """Limpia objetos para serialización JSON."""
        if isinstance(obj, dict):
            return {k: self._clean_for_json(v) for k, v in obj.items()}
        elif isinstance(obj, list):
            return [self._clean_for_json(item) for item in obj]
        elif isinstance(obj, Fraction):
            return str(obj)
        else:
            return obj
