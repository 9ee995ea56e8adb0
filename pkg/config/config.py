"""
Configuración centralizada del proyecto
"""

import os
from dotenv import load_dotenv

# Cargar variables de entorno
load_dotenv()

# Rutas del proyecto
PROJECT_ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
DATA_DIR = os.path.join(PROJECT_ROOT, 'data')
FIXTURES_DIR = os.path.join(DATA_DIR, 'fixtures')
REPORTS_DIR = os.path.join(DATA_DIR, 'reports')
LOGS_DIR = os.path.join(PROJECT_ROOT, 'logs')

# Configuración de logging
LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'
LOG_LEVEL = os.getenv('SURFACE_LOG_LEVEL', 'INFO')
LOG_FILE = os.getenv('SURFACE_LOG_FILE')

# Cálculo
SEARCH_WORKERS = int(os.getenv('SURFACE_SEARCH_WORKERS', '1'))
REPORT_SCHEMA_VERSION = 1
DEFAULT_MAX_RANK = 20

VALID_LOG_LEVELS = {'DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL'}


def validate_environment():
    """
    Valida las variables de entorno opcionales del proyecto.
    Lanza un EnvironmentError si alguna tiene un valor no válido.
    """
    problems = []
    if LOG_LEVEL.upper() not in VALID_LOG_LEVELS:
        problems.append(f"SURFACE_LOG_LEVEL={LOG_LEVEL} (usa {', '.join(sorted(VALID_LOG_LEVELS))})")
    if SEARCH_WORKERS < 1:
        problems.append(f"SURFACE_SEARCH_WORKERS={SEARCH_WORKERS} (debe ser >= 1)")

    if problems:
        raise EnvironmentError(
            f"Variables de entorno no válidas: {'; '.join(problems)}\n"
            "Por favor, revisa tu archivo .env"
        )
