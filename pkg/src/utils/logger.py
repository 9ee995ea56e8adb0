import logging
import os
from typing import Optional

from config.config import LOG_FORMAT, LOG_LEVEL, LOGS_DIR


def setup_logger(
    name: str = 'src', level: Optional[str] = None, log_file: Optional[str] = None
) -> logging.Logger:
    """
    Configura y devuelve un logger que escribe en stderr y, si se indica, en un fichero
    (las rutas relativas se resuelven dentro de LOGS_DIR).

    Los reportes van a stdout, así que el log nunca se mezcla con ellos.
    """
    logger = logging.getLogger(name)
    logger.setLevel((level or LOG_LEVEL).upper())
    if not logger.handlers:
        formatter = logging.Formatter(LOG_FORMAT)
        ch = logging.StreamHandler()
        ch.setFormatter(formatter)
        logger.addHandler(ch)
        if log_file:
            if not os.path.isabs(log_file):
                log_file = os.path.join(LOGS_DIR, log_file)
            directory = os.path.dirname(log_file)
            if directory:
                os.makedirs(directory, exist_ok=True)
            fh = logging.FileHandler(log_file, encoding='utf-8')
            fh.setFormatter(formatter)
            logger.addHandler(fh)
    return logger
