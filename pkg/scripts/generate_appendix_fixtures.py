#!/usr/bin/env python3
"""
Regenera los ficheros .graph de los ejemplos de configuraciones sobre H
(IC con m=9, IIB + IIA y cD/3 triple) en data/fixtures.
"""

import argparse
import logging
import os
import sys

# Añadir el directorio raíz al path
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from config.config import FIXTURES_DIR, LOG_FILE
from src.generators.appendix_fixtures import write_fixtures
from src.utils.logger import setup_logger

logger = logging.getLogger("generate_appendix_fixtures")


def main():
    parser = argparse.ArgumentParser(description="Genera los ficheros de ejemplo")
    parser.add_argument("--dir", default=FIXTURES_DIR, help="Directorio de salida")
    args = parser.parse_args()

    setup_logger("src", log_file=LOG_FILE)
    setup_logger("generate_appendix_fixtures", log_file=LOG_FILE)

    written = write_fixtures(args.dir)
    logger.info(f"🎉 {len(written)} ficheros generados en {args.dir}")


if __name__ == "__main__":
    main()
