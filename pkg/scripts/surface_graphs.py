#!/usr/bin/env python3
"""
Línea de comandos de surface-graphs.

Subcomandos:
    analyze      Reporte JSON (o DOT) de un fichero .graph
    template     Diagrama del elefante general para un tipo de germen
    glue         Pega dos diagramas por componentes blancas
    compatible   Enumera pegados de Dynkin entre dos tipos de germen
    hj           Fracción continua de Hirzebruch–Jung de 1/n(1,q)
    k2a          Reporte de factibilidad de una configuración k2A
    k2a-search   Barrido acotado de configuraciones k2A
    fixtures     Regenera los ficheros de ejemplo en data/fixtures
    sweep-export Exporta el barrido k2A a CSV/XLSX

Códigos de salida: 0 éxito, 1 uso incorrecto, 2 error matemático o de entrada.
"""

import argparse
import logging
import os
import sys
from typing import List, Optional, Tuple

# Añadir el directorio raíz al path
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from config.config import FIXTURES_DIR, LOG_FILE, REPORTS_DIR, SEARCH_WORKERS, validate_environment
from src.core.errors import SurfaceGraphError
from src.core.k2a_feasibility import QUOTED, SWAPPED, K2AConfig, search_infeasible
from src.core.quotient_sing import CyclicQuotient, classify_quotient
from src.generators.appendix_fixtures import write_fixtures
from src.generators.dot_exporter import emit_dot
from src.generators.germ_catalog import (
    ElephantGraph,
    GermKind,
    GermTemplateSpec,
    ParamBounds,
    enumerate_compatible,
    glue,
    template,
)
from src.generators.report_builder import (
    analyze,
    compatible_report,
    dumps,
    elephant_report,
    error_report,
    export_table,
    hj_report,
    k2a_report,
    search_report,
    sweep_table,
)
from src.utils.graph_dsl import GraphDocument, SurfaceContext, read_document, render, write_document
from src.utils.logger import setup_logger

logger = logging.getLogger("surface_graphs")

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_MATH = 2


class UsageError(Exception):
    pass


class CliParser(argparse.ArgumentParser):
    """argparse con código de salida 1 para errores de uso."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _triple(text: str) -> Tuple[int, int, int]:
    try:
        m, p, a = (int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"se esperaba m,p,a (tres enteros): {text}")
    return m, p, a


def _emit(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _read(path: str) -> GraphDocument:
    if not os.path.exists(path):
        raise UsageError(f"No existe el fichero: {path}")
    return read_document(path)


def _as_elephant(doc: GraphDocument) -> ElephantGraph:
    return ElephantGraph(doc.graph, tuple(doc.graph.blacks()))


def cmd_analyze(args) -> int:
    doc = _read(args.file)
    if args.dot:
        _emit(emit_dot(doc))
    else:
        _emit(dumps(analyze(doc)))
    return EXIT_OK


def cmd_template(args) -> int:
    spec = GermTemplateSpec(GermKind(args.kind), m=args.m, k=args.k, n=args.n, l=args.l)
    elephant = template(spec)
    doc = GraphDocument(SurfaceContext.ELEPHANT, elephant.graph, str(spec))
    if args.out:
        write_document(doc, args.out)
        logger.info(f"✅ Plantilla {spec} guardada en {args.out}")
    if args.dot:
        _emit(emit_dot(doc))
    elif args.json:
        _emit(dumps(elephant_report(elephant, str(spec))))
    elif not args.out:
        _emit(render(doc))
    return EXIT_OK


def cmd_glue(args) -> int:
    e1, e2 = _as_elephant(_read(args.file1)), _as_elephant(_read(args.file2))
    glued = glue(e1, e2, args.comp1, args.comp2, flip=args.flip)
    label = f"{args.file1}[{args.comp1}] + {args.file2}[{args.comp2}]" + (" (flip)" if args.flip else "")
    if args.out:
        write_document(GraphDocument(SurfaceContext.ELEPHANT, glued.graph, label), args.out)
        logger.info(f"✅ Pegado guardado en {args.out}")
    _emit(dumps(elephant_report(glued, label)))
    return EXIT_OK


def cmd_compatible(args) -> int:
    bounds = ParamBounds(max_m=args.max_m, max_rank=args.max_rank)
    found = enumerate_compatible(
        GermKind(args.kind_a),
        GermKind(args.kind_b),
        bounds,
        distinct_ends=not args.any_ends,
        workers=args.workers,
    )
    _emit(dumps(compatible_report(found)))
    return EXIT_OK


def cmd_hj(args) -> int:
    _emit(dumps(hj_report(classify_quotient(CyclicQuotient(args.n, args.q)))))
    return EXIT_OK


def cmd_k2a(args) -> int:
    cfg = K2AConfig.from_tuples(args.p0, args.p1, args.p2)
    report = k2a_report(cfg, orientation=args.orientation)
    verdict = "✅ factible" if report["feasible"] else "❌ no factible"
    logger.info(f"🔍 {cfg}: {verdict}")
    _emit(dumps(report))
    return EXIT_OK


def cmd_k2a_search(args) -> int:
    if args.exploratory:
        logger.warning("⚠️ Modo exploratorio: se omite la condición de índice 2 en cada curva")
    found = search_infeasible(args.max_m, args.max_p, exploratory=args.exploratory, workers=args.workers)
    _emit(dumps(search_report(found, args.max_m, args.max_p, args.exploratory)))
    return EXIT_OK


def cmd_fixtures(args) -> int:
    written = write_fixtures(args.dir)
    logger.info(f"📊 {len(written)} ficheros en {args.dir}")
    return EXIT_OK


def cmd_sweep_export(args) -> int:
    df = sweep_table(args.max_m, args.max_p, exploratory=args.exploratory)
    export_table(df, args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = CliParser(prog="surface-graphs", description="Aritmética exacta de grafos duales de resoluciones")
    parser.add_argument("--log-level", default=None, choices=["DEBUG", "INFO", "WARNING", "ERROR"])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="Reporte de un fichero .graph")
    p.add_argument("file")
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", help="Reporte JSON (por defecto)")
    fmt.add_argument("--dot", action="store_true", help="Salida DOT")
    p.set_defaults(handler=cmd_analyze)

    p = sub.add_parser("template", help="Diagrama de un tipo de germen")
    p.add_argument("kind", choices=[k.value for k in GermKind])
    for name in ("m", "k", "n", "l"):
        p.add_argument(f"--{name}", type=int, default=None)
    p.add_argument("--out", default=None, help="Guarda el diagrama en formato .graph")
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true")
    fmt.add_argument("--dot", action="store_true")
    p.set_defaults(handler=cmd_template)

    p = sub.add_parser("glue", help="Pega dos diagramas")
    p.add_argument("file1")
    p.add_argument("file2")
    p.add_argument("--comp1", type=int, required=True)
    p.add_argument("--comp2", type=int, required=True)
    p.add_argument("--flip", action="store_true", help="Invierte la orientación de la segunda cadena")
    p.add_argument("--out", default=None)
    p.set_defaults(handler=cmd_glue)

    p = sub.add_parser("compatible", help="Pegados de Dynkin entre dos tipos")
    p.add_argument("kind_a", choices=[k.value for k in GermKind])
    p.add_argument("kind_b", choices=[k.value for k in GermKind])
    p.add_argument("--max-m", type=int, default=ParamBounds.max_m)
    p.add_argument("--max-rank", type=int, default=ParamBounds.max_rank)
    p.add_argument("--any-ends", action="store_true", help="Desactiva la regla de extremos distintos")
    p.add_argument("--workers", type=int, default=SEARCH_WORKERS)
    p.set_defaults(handler=cmd_compatible)

    p = sub.add_parser("hj", help="Cadena de Hirzebruch–Jung de 1/n(1,q)")
    p.add_argument("n", type=int)
    p.add_argument("q", type=int)
    p.set_defaults(handler=cmd_hj)

    p = sub.add_parser("k2a", help="Factibilidad de una configuración k2A")
    for name in ("p0", "p1", "p2"):
        p.add_argument(f"--{name}", type=_triple, required=True, metavar="m,p,a")
    p.add_argument("--orientation", choices=[QUOTED, SWAPPED], default=QUOTED)
    p.set_defaults(handler=cmd_k2a)

    p = sub.add_parser("k2a-search", help="Barrido acotado de configuraciones k2A")
    p.add_argument("--max-m", type=int, required=True)
    p.add_argument("--max-p", type=int, required=True)
    p.add_argument("--exploratory", action="store_true")
    p.add_argument("--workers", type=int, default=SEARCH_WORKERS)
    p.set_defaults(handler=cmd_k2a_search)

    p = sub.add_parser("fixtures", help="Regenera los ficheros de ejemplo")
    p.add_argument("--dir", default=FIXTURES_DIR)
    p.set_defaults(handler=cmd_fixtures)

    p = sub.add_parser("sweep-export", help="Exporta el barrido k2A")
    p.add_argument("--max-m", type=int, required=True)
    p.add_argument("--max-p", type=int, required=True)
    p.add_argument("--exploratory", action="store_true")
    p.add_argument("--out", default=os.path.join(REPORTS_DIR, "k2a_sweep.xlsx"), help="Ruta .csv o .xlsx")
    p.set_defaults(handler=cmd_sweep_export)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE

    try:
        validate_environment()
    except EnvironmentError as e:
        print(f"❌ {e}", file=sys.stderr)
        return EXIT_USAGE

    setup_logger("src", args.log_level, LOG_FILE)
    setup_logger("surface_graphs", args.log_level, LOG_FILE)

    try:
        return args.handler(args)
    except SurfaceGraphError as e:
        logger.error(f"❌ {type(e).__name__}: {e.message}")
        _emit(dumps(error_report(e)))
        return EXIT_MATH
    except UsageError as e:
        logger.error(f"❌ {e}")
        return EXIT_USAGE
    except Exception as e:
        logger.exception(f"❌ Error inesperado: {e}")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
