"""
Jerarquía de excepciones del proyecto.

Todas heredan de SurfaceGraphError (que a su vez es un ValueError), de modo que
la CLI puede capturarlas juntas y devolver el código de salida 2.
"""

from typing import Any, Dict, List, Optional


class SurfaceGraphError(ValueError):
    """Error matemático o de entrada del toolkit."""

    def __init__(self, message: str):
        super().__init__(message)
        self.message = message

    def extra(self) -> Dict[str, Any]:
        return {}

    def to_dict(self) -> Dict[str, Any]:
        """Objeto de error estructurado para los reportes JSON."""
        payload = {"error": type(self).__name__, "message": self.message}
        payload.update(self.extra())
        return payload


class SingularMatrix(SurfaceGraphError):
    pass


class UnderdeterminedSystem(SurfaceGraphError):
    """El sistema es compatible pero tiene infinitas soluciones."""

    def __init__(self, kernel_dim: int, particular: List[Any]):
        super().__init__(f"Sistema indeterminado: solución afín de dimensión {kernel_dim}")
        self.kernel_dim = kernel_dim
        self.particular = particular

    def extra(self) -> Dict[str, Any]:
        return {"kernel_dim": self.kernel_dim}


class UnknownVertex(SurfaceGraphError):
    def __init__(self, vertex_id: str):
        super().__init__(f"Vértice desconocido: {vertex_id}")
        self.vertex_id = vertex_id

    def extra(self) -> Dict[str, Any]:
        return {"vertex": self.vertex_id}


class InvalidGraph(SurfaceGraphError):
    pass


class NotContractible(SurfaceGraphError):
    """La parte blanca del grafo no es definida negativa."""

    def __init__(self, message: str, kind: Optional[str] = None):
        super().__init__(message)
        self.kind = kind

    def extra(self) -> Dict[str, Any]:
        return {"definiteness": self.kind} if self.kind else {}


class NotBlack(SurfaceGraphError):
    def __init__(self, vertex_id: str):
        super().__init__(f"El vértice {vertex_id} no es negro (curva central)")
        self.vertex_id = vertex_id

    def extra(self) -> Dict[str, Any]:
        return {"vertex": self.vertex_id}


class InvalidChain(SurfaceGraphError):
    pass


class InvalidParams(SurfaceGraphError):
    pass


class GlueError(SurfaceGraphError):
    NOT_ISOMORPHIC = "NotIsomorphic"
    UNKNOWN_COMPONENT = "UnknownComponent"

    def __init__(self, reason: str, message: str):
        super().__init__(message)
        self.reason = reason

    def extra(self) -> Dict[str, Any]:
        return {"reason": self.reason}


class ParseError(SurfaceGraphError):
    def __init__(self, line: int, message: str):
        super().__init__(f"línea {line}: {message}")
        self.line = line
        self.detail = message

    def extra(self) -> Dict[str, Any]:
        return {"line": self.line}
