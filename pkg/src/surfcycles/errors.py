"""Exception hierarchy. Every error raised on purpose by the library derives
from :class:`SurfaceError` so the CLI can map it to exit code 1."""


class SurfaceError(Exception):
    """Base class for all library errors."""


class ParseError(SurfaceError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class NonManifold(SurfaceError):
    pass


class NonOrientable(SurfaceError):
    pass


class Disconnected(SurfaceError):
    pass


class NegativeWeight(SurfaceError):
    pass


class OddGenusFormula(SurfaceError):
    pass


class NotSimple(SurfaceError):
    pass


class CycleNotInGraph(SurfaceError):
    pass


class BoundarySurface(SurfaceError):
    pass


class GenusZero(SurfaceError):
    pass


class DegreeTooSmall(SurfaceError):
    pass


class UsesHeavyEdge(SurfaceError):
    pass


class NotADisk(SurfaceError):
    pass


class GluingMismatch(SurfaceError):
    pass


class UntaggedLoopEdge(SurfaceError):
    pass


class TooLarge(SurfaceError):
    pass


class TooSmall(SurfaceError):
    pass


class MissingLayout(SurfaceError):
    pass


class NoNontrivialCycle(SurfaceError):
    """The surface has no non-contractible cycle (genus 0 after closing)."""
