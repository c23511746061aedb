import pytest

from surfcycles.loops import system_of_loops
from surfcycles.surgery import blow_up_basepoint, reroute_loops_through_blowup, split_loops


class Prepared:
    """A closed surface carried through splitting and blow-up."""

    def __init__(self, surface):
        self.surface = surface
        self.loops, self.tc = system_of_loops(surface, 0)
        self.split = split_loops(surface, self.loops, self.tc.tree)
        self.blow = blow_up_basepoint(self.split.surface, 0)
        self.blown_loops = reroute_loops_through_blowup(self.split.loops, self.blow)


@pytest.fixture
def prepare():
    return Prepared


def pytest_configure(config):
    config.acceptance_lines = []


@pytest.fixture
def report(request):
    """Record one pass/fail line per acceptance criterion."""
    def add(number: int, title: str, ok: bool, detail: str) -> bool:
        line = f"criterion {number} [{title}]: {'PASS' if ok else 'FAIL'} ({detail})"
        request.config.acceptance_lines.append(line)
        print(line)
        return ok
    return add


def pytest_terminal_summary(terminalreporter, config):
    lines = getattr(config, "acceptance_lines", [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda s: int(s.split()[1])):
            terminalreporter.write_line(line)
