import pytest

from dlpa.grounder import ground
from dlpa.model import format_interpretation
from dlpa.parser import parse_program


def grounded(text, mode="intelligent", **kw):
    return ground(parse_program(text), mode=mode, **kw)


def shown(sets):
    """Answer sets as sorted printed lines with auxiliary atoms hidden."""
    return sorted(format_interpretation(s) for s in sets)


def visible(atoms):
    return frozenset(a for a in atoms if not a.is_aux)


@pytest.fixture
def ground_text():
    return grounded


def pytest_terminal_summary(terminalreporter):
    lines = []
    for outcome in ("passed", "failed"):
        for rep in terminalreporter.stats.get(outcome, []):
            if getattr(rep, "when", None) != "call":
                continue
            for key, value in rep.user_properties:
                if key == "criterion":
                    lines.append((int(value[:2]), value, outcome))
    if not lines:
        return
    terminalreporter.section("acceptance criteria")
    for _, value, outcome in sorted(lines):
        terminalreporter.write_line(f"criterion {value.strip()}: {'PASS' if outcome == 'passed' else 'FAIL'}")
