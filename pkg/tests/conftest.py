import random

import pytest

from spx.presentation import ComplexPresentation, named_complex

NAMED = [
    "point", "sphere", "sphere2", "torus", "surface:2", "rp2", "nonorientable:2", "nonorientable:3",
    "lens:2", "lens:3", "lens:4", "lens:5", "lens:6", "bouquet:1", "bouquet:2", "bouquet:3", "moore:3",
]

# a smaller set for the expensive property checks
SMALL = ["sphere", "sphere2", "torus", "rp2", "nonorientable:2", "lens:3", "lens:4", "bouquet:2"]


def random_presentation(seed: int, circles: int = 3) -> ComplexPresentation:
    """Bouquet of ``circles`` circles with cells a^2, b^3 and one random commutator-like word."""
    rng = random.Random(seed)
    names = tuple("abcdefgh"[:circles])
    words = [((1, 1), (1, 1)), ((2, 1),) * 3]
    extra = []
    for _ in range(rng.randint(2, 5)):
        extra.append((rng.randint(1, circles), rng.choice((1, -1))))
    # keep the extra cell in the commutator subgroup so torsion stays 2 and 3
    extra += [(i, -e) for i, e in reversed(extra)]
    words.append(tuple(extra))
    return ComplexPresentation(names, ("D1", "D2", "D3"), tuple(words))


RANDOM = [random_presentation(11), random_presentation(2024)]


@pytest.fixture(params=NAMED)
def named(request):
    return named_complex(request.param)


_acceptance_lines: list[str] = []


def record_acceptance(line: str):
    _acceptance_lines.append(line)


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_acceptance_lines, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
