import pathlib

import pytest

from fnforest import kernels
from fnforest.forest import ForestDiagram, from_text
from fnforest.oracle import enumerate_ball

DATA = pathlib.Path(__file__).parent / "data"

BACKENDS = ["pure"] + (["compiled"] if kernels.compiled is not None else [])


@pytest.fixture(params=BACKENDS)
def backend(request):
    """Run the test once per kernel backend."""
    previous = kernels.BACKEND
    kernels.use(request.param)
    yield request.param
    kernels.use(previous)


_BALLS = {}


def ball(n, r):
    """Balls are backend independent, so one cache serves every test."""
    if (n, r) not in _BALLS:
        _BALLS[n, r] = enumerate_ball(n, r)
    return _BALLS[n, r]


def load_dead_ends():
    """``[(diagram, length, word text), ...]`` from the fixture corpus."""
    blocks = [b for b in (DATA / "dead_ends.txt").read_text().split("\n\n") if b.strip()]
    out = []
    for block in blocks:
        lines = [line for line in block.splitlines() if not line.startswith("#")]
        if not lines:
            continue
        head, text = lines[0], "\n".join(lines[1:])
        fields = dict(item.split("=", 1) for item in head.split(" ", 2))
        d = from_text(text)
        assert d.n == int(fields["n"])
        out.append((d, int(fields["length"]), fields["word"]))
    return out


def raw_diagram(n, raw):
    return ForestDiagram(n, *raw)
