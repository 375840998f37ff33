import pytest

from conftest import ball
from fnforest import _kernels_py as pure
from fnforest import kernels

pytestmark = pytest.mark.skipif(kernels.compiled is None, reason="compiled kernels not built")


@pytest.mark.parametrize("n,r", [(2, 6), (3, 5), (4, 4), (5, 3)])
def test_backends_agree(n, r):
    fast = kernels.compiled
    for raw in ball(n, r).distance:
        assert fast.length_parts(n, *raw) == pure.length_parts(n, *raw)
        assert fast.labels(n, *raw) == pure.labels(n, *raw)
        for i in range(n):
            for s in (1, -1):
                assert fast.apply_letter(n, *raw, i, s) == pure.apply_letter(n, *raw, i, s)


def test_helpers_agree():
    tree = b"1010000"
    assert kernels.compiled.split_children(tree, 3) == pure.split_children(tree, 3)
    forest = (b"1000", b"0", b"1010000")
    for t in range(4):
        assert kernels.compiled.leaf_start(forest, t) == pure.leaf_start(forest, t)


def test_backend_switch():
    previous = kernels.BACKEND
    try:
        kernels.use("pure")
        assert kernels.apply_letter is pure.apply_letter
        kernels.use("compiled")
        assert kernels.apply_letter is kernels.compiled.apply_letter
        with pytest.raises(ValueError):
            kernels.use("gpu")
    finally:
        kernels.use(previous)
