import pytest

from gradedreg.rings import presentation

P = 32003


def ring(names, ideal=(), p=P, name=None):
    return presentation(list(names), list(ideal), p, name or ("".join(names) + str(list(ideal))))


@pytest.fixture(scope="session")
def rings():
    """Session-wide presentations so resolution caches are shared across tests."""
    return {
        "k": ring([], name="k"),
        "x": ring("x", name="k[x]"),
        "xy": ring("xy", name="k[x,y]"),
        "xyz": ring("xyz", name="k[x,y,z]"),
        "x2": ring("x", ["x^2"], name="k[x]/(x^2)"),
        "xy/xy": ring("xy", ["x*y"], name="k[x,y]/(xy)"),
        "x2y2": ring("xy", ["x^2", "y^2"], name="k[x,y]/(x^2,y^2)"),
        "x2xy": ring("xy", ["x^2", "x*y"], name="k[x,y]/(x^2,xy)"),
        "quadric": ring("xyz", ["x^2+y*z"], name="k[x,y,z]/(x^2+yz)"),
    }
