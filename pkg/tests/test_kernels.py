import os
import random
import subprocess
import sys

import flint
import numpy as np
import pytest

from painleve6 import kernels
from painleve6.kernels import _numba, _numpy

P = 2147483629
BACKENDS = [_numba, _numpy]


def rand_poly(rng, n):
    return np.array([rng.randrange(P) for _ in range(n + 1)], dtype=np.int64)


@pytest.mark.parametrize("impl", BACKENDS, ids=["numba", "numpy"])
def test_resultant_vs_flint(impl):
    rng = random.Random(5)
    for trial in range(60):
        a = rand_poly(rng, rng.randint(0, 9))
        b = rand_poly(rng, rng.randint(0, 9))
        if trial % 5 == 0:
            c = flint.nmod_poly([rng.randrange(P), 1], P)
            a = np.array([int(v) for v in (flint.nmod_poly(a.tolist(), P) * c).coeffs()], dtype=np.int64)
            b = np.array([int(v) for v in (flint.nmod_poly(b.tolist(), P) * c).coeffs()], dtype=np.int64)
        ref = int(flint.nmod_poly(a.tolist(), P).resultant(flint.nmod_poly(b.tolist(), P)))
        assert impl.resultant(a, b, P) == ref


@pytest.mark.parametrize("impl", BACKENDS, ids=["numba", "numpy"])
def test_interpolation(impl):
    rng = random.Random(7)
    co = [rng.randrange(P) for _ in range(11)]
    xs = np.array(rng.sample(range(1, P), 11), dtype=np.int64)
    ys = np.array([int(flint.nmod_poly(co, P)(int(x))) for x in xs], dtype=np.int64)
    assert list(impl.interpolate(xs, ys, P)) == co
    assert impl.poly_eval(np.array(co, dtype=np.int64), int(xs[0]), P) == ys[0]


def test_grid_backends_agree():
    rng = np.random.default_rng(3)
    D1 = rng.integers(0, P, size=(4, 3, 2), dtype=np.int64)
    D2 = rng.integers(0, P, size=(3, 2, 3), dtype=np.int64)
    us = np.array([5, 9, 13, 17], dtype=np.int64)
    xs = np.array([2, 3, 7], dtype=np.int64)
    v1, ok1 = _numba.resultant_grid(D1, D2, us, xs, P)
    v2, ok2 = _numpy.resultant_grid(D1, D2, us, xs, P)
    assert (ok1 == ok2).all() and (v1[ok1] == v2[ok2]).all()


def _backend_in_subprocess(value):
    env = dict(os.environ, PAINLEVE6_KERNELS=value)
    code = "from painleve6 import kernels; print(kernels.BACKEND)"
    return subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True)


def test_default_backend():
    assert kernels.BACKEND in ("numba", "numpy")


def test_numpy_backend_selected_by_env():
    r = _backend_in_subprocess("numpy")
    assert r.returncode == 0 and r.stdout.strip() == "numpy"


def test_bad_backend_rejected():
    r = _backend_in_subprocess("cuda")
    assert r.returncode != 0 and "PAINLEVE6_KERNELS" in r.stderr


def test_modular_stats_under_numpy_backend():
    env = dict(os.environ, PAINLEVE6_KERNELS="numpy")
    code = (
        "from painleve6.catalog import load_catalog\n"
        "from painleve6.modular import modular_curve_stats\n"
        "st = modular_curve_stats(load_catalog()['K'].solution())\n"
        "print(st.b, st.d, st.terms)"
    )
    r = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, timeout=600)
    assert r.returncode == 0, r.stderr
    assert r.stdout.split() == ["7", "8", "12"]
