"""Twin-backend consistency: the compiled core and the pure-Python kernel
must walk the same steps and produce matching values."""
import importlib
import math

import pytest

from specdet import PolynomialPotential
from specdet.engine import make_plan

kp = importlib.import_module("specdet._kernel_py")
try:
    kc = importlib.import_module("specdet._kernel_c")
except ImportError:
    kc = None

CASES = [
    ({2: 0}, 0.0), ({2: 0}, -7.3), ({2: 0}, 2.0 + 1.5j),
    ({4: 0}, 0.0), ({4: 0}, -25.0), ({2: -5.0, 4: 0}, 0.0),
    ({2: 2.0, 4: 0}, 1.0), ({1: 0}, -3.0), ({2: 1.0, 6: 0}, -4.0),
]


def _pot(c):
    n = max(c)
    d = {m: v for m, v in c.items() if m != n}
    return PolynomialPotential(n, d | {n: 1.0})


@pytest.mark.skipif(kc is None, reason="compiled core not built")
@pytest.mark.parametrize("coeffs,lam", CASES)
def test_twin_runs_identical(coeffs, lam):
    pl = make_plan(_pot(coeffs), lam, 1e-12)
    rc = kc.run(pl.coefs, pl.w0, pl.q0, pl.q_switch, pl.rtol)
    rp = kp.run(pl.coefs, pl.w0, pl.q0, pl.q_switch, pl.rtol)
    assert rc[0] == rp[0] == 0
    assert rc[6] == rp[6] and rc[7] == rp[7]          # identical step counts
    assert abs(rc[1] - rp[1]) <= 1e-9 * (1 + abs(rp[1]))
    assert abs(rc[2] - rp[2]) <= 1e-9 * (1 + abs(rp[2]))
    assert abs(rc[4] - rp[4]) <= 1e-9 * (1 + abs(rp[4]))
    assert math.isclose(rc[3], rp[3], rel_tol=1e-12, abs_tol=1e-12)


@pytest.mark.skipif(kc is None, reason="compiled core not built")
def test_backend_selection(monkeypatch):
    import specdet.backend as bk
    monkeypatch.setattr(bk, "_backend", None)
    monkeypatch.setenv("SPECDET_BACKEND", "py")
    assert bk.get_backend() is kp
    monkeypatch.setattr(bk, "_backend", None)
    monkeypatch.setenv("SPECDET_BACKEND", "c")
    assert bk.get_backend() is kc
    monkeypatch.setattr(bk, "_backend", None)
    monkeypatch.setenv("SPECDET_BACKEND", "nope")
    with pytest.raises(ValueError):
        bk.get_backend()
    monkeypatch.setattr(bk, "_backend", None)


def test_degree_cap():
    if kc is None:
        pytest.skip("compiled core not built")
    with pytest.raises(ValueError):
        kc.run([0.0] * 100, 1.0, 10.0, 0.0, 1e-10)
