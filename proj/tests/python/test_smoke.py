import math
from pathlib import Path

import numpy as np
import pytest

import pps

PARAMS = Path(__file__).resolve().parents[2] / "fixtures" / "params"


def fitted():
    return pps.load_params(PARAMS / "fitted.params")


def test_params_round_trip():
    p = pps.ModelParams(r=1, k=2, a=1, a0=0.25, b=1, b0=0.25, d=1, e=1, f=1, g=1, h=0.25, i=1,
                        i0=0.25, j=1)
    assert pps.parse_params(pps.format_params(p)) == p
    assert p.to_dict()["h"] == 0.25
    assert len(p.to_vector()) == 14
    with pytest.raises(pps.PpsError) as info:
        pps.ModelParams(zeta=1.0)
    assert info.value.code == "ParseError"


def test_simulate_settling_set():
    p = pps.load_params(PARAMS / "settling.params")
    t, states = pps.simulate(p, (4, 3, 2), 500.0)
    assert states.shape == (len(t), 3)
    assert t[-1] == pytest.approx(500.0)
    assert np.max(np.abs(states[-1] - pps.interior_equilibrium(p))) < 1e-2


def test_subsystem_simulation_keeps_zero():
    p = pps.load_params(PARAMS / "decay.params")
    _, states = pps.simulate(p, (0, 4, 6), 200.0, subsystem="predscav")
    assert np.all(states[:, 0] == 0.0)
    assert np.linalg.norm(states[-1]) < 1e-3


def test_analyze():
    report = pps.analyze(fitted())
    interior = [e for e in report["equilibria"] if e["label"] == "Interior"][0]
    assert interior["point"] == pytest.approx([4.4984538, 1.161178, 0.38895175], abs=1e-3)
    assert interior["stability"]["classification"] == "Stable"
    assert report["interior_cross_check"]["agrees"]
    assert "Interior" in pps.analysis_table(fitted())


def test_jacobian_and_routh_hurwitz():
    p = pps.load_params(PARAMS / "settling.params")
    j = pps.jacobian(p, pps.interior_equilibrium(p))
    assert j.shape == (3, 3)
    m1 = -np.trace(j)
    m3 = -np.linalg.det(j)
    m2 = sum(np.linalg.det(j[np.ix_(idx, idx)]) for idx in ([0, 1], [0, 2], [1, 2]))
    assert pps.routh_hurwitz(m1, m2, m3)["classification"] == "Stable"
    assert np.all(np.linalg.eigvals(j).real < 0)
    assert pps.jacobian(p, (1.0, 0.5, 0.0), "predprey").shape == (2, 2)


def test_dataset_and_loss(tmp_path):
    ds = pps.synthesize(fitted(), (4.991, 1.178, 0.577), t_end=10.0, points=40)
    assert len(ds) == 40
    obs = ds.observations
    assert obs.min() >= 0.0 and obs.max() <= 1.0
    loss = pps.total_loss(fitted(), ds)
    assert loss["total"] == loss["mse"] + loss["pie"]
    ds.write(tmp_path / "fixture.csv")
    back = pps.Dataset.read(tmp_path / "fixture.csv")
    assert np.array_equal(back.observations, obs)
    assert back.provenance["source"] == "synthesize"
    _, raw = back.denormalize()
    assert raw[0] == pytest.approx([4.991, 1.178, 0.577])


def test_errors_carry_codes():
    hot = fitted()
    hot.r = 1e9
    with pytest.raises(pps.PpsError) as info:
        pps.synthesize(hot, (4.991, 1.178, 0.577))
    assert info.value.code == "IntegrationFailed"
    with pytest.raises(pps.PpsError):
        pps.Dataset.from_series([0.0, 1.0], np.zeros((2, 3)))


def test_optimizers():
    res = pps.bfgs(lambda v: (1 - v[0]) ** 2 + 100 * (v[1] - v[0] ** 2) ** 2, np.array([-1.2, 1.0]))
    assert res["x"] == pytest.approx([1.0, 1.0], abs=1e-4)
    assert all(b <= a for a, b in zip(res["history"], res["history"][1:]))
    c = np.linspace(-0.5, 0.5, 14)
    res = pps.adam(lambda v: float(np.sum((v - c) ** 2)), lambda v: 2 * (v - c), np.zeros(14),
                   alpha=0.05, num_steps=300)
    assert np.linalg.norm(res["x"] - c) < 0.1


def test_estimate_small_budget_is_deterministic():
    ds = pps.synthesize(fitted(), (4.991, 1.178, 0.577), t_end=10.0, points=40)
    a = pps.estimate(ds, seed=3, epochs=5, bfgs_iterations=5)
    b = pps.estimate(ds, seed=3, epochs=5, bfgs_iterations=5)
    assert a == b
    assert a["final_loss"]["mse"] <= a["post_nn_loss"]["mse"]
    assert len(pps.init_params(3)) == 14
    assert all(math.isfinite(v) for v in a["final_params"].values())
