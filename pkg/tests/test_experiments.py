import logging

import numpy as np
import pytest

from netimbalance.errors import InvalidParameter
from netimbalance.experiments import (
    BA_GRID,
    ER_GRID,
    WS_GRID,
    SweepSpec,
    ba_qos_reversal,
    comparison_csv,
    model_graph,
    pooled_se,
    run_sweep,
    steepest_drop,
    ws_metric_comparison,
    zoo_csv,
    zoo_landscape,
)
from netimbalance.metric import QoSProfile, imbalance

P = QoSProfile(1.0, 4.0)


def test_grids():
    assert len(ER_GRID) == 41 and ER_GRID[0] == 0.0 and ER_GRID[-1] == 0.4
    assert ER_GRID[1] == 0.01
    assert BA_GRID == tuple(range(1, 11))
    assert len(WS_GRID) == 20
    assert WS_GRID[0] == pytest.approx(1e-3) and WS_GRID[-1] == pytest.approx(1.0)


def test_spec_validation():
    with pytest.raises(InvalidParameter):
        SweepSpec("xx", model_param_grid=(0.1,))
    with pytest.raises(InvalidParameter):
        SweepSpec("er", model_param_grid=(0.1,), runs=0)
    with pytest.raises(InvalidParameter):
        SweepSpec("er", model_param_grid=())
    with pytest.raises(InvalidParameter):
        model_graph("ba", 20, 2.5, 0)


def test_empty_er_is_maximally_imbalanced():
    res = run_sweep(SweepSpec("er", n=20, model_param_grid=(0.0,), runs=3))
    for point in res.points:
        assert point.mean_I == 1.0 and point.std_I == 0.0


def test_sweep_is_reproducible_and_paired():
    spec = SweepSpec("ws", n=30, model_param_grid=(0.01, 0.5), runs=4, base_seed=7)
    one, two = run_sweep(spec), run_sweep(spec)
    assert one.to_csv() == two.to_csv()
    # run r uses seed base_seed + r at every grid point
    first = one.points[0]
    assert first.values[2] == imbalance(model_graph("ws", 30, 0.01, 9), first.profile).I
    other = run_sweep(SweepSpec("ws", n=30, model_param_grid=(0.01, 0.5), runs=4, base_seed=8))
    assert other.to_csv() != one.to_csv()


def test_sweep_workers_do_not_change_results():
    spec = SweepSpec("er", n=25, model_param_grid=(0.1, 0.2), runs=3, base_seed=1)
    assert run_sweep(spec, workers=2).to_csv() == run_sweep(spec).to_csv()


def test_single_run_warns(caplog):
    with caplog.at_level(logging.WARNING):
        res = run_sweep(SweepSpec("ba", n=20, model_param_grid=(2,), runs=1))
    assert all(p.std_I == 0.0 for p in res.points)
    assert "single run" in caplog.text


def test_sample_std():
    res = run_sweep(SweepSpec("er", n=20, model_param_grid=(0.2,), profiles=(P,), runs=5))
    pt = res.points[0]
    assert pt.std_I == pytest.approx(np.std(pt.values, ddof=1), abs=1e-15)
    assert pt.mean_I == pytest.approx(np.mean(pt.values), abs=1e-15)


def test_csv_and_curve():
    spec = SweepSpec("ba", n=20, model_param_grid=(1, 2, 3), runs=2)
    res = run_sweep(spec)
    lines = res.to_csv().splitlines()
    assert lines[0] == "model,n,param,a,h0,runs,mean_I,std_I"
    assert len(lines) == 1 + 3 * len(spec.profiles)
    params, means, stds = res.curve(spec.profiles[0])
    assert params.tolist() == [1, 2, 3] and means.shape == stds.shape == (3,)


def test_zoo_shows_decoupling():
    rows = {name: (gini, i) for name, gini, i in zoo_landscape()}
    assert len(rows) == 10
    assert rows["complete"] == (0.0, 0.0)
    # equal degree heterogeneity, very different imbalance
    assert rows["ring"][0] == 0.0 and rows["ring"][1] > 0.2
    # a hub gives high heterogeneity and near-zero imbalance
    assert rows["star"][0] > 0.4 and rows["star"][1] < 0.01
    assert zoo_csv(zoo_landscape()).startswith("model,degree_gini,I\n")


def test_ws_comparison_table():
    rows = ws_metric_comparison(n=30, p_grid=(0.001, 0.1, 1.0), runs=3)
    assert [r.p for r in rows] == [0.001, 0.1, 1.0]
    assert rows[0].avg_path_length > rows[-1].avg_path_length
    assert rows[0].I > rows[-1].I
    assert comparison_csv(rows).splitlines()[0] == "p,I,jain_unfairness,avg_path_length,path_variance"


def test_ba_reversal_pairs_profiles():
    rev = ba_qos_reversal(n=30, runs=4, seed=2)
    assert rev.strict.profile == QoSProfile(2.0, 1.0)
    assert rev.lenient.profile == QoSProfile(2.0, 4.0)
    assert rev.strict.mean_I > rev.lenient.mean_I


def test_steepest_drop_and_pooled_se():
    assert steepest_drop([0, 1, 2, 4], [1.0, 0.9, 0.2, 0.0]) == (1.0, 2.0)
    # slope is per unit parameter, not per grid step
    assert steepest_drop([0, 0.1, 1.0], [1.0, 0.8, 0.0]) == (0.0, 0.1)
    assert pooled_se(3.0, 4.0, 25) == 1.0
