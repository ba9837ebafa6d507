import numpy as np
import pytest

from logic.config import (
    RunConfig,
    apply_preset,
    build_run_config,
    csv_columns,
    load_config,
    load_defaults,
    parse_initial,
    save_config,
)
from logic.errors import ConfigError


def test_packaged_defaults():
    defaults = load_defaults()
    run = defaults["run"]
    assert (run["omega_cm1"], run["gamma_cm1"], run["epsilon_cm1"]) == (3050.0, 125.0, 30.0)
    assert set(defaults["molecules"]) == {"CCl2H2", "CBr2H2", "CI2H2"}


def test_defaults_build_table_values():
    cfg = build_run_config()
    params = cfg.params
    assert (params.omega, params.gamma, params.epsilon) == (3050.0, 125.0, 30.0)
    assert cfg.time_unit == "phase"
    assert len(cfg.time_spec()) == cfg.steps


def test_parse_initial():
    state = parse_initial("1,3")
    assert state.N == 4 and state.amps[3] == 1.0

    state = parse_initial("amps:1:1,0;0,1")
    assert state.N == 1
    assert np.allclose(state.amps, [1 / np.sqrt(2), 1j / np.sqrt(2)])


@pytest.mark.parametrize("text", ["1", "a,b", "-1,2", "amps:2:1,0;0,1", "amps:1:0,0;0,0", "amps:x:1,0"])
def test_parse_initial_errors(text):
    with pytest.raises(ConfigError):
        parse_initial(text)


def test_key_value_file(tmp_path):
    path = tmp_path / "run.cfg"
    path.write_text("# dichloromethane-like run\nomega_cm1 = 3020.1\nsteps=11\ninitial = 2,2\n")
    values = load_config(str(path))
    assert values == {"omega_cm1": "3020.1", "steps": "11", "initial": "2,2"}

    cfg = build_run_config(values, {"steps": 21})
    assert cfg.omega == 3020.1
    assert cfg.steps == 21
    assert cfg.initial_state.N == 4


def test_json_file_and_save(tmp_path):
    path = tmp_path / "run.json"
    cfg = build_run_config(overrides={"gamma": 100.0, "initial": "0,2"})
    save_config(cfg.get_state(), str(path))
    again = build_run_config(load_config(str(path)))
    assert again == cfg


def test_bad_files(tmp_path):
    path = tmp_path / "bad.cfg"
    path.write_text("omega_cm1 3000\n")
    with pytest.raises(ConfigError):
        load_config(str(path))

    path = tmp_path / "bad.json"
    path.write_text("{not json")
    with pytest.raises(ConfigError):
        load_config(str(path))

    assert load_config(str(tmp_path / "missing.json")) == {}

    with pytest.raises(ConfigError):
        build_run_config({"speed_of_light": "1"})


def test_invalid_values():
    with pytest.raises(ConfigError):
        build_run_config(overrides={"steps": 0})
    with pytest.raises(ConfigError):
        build_run_config(overrides={"time_unit": "fs"})
    with pytest.raises(ConfigError):
        build_run_config(overrides={"omega": -1.0}).params
    with pytest.raises(ConfigError):
        build_run_config({"steps": "many"})


def test_molecule_preset():
    cfg = build_run_config(overrides={"molecule": "CCl2H2"})
    assert (cfg.omega, cfg.gamma, cfg.epsilon) == (3020.1, 127.44, 29.54)

    cfg = build_run_config(overrides={"molecule": "CI2H2", "epsilon": 20.0})
    assert (cfg.gamma, cfg.epsilon) == (124.25, 20.0)

    with pytest.raises(ConfigError):
        apply_preset(RunConfig(), "CH4")


def test_csv_columns():
    assert csv_columns("fidelity") == ["t", "phase", "fidelity"]
    assert csv_columns("entropy") == ["t", "phase", "S_bits", "S_normalized", "L"]
    assert csv_columns("witnesses")[:3] == ["t", "phase", "S_bits"]
    assert len(csv_columns("witnesses")) == 12
    with pytest.raises(ConfigError):
        csv_columns("perturb")
