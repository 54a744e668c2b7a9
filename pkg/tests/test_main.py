import re

import numpy as np
import pandas as pd
import pytest

from main import main

REPORT_LINE = re.compile(r"^\w+=")

SPECTRUM = [
    "spectrum", "--model", "two-level", "--theta2", "1.5707963268",
    "--phi0", "1.5707963268", "--gamma-e", "4", "--tau", "0", "--obs",
    "T_1to2,T_2to1", "--delta", "-10:10:1001"
]


def _row_at_zero(path):
    frame = pd.read_csv(path)
    return frame.iloc[int(np.argmin(np.abs(frame["delta"])))]


def test_spectrum(tmp_path):
    assert main([*SPECTRUM, "--workdir", str(tmp_path), "--out",
                 "s.csv"]) == 0
    row = _row_at_zero(tmp_path / "s.csv")
    assert row["T_1to2"] == pytest.approx(0, abs=1e-9)
    assert row["T_2to1"] == pytest.approx(1, abs=1e-9)


def test_spectrum_in_degrees(tmp_path):
    args = [
        "spectrum", "--deg", "--theta2", "90", "--phi0", "90", "--gamma-e",
        "4", "--obs", "T_1to2", "--delta", "-1:1:3", "--workdir",
        str(tmp_path)
    ]
    assert main(args) == 0
    row = _row_at_zero(tmp_path / "spectrum-two-level.csv")
    assert row["T_1to2"] == pytest.approx(0, abs=1e-9)


def test_invalid_rate_is_a_usage_error(tmp_path):
    assert main([*SPECTRUM, "--gamma-wg", "0.0", "--workdir",
                 str(tmp_path)]) == 2


def test_parameter_of_another_model_is_a_usage_error(tmp_path):
    assert main([*SPECTRUM, "--rabi", "1", "--workdir",
                 str(tmp_path)]) == 2


def test_config_matches_flags(tmp_path):
    config = tmp_path / "run.yaml"
    config.write_text("\n".join([
        "model: two-level",
        "theta2: 1.5707963268",
        "phi0: 1.5707963268",
        "gamma_e: 4",
        "tau: 0",
        "obs: [T_1to2, T_2to1]",
        "delta: '-10:10:1001'",
        f"workdir: '{tmp_path}'",
        "out: from-config.csv",
    ]))
    assert main(["spectrum", "--config", str(config)]) == 0
    assert main([*SPECTRUM, "--workdir", str(tmp_path), "--out",
                 "from-flags.csv"]) == 0
    assert (tmp_path / "from-config.csv").read_text() == \
        (tmp_path / "from-flags.csv").read_text()


def test_json_config_and_override(tmp_path):
    config = tmp_path / "run.json"
    config.write_text('{"obs": "R", "delta": "0:0:1", "tau": 1.0, '
                      '"theta2": 1.5707963268, "phi0": 3.14159265359}')
    assert main(["spectrum", "--config", str(config), "--workdir",
                 str(tmp_path), "--out", "r.csv"]) == 0
    assert _row_at_zero(tmp_path / "r.csv")["R"] == pytest.approx(1)

    assert main(["spectrum", "--config", str(config), "--phi0",
                 "1.5707963268", "--workdir", str(tmp_path), "--out",
                 "r0.csv"]) == 0
    assert _row_at_zero(tmp_path / "r0.csv")["R"] == pytest.approx(
        0, abs=1e-9)


def test_unknown_config_key(tmp_path):
    config = tmp_path / "run.yaml"
    config.write_text("obs: R\ncolour: blue\n")
    assert main(["spectrum", "--config", str(config)]) == 2


def test_missing_config_file(tmp_path):
    assert main(["spectrum", "--config", str(tmp_path / "none.yaml")]) == 3


def test_map(tmp_path):
    args = [
        "map", "--model", "nabla", "--rabi", "5", "--phi-a0", "90",
        "--delta", "-2:2:5", "--axis2", "theta:0:180:3", "--deg", "--obs",
        "C", "--workdir",
        str(tmp_path), "--out", "c.csv"
    ]
    assert main(args) == 0
    frame = pd.read_csv(tmp_path / "c.csv")
    assert list(frame.columns) == ["delta", "theta", "C"]
    assert len(frame) == 15
    np.testing.assert_allclose(frame[frame["theta"] > 1.5]["C"].iloc[:1],
                               1, atol=1e-9)


def test_figure(tmp_path):
    assert main(["figure", "fig4inset", "--out-dir", str(tmp_path)]) == 0
    row = _row_at_zero(tmp_path / "fig4inset.csv")
    assert row["R"] == pytest.approx(1, abs=1e-9)


def test_figure_circulator(tmp_path):
    assert main(["figure", "fig8d", "--out-dir", str(tmp_path)]) == 0
    row = _row_at_zero(tmp_path / "fig8d.csv")
    assert row["S_1to3"] == pytest.approx(1, abs=1e-6)


def test_unknown_figure(tmp_path):
    assert main(["figure", "nope", "--out-dir", str(tmp_path)]) == 2
    assert main(["figure", "--out-dir", str(tmp_path)]) == 2


def test_verify(capsys):
    assert main(["verify", "--seed", "42", "--trials", "200", "--tol",
                 "1e-10"]) == 0
    assert "passed=True" in capsys.readouterr().out


def test_verify_negative_control(capsys):
    assert main(["verify", "--trials", "20", "--negative-control"]) == 1
    assert "passed=False" in capsys.readouterr().out


def test_verify_needs_trials():
    assert main(["verify", "--trials", "0"]) == 2


def _report(capsys):
    lines = capsys.readouterr().out.splitlines()
    return dict(
        line.split("=", 1) for line in lines if REPORT_LINE.match(line))


def test_device_circulator(capsys):
    assert main(["device", "--preset", "fig8d", "--delta", "0", "--cycle",
                 "1,3,4,2"]) == 0
    report = _report(capsys)
    assert report["config"] == "fig8d"
    assert float(report["fidelity_1342"]) == pytest.approx(1, abs=1e-6)


def test_device_undriven_router(capsys):
    assert main(["device", "--preset", "fig8a", "--router", "1:4"]) == 0
    assert float(_report(capsys)["efficiency_1to4"]) == 0


def test_device_phase_loop(capsys):
    assert main(["device", "--preset", "fig9", "--contrast", "1,4"]) == 0
    assert abs(float(_report(capsys)["contrast_1_4"])) > 1e-3


def test_device_flags_override_preset(capsys):
    # Real couplings make the loop reciprocal.
    assert main(["device", "--preset", "fig9", "--beta", "0", "--theta",
                 "0", "--theta-prime", "0", "--contrast", "1,4"]) == 0
    assert abs(float(_report(capsys)["contrast_1_4"])) < 1e-6


def test_device_loop_ignores_drive_phase(capsys):
    assert main(["device", "--preset", "fig9", "--contrast", "1,4"]) == 0
    preset = float(_report(capsys)["contrast_1_4"])
    assert main(["device", "--preset", "fig9", "--beta", "0",
                 "--contrast", "1,4"]) == 0
    assert float(_report(capsys)["contrast_1_4"]) == pytest.approx(preset)


def test_device_bad_router():
    assert main(["device", "--router", "1", "--model", "two-level"]) == 2


def test_figure_through_the_dark_point(tmp_path):
    assert main(["figure", "fig3e", "--out-dir", str(tmp_path)]) == 0
    frame = pd.read_csv(tmp_path / "fig3e.csv")
    assert len(frame) == 1001 * 201
    dark = frame[(frame["theta"] == 0) & np.isclose(frame["phi0"], np.pi)]
    assert len(dark) == 1


@pytest.mark.parametrize("lines", [
    ["trials: 2.5"],
    ["trials: many"],
    ["tol: [1, 2]"],
    ["engine: fastest"],
    ["verbose: 'yes'"],
])
def test_config_values_are_checked_like_flags(tmp_path, lines):
    config = tmp_path / "run.yaml"
    config.write_text("\n".join(lines))
    assert main(["verify", "--config", str(config)]) == 2


def test_config_values_are_converted(tmp_path, capsys):
    config = tmp_path / "run.yaml"
    config.write_text("trials: 3.0\nseed: '7'\nengine: solver\n")
    assert main(["verify", "--config", str(config)]) == 0
    assert _report(capsys)["trials"] == "3"


def test_verbose_spectrum_reports_markovian_ratio(tmp_path, capsys):
    assert main([*SPECTRUM, "--verbose", "--tau", "0.5", "--workdir",
                 str(tmp_path)]) == 0
    # tau·(2·gamma_wg + gamma_e/2) = 0.5·(2 + 2)
    captured = capsys.readouterr()
    assert "Markovian ratio: 2" in captured.out + captured.err
