import pytest
from tests.fixtures import PSEUDOSCALAR_SWEEP

from dirac_correlations.cli import EXIT_CHECK, EXIT_CONFIG, EXIT_OK, build_parser, main


def _write_config(tmp_path, text):
    path = tmp_path / "sweep.conf"
    path.write_text(text, encoding="utf-8")
    return path


def test_list_figures(capsys):
    assert main(["--list-figures"]) == EXIT_OK
    names = capsys.readouterr().out.split()
    assert names[0] == "fig1"
    assert "fig8" in names


def test_config_to_file(tmp_path):
    config = _write_config(tmp_path, PSEUDOSCALAR_SWEEP)
    output = tmp_path / "out.csv"
    assert main(["--config", str(config), "--output", str(output), "--threads", "1"]) == EXIT_OK
    lines = output.read_text(encoding="utf-8").splitlines()
    assert lines[0].startswith("P,status,c1,c2,lambda")
    assert len(lines) == 101


def test_config_to_stdout_with_oracle(tmp_path, capsys):
    config = _write_config(tmp_path, PSEUDOSCALAR_SWEEP)
    assert main(["--config", str(config), "--oracle"]) == EXIT_OK
    header = capsys.readouterr().out.splitlines()[0]
    assert header.endswith("oracle_validity,oracle_printed_discord")


def test_bad_config(tmp_path):
    config = _write_config(tmp_path, "omega = 1\nsweep = P 0 1 2")
    assert main(["--config", str(config)]) == EXIT_CONFIG


def test_invalid_range(tmp_path):
    config = _write_config(tmp_path, "sweep = P 1 0 2")
    assert main(["--config", str(config)]) == EXIT_CONFIG


def test_unknown_figure():
    assert main(["--figure", "fig0"]) == EXIT_CONFIG


def test_negative_threads(tmp_path):
    config = _write_config(tmp_path, PSEUDOSCALAR_SWEEP)
    assert main(["--config", str(config), "--threads", "-1"]) == EXIT_CONFIG


def test_figure_check(tmp_path):
    output = tmp_path / "fig2.csv"
    assert main(["--figure", "fig2", "--check", "--output", str(output)]) == EXIT_OK
    header = output.read_text(encoding="utf-8").splitlines()[0]
    assert "oracle_measure" in header


def test_check_exit_code_is_distinct():
    assert len({EXIT_OK, EXIT_CONFIG, EXIT_CHECK}) == 3


def test_source_is_required():
    with pytest.raises(SystemExit):
        build_parser().parse_args([])


def test_sources_are_exclusive():
    with pytest.raises(SystemExit):
        build_parser().parse_args(["--figure", "fig1", "--list-figures"])


def test_stdout_spelling(tmp_path, monkeypatch, capsys):
    config = _write_config(tmp_path, PSEUDOSCALAR_SWEEP)
    monkeypatch.chdir(tmp_path)
    assert main(["--config", str(config), "--output", "stdout", "--threads", "1"]) == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert lines[0].startswith("P,status,c1,c2,lambda")
    assert len(lines) == 101
    assert not (tmp_path / "stdout").exists()
