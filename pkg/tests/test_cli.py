import json

import pytest

from qgrass.cli import main
from qgrass.parser import AmbientError, ParseError, eval_expr
from qgrass.suites import ConfigError, SuiteConfig, dump_report, load_report, run_suite


def test_eval_examples():
    assert str(eval_expr("[12][34] - q^2*[34][12]", 2, 4)) == "0"
    assert str(eval_expr("[1,2|1,2]")) == "x[1,1]x[2,2] - q*x[1,2]x[2,1]"
    assert str(eval_expr("x[1,1]")) == "x[1,1]"


def test_eval_grammar():
    assert str(eval_expr("[13][24] - q^2[24][13] - (q^-1 - q)[12][34]", 2, 4)) == "0"
    assert str(eval_expr("q^(-2) * x[ 1 , 2 ]")) == "q^-2*x[1,2]"
    assert str(eval_expr("[1,2,3]", 3, 3)) == str(eval_expr("[123]", 3, 3))
    assert str(eval_expr("-(x[1,1] - x[1,1])")) == "0"


@pytest.mark.parametrize("text, pos", [("[12] + * 3", 7), ("x[1,1", 5), ("[21]", 0), ("(q", 2)])
def test_parse_errors(text, pos):
    with pytest.raises(ParseError) as err:
        eval_expr(text, 2, 4)
    assert err.value.pos == pos


def test_ambient_errors():
    with pytest.raises(AmbientError):
        eval_expr("x[3,1]", 2, 4)
    with pytest.raises(AmbientError):
        eval_expr("[123]", 2, 4)


def test_cli_eval(capsys):
    assert main(["eval", "--mn", "2,4", "[12][34] - q^2*[34][12]"]) == 0
    assert capsys.readouterr().out.strip() == "0"


def test_cli_straighten(capsys, tmp_path):
    out = tmp_path / "s.json"
    assert main(["straighten", "--order", "cyclic:2", "--mn", "2,4", "--product", "[12][34]",
                 "--json", str(out)]) == 0
    assert capsys.readouterr().out.strip() == "-[23][14] + q*[24][13]"
    data = json.loads(out.read_text())
    assert data["schema"] == 1 and len(data["expansion"]) == 2


def test_cli_poset_dump(capsys):
    assert main(["poset", "dump", "--order", "cyclic:2", "--mn", "2,4"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert [[1, 3], [1, 4]] in data["edges"]
    assert len(data["edges"]) == 6


def test_cli_verify_writes_report(tmp_path, capsys):
    out = tmp_path / "r.json"
    assert main(["verify", "dhom", "--mn", "2,4", "--a", "4", "--json", str(out)]) == 0
    rep = json.loads(out.read_text())
    assert rep["schema"] == 1 and rep["summary"]["failed"] == 0
    assert main(["verify", "qijm", "--mn", "2,5", "--a", "2", "--t", "2"]) == 0


def test_cli_config_error(capsys):
    assert main(["verify", "order-iso", "--mn", "2,4", "--a", "9"]) == 2
    assert "error" in capsys.readouterr().err


def test_exit_status_on_failure(monkeypatch, capsys):
    import qgrass.suites as suites

    def failing(cfg):
        return [suites._rec("fake", {}, "0", False, "x[1,1]")]

    monkeypatch.setitem(suites._RUNNERS, "plucker", failing)
    assert main(["verify", "plucker", "--mn", "2,4"]) == 1
    assert "FAIL fake" in capsys.readouterr().out


@pytest.mark.parametrize("cfg", [SuiteConfig("g24-table"), SuiteConfig("order-iso", 2, 5),
                                 SuiteConfig("qgasl", 2, 4, s=2)])
def test_report_round_trip(cfg):
    rep = run_suite(cfg)
    text = dump_report(rep)
    assert dump_report(load_report(text)) == text
    s = rep["summary"]
    assert s["total"] == len(rep["records"]) == s["passed"] + s["failed"]


def test_g24_table_has_seven_checks():
    rep = run_suite(SuiteConfig("g24-table"))
    assert rep["summary"] == {"total": 7, "passed": 7, "failed": 0}


def test_bad_config():
    with pytest.raises(ConfigError):
        run_suite(SuiteConfig("nope"))
    with pytest.raises(ConfigError):
        run_suite(SuiteConfig("dhom", 3, 3))
