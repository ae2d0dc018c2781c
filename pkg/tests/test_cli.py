import json
import subprocess
import sys
from fractions import Fraction

import pytest

from tbinom.cli import build_parser, main, table_rows
from tbinom.hookpsi import HookSolution, psi_r
from tbinom.numeric import rational_from_json
from tbinom.polyalg import T, PolyT, PolyXT
from tbinom.genbinom import genbinom_symbolic


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out.strip(), err


def test_coeff_latex(capsys):
    code, out, _ = run(capsys, "coeff", "--k", "1", "--format", "latex")
    assert (code, out) == (0, "t x")


def test_coeff_fully_specialized(capsys):
    code, out, _ = run(capsys, "coeff", "--k", "2", "--x", "5", "--t", "1")
    assert code == 0 and rational_from_json(json.loads(out)) == 10
    _, out, _ = run(capsys, "coeff", "--k", "2", "--x", "5", "--t", "1", "--format", "latex")
    assert out == "10"


def test_coeff_specialized_in_x(capsys):
    _, out, _ = run(capsys, "coeff", "--k", "3", "--x", "2")
    assert PolyT.from_json(json.loads(out)) == T * (1 - T) / 3


def test_coeff_symbolic_json_round_trip(capsys):
    _, out, _ = run(capsys, "coeff", "--k", "4")
    p = PolyXT.from_json(json.loads(out))
    assert p == genbinom_symbolic(4)
    assert json.dumps(p.to_json(), sort_keys=True) == out


def test_coeff_rational_arguments(capsys):
    code, out, _ = run(capsys, "coeff", "--k", "2", "--x", "1/2", "--t=-3/4", "--format", "csv")
    assert code == 0 and out.splitlines()[0] == "value"


def test_format_from_environment(capsys, monkeypatch):
    monkeypatch.setenv("TBINOM_FORMAT", "latex")
    _, out, _ = run(capsys, "coeff", "--k", "1")
    assert out == "t x"


def test_bad_format_in_environment(capsys, monkeypatch):
    monkeypatch.setenv("TBINOM_FORMAT", "xml")
    with pytest.raises(SystemExit) as exc:
        main(["coeff", "--k", "1"])
    assert exc.value.code != 0


def test_verify_single_identity(capsys):
    code, out, _ = run(capsys, "verify", "--identity", "thm1", "--order", "40")
    assert code == 0
    assert json.loads(out) == {"holds": True, "identity_id": "thm1", "parameters": {"order": "40"}}


def test_verify_cor5(capsys):
    code, out, _ = run(capsys, "verify", "--identity", "cor5", "--max-n", "20")
    lines = [json.loads(l) for l in out.splitlines()]
    assert code == 0 and len(lines) == 19 and all(l["holds"] for l in lines)


def test_verify_unknown_identity(capsys):
    code, out, err = run(capsys, "verify", "--identity", "bogus")
    assert code != 0 and "bogus" in err and out == ""


def test_verify_failure_sets_exit_code(capsys):
    code, out, _ = run(capsys, "verify", "--identity", "psi_t1")
    assert code == 1
    failed = [json.loads(l) for l in out.splitlines() if '"holds": false' in l]
    assert [f["parameters"] for f in failed] == [{"r": "1", "s": "0"}]


def test_order_must_cover_max_k(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--order", "5", "--max-k", "10"])
    assert exc.value.code != 0


def test_table(capsys):
    code, out, _ = run(capsys, "table", "--max-k", "5", "--format", "csv")
    lines = out.splitlines()
    assert code == 0
    assert lines[0] == "k,i,method1,method2,agree"
    assert len(lines) == 1 + 15
    assert all(l.endswith(",true") for l in lines[1:])


def test_table_rows_content():
    rows = {(r["k"], r["i"]): r for r in table_rows(4)}
    assert rows[(4, 1)]["method1"] == (1 - T * T) * (2 * T - 1) / 8
    assert all(rows[(k, k)]["method2"] == T**k for k in range(1, 5))


def test_table_disagreement_exit(capsys, monkeypatch):
    from tbinom import cli

    def broken(max_k):
        rows = table_rows(max_k)
        rows[0]["agree"] = False
        return rows

    monkeypatch.setattr(cli, "table_rows", broken)
    code, _, _ = run(capsys, "table", "--max-k", "2")
    assert code == 1


def test_psi_latex(capsys):
    code, out, _ = run(capsys, "psi", "--r", "2", "--s", "0", "--format", "latex")
    assert code == 0 and out.splitlines()[0] == "2\\psi_2 = e^{u} - 1"


def test_psi_json(capsys):
    code, out, _ = run(capsys, "psi", "--r", "3", "--s", "0")
    data = json.loads(out)
    sol = HookSolution.from_json(data["solution"])
    assert sol == psi_r(3) and sol.scale == -6
    assert code == 0


def test_psi_r5_s2_all_checks_hold(capsys):
    code, out, _ = run(capsys, "psi", "--r", "5", "--s", "2")
    checks = json.loads(out)["checks"]
    assert code == 0 and len(checks) == 3 and all(c["holds"] for c in checks)


def test_psi_bad_s(capsys):
    with pytest.raises(SystemExit):
        main(["psi", "--r", "2", "--s", "3"])


def test_output_path(tmp_path, capsys):
    dest = tmp_path / "out.json"
    code, out, _ = run(capsys, "coeff", "--k", "2", "--output", str(dest))
    assert code == 0 and out == ""
    assert PolyXT.from_json(json.loads(dest.read_text(encoding="utf-8"))) == genbinom_symbolic(2)


def test_parser_lists_commands():
    text = build_parser().format_help()
    for cmd in ("coeff", "table", "verify", "psi"):
        assert cmd in text


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "tbinom", "coeff", "--k", "1", "--format", "latex"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0 and proc.stdout.strip() == "t x"
