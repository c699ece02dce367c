import io
import json
import subprocess
import sys

import pytest

from osp_annihilator.cli import run_cli


def run(*args):
    out, err = io.StringIO(), io.StringIO()
    code = run_cli(list(args), out, err)
    return code, out.getvalue(), err.getvalue()


def test_roots_json():
    code, out, _ = run("roots", "--l", "2", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["rho"] == ["3/2", "1/2"]
    assert data["odd_pos"] == [["1", "0"], ["0", "1"]]
    assert data["even_bar_pos"] == [["1", "-1"], ["1", "1"]]
    assert data["even_pos"] == [["1", "-1"], ["1", "1"], ["2", "0"], ["0", "2"]]


def test_prv_text_is_closed_form():
    code, out, _ = run("prv", "--l", "1", "--lambda", "3")
    assert code == 0
    assert out.strip() == "(φ(β1))^1 · (φ(β1)-1)^1 · (φ(β1)+1/2)^1"


def test_prv_json():
    code, out, _ = run("prv", "--l", "2", "--lambda", "1,0", "--json")
    data = json.loads(out)
    assert code == 0 and data["degree"] == data["degree_bound"] == 4
    assert data["factors"][0] == {"alpha": ["1", "0"], "c": "1", "exp": 1, "family": "odd-standard"}


def test_verify_exit_codes():
    code, out, _ = run("verify", "--l", "2", "--depth", "6", "--order", "8", "--json")
    assert code == 0 and json.loads(out)["allPass"] is True
    code, out, _ = run("verify", "--l", "1", "--depth", "2", "--order", "4")
    assert code == 0 and out.strip().endswith("allPass: true")


def test_hesselink_both():
    code, out, _ = run("hesselink", "--l", "1", "--lambda", "4", "--order", "3", "--method", "both", "--json")
    data = json.loads(out)
    assert code == 0
    assert data["direct"] == data["alt"] == [0, 0, 1, 0] and data["agree"] is True


def test_annihilator_and_misc():
    code, out, _ = run("annihilator", "--l", "2", "--lambda", "0,-1/2", "--json")
    data = json.loads(out)
    assert code == 0 and data["centrally_generated"] is False and data["lambda_plus_rho"] == ["3/2", "0"]
    code, out, _ = run("annihilator", "--l", "1", "--lambda", "-1/2", "--json")
    assert json.loads(out)["ann_in_H"] == "odd"
    assert run("tau", "--l", "1", "--nu", "2", "--json")[1].strip() == '{"nu": ["2"], "tau": 2, "tau_bar": 1}'
    assert json.loads(run("mult", "--l", "2", "--lambda", "1,0", "--json")[1])["dimension"] == 5
    assert json.loads(run("mult", "--l", "2", "--lambda", "2,1", "--mu", "0,0", "--json")[1])["mult"] == 3
    assert json.loads(run("weyl", "--l", "2", "--json")[1])["poincare"] == [1, 2, 2, 2, 1]
    rows = json.loads(run("heslem", "--l", "2", "--json")[1])["rows"]
    assert [r["w"] for r in rows] == ["[+1,+2]", "[+2,+1]", "[+2,-1]", "[-1,+2]"]
    code, out, _ = run("shapovalov", "--l", "1", "--nu", "2")
    assert code == 0 and out.strip() == "(φ(β1))^1"


@pytest.mark.parametrize(
    "args,code",
    [
        (["prv", "--l", "2", "--lambda", "0,1"], 2),
        (["mult", "--l", "1", "--lambda", "1,0"], 2),
        (["shapovalov", "--l", "1", "--nu", "-1"], 2),
        (["mult", "--l", "1", "--lambda", "0.5"], 1),
        (["tau", "--l", "2"], 1),
        (["frobnicate"], 1),
        (["roots", "--l", "1.5"], 1),
        (["weyl", "--l", "7"], 4),
        (["roots", "--l", "0"], 2),
    ],
)
def test_error_exit_codes(args, code):
    got, _, err = run(*args)
    assert got == code
    assert err


def test_domain_error_names_the_weight():
    _, _, err = run("prv", "--l", "2", "--lambda", "0,1")
    assert "0,1" in err


def test_weyl_cap_flag():
    assert run("weyl", "--l", "3", "--weyl-cap", "2")[0] == 4
    assert run("weyl", "--l", "3", "--weyl-cap", "3")[0] == 0
    # commands that never enumerate W are not capped
    assert run("roots", "--l", "7")[0] == 0
    assert run("mult", "--l", "7", "--lambda", "1,0,0,0,0,0,0")[0] == 4


def test_json_output_is_byte_stable():
    a = subprocess.run([sys.executable, "-m", "osp_annihilator", "mult", "--l", "2", "--lambda", "2,1", "--json"],
                       capture_output=True, check=True).stdout
    b = subprocess.run([sys.executable, "-m", "osp_annihilator", "mult", "--l", "2", "--lambda", "2,1", "--json"],
                       capture_output=True, check=True).stdout
    assert a == b and json.loads(a)["dimension"] == 35
