import json
from pathlib import Path


from wittstack.cli import run

CURVES = Path(__file__).resolve().parent.parent / "curves"


def call(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_asw_jumps_table(capsys):
    code, out, _ = call(capsys, "asw", "jumps", "--p", "3", "--n", "2", "--components", "t^-2,0")
    assert code == 0 and out.strip() == "upper_jumps = 2, 6"


def test_asw_reduce_json(capsys):
    code, out, _ = call(capsys, "--format", "json", "asw", "reduce", "--p", "3", "--n", "2",
                        "--components", "t^-3,0")
    obj = json.loads(out)
    assert obj["reduced_components"] == ["t^-1", "0"]
    assert obj["pole_orders"] == [1, 0] and obj["upper_jumps"] == [1, 3]


def test_format_flag_after_subcommand(capsys):
    code, out, _ = call(capsys, "asw", "admissible", "--p", "2", "--jumps", "1,2,4", "--format", "json")
    assert json.loads(out)["admissible"] is True


def test_genus_of_shipped_curve(capsys):
    code, out, _ = call(capsys, "stacky", "genus", str(CURVES / "asw_p3_m1.json"))
    assert code == 0 and out.strip() == "17/9"


def test_stacky_json_outputs_are_exact(capsys):
    code, out, _ = call(capsys, "--format", "json", "stacky", "canonical", str(CURVES / "p23_log.json"))
    obj = json.loads(out)
    assert obj["text"] == "-2·H + 2·P + Q"
    assert all(isinstance(v, str) and "." not in v for v in obj["entries"].values())
    code, out, _ = call(capsys, "stacky", "generators", str(CURVES / "p23_log.json"), "--log",
                        "--max-degree", "12", "--format", "json")
    assert json.loads(out) == {"generators": {"2": 1, "3": 1}}


def test_garuti(capsys):
    assert call(capsys, "garuti", "boundary", "--n", "2", "--p", "2")[1].strip() == "Σ_2 + 2·Σ_1"
    out = call(capsys, "garuti", "boundary", "--n", "3", "--p", "3", "--closed-form", "--psi")[1]
    assert out.strip() == "3·Σ_3 + 9·Σ_2 + 27·Σ_1"


def test_witt_eval(capsys):
    out = call(capsys, "witt", "eval", "--p", "2", "--n", "2", "--op", "add",
               "--lhs", "(1,0)", "--rhs", "(1,0)")[1]
    assert out.strip() == "add: (0, 1)"
    out = call(capsys, "witt", "eval", "--p", "3", "--n", "2", "--op", "versch", "--lhs", "t^-1,1")[1]
    assert out.strip() == "versch: (0, t^-1)"


def test_ram(capsys):
    assert call(capsys, "ram", "convert", "--direction", "down", "--jumps", "2,6", "--p", "3")[1].strip() \
        == "lower_jumps = 2, 14"
    out = call(capsys, "ram", "convert", "--direction", "up", "--jumps", "1,2", "--r", "2", "--p", "3",
               "--format", "json")[1]
    assert json.loads(out)["upper_jumps"] == ["1/2", "2/3"]


def test_cover_report(capsys):
    code, out, _ = call(capsys, "--format", "json", "cover", "report", "--p", "3", "--n", "2",
                        "--components", "1/x,0", "--max-degree", "3")
    obj = json.loads(out)
    assert obj["genus"] == "14/9" and obj["hilbert"] == [1, 3, 3, 4]
    assert obj["comparison"]["agree"] is False
    assert obj["comparison"]["reference_genus"] == "17/9"


def test_exit_codes(capsys):
    assert call(capsys, "asw", "jumps", "--p", "4", "--n", "1", "--components", "t^-1")[0] == 1
    assert call(capsys, "cover", "analyze", "--p", "3", "--n", "1", "--components", "1/(x^2+1)")[0] == 1
    code, _, err = call(capsys, "stacky", "genus", "/no/such/file.json")
    assert code == 2 and '"log_points"' in err
    assert call(capsys, "nonsense")[0] == 2
    assert call(capsys, "asw", "jumps", "--p", "3", "--n", "2", "--components", "t^-1")[0] == 2
    assert call(capsys, "--max-p", "3", "asw", "jumps", "--p", "5", "--n", "2",
                "--components", "t^-1,0")[0] == 1
