import io
import json
import subprocess
import sys

import pytest

from liftkit.cli import SessionConfig, run_command

EXAMPLE = """
[session]
order = 12
theta = 2
parameters = lambda12

[braiding]
q11 = z^4
q12 = 1
q21 = z^-4
q22 = -1
"""



@pytest.fixture
def config(tmp_path):
    path = tmp_path / "session.ini"
    path.write_text(EXAMPLE)
    return str(path)


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run_command(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_cartan_text_and_json(config):
    code, out, _ = run("--config", config, "cartan")
    assert code == 0 and out.strip() == "[[2,-1],[-1,2]]"
    code, out, _ = run("--config", config, "--format", "json", "cartan")
    assert code == 0 and json.loads(out) == {"cartan": [[2, -1], [-1, 2]]}


def test_reflection_at_vertex_two(config):
    code, out, _ = run("--config", config, "reflect", "--vertex", "2")
    assert code == 0
    assert out.splitlines()[0].split() == ["-1", "-1"]


def test_lyndon_listing(config):
    code, out, _ = run("--config", config, "lyndon", "--max-len", "3")
    assert code == 0 and len(out.splitlines()) == 5


def test_coproduct_and_defect(config):
    code, out, _ = run("--config", config, "coproduct", "x1")
    assert code == 0 and "g1 (x) x1" in out
    code, _, _ = run("--config", config, "skew-defect", "[x1x1x2]", "--group", "g1^2 g2")
    assert code == 0


def test_bad_input_exit_codes(config):
    assert run("--config", config, "coproduct", "[x2 x1]")[0] == 2
    assert run("--config", config, "coproduct", "x1 +")[0] == 2
    assert run("--config", config, "coproduct", "mu9 x1")[0] == 2
    assert run("--config", config, "reflect", "--vertex", "5")[0] == 2
    assert run("lifting", "NOPE")[0] == 2


def test_bad_config(tmp_path):
    path = tmp_path / "bad.ini"
    path.write_text("[session]\norder = 12\ntheta = 2\n[braiding]\nq11 = z^4\n")
    assert run("--config", str(path), "cartan")[0] == 2


def test_verify_and_json_determinism():
    code, out1, _ = run("--format", "json", "verify", "A2-2a")
    assert code == 0 and json.loads(out1)["passed"]
    assert run("--format", "json", "verify", "A2-2a")[1] == out1


def _realization_text(real):
    row = lambda vals: " ".join(f"({v.to_str(12)})" for v in vals)
    lines = ["[realization]", "torsion = " + " ".join(map(str, real.torsion))]
    lines += [f"g{i + 1} = " + " ".join(map(str, img)) for i, img in enumerate(real.images)]
    lines += [f"chi{j + 1} = " + row(vals) for j, vals in enumerate(real.chars)]
    return "\n".join(lines) + "\n"


def test_verify_with_realization(tmp_path):
    from liftkit import catalog

    _, real = catalog.realization_z12("A2-4a")
    path = tmp_path / "real.ini"
    path.write_text(_realization_text(real))
    code, out, _ = run("verify", "A2-4a", "--realization", str(path))
    assert code == 0, out
    assert "1728" in out
    path.write_text(_realization_text(real).replace("torsion = 12 12", "torsion = 12 5"))
    assert run("verify", "A2-4a", "--realization", str(path))[0] == 2


def test_unknown_counterterm_warns():
    code, out, err = run("verify", "R89-4b")
    assert code == 0
    assert "UNKNOWN" in out + err


def test_oracle_dim_agrees():
    code, out, _ = run("--format", "json", "oracle-dim", "--case", "A2-2", "--bound", "10")
    assert code == 0


def test_identities_use_seed():
    a = run("--seed", "3", "identities", "--trials", "5", "--max-degree", "3")
    b = run("--seed", "3", "identities", "--trials", "5", "--max-degree", "3")
    assert a[0] == 0 and a == b


def test_session_config_round_trip():
    cfg = SessionConfig.from_string(EXAMPLE)
    assert cfg.order == 12 and cfg.theta == 2
    assert "lambda12" in cfg.parameters


def test_module_entry_point(config):
    done = subprocess.run([sys.executable, "-m", "liftkit", "--config", config, "cartan"],
                          capture_output=True, text=True)
    assert done.returncode == 0 and done.stdout.strip() == "[[2,-1],[-1,2]]"


def test_documented_config_is_valid():
    import textwrap

    import liftkit.cli as cli

    doc = cli.__doc__
    ini = textwrap.dedent(doc[doc.index("    [session]"):doc.index("Character rows")])
    cfg = SessionConfig.from_string(ini)
    assert cfg.realization.order == 144
