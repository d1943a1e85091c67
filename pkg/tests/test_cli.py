"""Tests for presets, the cache, and the command-line interface."""

import json

import pytest

from hkrees import presets
from hkrees.cache import ColengthCache, cached_counter
from hkrees.cli import main
from hkrees.errors import ParameterError


# ---------------------------------------------------------------------------
# Presets


def test_preset_targets_match_closed_forms():
    from fractions import Fraction

    assert presets.an_hypersurface(2).target == Fraction(3, 2)
    assert presets.an_extrees(2).target == Fraction(3, 2)
    assert presets.segre(2, 2).target == Fraction(4, 3)
    assert presets.veronese_rees(2, 2).target == Fraction(13, 6)
    assert presets.ci_rees(2, 2).target == Fraction(13, 6)
    assert presets.ci_extrees(2, 2).target == Fraction(5, 2)


def test_preset_samples_scale_q():
    p = presets.veronese_rees(2, 2)
    s = p.sample(4)
    assert s.q == 8  # the counter's bracket exponent is cq
    assert p.dimension == 3


def test_an_presets_agree_with_engine_values():
    p = presets.an_hypersurface(2)
    assert p.sample(4).count == 24
    ext = presets.ci_extrees(2, 2)
    assert ext.sample(2).count > 0


def test_preset_validation():
    with pytest.raises(ParameterError):
        presets.an_hypersurface(0)
    with pytest.raises(ParameterError):
        presets.an_extrees(1)
    with pytest.raises(ParameterError):
        presets.ci_extrees(0, 1)


# ---------------------------------------------------------------------------
# Cache


def test_cache_round_trip(tmp_path):
    path = str(tmp_path / "colengths.jsonl")
    cache = ColengthCache(path)
    assert cache.get("desc", 4) is None
    cache.put("desc", 4, 99)
    assert cache.get("desc", 4) == 99
    # a fresh instance reads the same entries back from disk
    again = ColengthCache(path)
    assert again.get("desc", 4) == 99
    assert again.get("desc", 8) is None
    assert again.get("other", 4) is None


def test_cache_counter_avoids_recomputation(tmp_path):
    calls = []
    base = presets.an_hypersurface(2)
    counting = presets.Preset(
        name=base.name,
        description=base.description,
        dimension=base.dimension,
        counter=lambda q: (calls.append(q), base.counter(q))[1],
        target=base.target,
    )
    cache = ColengthCache(str(tmp_path / "c.jsonl"))
    counter = cached_counter(counting, cache)
    assert counter(4) == 24
    assert counter(4) == 24
    assert calls == [4]


def test_cache_clear(tmp_path):
    cache = ColengthCache(str(tmp_path / "c.jsonl"))
    cache.put("a", 2, 5)
    assert len(cache.entries()) == 1
    cache.clear()
    assert cache.entries() == []
    assert ColengthCache(str(tmp_path / "c.jsonl")).entries() == []


def test_cache_ignores_garbage_lines(tmp_path):
    path = tmp_path / "c.jsonl"
    cache = ColengthCache(str(path))
    cache.put("a", 2, 5)
    with open(path, "a") as fh:
        fh.write("{truncated\n")
    assert ColengthCache(str(path)).get("a", 2) == 5


# ---------------------------------------------------------------------------
# CLI


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_formula_segre(capsys):
    code, out, _ = run_cli(capsys, "formula", "segre", "--c", "4", "--d", "4")
    assert code == 0
    assert out.strip() == "899/315"


def test_formula_c_of_d(capsys):
    code, out, _ = run_cli(capsys, "formula", "c-of-d", "--d", "2")
    assert code == 0
    assert out.strip() == "4/3"


def test_formula_conca(capsys):
    code, out, _ = run_cli(
        capsys, "formula", "conca", "--ds", "1,1", "--es", "3"
    )
    assert code == 0
    assert out.strip() == "5/3"


def test_formula_stirling_table(capsys):
    code, out, _ = run_cli(capsys, "formula", "stirling-table", "--n", "10")
    assert code == 0
    assert out.split() == [
        "1", "511", "9330", "34105", "42525", "22827", "5880", "750", "45", "1"
    ]


def test_formula_json(capsys):
    code, out, _ = run_cli(
        capsys, "formula", "veronese-rees", "--c", "2", "--d", "2", "--json"
    )
    doc = json.loads(out)
    assert code == 0
    assert doc["value"] == "13/6"
    assert abs(doc["value_approx"] - 13 / 6) < 1e-12


def test_formula_computation_error_exit_3(capsys):
    code, _, err = run_cli(capsys, "formula", "conca", "--ds", "0", "--es", "1")
    assert code == 3
    assert "error:" in err


def test_usage_error_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["formula", "unknown-family"])
    capsys.readouterr()
    assert exc.value.code == 2


def test_oracle_exact_family(capsys):
    code, out, _ = run_cli(
        capsys, "oracle", "--preset", "an-hypersurface", "--n", "2",
        "--q", "4,8,16",
    )
    assert code == 0
    assert "leading estimate: 3/2" in out
    assert "inside bracket" in out


def test_oracle_json_and_grid(capsys):
    code, out, _ = run_cli(
        capsys, "oracle", "--preset", "segre", "--c", "1", "--d", "1",
        "--q", "1,2", "--grid", "primepow:3", "--json",
    )
    doc = json.loads(out)
    assert code == 0
    assert doc["samples"] == [[3, 3], [9, 9]]
    assert doc["leading"] == "1"


def test_oracle_semigroup_file(capsys, tmp_path):
    f = tmp_path / "sg.txt"
    f.write_text("sg: (2,0) (1,1) (0,2)\n")
    code, out, _ = run_cli(
        capsys, "oracle", "--preset", "semigroup", "--file", str(f),
        "--q", "2,4,8",
    )
    assert code == 0
    assert "leading estimate: 3/2" in out


def test_oracle_presentation_file(capsys, tmp_path):
    f = tmp_path / "pres.txt"
    f.write_text("vars: x y z\nbin: x*y - z^2\ndim: 2\norder: lex x>y>z\n")
    code, out, _ = run_cli(
        capsys, "oracle", "--preset", "presentation", "--file", str(f),
        "--q", "2,4,8",
    )
    assert code == 0
    assert "leading estimate: 3/2" in out


def test_oracle_output_identical_with_and_without_cache(capsys, tmp_path):
    argv = ["oracle", "--preset", "ci-rees", "--m", "2", "--n", "2",
            "--q", "4,8,16", "--json"]
    code, plain, _ = run_cli(capsys, *argv)
    assert code == 0
    cached = argv + ["--cache-dir", str(tmp_path)]
    code, first, _ = run_cli(capsys, *cached)
    assert code == 0
    code, second, _ = run_cli(capsys, *cached)  # warm cache
    assert code == 0
    assert plain == first == second


def test_oracle_deterministic(capsys):
    argv = ["oracle", "--preset", "an-extrees", "--n", "3", "--q", "2,4"]
    _, a, _ = run_cli(capsys, *argv)
    _, b, _ = run_cli(capsys, *argv)
    assert a == b


def test_check_suite_exit_codes(capsys, monkeypatch):
    code, out, _ = run_cli(capsys, "check", "--suite", "assembly")
    assert code == 0
    assert "0 failed" in out

    from hkrees import checks as checks_mod

    failing = checks_mod.CheckResult("x/y", "fail", "1", "2", "synthetic")
    monkeypatch.setattr(
        checks_mod, "run_suite", lambda name, fast=False: [failing]
    )
    code, out, _ = run_cli(capsys, "check", "--suite", "assembly")
    assert code == 1
    assert "1 failed" in out


def test_check_report_only_does_not_fail(capsys):
    code, out, _ = run_cli(capsys, "check", "--suite", "bcp-compare", "--json")
    assert code == 0
    assert all(r["status"] == "report-only" for r in json.loads(out))


def test_cache_command(capsys, tmp_path):
    run_cli(
        capsys, "oracle", "--preset", "an-hypersurface", "--n", "2",
        "--q", "2,4", "--cache-dir", str(tmp_path),
    )
    code, out, _ = run_cli(capsys, "cache", "inspect", "--cache-dir", str(tmp_path))
    assert code == 0
    assert "2 entries" in out
    code, out, _ = run_cli(capsys, "cache", "clear", "--cache-dir", str(tmp_path))
    assert code == 0
    code, out, _ = run_cli(capsys, "cache", "inspect", "--cache-dir", str(tmp_path))
    assert "0 entries" in out


def test_missing_file_exit_3(capsys):
    code, _, err = run_cli(
        capsys, "oracle", "--preset", "semigroup", "--file", "/nonexistent"
    )
    assert code == 3
    assert "error:" in err
