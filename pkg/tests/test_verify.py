# tests/test_verify.py
import io
import json

import pytest

from config.config_manager import ConfigManager
from sequences.delannoy import delannoy_poly_at
from utils.exceptions import ClaimPreconditionError, DomainError, SweepEngineException
from verify.claims import (
    POWER2_LEMMAS, explore_theorem_1_3, verify_corollary, verify_power2_lemmas, verify_sun_trinomial,
    verify_theorem_1_1, verify_theorem_1_2, verify_theorem_1_3,
)
from verify.report import Claim, CongruenceReport, Status
from verify.report_writer import OutputFormat, ReportWriter
from verify.sums import PowerParity, sum_weighted
from verify.sweep_engine import SweepEngine, SweepResult, run_sweep
from verify.sweep_planner import SweepPlanner, SweepTask, execute_task


def _spec(claim, **ranges):
    epsilon = ranges.pop("epsilon", None)
    overrides = ranges.pop("overrides", None)
    return ConfigManager.build_sweep_spec(claim, ranges, epsilon, overrides)


# --- суммы ---
def test_sum_weighted_examples():
    assert sum_weighted(3, 1, 1, 1, PowerParity.EVEN) == 353
    assert sum_weighted(3, 1, 1, 1, PowerParity.EVEN, modulus=3) == 2
    for v in range(4):
        assert sum_weighted(2, v, 1, 1, PowerParity.ODD) == 1 + 9 ** (v + 1)


def test_sum_weighted_signed_matches_definition():
    for z in (-2, 3):
        expected = sum((-1) ** k * (2 * k + 1) ** 4 * delannoy_poly_at(k, z) for k in range(7))
        assert sum_weighted(7, 2, -1, z) == expected
        assert sum_weighted(7, 2, -1, z, modulus=11) == expected % 11


def test_sum_weighted_rejects_bad_arguments():
    with pytest.raises(DomainError):
        sum_weighted(0, 1, 1, 1)
    with pytest.raises(DomainError):
        sum_weighted(3, -1, 1, 1)
    with pytest.raises(DomainError):
        sum_weighted(3, 1, 1, 1, modulus=0)


# --- отдельные утверждения ---
def test_theorem_1_1_examples(table):
    report = verify_theorem_1_1(3, 1, 1, 1, table)
    assert report.status is Status.VERIFIED
    assert (report.lhs, report.rhs, report.modulus) == (2, 2, 3)
    assert verify_theorem_1_1(25, -3, 4, -1, table).status is Status.VERIFIED
    assert verify_theorem_1_1(4, 1, 1, 1, table).status is Status.NOT_APPLICABLE
    assert verify_theorem_1_1(9, 3, 1, 1, table).status is Status.NOT_APPLICABLE
    assert verify_theorem_1_1(9, 0, 1, 1, table).status is Status.NOT_APPLICABLE
    assert verify_theorem_1_1(9, 2, 1, -1, table).status is Status.NOT_APPLICABLE


def test_theorem_1_2_examples(table):
    report = verify_theorem_1_2(3, 1, 1, 1, table)
    assert report.status is Status.VERIFIED
    assert (report.lhs, report.rhs) == (2, 2)
    assert verify_theorem_1_2(13, -7, 3, -1, table).status is Status.VERIFIED
    assert verify_theorem_1_2(5, 10, 1, 1, table).status is Status.NOT_APPLICABLE
    assert verify_theorem_1_2(5, 4, 1, -1, table).status is Status.NOT_APPLICABLE
    with pytest.raises(ClaimPreconditionError):
        verify_theorem_1_2(9, 1, 1, 1, table)


@pytest.mark.parametrize("epsilon", [1, -1])
def test_theorem_1_3_small(epsilon, table):
    for a in range(1, 7):
        for v in range(4):
            assert verify_theorem_1_3(a, v, epsilon, table).status is Status.VERIFIED


def test_theorem_1_3_signed_cubes(table):
    # sum (-1)^k (2k+1)^3 D_k = 2 n^2 (mod n^3), n = 2^a
    report = verify_theorem_1_3(5, 1, -1, table)
    n = 32
    assert report.rhs == 2 * n * n
    assert report.modulus == n ** 3
    assert report.status is Status.VERIFIED


def test_explore_theorem_1_3(table):
    report = explore_theorem_1_3(2, 1, 1, table)
    assert report.status is Status.OBSERVED
    assert report.note == "holds"
    notes = {explore_theorem_1_3(n, 1, 1, table).note for n in range(1, 20)}
    assert notes <= {"holds", "differs"}


def test_power2_lemmas():
    for a in range(2, 9):
        reports = verify_power2_lemmas(a)
        assert [r.param_dict["lemma"] for r in reports] == list(POWER2_LEMMAS)
        assert all(r.status is Status.VERIFIED for r in reports)
        assert reports[-1].modulus is None
    with pytest.raises(ClaimPreconditionError):
        verify_power2_lemmas(1)


def test_sun_trinomial():
    for p in (3, 5, 7, 11):
        for b in range(-2, 3):
            for c in range(-2, 3):
                for m in (1, 2, -1):
                    if m % p == 0:
                        continue
                    assert verify_sun_trinomial(p, b, c, m).status is Status.VERIFIED
    with pytest.raises(ClaimPreconditionError):
        verify_sun_trinomial(5, 1, 1, 10)


def test_corollary():
    for n in range(1, 20):
        for s in range(5):
            for eps in (1, -1):
                report = verify_corollary(n, 2, s, eps)
                assert report.status is Status.VERIFIED
                assert report.rhs == 0


# --- отчёты и запись ---
def test_report_dict_round_trip():
    report = verify_theorem_1_1(3, 1, 1, 1)
    data = json.loads(json.dumps(report.to_dict()))
    assert data["params"] == {"epsilon": 1, "n": 3, "z": 1, "v": 1}
    assert "note" not in data
    assert CongruenceReport.from_dict(data) == report


def test_report_writer_formats():
    reports = [verify_theorem_1_1(3, 1, 1, 1), explore_theorem_1_3(3, 0, 1)]

    buf = io.StringIO()
    writer = ReportWriter(OutputFormat.JSON, stream=buf)
    writer.write_header("t")
    for r in reports:
        writer.write_report(r)
    lines = buf.getvalue().splitlines()
    assert len(lines) == 2
    assert json.loads(lines[1])["note"] in ("holds", "differs")

    buf = io.StringIO()
    writer = ReportWriter(OutputFormat.CSV, stream=buf)
    writer.write_header("t")
    writer.write_report(reports[0])
    rows = buf.getvalue().splitlines()
    assert rows[0] == "claim,params,status,lhs,rhs,modulus"
    assert rows[1].startswith("thm1.1,")
    assert rows[1].endswith(",verified,2,2,3")

    buf = io.StringIO()
    writer = ReportWriter(OutputFormat.TEXT, stream=buf)
    writer.write_header("verify thm1.1")
    writer.write_report(reports[0])
    text = buf.getvalue().splitlines()
    assert text[0] == "# verify thm1.1"
    assert "verified" in text[1] and "mod=3" in text[1]


def test_report_writer_file(tmp_path):
    path = tmp_path / "out" / "reports.jsonl"
    writer = ReportWriter(OutputFormat.JSON, str(path))
    writer.write_report(verify_theorem_1_1(3, 1, 1, 1))
    writer.close()
    assert json.loads(path.read_text(encoding="utf-8"))["status"] == "verified"


# --- планировщик ---
def test_planner_filters_primes_and_m():
    tasks = SweepPlanner.generate_tasks(_spec(Claim.THM1_2, p="1..20", z="1", v="0", epsilon="1"))
    assert [t.param_dict["p"] for t in tasks] == [3, 5, 7, 11, 13, 17, 19]

    tasks = SweepPlanner.generate_tasks(_spec(Claim.SUN_TRINOMIAL, p="3", b="1", c="1", m="1..6"))
    assert [t.param_dict["m"] for t in tasks] == [1, 2, 4, 5]


def test_planner_order_is_deterministic():
    spec = _spec(Claim.THM1_3, a="1..3", v="0..1")
    tasks = SweepPlanner.generate_tasks(spec)
    assert len(tasks) == 12
    assert tasks[0] == SweepTask(Claim.THM1_3, (("epsilon", 1), ("a", 1), ("v", 0)))
    assert tasks[-1].param_dict == {"epsilon": -1, "a": 3, "v": 1}


def test_execute_task_power2():
    reports = execute_task(SweepTask(Claim.POWER2, (("a", 3),)))
    assert len(reports) == len(POWER2_LEMMAS)


# --- движок ---
def test_thm1_3_acceptance_sweep(logger):
    result = SweepEngine(logger).run(_spec(Claim.THM1_3, a="1..10", v="0..3"), jobs=1)
    assert result.summary_line() == "verified=80 failed=0 na=0"
    assert result.exit_code == 0


def test_negative_control_rho_override(logger):
    spec = _spec(Claim.THM1_3, a="1..6", v="1", epsilon="1", overrides=["1=7"])
    result = SweepEngine(logger).run(spec, jobs=1)
    assert result.failed == 6
    assert result.exit_code == 1
    failed = result.reports[0]
    assert failed.status is Status.FAILED
    assert failed.lhs is not None and failed.rhs is not None
    assert failed.rhs == 7 * 2 % 8


def test_engine_callbacks(logger):
    engine = SweepEngine(logger)
    progress, started, finished = [], [], []
    engine.on_progress = lambda cur, total: progress.append((cur, total))
    engine.on_sweep_started = started.append
    engine.on_sweep_finished = finished.append
    result = engine.run(_spec(Claim.COR2_1, n="1..5", z="2", s="0..1"), jobs=1)
    assert started == [20]
    assert progress[-1] == (20, 20)
    assert finished == [result]
    assert result.verified == 20
    assert not engine.is_running()
    assert engine.get_progress() == (20, 20)


def test_engine_rejects_bad_jobs(logger):
    with pytest.raises(SweepEngineException):
        SweepEngine(logger).run(_spec(Claim.THM1_3, a="1", v="0"), jobs=0)


def test_sweep_result_summary():
    result = SweepResult([explore_theorem_1_3(3, 0, 1), verify_theorem_1_1(4, 1, 1, 1)])
    assert result.summary_line() == "verified=0 failed=0 na=1 observed=1"
    assert result.exit_code == 0


@pytest.mark.slow
def test_parallel_sweep_matches_serial(logger):
    spec = _spec(Claim.THM1_1, n="1..41", z="-3..3", v="0..3")
    serial = run_sweep(spec, 1, logger)
    parallel = run_sweep(spec, 3, logger)
    assert serial.reports == parallel.reports
    assert serial.failed == 0


@pytest.mark.slow
@pytest.mark.parametrize("claim", [Claim.THM1_1, Claim.THM1_2, Claim.THM1_3, Claim.POWER2,
                                   Claim.SUN_TRINOMIAL, Claim.COR2_1])
def test_default_sweeps_have_no_failures(claim, logger):
    result = run_sweep(ConfigManager.build_sweep_spec(claim), 2, logger)
    assert result.failed == 0
    assert result.verified > 0
