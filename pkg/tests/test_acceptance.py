"""Exit criteria. Each test prints one PASS/FAIL line; all tolerances are exact."""

import json
import time

import pytest

from hamburn import adversary, cli, experiments, floatvar, selfcheck
from hamburn.colorcode import decode, dot, encode, inner
from hamburn.hamming import all_vertices, burning_number, burns, hdist


@pytest.fixture
def report(capsys):
    def emit(number, title, ok, detail=""):
        with capsys.disabled():
            print(f"\n[{'PASS' if ok else 'FAIL'}] AC{number} {title}" + (f" ({detail})" if detail else ""))
        assert ok, detail

    return emit


def random_vertices(rng, count, n, q):
    return [adversary.random_vertex(rng, n, q) for _ in range(count)]


def test_ac1_burning_number_table(report):
    expected = {(3, 2): 3, (4, 2): 3, (5, 2): 4, (3, 3): 4, (3, 4): 4}
    t0 = time.perf_counter()
    got = {nq: burning_number(*nq) for nq in expected}
    elapsed = time.perf_counter() - t0
    report(1, "burning-number table", got == expected and elapsed < 600, f"{got}, {elapsed:.2f}s")


def test_ac2_certificate_validity(report):
    failures = runs = 0
    t0 = time.perf_counter()
    for q in (3, 4, 5):
        for n in range(3, 13):
            for t in range(100):
                rng = adversary.trial_rng(1000 * q + n, t)
                a = [encode(v) for v in random_vertices(rng, n, n, q)]
                runs += 1
                cert = floatvar.run(a)
                x = cert.x_final
                ok = all(abs(inner(ai, x)) < i for i, ai in enumerate(a, start=1))
                ok &= all(dot(a[i - 1].entries, cert.snapshots[n - i]) == 0 for i in range(1, n + 1))
                decode(x)
                failures += not ok
    elapsed = time.perf_counter() - t0
    report(2, "floating-variable certificates", failures == 0, f"{runs} runs, {failures} failures, {elapsed:.1f}s")


def test_ac3_evader_guarantee(report):
    failures = runs = 0
    cases = set()
    for q in (3, 4, 5):
        for n in range(4, 13):
            m = adversary.evader_length(n, q)
            for t in range(100):
                rng = adversary.trial_rng(7000 * q + n, t)
                vs = random_vertices(rng, m, n, q)
                cert = adversary.evade(vs, n, q)
                runs += 1
                ok = all(hdist(v, cert.w) >= m + 1 - i for i, v in enumerate(vs, start=1))
                failures += not ok
                cases.add("r=0" if n % q == 0 else "r>=1")
    ok = failures == 0 and cases == {"r=0", "r>=1"}
    report(3, "evader guarantee", ok, f"{runs} runs, {failures} failures, floor cases {sorted(cases)}")


def test_ac4_bound_sandwich(report):
    rows = []
    ok = True
    for q in (3, 4, 5):
        for n in range(1, 5):
            b = burning_number(n, q)
            lo, hi = adversary.lower_bound(n, q), adversary.upper_bound(n, q)
            good = lo <= b <= hi and burns(adversary.canonical_sequence(n, q))
            ok &= good
            rows.append(f"H({n},{q}):{lo}<={b}<={hi}")
    report(4, "bound sandwich", ok, ", ".join(rows))


def test_ac5_identity_suites(report):
    suites = [
        selfcheck.color_table(qs=range(2, 9)),
        selfcheck.distance_identity(ns=range(1, 4), qs=range(2, 5)),
        selfcheck.random_distance_identity(20, 5, 10_000, seed=5),
        selfcheck.hull_equivalence(10_000, seed=5),
        selfcheck.orbit_identity(4),
    ]
    detail = ", ".join(f"{s.name}:{s.checked}/{s.violations}" for s in suites)
    report(5, "identity suites", all(s.passed for s in suites), detail)


def test_ac6_beck_spencer_oracle(report):
    missing = 0
    for n in range(4, 13):
        rep = experiments.bs_trials(n, 100, seed=n)
        missing += rep.missing
    report(6, "Beck-Spencer existence oracle", missing == 0, f"900 instances, {missing} without witness")


def test_ac7_tiny_oracle_equivalence(report):
    bad = empty = 0
    for t in range(200):
        rng = adversary.trial_rng(77, t)
        n = 1 + t % 3
        vs = random_vertices(rng, n, n, 3)
        a = [encode(v) for v in vs]
        feasible = {
            w for w in all_vertices(n, 3) if all(abs(inner(ai, encode(w))) < i for i, ai in enumerate(a, start=1))
        }
        empty += not feasible
        bad += decode(floatvar.run(a).x_final) not in feasible
    report(7, "oracle equivalence n<=3, q=3", bad == 0 and empty == 0, f"200 instances, {bad} outside, {empty} empty")


def _cli_output(tmp_path, argv):
    dest = tmp_path / "out.json"
    code = cli.main(argv + ["--output", str(dest)])
    return code, dest.read_bytes()


def test_ac8_determinism(report, tmp_path):
    vs = tmp_path / "vs.json"
    vs.write_text(json.dumps([[1, 2, 3, 1, 2, 3, 1], [3, 3, 1, 2, 2, 1, 1], [2, 1, 1, 1, 3, 3, 2]]))
    seq = tmp_path / "seq.json"
    seq.write_text(json.dumps([[1, 1, 1], [2, 2, 2], [3, 3, 3], [1, 1, 1]]))
    commands = [
        ["bounds", "--n", "4", "--q", "3"],
        ["burn-number", "--n", "3", "--q", "4"],
        ["verify-sequence", "--input", str(seq), "--q", "3"],
        ["evade", "--input", str(vs), "--n", "7", "--q", "3"],
        ["bs-check", "--n", "9", "--trials", "50", "--seed", "11"],
        ["openproblem", "--k", "2", "--budget", "500", "--seed", "3"],
        ["openproblem", "--k", "1", "--mode", "exhaustive", "--budget", "45000"],
        ["selfcheck"],
    ]
    mismatched = []
    for argv in commands:
        outs = {_cli_output(tmp_path, argv + ["--workers", w]) for w in ("1", "1", "3")}
        if len(outs) != 1 or next(iter(outs))[0] != 0:
            mismatched.append(argv[0])
    report(8, "determinism across runs and worker counts", not mismatched, f"mismatched: {mismatched}")


def test_ac9_open_problem_exploration(report):
    t0 = time.perf_counter()
    ex1 = experiments.open_problem_search(1, "exhaustive", workers=1)
    t1 = time.perf_counter()
    rnd = experiments.open_problem_search(2, "randomized", budget=10_000, seed=42, workers=1)
    t2 = time.perf_counter()
    ok = ex1.complete and ex1.instances_checked == 81**3 and ex1.consistent
    ok &= rnd.instances_checked == 10_000 and rnd.consistent
    detail = (
        f"k=1 exhaustive: {ex1.instances_checked} instances, {ex1.counterexample_count} counterexamples, "
        f"{t1 - t0:.1f}s; k=2 randomized: {rnd.instances_checked} instances, "
        f"{rnd.counterexample_count} counterexamples, {t2 - t1:.1f}s"
    )
    report(9, "open-problem exploration", ok, detail)
