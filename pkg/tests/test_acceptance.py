"""Acceptance gate: one test per shipping criterion, each printing a single
labeled PASS line (run with -s or -rA to see them). Every check carries its
stated tolerance and runtime budget; a slow pass fails the budget assert."""

import itertools
import json
import time
from fractions import Fraction

from ilmgraphs.cli import main as cli_main
from ilmgraphs.graph import complete_graph, named_graph, random_graph
from ilmgraphs.harness import CorpusSpec
from ilmgraphs.metrics import (
    bounded_gap_clustering_floor,
    clustering_coefficient,
    lt_step_clustering_factor,
)
from ilmgraphs.model import generate_series, lt_step, predict_edge_series, predict_edges
from ilmgraphs.params import (
    classify_domination_2,
    diameter_radius,
    is_two_clique_union,
)
from ilmgraphs.sequence import parse_sequence, resolve_sequence
from ilmgraphs.spectral import mixing_sweep, spectrum, step_gap_lower_bound
from ilmgraphs.structure import (
    first_hamiltonian_t,
    hamiltonian,
    ilm_hamilton_applicable,
    ilm_hamiltonian_cycle,
    induced_universality_check,
    verify_cycle,
    zeta_bracket,
    zeta_star_experiment,
)

VERTEX_CAP = 1024


def corpus_steps(n0: int, cap: int = VERTEX_CAP) -> int:
    t = 0
    n = n0
    while n * 2 <= cap:
        n *= 2
        t += 1
    return t


def build(inst, cap: int = VERTEX_CAP):
    g0 = named_graph(inst.graph)
    seq = resolve_sequence(inst.sequence)
    series, trace = generate_series(g0, seq, corpus_steps(g0.n, cap))
    return g0, seq, series, trace


def brute_gamma_upto(g, kmax: int):
    """Smallest dominating-set size <= kmax by subset enumeration, else None."""
    masks = [g.row_int(v) | (1 << v) for v in range(g.n)]
    full = (1 << g.n) - 1
    for k in range(1, kmax + 1):
        for combo in itertools.combinations(range(g.n), k):
            acc = 0
            for v in combo:
                acc |= masks[v]
            if acc == full:
                return k
    return None


def test_c01_edge_recurrence_exact():
    # constructed edge counts equal the step recurrences exactly,
    # 200+ steps across the builtin corpus, zero tolerance, < 30 s
    t0 = time.time()
    steps = 0
    for inst in CorpusSpec.builtin().instances:
        _, _, series, trace = build(inst)
        for t in range(1, len(series)):
            parent, child = series[t - 1], series[t]
            bit = trace[t - 1].bit
            expected = predict_edges(parent.n, parent.edge_count, bit)
            assert child.edge_count == expected, (inst, t)
            if bit == 1:
                assert expected == 3 * parent.edge_count + parent.n
            else:
                assert expected == parent.n**2 - parent.edge_count - parent.n
            steps += 1
    elapsed = time.time() - t0
    assert steps >= 200
    assert elapsed < 30
    print(f"criterion 01 PASS edge recurrence exact on {steps} steps ({elapsed:.1f}s < 30s)")


def test_c02_even_step_ratio_asymptotics():
    # single-vertex seed, alternating 1,0,...: e_t / ((16/19) 4^(t-1))
    # approaches 1 from below; checkpoints within 1e-4; < 10 s
    t0 = time.time()
    rows = predict_edge_series(1, 0, parse_sequence("(10)*"), 16)
    checkpoints = {8: 0.9933280945, 10: 0.9977719784, 12: 0.9995480031}
    ratios = {}
    for t in range(2, 17, 2):
        e_t = rows[t][1]
        ratios[t] = Fraction(19 * e_t, 16 * 2 ** (2 * t - 2))
    for t, expected in checkpoints.items():
        assert abs(float(ratios[t]) - expected) < 1e-4, (t, float(ratios[t]))
    gaps = [abs(ratios[t] - 1) for t in range(2, 17, 2)]
    assert all(a > b for a, b in zip(gaps, gaps[1:])), gaps
    # construction agrees with the recurrence as far as it is built
    series, _ = generate_series(complete_graph(1), parse_sequence("(10)*"), 9)
    for t, g in enumerate(series):
        assert (g.n, g.edge_count) == rows[t]
    elapsed = time.time() - t0
    assert elapsed < 10
    print(
        "criterion 02 PASS even-step ratios "
        + " ".join(f"t={t}:{float(ratios[t]):.6f}" for t in checkpoints)
        + f", |ratio-1| strictly decreasing through t=16 ({elapsed:.1f}s < 10s)"
    )


def test_c03_chromatic_bracket_and_step_law():
    # exact chromatic numbers stay inside [chi0 + t - 1, chi0 + t]; each
    # transitive step and each anti step at radius >= 3 adds exactly one; < 5 min
    from ilmgraphs.params import chromatic_number

    t0 = time.time()
    cases = [("K1", 5), ("C4", 3), ("C5", 3)]
    checks = 0
    for seed_name, t_max in cases:
        g0 = named_graph(seed_name)
        chi0 = chromatic_number(g0).value
        for sname in ("ones", "zeros", "alt01", "alt10"):
            seq = resolve_sequence(sname)
            series, _ = generate_series(g0, seq, t_max)
            chis = [chromatic_number(g).value for g in series]
            for t, chi in enumerate(chis):
                assert chi0 + t - 1 <= chi <= chi0 + t, (seed_name, sname, t, chi)
                checks += 1
            for t in range(t_max):
                if seq.bit(t) == 1:
                    assert chis[t + 1] == chis[t] + 1, (seed_name, sname, t)
                elif diameter_radius(series[t]).radius >= 3:
                    assert chis[t + 1] == chis[t] + 1, (seed_name, sname, t)
    elapsed = time.time() - t0
    assert elapsed < 300
    print(f"criterion 03 PASS chromatic bracket on {checks} exact values ({elapsed:.1f}s < 5min)")


def test_c04_domination_classification_vs_brute_force():
    # gamma <= 3 once two anti steps applied; the gamma = 2 classification
    # matches brute force exactly, covering all three conditions; < 2 min
    t0 = time.time()
    seeds = ["K1", "2K1", "K2", "star4", "C4", "C5", "P4", "K1uK2", "K2uK3"]
    texts = ["(0)*", "(01)*", "0(10)*", "1(100)*"]
    count = 0
    branches = set()
    for seed_name in seeds:
        g0 = named_graph(seed_name)
        for text in texts:
            seq = parse_sequence(text)
            tau1, tau2 = seq.tau(1), seq.tau(2)
            series, _ = generate_series(g0, seq, 6)
            for t in range(tau1 + 1, 7):
                g = series[t]
                if g.n > 48:
                    break
                cls = classify_domination_2(g0, seq, t)
                gamma = brute_gamma_upto(g, 4)
                if cls.strict:
                    assert gamma == cls.predicted_gamma, (seed_name, text, t, gamma)
                else:
                    assert gamma != 2, (seed_name, text, t)
                if tau2 is not None and t >= tau2 + 1:
                    assert gamma is not None and gamma <= 3, (seed_name, text, t)
                if cls.condition:
                    branches.add(cls.condition)
                count += 1
    elapsed = time.time() - t0
    assert count >= 20
    assert branches == {1, 2, 3}
    assert elapsed < 120
    print(
        f"criterion 04 PASS domination classification exact on {count} instances,"
        f" conditions {sorted(branches)} all hit ({elapsed:.1f}s < 2min)"
    )


def test_c05_diameter_three_after_second_anti_step():
    # diameter exactly 3 from one step after the second zero, for every
    # corpus instance meeting the hypotheses; plus the single-vertex
    # all-zeros schedule: diameter 4 after four steps, 3 after five; < 2 min
    t0 = time.time()
    checks = 0
    for inst in CorpusSpec.builtin().instances:
        g0 = named_graph(inst.graph)
        seq = resolve_sequence(inst.sequence)
        if g0.n == 1 or is_two_clique_union(g0):
            continue
        tau2 = seq.tau(2)
        if tau2 is None:
            continue
        t_max = corpus_steps(g0.n)
        if t_max < tau2 + 1:
            continue
        series, _ = generate_series(g0, seq, t_max)
        for t in range(tau2 + 1, t_max + 1):
            assert diameter_radius(series[t]).diameter == 3, (inst, t)
            checks += 1
    series, _ = generate_series(complete_graph(1), parse_sequence("(0)*"), 5)
    diams = [diameter_radius(g) for g in series]
    assert all(d.component_count > 1 for d in diams[1:4])
    assert diams[4].diameter == 4
    assert diams[5].diameter == 3
    elapsed = time.time() - t0
    assert checks > 0
    assert elapsed < 120
    print(
        f"criterion 05 PASS diameter=3 at {checks} applicable steps;"
        f" exceptional single-vertex schedule 4 then 3 ({elapsed:.1f}s < 2min)"
    )


def test_c06_spectral_gap_bounds_and_mixing():
    # every step's measured gap beats its a-priori bound (transitive bounds
    # additionally > 1/2); mixing holds on 200 subsets per graph at 1e-6;
    # eigensolve residual <= 1e-8 through n = 1024; < 5 min
    t0 = time.time()
    gap_checks = mix_checks = 0
    for inst in CorpusSpec.builtin().instances:
        _, _, series, trace = build(inst)
        for t in range(1, len(series)):
            child = series[t]
            if child.n > 512:
                continue
            s = spectrum(child)
            assert s.residual <= 1e-8, (inst, t)
            bound = step_gap_lower_bound(
                series[t - 1].n, series[t - 1].edge_count, trace[t - 1].bit
            )
            assert s.gap >= bound - 1e-9, (inst, t, s.gap, bound)
            if trace[t - 1].bit == 1:
                assert bound > 0.5
            gap_checks += 1
            sweep = mixing_sweep(child, subsets=200, tol=1e-6, lam=s.gap)
            assert sweep.all_hold, (inst, t)
            mix_checks += 1
    # residual stays tight at the largest size the corpus reaches
    for seed_name, sname, t in (("K1", "ones", 10), ("C4", "alt01", 8)):
        series, _ = generate_series(
            named_graph(seed_name), resolve_sequence(sname), t
        )
        assert series[t].n == 1024
        assert spectrum(series[t], cap=1024).residual <= 1e-8
    elapsed = time.time() - t0
    assert elapsed < 300
    print(
        f"criterion 06 PASS gap bounds at {gap_checks} steps, mixing at"
        f" {mix_checks} graphs x 200 subsets, residuals <= 1e-8 ({elapsed:.1f}s < 5min)"
    )


def test_c07_clustering_step_inequality_and_floor():
    # one transitive step: C(G') >= (7/8 - 3/(8 delta)) C(G), exact rational
    # arithmetic on 50 instances; alternating-sequence floor 49/16384 from the
    # third zero onward; < 2 min
    t0 = time.time()
    import random as _random

    rng = _random.Random(20260817)
    checked = 0
    while checked < 50:
        n = rng.randint(3, 48)
        g = random_graph(n, 0.2 + 0.7 * rng.random(), rng.randint(0, 10**6))
        delta = int(g.degrees.min())
        if delta < 1:
            continue
        lhs = clustering_coefficient(lt_step(g))
        rhs = lt_step_clustering_factor(delta) * clustering_coefficient(g)
        assert lhs >= rhs, (n, delta)
        checked += 1
    floor = bounded_gap_clustering_floor(2)
    assert floor == Fraction(49, 16384)
    floored = []
    for sname in ("alt01", "alt10"):
        seq = resolve_sequence(sname)
        tau3 = seq.tau(3)
        series, _ = generate_series(complete_graph(1), seq, 10)
        for t in range(tau3, 11):
            c = clustering_coefficient(series[t])
            assert c >= floor, (sname, t, float(c))
            floored.append(float(c))
    elapsed = time.time() - t0
    assert elapsed < 120
    print(
        f"criterion 07 PASS step inequality exact on {checked} instances;"
        f" floor 49/16384 held, min C = {min(floored):.4f} ({elapsed:.1f}s < 2min)"
    )


def test_c08_hamiltonicity_routes_and_star_experiment():
    # constructive spanning cycles wherever two separated zeros apply at
    # t >= tau2 + 1; three anti steps make every multi-vertex seed
    # Hamiltonian; the star family pins the first-Hamiltonian step; < 5 min
    t0 = time.time()
    route_checks = 0
    for inst in CorpusSpec.builtin().instances:
        g0 = named_graph(inst.graph)
        if g0.n == 1:
            continue
        seq = resolve_sequence(inst.sequence)
        tau2 = seq.tau(2)
        if tau2 is None:
            continue
        series, _ = generate_series(g0, seq, corpus_steps(g0.n))
        for t in range(tau2 + 1, len(series)):
            if series[t].n < 3 or ilm_hamilton_applicable(seq, t) is None:
                continue
            cyc = ilm_hamiltonian_cycle(series[: t + 1], seq)
            assert verify_cycle(series[t], cyc), (inst, t)
            route_checks += 1
    allzero = resolve_sequence("zeros")
    lat3 = 0
    for inst_graph in (
        "K2", "2K1", "C4", "C5", "P4", "star4", "K1uK2", "K2uK3", "petersen",
        "rand(8,0.3,1001)", "rand(10,0.5,1002)", "rand(12,0.2,1003)",
    ):
        series, _ = generate_series(named_graph(inst_graph), allzero, 3)
        res = hamiltonian(series[-1])
        assert res.status == "hamiltonian", inst_graph
        assert verify_cycle(series[-1], res.cycle)
        lat3 += 1
    firsts = {}
    for n, frozen_first in ((3, 1), (4, 2), (5, 2), (9, 3)):
        rows = zeta_star_experiment(n, 5)
        for row in rows:
            if (1 << row.t) < n - 1:
                assert row.status == "non-hamiltonian", (n, row.t)
                assert row.cut_size is not None and row.components > row.cut_size
        first = first_hamiltonian_t(rows)
        lo, hi = zeta_bracket(n)
        assert lo <= first <= hi, (n, first)
        assert first == frozen_first, (n, first)
        firsts[n] = first
    elapsed = time.time() - t0
    assert elapsed < 300
    print(
        f"criterion 08 PASS {route_checks} constructed cycles verified;"
        f" {lat3} three-anti-step graphs Hamiltonian; star firsts {firsts}"
        f" ({elapsed:.1f}s < 5min)"
    )


def test_c09_induced_universality():
    # ten steps from one vertex realize all 4 three-vertex classes under
    # each sequence; nine transitive steps realize all 11 four-vertex
    # classes; < 3 min
    t0 = time.time()
    for sname in ("ones", "zeros", "alt01"):
        series, _ = generate_series(complete_graph(1), resolve_sequence(sname), 10)
        found, total, _ = induced_universality_check(series[10], 3)
        assert (found, total) == (4, 4), sname
    series, _ = generate_series(complete_graph(1), resolve_sequence("ones"), 9)
    found, total, _ = induced_universality_check(series[9], 4)
    assert (found, total) == (11, 11)
    elapsed = time.time() - t0
    assert elapsed < 180
    print(
        "criterion 09 PASS universality: 4/4 three-vertex classes under three"
        f" sequences at t=10; 11/11 four-vertex classes at t=9 ({elapsed:.1f}s < 3min)"
    )


def test_c10_campaign_byte_determinism(tmp_path):
    # two full verification campaigns write byte-identical artifacts
    t0 = time.time()
    outputs = []
    for sub in ("run_a", "run_b"):
        outdir = tmp_path / sub
        code = cli_main(
            ["verify", "--corpus", "builtin", "--theorems", "all",
             "--out", str(outdir)]
        )
        assert code == 0
        outputs.append(
            {
                name: (outdir / name).read_bytes()
                for name in ("report.json", "report.csv", "summary.txt")
            }
        )
    assert outputs[0] == outputs[1]
    payload = json.loads(outputs[0]["report.json"].decode())
    assert payload["campaign"]["corpus"] == "builtin"
    elapsed = time.time() - t0
    print(
        f"criterion 10 PASS two full campaigns byte-identical across"
        f" {len(payload['reports'])} reports ({elapsed:.1f}s)"
    )
