import itertools
import random

import pytest

from ilmgraphs.errors import UsageError
from ilmgraphs.graph import (
    complete_graph,
    cycle_graph,
    disjoint_union,
    named_graph,
    path_graph,
    petersen_graph,
    random_graph,
    star_graph,
)
from ilmgraphs.model import generate_series, lt_step
from ilmgraphs.sequence import parse_sequence, resolve_sequence
from ilmgraphs.structure import (
    all_patterns,
    canonical_pattern,
    claim1_cycle,
    claim2_matching,
    cut_certificate_search,
    dirac_cycle,
    first_hamiltonian_t,
    hamiltonian,
    hamiltonian_exact,
    ilm_hamilton_applicable,
    ilm_hamiltonian_cycle,
    induced_subgraph_search,
    induced_universality_check,
    lift_cycle_transitive,
    posa_cycle,
    star_hamiltonian_cycle,
    verify_cut_certificate,
    verify_cycle,
    zeta_bracket,
    zeta_star_experiment,
)


def brute_hamiltonian(g):
    """Permutation-level exhaustive check, for n <= 8."""
    if g.n < 3:
        return False
    verts = list(range(1, g.n))
    for perm in itertools.permutations(verts):
        cyc = [0] + list(perm)
        if all(g.has_edge(cyc[i], cyc[(i + 1) % g.n]) for i in range(g.n)):
            return True
    return False


def test_verify_cycle():
    c5 = cycle_graph(5)
    assert verify_cycle(c5, [0, 1, 2, 3, 4])
    assert not verify_cycle(c5, [0, 1, 2, 4, 3])
    assert not verify_cycle(c5, [0, 1, 2, 3])
    assert not verify_cycle(c5, [0, 1, 2, 3, 3])
    assert not verify_cycle(complete_graph(2), [0, 1])


def test_cut_certificate():
    # removing the star's hub leaves n-1 pieces: a valid witness
    s = star_graph(6)
    ok, comps = verify_cut_certificate(s, [0])
    assert ok and comps == 5
    # cutting one cycle vertex does not disconnect enough
    ok, comps = verify_cut_certificate(cycle_graph(6), [0])
    assert not ok
    cut = cut_certificate_search(star_graph(5))
    assert cut is not None
    assert verify_cut_certificate(star_graph(5), cut)[0]
    assert cut_certificate_search(complete_graph(4)) is None


def test_dirac_cycle_on_dense_graphs():
    rng = random.Random(701)
    for _ in range(10):
        n = rng.randint(3, 30)
        g = complete_graph(n)
        cyc = dirac_cycle(g)
        assert verify_cycle(g, cyc)
    # near-tight case: complement of a perfect matching has degree n-2 >= n/2
    for n in (6, 10, 14):
        from ilmgraphs.graph import from_dense_bool
        import numpy as np

        dense = np.ones((n, n), dtype=bool)
        np.fill_diagonal(dense, False)
        for i in range(0, n, 2):
            dense[i, i + 1] = dense[i + 1, i] = False
        g = from_dense_bool(dense)
        assert int(g.degrees.min()) >= n // 2
        assert verify_cycle(g, dirac_cycle(g))


def test_posa_and_exact_agree_with_brute_force():
    rng = random.Random(709)
    for _ in range(15):
        n = rng.randint(3, 8)
        g = random_graph(n, 0.3 + 0.6 * rng.random(), rng.randint(0, 10**6))
        expected = brute_hamiltonian(g)
        res = hamiltonian_exact(g)
        assert res is not None
        assert (res.status == "hamiltonian") == expected
        if res.status == "hamiltonian":
            assert verify_cycle(g, res.cycle)
        cyc = posa_cycle(g)
        if cyc is not None:
            assert expected and verify_cycle(g, cyc)


def test_hamiltonian_cascade():
    res = hamiltonian(petersen_graph())
    assert res.status == "non-hamiltonian" or res.status == "unknown"
    # Petersen is hypo-hamiltonian: exact search must settle it negatively
    assert res.status == "non-hamiltonian"
    res = hamiltonian(complete_graph(12))
    assert res.status == "hamiltonian"
    assert verify_cycle(complete_graph(12), res.cycle)
    res = hamiltonian(path_graph(5))
    assert res.status == "non-hamiltonian"


def test_lift_cycle_transitive():
    # lifting visits each parent vertex then its clone on the parent's cycle
    cyc = [0, 1, 2, 3]
    lifted = lift_cycle_transitive(cyc, 4)
    assert sorted(lifted) == list(range(8))
    # lifted cycles stay cycles in the transitive child
    child = lt_step(cycle_graph(4))
    assert verify_cycle(child, lifted)


def test_claim1_cycle_structure():
    from ilmgraphs.model import generate

    for t in range(2, 7):
        g, _ = generate(complete_graph(1), resolve_sequence("ones"), t)
        cyc = claim1_cycle(t)
        assert verify_cycle(g, cyc)
        # every pre-step vertex v sits adjacent to its clone v + 2^(t-1)
        half = 1 << (t - 1)
        pos = {v: i for i, v in enumerate(cyc)}
        for v in range(half):
            i, j = pos[v], pos[v + half]
            assert abs(i - j) == 1 or abs(i - j) == len(cyc) - 1


def test_claim2_matching_is_perfect_matching():
    from ilmgraphs.model import generate

    for t in range(1, 7):
        g, _ = generate(complete_graph(1), resolve_sequence("ones"), t)
        m = claim2_matching(t)
        assert len(m) == g.n // 2
        seen = set()
        for x, y in m:
            assert g.has_edge(x, y)
            seen.update((x, y))
        assert seen == set(range(g.n))


def test_ilm_hamilton_applicable():
    seq = parse_sequence("(01)*")
    # zeros at 0, 2, 4...; needs beta(t-1) >= 2
    assert ilm_hamilton_applicable(seq, 2) is None
    assert ilm_hamilton_applicable(seq, 3) == (0, 2)
    assert ilm_hamilton_applicable(seq, 5) == (0, 4)
    assert ilm_hamilton_applicable(parse_sequence("(1)*"), 9) is None
    assert ilm_hamilton_applicable(parse_sequence("00(1)*"), 9) is None


def test_dirac_hypothesis_inside_theorem_route():
    # the construction starts from the complement one step before the last
    # anti step, which must satisfy the half-degree condition
    for text in ("(01)*", "(10)*", "1(100)*"):
        seq = parse_sequence(text)
        for seed_name in ("K2", "C4", "C5", "P4"):
            g0 = named_graph(seed_name)
            series, _ = generate_series(g0, seq, 6)
            app = ilm_hamilton_applicable(seq, 6)
            if app is None:
                continue
            _, beta = app
            comp = series[beta - 1].complement()
            n = comp.n
            assert int(comp.degrees.min()) >= (n + 1) // 2, (text, seed_name)


def test_theorem_route_produces_verified_cycles():
    cases = [
        ("K2", "(01)*", 3),
        ("K2", "(01)*", 5),
        ("C4", "(10)*", 4),
        ("C5", "(10)*", 5),
        ("P4", "1(100)*", 6),
        ("2K1", "(0)*", 3),
        ("K1uK2", "(01)*", 3),
        ("petersen", "(10)*", 4),
    ]
    for seed_name, text, t in cases:
        g0 = named_graph(seed_name)
        seq = parse_sequence(text)
        series, _ = generate_series(g0, seq, t)
        cyc = ilm_hamiltonian_cycle(series, seq)
        assert verify_cycle(series[-1], cyc), (seed_name, text, t)


def test_theorem_route_rejects_unmet_hypotheses():
    series, _ = generate_series(complete_graph(1), parse_sequence("(01)*"), 3)
    with pytest.raises(UsageError):
        ilm_hamiltonian_cycle(series, parse_sequence("(01)*"))
    series, _ = generate_series(complete_graph(2), parse_sequence("(1)*"), 3)
    with pytest.raises(UsageError):
        ilm_hamiltonian_cycle(series, parse_sequence("(1)*"))


def test_star_hamiltonian_cycle_explicit():
    from ilmgraphs.model import generate

    # assembly wants one switch pair per leaf: 2^(t-1) >= n-1
    for n, t in ((5, 3), (5, 4), (9, 4), (17, 5)):
        g, _ = generate(star_graph(n), resolve_sequence("ones"), t)
        cyc = star_hamiltonian_cycle(n, t)
        assert verify_cycle(g, cyc), (n, t)
    with pytest.raises(UsageError):
        star_hamiltonian_cycle(5, 2)


def test_zeta_star_experiment_rows():
    rows = zeta_star_experiment(5, 4)
    by_t = {r.t: r for r in rows}
    # below the threshold 2^t >= n-1 a hub cut certifies non-hamiltonicity
    assert by_t[1].status == "non-hamiltonian"
    assert by_t[1].cut_size is not None
    # first positive within the bracket
    first = first_hamiltonian_t(rows)
    lo, hi = zeta_bracket(5)
    assert lo <= first <= hi
    assert first == 2


def test_zeta_bracket_values():
    assert zeta_bracket(3) == (1, 2)
    assert zeta_bracket(4) == (2, 3)
    assert zeta_bracket(5) == (2, 3)
    assert zeta_bracket(9) == (3, 4)


def test_first_hamiltonian_frozen():
    # frozen first-positive values for small stars
    for n, expected in ((3, 1), (4, 2), (5, 2), (9, 3)):
        rows = zeta_star_experiment(n, expected + 1)
        assert first_hamiltonian_t(rows) == expected, n


def test_canonical_pattern_invariance():
    rng = random.Random(719)
    for ell in (3, 4):
        pats = all_patterns(ell)
        # relabeling must not change the class key
        for key, edges in pats:
            perm = list(range(ell))
            rng.shuffle(perm)
            relabeled = [(perm[u], perm[v]) for u, v in edges]
            assert canonical_pattern(ell, relabeled) == key
    assert len(all_patterns(3)) == 4
    assert len(all_patterns(4)) == 11


def test_induced_subgraph_search_finds_and_rejects():
    g = cycle_graph(5)
    # P3 embeds in C5, the triangle does not
    assert induced_subgraph_search(g, 3, [(0, 1), (1, 2)]) is not None
    assert induced_subgraph_search(g, 3, [(0, 1), (1, 2), (0, 2)]) is None
    emb = induced_subgraph_search(petersen_graph(), 4, [(0, 1), (2, 3)])
    assert emb is not None


def test_universality_of_small_iterates():
    # ten alternating steps from one vertex realize every 3-vertex class
    series, _ = generate_series(
        complete_graph(1), resolve_sequence("alt01"), 6
    )
    found, total, detail = induced_universality_check(series[-1], 3)
    assert total == 4
    # at t = 6 (n = 64) everything 3-vertex is already present
    assert found == 4
    for key, emb in detail:
        if emb is not None:
            assert len(emb) == 3
