"""Acceptance gate: every criterion runs at its stated tolerance and
prints one pass/fail line (run with ``pytest -s`` to see them live)."""

import time

import numpy as np
import pytest

from grassop import (
    ClassSignature,
    Permutation,
    SemilinearMap,
    Subspace,
    Symmetry,
    adjacency_oracle,
    adjacency_type_transport,
    apply_symmetry,
    classify_adjacency,
    clique_chain,
    clique_contains,
    clique_intersection,
    commutation_check,
    complement,
    component_of,
    components_adjacent,
    condition_a1,
    condition_a2,
    connect,
    is_adjacent,
    line_through,
    make_ij_adjacent,
    operators_equal,
    orthogonality_defect,
    orthonormalize,
    pseudo_adjacent_c3,
    pseudo_adjacent_general,
    random_clique_member,
    random_component_member,
    random_line_member,
    random_operator,
    same_class,
    same_subspace,
    sd_group,
    semilinear_k2_automorphism,
    subspace_sum,
    validate_path,
    verify_automorphism,
)
from grassop.adjacency import image_direct_sum_check
from grassop.cliques import _descriptor_from_parts
from grassop.suite import SuiteConfig, run_suite

from conftest import haar_unitary


def _report(number, label, elapsed, limit=None):
    timing = f"{elapsed:.2f}s" + (f" < {limit:g}s" if limit else "")
    print(f"ACCEPTANCE {number} PASS: {label} ({timing})")


def test_criterion_1_fixed_pair_reproduction():
    started = time.perf_counter()
    a, b = pseudo_adjacent_c3()
    np.testing.assert_allclose(
        a.matrix, 0.5 * np.array([[3, 1, 0], [1, 1, 0], [0, 0, 0]]), atol=1e-8
    )
    np.testing.assert_allclose(
        b.matrix, 0.5 * np.array([[3, 0, 1], [0, 0, 0], [1, 0, 1]]), atol=1e-8
    )
    assert same_class(a, b)
    ok, rank = condition_a1(a, b)
    assert ok and rank == 2
    sv = np.linalg.svd(b.matrix - a.matrix, compute_uv=False)
    assert abs(sv[0] - np.sqrt(3) / 2) < 1e-8 and abs(sv[1] - np.sqrt(3) / 2) < 1e-8
    assert condition_a2(a, b) is False
    # kernel witness: the difference annihilates (-1, 1, 1), which both
    # operators send onto the first axis
    u = np.array([-1.0, 1.0, 1.0])
    assert np.abs((b.matrix - a.matrix) @ u).max() < 1e-8
    kernel_line = orthonormalize(u)
    image_line = orthonormalize(a.matrix @ u)
    assert same_subspace(image_line, orthonormalize(np.eye(3)[:, 0]))
    assert not same_subspace(kernel_line, image_line)
    verdict = is_adjacent(a, b)
    assert verdict.a1 and not verdict.a2 and not verdict.adjacent
    elapsed = time.perf_counter() - started
    assert elapsed < 0.1
    _report(1, "explicit 3x3 rank-two pair reproduced, not adjacent", elapsed, 0.1)


def test_criterion_2_equivalence_oracle():
    started = time.perf_counter()
    rng = np.random.default_rng(2025_02)
    signatures = [
        ClassSignature((0.0, 1.0), (2, 2), 4),
        ClassSignature((1.0, 2.0), (2, 3), 5),
        ClassSignature((1.0, 2.0, 3.0), (2, 2, 2), 6),
        ClassSignature((0.0, 1.0, 2.0, 4.0), (2, 2, 2, 2), 8),
        ClassSignature((1.0, 2.0, 3.0, 5.0), (3, 3, 2, 2), 10),
    ]
    checked = 0
    for trial in range(900):
        sig = signatures[trial % len(signatures)]
        a = random_operator(sig, rng)
        kind = trial % 3
        if kind == 0:
            i = int(rng.integers(sig.k))
            j = int(rng.integers(sig.k - 1))
            j = j if j < i else j + 1
            b = make_ij_adjacent(a, i, j, rng)
        elif kind == 1:
            b = random_operator(sig, rng)
        else:
            b = a
            for _ in range(min(3, sig.k)):
                i = int(rng.integers(sig.k))
                j = int(rng.integers(sig.k - 1))
                j = j if j < i else j + 1
                b = make_ij_adjacent(b, i, j, rng)
        assert adjacency_oracle(a, b)
        checked += 1
    base_sig = ClassSignature((1.0, 2.0, 0.0), (1, 1, 4), 6)
    for trial in range(100):
        base = random_operator(base_sig, rng)
        tilt = orthonormalize(
            base.eigenspaces[0].frame[:, 0] + base.eigenspaces[2].frame[:, 0]
        )
        a, b, _ = pseudo_adjacent_general(base.matrix, tilt, 1.3, rng)
        assert adjacency_oracle(a, b)
        checked += 1
    elapsed = time.perf_counter() - started
    assert checked >= 1000
    assert elapsed < 30
    _report(2, f"predicate/classification agreement on {checked} pairs", elapsed, 30)


def test_criterion_3_connectedness():
    started = time.perf_counter()
    rng = np.random.default_rng(2025_03)
    signatures = [
        ClassSignature((1.0, 2.0, 3.0), (2, 2, 2), 6),
        ClassSignature((0.0, 1.0, 2.0), (2, 2, 4), 8),
        ClassSignature((0.0, 1.0, 2.0, 4.0), (2, 2, 2, 2), 8),
        ClassSignature((1.0, 2.0, 3.0, 5.0), (3, 3, 2, 2), 10),
    ]
    for trial in range(200):
        sig = signatures[trial % len(signatures)]
        a, b = random_operator(sig, rng), random_operator(sig, rng)
        path = connect(a, b)
        assert validate_path(path), "edge failed adjacency or type check"
        assert operators_equal(path.vertices[-1], b)
    elapsed = time.perf_counter() - started
    assert elapsed < 30
    _report(3, "200 random pairs joined by validated paths", elapsed, 30)


def test_criterion_4_triangle_property():
    started = time.perf_counter()
    rng = np.random.default_rng(2025_04)
    sig = ClassSignature((1.0, 2.0, 3.0), (2, 2, 2), 6)
    from grassop import triangle_type

    for trial in range(300):
        a = random_operator(sig, rng)
        i = int(rng.integers(3))
        j = int(rng.integers(2))
        j = j if j < i else j + 1
        i, j = min(i, j), max(i, j)
        x = a.eigenspaces[i]
        line = Subspace(x.frame[:, :1])
        core = complement(line, within=x)
        span = subspace_sum(a.eigenspaces[i], a.eigenspaces[j])
        pins = {t: a.eigenspaces[t] for t in range(3) if t not in (i, j)}
        pair = (i, j) if trial % 2 else (j, i)
        desc = _descriptor_from_parts(sig, pair, core, span, pins)
        triple = [random_clique_member(desc, rng) for _ in range(3)]
        assert triangle_type(*triple) == (i, j)
    elapsed = time.perf_counter() - started
    assert elapsed < 10
    _report(4, "300 mutually adjacent triples share one type", elapsed, 10)


def test_criterion_5_rank_additivity():
    started = time.perf_counter()
    rng = np.random.default_rng(2025_05)
    n = 8
    for trial in range(200):
        u = haar_unitary(n, rng)
        r1 = int(rng.integers(1, 4))
        r2 = int(rng.integers(1, 4))
        t_frame = u[:, :r1]
        mixed = u[:, r1 : r1 + r2] + 0.4 * u[:, :1] @ np.ones((1, r2))
        q_basis = orthonormalize(mixed)
        t = t_frame @ np.diag(rng.uniform(0.5, 2, r1)) @ t_frame.conj().T
        q = (
            q_basis.frame
            @ np.diag(rng.uniform(0.5, 2, q_basis.dim))
            @ q_basis.frame.conj().T
        )
        assert image_direct_sum_check(t, q)
    elapsed = time.perf_counter() - started
    _report(5, "rank additivity on 200 disjoint-image Hermitian pairs", elapsed)


def test_criterion_6_symmetry_forward_direction():
    started = time.perf_counter()
    rng = np.random.default_rng(2025_06)
    sig = ClassSignature((1.0, 2.0, 3.0), (2, 2, 2), 6)
    group = sd_group(sig)
    for trial in range(100):
        perm = group[trial % len(group)]
        s = Symmetry(
            sig,
            haar_unitary(6, rng),
            antiunitary=bool(trial % 2),
            permutation=perm,
        )
        report = verify_automorphism(s, 10, rng, pairs_per_trial=4)
        assert report.adjacency_checks == 50
        assert report.ok, report.adjacency_mismatches or report.class_failures
        if perm.is_identity():
            for source, targets in report.type_transports.items():
                assert targets == {source}
        else:
            for source, targets in report.type_transports.items():
                assert targets == {adjacency_type_transport(s, source)}
        samples = [random_operator(sig, rng) for _ in range(2)]
        u_only = Symmetry(sig, s.matrix, antiunitary=s.antiunitary)
        assert commutation_check(u_only, perm, samples, rtol=1e-9)
    elapsed = time.perf_counter() - started
    _report(6, "100 symmetries preserve adjacency; commutation within 1e-9", elapsed)


def test_criterion_7_k2_counterpoint():
    started = time.perf_counter()
    rng = np.random.default_rng(2025_07)
    sig = ClassSignature((0.0, 1.0), (2, 2), 4)
    vmap = SemilinearMap(np.diag([1.0, 2.0, 1.0, 1.0]))
    assert orthogonality_defect(vmap, 100, rng) == (False, None)
    transform = semilinear_k2_automorphism(vmap, sig)
    for trial in range(200):
        a = random_operator(sig, rng)
        b = make_ij_adjacent(a, 0, 1, rng)
        assert is_adjacent(transform(a), transform(b)).adjacent
    elapsed = time.perf_counter() - started
    _report(7, "non-orthogonal map still preserves adjacency for k = 2", elapsed)


def test_criterion_8_component_and_clique_structure():
    started = time.perf_counter()
    rng = np.random.default_rng(2025_08)
    sig3 = ClassSignature((1.0, 2.0, 3.0), (2, 2, 2), 6)
    sig4 = ClassSignature((0.0, 1.0, 2.0, 4.0), (2, 2, 2, 2), 8)

    # family disjointness and singleton cross-family intersections
    for trial in range(100):
        a, b = random_operator(sig3, rng), random_operator(sig3, rng)
        d1, d2 = component_of(a, 0, 1), component_of(b, 0, 1)
        if not d1.same_component(d2):
            assert not any(
                d2.same_component(component_of(random_component_member(d1, rng), 0, 1))
                for _ in range(2)
            )
        cross = components_adjacent(component_of(a, 0, 1), component_of(a, 1, 2))
        assert cross.kind == "intersecting" and operators_equal(cross.common, a)

    # witness construction for adjacent components of one family
    for trial in range(100):
        a = random_operator(sig4, rng)
        partner = make_ij_adjacent(a, 1, 2, rng) if trial % 2 else make_ij_adjacent(a, 2, 3, rng)
        res = components_adjacent(component_of(a, 0, 1), component_of(partner, 0, 1))
        assert res.kind == "adjacent"
        assert is_adjacent(*res.witness).adjacent

    # intersection trichotomy
    seen = set()
    for trial in range(100):
        a = random_operator(sig3, rng)
        b = make_ij_adjacent(a, 0, 1, rng)
        line = line_through(a, b)
        got = clique_intersection(line.star(), line.top())
        assert got.kind == "line"
        member = random_line_member(got.line, rng)
        assert clique_contains(line.star(), member) and clique_contains(line.top(), member)
        other = random_operator(sig3, rng)
        x = other.eigenspaces[0]
        other_core = complement(Subspace(x.frame[:, :1]), within=x)
        span = subspace_sum(other.eigenspaces[0], other.eigenspaces[1])
        pins = {2: other.eigenspaces[2]}
        d_other = _descriptor_from_parts(sig3, (0, 1), other_core, span, pins)
        kind = clique_intersection(line.star(), d_other).kind
        assert kind in ("empty", "singleton", "line", "equal")
        seen.add(kind)

    # chains with consecutive line intersections
    for trial in range(100):
        a = random_operator(sig3, rng)
        comp = component_of(a, 0, 1)
        x = a.eigenspaces[0]
        core = complement(Subspace(x.frame[:, :1]), within=x)
        span = comp.merged_space()
        pins = {2: a.eigenspaces[2]}
        d1 = _descriptor_from_parts(sig3, (0, 1), core, span, pins)
        other = random_component_member(comp, rng)
        y = other.eigenspaces[1]
        core2 = complement(Subspace(y.frame[:, :1]), within=y)
        d2 = _descriptor_from_parts(sig3, (1, 0), core2, span, pins)
        chain = clique_chain(d1, d2, comp)
        for s, t in zip(chain, chain[1:]):
            assert clique_intersection(s, t).kind == "line"

    elapsed = time.perf_counter() - started
    _report(8, "component/clique lemmas pass 100-trial randomized tests", elapsed)

    suite_started = time.perf_counter()
    report = run_suite(SuiteConfig())
    suite_elapsed = time.perf_counter() - suite_started
    assert report.ok, report.to_text()
    assert suite_elapsed < 120
    _report(8, "full default property suite green", suite_elapsed, 120)
