import numpy as np
import pytest

from grassop import (
    ClassSignature,
    Permutation,
    SemilinearMap,
    Symmetry,
    adjacency_type_transport,
    apply_symmetry,
    classify_adjacency,
    commutation_check,
    compose,
    identity_symmetry,
    inverse,
    is_adjacent,
    make_ij_adjacent,
    operators_equal,
    orthogonality_defect,
    pseudo_adjacent_c3,
    random_operator,
    sd_group,
    semilinear_k2_automorphism,
    verify_automorphism,
)
from grassop.errors import (
    BadIndices,
    InvalidInput,
    NotInSd,
    NotUnitary,
    RequiresKEquals2,
)

from conftest import SIG_222, haar_unitary


class TestSymmetryValue:
    def test_rejects_non_unitary(self):
        with pytest.raises(NotUnitary):
            Symmetry(SIG_222, np.diag([1.0, 2, 1, 1, 1, 1]))

    def test_rejects_bad_permutation(self, rng):
        sig = ClassSignature((0.0, 1.0), (1, 3), 4)
        with pytest.raises(NotInSd):
            Symmetry(sig, np.eye(4), permutation=Permutation((1, 0)))

    def test_identity_fixes_everything(self, rng):
        op = random_operator(SIG_222, rng)
        assert operators_equal(apply_symmetry(identity_symmetry(SIG_222), op), op)

    def test_swap_unitary_maps_fixed_pair(self):
        # the permutation matrix exchanging the last two axes conjugates
        # the first operator of the explicit pair onto the second
        a, b = pseudo_adjacent_c3()
        swap = np.eye(3)[:, [0, 2, 1]]
        s = Symmetry(a.signature, swap)
        assert operators_equal(apply_symmetry(s, a), b)

    def test_antiunitary_with_identity_matrix_fixes_real_operators(self, rng):
        sig = ClassSignature((1.0, 2.0), (1, 2), 3)
        from grassop import make_operator
        from conftest import basis_span

        op = make_operator(sig, [basis_span(3, 0), basis_span(3, 1, 2)])
        s = Symmetry(sig, np.eye(3), antiunitary=True)
        assert operators_equal(apply_symmetry(s, op), op)


class TestComposition:
    def random_symmetry(self, rng):
        group = sd_group(SIG_222)
        return Symmetry(
            SIG_222,
            haar_unitary(6, rng),
            antiunitary=bool(rng.integers(2)),
            permutation=group[int(rng.integers(len(group)))],
        )

    def test_identity_neutral(self, rng):
        s = self.random_symmetry(rng)
        e = identity_symmetry(SIG_222)
        op = random_operator(SIG_222, rng)
        assert operators_equal(
            apply_symmetry(compose(s, e), op), apply_symmetry(s, op)
        )

    def test_antiunitary_flags_xor(self, rng):
        s1 = Symmetry(SIG_222, haar_unitary(6, rng), antiunitary=True)
        s2 = Symmetry(SIG_222, haar_unitary(6, rng), antiunitary=True)
        assert compose(s1, s2).antiunitary is False

    def test_pointwise_agreement(self, rng):
        for _ in range(100):
            s1, s2 = self.random_symmetry(rng), self.random_symmetry(rng)
            op = random_operator(SIG_222, rng)
            assert operators_equal(
                apply_symmetry(compose(s1, s2), op),
                apply_symmetry(s1, apply_symmetry(s2, op)),
            )

    def test_associativity_on_samples(self, rng):
        s1, s2, s3 = (self.random_symmetry(rng) for _ in range(3))
        op = random_operator(SIG_222, rng)
        assert operators_equal(
            apply_symmetry(compose(compose(s1, s2), s3), op),
            apply_symmetry(compose(s1, compose(s2, s3)), op),
        )

    def test_inverse(self, rng):
        for _ in range(20):
            s = self.random_symmetry(rng)
            op = random_operator(SIG_222, rng)
            assert operators_equal(
                apply_symmetry(inverse(s), apply_symmetry(s, op)), op
            )


class TestCommutation:
    def test_identity_permutation_trivial(self, rng):
        samples = [random_operator(SIG_222, rng) for _ in range(5)]
        s = Symmetry(SIG_222, haar_unitary(6, rng))
        assert commutation_check(s, Permutation.identity(3), samples)

    def test_swap_on_balanced_class(self, rng):
        sig = ClassSignature((0.0, 1.0), (2, 2), 4)
        samples = [random_operator(sig, rng) for _ in range(100)]
        s = Symmetry(sig, haar_unitary(4, rng))
        assert commutation_check(s, Permutation((1, 0)), samples)

    def test_corrupted_matrix_reports_false(self, rng):
        samples = [random_operator(SIG_222, rng) for _ in range(5)]
        bad = haar_unitary(6, rng)
        bad[0] *= 1.5
        assert commutation_check(bad, Permutation((1, 0, 2)), samples) is False


class TestTypeTransport:
    def test_identity(self, rng):
        s = Symmetry(SIG_222, haar_unitary(6, rng))
        assert adjacency_type_transport(s, (0, 2)) == (0, 2)

    def test_swap(self, rng):
        s = Symmetry(SIG_222, haar_unitary(6, rng), permutation=Permutation((1, 0, 2)))
        assert adjacency_type_transport(s, (0, 2)) == (1, 2)

    def test_transport_matches_observation(self, rng):
        group = sd_group(SIG_222)
        for perm in group:
            s = Symmetry(SIG_222, haar_unitary(6, rng), permutation=perm)
            for pair in ((0, 1), (0, 2), (1, 2)):
                predicted = adjacency_type_transport(s, pair)
                a = random_operator(SIG_222, rng)
                b = make_ij_adjacent(a, *pair, rng)
                observed = classify_adjacency(
                    apply_symmetry(s, a), apply_symmetry(s, b)
                )
                assert observed == predicted

    def test_bad_indices(self, rng):
        s = identity_symmetry(SIG_222)
        with pytest.raises(BadIndices):
            adjacency_type_transport(s, (1, 1))


class TestVerifyAutomorphism:
    def test_unitary_preserves_types(self, rng):
        s = Symmetry(SIG_222, haar_unitary(6, rng))
        report = verify_automorphism(s, 10, rng)
        assert report.ok
        for source, targets in report.type_transports.items():
            assert targets == {source}

    def test_permutation_transports_types(self, rng):
        s = Symmetry(SIG_222, haar_unitary(6, rng), permutation=Permutation((2, 1, 0)))
        report = verify_automorphism(s, 10, rng)
        assert report.ok
        for source, targets in report.type_transports.items():
            assert targets == {adjacency_type_transport(s, source)}

    def test_non_unitary_probe_flagged(self, rng):
        report = verify_automorphism(
            np.diag([1.0, 2, 1, 1, 1, 1]), 5, rng, signature=SIG_222
        )
        assert not report.ok and report.class_failures


class TestSemilinear:
    def test_rejects_singular(self):
        with pytest.raises(InvalidInput):
            SemilinearMap(np.diag([1.0, 0.0]))

    def test_k2_required(self, rng):
        vmap = SemilinearMap(np.eye(6))
        with pytest.raises(RequiresKEquals2):
            semilinear_k2_automorphism(vmap, SIG_222)

    def test_unitary_map_agrees_with_symmetry(self, rng):
        sig = ClassSignature((0.0, 1.0), (2, 2), 4)
        u = haar_unitary(4, rng)
        transform = semilinear_k2_automorphism(SemilinearMap(u), sig)
        s = Symmetry(sig, u)
        op = random_operator(sig, rng)
        assert operators_equal(transform(op), apply_symmetry(s, op))

    def test_composition_of_transforms(self, rng):
        sig = ClassSignature((0.0, 1.0), (2, 2), 4)
        v = SemilinearMap(np.diag([1.0, 2.0, 1.0, 1.0]))
        w = SemilinearMap(np.diag([1.0, 1.0, 3.0, 1.0]))
        fv = semilinear_k2_automorphism(v, sig)
        fw = semilinear_k2_automorphism(w, sig)
        fvw = semilinear_k2_automorphism(SemilinearMap(v.matrix @ w.matrix), sig)
        op = random_operator(sig, rng)
        assert operators_equal(fv(fw(op)), fvw(op))

    def test_tilted_map_preserves_adjacency(self, rng):
        sig = ClassSignature((0.0, 1.0), (2, 2), 4)
        transform = semilinear_k2_automorphism(
            SemilinearMap(np.diag([1.0, 2.0, 1.0, 1.0])), sig
        )
        for _ in range(50):
            a = random_operator(sig, rng)
            b = make_ij_adjacent(a, 0, 1, rng)
            assert is_adjacent(transform(a), transform(b)).adjacent


class TestOrthogonalityDefect:
    def test_scaled_unitary(self, rng):
        u = haar_unitary(5, rng)
        flag, scalar = orthogonality_defect(SemilinearMap(2 * u), 50, rng)
        assert flag and abs(scalar - 2.0) < 1e-10

    def test_antilinear_unitary(self, rng):
        flag, scalar = orthogonality_defect(
            SemilinearMap(np.eye(4), antilinear=True), 50, rng
        )
        assert flag and abs(scalar - 1.0) < 1e-12

    def test_diagonal_tilt_detected(self, rng):
        # e1+e2 and e1-e2 are orthogonal; their images under diag(1, 2)
        # have inner product 1 - 4 = -3
        flag, scalar = orthogonality_defect(SemilinearMap(np.diag([1.0, 2.0])), 50, rng)
        assert not flag and scalar is None
