"""Transformations, covariance laws and bilinear covariants."""

import numpy as np
import pytest

from cl13.algebra import (
    GENERATORS,
    GENERATORS_EXACT,
    J,
    CliffordElement,
    random_element,
)
from cl13.fields import (
    FieldFamily,
    random_family,
    random_two_yang_mills_set,
    sample_points,
    two_yang_mills_residuals,
)
from cl13.rep import gamma_rep, hermitian_eigenvalues
from cl13.shapes import PolyShape, constant_shape
from cl13.subspaces import (
    fixed_idempotent,
    ideal_residual,
    sample,
)
from cl13.symmetries import (
    TRANSFORM_KINDS,
    BilinearForm,
    TransformationSpec,
    antisymmetrized_product,
    apply_transformation,
    bilinear_form,
    check_current_conservation,
    compose_unitary_payloads,
    covariance_check,
)

PTS = sample_points(23, 4)


def _payload(kind, seed, t):
    if kind == "global_unitary":
        perturb = random_element(np.random.default_rng(seed), 0.4)
        gen = (perturb - perturb.herm_conj()) * 0.5
        return TransformationSpec(kind, FieldFamily(((gen, constant_shape(1.0)),)))
    if kind == "gauge_unitary":
        gens = [sample("L", t, seed=seed + i, scale=0.5) for i in range(2)]
        shape = PolyShape({(0, 0, 0, 0): 0.3, (1, 0, 0, 0): 0.5, (0, 0, 1, 0): -0.4})
        return TransformationSpec(kind, FieldFamily(tuple((g, shape) for g in gens)))
    if kind == "gauge_symplectic":
        return TransformationSpec(kind, random_family(seed, n_factors=2, scale=0.4))
    return TransformationSpec(kind)


def test_spec_validation():
    with pytest.raises(ValueError):
        TransformationSpec("gauge_unitary")  # payload required
    with pytest.raises(ValueError):
        TransformationSpec("conjugation", random_family(1))
    with pytest.raises(ValueError):
        TransformationSpec("rotation")


def test_payload_membership(t2):
    for kind in ("global_unitary", "gauge_unitary", "gauge_symplectic"):
        spec = _payload(kind, 51, t2)
        assert spec.payload_residual(t2, PTS) <= 1e-9


def test_identity_gauge_transformation_is_identity(reduced, points):
    spec = TransformationSpec(
        "gauge_unitary",
        FieldFamily(((CliffordElement.zero(), constant_shape(1.0)),)),
    )
    out = apply_transformation(reduced, spec)
    x = points[0]
    assert (out.phi.value(x) - reduced.phi.value(x)).is_zero(1e-12)
    for mu in range(4):
        assert (out.a[mu].value(x) - reduced.a[mu].value(x)).is_zero(1e-12)
        assert (out.b[mu].value(x) - reduced.b[mu].value(x)).is_zero(1e-12)


def test_discrete_j_applied_twice():
    # h -> -conj(h) twice restores h when h is real-coefficient.
    fs = random_two_yang_mills_set(41, fixed_idempotent("t2"), 1.0)
    spec = TransformationSpec("discrete_J")
    twice = apply_transformation(apply_transformation(fs, spec), spec)
    x = PTS[0]
    for mu in range(4):
        h0 = fs.h[mu].value(x)
        h2 = twice.h[mu].value(x)
        assert (h2 - h0.conj().conj()).is_zero(1e-12)
    # phi -> conj(conj(phi) J) J = phi J-bar J = -phi (J^2 = -e, J real):
    phi0 = fs.phi.value(x)
    phi2 = twice.phi.value(x)
    assert (phi2 - phi0 * (J * J)).is_zero(1e-12)


def test_constant_symplectic_conjugation_preserves_h_relations(reduced, points):
    # Conjugating the h frame by a constant W keeps its defining relations.
    from cl13.fields import check_h_identities
    from cl13.rep import inverse

    w = sample("Sp_cl", seed=19, scale=0.5)
    winv = inverse(w)
    x = points[0]
    h_vals = [winv * f.value(x) * w for f in reduced.h]
    assert max(check_h_identities(h_vals).values()) <= 1e-10


def test_covariance_on_solution(reduced, points, t2):
    for k, kind in enumerate(TRANSFORM_KINDS):
        spec = _payload(kind, 100 + k, t2)
        rec = covariance_check(reduced, spec, points[:4])
        assert rec.max_residual <= 1e-9, kind
        # Transformed solutions stay solutions.
        transformed = apply_transformation(reduced, spec)
        after = two_yang_mills_residuals(transformed, points[:4])
        assert after.max_residual <= 1e-9, kind


def test_covariance_residual_law_on_nonsolutions(t2):
    fs = random_two_yang_mills_set(71, t2, 1.0)
    base = two_yang_mills_residuals(fs, PTS[:3])
    assert base.max_residual > 1e-2
    for k, kind in enumerate(TRANSFORM_KINDS):
        spec = _payload(kind, 200 + k, t2)
        rec = covariance_check(fs, spec, PTS[:3])
        assert rec.max_residual <= 1e-9, kind
        assert rec.metadata["original_residual_scale"] > 1e-2


def test_gauge_composition(reduced, points, t2):
    u1 = _payload("gauge_unitary", 300, t2)
    u2 = _payload("gauge_unitary", 301, t2)
    once = apply_transformation(apply_transformation(reduced, u1), u2)
    combined = apply_transformation(
        reduced,
        TransformationSpec("gauge_unitary", compose_unitary_payloads(u1.family, u2.family)),
    )
    for x in points[:3]:
        assert (once.phi.value(x) - combined.phi.value(x)).norm() <= 1e-10
        for mu in range(4):
            assert (once.a[mu].value(x) - combined.a[mu].value(x)).norm() <= 1e-10


def test_transformation_spec_json_roundtrip(t2):
    spec = _payload("gauge_symplectic", 5, t2)
    again = TransformationSpec.from_json_obj(spec.to_json_obj())
    assert again.kind == spec.kind
    x = PTS[0]
    assert (again.family.value(x) - spec.family.value(x)).is_zero(1e-12)
    disc = TransformationSpec.from_json_obj(TransformationSpec("conjugation").to_json_obj())
    assert disc.family is None


# -- bilinear forms ---------------------------------------------------------------


def test_bilinear_form_zero_phi():
    zero = CliffordElement.zero()
    bf = bilinear_form(zero, list(GENERATORS), (0, 1))
    assert bf.value.is_zero()


def test_bilinear_form_rank1_matches_idempotent(t2):
    # J^0 = phi^dag beta e^0 phi = t2 for phi = t2 (beta e^0 = e).
    bf = bilinear_form(t2.element, list(GENERATORS), (0,))
    assert bf.value.equals(t2.element, 1e-14)
    assert np.allclose(hermitian_eigenvalues(bf.value), [0, 0, 1, 1], atol=1e-12)


def test_bilinear_form_exact_antisymmetry():
    t2x = fixed_idempotent("t2", exact=True).element
    h = list(GENERATORS_EXACT)
    for k, indices in ((2, (0, 1)), (3, (0, 1, 2)), (4, (0, 1, 2, 3))):
        base = bilinear_form(t2x, h, indices).value
        for i in range(k - 1):
            swapped = list(indices)
            swapped[i], swapped[i + 1] = swapped[i + 1], swapped[i]
            other = bilinear_form(t2x, h, tuple(swapped)).value
            assert (base + other).is_zero()
    assert bilinear_form(t2x, h, (0, 0)).value.is_zero()
    assert bilinear_form(t2x, h, (3, 3, 1)).value.is_zero()
    with pytest.raises(ValueError):
        bilinear_form(t2x, h, ())


def test_antisymmetrized_product_normalization():
    h = list(GENERATORS_EXACT)
    # Distinct anticommuting generators: h^{[0} h^{1]} = e0 e1 exactly.
    prod = antisymmetrized_product(h, (0, 1))
    expected = GENERATORS_EXACT[0] * GENERATORS_EXACT[1]
    assert (prod - expected).is_zero()


def test_bilinear_form_hermitian_and_in_l(rng, t2, family):
    x = np.array([0.2, 0.8, 0.4, 0.6])
    w = family.value(x)
    winv = family.inverse_field().value(x)
    h_vals = [winv * g * w for g in GENERATORS]
    for _ in range(5):
        phi = random_element(rng, 0.8) * t2.element
        for indices in [(0,), (2,), (0, 1), (1, 2, 3), (0, 1, 2, 3)]:
            bf = bilinear_form(phi, h_vals, indices)
            assert isinstance(bf, BilinearForm)
            j = bf.value
            assert (j.herm_conj() - j).norm() <= 1e-12
            assert ideal_residual(j * 1j, t2, "L") <= 1e-9
            eigs = hermitian_eigenvalues(j)
            assert np.all(np.isfinite(eigs))
            oracle = np.sort(np.linalg.eigvalsh(gamma_rep(j)))
            assert np.allclose(eigs, oracle, atol=1e-10)


# -- current conservation ----------------------------------------------------------


def test_current_conservation_trivial_for_zero_phi(reduced, points):
    rec = check_current_conservation(reduced, points[:4])
    assert rec.metadata["trivial"] is True
    assert rec.equations["current_conservation"].max_residual == 0.0


def test_current_conservation_nontrivial(t2):
    fs = random_two_yang_mills_set(55, t2, 1.0)
    rec = check_current_conservation(fs, PTS[:3])
    assert rec.metadata["trivial"] is False
    assert rec.equations["current_conservation"].max_residual <= 1e-8
