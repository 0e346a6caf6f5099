from fractions import Fraction
from pathlib import Path

import pytest

from zhu_forge import (
    FockVector,
    WeightOverflowError,
    basic_circle_product,
    basic_star_product,
    basis_vectors,
    build_zhu_context,
    builtin_presentation,
    c2_dims,
    circle_product,
    format_element,
    inverse_system_check,
    mode_action,
    omega_subspace,
    star_product,
    translation_row,
)
from zhu_forge.zhu import an_dims, spanning_vectors

GOLDEN = Path(__file__).parent / "golden"

HEIS = builtin_presentation("heisenberg")
VIR = builtin_presentation("virasoro", Fraction(1, 2))
A = FockVector.from_monomial(HEIS, ((-1, "a"),))
VAC = FockVector.vacuum(HEIS)


def mono(presentation, *modes):
    return FockVector.from_monomial(presentation, tuple(modes))


# --- products -------------------------------------------------------------


def test_star_zero_of_boson_with_itself():
    assert star_product(A, A, 0) == mono(HEIS, (-1, "a"), (-1, "a"))


def test_circle_zero_of_boson_with_itself():
    expected = mono(HEIS, (-2, "a"), (-1, "a")) + mono(HEIS, (-1, "a"), (-1, "a"))
    assert circle_product(A, A, 0) == expected


def test_star_one_against_vacuum():
    # Hand computation: a *_1 vac = -2 a(-3)vac - 3 a(-2)vac.
    expected = -2 * mono(HEIS, (-3, "a")) - 3 * mono(HEIS, (-2, "a"))
    assert star_product(A, VAC, 1) == expected


def test_circle_with_vacuum_is_translation_row():
    for presentation in (HEIS, VIR):
        vac = FockVector.vacuum(presentation)
        for u in basis_vectors(presentation, 5):
            assert circle_product(u, vac, 0) == translation_row(presentation, u)


def test_level_zero_products_match_basic_forms():
    for presentation in (HEIS, VIR):
        states = basis_vectors(presentation, 4)
        for u in states:
            for v in states:
                assert circle_product(u, v, 0) == basic_circle_product(u, v)
                assert star_product(u, v, 0) == basic_star_product(u, v)


def test_vacuum_is_left_star_identity_exactly():
    for level in range(4):
        for v in basis_vectors(HEIS, 5):
            assert star_product(VAC, v, level) == v


def test_virasoro_star_of_conformal_vector():
    omega = VIR.conformal_vector()
    expected = (
        mono(VIR, (-2, "L"), (-2, "L"))
        + 2 * mono(VIR, (-3, "L"))
        + 2 * mono(VIR, (-2, "L"))
    )
    assert star_product(omega, omega, 0) == expected


def test_products_are_bilinear():
    x = mono(HEIS, (-2, "a")) + 2 * A
    y = mono(HEIS, (-1, "a"), (-1, "a"))
    for level in (0, 1):
        assert star_product(x, y + A, level) == (
            star_product(x, y, level) + star_product(x, A, level)
        )
        assert circle_product(x + y, A, level) == (
            circle_product(x, A, level) + circle_product(y, A, level)
        )


# --- truncated contexts -----------------------------------------------------


def test_empty_context_at_cutoff_zero():
    ctx = build_zhu_context(HEIS, 0, 0)
    assert ctx.rank == 0
    assert ctx.dimension_table().rows == [(0, 1)]


def test_context_pivot_relation():
    ctx = build_zhu_context(HEIS, 0, 4)
    got = ctx.reduce(mono(HEIS, (-2, "a"), (-1, "a")))
    assert got == -1 * mono(HEIS, (-1, "a"), (-1, "a"))


def test_spanning_vectors_reduce_to_zero():
    for presentation in (HEIS, VIR):
        for level in (0, 1):
            ctx = build_zhu_context(presentation, level, 5)
            for vec in spanning_vectors(presentation, level, 5):
                assert ctx.reduce(vec).is_zero


def test_reduction_is_well_defined_and_idempotent():
    ctx = build_zhu_context(HEIS, 0, 5)
    x = mono(HEIS, (-3, "a"), (-1, "a")) + 2 * A
    row = ctx.rows[0]
    assert ctx.reduce(x) == ctx.reduce(x + row)
    assert ctx.reduce(ctx.reduce(x)) == ctx.reduce(x)
    assert ctx.reduce(VAC) == VAC


def test_reduce_rejects_overweight_vectors():
    ctx = build_zhu_context(HEIS, 0, 3)
    with pytest.raises(WeightOverflowError) as err:
        ctx.reduce(mono(HEIS, (-4, "a")))
    assert "a[-4]" in str(err.value)


def test_multiply_rejects_overflow():
    ctx = build_zhu_context(HEIS, 1, 3)
    with pytest.raises(WeightOverflowError):
        ctx.multiply(mono(HEIS, (-2, "a")), mono(HEIS, (-2, "a")))


def test_unit_and_centrality_in_quotient():
    for presentation in (HEIS, VIR):
        vac = FockVector.vacuum(presentation)
        omega = presentation.conformal_vector()
        ctx = build_zhu_context(presentation, 0, 6)
        for v in basis_vectors(presentation, 4):
            assert ctx.multiply(vac, v) == ctx.reduce(v)
            assert ctx.multiply(v, vac) == ctx.reduce(v)
            assert ctx.multiply(omega, v) == ctx.multiply(v, omega)


def test_translation_rows_vanish_in_quotient():
    for level in (0, 1, 2):
        ctx = build_zhu_context(HEIS, level, 6)
        for u in basis_vectors(HEIS, 5):
            assert ctx.reduce(translation_row(HEIS, u)).is_zero


def test_inverse_system_containment():
    for presentation in (HEIS, VIR):
        for level in (1, 2):
            assert inverse_system_check(presentation, level, 6).passed


def test_virasoro_translation_row_appears_in_span():
    omega = VIR.conformal_vector()
    row = translation_row(VIR, omega)
    assert row == mono(VIR, (-3, "L")) + 2 * mono(VIR, (-2, "L"))
    ctx = build_zhu_context(VIR, 0, 3)
    assert ctx.reduce(row).is_zero


def test_vacuum_pivot_is_fatal(monkeypatch):
    import zhu_forge.zhu as zhu_module

    monkeypatch.setattr(zhu_module, "spanning_vectors", lambda *a: [VAC])
    with pytest.raises(RuntimeError, match="vacuum"):
        build_zhu_context(HEIS, 0, 2)


# --- dimension tables ---------------------------------------------------------


def _assert_matches_golden(table, name):
    path = GOLDEN / name
    assert path.exists(), f"golden file {name} missing"
    assert table.to_csv() == path.read_text()


def test_quotient_dims_heisenberg_level0():
    table = an_dims(HEIS, 0, 4)
    assert table.rows == [(0, 1), (1, 1), (2, 1), (3, 1), (4, 1)]
    _assert_matches_golden(table, "an_dims_heisenberg_n0_w4.csv")


def test_quotient_dims_virasoro_level1():
    _assert_matches_golden(an_dims(VIR, 1, 6), "an_dims_virasoro_half_n1_w6.csv")


def test_quotient_dims_stabilize_at_low_weight():
    # Empirical record: refining the window does not change low-weight rows.
    at4 = dict(an_dims(HEIS, 0, 4).rows)
    at5 = dict(an_dims(HEIS, 0, 5).rows)
    at6 = dict(an_dims(HEIS, 0, 6).rows)
    for w in range(0, 5):
        assert at4[w] == at5[w] == at6[w]


def test_c2_dims_heisenberg():
    table = c2_dims(HEIS, 6)
    # Everything with a part of size >= 2 is reachable; one class per weight.
    assert table.rows == [(w, 1) for w in range(7)]
    _assert_matches_golden(table, "c2_dims_heisenberg_w6.csv")


def test_c2_dims_heisenberg_small():
    table = c2_dims(HEIS, 2)
    assert table.rows == [(0, 1), (1, 1), (2, 1)]


def test_c2_dims_virasoro():
    table = c2_dims(VIR, 6)
    assert table.rows == [(0, 1), (1, 0), (2, 1), (3, 0), (4, 1), (5, 0), (6, 1)]
    _assert_matches_golden(table, "c2_dims_virasoro_half_w6.csv")


# --- the kernel subspaces -------------------------------------------------------


def test_omega_subspace_heisenberg_is_low_weight_sum():
    for level, expected_dim in ((0, 1), (1, 2), (2, 4)):
        vectors, doc = omega_subspace(HEIS, level, 6)
        assert len(vectors) == expected_dim
        info = {r.name: r.witness for r in doc.sorted_checks()}
        assert info["low_weight_comparison"]["equals_low_weight_sum"] is True
        assert doc.passed


def test_omega_subspace_heisenberg_cross_check_at_higher_cutoff():
    vectors6, _ = omega_subspace(HEIS, 0, 6)
    vectors7, _ = omega_subspace(HEIS, 0, 7)
    assert len(vectors6) == len(vectors7) == 1
    assert vectors6[0] == vectors7[0] == VAC


def test_omega_subspace_virasoro_sees_singular_vector():
    # The universal c=1/2 vacuum module is not simple: its weight-6 singular
    # vector joins the vacuum in the kernel subspace at this window.
    vectors, doc = omega_subspace(VIR, 0, 6)
    info = {r.name: r.witness for r in doc.sorted_checks()}
    assert info["low_weight_comparison"]["equals_low_weight_sum"] is False
    assert len(vectors) == 2
    weights = sorted(v.max_weight() for v in vectors)
    assert weights == [0, 6]
    singular = [v for v in vectors if v.max_weight() == 6][0]
    # Positive shifts kill it exactly.
    omega = VIR.conformal_vector()
    assert mode_action(omega, 2, singular).is_zero  # L(1)
    assert mode_action(omega, 3, singular).is_zero  # L(2)


def test_omega_subspace_preserved_by_zero_modes():
    for presentation, level in ((HEIS, 1), (VIR, 0)):
        _, doc = omega_subspace(presentation, level, 6)
        records = {r.name: r.status for r in doc.sorted_checks()}
        assert records["zero_modes_preserve_subspace"] == "pass"


def test_spanning_dump_is_json_ready():
    import json

    ctx = build_zhu_context(HEIS, 0, 3)
    dump = ctx.spanning_dump()
    text = json.dumps(dump)
    assert "rows" in dump and len(dump["rows"]) == ctx.rank
    assert "a[-1]a[-1]vac" in text
