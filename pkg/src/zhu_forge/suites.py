"""Suite orchestration shared by the command line and the acceptance tests.

Each suite function returns a :class:`ReportDocument`; :func:`run_suite`
dispatches on a :class:`RunConfig` and merges the results. Zhu contexts are
cached per (presentation, level, cutoff) within a run so that the iso suite
does not rebuild spans the zhu suite already produced.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .modes import (
    evaluate_expression,
    expand_product_side,
    filtration_report,
    homomorphism_check,
    pair_expansion,
    reordering_residual,
    word_expression,
)
from .report import CheckRecord, DimensionTable, ReportDocument
from .voa import (
    FockVector,
    Presentation,
    SamplingPlan,
    axiom_suite,
    basis_vectors,
    builtin_presentation,
    format_element,
)
from .zhu import (
    ZhuContext,
    build_zhu_context,
    c2_dims,
    inverse_system_check,
    omega_subspace,
    star_product,
    translation_row,
)

SUITE_NAMES = ("axioms", "zhu", "appendix", "iso", "dims", "omega")


@dataclass
class RunConfig:
    voa: str = "heisenberg"
    central_charge: Fraction = Fraction(1, 2)
    level: int = 0
    cutoff: int = 6
    suites: tuple[str, ...] = ("axioms",)
    seed: int = 0
    out: str | None = None

    def __post_init__(self) -> None:
        if self.level < 0 or self.cutoff < 0:
            raise ValueError("level and cutoff must be nonnegative")
        unknown = set(self.suites) - set(SUITE_NAMES)
        if unknown:
            raise ValueError(f"unknown suites: {sorted(unknown)}")

    def presentation(self) -> Presentation:
        return builtin_presentation(self.voa, self.central_charge)


class ContextCache:
    """Per-run cache of truncated level spans."""

    def __init__(self) -> None:
        self._store: dict[tuple[str, Fraction, int, int], ZhuContext] = {}

    def get(self, presentation: Presentation, level: int, cutoff: int) -> ZhuContext:
        key = (presentation.name, presentation.central_charge, level, cutoff)
        if key not in self._store:
            self._store[key] = build_zhu_context(presentation, level, cutoff)
        return self._store[key]


def zhu_structure_suite(
    presentation: Presentation,
    level: int,
    cutoff: int,
    cache: ContextCache | None = None,
) -> ReportDocument:
    """Quotient-algebra structure at truncation.

    Exact checks: the vacuum class is a two-sided star identity, the
    truncated span is a two-sided star ideal, star is associative modulo the
    span for all in-range basis triples, the conformal class is central at
    level 0, and the translation rows vanish in the quotient. Products
    whose output leaves the window are skipped, not truncated.
    """
    cache = cache or ContextCache()
    ctx = cache.get(presentation, level, cutoff)
    vac = FockVector.vacuum(presentation)
    basis = basis_vectors(presentation, cutoff)
    doc = ReportDocument(
        config={
            "suite": "zhu",
            "voa": presentation.name,
            "central_charge": presentation.central_charge,
            "level": level,
            "cutoff": cutoff,
        }
    )

    def add(name: str, failures: list, extra: dict | None = None) -> None:
        params = {"level": level, "cutoff": cutoff}
        if extra:
            params.update(extra)
        doc.add(
            CheckRecord(
                name=name,
                params=params,
                status="pass" if not failures else "fail",
                witness=failures[0] if failures else None,
            )
        )

    failures = []
    checked = 0
    for v in basis:
        left = star_product(vac, v, level)
        if left.max_weight() <= cutoff and ctx.reduce(left) != ctx.reduce(v):
            failures.append({"side": "left", "v": format_element(v)})
        right = star_product(v, vac, level)
        if right.max_weight() <= cutoff:
            checked += 1
            if ctx.reduce(right) != ctx.reduce(v):
                failures.append({"side": "right", "v": format_element(v)})
    add("unit_class", failures, {"checked": checked})

    failures = []
    checked = 0
    for row in ctx.rows:
        for u in basis:
            for prod, side in ((star_product(u, row, level), "left"),
                               (star_product(row, u, level), "right")):
                if prod.max_weight() <= cutoff:
                    checked += 1
                    if not ctx.reduce(prod).is_zero:
                        failures.append({"side": side, "u": format_element(u)})
    add("two_sided_ideal", failures, {"checked": checked})

    failures = []
    checked = 0
    for u in basis:
        for v in basis:
            uv = star_product(u, v, level)
            if uv.max_weight() > cutoff:
                continue
            for w in basis:
                vw = star_product(v, w, level)
                if vw.max_weight() > cutoff:
                    continue
                left = star_product(uv, w, level)
                right = star_product(u, vw, level)
                if max(left.max_weight(), right.max_weight()) > cutoff:
                    continue
                checked += 1
                if ctx.reduce(left - right):
                    failures.append(
                        {
                            "u": format_element(u),
                            "v": format_element(v),
                            "w": format_element(w),
                        }
                    )
    add("associativity", failures, {"checked": checked})

    failures = []
    for u in basis:
        if u.max_weight() + 1 > cutoff:
            continue
        if ctx.reduce(translation_row(presentation, u)):
            failures.append({"u": format_element(u)})
    add("translation_rows_vanish", failures)

    if level == 0:
        omega = presentation.conformal_vector()
        failures = []
        for x in basis:
            if x.max_weight() + 2 > cutoff:
                continue
            left = star_product(omega, x, 0)
            right = star_product(x, omega, 0)
            if ctx.reduce(left) != ctx.reduce(right):
                failures.append({"x": format_element(x)})
        add("conformal_class_central", failures)

    if level >= 1:
        inverse = inverse_system_check(presentation, level, cutoff)
        doc.extend(inverse.checks)
    return doc


def appendix_suite(
    presentation: Presentation,
    s_range: tuple[int, int] = (-2, 2),
    t_range: tuple[int, int] = (-2, 2),
    depth_range: tuple[int, int] = (0, 4),
    shift_bound: int = 10,
    operator_samples: int = 50,
    seed: int = 0,
) -> ReportDocument:
    """Combinatorial reordering residual grid plus the operator identity.

    The residual is compared per-word over the full (s, t, depth) grid with
    both word shifts bounded; the rewrite of a mode pair is then checked as
    an operator identity on sampled tuples against direct evaluation.
    """
    doc = ReportDocument(
        config={
            "suite": "appendix",
            "voa": presentation.name,
            "central_charge": presentation.central_charge,
            "s": list(s_range),
            "t": list(t_range),
            "N": list(depth_range),
            "shift_bound": shift_bound,
            "samples": operator_samples,
            "seed": seed,
        }
    )
    gen_label, gen_weight = presentation.generators[0]
    u = FockVector.from_monomial(presentation, ((-gen_weight, gen_label),))

    failures = []
    grid = 0
    for s in range(s_range[0], s_range[1] + 1):
        for t in range(t_range[0], t_range[1] + 1):
            for depth in range(depth_range[0], depth_range[1] + 1):
                if depth + s < 0:
                    continue
                grid += 1
                residual = reordering_residual(s, t, depth, u, u, shift_bound)
                if residual:
                    failures.append({"s": s, "t": t, "N": depth, "words": len(residual.terms)})
    doc.add(
        CheckRecord(
            name="reordering_residual_grid",
            params={"tuples": grid, "shift_bound": shift_bound},
            status="pass" if not failures else "fail",
            witness=failures[0] if failures else None,
        )
    )

    rng = random.Random(seed)
    pool = basis_vectors(presentation, 3)
    targets = basis_vectors(presentation, 6)
    failures = []
    for _ in range(operator_samples):
        s = rng.randint(s_range[0], s_range[1])
        t = rng.randint(t_range[0], t_range[1])
        depth = rng.randint(max(depth_range[0], -s), depth_range[1])
        a = pool[rng.randrange(len(pool))]
        b = pool[rng.randrange(len(pool))]
        x = targets[rng.randrange(len(targets))]
        lhs = evaluate_expression(word_expression(presentation, [(a, -s), (b, t)]), x)
        rhs = evaluate_expression(
            pair_expansion(s, t, depth, a, b, right_bound=x.max_weight()), x
        )
        if lhs != rhs:
            failures.append(
                {
                    "s": s,
                    "t": t,
                    "N": depth,
                    "u": format_element(a),
                    "v": format_element(b),
                    "x": format_element(x),
                }
            )
    doc.add(
        CheckRecord(
            name="pair_rewrite_operator_identity",
            params={"samples": operator_samples, "seed": seed},
            status="pass" if not failures else "fail",
            witness=failures[0] if failures else None,
        )
    )
    return doc


def deep_tail_witness_suite(
    presentation: Presentation, levels: tuple[int, ...] = (0, 1, 2), weight_bound: int = 4
) -> ReportDocument:
    """Every circle-product expansion carries a filtration witness.

    For each level n the double-mode expansion at indices
    ``(n+1, n+1, -2n-2)`` of every basis pair must be witnessed at
    filtration level ``-(n+1)``.
    """
    doc = ReportDocument(
        config={
            "suite": "deep_tail_witness",
            "voa": presentation.name,
            "central_charge": presentation.central_charge,
            "levels": list(levels),
            "weight_bound": weight_bound,
        }
    )
    basis = basis_vectors(presentation, weight_bound)
    for level in levels:
        failures = []
        for u in basis:
            for v in basis:
                expansion = expand_product_side(
                    u, v, level + 1, level + 1, -2 * level - 2, right_bound=level + 8
                )
                report = filtration_report(expansion, -(level + 1))
                if not report.passed:
                    failures.append({"u": format_element(u), "v": format_element(v)})
        doc.add(
            CheckRecord(
                name="circle_expansion_witnessed",
                params={"level": level, "weight_bound": weight_bound},
                status="pass" if not failures else "fail",
                witness=failures[0] if failures else None,
            )
        )
    return doc


def dims_suite(
    presentation: Presentation, level: int, cutoff: int, cache: ContextCache | None = None
) -> tuple[ReportDocument, dict[str, DimensionTable]]:
    """Dimension tables for the truncated quotient and the C2 quotient."""
    cache = cache or ContextCache()
    ctx = cache.get(presentation, level, cutoff)
    quotient = ctx.dimension_table()
    c2 = c2_dims(presentation, cutoff)
    doc = ReportDocument(
        config={
            "suite": "dims",
            "voa": presentation.name,
            "central_charge": presentation.central_charge,
            "level": level,
            "cutoff": cutoff,
        }
    )
    doc.add(
        CheckRecord(
            name="quotient_dimensions",
            params={"level": level, "cutoff": cutoff},
            status="pass",
            witness=quotient.to_jsonable(),
        )
    )
    doc.add(
        CheckRecord(
            name="c2_dimensions",
            params={"cutoff": cutoff},
            status="pass",
            witness=c2.to_jsonable(),
        )
    )
    return doc, {"quotient": quotient, "c2": c2}


def run_suite(config: RunConfig) -> tuple[int, ReportDocument]:
    """Run the selected suites; exit code 0 iff every check passed."""
    presentation = config.presentation()
    cache = ContextCache()
    merged = ReportDocument(
        config={
            "voa": config.voa,
            "central_charge": config.central_charge,
            "level": config.level,
            "cutoff": config.cutoff,
            "seed": config.seed,
            "suites": sorted(config.suites),
        }
    )
    for suite in sorted(config.suites):
        if suite == "axioms":
            doc = axiom_suite(presentation, config.cutoff, SamplingPlan(seed=config.seed))
        elif suite == "zhu":
            doc = zhu_structure_suite(presentation, config.level, config.cutoff, cache)
        elif suite == "appendix":
            doc = appendix_suite(presentation, seed=config.seed)
        elif suite == "iso":
            doc = homomorphism_check(presentation, config.level, config.cutoff)
        elif suite == "dims":
            doc, _tables = dims_suite(presentation, config.level, config.cutoff, cache)
        elif suite == "omega":
            _vectors, doc = omega_subspace(presentation, config.level, config.cutoff)
        else:  # pragma: no cover - guarded by RunConfig
            raise ValueError(suite)
        for record in doc.sorted_checks():
            prefixed = CheckRecord(
                name=f"{suite}/{record.name}",
                params=record.params,
                status=record.status,
                witness=record.witness,
                wall_ms=record.wall_ms,
            )
            merged.add(prefixed)
    if config.out:
        merged.write(config.out)
    return (0 if merged.passed else 1), merged
