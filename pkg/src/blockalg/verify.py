"""Relation suite driver.

Each suite enumerates a deterministic family of inputs (generators and
left-nested brackets, words, formal symbols), checks one relation family
with exact arithmetic, and reports pass/fail with counterexample
payloads.  Reports carry no timestamps, so identical configurations give
byte-identical reports.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator

from . import blockpoly, blocks, wordops
from .cpoly import CPoly
from .linalg import in_row_span, nullspace, rank_over_q
from .ncpoly import NCPoly

SUITE_NAMES = (
    "duality",
    "block_shuffle",
    "cyclic_insertion",
    "reflection",
    "cyclic_invariance",
    "differential",
    "kernel_membership",
    "regularisation",
    "generator_characterisation",
    "depth_support",
    "coaction_grading",
    "ihara_consistency",
    "freeness",
    "parity_endpoint",
)

# (max_weight, max_block_degree) used when the caller does not override.
SUITE_DEFAULTS: dict[str, tuple[int, int]] = {
    "duality": (13, 3),
    "block_shuffle": (13, 3),
    "cyclic_insertion": (13, 3),
    "reflection": (13, 3),
    "cyclic_invariance": (13, 3),
    "differential": (13, 3),
    "kernel_membership": (11, 3),
    "regularisation": (12, 2),
    "generator_characterisation": (13, 1),
    "depth_support": (13, 1),
    "coaction_grading": (10, 3),
    "ihara_consistency": (11, 3),
    "freeness": (15, 3),
    "parity_endpoint": (12, 3),
}

MAX_WEIGHT_LIMIT = 16
MAX_BLOCK_DEGREE_LIMIT = 4
MAX_FAILURES = 5


class UnknownSuiteError(ValueError):
    pass


class SuiteBoundsError(ValueError):
    pass


@dataclass
class RelationReport:
    relation_name: str
    parameters: dict
    instances_checked: int = 0
    failures: list = field(default_factory=list)
    engine_notes: list = field(default_factory=list)

    @property
    def status(self) -> str:
        return "pass" if not self.failures else "fail"

    def record_failure(self, descriptor: str, payload: CPoly | None) -> None:
        if len(self.failures) < MAX_FAILURES:
            self.failures.append(
                {
                    "input": descriptor,
                    "polynomial": payload.to_dict() if payload is not None else None,
                }
            )
        elif not any(n.startswith("failures truncated") for n in self.engine_notes):
            self.engine_notes.append(f"failures truncated at {MAX_FAILURES}")

    def to_dict(self) -> dict:
        return {
            "relation_name": self.relation_name,
            "parameters": self.parameters,
            "instances_checked": self.instances_checked,
            "status": self.status,
            "failures": self.failures,
            "engine_notes": self.engine_notes,
        }


@dataclass(frozen=True)
class VerifyConfig:
    """Bounds and suite selection; None bounds mean per-suite defaults."""

    max_weight: int | None = None
    max_block_degree: int | None = None
    suites: tuple[str, ...] = SUITE_NAMES

    def to_dict(self) -> dict:
        return {
            "max_weight": self.max_weight,
            "max_block_degree": self.max_block_degree,
            "suites": list(self.suites),
        }


# -- the bracket family --------------------------------------------------------


def generator_weights(max_weight: int) -> list[int]:
    return list(range(3, max_weight + 1, 2))


def weight_tuples(max_weight: int, max_block_degree: int) -> list[tuple[int, ...]]:
    """Ordered generator-weight tuples, lexicographic within each length."""
    out: list[tuple[int, ...]] = []
    for b in range(1, max_block_degree + 1):
        for ws in itertools.product(generator_weights(max_weight), repeat=b):
            if sum(ws) <= max_weight:
                out.append(ws)
    return out


def _label(ws: tuple[int, ...]) -> str:
    if len(ws) == 1:
        return f"p{ws[0]}"
    inner = f"{{p{ws[0]},p{ws[1]}}}"
    for w in ws[2:]:
        inner = f"{{{inner},p{w}}}"
    return inner


def bracket_family(
    max_weight: int, max_block_degree: int
) -> list[tuple[str, tuple[int, ...], CPoly]]:
    """(label, weights, reduced polynomial) for every left-nested bracket.

    Brackets are built incrementally so each prefix is computed once per
    call; zero brackets are kept (relations hold on them trivially and
    the enumeration counts stay meaningful).
    """
    reduced: dict[tuple[int, ...], CPoly] = {}
    out = []
    for ws in weight_tuples(max_weight, max_block_degree):
        if len(ws) == 1:
            poly = blockpoly.reduced_generator((ws[0] - 1) // 2)
        else:
            prev = reduced[ws[:-1]]
            gen = blockpoly.reduced_generator((ws[-1] - 1) // 2)
            poly = (
                CPoly.zero(len(ws) + 1)
                if prev.is_zero()
                else blockpoly.reduced_bracket(prev, gen)
            )
        reduced[ws] = poly
        out.append((_label(ws), ws, poly))
    return out


def _bg_form(reduced: CPoly) -> CPoly:
    if reduced.is_zero():
        return reduced
    return blockpoly.unreduce_block_poly(reduced)


def _resolve_bounds(
    name: str, max_weight: int | None, max_block_degree: int | None
) -> tuple[int, int]:
    if name not in SUITE_NAMES:
        raise UnknownSuiteError(
            f"unknown suite {name!r}; expected one of {', '.join(SUITE_NAMES)}"
        )
    dw, db = SUITE_DEFAULTS[name]
    w = dw if max_weight is None else max_weight
    b = db if max_block_degree is None else max_block_degree
    if w > MAX_WEIGHT_LIMIT or b > MAX_BLOCK_DEGREE_LIMIT:
        raise SuiteBoundsError(
            f"bounds (max_weight={w}, max_block_degree={b}) exceed the "
            f"configured resource limits ({MAX_WEIGHT_LIMIT}, {MAX_BLOCK_DEGREE_LIMIT})"
        )
    if w < 3 or b < 1:
        raise SuiteBoundsError("bounds too small: need max_weight >= 3, max_block_degree >= 1")
    return w, b


# -- individual suites -----------------------------------------------------------


def _suite_duality(report: RelationReport, w: int, b: int) -> None:
    for label, ws, red in bracket_family(w, b):
        f = _bg_form(red)
        n = f.nvars
        report.instances_checked += 1
        if f.is_zero():
            continue
        reversed_f = f.substitute([(1, n + 1 - j) for j in range(1, n + 1)])
        delta = reversed_f - f.scale((-1) ** (n + 1))
        if not delta.is_zero():
            report.record_failure(label, delta)


def _suite_block_shuffle(report: RelationReport, w: int, b: int) -> None:
    for label, ws, red in bracket_family(w, b):
        f = _bg_form(red)
        for r in range(1, f.nvars):
            report.instances_checked += 1
            if f.is_zero():
                continue
            total = blockpoly.block_shuffle_sum(f, r)
            if not total.is_zero():
                report.record_failure(f"{label}, split r={r}", total)


def _suite_cyclic_insertion(report: RelationReport, w: int, b: int) -> None:
    for label, ws, red in bracket_family(w, b):
        f = _bg_form(red)
        report.instances_checked += 1
        if f.is_zero():
            continue
        total = blockpoly.cyclic_sum(f)
        if not total.is_zero():
            report.record_failure(label, total)


def _suite_reflection(report: RelationReport, w: int, b: int) -> None:
    for label, ws, red in bracket_family(w, b):
        n = red.nvars
        report.instances_checked += 1
        if red.is_zero():
            continue
        reversed_r = red.substitute([(1, n + 1 - j) for j in range(1, n + 1)])
        delta = reversed_r - red.scale((-1) ** n)
        if not delta.is_zero():
            report.record_failure(label, delta)


def _suite_cyclic_invariance(report: RelationReport, w: int, b: int) -> None:
    for label, ws, red in bracket_family(w, b):
        n = red.nvars
        report.instances_checked += 1
        if red.is_zero():
            continue
        rotated = red.substitute([(1, (j % n) + 1) for j in range(1, n + 1)])
        delta = rotated - red
        if not delta.is_zero():
            report.record_failure(label, delta)


def _suite_differential(report: RelationReport, w: int, b: int) -> None:
    for label, ws, red in bracket_family(w, b):
        report.instances_checked += 1
        if red.is_zero():
            continue
        out = blockpoly.block_differential(red)
        if not out.is_zero():
            report.record_failure(label, out)


def _homogeneous_monomials(nvars: int, degree: int) -> list[tuple[int, ...]]:
    out: list[tuple[int, ...]] = []

    def rec(prefix: list[int], remaining: int, slots: int) -> None:
        if slots == 1:
            out.append(tuple(prefix + [remaining]))
            return
        for e in range(remaining + 1):
            rec(prefix + [e], remaining - e, slots - 1)

    rec([], degree, nvars)
    return sorted(out)


def _kernel_stack(nvars: int, degree: int) -> tuple[list[tuple[int, ...]], list[list[Fraction]]]:
    mons = _homogeneous_monomials(nvars, degree)
    mons_lo = _homogeneous_monomials(nvars, degree - 1)
    idx_lo = {m: i for i, m in enumerate(mons_lo)}
    stacked: list[list[Fraction]] = []
    for v in blockpoly.sign_vectors(nvars):
        rows = [[Fraction(0)] * len(mons) for _ in mons_lo]
        for j, e in enumerate(mons):
            for k in range(nvars):
                if e[k]:
                    lo = list(e)
                    lo[k] -= 1
                    rows[idx_lo[tuple(lo)]][j] += v[k] * e[k]
        stacked.extend(nullspace(rows, len(mons)))
    return mons, stacked


def _suite_kernel_membership(report: RelationReport, w: int, b: int) -> None:
    stacks: dict[tuple[int, int], tuple[list, list]] = {}
    for label, ws, red in bracket_family(w, b):
        report.instances_checked += 1
        if red.is_zero():
            continue
        key = (red.nvars, red.homogeneous_degree())
        if key not in stacks:
            stacks[key] = _kernel_stack(*key)
        mons, stack = stacks[key]
        target = [red.coeff(m) for m in mons]
        if not in_row_span(stack, target):
            report.record_failure(label, red)


def _suite_regularisation(report: RelationReport, w: int, b: int) -> None:
    # single-variable identity for the generators themselves
    for weight in generator_weights(min(w, 11)):
        k = (weight - 1) // 2
        f = blockpoly.generator_poly(k)
        lhs = f.diff(1).map_slots([None, (1, 1)], 1) * CPoly.variable(1, 1)
        rhs = f.map_slots([(1, 1), (-1, 1)], 1)
        report.instances_checked += 1
        if lhs != rhs:
            report.record_failure(f"p{weight} single-variable identity", lhs - rhs)
    if b < 2:
        return
    # three-variable identities for every block-degree-2 bracket
    for label, ws, red in bracket_family(w, 2):
        if len(ws) != 2:
            continue
        g = _bg_form(red)
        report.instances_checked += 2
        if g.is_zero():
            continue
        y = CPoly.variable(1, 2)
        z = CPoly.variable(2, 2)
        d1 = g.diff(1)
        d2 = g.diff(2)
        d1_0yz = d1.map_slots([None, (1, 1), (1, 2)], 2)
        d1_0ym = d1.map_slots([None, (1, 1), (-1, 2)], 2)
        d2_y0z = d2.map_slots([(1, 1), None, (1, 2)], 2)
        d2_y0m = d2.map_slots([(1, 1), None, (-1, 2)], 2)
        g_yzm = g.map_slots([(1, 1), (1, 2), (-1, 2)], 2)
        g_myzm = g.map_slots([(-1, 1), (1, 2), (-1, 2)], 2)
        g_myym = g.map_slots([(-1, 1), (1, 1), (-1, 2)], 2)
        g_myyz = g.map_slots([(-1, 1), (1, 1), (1, 2)], 2)
        delta1 = y * z * (d1_0yz - d1_0ym) - (y * (g_yzm + g_myzm) + z * (g_myym - g_myyz))
        delta2 = y * z * (d1_0yz + d1_0ym + d2_y0z + d2_y0m) - (
            y * (g_yzm - g_myzm) - z * (g_myym + g_myyz)
        )
        if not delta1.is_zero():
            report.record_failure(f"{label} first three-variable identity", delta1)
        if not delta2.is_zero():
            report.record_failure(f"{label} second three-variable identity", delta2)


def _suite_generator_characterisation(report: RelationReport, w: int, b: int) -> None:
    for weight in generator_weights(w):
        k = (weight - 1) // 2
        dim, basis = blockpoly.generator_solution_space(k)
        p = blockpoly.generator_poly(k)
        report.instances_checked += 1
        if dim != 1:
            report.record_failure(f"p{weight}: solution dimension {dim} != 1", None)
            continue
        ref, coeff = next(iter(basis[0].terms()))
        scale = p.coeff(ref) / coeff
        if basis[0].scale(scale) != p:
            report.record_failure(f"p{weight}: basis not proportional to generator", basis[0])
        if blockpoly.generator_closed_form(k) != p:
            report.record_failure(f"p{weight}: closed form mismatch", p)
        report.engine_notes.append(
            f"p{weight}: antisymmetrization scalar lambda = {blockpoly.generator_normalization(k)}"
        )


def _suite_depth_support(report: RelationReport, w: int, b: int) -> None:
    for weight in generator_weights(w):
        k = (weight - 1) // 2
        p = blockpoly.generator_poly(k)
        report.instances_checked += 1
        bad = [
            exps
            for exps, _ in p.terms()
            if blocks.depth_of_monomial(exps) not in (k, k + 1)
        ]
        if bad:
            report.record_failure(
                f"p{weight}: monomials {bad} outside depths {{{k},{k+1}}}", p
            )


def _suite_coaction_grading(report: RelationReport, w: int, b: int) -> None:
    max_len = min(w, 10)
    for n in range(1, max_len + 1):
        for i in range(2**n):
            word = format(i, f"0{n}b")
            target = blocks.framed_block_degree(word)
            for r in range(1, (n - 1) // 2 + 1):
                report.instances_checked += 1
                symbol = wordops.FormalII("0", word, "1")
                for term in wordops.infinitesimal_coaction(r, symbol):
                    left_deg = blocks.block_degree(term.left.full_word())
                    right_deg = blocks.block_degree(term.right.full_word())
                    if left_deg + right_deg != target:
                        report.record_failure(
                            f"word {word}, r={r}: term {term} splits "
                            f"{left_deg}+{right_deg} != {target}",
                            None,
                        )


class _SignTracker:
    """Detects one global sign from the first conclusive comparison."""

    def __init__(self) -> None:
        self.sign: int | None = None

    def check(self, lhs: CPoly, rhs: CPoly) -> bool:
        if lhs.is_zero() and rhs.is_zero():
            return True
        if self.sign is None:
            if lhs == rhs:
                self.sign = 1
                return True
            if lhs == rhs.scale(-1):
                self.sign = -1
                return True
            return False
        return lhs == rhs.scale(self.sign)


def _graded_action_comparisons(
    sigma: NCPoly, g_part: NCPoly, tracker: _SignTracker
) -> Iterator[tuple[str, CPoly | None, bool]]:
    """Compare the word action with the unsigned polynomial formula.

    g_part must be homogeneous in framed block degree.  Yields a
    (descriptor, payload, ok) triple per output block degree.
    """
    comps_sigma = wordops.framed_components(sigma)
    gamma = blocks.framed_block_degree(g_part.support()[0])
    g_poly = wordops.pi_bl_ncpoly(g_part)
    acted = wordops.ihara_word(sigma, g_part)
    acted_comps = wordops.framed_components(acted)
    degrees = sorted(set(acted_comps) | {beta + gamma for beta in comps_sigma})
    for d in degrees:
        beta = d - gamma
        lhs = (
            wordops.pi_bl_ncpoly(acted_comps[d])
            if d in acted_comps
            else CPoly.zero(d + 1)
        )
        if beta in comps_sigma and beta >= 1:
            rhs = blockpoly.ihara_action_unsigned(
                wordops.pi_bl_ncpoly(comps_sigma[beta]), g_poly
            )
        else:
            rhs = CPoly.zero(max(d + 1, 1))
        ok = tracker.check(lhs, rhs)
        yield f"output block degree {d}", (lhs - rhs if lhs.nvars == rhs.nvars else lhs), ok


def _suite_ihara_consistency(report: RelationReport, w: int, b: int) -> None:
    word_tracker = _SignTracker()
    odd = generator_weights(w - 3)
    # generator stand-in pairs
    for wa in odd:
        sigma = wordops.mirror_lie_element(wa)
        for wb in odd:
            if wa + wb > w:
                continue
            target = wordops.mirror_lie_element(wb)
            for gamma, part in sorted(wordops.framed_components(target).items()):
                report.instances_checked += 1
                for desc, payload, ok in _graded_action_comparisons(sigma, part, word_tracker):
                    if not ok:
                        report.record_failure(
                            f"mirror({wa}) acting on mirror({wb}) part {gamma}: {desc}",
                            payload,
                        )
    # sweep of single words acted on by the weight-3 stand-in
    sigma3 = wordops.mirror_lie_element(3)
    sweep_max = w - 3
    if sweep_max < 1 and not odd:
        # bounds below the smallest genuine pair; keep the suite non-empty
        # with the minimal instance and say so
        sweep_max = 1
        report.engine_notes.append(
            "bounds below the smallest generator pair; checked the minimal instance only"
        )
    for n in range(1, max(sweep_max, 0) + 1):
        for i in range(2**n):
            word = format(i, f"0{n}b")
            report.instances_checked += 1
            for desc, payload, ok in _graded_action_comparisons(
                sigma3, NCPoly.word(word), word_tracker
            ):
                if not ok:
                    report.record_failure(f"mirror(3) acting on word {word}: {desc}", payload)
    report.engine_notes.append(
        f"word action vs unsigned polynomial formula: global sign "
        f"{'+1' if word_tracker.sign in (None, 1) else '-1'}"
    )
    # depth-signed formula vs conjugated unsigned formula on generator pairs
    conj_tracker = _SignTracker()
    for wa in odd:
        for wb in odd:
            if wa + wb > w:
                continue
            f = blockpoly.generator_poly((wa - 1) // 2)
            g = blockpoly.generator_poly((wb - 1) // 2)
            lhs = blockpoly.ihara_action(f, g)
            rhs = blocks.depth_sign_transform(
                blockpoly.ihara_action_unsigned(
                    blocks.depth_sign_transform(f, wa),
                    blocks.depth_sign_transform(g, wb),
                ),
                wa + wb,
            )
            report.instances_checked += 1
            if not conj_tracker.check(lhs, rhs):
                report.record_failure(
                    f"depth-signed action vs conjugated formula on (p{wa}, p{wb})",
                    lhs - rhs,
                )
    report.engine_notes.append(
        f"depth-signed action vs depth-sign-conjugated formula: global sign "
        f"{'+1' if conj_tracker.sign in (None, 1) else '-1'}"
    )


def _suite_freeness(report: RelationReport, w: int, b: int) -> None:
    for weight in range(3, w + 1):
        for deg in range(1, b + 1):
            tuples = blockpoly.span_weight_tuples(weight, deg)
            if not tuples:
                continue
            report.instances_checked += 1
            rank = rank_over_q(blockpoly.bracket_span(weight, deg))
            expected = blockpoly.lyndon_dim(weight, deg)
            report.engine_notes.append(
                f"cell (weight {weight}, block degree {deg}): rank {rank}, expected {expected}"
            )
            if rank != expected:
                report.record_failure(
                    f"cell ({weight},{deg}): rank {rank} != {expected}", None
                )


def _suite_parity_endpoint(report: RelationReport, w: int, b: int) -> None:
    for n in range(1, min(w, 12) + 1):
        for i in range(2**n):
            word = format(i, f"0{n}b")
            report.instances_checked += 1
            even = (blocks.block_degree(word) + n) % 2 == 0
            differ = word[0] != word[-1]
            if even != differ:
                report.record_failure(f"word {word}", None)


_SUITES = {
    "duality": _suite_duality,
    "block_shuffle": _suite_block_shuffle,
    "cyclic_insertion": _suite_cyclic_insertion,
    "reflection": _suite_reflection,
    "cyclic_invariance": _suite_cyclic_invariance,
    "differential": _suite_differential,
    "kernel_membership": _suite_kernel_membership,
    "regularisation": _suite_regularisation,
    "generator_characterisation": _suite_generator_characterisation,
    "depth_support": _suite_depth_support,
    "coaction_grading": _suite_coaction_grading,
    "ihara_consistency": _suite_ihara_consistency,
    "freeness": _suite_freeness,
    "parity_endpoint": _suite_parity_endpoint,
}


def run_suite(
    name: str,
    max_weight: int | None = None,
    max_block_degree: int | None = None,
) -> RelationReport:
    """Run one relation suite at the given (or default) bounds."""
    w, b = _resolve_bounds(name, max_weight, max_block_degree)
    report = RelationReport(
        relation_name=name,
        parameters={"max_weight": w, "max_block_degree": b},
    )
    _SUITES[name](report, w, b)
    if report.instances_checked == 0:
        raise SuiteBoundsError(f"suite {name!r} enumerated no instances at bounds ({w},{b})")
    return report


def full_report(config: VerifyConfig | None = None) -> list[RelationReport]:
    """Run the selected suites in canonical order."""
    cfg = config or VerifyConfig()
    for name in cfg.suites:
        if name not in SUITE_NAMES:
            raise UnknownSuiteError(
                f"unknown suite {name!r}; expected one of {', '.join(SUITE_NAMES)}"
            )
    return [
        run_suite(name, cfg.max_weight, cfg.max_block_degree)
        for name in SUITE_NAMES
        if name in cfg.suites
    ]
