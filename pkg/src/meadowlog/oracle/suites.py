"""Named suites of semantic checks.

Each suite is a function from :class:`SuiteSettings` to a list of
verdicts. Suites are registered in the order ``all`` runs them; the
flattening rules are validated before flattening soundness is checked.
"""

import itertools
import logging
from collections.abc import Callable, Iterator
from dataclasses import dataclass
from fractions import Fraction
from typing import TYPE_CHECKING

from meadowlog.core import operations as ops
from meadowlog.core.values import (
    BOT,
    POS_INF,
    Carrier,
    MeadowValue,
    Mode,
    Peripheral,
    format_value,
)
from meadowlog.engine.evaluator import evaluate
from meadowlog.events.space import bayes_check, space_grid
from meadowlog.flatten import FLATTEN_RULES, flatten
from meadowlog.measures.builders import (
    ALPHA,
    BETA,
    CROSS_ENTROPY_VARIANTS,
    ENTROPY_VARIANTS,
    MeasureVariant,
    build_cross_entropy_term,
    build_entropy_term,
    build_js_term,
    build_kl_term,
    sample_environment,
)
from meadowlog.measures.direct import (
    cross_entropy,
    entropy,
    js_divergence,
    kl_divergence,
    seq_expected_value,
)
from meadowlog.measures.pmf import Pmf, pmf_grid
from meadowlog.oracle.grid import (
    DEFAULT_GRID,
    DEFAULT_TOLERANCE,
    SIGNED_GRID,
    Counterexample,
    Expectation,
    Grid,
    Verdict,
    equiv,
    values_agree,
)
from meadowlog.oracle.random_terms import random_terms
from meadowlog.terms.ast import (
    Div,
    FunApp,
    Log2,
    Mul,
    Neg,
    Term,
    count_nodes,
    free_variables,
    generalized_sum,
    sample_constants,
)
from meadowlog.terms.grammar import parse
from meadowlog.terms.printer import to_text
from meadowlog.utils.errors import MeadowError, UnknownSuiteError
from meadowlog.utils.suggestions import get_suite_suggestions

if TYPE_CHECKING:
    from meadowlog.config.schema import MeadowConfig

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SuiteSettings:
    """Knobs shared by all suites.

    Attributes:
        seed: Seed of the random term stream.
        term_count: Random terms in the flattening-soundness check.
        max_depth: Depth bound of random terms.
        tolerance: Relative tolerance of approximate comparisons.
        max_outcomes: Largest event space of the Bayes suite.
        builder_max_n: Largest sample count of the builder suite.
    """

    seed: int = 1
    term_count: int = 1000
    max_depth: int = 4
    tolerance: float = DEFAULT_TOLERANCE
    max_outcomes: int = 3
    builder_max_n: int = 4

    @classmethod
    def from_config(cls, config: "MeadowConfig") -> "SuiteSettings":
        return cls(
            seed=config.seed,
            term_count=config.term_count,
            max_depth=config.max_depth,
            tolerance=config.tolerance,
            max_outcomes=config.max_outcomes,
            builder_max_n=config.builder_max_n,
        )


Suite = Callable[[SuiteSettings], list[Verdict]]


def _check(
    lhs: str,
    rhs: str,
    settings: SuiteSettings,
    *,
    name: str | None = None,
    grid: Grid = DEFAULT_GRID,
    mode: Mode = Mode.BOTTOM,
    expect: Expectation = Expectation.HOLDS,
) -> Verdict:
    return equiv(
        parse(lhs),
        parse(rhs),
        grid=grid,
        mode=mode,
        tolerance=settings.tolerance,
        name=name or f"{lhs} = {rhs}",
        expect=expect,
    )


def _table(
    name: str,
    cases: Iterator[tuple[dict[str, MeadowValue], MeadowValue, MeadowValue]],
    tolerance: float = DEFAULT_TOLERANCE,
) -> Verdict:
    """Identity verdict over ``(assignment, actual, expected)`` cases."""
    checked = 0
    try:
        for assignment, actual, expected in cases:
            checked += 1
            if not values_agree(actual, expected, tolerance):
                return Verdict(
                    name,
                    passed=False,
                    checked=checked,
                    counterexample=Counterexample(assignment, actual, expected),
                )
    except MeadowError as e:
        return Verdict(name, passed=False, checked=checked, error=str(e))
    return Verdict(name, passed=True, checked=checked)


def _pmf_pairs(max_n: int) -> Iterator[tuple[Pmf, Pmf]]:
    for n in range(1, max_n + 1):
        grid = list(pmf_grid(n))
        yield from itertools.product(grid, grid)


def _pmfs(max_n: int) -> Iterator[Pmf]:
    for n in range(1, max_n + 1):
        yield from pmf_grid(n)


def _weights(p: Pmf, q: Pmf | None = None) -> dict[str, MeadowValue]:
    assignment: dict[str, MeadowValue] = {f"P({k})": w for k, w in p.entries}
    if q is not None:
        assignment.update({f"Q({k})": w for k, w in q.entries})
    return assignment


# absorption ---------------------------------------------------------------


def absorption(settings: SuiteSettings) -> list[Verdict]:
    """Every operation returns ``bot`` when an argument is ``bot``."""
    operations: list[tuple[str, int, Callable[..., MeadowValue]]] = [
        ("add", 2, ops.add),
        ("neg", 1, ops.neg),
        ("mul", 2, ops.mul),
        ("div", 2, ops.div),
        ("log2", 1, lambda a: ops.log2(a, Mode.BOTTOM, Carrier.APPROX)),
        ("sign", 1, ops.sign),
    ]
    verdicts = []
    for op_name, arity, func in operations:
        names = ["a", "b"][:arity]
        cases = (
            (dict(zip(names, args)), func(*args), BOT)
            for args in itertools.product(DEFAULT_GRID.values, repeat=arity)
            if BOT in args
        )
        verdicts.append(_table(f"{op_name} absorbs bot", cases))
    return verdicts


# conditional ----------------------------------------------------------------


def _cond_reference(x: MeadowValue, y: MeadowValue, z: MeadowValue) -> MeadowValue:
    if y is BOT:
        return BOT
    return z if y == 0 else x


def conditional(settings: SuiteSettings) -> list[Verdict]:
    """The conditional's three-case table and left-sequential multiplication."""
    table = (
        ({"x": x, "y": y, "z": z}, ops.cond(x, y, z), _cond_reference(x, y, z))
        for x, y, z in itertools.product(DEFAULT_GRID.values, repeat=3)
    )
    return [
        _table("cond three-case table", table),
        _check("x |*| y", "cond(x*y; x; 0)", settings),
        _check("cond(bot; 0; 1)", "1", settings),
        _check("0 |*| bot", "0", settings),
        _check("bot |*| 2", "bot", settings),
        _check(
            "x |*| y",
            "x*y",
            settings,
            name="seqmul is not absorptive",
            expect=Expectation.DIFFERS,
        ),
    ]


# interdefinability ------------------------------------------------------------


def interdefinability(settings: SuiteSettings) -> list[Verdict]:
    """Sign squared, left-sequential multiplication and the conditional."""
    return [
        _check("s(x)*s(x)", "x |*| (1/x)", settings),
        _check("cond(x; y; z)", "s(y)*s(y) |*| x + (1 - s(y)*s(y)) |*| z", settings),
        _check(
            "s(x)*s(x)",
            "x*(1/x)",
            settings,
            name="s(x)*s(x) = x*(1/x) fails at zero",
            expect=Expectation.DIFFERS,
        ),
    ]


# logcase ------------------------------------------------------------------


def logcase(settings: SuiteSettings) -> list[Verdict]:
    """``log2`` of a quotient through squares, defined at every grid point."""
    return [_check("log2(x/y)", "(log2(x*x) - log2(y*y))/(2 + 0*log2(x*y))", settings)]


# flattening ---------------------------------------------------------------


def flatten_rules(settings: SuiteSettings) -> list[Verdict]:
    """Every rewrite rule of the flattener holds on the default grid."""
    verdicts = []
    for rule in FLATTEN_RULES:
        verdict = equiv(
            rule.lhs,
            rule.rhs,
            rule.variables,
            tolerance=settings.tolerance,
            name=f"rule {rule.name}: {rule}",
        )
        if rule.derived:
            verdict.note = "derived identity"
        verdicts.append(verdict)
    return verdicts


def flatten_soundness(settings: SuiteSettings) -> list[Verdict]:
    """Flattening seeded random terms preserves their value everywhere."""
    failed_rules = [v for v in flatten_rules(settings) if not v.passed]
    if failed_rules:
        return failed_rules + [
            Verdict(
                "flattening soundness",
                passed=False,
                error="skipped: a flattening rule failed its check",
            )
        ]

    terms = random_terms(settings.seed, settings.max_depth, count=settings.term_count)
    logger.info("Flattening %d random terms (seed %d)", len(terms), settings.seed)
    shape = Verdict("flattened form has one division at the root", passed=True)
    soundness = Verdict("flattening soundness", passed=True)

    for index, term in enumerate(terms):
        flat = flatten(term)
        shape.checked += 1
        flat_term = flat.as_term()
        if shape.passed and (not flat.is_flat() or count_nodes(flat_term, Div) != 1):
            shape.passed = False
            shape.note = f"term #{index}: {to_text(term)} -> {flat.to_text()}"

        verdict = equiv(
            term,
            flat_term,
            sorted(free_variables(term) | free_variables(flat_term)),
            tolerance=settings.tolerance,
            name=f"flatten term #{index}",
        )
        soundness.checked += verdict.checked
        if not verdict.passed:
            soundness.passed = False
            soundness.counterexample = verdict.counterexample
            soundness.error = verdict.error
            soundness.note = f"term #{index}: {to_text(term)}"
            break

    return [shape, soundness]


# signed infinity --------------------------------------------------------------

_SIGNED_CLOSED = [
    ("+inf + +inf", "+inf"),
    ("-inf + -inf", "-inf"),
    ("+inf + -inf", "bot"),
    ("+inf*+inf", "+inf"),
    ("-inf*+inf", "-inf"),
    ("-inf*-inf", "+inf"),
    ("0*+inf", "0"),
    ("0*-inf", "0"),
    ("-(+inf)", "-inf"),
    ("(-1/2)*-inf", "+inf"),
    ("+inf/2", "+inf"),
    ("+inf/(-2)", "-inf"),
    ("s(+inf)", "1"),
    ("s(-inf)", "-1"),
    ("log2(0)", "-inf"),
    ("log2(-1)", "bot"),
    ("log2(+inf)", "bot"),
    ("1/0", "bot"),
    ("+inf*(2 - 1)", "+inf"),
    ("+inf*2 - +inf*1", "bot"),
]


def _product_form(n: int) -> Term:
    """The classic cross-entropy form with plain multiplication."""
    summand = Mul(FunApp(ALPHA, "x"), Log2(FunApp(BETA, "x")))
    return Neg(generalized_sum(summand, sample_constants(n)))


def signed(settings: SuiteSettings) -> list[Verdict]:
    """Signed-infinity tables, the distributivity failure and the product form."""
    mode = Mode.SIGNED
    verdicts = [
        _check(lhs, rhs, settings, grid=SIGNED_GRID, mode=mode)
        for lhs, rhs in _SIGNED_CLOSED
    ]

    reals = DEFAULT_GRID.ordinary
    positives = Grid(tuple(v for v in reals.values if v > 0), exhaustive=False)
    negatives = Grid(tuple(v for v in reals.values if v < 0), exhaustive=False)
    verdicts += [
        _check("x/+inf", "bot", settings, grid=SIGNED_GRID, mode=mode),
        _check("+inf + x", "+inf", settings, grid=reals, mode=mode),
        _check("x + -inf", "-inf", settings, grid=reals, mode=mode),
        _check("+inf*x", "+inf", settings, grid=positives, mode=mode),
        _check("+inf*x", "-inf", settings, grid=negatives, mode=mode),
        _check(
            "+inf*(2 - 1)",
            "+inf*2 - +inf*1",
            settings,
            grid=SIGNED_GRID,
            mode=mode,
            name="distributivity fails with infinities",
            expect=Expectation.DIFFERS,
        ),
        _check(
            "log2(1/x)",
            "-log2(x)",
            settings,
            grid=SIGNED_GRID,
            mode=mode,
            name="log2(1/x) = -log2(x) fails at zero",
            expect=Expectation.DIFFERS,
        ),
    ]

    half = Pmf.from_weights([Fraction(1, 2), Fraction(1, 2)])
    no_first = Pmf.from_weights([Fraction(0), Fraction(1)])
    unsupported = _reference(
        "signed cross-entropy with an unsupported outcome is +inf",
        cross_entropy(half, no_first, mode=mode),
        POS_INF,
        settings.tolerance,
    )
    unsupported.note = "-(1/2 * -inf + 1/2 * 0) is +inf under the signed tables"
    verdicts.append(unsupported)

    def product_cases() -> Iterator[tuple[dict, MeadowValue, MeadowValue]]:
        for p, q in _pmf_pairs(min(settings.builder_max_n, 3)):
            term = _product_form(len(p))
            direct = cross_entropy(p, q, mode=mode)
            via_product = evaluate(term, sample_environment(p, q), mode, Carrier.APPROX)
            yield _weights(p, q), via_product, direct

    verdicts.append(
        _table(
            "product form -sum P*log2 Q agrees with the sequential form",
            product_cases(),
            settings.tolerance,
        )
    )
    return verdicts


# measures -----------------------------------------------------------------


def _pmf(*weights: str) -> Pmf:
    return Pmf.from_weights([Fraction(w) for w in weights])


def _reference(name: str, actual: MeadowValue, expected: MeadowValue, tol: float) -> Verdict:
    if values_agree(actual, expected, tol):
        return Verdict(name, passed=True, checked=1)
    return Verdict(
        name, passed=False, checked=1, counterexample=Counterexample({}, actual, expected)
    )


def measures(settings: SuiteSettings) -> list[Verdict]:
    """Direct measures: reference values and structural properties."""
    tol = settings.tolerance
    exact = Carrier.EXACT
    log3 = float(ops.log2(3.0))
    uniform2 = _pmf("1/2", "1/2")
    skewed = _pmf("1/4", "3/4")
    first_only, second_only = _pmf("1", "0"), _pmf("0", "1")
    verdicts = [
        _reference("H(1/2, 1/2) = 1", entropy(uniform2, exact), Fraction(1), tol),
        _reference("H(1, 0) = 0", entropy(first_only, exact), Fraction(0), tol),
        _reference("H(uniform on 4) = 2", entropy(Pmf.uniform(4), exact), Fraction(2), tol),
        _reference(
            "H((1/2, 1/2), (0, 1)) = bot", cross_entropy(uniform2, second_only), BOT, tol
        ),
        _reference(
            "H((1/2, 1/2), (1/4, 3/4)) = 2 - log2(3)/2",
            cross_entropy(uniform2, skewed),
            2 - log3 / 2,
            tol,
        ),
        _reference(
            "KL((1/2, 1/2), (1/4, 3/4)) = 1 - log2(3)/2",
            kl_divergence(uniform2, skewed),
            1 - log3 / 2,
            tol,
        ),
        _reference(
            "JS((1, 0), (0, 1)) = 2",
            js_divergence(first_only, second_only, exact),
            Fraction(2),
            tol,
        ),
    ]

    pmfs = list(_pmfs(3))
    pairs = list(_pmf_pairs(3))

    verdicts.append(
        _table(
            "entropy equals cross-entropy with itself",
            ((_weights(p), entropy(p), cross_entropy(p, p)) for p in pmfs),
            tol,
        )
    )
    verdicts.append(
        _table(
            "entropy as expected value of log2(1/P)",
            (
                (
                    _weights(p),
                    entropy(p),
                    seq_expected_value(
                        p, lambda label, p=p: ops.log2(ops.div(1.0, float(p.weight(label))))
                    ),
                )
                for p in pmfs
            ),
            tol,
        )
    )

    def support_cases():
        for p, q in pairs:
            expected_bot = any(pw > 0 and qw == 0 for pw, qw in zip(p.weights, q.weights))
            value = cross_entropy(p, q)
            yield _weights(p, q), value is BOT, expected_bot

    verdicts.append(_flag_table("cross-entropy is bot exactly off the support", support_cases()))

    def kl_cases():
        for p, q in pairs:
            h_pq = cross_entropy(p, q)
            expected = BOT if h_pq is BOT else ops.sub(h_pq, entropy(p))
            yield _weights(p, q), kl_divergence(p, q), expected

    verdicts.append(_table("KL is cross-entropy minus entropy", kl_cases(), tol))
    verdicts.append(
        _table(
            "KL of a pmf with itself is zero",
            ((_weights(p), kl_divergence(p, p), 0.0) for p in pmfs),
            tol,
        )
    )
    verdicts.append(
        _table(
            "JS is symmetric",
            ((_weights(p, q), js_divergence(p, q), js_divergence(q, p)) for p, q in pairs),
            tol,
        )
    )
    verdicts.append(
        _flag_table(
            "JS is never bot",
            (
                (_weights(p, q), isinstance(js_divergence(p, q), Peripheral), False)
                for p, q in pairs
            ),
        )
    )

    def permutation_cases():
        for p, q in pairs:
            order = list(reversed(range(len(p))))
            rp, rq = p.permuted(order), q.permuted(order)
            yield _weights(p, q), entropy(rp), entropy(p)
            yield _weights(p, q), cross_entropy(rp, rq), cross_entropy(p, q)
            yield _weights(p, q), kl_divergence(rp, rq), kl_divergence(p, q)
            yield _weights(p, q), js_divergence(rp, rq), js_divergence(p, q)

    verdicts.append(_table("measures ignore the enumeration order", permutation_cases(), tol))
    return verdicts


def _flag_table(
    name: str, cases: Iterator[tuple[dict[str, MeadowValue], bool, bool]]
) -> Verdict:
    checked = 0
    for assignment, actual, expected in cases:
        checked += 1
        if actual != expected:
            return Verdict(
                name,
                passed=False,
                checked=checked,
                note=f"got {actual}, expected {expected} at "
                + ", ".join(f"{k}={format_value(v)}" for k, v in assignment.items()),
            )
    return Verdict(name, passed=True, checked=checked)


# builders -----------------------------------------------------------------


def builders(settings: SuiteSettings) -> list[Verdict]:
    """Every term builder evaluates to its direct measure on gridded pmfs."""
    tol = settings.tolerance
    max_n = settings.builder_max_n
    verdicts = []

    def term_cases(build, direct, with_q: bool, ordinary_only: bool = False):
        for n in range(1, max_n + 1):
            term = build(n)
            grid = list(pmf_grid(n))
            pairs = itertools.product(grid, grid) if with_q else ((p, None) for p in grid)
            for p, q in pairs:
                expected = direct(p, q) if with_q else direct(p)
                if ordinary_only and isinstance(expected, Peripheral):
                    continue
                env = sample_environment(p, q)
                yield _weights(p, q), evaluate(term, env, Mode.BOTTOM, Carrier.APPROX), expected

    for variant in ENTROPY_VARIANTS:
        verdicts.append(
            _table(
                f"entropy term ({variant.value})",
                term_cases(lambda n, v=variant: build_entropy_term(n, v), entropy, False),
                tol,
            )
        )
    for variant in CROSS_ENTROPY_VARIANTS:
        ordinary_only = variant is MeasureVariant.SIGN_CHAIN
        verdict = _table(
            f"cross-entropy term ({variant.value})",
            term_cases(
                lambda n, v=variant: build_cross_entropy_term(n, v),
                cross_entropy,
                True,
                ordinary_only,
            ),
            tol,
        )
        if ordinary_only:
            verdict.note = "compared where the cross-entropy is an ordinary number"
        verdicts.append(verdict)

    verdicts.append(_table("KL term", term_cases(build_kl_term, kl_divergence, True), tol))
    verdicts.append(_table("JS term", term_cases(build_js_term, js_divergence, True), tol))
    return verdicts


# bayes --------------------------------------------------------------------


def bayes(settings: SuiteSettings) -> list[Verdict]:
    """Guarded Bayes-Price on every gridded event space, and its counterexample."""
    guarded = Verdict("guarded Bayes-Price identity", passed=True)
    unguarded = Verdict(
        "Bayes-Price fails without the guard",
        passed=False,
        expectation=Expectation.DIFFERS,
    )
    pattern = Verdict("unguarded failures have P(A) = 0 < P(B), lhs 0, rhs bot", passed=True)

    for space in space_grid(settings.max_outcomes):
        report = bayes_check(space)
        guarded.checked += report.checked
        if guarded.passed and report.violations:
            case = report.violations[0]
            guarded.passed = False
            guarded.counterexample = Counterexample(
                {"P(A)": case.prob_a, "P(B)": case.prob_b}, case.lhs, case.rhs
            )
            guarded.note = f"space {space.pmf}"
        for case in report.unguarded:
            pattern.checked += 1
            if not unguarded.passed:
                unguarded.passed = True
                unguarded.counterexample = Counterexample(
                    {"P(A)": case.prob_a, "P(B)": case.prob_b}, case.lhs, case.rhs
                )
                unguarded.note = f"space {space.pmf}"
            shape_ok = case.prob_a == 0 and case.prob_b > 0 and case.lhs == 0 and case.rhs is BOT
            if pattern.passed and not shape_ok:
                pattern.passed = False
                pattern.counterexample = Counterexample(
                    {"P(A)": case.prob_a, "P(B)": case.prob_b}, case.lhs, case.rhs
                )
    unguarded.checked = guarded.checked
    return [guarded, unguarded, pattern]


# suppes-ono ---------------------------------------------------------------


def suppes(settings: SuiteSettings) -> list[Verdict]:
    """Suppes-Ono division by zero: fine for entropy, not for cross-entropy."""
    mode = Mode.SUPPES_ONO
    tol = settings.tolerance
    pmfs = list(_pmfs(3))
    pairs = list(_pmf_pairs(3))
    verdicts = [
        _check("1/0", "0", settings, grid=DEFAULT_GRID.ordinary, mode=mode),
        _check("x/0", "0", settings, grid=DEFAULT_GRID.ordinary, mode=mode),
        _check("log2(0)", "0", settings, grid=DEFAULT_GRID.ordinary, mode=mode),
        _table(
            "entropy agrees with bottom mode",
            ((_weights(p), entropy(p, mode=mode), entropy(p)) for p in pmfs),
            tol,
        ),
    ]

    witness = None
    for p, q in pairs:
        bottom_value = cross_entropy(p, q)
        if bottom_value is BOT:
            witness = Counterexample(_weights(p, q), cross_entropy(p, q, mode=mode), bottom_value)
            break
    verdicts.append(
        Verdict(
            "cross-entropy loses the unsupported-outcome signal",
            passed=witness is not None and not isinstance(witness.lhs, Peripheral),
            expectation=Expectation.DIFFERS,
            checked=len(pairs),
            counterexample=witness,
        )
    )
    return verdicts


SUITES: dict[str, Suite] = {
    "absorption": absorption,
    "conditional": conditional,
    "interdefinability": interdefinability,
    "logcase": logcase,
    "flatten_rules": flatten_rules,
    "flatten": flatten_soundness,
    "signed": signed,
    "measures": measures,
    "builders": builders,
    "bayes": bayes,
    "suppes": suppes,
}

ALL_SUITES = "all"
SUITE_NAMES = [*SUITES, ALL_SUITES]


def run_suite(name: str, settings: SuiteSettings | None = None) -> list[Verdict]:
    """Run a named suite, or every suite for ``"all"``.

    Raises:
        UnknownSuiteError: If ``name`` is not registered.
    """
    settings = settings or SuiteSettings()
    if name == ALL_SUITES:
        names = list(SUITES)
    elif name in SUITES:
        names = [name]
    else:
        raise UnknownSuiteError(name, get_suite_suggestions(name, SUITE_NAMES))

    verdicts: list[Verdict] = []
    for suite_name in names:
        logger.info("Running suite %s", suite_name)
        results = SUITES[suite_name](settings)
        for verdict in results:
            verdict.suite = suite_name
        failed = sum(1 for v in results if not v.passed)
        logger.debug("Suite %s: %d checks, %d failed", suite_name, len(results), failed)
        verdicts.extend(results)
    return verdicts
