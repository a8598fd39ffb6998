"""
Verification suites run by ``cli suite``.

Each check is a module-level function taking SuiteOptions and returning a
CheckResult, so the set can be fanned out over a process pool. Randomized
checks draw from ``random.Random`` seeded with the suite seed and the check
name, which keeps the JSON report identical across runs for a fixed seed.
"""
import itertools
import logging
import random
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import comb
from typing import Callable, Dict, List, Optional

import numpy as np

from catalog import build_catalog, generating_set
from certificates import gamma_certificate, verify_certificate
from config import settings
from errors import ConstraintError, TorelliError
from homology import correction_twists, is_identity, push_action, xij_matrix
from presentations import (
    free_pi_presentation,
    parity_coset_table,
    pi_presentation,
    plus_namer,
    reidemeister_schreier,
    trivial_coset_table,
    verify_mod_square_identities,
)
from quotient import is_trivial, nf
from surface import (
    PlusAlphabet,
    SurfaceParams,
    closed_relator,
    in_gamma,
    in_plus,
    oe_profile,
    position_differences,
)
from utils import all_words, random_gamma_element, random_vector, random_word, timer, x_letters
from words import Generator, Letter, Word, concat, free_reduce, parse_word, power, y

logger = logging.getLogger("torelli-suite")

MAX_REPORTED_FAILURES = 10

WORKED_EXAMPLE = "x1 y2 x2 x3^-1 y5 y1^-2 x1 x2^-1 y4^3 x3^-1"


@dataclass(frozen=True)
class SuiteOptions:
    g: int
    b: int
    seed: int
    random_words: int = settings.SUITE_RANDOM_WORDS
    random_word_length: int = settings.SUITE_RANDOM_WORD_LENGTH
    exhaustive_length: int = settings.SUITE_EXHAUSTIVE_LENGTH
    insertion_trials: int = settings.SUITE_INSERTION_TRIALS
    certificate_members: int = settings.SUITE_CERTIFICATE_MEMBERS
    certificate_factors: int = settings.SUITE_CERTIFICATE_FACTORS
    correction_vectors: int = settings.SUITE_CORRECTION_VECTORS
    correction_bound: int = settings.SUITE_CORRECTION_BOUND

    @property
    def params(self) -> SurfaceParams:
        return SurfaceParams(self.g, self.b)

    def rng(self, label: str) -> random.Random:
        return random.Random(f"{self.seed}:{label}")


@dataclass
class CheckResult:
    name: str
    checked: int = 0
    failures: List[str] = field(default_factory=list)
    skipped: Optional[str] = None
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    def fail(self, message: str) -> None:
        if len(self.failures) < MAX_REPORTED_FAILURES:
            self.failures.append(message)
        elif len(self.failures) == MAX_REPORTED_FAILURES:
            self.failures.append("further failures suppressed")

    def to_json(self) -> dict:
        data = {"name": self.name, "passed": self.passed, "checked": self.checked, "failures": self.failures}
        if self.skipped:
            data["skipped"] = self.skipped
        return data


@dataclass
class SuiteReport:
    g: int
    b: int
    seed: int
    checks: List[CheckResult]

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def to_json(self) -> dict:
        return {
            "g": self.g,
            "b": self.b,
            "seed": self.seed,
            "passed": self.passed,
            "checks": [check.to_json() for check in self.checks],
        }

    def to_text(self) -> str:
        lines = [f"Verification suite g={self.g} b={self.b} seed={self.seed}"]
        for check in self.checks:
            status = "SKIP" if check.skipped else ("PASS" if check.passed else "FAIL")
            lines.append(f"  [{status}] {check.name:<28} {check.checked:>8} checks  {check.elapsed:7.3f}s")
            if check.skipped:
                lines.append(f"         {check.skipped}")
            lines.extend(f"         {failure}" for failure in check.failures)
        lines.append("PASSED" if self.passed else "FAILED")
        return "\n".join(lines)


def check_commuting_actions(options: SuiteOptions) -> CheckResult:
    """Every pair of x_ij actions commutes exactly."""
    params = options.params
    result = CheckResult("commuting_actions")
    pairs = list(itertools.product(range(1, params.g + 1), repeat=2))
    for (i, j), (k, l) in itertools.product(pairs, repeat=2):
        result.checked += 1
        left, right = xij_matrix(i, j, params), xij_matrix(k, l, params)
        if not np.array_equal(left @ right, right @ left):
            result.fail(f"x{i}{j} and x{k}{l} do not commute")
    return result


def check_mod_square_identities(options: SuiteOptions) -> CheckResult:
    result = CheckResult("mod_square_identities")
    if options.g < 4:
        result.skipped = f"needs g >= 4, got g={options.g}"
        return result
    report = verify_mod_square_identities(options.g)
    result.checked = report.checked
    for failure in report.failures:
        result.fail(failure)
    return result


def expected_plus_relators(params: SurfaceParams) -> List[Word]:
    """
    Relators of the parity subgroup of pi_presentation, written out in the
    A/B/y/C alphabet. A_g is the identity and is left out of every word.

    Args:
        params: surface parameters (g, b)

    Returns:
        A_i B_i (i < g) and B_g; y_j; A_i B_j A_k B_i A_j B_k; B_i A_i (i < g);
        C_j; B_i A_j B_k A_i B_j A_k; with i < j < k in the triple families.
    """
    g = params.g

    def A(i: int) -> List[Generator]:
        return [] if i == g else [Generator("A", i)]

    def B(i: int) -> List[Generator]:
        return [Generator("B", i)]

    def word(*parts: List[Generator]) -> Word:
        return Word.of(*itertools.chain.from_iterable(parts))

    triples = list(itertools.combinations(range(1, g + 1), 3))
    ys = range(1, params.b)
    relators = [word(A(i), B(i)) for i in range(1, g)] + [word(B(g))]
    relators += [Word.of(y(j)) for j in ys]
    relators += [word(A(i), B(j), A(k), B(i), A(j), B(k)) for i, j, k in triples]
    relators += [word(B(i), A(i)) for i in range(1, g)]
    relators += [Word.of(Generator("C", j)) for j in ys]
    relators += [word(B(i), A(j), B(k), A(i), B(j), A(k)) for i, j, k in triples]
    return relators


def check_reidemeister_schreier(options: SuiteOptions) -> CheckResult:
    params = options.params
    result = CheckResult("reidemeister_schreier")
    alphabet = PlusAlphabet(params)

    free_pres = free_pi_presentation(params)
    free = reidemeister_schreier(free_pres, parity_coset_table(free_pres, params), plus_namer(params))
    result.checked += 1
    if set(free.generators) != set(alphabet.generators()):
        result.fail(f"generators {sorted(map(str, free.generators))} differ from the A/B/y/C alphabet")
    for gen, expansion in free.expansions.items():
        result.checked += 1
        known = alphabet.expansions.get(gen)
        if known is None or free_reduce(known) != expansion:
            result.fail(f"{gen} expands to {expansion}")

    pres = pi_presentation(params)
    sub = reidemeister_schreier(pres, parity_coset_table(pres, params), plus_namer(params))
    result.checked += 1
    expected = Counter(expected_plus_relators(params))
    if Counter(sub.relators) != expected:
        missing = expected - Counter(sub.relators)
        extra = Counter(sub.relators) - expected
        result.fail(f"relators differ: missing {[str(w) for w in missing]}, extra {[str(w) for w in extra]}")

    same = reidemeister_schreier(pres, trivial_coset_table(pres))
    result.checked += 1
    if same.generators != pres.generators or list(same.relators) != [free_reduce(r) for r in pres.relators]:
        result.fail("the index-1 table does not return the input presentation")
    return result


def _random_words(options: SuiteOptions) -> List[Word]:
    rng = options.rng("random-words")
    params = options.params
    return [random_word(params, rng, options.random_word_length) for _ in range(options.random_words)]


def _concordant(w: Word, params: SurfaceParams) -> bool:
    member = in_gamma(w, params)
    if is_trivial(nf(w, params)) != member:
        return False
    if in_plus(w, params) and is_identity(push_action(w, params)) != member:
        return False
    return True


def check_concordance(options: SuiteOptions) -> CheckResult:
    """in_gamma, the quotient normal form and the push action agree on the kernel."""
    result = CheckResult("kernel_concordance")
    small = SurfaceParams(3, 2)
    for w in all_words(x_letters(small), options.exhaustive_length, reduced=False):
        result.checked += 1
        if not _concordant(w, small):
            result.fail(f"g=3 b=2: {w}")
    params = options.params
    for w in _random_words(options):
        result.checked += 1
        if not _concordant(w, params):
            result.fail(f"g={params.g} b={params.b}: {w}")
    return result


def _insertions(params: SurfaceParams, rng: random.Random) -> List[Word]:
    gen = rng.choice(params.generators())
    letter = Letter(gen, rng.choice((1, -1)))
    choices = [Word((letter, letter.inverse()))]
    if params.y_count:
        choices.append(Word.of((rng.choice(params.y_generators()), rng.choice((1, -1, 2, -3)))))
    if params.b == 1:
        choices.append(power(closed_relator(params), rng.choice((1, -1))))
    return choices


def check_insertion_invariance(options: SuiteOptions) -> CheckResult:
    """O_i - E_i is unchanged by inserting cancelling pairs, y-letters or the closed relator."""
    result = CheckResult("insertion_invariance")
    rng = options.rng("insertions")
    targets = [options.params]
    if options.b != 1:
        targets.append(SurfaceParams(options.g, 1))
    for params in targets:
        for _ in range(options.insertion_trials):
            w = random_word(params, rng, options.random_word_length)
            inserted = rng.choice(_insertions(params, rng))
            at = rng.randint(0, len(w))
            longer = concat(w[:at], inserted, w[at:])
            result.checked += 1
            if position_differences(w, params) != position_differences(longer, params):
                result.fail(f"inserting {inserted} into {w} at {at} changes O-E")
    return result


def _check_certificate(w: Word, params: SurfaceParams, result: CheckResult) -> None:
    result.checked += 1
    certificate = gamma_certificate(w, params)
    length = len(free_reduce(w))
    if not verify_certificate(certificate, w):
        result.fail(f"certificate for {w} does not expand back to it")
    elif len(certificate) > length * length + length:
        result.fail(f"certificate for {w} has {len(certificate)} entries for reduced length {length}")


def check_certificates(options: SuiteOptions) -> CheckResult:
    result = CheckResult("certificate_soundness")
    params = options.params
    rng = options.rng("members")
    for _ in range(options.certificate_members):
        _check_certificate(random_gamma_element(params, rng, options.certificate_factors), params, result)
    for w in _random_words(options):
        if in_gamma(w, params):
            _check_certificate(w, params, result)
    return result


def check_corrections(options: SuiteOptions) -> CheckResult:
    """Correction twists undo c_i -> c_i + n_i d_b exactly, and sum(n) != 0 is rejected."""
    result = CheckResult("correction_twists")
    rng = options.rng("corrections")
    grid = {(4, 1), (5, 3), (options.g, options.b)}
    for g, b in sorted(grid):
        params = SurfaceParams(g, b)
        for _ in range(options.correction_vectors):
            n = random_vector(g, options.correction_bound, rng)
            result.checked += 1
            correction = correction_twists(n, params)
            if not correction.verified:
                result.fail(f"g={g} b={b}: n={n} leaves a nontrivial action")
        bad = random_vector(g, options.correction_bound, rng)
        bad[0] += 1
        result.checked += 1
        try:
            correction_twists(bad, params)
            result.fail(f"g={g} b={b}: n={bad} with nonzero sum was accepted")
        except ConstraintError:
            pass
    return result


def expected_generator_count(g: int, b: int) -> int:
    boundary = max(b - 1, 0)
    return 2 + (g == 4) + 2 * boundary + 2 * comb(boundary, 2)


def check_catalog(options: SuiteOptions) -> CheckResult:
    """Generating sets, lifts and product formulas over g in {4,5,6}, b in {0..3}."""
    result = CheckResult("catalog_integrity")
    grid = sorted({(g, b) for g in (4, 5, 6) for b in range(4)} | ({(options.g, options.b)} if options.g >= 4 else set()))
    for g, b in grid:
        try:
            catalog = build_catalog(g, b)
        except TorelliError as exc:
            result.fail(f"g={g} b={b}: {exc}")
            continue
        names = [str(name) for name in generating_set(g, b)]
        result.checked += 1
        if len(names) != expected_generator_count(g, b) or ("t_gamma" in names) != (g == 4):
            result.fail(f"g={g} b={b}: unexpected generating set {names}")
        if b == 0:
            continue
        params = SurfaceParams(g, b)
        for entry in catalog.lifts:
            result.checked += 1
            if not in_gamma(entry.push_word, params) or not is_identity(push_action(entry.push_word, params)):
                result.fail(f"g={g} b={b}: lift word {entry.push_word} acts nontrivially")
        result.checked += len(catalog.products)
    return result


def check_worked_example(options: SuiteOptions) -> CheckResult:
    result = CheckResult("worked_example")
    params = SurfaceParams(4, 6)
    w = parse_word(WORKED_EXAMPLE, params)
    profile = oe_profile(w, params)
    result.checked += 1
    if profile.odd != (1, 1, 1, 0) or profile.even != (1, 1, 1, 0) or not in_gamma(w, params):
        result.fail(f"profile O={profile.odd} E={profile.even} for {WORKED_EXAMPLE}")
    result.checked += 1
    if not verify_certificate(gamma_certificate(w, params), w):
        result.fail("worked example certificate does not verify")
    return result


CHECKS: Dict[str, Callable[[SuiteOptions], CheckResult]] = {
    "commuting_actions": check_commuting_actions,
    "mod_square_identities": check_mod_square_identities,
    "reidemeister_schreier": check_reidemeister_schreier,
    "kernel_concordance": check_concordance,
    "insertion_invariance": check_insertion_invariance,
    "certificate_soundness": check_certificates,
    "correction_twists": check_corrections,
    "catalog_integrity": check_catalog,
    "worked_example": check_worked_example,
}


def run_check(name: str, options: SuiteOptions) -> CheckResult:
    timings: Dict[str, float] = {}
    with timer(name, timings):
        try:
            result = CHECKS[name](options)
        except TorelliError as exc:
            logger.error(f"check {name} raised {exc!r}")
            result = CheckResult(name)
            result.fail(f"raised {type(exc).__name__}: {exc}")
    result.elapsed = timings[name]
    logger.info(f"{name}: {'passed' if result.passed else 'FAILED'} after {result.checked} checks")
    return result


def run_suite(options: SuiteOptions, names: Optional[List[str]] = None, workers: Optional[int] = None) -> SuiteReport:
    names = names or list(CHECKS)
    unknown = [name for name in names if name not in CHECKS]
    if unknown:
        raise KeyError(f"unknown checks: {', '.join(unknown)}")
    SurfaceParams(options.g, options.b)
    workers = workers or settings.SUITE_WORKERS
    logger.info(f"running {len(names)} checks at g={options.g} b={options.b} seed={options.seed} on {workers} worker(s)")
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(run_check, names, itertools.repeat(options)))
    else:
        results = [run_check(name, options) for name in names]
    return SuiteReport(options.g, options.b, options.seed, results)
