# (C) 2026 kdyck contributors
"""Exhaustive verification suites over all small k-vector Dyck paths."""
import logging
from dataclasses import dataclass, field
from math import comb
from typing import Any, Callable, Iterator, Optional

from kdyck.config import KDyckConfig
from kdyck.errors import KDyckError
from kdyck.paths import (
    Composition,
    KDyckPath,
    Partition,
    compositions_of,
    compositions_up_to,
    count_paths,
    enumerate_paths,
    parse_path,
    partitions_up_to,
    path_from_red_ranks,
    rank_sequence,
    red_ranks,
    render_path,
    row_segment_counts,
)
from kdyck.qtpoly import (
    StatisticPair,
    c_lambda,
    conjecture_partitions,
    n2_involution,
    symmetry_defect,
)
from kdyck.stats import (
    area,
    bounce,
    bounce_closed_form_n3,
    dinv,
    remove_top_cell,
)
from kdyck.sweep import (
    filling_tableau,
    image_ranks,
    inverse_sweep,
    prop31_rank,
    ranking_tableau,
    sweep_map,
    sweep_order,
)

SUITES = ("theorem", "inverse", "tableau", "properties", "symmetry", "conjecture")

ORACLE_MAX_SIZE = 10
CATALAN_MAX_N = 8
FUSS_CATALAN_MAX_SIZE = 20
CLOSED_FORM_MAX_PART = 5
TWO_PART_MAX = 6
THREE_PART_MAX = 4
CONJECTURE_MAX_A = 2
CONJECTURE_MAX_N = 4

logger = logging.getLogger(__name__)


@dataclass
class SuiteReport:
    suite: str
    checked: int = 0
    failures: int = 0
    counterexample: Optional[str] = None
    is_conjecture: bool = False
    findings: list[str] = field(default_factory=list)
    headline: Optional[str] = None

    def record(self, ok: bool, witness: Callable[[], str]) -> None:
        """Counts one check; the witness is only rendered for a failure."""
        self.checked += 1
        if ok:
            return
        self.failures += 1
        if self.counterexample is None:
            self.counterexample = witness()

    @property
    def passed(self) -> bool:
        return self.is_conjecture or self.failures == 0

    def summary(self) -> str:
        text = self.headline or f"{self.checked} checks, {self.failures} failures"
        text = f"{self.suite}: {text}"
        if self.counterexample:
            text += f"; first counterexample: {self.counterexample}"
        return text

    def to_json(self) -> dict[str, Any]:
        return {
            "suite": self.suite,
            "checked": self.checked,
            "failures": self.failures,
            "counterexample": self.counterexample,
            "conjecture": self.is_conjecture,
            "findings": self.findings,
        }


def d_k_union(lam: Partition, max_steps: int) -> list[KDyckPath]:
    """Every path of every rearrangement of ``lam``, i.e. D_K for lam."""
    return [
        path for k in compositions_of(lam) for path in enumerate_paths(k, max_steps)
    ]


def brute_force_preimages(
    lam: Partition, max_steps: int
) -> dict[KDyckPath, KDyckPath]:
    """Image -> preimage, found by sweeping every path of D_K."""
    return {sweep_map(path): path for path in d_k_union(lam, max_steps)}


class Verifier:
    def __init__(self, config: KDyckConfig, max_size: int):
        if max_size > config.verify_hard_cap:
            raise RuntimeError(
                f"--max-size {max_size} exceeds the hard cap {config.verify_hard_cap}."
            )
        self._config = config
        self._max_size = max_size

    def _paths(self) -> Iterator[KDyckPath]:
        for k in compositions_up_to(self._max_size):
            yield from enumerate_paths(k, self._config.max_steps)

    def _fits(self, lam: Partition) -> bool:
        return lam.size + lam.length <= self._config.max_steps

    def _counts_match(self, k: Composition, expected: int) -> bool:
        """Both the counting table and the enumeration give ``expected``."""
        enumerated = sum(1 for _ in enumerate_paths(k, self._config.max_steps))
        return count_paths(k, self._config.max_steps) == enumerated == expected

    def check_theorem(self) -> SuiteReport:
        """dinv sweeps to area and area sweeps to bounce."""
        report = SuiteReport("theorem")
        for path in self._paths():
            image = sweep_map(path)
            ok = dinv(path).total == area(image) and area(path) == bounce(image).value
            report.record(ok, lambda: render_path(path))
        report.headline = (
            f"dinv→area and area→bounce verified on {report.checked} paths, "
            f"{report.failures} failures"
        )
        return report

    def check_inverse(self) -> SuiteReport:
        report = SuiteReport("inverse")
        for lam in partitions_up_to(self._max_size):
            paths = d_k_union(lam, self._config.max_steps)
            images = {sweep_map(path) for path in paths}
            report.record(
                len(images) == len(paths) and images == set(paths),
                lambda: f"sweep map is not a bijection on D_K for ({lam})",
            )
            for path in paths:
                ok = (
                    inverse_sweep(sweep_map(path)) == path
                    and sweep_map(inverse_sweep(path)) == path
                )
                report.record(ok, lambda: render_path(path))
            if lam.size + lam.length > ORACLE_MAX_SIZE:
                continue
            for image, preimage in brute_force_preimages(
                lam, self._config.max_steps
            ).items():
                report.record(
                    inverse_sweep(image) == preimage, lambda: render_path(image)
                )
        return report

    def check_tableau(self) -> SuiteReport:
        """R^b(D) = R(D), and the ranks are the preimage's sorted start ranks."""
        report = SuiteReport("tableau")
        for image in self._paths():
            ranking = ranking_tableau(filling_tableau(image))
            preimage = inverse_sweep(image)
            ranks = image_ranks(image)
            ok = (
                bounce(image).tableau == ranking
                and ranks == sorted(ranks)
                and ranks == sorted(rank_sequence(preimage).start_ranks)
                and sum(ranking.first_row) == area(preimage)
                and bounce(image).value == area(preimage)
            )
            report.record(ok, lambda: render_path(image))
        return report

    def check_properties(self) -> SuiteReport:
        report = SuiteReport("properties")
        for path in self._paths():
            image = sweep_map(path)
            image_starts = rank_sequence(image).start_ranks
            image_slot = {
                position: slot for slot, position in enumerate(sweep_order(path))
            }
            report.record(
                all(
                    prop31_rank(path, i) == image_starts[image_slot[i]]
                    for i in range(1, len(path) + 1)
                ),
                lambda: f"rank oracle: {render_path(path)}",
            )
            report.record(
                row_segment_counts(path).balanced,
                lambda: f"row counts: {render_path(path)}",
            )
            report.record(
                path_from_red_ranks(path.composition, red_ranks(path)) == path
                and parse_path(render_path(path)) == path,
                lambda: f"round trip: {render_path(path)}",
            )
            if area(path) > 0:
                lowered = remove_top_cell(path)
                ok = area(lowered) == area(path) - 1 and (
                    dinv(path).total - dinv(lowered).total
                    == area(image) - area(sweep_map(lowered))
                )
                report.record(ok, lambda: f"cell removal: {render_path(path)}")

        for k in compositions_up_to(self._max_size):
            report.record(
                count_paths(k, self._config.max_steps)
                == sum(1 for _ in enumerate_paths(k, self._config.max_steps)),
                lambda: f"path count of ({k})",
            )
        for n in range(1, CATALAN_MAX_N + 1):
            report.record(
                self._counts_match(Composition((1,) * n), comb(2 * n, n) // (n + 1)),
                lambda: f"Catalan count for n={n}",
            )
        for part in range(1, FUSS_CATALAN_MAX_SIZE):
            for n in range(1, FUSS_CATALAN_MAX_SIZE // (part + 1) + 1):
                expected = comb((part + 1) * n, n) // (part * n + 1)
                report.record(
                    self._counts_match(Composition((part,) * n), expected),
                    lambda: f"Fuss-Catalan count for k={part}, n={n}",
                )
        for k1 in range(1, CLOSED_FORM_MAX_PART + 1):
            for k2 in range(1, CLOSED_FORM_MAX_PART + 1):
                for k3 in range(1, CLOSED_FORM_MAX_PART + 1):
                    k = Composition((k1, k2, k3))
                    for r2 in range(k1 + 1):
                        for r3 in range(r2 + k2 + 1):
                            direct = bounce(path_from_red_ranks(k, (0, r2, r3)))
                            report.record(
                                bounce_closed_form_n3(k, r2, r3) == direct.value,
                                lambda: f"n=3 bounce formula for ({k}), {r2}, {r3}",
                            )
        return report

    def check_symmetry(self) -> SuiteReport:
        report = SuiteReport("symmetry")
        for lam in partitions_up_to(self._max_size):
            caps = (self._config.max_steps, self._config.max_poly_paths)
            report.record(
                c_lambda(lam, StatisticPair.DINV_AREA, *caps)
                == c_lambda(lam, StatisticPair.AREA_BOUNCE, *caps),
                lambda: f"dinv-area and area-bounce differ for ({lam})",
            )

        for k1 in range(1, TWO_PART_MAX + 1):
            for k2 in range(1, k1 + 1):
                lam = Partition((k1, k2))
                if not self._fits(lam):
                    continue
                report.record(
                    self._is_symmetric(lam), lambda: f"defect of ({lam}) is nonzero"
                )
                for k in compositions_of(lam):
                    for path in enumerate_paths(k, self._config.max_steps):
                        image = n2_involution(path)
                        a, b = StatisticPair.AREA_BOUNCE.weight(path)
                        report.record(
                            n2_involution(image) == path
                            and StatisticPair.AREA_BOUNCE.weight(image) == (b, a),
                            lambda: f"involution: {render_path(path)}",
                        )

        for k1 in range(1, THREE_PART_MAX + 1):
            for k2 in range(1, k1 + 1):
                for k3 in range(1, k2 + 1):
                    lam = Partition((k1, k2, k3))
                    if self._fits(lam):
                        report.record(
                            self._is_symmetric(lam),
                            lambda: f"defect of ({lam}) is nonzero",
                        )
        return report

    def check_conjecture(self) -> SuiteReport:
        """Checks q,t-symmetry of C_lambda for lambda = ((a+1)^s, a^(n-s))."""
        report = SuiteReport("conjecture", is_conjecture=True)
        for lam in conjecture_partitions(CONJECTURE_MAX_A, CONJECTURE_MAX_N):
            if not self._fits(lam):
                logger.info(f"Skipping ({lam}), it exceeds the size cap.")
                continue
            symmetric = self._is_symmetric(lam)
            report.record(symmetric, lambda: f"({lam})")
            if not symmetric:
                logger.warning(f"C_lambda is not q,t-symmetric for ({lam}).")
                report.findings.append(str(lam))
        return report

    def _is_symmetric(self, lam: Partition) -> bool:
        return symmetry_defect(
            lam, self._config.max_steps, self._config.max_poly_paths
        ).is_zero()

    def run(self, suites: list[str]) -> list[SuiteReport]:
        checks: dict[str, Callable[[], SuiteReport]] = {
            "theorem": self.check_theorem,
            "inverse": self.check_inverse,
            "tableau": self.check_tableau,
            "properties": self.check_properties,
            "symmetry": self.check_symmetry,
            "conjecture": self.check_conjecture,
        }
        reports = []
        for suite in suites:
            logger.info(f'Running suite "{suite}" up to size {self._max_size}...')
            try:
                report = checks[suite]()
            except KDyckError as e:
                report = SuiteReport(suite, failures=1, counterexample=e.cause)
                logger.error(f'Suite "{suite}" raised: {e.cause}')
            logger.info(report.summary())
            reports.append(report)
        return reports
