# (C) 2026 kdyck contributors
"""Exact sparse polynomials in q, t and the q,t-Catalan polynomials C_lambda."""
import logging
from collections import Counter
from enum import Enum
from types import MappingProxyType
from typing import Any, Iterable, Iterator, Mapping, Optional

from kdyck.config import DEFAULT_MAX_POLY_PATHS, DEFAULT_MAX_STEPS
from kdyck.errors import CoefficientOverflowError, NotTwoUpsError, SizeGuardError
from kdyck.paths import (
    KDyckPath,
    Partition,
    compositions_of,
    count_paths,
    enumerate_paths,
    path_from_red_ranks,
    red_ranks,
)
from kdyck.stats import area, bounce, dinv

INT64_MAX = 2**63 - 1

logger = logging.getLogger(__name__)


class QTPolynomial:
    """Immutable map from exponent pairs (a, b) of q^a t^b to coefficients.

    Zero coefficients are never stored, so two polynomials are equal exactly
    when their term maps are equal.
    """

    def __init__(self, terms: Optional[Mapping[tuple[int, int], int]] = None):
        cleaned: dict[tuple[int, int], int] = {}
        for (a, b), c in (terms or {}).items():
            if a < 0 or b < 0:
                raise ValueError(f"Negative exponent in term q^{a}*t^{b}.")
            if abs(c) > INT64_MAX:
                raise CoefficientOverflowError(c)
            if c:
                cleaned[(a, b)] = c
        self._terms = cleaned

    @classmethod
    def from_terms(cls, terms: Iterable[tuple[int, int, int]]) -> "QTPolynomial":
        """Sums (a, b, c) triples into a polynomial."""
        collected: Counter[tuple[int, int]] = Counter()
        for a, b, c in terms:
            collected[(a, b)] += c
        return cls(collected)

    @classmethod
    def monomial(cls, a: int, b: int, c: int = 1) -> "QTPolynomial":
        return cls({(a, b): c})

    @property
    def terms(self) -> Mapping[tuple[int, int], int]:
        return MappingProxyType(self._terms)

    def sorted_terms(self) -> list[tuple[int, int, int]]:
        """Terms by q exponent descending, then t exponent descending."""
        return [
            (a, b, self._terms[(a, b)]) for a, b in sorted(self._terms, reverse=True)
        ]

    def is_zero(self) -> bool:
        return not self._terms

    def render(self) -> str:
        if self.is_zero():
            return "0"
        rendered = ""
        for number, (a, b, c) in enumerate(self.sorted_terms()):
            term = f"{abs(c)}*q^{a}*t^{b}"
            if number == 0:
                rendered = term if c > 0 else f"-{term}"
            else:
                rendered += f" + {term}" if c > 0 else f" - {term}"
        return rendered

    def to_json(self) -> dict[str, Any]:
        return {"terms": [{"q": a, "t": b, "c": c} for a, b, c in self.sorted_terms()]}

    def __iter__(self) -> Iterator[tuple[int, int, int]]:
        return iter(self.sorted_terms())

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, QTPolynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: "QTPolynomial") -> "QTPolynomial":
        return add(self, other)

    def __sub__(self, other: "QTPolynomial") -> "QTPolynomial":
        return subtract(self, other)

    def __neg__(self) -> "QTPolynomial":
        return QTPolynomial({key: -c for key, c in self._terms.items()})

    def __repr__(self) -> str:
        return f"QTPolynomial({self.render()})"


def add(p: QTPolynomial, r: QTPolynomial) -> QTPolynomial:
    collected = Counter(p.terms)
    collected.update(r.terms)
    return QTPolynomial(collected)


def subtract(p: QTPolynomial, r: QTPolynomial) -> QTPolynomial:
    collected = Counter(p.terms)
    collected.subtract(r.terms)
    return QTPolynomial(collected)


def add_monomial(p: QTPolynomial, a: int, b: int, c: int) -> QTPolynomial:
    return add(p, QTPolynomial.monomial(a, b, c))


def swap_variables(p: QTPolynomial) -> QTPolynomial:
    """Substitutes q <-> t."""
    return QTPolynomial({(b, a): c for (a, b), c in p.terms.items()})


def evaluate(p: QTPolynomial, q0: int, t0: int) -> int:
    return sum(c * q0**a * t0**b for (a, b), c in p.terms.items())


class StatisticPair(Enum):
    DINV_AREA = "dinv-area"
    AREA_BOUNCE = "area-bounce"

    def weight(self, path: KDyckPath) -> tuple[int, int]:
        """Exponents (a, b) of the monomial q^a t^b contributed by ``path``."""
        match self:
            case StatisticPair.DINV_AREA:
                return dinv(path).total, area(path)
            case StatisticPair.AREA_BOUNCE:
                return area(path), bounce(path).value
        raise ValueError(f"Unsupported statistic pair {self}.")


def c_lambda(
    lam: Partition,
    pair: StatisticPair = StatisticPair.DINV_AREA,
    max_steps: int = DEFAULT_MAX_STEPS,
    max_poly_paths: int = DEFAULT_MAX_POLY_PATHS,
) -> QTPolynomial:
    """C_lambda(q, t) summed over every path of every rearrangement of lam."""
    size = lam.size + lam.length
    if size > max_steps:
        raise SizeGuardError(size, max_steps)
    compositions = list(compositions_of(lam))
    path_count = sum(count_paths(k, max_steps) for k in compositions)
    if path_count > max_poly_paths:
        raise SizeGuardError(path_count, max_poly_paths, "path count")

    logger.debug(
        f"Summing {pair.value} weights of {path_count} paths "
        f"over {len(compositions)} compositions of ({lam})."
    )
    weights: Counter[tuple[int, int]] = Counter()
    for k in compositions:
        for path in enumerate_paths(k, max_steps):
            weights[pair.weight(path)] += 1
    return QTPolynomial(weights)


def symmetry_defect(
    lam: Partition,
    max_steps: int = DEFAULT_MAX_STEPS,
    max_poly_paths: int = DEFAULT_MAX_POLY_PATHS,
) -> QTPolynomial:
    """C_lambda(q, t) - C_lambda(t, q); zero iff C_lambda is q,t-symmetric."""
    polynomial = c_lambda(lam, max_steps=max_steps, max_poly_paths=max_poly_paths)
    return subtract(polynomial, swap_variables(polynomial))


def classical_catalan(n: int, max_steps: int = DEFAULT_MAX_STEPS) -> QTPolynomial:
    """The classical q,t-Catalan polynomial C_n(q, t) = C_(1^n)(q, t)."""
    return c_lambda(Partition((1,) * n), max_steps=max_steps)


def n2_involution(path: KDyckPath) -> KDyckPath:
    """Maps the path with red ranks (0, r2) to the one with (0, k1 - r2)."""
    k = path.composition
    if k.length != 2:
        raise NotTwoUpsError(k.length)
    r2 = red_ranks(path)[1]
    return path_from_red_ranks(k, (0, k.parts[0] - r2))


def conjecture_partitions(max_a: int, max_n: int) -> list[Partition]:
    """Distinct partitions ((a+1)^s, a^(n-s)) for 1 <= a <= max_a, n <= max_n."""
    found: list[Partition] = []
    for a in range(1, max_a + 1):
        for n in range(1, max_n + 1):
            for s in range(n + 1):
                lam = Partition((a + 1,) * s + (a,) * (n - s))
                if lam not in found:
                    found.append(lam)
    return found
