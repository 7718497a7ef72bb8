"""Value classification, run-length tables, and empirical theorem checks."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional, Sequence, Union

from . import ntheory
from .closedform import x_dx_minus_1
from .discriminator import DiscriminatorResult, is_discriminating, scan
from .poly import Polynomial


class Kind(enum.Enum):
    UNIT = "unit"
    PRIME = "prime"
    POWER_OF_P = "power_of_p"
    PRIME_POWER_OTHER = "prime_power_other"
    COMPOSITE_OTHER = "composite_other"


@dataclass(frozen=True)
class ValueClass:
    """Partition cell of a discriminator value relative to a family prime p."""

    kind: Kind
    detail: Optional[tuple[int, int]] = None  # (base, exponent) for prime powers


def classify_value(value: int, p: int) -> ValueClass:
    """Exactly one of: unit, prime, p^k (k>=2), q^k (q != p, k>=2), other composite."""
    if value < 1:
        raise ValueError("value must be >= 1")
    if not ntheory.is_prime(p):
        raise ValueError(f"{p} is not prime")
    if value == 1:
        return ValueClass(Kind.UNIT)
    factors = ntheory.factorize(value)
    if len(factors) == 1:
        base, exp = factors[0]
        if exp == 1:
            return ValueClass(Kind.PRIME)
        if base == p:
            return ValueClass(Kind.POWER_OF_P, (base, exp))
        return ValueClass(Kind.PRIME_POWER_OTHER, (base, exp))
    return ValueClass(Kind.COMPOSITE_OTHER)


@dataclass(frozen=True)
class RunTable:
    """Run-length encoding of D values over consecutive n starting at 1."""

    rows: tuple[tuple[int, int, int], ...]  # (n_low, n_high, value)

    def decode(self) -> list[int]:
        out: list[int] = []
        for n_low, n_high, value in self.rows:
            out.extend([value] * (n_high - n_low + 1))
        return out


def run_length_table(
    results: Sequence[Union[DiscriminatorResult, int]]
) -> RunTable:
    """Encode a finite D sequence (indexed by n = 1, 2, ...) as runs."""
    values: list[int] = []
    for item in results:
        v = item.value if isinstance(item, DiscriminatorResult) else int(item)
        if v is None:
            raise ValueError("run_length_table requires finite values")
        values.append(v)
    rows: list[tuple[int, int, int]] = []
    for n, v in enumerate(values, start=1):
        if rows and rows[-1][2] == v:
            n_low, _, _ = rows[-1]
            rows[-1] = (n_low, n, v)
        else:
            rows.append((n, n, v))
    return RunTable(tuple(rows))


def emit_csv(table: RunTable, p: int) -> str:
    """CSV `n_low,n_high,value,class` with the class column keyed to prime p."""
    lines = ["n_low,n_high,value,class"]
    for n_low, n_high, value in table.rows:
        cls = classify_value(value, p)
        lines.append(f"{n_low},{n_high},{value},{cls.kind.value}")
    return "\n".join(lines) + "\n"


def _cell(n_low: int, n_high: int) -> str:
    return str(n_low) if n_low == n_high else f"{n_low} - {n_high}"


def emit_latex(table: RunTable, poly_text: str, n_max: int) -> str:
    """LaTeX tabular in the two-column-pair `{| c | c | c | c |}` layout."""
    rows = table.rows
    half = (len(rows) + 1) // 2
    lines = [
        "\\begin{table}[ht]",
        f"\\caption{{Discriminator values for $f(x) = {poly_text}$, $n = 1, \\ldots, {n_max}$.}}",
        "\\centering",
        "\\begin{tabular}{| c | c | c | c |}",
        "\\hline",
        "$n$ & $D_f(n)$ & $n$ & $D_f(n)$ \\\\",
        "\\hline",
    ]
    for i in range(half):
        left = rows[i]
        cells = [_cell(left[0], left[1]), str(left[2])]
        if i + half < len(rows):
            right = rows[i + half]
            cells += [_cell(right[0], right[1]), str(right[2])]
        else:
            cells += ["", ""]
        lines.append(" & ".join(cells) + " \\\\")
    lines += ["\\hline", "\\end{tabular}", "\\end{table}"]
    return "\n".join(lines) + "\n"


def check_conjecture1(
    p: int, r: int, n_max: int
) -> list[tuple[int, int, ValueClass]]:
    """Exceptions to "D is prime or p^ceil(log_p n)" for f = x(p^r x - 1).

    The unit value 1 is always reported as an exception even though it equals
    p^0; the conjectured form is read as a genuine prime power. An empty tail
    is evidence, never proof.
    """
    if not ntheory.is_prime(p):
        raise ValueError(f"{p} is not prime")
    if r < 1:
        raise ValueError("r must be >= 1")
    f = x_dx_minus_1(p ** r)
    exceptions: list[tuple[int, int, ValueClass]] = []
    for result in scan(f, n_max):
        v = result.value
        expected_power = p ** ntheory.ceil_log(p, result.n)
        if ntheory.is_prime(v) or (v > 1 and v == expected_power):
            continue
        exceptions.append((result.n, v, classify_value(v, p)))
    return exceptions


def check_theorem3(n_max: int) -> list[tuple[int, int]]:
    """Violations of: any m <= 2.4n discriminating x(x-1) at n >= 15 is prime or 2^k.

    Returns every offending (n, m); the theorem predicts none. The threshold
    is compared exactly as 10m <= 24n.
    """
    if n_max < 15:
        raise ValueError("check_theorem3 requires n_max >= 15")
    f = Polynomial.from_coeffs([0, -1, 1])
    violations: list[tuple[int, int]] = []
    for n in range(15, n_max + 1):
        m = 1
        while 10 * m <= 24 * n:
            if (
                not ntheory.is_prime(m)
                and m & (m - 1) != 0
                and is_discriminating(f, n, m)
            ):
                violations.append((n, m))
            m += 1
    return violations
