"""Exact-versus-asymptotic comparison tables."""

from __future__ import annotations

from dataclasses import astuple, dataclass, fields

from .asymptotics import diagonal_estimate, log_estimate_block, log_of_count
from .counting import count_block_word

__all__ = ["ComparisonRow", "MAX_COMPARE_N", "diagonal_row", "ray_row", "compare_rows", "rows_to_csv"]

MAX_COMPARE_N = 2000


@dataclass(frozen=True)
class ComparisonRow:
    n: int
    r: int
    s: int
    log_exact: float
    log_estimate: float

    @property
    def log_ratio(self) -> float:
        return self.log_estimate - self.log_exact


def _check_n(n: int) -> None:
    if not 2 <= n <= MAX_COMPARE_N:
        raise ValueError(f"n must lie in [2, {MAX_COMPARE_N}], got {n}")


def diagonal_row(n: int) -> ComparisonRow:
    """Most balanced block word of ``S_n`` against the diagonal formula."""
    _check_n(n)
    r, s = (n - 1) // 2 + 1, n // 2
    return ComparisonRow(n, r, s, log_of_count(count_block_word(r - 1, s)), diagonal_estimate(n).log_value)


def ray_row(n: int, a: int, b: int) -> ComparisonRow:
    """``r : s = a : b`` with ``r + s = n`` (r rounded to nearest)."""
    _check_n(n)
    if a < 1 or b < 1:
        raise ValueError("ray components must be positive")
    r = round(n * a / (a + b))
    r = min(max(r, 1), n - 1)
    s = n - r
    return ComparisonRow(n, r, s, log_of_count(count_block_word(r - 1, s)), log_estimate_block(r, s).log_value)


def compare_rows(n_list, ray: tuple[int, int] | None = None) -> list[ComparisonRow]:
    if ray is None:
        return [diagonal_row(n) for n in n_list]
    return [ray_row(n, *ray) for n in n_list]


def rows_to_csv(rows) -> str:
    header = [f.name for f in fields(ComparisonRow)] + ["log_ratio"]
    lines = [",".join(header)]
    for row in rows:
        n, r, s, exact, est = astuple(row)
        lines.append(f"{n},{r},{s},{exact!r},{est!r},{row.log_ratio!r}")
    return "\n".join(lines) + "\n"
