"""Constructive checks that symmetric F₂ matrices contain their diagonal.

Every symmetric matrix A over F₂ satisfies diagonal(A) ∈ Col(A). The
functions here verify that claim and its proof obligations on concrete
matrices: produce an explicit witness x with A·x = d, confirm the
diagonal is orthogonal to the nullspace, and cross-check the solver
against a brute-force range oracle that shares no elimination code.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

import numpy as np

from .gf2 import BitVec, Gf2Matrix, nullspace_basis, solution_set, solve

__all__ = [
    "SymmetryError",
    "SizeLimitError",
    "RngSpec",
    "TheoremCertificate",
    "DENSITY_GRID",
    "ORACLE_CAP",
    "random_symmetric",
    "verify_diagonal_in_range",
    "verify_nullspace_orthogonality",
    "verify_column_sum_identity",
    "brute_force_member",
    "SweepRecord",
    "SweepReport",
    "sweep",
]

ORACLE_CAP = 20

# Sparse, balanced, and dense couplings crossed with empty, mixed, and
# full diagonals: zero diagonal makes the target trivial, full diagonal
# stresses the general case.
DENSITY_GRID: tuple[tuple[float, float], ...] = tuple(
    (density, diag) for density in (0.1, 0.5, 0.9) for diag in (0.0, 0.5, 1.0)
)


class SymmetryError(ValueError):
    """Input matrix is not symmetric, so the guarantee does not apply."""


class SizeLimitError(ValueError):
    """Brute-force enumeration refused above the hard cap."""


@dataclass(frozen=True)
class RngSpec:
    """Deterministic sampling parameters for random symmetric matrices."""

    seed: int
    density: float = 0.5
    diag_density: float = 0.5

    def __post_init__(self) -> None:
        if not 0 <= self.seed < 1 << 64:
            raise ValueError(f"seed must be a 64-bit integer, got {self.seed}")
        for name in ("density", "diag_density"):
            v = getattr(self, name)
            if not 0.0 <= v <= 1.0:
                raise ValueError(f"{name} must be in [0, 1], got {v}")


@dataclass(frozen=True)
class TheoremCertificate:
    """Witness that A·witness equals the diagonal of an n×n matrix."""

    matrix_dim: int
    witness: BitVec
    nullity: int


def random_symmetric(n: int, spec: RngSpec) -> Gf2Matrix:
    """Symmetric n×n matrix with Bernoulli entries, reproducible per spec.

    Strict upper-triangle entries are drawn with probability
    spec.density and mirrored; diagonal entries use spec.diag_density.
    """
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if n == 0:
        return Gf2Matrix.zeros(0, 0)
    rng = np.random.Generator(
        np.random.Philox(np.random.SeedSequence(spec.seed))
    )
    upper = np.triu(rng.random((n, n)) < spec.density, k=1)
    entries = (upper | upper.T).astype(np.uint8)
    idx = np.arange(n)
    entries[idx, idx] = rng.random(n) < spec.diag_density
    packed = np.packbits(entries, axis=1, bitorder="little")
    stride = packed.shape[1]
    data = packed.tobytes()
    rows = tuple(
        int.from_bytes(data[i * stride : (i + 1) * stride], "little")
        for i in range(n)
    )
    return Gf2Matrix._raw(n, n, rows)


def _require_symmetric(a: Gf2Matrix) -> None:
    if a.n_rows != a.n_cols or not a.is_symmetric():
        raise SymmetryError(
            f"{a.n_rows}x{a.n_cols} matrix is not symmetric"
        )


def verify_diagonal_in_range(a: Gf2Matrix) -> TheoremCertificate:
    """Solve A·x = diagonal(A) and certify the witness.

    Symmetric input can never lack a solution; a miss is reported as a
    hard error because it means the elimination itself is broken.
    """
    _require_symmetric(a)
    sols = solution_set(a, a.diagonal())
    if sols is None:
        raise RuntimeError(
            "no solution for the diagonal of a symmetric matrix; "
            "elimination bug"
        )
    if a.matvec(sols.particular) != a.diagonal():
        raise RuntimeError("witness failed re-multiplication; solver bug")
    return TheoremCertificate(
        matrix_dim=a.n_rows, witness=sols.particular, nullity=sols.nullity
    )


def verify_nullspace_orthogonality(a: Gf2Matrix) -> bool:
    """True iff every nullspace basis vector is orthogonal to the diagonal.

    By bilinearity this extends to the whole nullspace, which is exactly
    the condition making the diagonal reachable.
    """
    _require_symmetric(a)
    d = a.diagonal()
    return all(v.dot(d) == 0 for v in nullspace_basis(a))


def verify_column_sum_identity(a: Gf2Matrix, x: BitVec) -> bool:
    """True iff the diagonal XOR over a dependency's support vanishes.

    Requires symmetric a, A·x = 0, and x nonzero: when columns indexed
    by the support of x sum to zero, their diagonal entries must too.
    Stated over the whole support, it is order-free.
    """
    _require_symmetric(a)
    if not x:
        raise ValueError("x must be nonzero")
    if a.matvec(x).value != 0:
        raise ValueError("x is not in the nullspace of a")
    return x.dot(a.diagonal()) == 0


def brute_force_member(a: Gf2Matrix, b: BitVec) -> bool:
    """True iff b is reachable as A·x, by enumerating all 2^n_cols vectors.

    Walks the Gray code so each step XORs a single column. Shares no
    code with elimination, making it an independent range oracle.
    """
    n = a.n_cols
    if n > ORACLE_CAP:
        raise SizeLimitError(f"n_cols {n} exceeds enumeration cap {ORACLE_CAP}")
    if len(b) != a.n_rows:
        raise ValueError(f"b length {len(b)} != {a.n_rows} rows")
    cols = [a.column(j).value for j in range(n)]
    target = b.value
    acc = 0
    if acc == target:
        return True
    for step in range(1, 1 << n):
        acc ^= cols[(step & -step).bit_length() - 1]
        if acc == target:
            return True
    return False


@dataclass(frozen=True)
class SweepRecord:
    """One sampled matrix and the outcome of both checks on it."""

    n: int
    trial: int
    seed: int
    density: float
    diag_density: float
    nullity: int
    ok: bool

    def machine_line(self) -> str:
        return (
            f"n={self.n} trial={self.trial} seed={self.seed} "
            f"nullity={self.nullity} ok={int(self.ok)}"
        )


@dataclass(frozen=True)
class SweepReport:
    records: tuple[SweepRecord, ...]
    oracle_checked: int = 0
    oracle_disagreements: int = 0

    @property
    def total(self) -> int:
        return len(self.records)

    @property
    def failures(self) -> int:
        return sum(1 for r in self.records if not r.ok)

    @property
    def successes(self) -> int:
        return self.total - self.failures

    def nullity_histogram(self) -> dict[int, int]:
        return dict(sorted(Counter(r.nullity for r in self.records).items()))

    def machine_lines(self) -> list[str]:
        return [r.machine_line() for r in self.records]

    def summary(self) -> str:
        """Per-size table plus totals, one line per matrix dimension."""
        lines = [f"{'n':>4} {'trials':>7} {'failures':>9} {'mean nullity':>13}"]
        by_n: dict[int, list[SweepRecord]] = {}
        for r in self.records:
            by_n.setdefault(r.n, []).append(r)
        for n in sorted(by_n):
            group = by_n[n]
            bad = sum(1 for r in group if not r.ok)
            mean = sum(r.nullity for r in group) / len(group)
            lines.append(f"{n:>4} {len(group):>7} {bad:>9} {mean:>13.2f}")
        lines.append(
            f"total {self.total} checks, {self.failures} failures"
        )
        if self.oracle_checked:
            verdict = (
                "agree"
                if self.oracle_disagreements == 0
                else f"{self.oracle_disagreements} disagreements"
            )
            lines.append(f"oracle: {verdict} ({self.oracle_checked} instances)")
        return "\n".join(lines)


def _trial_seed(base_seed: int, n: int, trial: int) -> int:
    ss = np.random.SeedSequence([base_seed, n, trial])
    return int(ss.generate_state(1, dtype=np.uint64)[0])


def sweep(
    n_max: int,
    trials_per_n: int,
    spec: RngSpec,
    oracle_max: int = 0,
) -> SweepReport:
    """Run both theorem checks on random symmetric matrices of every size.

    For each n in 1..n_max and each trial, a fresh matrix is drawn with
    a per-(n, trial) child seed and densities cycling through
    DENSITY_GRID. When oracle_max > 0, instances with n ≤ oracle_max
    are also cross-checked against the brute-force range oracle.
    """
    if n_max < 1:
        raise ValueError(f"n_max must be >= 1, got {n_max}")
    if trials_per_n < 1:
        raise ValueError(f"trials_per_n must be >= 1, got {trials_per_n}")
    records = []
    oracle_checked = 0
    oracle_bad = 0
    for n in range(1, n_max + 1):
        for trial in range(trials_per_n):
            density, diag_density = DENSITY_GRID[trial % len(DENSITY_GRID)]
            child = _trial_seed(spec.seed, n, trial)
            a = random_symmetric(
                n, RngSpec(seed=child, density=density, diag_density=diag_density)
            )
            d = a.diagonal()
            ok = True
            try:
                cert = verify_diagonal_in_range(a)
                nullity = cert.nullity
                ok = a.matvec(cert.witness) == d
            except RuntimeError:
                nullity = len(nullspace_basis(a))
                ok = False
            if ok:
                ok = verify_nullspace_orthogonality(a)
            if oracle_max and n <= min(oracle_max, ORACLE_CAP):
                oracle_checked += 1
                if brute_force_member(a, d) != (solve(a, d) is not None):
                    oracle_bad += 1
            records.append(
                SweepRecord(
                    n=n,
                    trial=trial,
                    seed=child,
                    density=density,
                    diag_density=diag_density,
                    nullity=nullity,
                    ok=ok,
                )
            )
    return SweepReport(
        records=tuple(records),
        oracle_checked=oracle_checked,
        oracle_disagreements=oracle_bad,
    )
