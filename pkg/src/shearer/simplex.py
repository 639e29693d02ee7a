"""Dense revised simplex with Bland's rule, over floats or exact rationals.

Solves min c.x subject to A x = b, x >= 0 with b >= 0, where columns arrive
incrementally (the restricted masters of column generation). The basis
inverse is maintained explicitly; after adding columns, solve() warm-starts
from the current basis. Instances here are tiny (tens of rows), so the
O(m^2)-per-pivot updates are never the bottleneck.

In exact mode every quantity is a Fraction and all comparisons are exact,
which makes Bland's rule a true anti-cycling guarantee and the reported
optimum certified. In float mode small tolerances stand in for zero tests.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import NotConverged, ShearerError

_ARTIFICIAL_KEY_SHIFT = -(10**12)


class RevisedSimplex:
    """Incremental equality-form LP: min c.x, A x = b, x >= 0, b >= 0."""

    def __init__(self, rhs, exact: bool = False):
        self.exact = exact
        conv = Fraction if exact else float
        self._b = [conv(v) for v in rhs]
        if any(v < 0 for v in self._b):
            raise ValueError("right-hand side must be non-negative")
        self.m = len(self._b)
        self._cols: list[dict[int, object]] = []
        self._costs: list[object] = []
        self._conv = conv
        self._eps = Fraction(0) if exact else 1e-11
        self._pivot_eps = Fraction(0) if exact else 1e-9
        # basis[r] is a real column index, or -1-i for the artificial of row i
        self._basis: list[int] | None = None
        self._binv: list[list[object]] | None = None
        self._xb: list[object] | None = None
        self._in_basis: set[int] = set()
        self.pivots = 0

    def add_column(self, cost, entries: dict) -> int:
        """Append a column (sparse {row: coeff}); returns its index."""
        conv = self._conv
        self._cols.append({r: conv(v) for r, v in entries.items() if v})
        self._costs.append(conv(cost))
        return len(self._cols) - 1

    # -- internals ---------------------------------------------------------

    def _column_times_binv(self, col: dict) -> list:
        binv = self._binv
        return [sum(binv[r][k] * v for k, v in col.items()) for r in range(self.m)]

    def _duals_for(self, costs_of) -> list:
        binv = self._binv
        basis = self._basis
        m = self.m
        y = [self._conv(0)] * m
        for r in range(m):
            cb = costs_of(basis[r])
            if cb:
                row = binv[r]
                for k in range(m):
                    if row[k]:
                        y[k] += cb * row[k]
        return y

    def _bland_key(self, basis_entry: int) -> int:
        # artificials sort before real columns so degenerate ties kick them out
        if basis_entry < 0:
            return _ARTIFICIAL_KEY_SHIFT + (-1 - basis_entry)
        return basis_entry

    def _pivot(self, leave_row: int, enter: int, direction: list):
        binv = self._binv
        xb = self._xb
        piv = direction[leave_row]
        lr_row = binv[leave_row]
        inv_piv_row = [v / piv for v in lr_row]
        theta = xb[leave_row] / piv
        for r in range(self.m):
            if r == leave_row:
                continue
            d = direction[r]
            if d:
                row = binv[r]
                for k in range(self.m):
                    if inv_piv_row[k]:
                        row[k] -= d * inv_piv_row[k]
                xb[r] -= d * theta
        binv[leave_row] = inv_piv_row
        xb[leave_row] = theta
        old = self._basis[leave_row]
        if old >= 0:
            self._in_basis.discard(old)
        self._basis[leave_row] = enter
        if enter >= 0:
            self._in_basis.add(enter)
        self.pivots += 1

    def _ratio_test(self, direction: list):
        best_row, best_ratio, best_key = -1, None, None
        for r in range(self.m):
            d = direction[r]
            if d > self._pivot_eps:
                ratio = self._xb[r] / d
                key = self._bland_key(self._basis[r])
                if best_row < 0 or ratio < best_ratio or (ratio == best_ratio and key < best_key):
                    best_row, best_ratio, best_key = r, ratio, key
        return best_row

    def _objective_for(self, costs_of):
        total = self._conv(0)
        for r in range(self.m):
            c = costs_of(self._basis[r])
            if c:
                total += c * self._xb[r]
        return total

    def _optimize(self, costs_of, max_pivots: int):
        # Dantzig's rule (steepest reduced cost) until the objective stalls on
        # degenerate pivots, then Bland's rule, whose anti-cycling guarantee
        # ensures termination in exact arithmetic.
        eps = self._eps
        bland = False
        stall = 0
        stall_limit = 3 * self.m + 30
        last_obj = None
        while True:
            if self.pivots > max_pivots:
                raise NotConverged(f"simplex exceeded {max_pivots} pivots")
            y = self._duals_for(costs_of)
            enter = -1
            best_rc = -eps
            for j in range(len(self._cols)):
                if j in self._in_basis:
                    continue
                rc = costs_of(j) - sum(y[r] * v for r, v in self._cols[j].items())
                if rc < best_rc:
                    enter = j
                    if bland:
                        break  # first eligible index
                    best_rc = rc
            if enter < 0:
                return
            direction = self._column_times_binv(self._cols[enter])
            leave = self._ratio_test(direction)
            if leave < 0:
                raise ShearerError("LP unbounded; master should never be")
            self._pivot(leave, enter, direction)
            if not bland:
                obj = self._objective_for(costs_of)
                if last_obj is None or obj < last_obj:
                    stall = 0
                    last_obj = obj
                else:
                    stall += 1
                    if stall >= stall_limit:
                        bland = True

    def _phase_one(self, max_pivots: int):
        conv = self._conv
        self._basis = [-1 - r for r in range(self.m)]
        self._binv = [
            [conv(1) if r == k else conv(0) for k in range(self.m)] for r in range(self.m)
        ]
        self._xb = list(self._b)
        self._in_basis = set()

        one = conv(1)
        zero = conv(0)
        self._optimize(lambda j: zero if j >= 0 else one, max_pivots)
        infeas = sum((self._xb[r] for r in range(self.m) if self._basis[r] < 0), zero)
        if infeas > (0 if self.exact else 1e-9):
            raise ShearerError(f"master LP infeasible (phase-1 value {infeas}); internal error")
        self._drive_out_artificials()

    def _drive_out_artificials(self):
        # replace zero-level basic artificials with any usable real column
        for r in range(self.m):
            if self._basis[r] >= 0:
                continue
            for j in range(len(self._cols)):
                if j in self._in_basis:
                    continue
                direction = self._column_times_binv(self._cols[j])
                d = direction[r]
                if d > self._pivot_eps or d < -self._pivot_eps:
                    self._pivot(r, j, direction)
                    break

    # -- public ------------------------------------------------------------

    def set_basis(self, columns) -> bool:
        """Install the given m real columns as the starting basis (crossover).

        Used to seed an exact solve from a float solve's optimal basis.
        Returns False (state unchanged) if the columns are singular or the
        implied basic solution is infeasible; the caller then falls back to
        the usual two-phase start.
        """
        columns = list(columns)
        if len(columns) != self.m or len(set(columns)) != self.m:
            return False
        m = self.m
        conv = self._conv
        zero = conv(0)
        # Gauss-Jordan on [B | I]
        aug = []
        for r in range(m):
            row = [self._cols[c].get(r, zero) for c in columns]
            row += [conv(1) if k == r else zero for k in range(m)]
            aug.append(row)
        for col in range(m):
            piv_row = -1
            piv_val = zero
            for r in range(col, m):
                v = aug[r][col]
                if abs(v) > abs(piv_val):
                    piv_row, piv_val = r, v
            if piv_row < 0 or (piv_val == 0 if self.exact else abs(piv_val) <= 1e-12):
                return False
            aug[col], aug[piv_row] = aug[piv_row], aug[col]
            piv = aug[col][col]
            aug[col] = [v / piv for v in aug[col]]
            for r in range(m):
                if r != col and aug[r][col]:
                    f = aug[r][col]
                    aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
        binv = [row[m:] for row in aug]
        xb = [sum(binv[r][k] * self._b[k] for k in range(m)) for r in range(m)]
        feas_eps = 0 if self.exact else -1e-9
        if any(v < feas_eps for v in xb):
            return False
        if not self.exact:
            xb = [v if v > 0.0 else 0.0 for v in xb]
        self._binv = binv
        self._xb = xb
        self._basis = columns
        self._in_basis = set(columns)
        return True

    def solve(self, max_pivots: int = 200_000):
        """Optimize; two-phase on first call, warm-started afterwards."""
        if self._basis is None:
            self._phase_one(max_pivots)
        costs = self._costs
        zero = self._conv(0)
        self._optimize(lambda j: costs[j] if j >= 0 else zero, max_pivots)

    def objective(self):
        total = self._conv(0)
        for r in range(self.m):
            j = self._basis[r]
            if j >= 0 and self._costs[j]:
                total += self._costs[j] * self._xb[r]
        return total

    def duals(self) -> list:
        """Dual vector y = c_B B^-1 for the phase-2 costs."""
        costs = self._costs
        zero = self._conv(0)
        return self._duals_for(lambda j: costs[j] if j >= 0 else zero)

    def primal(self) -> dict[int, object]:
        """Basic variable values keyed by real column index."""
        return {j: self._xb[r] for r, j in enumerate(self._basis) if j >= 0}

    def basis_columns(self) -> list[int]:
        return [j for j in self._basis if j >= 0]

    def basis_snapshot(self) -> list[int] | None:
        """Raw basis (artificials encoded as negative ids), or None if unsolved."""
        return None if self._basis is None else list(self._basis)
