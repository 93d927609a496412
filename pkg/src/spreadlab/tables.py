"""Reference numeric cells and their recomputation.

Every published reference value reproduced by this artifact lives here as a
(name, expected, tolerance) cell next to the code that recomputes it from
scratch. Four-decimal cells carry a 5e-4 tolerance, one-decimal cells 0.05,
and the exact K_{2,2} row 1e-8.

A handful of cells are known not to match faithful recomputation (the
published figures for them are inaccurate); verify_tables reports those as
failures together with the recomputed value.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .bounds import (
    bound_bipartite_distance,
    bound_bipartite_dsl,
    bound_cactus,
    bound_clique,
    bound_diameter,
)
from .graph import builtin, kite
from .spectral import KIND_DISTANCE, KIND_DSL, spread

TOL_4DP = 5e-4
TOL_1DP = 0.05
TOL_EXACT = 1e-8


@dataclass(frozen=True)
class Cell:
    graph: str
    quantity: str
    expected: float
    tol: float
    compute: Callable[[], float]

    @property
    def name(self) -> str:
        return f"{self.graph}:{self.quantity}"


@dataclass(frozen=True)
class CellResult:
    name: str
    expected: float
    computed: float
    tol: float

    @property
    def passed(self) -> bool:
        return abs(self.computed - self.expected) <= self.tol


def _sd(name):
    return lambda: spread(builtin(name), KIND_DISTANCE).spread


def _q(name):
    return lambda: spread(builtin(name), KIND_DSL).rho_max


def _qmin(name):
    return lambda: spread(builtin(name), KIND_DSL).rho_min


def _sq(name):
    return lambda: spread(builtin(name), KIND_DSL).spread


def reference_cells() -> list[Cell]:
    cells: list[Cell] = []

    # distance bounds and spreads for the two bipartite showcase graphs
    cells += [
        Cell("G1", "S_D_bound", 15.5960, TOL_4DP, lambda: bound_bipartite_distance(builtin("G1")).bound),
        Cell("G1", "S_D", 17.6820, TOL_4DP, _sd("G1")),
        Cell("G2", "S_D_bound", 19.0059, TOL_4DP, lambda: bound_bipartite_distance(builtin("G2")).bound),
        Cell("G2", "S_D", 20.9674, TOL_4DP, _sd("G2")),
    ]

    # DSL bounds and spreads for the same graphs
    cells += [
        Cell("G1", "S_Q_bound", 15.6400, TOL_4DP, lambda: bound_bipartite_dsl(builtin("G1")).bound),
        Cell("G1", "S_Q", 18.6100, TOL_4DP, _sq("G1")),
        Cell("G2", "S_Q_bound", 17.8520, TOL_4DP, lambda: bound_bipartite_dsl(builtin("G2")).bound),
        Cell("G2", "S_Q", 21.1870, TOL_4DP, _sq("G2")),
    ]

    # small bipartite DSL table, n = 4
    for name, q, qmin, sq, tol in [
        ("K22", 8.0, 2.0, 6.0, TOL_EXACT),
        ("P4", 10.6056, 2.0, 8.6056, TOL_4DP),
        ("S4", 9.4641, 2.5359, 6.9282, TOL_4DP),
    ]:
        cells += [
            Cell(name, "q", q, tol, _q(name)),
            Cell(name, "q_min", qmin, tol, _qmin(name)),
            Cell(name, "S_Q", sq, tol, _sq(name)),
        ]

    # small bipartite DSL table, n = 5
    for name, q, qmin, sq in [
        ("K23", 11.3723, 3.0, 8.3723),
        ("H1", 13.3441, 3.3113, 10.0328),
        ("H2", 15.3119, 3.6075, 11.7044),
        ("P5", 17.1152, 3.4385, 13.6767),
        ("S5", 13.4244, 3.5756, 9.8488),
    ]:
        cells += [
            Cell(name, "q", q, TOL_4DP, _q(name)),
            Cell(name, "q_min", qmin, TOL_4DP, _qmin(name)),
            Cell(name, "S_Q", sq, TOL_4DP, _sq(name)),
        ]

    # clique bound on the kite Ki_{5,3}
    cells += [
        Cell("Ki53", "S_Q_clique_bound", 10.6158, TOL_4DP, lambda: bound_clique(kite(5, 3)).bound),
        Cell("Ki53", "S_Q", 11.3395, TOL_4DP, lambda: spread(kite(5, 3), KIND_DSL).spread),
    ]

    # diameter bound on G1
    cells += [
        Cell("G1", "S_Q_diameter_bound", 12.1198, TOL_4DP, lambda: bound_diameter(builtin("G1")).bound),
    ]

    # cactus bounds and spreads (one-decimal reference values)
    cells += [
        Cell("G3", "S_Q_cactus_bound", 11.5, TOL_1DP, lambda: bound_cactus(builtin("G3")).bound),
        Cell("G3", "S_Q", 12.8, TOL_1DP, _sq("G3")),
        Cell("G4", "S_Q_cactus_bound", 13.4, TOL_1DP, lambda: bound_cactus(builtin("G4")).bound),
        Cell("G4", "S_Q", 16.3, TOL_1DP, _sq("G4")),
    ]
    return cells


def verify_tables(only: str | None = None) -> list[CellResult]:
    """Recompute every reference cell (optionally filtered by graph name)."""
    results = []
    for cell in reference_cells():
        if only is not None and cell.graph != only:
            continue
        results.append(CellResult(
            name=cell.name,
            expected=cell.expected,
            computed=cell.compute(),
            tol=cell.tol,
        ))
    return results
