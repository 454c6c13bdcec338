import numpy as np

from .config import BoundaryCondition, LatticeConfig


def build_laplacian(cfg: LatticeConfig) -> np.ndarray:
    """Second-difference matrix L ≈ -Δ with stencil (-1, 2, -1) / h².

    The periodic ring adds the wrap-around couplings on top of the Dirichlet stencil, so for
    n = 2 both neighbours of a site coincide and the coupling doubles; for n = 1 the ring has
    no curvature at all.
    """
    cfg.validate()
    n = cfg.n
    inv_h2 = 1.0 / (cfg.h * cfg.h)

    laplacian = np.zeros((n, n), dtype=np.float64)
    laplacian[np.diag_indices(n)] = 2.0 * inv_h2
    if n > 1:
        i = np.arange(n - 1)
        laplacian[i, i + 1] = -inv_h2
        laplacian[i + 1, i] = -inv_h2

    if cfg.bc is BoundaryCondition.PERIODIC:
        laplacian[0, n - 1] -= inv_h2
        laplacian[n - 1, 0] -= inv_h2

    return laplacian


def build_kinetic(cfg: LatticeConfig) -> np.ndarray:
    kinetic = build_laplacian(cfg)
    kinetic[np.diag_indices(cfg.n)] += cfg.m * cfg.m
    return kinetic


def grid_coordinates(cfg: LatticeConfig) -> np.ndarray:
    if cfg.bc is BoundaryCondition.DIRICHLET:
        return cfg.h * np.arange(1, cfg.n + 1, dtype=np.float64)
    return cfg.h * np.arange(cfg.n, dtype=np.float64)
