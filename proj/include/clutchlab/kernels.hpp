#pragma once

#include <span>
#include <vector>

#include "clutchlab/bundle.hpp"
#include "clutchlab/linalg.hpp"

// Residual scans behind the validators. Each kernel exists twice: a plain
// serial loop kept as the reference, and an OpenMP version over the
// outermost index that the library uses. Both write into a flat array so
// their outputs can be compared element for element.
namespace clutchlab::kernels {

// psi is indexed x * n + x' for n points.

namespace serial {
/// Index (g * |G| + h) * N + x: rel residual of A[gh][x] vs A[g][h.x] A[h][x].
std::vector<double> cocycle_residuals(const EquivariantBundle& bundle);
/// Index (x * N + y) * N + z: rel residual of psi[x][z] vs psi[y][z] psi[x][y].
std::vector<double> transitivity_residuals(std::span<const CMatrix> psi, int n);
/// Index (g * N + x) * N + y: rel residual of (g.psi)[x][y] vs psi[x][y].
std::vector<double> equivariance_residuals(const EquivariantBundle& bundle,
                                           std::span<const CMatrix> psi);
}  // namespace serial

namespace omp {
/// Thread count for the parallel kernels; n <= 0 keeps the runtime default.
void set_threads(int n);
std::vector<double> cocycle_residuals(const EquivariantBundle& bundle);
std::vector<double> transitivity_residuals(std::span<const CMatrix> psi, int n);
std::vector<double> equivariance_residuals(const EquivariantBundle& bundle,
                                           std::span<const CMatrix> psi);
}  // namespace omp

/// (g.psi)[x][y] = A[g][g^-1 x'] psi[g^-1 x][g^-1 x'] A[g][g^-1 x]^-1 for one entry.
CMatrix acted_entry(const EquivariantBundle& bundle, std::span<const CMatrix> psi, int g, int x,
                    int y);

}  // namespace clutchlab::kernels
