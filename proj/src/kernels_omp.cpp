#include "clutchlab/kernels.hpp"

#include <omp.h>

namespace clutchlab::kernels::omp {

void set_threads(int n) {
  if (n > 0) omp_set_num_threads(n);
}

std::vector<double> cocycle_residuals(const EquivariantBundle& bundle) {
  const auto& group = *bundle.group();
  const auto& act = bundle.action();
  const int order = group.order();
  const int n = bundle.base_size();
  std::vector<double> out(static_cast<size_t>(order) * order * n);
#pragma omp parallel for collapse(2) schedule(static)
  for (int g = 0; g < order; ++g)
    for (int h = 0; h < order; ++h)
      for (int x = 0; x < n; ++x)
        out[(g * order + h) * n + x] =
            rel_residual(bundle.transport(g, act(h, x)) * bundle.transport(h, x),
                         bundle.transport(group.mul(g, h), x));
  return out;
}

std::vector<double> transitivity_residuals(std::span<const CMatrix> psi, int n) {
  std::vector<double> out(static_cast<size_t>(n) * n * n);
#pragma omp parallel for collapse(2) schedule(static)
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        out[(x * n + y) * n + z] = rel_residual(psi[y * n + z] * psi[x * n + y], psi[x * n + z]);
  return out;
}

std::vector<double> equivariance_residuals(const EquivariantBundle& bundle,
                                           std::span<const CMatrix> psi) {
  const int order = bundle.group()->order();
  const int n = bundle.base_size();
  std::vector<double> out(static_cast<size_t>(order) * n * n);
#pragma omp parallel for schedule(dynamic)
  for (int g = 0; g < order; ++g)
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        out[(g * n + x) * n + y] = rel_residual(acted_entry(bundle, psi, g, x, y), psi[x * n + y]);
  return out;
}

}  // namespace clutchlab::kernels::omp
