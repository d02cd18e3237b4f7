#include "clutchlab/kernels.hpp"

namespace clutchlab::kernels {

CMatrix acted_entry(const EquivariantBundle& bundle, std::span<const CMatrix> psi, int g, int x,
                    int y) {
  const auto& act = bundle.action();
  const int n = bundle.base_size();
  const int g_inv = bundle.group()->inv(g);
  const int sx = act(g_inv, x);
  const int sy = act(g_inv, y);
  return bundle.transport(g, sy) * psi[sx * n + sy] * bundle.transport(g, sx).inverse();
}

namespace serial {

std::vector<double> cocycle_residuals(const EquivariantBundle& bundle) {
  const auto& group = *bundle.group();
  const auto& act = bundle.action();
  const int order = group.order();
  const int n = bundle.base_size();
  std::vector<double> out(static_cast<size_t>(order) * order * n);
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
  for (int g = 0; g < order; ++g)
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        out[(g * n + x) * n + y] = rel_residual(acted_entry(bundle, psi, g, x, y), psi[x * n + y]);
  return out;
}

}  // namespace serial
}  // namespace clutchlab::kernels
