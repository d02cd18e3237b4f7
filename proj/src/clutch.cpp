#include "clutchlab/clutch.hpp"

#include <algorithm>
#include <string>

#include "clutchlab/errors.hpp"
#include "clutchlab/kernels.hpp"

namespace clutchlab {

PointwiseClutchingMap::PointwiseClutchingMap(BundlePtr bundle, std::vector<CMatrix> psi)
    : bundle_(std::move(bundle)), psi_(std::move(psi)) {
  if (!bundle_->constant_rank())
    throw DomainError("clutching map needs fibers of equal rank at every point");
  const int n = bundle_->base_size();
  if (static_cast<int>(psi_.size()) != n * n)
    throw DomainError("clutching map needs one matrix per ordered pair of points");
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const auto& m = psi_[x * n + y];
      if (m.rows() != bundle_->rank(y) || m.cols() != bundle_->rank(x))
        throw DomainError("clutching matrix (" + std::to_string(x) + "," + std::to_string(y) +
                          ") has wrong shape");
    }
}

ValidationReport validate_clutch(const PointwiseClutchingMap& psi, const Tolerances& tol) {
  ValidationReport report;
  const int n = psi.base_size();
  auto note = [&](const char* kind, std::vector<int> where, double r) {
    report.worst_residual = std::max(report.worst_residual, r);
    if (r > tol.eps_mat) report.violations.push_back({kind, std::move(where), r});
  };
  for (int x = 0; x < n; ++x) note("reflexivity", {x}, rel_residual(psi(x, x), identity(psi(x, x).rows())));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (x == y) continue;
      // psi(y, x) psi(x, y) = id and psi(x, y) psi(y, x) = id.
      const double r = std::max(rel_residual(psi(y, x) * psi(x, y), identity(psi(x, y).cols())),
                                rel_residual(psi(x, y) * psi(y, x), identity(psi(x, y).rows())));
      note("symmetry", {x, y}, r);
    }
  const auto trans = kernels::omp::transitivity_residuals(psi.entries(), n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) note("transitivity", {x, y, z}, trans[(x * n + y) * n + z]);
  return report;
}

PointwiseClutchingMap act_on_clutch(int g, const PointwiseClutchingMap& psi) {
  const auto& bundle = *psi.bundle();
  if (g < 0 || g >= bundle.group()->order()) throw DomainError("group element out of range");
  const int n = psi.base_size();
  std::vector<CMatrix> out;
  out.reserve(static_cast<size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) out.push_back(kernels::acted_entry(bundle, psi.entries(), g, x, y));
  return PointwiseClutchingMap(psi.bundle(), std::move(out));
}

double equivariance_residual(const PointwiseClutchingMap& psi) {
  const auto res = kernels::omp::equivariance_residuals(*psi.bundle(), psi.entries());
  return res.empty() ? 0.0 : *std::max_element(res.begin(), res.end());
}

bool is_equivariant(const PointwiseClutchingMap& psi, const Tolerances& tol) {
  return equivariance_residual(psi) <= tol.eps_mat;
}

namespace {

void require_equivariant(const PointwiseClutchingMap& psi, const Tolerances& tol) {
  const double r = equivariance_residual(psi);
  if (r > tol.eps_mat)
    throw DomainError("clutching map is not equivariant (residual " + std::to_string(r) + ")");
}

void require_point(const PointwiseClutchingMap& psi, int x) {
  if (x < 0 || x >= psi.base_size()) throw DomainError("basepoint out of range");
}

}  // namespace

GluedRepresentation glued_representation(const PointwiseClutchingMap& psi, int basepoint,
                                         const Tolerances& tol) {
  require_point(psi, basepoint);
  require_equivariant(psi, tol);
  const auto& bundle = *psi.bundle();
  GluedRepresentation glued{basepoint, {bundle.group(), bundle.rank(basepoint), {}}};
  for (int g = 0; g < bundle.group()->order(); ++g) {
    const int gx = bundle.action()(g, basepoint);
    // psi(x0, x0) is the identity by reflexivity, so the stabilizer acts
    // exactly as on the fiber.
    if (gx == basepoint)
      glued.rep.mats.push_back(bundle.transport(g, basepoint));
    else
      glued.rep.mats.push_back(psi(gx, basepoint) * bundle.transport(g, basepoint));
  }
  return glued;
}

std::vector<CMatrix> quotient_map(const PointwiseClutchingMap& psi, int basepoint,
                                  const Tolerances& tol) {
  require_point(psi, basepoint);
  require_equivariant(psi, tol);
  std::vector<CMatrix> p;
  for (int x = 0; x < psi.base_size(); ++x)
    p.push_back(x == basepoint ? identity(psi.bundle()->rank(x)) : psi(x, basepoint));
  return p;
}

double fiberwise_equivariance_residual(const EquivariantBundle& bundle, const Representation& w,
                                       std::span<const CMatrix> p) {
  double worst = 0.0;
  for (int g = 0; g < bundle.group()->order(); ++g)
    for (int x = 0; x < bundle.base_size(); ++x)
      worst = std::max(worst, rel_residual(p[bundle.action()(g, x)] * bundle.transport(g, x),
                                           w.mats[g] * p[x]));
  return worst;
}

PointwiseClutchingMap clutch_from_fiberwise_iso(const BundlePtr& bundle, const Representation& w,
                                                std::span<const CMatrix> p,
                                                const Tolerances& tol) {
  const int n = bundle->base_size();
  if (static_cast<int>(p.size()) != n) throw DomainError("fiberwise map needs one matrix per point");
  for (int x = 0; x < n; ++x) {
    if (p[x].rows() != w.dim || p[x].cols() != bundle->rank(x))
      throw DomainError("fiberwise map at point " + std::to_string(x) + " has wrong shape");
    if (smallest_singular_value(p[x]) <= tol.eps_sing)
      throw DomainError("fiberwise map is singular at point " + std::to_string(x));
  }
  const double r = fiberwise_equivariance_residual(*bundle, w, p);
  if (r > tol.eps_mat)
    throw DomainError("fiberwise map is not equivariant (residual " + std::to_string(r) + ")");

  std::vector<CMatrix> inverses;
  for (int x = 0; x < n; ++x) inverses.push_back(p[x].inverse());
  std::vector<CMatrix> psi;
  psi.reserve(static_cast<size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      psi.push_back(x == y ? identity(bundle->rank(x)) : CMatrix(inverses[y] * p[x]));
  return PointwiseClutchingMap(bundle, std::move(psi));
}

AveragingResult averaging_isomorphism(const PointwiseClutchingMap& psi0,
                                      const PointwiseClutchingMap& psi, int basepoint,
                                      const Tolerances& tol) {
  if (!same_bundle(*psi0.bundle(), *psi.bundle()))
    throw DomainError("averaging needs clutching maps of the same bundle");
  const int d = psi.bundle()->rank(basepoint);
  const bool same = std::equal(psi0.entries().begin(), psi0.entries().end(), psi.entries().begin(),
                               psi.entries().end());
  if (same) return {identity(d), 1.0, true};

  const auto rho0 = glued_representation(psi0, basepoint, tol).rep;
  const auto rho = glued_representation(psi, basepoint, tol).rep;
  const auto& group = *rho.group;
  CMatrix alpha = CMatrix::Zero(d, d);
  for (int g = 0; g < group.order(); ++g) alpha += rho0.mats[g] * rho.mats[group.inv(g)];
  alpha /= static_cast<double>(group.order());

  AveragingResult result;
  result.smallest_singular_value = smallest_singular_value(alpha);
  result.invertible = result.smallest_singular_value > tol.eps_sing;
  if (result.invertible && std::abs(alpha.trace()) > tol.eps_sing) {
    alpha *= static_cast<double>(d) / alpha.trace();
    result.smallest_singular_value = smallest_singular_value(alpha);
  }
  result.alpha = std::move(alpha);
  return result;
}

}  // namespace clutchlab
