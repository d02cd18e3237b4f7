#pragma once

#include <span>
#include <vector>

#include "clutchlab/bundle.hpp"
#include "clutchlab/report.hpp"
#include "clutchlab/rep.hpp"

namespace clutchlab {

/// One invertible matrix psi(x, x') : fiber_x -> fiber_x' per ordered pair
/// of points, stored densely at index x * N + x'.
class PointwiseClutchingMap {
 public:
  /// Throws DomainError if the fibers do not all have the same rank or if
  /// a matrix has the wrong shape.
  PointwiseClutchingMap(BundlePtr bundle, std::vector<CMatrix> psi);

  const BundlePtr& bundle() const { return bundle_; }
  int base_size() const { return bundle_->base_size(); }
  const CMatrix& operator()(int x, int y) const { return psi_[x * base_size() + y]; }
  std::span<const CMatrix> entries() const { return psi_; }

 private:
  BundlePtr bundle_;
  std::vector<CMatrix> psi_;
};

/// Reflexivity, symmetry and transitivity, each failure with its residual.
ValidationReport validate_clutch(const PointwiseClutchingMap& psi, const Tolerances& tol = {});

/// (g.psi)(x, x') = g psi(g^-1 x, g^-1 x') g^-1.
PointwiseClutchingMap act_on_clutch(int g, const PointwiseClutchingMap& psi);

/// Worst residual of g.psi = psi over all g and pairs.
double equivariance_residual(const PointwiseClutchingMap& psi);
bool is_equivariant(const PointwiseClutchingMap& psi, const Tolerances& tol = {});

/// The representation g -> psi(g x0, x0) A[g][x0] on the fiber over x0.
struct GluedRepresentation {
  int basepoint = 0;
  Representation rep;
};

/// Throws DomainError unless psi is equivariant.
GluedRepresentation glued_representation(const PointwiseClutchingMap& psi, int basepoint,
                                         const Tolerances& tol = {});

/// p[x] = psi(x, x0), an equivariant fiberwise isomorphism onto the glued
/// representation at x0.
std::vector<CMatrix> quotient_map(const PointwiseClutchingMap& psi, int basepoint,
                                  const Tolerances& tol = {});

/// Worst residual of p[g x] A[g][x] = w(g) p[x].
double fiberwise_equivariance_residual(const EquivariantBundle& bundle, const Representation& w,
                                       std::span<const CMatrix> p);

/// psi(x, x') = p[x']^-1 p[x] for an equivariant fiberwise isomorphism p
/// from the bundle to w. Throws DomainError if p is singular somewhere or
/// not equivariant.
PointwiseClutchingMap clutch_from_fiberwise_iso(const BundlePtr& bundle, const Representation& w,
                                                std::span<const CMatrix> p,
                                                const Tolerances& tol = {});

struct AveragingResult {
  CMatrix alpha;
  double smallest_singular_value = 0.0;
  bool invertible = false;
};

/// alpha = (1/|G|) sum_g rho0(g) rho(g)^-1 for the glued representations of
/// psi0 and psi at the basepoint, scaled to trace equal to the rank. alpha
/// intertwines glued(psi) with glued(psi0). A singular average is returned
/// unscaled with invertible = false; it is never inverted here.
AveragingResult averaging_isomorphism(const PointwiseClutchingMap& psi0,
                                      const PointwiseClutchingMap& psi, int basepoint,
                                      const Tolerances& tol = {});

}  // namespace clutchlab
