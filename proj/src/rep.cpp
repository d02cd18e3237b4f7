#include "clutchlab/rep.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

#include "clutchlab/errors.hpp"

namespace clutchlab {

double homomorphism_residual(const Representation& rep) {
  const auto& g = *rep.group;
  double worst = rel_residual(rep.mats[0], identity(rep.dim));
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); ++b)
      worst = std::max(worst, rel_residual(rep.mats[a] * rep.mats[b], rep.mats[g.mul(a, b)]));
  return worst;
}

void check_representation(const Representation& rep, const Tolerances& tol) {
  if (!rep.group) throw DomainError("representation has no group");
  if (static_cast<int>(rep.mats.size()) != rep.group->order())
    throw DomainError("representation needs one matrix per group element");
  for (const auto& m : rep.mats)
    if (m.rows() != rep.dim || m.cols() != rep.dim)
      throw DomainError("representation matrix has wrong shape");
  const double r = homomorphism_residual(rep);
  if (r > tol.eps_mat)
    throw DomainError("matrices are not a homomorphism (residual " + std::to_string(r) + ")");
}

Representation trivial_rep(const GroupPtr& group, int dim) {
  return {group, dim, std::vector<CMatrix>(group->order(), identity(dim))};
}

Representation regular_rep(const GroupPtr& group) {
  const int n = group->order();
  Representation rep{group, n, {}};
  for (int g = 0; g < n; ++g) {
    CMatrix m = CMatrix::Zero(n, n);
    for (int h = 0; h < n; ++h) m(group->mul(g, h), h) = 1.0;
    rep.mats.push_back(std::move(m));
  }
  return rep;
}

Representation permutation_rep(const GroupAction& action) {
  const int n = action.base_size();
  Representation rep{action.group(), n, {}};
  for (int g = 0; g < action.group()->order(); ++g) {
    CMatrix m = CMatrix::Zero(n, n);
    for (int x = 0; x < n; ++x) m(action(g, x), x) = 1.0;
    rep.mats.push_back(std::move(m));
  }
  return rep;
}

Representation direct_sum(const Representation& a, const Representation& b) {
  if (a.group != b.group && a.group->table() != b.group->table())
    throw DomainError("direct sum of representations of different groups");
  Representation rep{a.group, a.dim + b.dim, {}};
  for (size_t g = 0; g < a.mats.size(); ++g) {
    CMatrix m = CMatrix::Zero(rep.dim, rep.dim);
    m.topLeftCorner(a.dim, a.dim) = a.mats[g];
    m.bottomRightCorner(b.dim, b.dim) = b.mats[g];
    rep.mats.push_back(std::move(m));
  }
  return rep;
}

Representation conjugate_rep(const Representation& rep, const CMatrix& t) {
  const CMatrix t_inv = t.inverse();
  Representation out{rep.group, rep.dim, {}};
  for (const auto& m : rep.mats) out.mats.push_back(t * m * t_inv);
  return out;
}

Character character_of(const Representation& rep) {
  Character chi{rep.group, {}};
  for (const auto& cls : rep.group->classes()) chi.values.push_back(rep.mats[cls.front()].trace());
  return chi;
}

Complex inner_product(const Character& a, const Character& b) {
  const auto& classes = a.group->classes();
  Complex sum = 0.0;
  for (size_t c = 0; c < classes.size(); ++c)
    sum += static_cast<double>(classes[c].size()) * std::conj(a.values[c]) * b.values[c];
  return sum / static_cast<double>(a.group->order());
}

double max_abs_difference(const Character& a, const Character& b) {
  if (a.values.size() != b.values.size()) return INFINITY;
  double worst = 0.0;
  for (size_t c = 0; c < a.values.size(); ++c) worst = std::max(worst, std::abs(a.values[c] - b.values[c]));
  return worst;
}

Character restrict_character(const Character& chi, const Subgroup& k) {
  Character out{k.group, {}};
  for (const auto& cls : k.group->classes()) out.values.push_back(chi.at(k.elements[cls.front()]));
  return out;
}

namespace {

// a[r][s][t] = #{(x, y) in C_r x C_s : x y = g_t}, g_t the first element of C_t.
std::vector<CMatrix> class_multiplication_matrices(const FiniteGroup& g) {
  const int k = g.num_classes();
  std::vector<CMatrix> mats(k, CMatrix::Zero(k, k));
  for (int r = 0; r < k; ++r)
    for (int t = 0; t < k; ++t) {
      const int z = g.classes()[t].front();
      for (int x : g.classes()[r]) mats[r](g.class_of(g.mul(g.inv(x), z)), t) += 1.0;
    }
  return mats;
}

bool value_greater(Complex a, Complex b, double eps) {
  if (std::abs(a.real() - b.real()) > eps) return a.real() > b.real();
  if (std::abs(a.imag() - b.imag()) > eps) return a.imag() > b.imag();
  return false;
}

std::vector<Character> try_burnside(const GroupPtr& group, const std::vector<CMatrix>& class_mats,
                                    std::mt19937_64& rng, const Tolerances& tol) {
  const int k = group->num_classes();
  const auto& classes = group->classes();
  std::normal_distribution<double> normal(0.0, 1.0);
  CMatrix combo = CMatrix::Zero(k, k);
  for (int r = 0; r < k; ++r) combo += Complex(normal(rng), normal(rng)) * class_mats[r];

  Eigen::ComplexEigenSolver<CMatrix> solver(combo);
  if (solver.info() != Eigen::Success) return {};
  std::vector<Character> rows;
  for (int i = 0; i < k; ++i) {
    Eigen::VectorXcd omega = solver.eigenvectors().col(i);
    if (std::abs(omega(0)) < 1e-12) return {};
    omega /= omega(0);
    // Every class-sum matrix must act on omega by the scalar omega_r.
    for (int r = 0; r < k; ++r) {
      const double res = (class_mats[r] * omega - omega(r) * omega).norm();
      if (res > 1e-6 * std::max(1.0, omega.norm() * std::abs(omega(r)))) return {};
    }
    double norm_sum = 0.0;
    for (int s = 0; s < k; ++s) norm_sum += std::norm(omega(s)) / classes[s].size();
    const double degree = std::sqrt(group->order() / norm_sum);
    const double rounded = std::round(degree);
    if (std::abs(degree - rounded) > tol.eps_char || rounded < 1.0) return {};
    Character chi{group, {}};
    for (int s = 0; s < k; ++s) {
      Complex v = rounded * omega(s) / static_cast<double>(classes[s].size());
      // Scrub round-off so that real characters serialize as real.
      if (std::abs(v.real()) < 1e-13) v.real(0.0);
      if (std::abs(v.imag()) < 1e-13) v.imag(0.0);
      chi.values.push_back(v);
    }
    rows.push_back(std::move(chi));
  }
  return rows;
}

}  // namespace

CharacterTable character_table(const GroupPtr& group, std::uint64_t seed, const Tolerances& tol) {
  const auto class_mats = class_multiplication_matrices(*group);
  std::mt19937_64 rng(seed);
  constexpr int kRetryBudget = 10;
  for (int attempt = 0; attempt < kRetryBudget; ++attempt) {
    auto rows = try_burnside(group, class_mats, rng, tol);
    if (rows.empty()) continue;
    const double eps = tol.eps_char;
    std::sort(rows.begin(), rows.end(), [eps](const Character& a, const Character& b) {
      if (std::abs(a.degree().real() - b.degree().real()) > 0.5) return a.degree().real() < b.degree().real();
      for (size_t c = 0; c < a.values.size(); ++c) {
        if (value_greater(a.values[c], b.values[c], eps)) return true;
        if (value_greater(b.values[c], a.values[c], eps)) return false;
      }
      return false;
    });
    CharacterTable table{group, std::move(rows), {}};
    int sum_sq = 0;
    bool orthonormal = true;
    for (int i = 0; i < table.size(); ++i) {
      table.dims.push_back(static_cast<int>(std::lround(table.rows[i].degree().real())));
      sum_sq += table.dims.back() * table.dims.back();
      for (int j = 0; j < table.size(); ++j) {
        const Complex ip = inner_product(table.rows[i], table.rows[j]);
        if (std::abs(ip - Complex(i == j ? 1.0 : 0.0)) > tol.eps_char) orthonormal = false;
      }
    }
    if (orthonormal && sum_sq == group->order()) return table;
  }
  throw NumericalError("character table: no separating class-sum combination found for " +
                       group->name());
}

std::vector<int> multiplicity_vector(const Character& chi, const CharacterTable& table,
                                     const Tolerances& tol) {
  if (chi.values.size() != table.rows.front().values.size())
    throw DomainError("character and table belong to different groups");
  std::vector<int> mult;
  for (const auto& row : table.rows) {
    const Complex ip = inner_product(row, chi);
    const double rounded = std::round(ip.real());
    if (std::abs(ip - Complex(rounded)) > tol.eps_char || rounded < 0)
      throw DomainError("non-integral or negative multiplicity " + std::to_string(ip.real()) + "+" +
                        std::to_string(ip.imag()) + "i");
    mult.push_back(static_cast<int>(rounded));
  }
  return mult;
}

CommutantShape multiplicities(const Character& chi, const CharacterTable& table,
                              const Tolerances& tol) {
  const auto mult = multiplicity_vector(chi, table, tol);
  CommutantShape shape;
  for (size_t i = 0; i < mult.size(); ++i)
    if (mult[i] > 0) {
      shape.irreducibles.push_back(static_cast<int>(i));
      shape.multiplicities.push_back(mult[i]);
    }
  if (shape.multiplicities.empty()) throw DomainError("zero character has no commutant shape");
  return shape;
}

CommutantShape multiplicities(const Representation& rep, const CharacterTable& table,
                              const Tolerances& tol) {
  return multiplicities(character_of(rep), table, tol);
}

Character character_from_multiplicities(const std::vector<int>& mult, const CharacterTable& table) {
  Character chi{table.group, std::vector<Complex>(table.rows.front().values.size(), 0.0)};
  for (size_t i = 0; i < mult.size(); ++i)
    for (size_t c = 0; c < chi.values.size(); ++c)
      chi.values[c] += static_cast<double>(mult[i]) * table.rows[i].values[c];
  return chi;
}

Representation restrict_rep(const Representation& rep, const Subgroup& k) {
  if (k.parent->table() != rep.group->table())
    throw DomainError("subgroup is not a subgroup of the representation's group");
  Representation out{k.group, rep.dim, {}};
  for (int g : k.elements) out.mats.push_back(rep.mats[g]);
  return out;
}

bool is_isomorphic(const Character& v, const Character& w, const Tolerances& tol) {
  if (v.group->table() != w.group->table()) throw DomainError("characters of different groups");
  return max_abs_difference(v, w) <= tol.eps_char;
}

bool is_isomorphic(const Representation& v, const Representation& w, const Tolerances& tol) {
  return is_isomorphic(character_of(v), character_of(w), tol);
}

double intertwining_residual(const CMatrix& t, const Representation& v, const Representation& w) {
  const double scale = std::max(1.0, t.norm());
  double worst = 0.0;
  for (size_t g = 0; g < v.mats.size(); ++g)
    worst = std::max(worst, (t * v.mats[g] - w.mats[g] * t).norm() / scale);
  return worst;
}

CMatrix random_intertwiner(const Representation& v, const Representation& w, std::uint64_t seed,
                           const Tolerances& tol) {
  if (v.dim != w.dim) throw DomainError("intertwiner between representations of different dimension");
  if (!is_isomorphic(v, w, tol)) throw DomainError("intertwiner requested for non-isomorphic representations");
  const auto& group = *v.group;
  std::mt19937_64 rng(seed);
  constexpr int kRetryBudget = 10;
  for (int attempt = 0; attempt < kRetryBudget; ++attempt) {
    const CMatrix r = random_matrix(w.dim, v.dim, rng);
    CMatrix t = CMatrix::Zero(w.dim, v.dim);
    for (int g = 0; g < group.order(); ++g) t += w.mats[g] * r * v.mats[group.inv(g)];
    t /= static_cast<double>(group.order());
    if (smallest_singular_value(t) > tol.eps_sing && intertwining_residual(t, v, w) <= tol.eps_mat)
      return t;
  }
  throw NumericalError("random_intertwiner: retry budget exhausted");
}

std::vector<Representation> irreducible_representations(const CharacterTable& table,
                                                        std::uint64_t seed,
                                                        const Tolerances& tol) {
  const auto& group = table.group;
  const int n = group->order();
  const Representation reg = regular_rep(group);
  std::mt19937_64 rng(seed);
  std::vector<Representation> irreps;
  for (int i = 0; i < table.size(); ++i) {
    const int d = table.dims[i];
    CMatrix projector = CMatrix::Zero(n, n);
    for (int g = 0; g < n; ++g) projector += std::conj(table.rows[i].at(g)) * reg.mats[g];
    projector *= static_cast<double>(d) / n;
    // Orthonormal basis of the isotypic component (dimension d^2).
    Eigen::SelfAdjointEigenSolver<CMatrix> proj_eig((projector + projector.adjoint()) / 2.0);
    const CMatrix basis = proj_eig.eigenvectors().rightCols(d * d);
    Representation block{group, d * d, {}};
    for (int g = 0; g < n; ++g) block.mats.push_back(basis.adjoint() * reg.mats[g] * basis);

    bool done = false;
    for (int attempt = 0; attempt < 10 && !done; ++attempt) {
      // A random Hermitian commutant element splits d U into d copies of U.
      CMatrix r = random_matrix(d * d, d * d, rng);
      r = (r + r.adjoint()).eval();
      CMatrix h = CMatrix::Zero(d * d, d * d);
      for (int g = 0; g < n; ++g) h += block.mats[g] * r * block.mats[g].adjoint();
      Eigen::SelfAdjointEigenSolver<CMatrix> h_eig((h + h.adjoint()) / 2.0);
      const auto& lambda = h_eig.eigenvalues();
      if (d < d * d && lambda(d) - lambda(d - 1) < 1e-3 * std::max(1.0, lambda.cwiseAbs().maxCoeff()))
        continue;
      const CMatrix sub = h_eig.eigenvectors().leftCols(d);
      Representation irrep{group, d, {}};
      for (int g = 0; g < n; ++g) irrep.mats.push_back(sub.adjoint() * block.mats[g] * sub);
      if (homomorphism_residual(irrep) <= tol.eps_mat &&
          max_abs_difference(character_of(irrep), table.rows[i]) <= tol.eps_char) {
        irreps.push_back(std::move(irrep));
        done = true;
      }
    }
    if (!done) throw NumericalError("could not split isotypic component " + std::to_string(i));
  }
  return irreps;
}

}  // namespace clutchlab
