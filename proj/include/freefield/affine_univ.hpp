#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "freefield/rational.hpp"
#include "freefield/rootlie.hpp"

namespace freefield::affine {

using rootlie::ChevalleyBasis;
using rootlie::LieElement;
using rootlie::SeriesLabel;
using rootlie::Weight;

inline constexpr int kDefaultCutoff = 3;

struct AffineLevel {
  SeriesLabel label;
  Rational k;
};

/// Canonical PBW monomial: sorted keys, each encoding (basis index, mode n < 0).
/// More negative modes come first, then the Chevalley basis order.
using PBWMonomial = std::vector<std::uint32_t>;
using PBWVector = std::map<PBWMonomial, Rational>;

std::uint32_t pbw_key(std::size_t idx, int mode);
std::size_t key_index(std::uint32_t key);
int key_mode(std::uint32_t key);
/// Conformal degree: minus the sum of the modes.
int degree(const PBWMonomial& m);

/// Universal affine vertex algebra N(k Lambda_0), truncated at a degree cutoff.
class AffineAlgebra {
 public:
  AffineAlgebra(const SeriesLabel& label, Rational k, int cutoff = kDefaultCutoff);
  AffineAlgebra(std::shared_ptr<const ChevalleyBasis> basis, Rational k, int cutoff = kDefaultCutoff);

  const ChevalleyBasis& basis() const { return *basis_; }
  std::shared_ptr<const ChevalleyBasis> shared_basis() const { return basis_; }
  AffineLevel level() const { return {basis_->root_system().label(), k_}; }
  const Rational& k() const { return k_; }
  int cutoff() const { return cutoff_; }
  AffineAlgebra with_level(const Rational& k) const { return AffineAlgebra(basis_, k, cutoff_); }

  PBWVector vacuum() const;

  /// x(n) v for a Chevalley basis element x, straightened into PBW form.
  /// Throws CutoffExceeded when the result would lie above the cutoff.
  PBWVector act_mode(std::size_t x, int n, const PBWVector& v) const;
  /// Same for a linear combination x.
  PBWVector act(const LieElement& x, int n, const PBWVector& v) const;

  /// Canonical monomials of degree d, optionally restricted to a weight.
  std::vector<PBWMonomial> pbw_basis(int d, const std::optional<Weight>& weight = std::nullopt) const;

  Weight weight(const PBWMonomial& m) const;
  /// Weight of a homogeneous vector; nullopt if the vector is zero or not homogeneous.
  std::optional<Weight> weight(const PBWVector& v) const;
  std::optional<int> degree(const PBWVector& v) const;

  std::string to_string(const PBWVector& v) const;

 private:
  void apply_into(std::size_t x, int n, const std::uint32_t* m, std::size_t len, const Rational& coef,
                  PBWVector& out) const;

  std::shared_ptr<const ChevalleyBasis> basis_;
  Rational k_;
  int cutoff_;
};

void prune(PBWVector& v);
void add_scaled(PBWVector& y, const Rational& a, const PBWVector& x);

struct SingularResult {
  bool singular = false;
  std::string failing_operator;  // e.g. "e1(0)" or "f_theta(1)"
  PBWVector witness;
};

/// True iff e_i(0) v = 0 for all simple i and f_theta(1) v = 0.
SingularResult is_singular(const AffineAlgebra& alg, const PBWVector& v);

/// Degree-graded dimensions of the submodule generated from v by all modes x(n), up to degree D.
std::map<int, std::size_t> ideal_graded_dims(const AffineAlgebra& alg, const PBWVector& v, int max_degree);

// ---------------------------------------------------------------------------
// Type A in matrix-unit language
// ---------------------------------------------------------------------------

/// (i, j), 1-based, for the A root eps_i - eps_j.
std::pair<int, int> gl_indices(const Weight& root);

/// Signs c_alpha such that e_alpha -> c_alpha X_ij, e_{-alpha} -> c_alpha X_ji,
/// h_k -> X_{k+1,k+1} - X_kk is a Lie map onto the bilinears X_ij with
/// [X_ij, X_kl] = delta_il X_kj - delta_jk X_il. Indexed like the positive roots.
std::vector<int> gl_realization_signs(const ChevalleyBasis& basis);

// ---------------------------------------------------------------------------
// Explicit singular vectors
// ---------------------------------------------------------------------------

enum class VectorKind { A_type, D_type, E6 };

struct ExplicitVector {
  VectorKind kind;
  int rank;  // the l of A_type(l) / D_type(l); 6 for E6
  AffineAlgebra algebra;
  PBWVector vector;
  std::string formula;  // human-readable form
};

/// A_type(l) at k = -1 on A_{l-1} (l >= 3), D_type(l) at k = 2 - l on D_l (l >= 3),
/// E6 at k = -3. Relative signs of the D and E6 terms come from the sign table.
ExplicitVector build_paper_vector(VectorKind kind, int rank = 0, int cutoff = kDefaultCutoff);

/// Root labels of the quadratic terms of the D and E6 vectors (pairs of commuting root vectors).
std::vector<std::pair<std::string, std::string>> quadratic_terms(VectorKind kind, int rank);

/// Frozen relative signs of the quadratic terms (first sign +1), if tabulated.
std::optional<std::vector<int>> sign_table(VectorKind kind, int rank);

/// Solves for the relative signs that make the quadratic vector singular: the kernel of the
/// raising operators on the span of the terms must be one-dimensional with +-1 entries.
/// Throws VerificationFailed otherwise.
std::vector<int> derive_signs(VectorKind kind, int rank);

}  // namespace freefield::affine
