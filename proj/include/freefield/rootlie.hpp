#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "freefield/rational.hpp"

namespace freefield::rootlie {

enum class Series { A, B, C, D, E, F };

struct SeriesLabel {
  Series series = Series::A;
  int rank = 1;

  /// Throws ErrorKind::UnsupportedLabel outside A1-16, B2-16, C2-16, D3-16, E6, F4.
  void validate() const;

  friend bool operator==(const SeriesLabel&, const SeriesLabel&) = default;
};

std::string to_string(const SeriesLabel& label);
/// Accepts "A", "B", ... (case-insensitive) together with a rank.
SeriesLabel make_label(std::string_view series, int rank);

/// A weight in the epsilon (orthonormal) realization.
struct Weight {
  RationalVector coords;

  Weight() = default;
  explicit Weight(std::size_t n) : coords(n, Rational(0)) {}
  explicit Weight(RationalVector c) : coords(std::move(c)) {}

  std::size_t size() const { return coords.size(); }
  const Rational& operator[](std::size_t i) const { return coords[i]; }
  Rational& operator[](std::size_t i) { return coords[i]; }
  bool is_zero() const;

  Weight& operator+=(const Weight& o);
  Weight& operator-=(const Weight& o);
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator-(Weight a);
  friend Weight operator*(const Rational& s, Weight a);
  friend bool operator==(const Weight& a, const Weight& b) { return a.coords == b.coords; }
  friend bool operator<(const Weight& a, const Weight& b) { return a.coords < b.coords; }
};

std::string to_string(const Weight& w);

/// Root system of one finite type with its epsilon realization.
///
/// Positive roots are ordered by height, ties broken by descending
/// lexicographic order of epsilon coordinates. The bilinear form is the
/// standard dot product times a type-dependent scale so that the highest
/// root has squared length two.
class RootSystem {
 public:
  static RootSystem build(const SeriesLabel& label);

  const SeriesLabel& label() const { return label_; }
  int rank() const { return label_.rank; }
  std::size_t ambient_dim() const { return ambient_dim_; }

  const std::vector<Weight>& positive_roots() const { return positive_; }
  const std::vector<Weight>& simple_roots() const { return simple_; }
  const std::vector<Weight>& fundamental_weights() const { return fundamental_; }
  const Weight& rho() const { return rho_; }
  const Weight& highest_root() const { return positive_.back(); }
  int dual_coxeter() const { return dual_coxeter_; }
  int dim_algebra() const { return 2 * static_cast<int>(positive_.size()) + rank(); }

  /// Symmetric form, (theta, theta) = 2. Throws on dimension mismatch.
  Rational inner_product(const Weight& a, const Weight& b) const;

  /// Cartan matrix entries a_ij = <alpha_i^vee, alpha_j>.
  const std::vector<std::vector<int>>& cartan_matrix() const { return cartan_; }

  /// <w, alpha_i^vee> for every simple root.
  RationalVector dynkin_labels(const Weight& w) const;
  /// Integer Dynkin labels; throws NotDominantIntegral if w is not integral.
  std::vector<long> integral_labels(const Weight& w) const;
  Weight from_dynkin(const std::vector<long>& labels) const;
  Weight from_dynkin(const RationalVector& labels) const;

  bool is_integral(const Weight& w) const;
  bool is_dominant_integral(const Weight& w) const;

  /// Coefficients of a root lattice element in the simple roots.
  std::vector<long> simple_coefficients(const Weight& w) const;
  /// Height of a positive or negative root.
  long height(const Weight& root) const;

  /// Index into positive_roots() when root is positive; nullopt otherwise.
  std::optional<std::size_t> positive_index(const Weight& root) const;
  /// True for any (positive or negative) root.
  bool is_root(const Weight& w) const;

  /// Coefficients of alpha^vee in the simple coroots.
  std::vector<long> coroot_coefficients(const Weight& root) const;

  /// (w, w) scale factor relative to the plain dot product.
  const Rational& form_scale() const { return scale_; }

 private:
  SeriesLabel label_;
  std::size_t ambient_dim_ = 0;
  Rational scale_ = 1;
  std::vector<Weight> positive_;
  std::vector<Weight> simple_;
  std::vector<Weight> fundamental_;
  Weight rho_;
  int dual_coxeter_ = 0;
  std::vector<std::vector<int>> cartan_;
  std::vector<RationalVector> gram_inverse_;  // inverse of ((alpha_i, alpha_j))
  std::map<Weight, std::size_t> positive_lookup_;
};

/// prod_{alpha>0} (lam+rho, alpha)/(rho, alpha). Throws NotDominantIntegral.
Integer weyl_dimension(const RootSystem& rs, const Weight& lam);

/// Sparse integer combination of Chevalley basis elements.
using IntTerms = std::vector<std::pair<std::size_t, long>>;

/// A Lie algebra element in Chevalley coordinates (dense).
using LieElement = RationalVector;

/// Chevalley basis {e_alpha, h_i} with integral structure constants.
///
/// Basis order: e_alpha for positive roots (root-system order), then
/// e_{-alpha} in the same order, then the simple coroots h_1..h_r.
/// N_{alpha,beta} = +(p+1) on extraspecial pairs; every other constant is
/// derived from the standard relations. [e_alpha, e_{-alpha}] = h_alpha.
class ChevalleyBasis {
 public:
  explicit ChevalleyBasis(RootSystem rs);

  const RootSystem& root_system() const { return rs_; }
  std::size_t dim() const { return dim_; }
  std::size_t num_positive() const { return npos_; }

  /// Index of e_root for a positive or negative root. Throws UnresolvedRootLabel.
  std::size_t root_vector(const Weight& root) const;
  std::size_t cartan(std::size_t i) const { return 2 * npos_ + i; }
  bool is_cartan(std::size_t idx) const { return idx >= 2 * npos_; }
  /// Root carried by a root vector; zero weight for Cartan elements.
  const Weight& weight(std::size_t idx) const { return weights_[idx]; }
  /// e_{-alpha} for e_alpha, and h_i for h_i.
  std::size_t opposite(std::size_t idx) const;

  /// Index of e_{alpha_i} / e_{-alpha_i} for the i-th simple root.
  std::size_t simple_raising(std::size_t i) const;
  std::size_t simple_lowering(std::size_t i) const;
  std::size_t highest_root_vector() const { return npos_ - 1; }
  std::size_t lowest_root_vector() const { return 2 * npos_ - 1; }

  /// [x_i, x_j] as sparse integer terms.
  const IntTerms& bracket(std::size_t i, std::size_t j) const { return table_[i * dim_ + j]; }
  LieElement bracket(const LieElement& x, const LieElement& y) const;

  /// Invariant form normalized so that (theta, theta) = 2.
  Rational form(std::size_t i, std::size_t j) const;

  /// N_{alpha,beta} for roots alpha, beta (0 when alpha+beta is not a root).
  long structure_constant(const Weight& alpha, const Weight& beta) const;

  /// Extraspecial pair of a non-simple positive root.
  std::pair<Weight, Weight> extraspecial_pair(const Weight& xi) const;

  std::string basis_name(std::size_t idx) const;

  LieElement unit(std::size_t idx) const;

 private:
  long compute_n(std::size_t a, std::size_t b);
  std::optional<std::size_t> root_id(const Weight& w) const;

  RootSystem rs_;
  std::size_t npos_ = 0;
  std::size_t dim_ = 0;
  std::vector<Weight> weights_;
  std::map<Weight, std::size_t> root_lookup_;
  std::map<std::size_t, std::pair<std::size_t, std::size_t>> extraspecial_;
  std::map<std::pair<std::size_t, std::size_t>, long> n_memo_;
  std::vector<IntTerms> table_;
  std::vector<Rational> root_form_;  // 2/(alpha,alpha) per root vector
};

ChevalleyBasis chevalley_constants(const RootSystem& rs);

/// Exhaustive Jacobi identity check on all basis triples. Returns the first
/// failing triple, if any.
std::optional<std::tuple<std::size_t, std::size_t, std::size_t>> find_jacobi_violation(
    const ChevalleyBasis& basis);

/// Resolves root labels: "e1-e4", "e5+e4", "-e2-e3", "2e1" (epsilon notation)
/// and, for E6, the shorthand "(S)" = 1/2(e8 - e7 - e6 + sum_{i in S} e_i - sum_{i notin S} e_i)
/// with S an odd-size subset of {1..5}. Throws UnresolvedRootLabel.
Weight resolve_root_label(const RootSystem& rs, std::string_view label);

enum class EmbeddingName { D5_in_E6, C_in_A };

struct EmbeddingSpec {
  EmbeddingName name;
  SeriesLabel ambient;
  SeriesLabel sub;
  std::vector<LieElement> raising;   // images of the sub-algebra e_i
  std::vector<LieElement> lowering;  // images of f_i
  std::vector<LieElement> cartan;    // images of h_i = [e_i, f_i]
  LieElement cartan_element_H;       // empty when the centralizer is not used
  std::vector<std::string> generator_labels;
};

/// Builds and verifies an embedding (Serre relations of the sub-algebra on the
/// images, and [H, generators] = 0). `rank` is the C rank for C_in_A.
/// Throws VerificationFailed on a sign-convention bug.
EmbeddingSpec build_embedding(const ChevalleyBasis& ambient, EmbeddingName name, int rank = 0);

/// Dimension of the Lie subalgebra generated by the given elements.
std::size_t generated_subalgebra_dim(const ChevalleyBasis& basis, const std::vector<LieElement>& gens);

/// Element h of the Cartan subalgebra with alpha(h) = functional . alpha for all roots.
LieElement cartan_element_from_functional(const ChevalleyBasis& basis, const RationalVector& functional);

}  // namespace freefield::rootlie
