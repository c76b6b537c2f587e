#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "freefield/affine_univ.hpp"
#include "freefield/rational.hpp"

namespace freefield::fock {

enum class Sign { Plus, Minus };

/// a_i^{+-}(r) with r in 1/2 + Z, stored as the odd integer 2r.
struct WeylMode {
  int species = 1;  // 1..l
  Sign sign = Sign::Plus;
  int twice_index = -1;

  static WeylMode make(int species, Sign sign, const Rational& index);
  Rational index() const { return frac(twice_index, 2); }
  bool creation() const { return twice_index < 0; }
};

/// Sorted creation-mode keys: larger |r| first, then species, then plus before minus.
using FockMonomial = std::vector<std::uint32_t>;
using FockVector = std::map<FockMonomial, Rational>;

std::uint32_t mode_key(const WeylMode& creation_mode);
WeylMode key_to_mode(std::uint32_t key);

/// Twice the conformal degree (sum of |r|).
int twice_degree(const FockMonomial& m);
Rational degree(const FockMonomial& m);
/// #plus - #minus.
int charge(const FockMonomial& m);
/// gl(l) weight: +e_i per a_i^+, -e_i per a_i^-.
std::vector<int> gl_weight(int ell, const FockMonomial& m);

FockVector vacuum();
void add_scaled(FockVector& y, const Rational& a, const FockVector& x);
std::string to_string(const FockVector& v);

/// Throws InvalidArgument when the species exceeds l.
FockVector apply_weyl_mode(int ell, const WeylMode& mode, const FockVector& v);

/// Linear combination of the bilinears X_ij = a_i^+(-1/2) a_j^-(-1/2) 1.
struct GlElement {
  std::map<std::pair<int, int>, Rational> terms;

  static GlElement X(int i, int j, const Rational& c = 1);
  /// H = -sum_i X_ii.
  static GlElement H(int ell);
  GlElement& add(const GlElement& o, const Rational& c = 1);
  bool is_zero() const;
  friend bool operator==(const GlElement&, const GlElement&) = default;
};

/// [X_ij, X_kl] = delta_il X_kj - delta_jk X_il.
GlElement gl_bracket(const GlElement& x, const GlElement& y);
/// Level-one pairing <X_ij, X_kl> = delta_jk delta_il (the currents realize level -1).
Rational gl_form(const GlElement& x, const GlElement& y);

/// x(n) v with X_ij(n) = sum_p :a_i^+(p) a_j^-(n - p):, annihilators to the right.
FockVector apply_current(int ell, const GlElement& x, int n, const FockVector& v);

/// Normalization: e = X_ij, f = X_ji, h = X_jj - X_ii.
GlElement gl_image(const affine::ChevalleyBasis& basis, const std::vector<int>& signs, std::size_t idx);

struct SectorIndex {
  int ell = 3;
  int charge = 0;
  Rational cutoff = 3;  // max conformal degree D
};

inline constexpr std::size_t kDefaultSectorBound = 200000;

/// Monomials of degree d and the given charge, sorted.
std::vector<FockMonomial> sector_basis(int ell, int s, const Rational& d);

struct ConformalVectors {
  FockVector omega;
  FockVector omega_sug;
  FockVector omega_one;
};

ConformalVectors conformal_vectors(int ell);

/// Phi: N_{A_{l-1}}(-Lambda_0) -> M_l, PBW monomials applied right to left.
FockVector phi_image(int ell, const affine::AffineAlgebra& alg, const affine::PBWVector& v);

/// a_1^+(-1/2)^s 1 for s >= 0, a_l^-(-1/2)^{-s} 1 for s < 0.
FockVector lowest_vector(int ell, int s);

/// e_i(0) = X_{i,i+1}(0), f_theta(1) = X_{l,1}(1), H(n) for 1 <= n <= max_h_mode.
struct RaisingOperator {
  std::string name;
  GlElement x;
  int mode;
};
std::vector<RaisingOperator> raising_operators(int ell, int max_h_mode);

struct ScanCell {
  Rational degree;
  std::size_t sector_dim = 0;
  std::size_t kernel_dim = 0;
  std::vector<FockVector> extra;  // kernel vectors beyond the expected lowest-weight vector
};

struct ScanResult {
  SectorIndex index;
  bool lowest_singular = false;  // the expected vector lies in the kernel
  std::vector<ScanCell> cells;
  bool clean() const;
};

/// Kernel of the raising operators on every sector degree up to the cutoff.
/// Throws BoundExceeded if a sector is larger than bound.
ScanResult singular_scan(const SectorIndex& idx, std::size_t bound = kDefaultSectorBound);

struct GradedCharacter {
  SectorIndex index;
  std::vector<Rational> degrees;
  std::vector<long> dims;
  std::vector<std::map<std::vector<int>, long>> weights;
  std::vector<long> quotient;  // dims * prod_{n>=1} (1 - q^n), from the lowest degree
  /// The same division for each gl(l) weight separately (H modes have weight zero).
  std::map<std::vector<int>, std::vector<long>> weight_quotient;
  /// gl(l) weight of the lowest vector: s e_1 or -|s| e_l.
  std::vector<int> top_weight;
};

/// Throws NonIntegralQuotient if strict and a quotient has a negative coefficient,
/// or the top weight does not start with coefficient 1.
GradedCharacter graded_character(const SectorIndex& idx, bool strict = true,
                                 std::size_t bound = kDefaultSectorBound);

struct PropertyReport {
  std::size_t ccr_checks = 0;
  std::size_t affine_checks = 0;
  std::size_t charge_checks = 0;
  std::vector<std::string> failures;  // first few, human-readable
  std::size_t failure_count = 0;
  bool ok() const { return failure_count == 0; }
};

/// Sampled CCR, level -1 affine relations and charge additivity on monomials of degree <= 3.
/// The seed only changes which samples are drawn.
PropertyReport property_suite(int ell, std::size_t samples, std::uint64_t seed);

/// Dimensions of the gl(l)-invariant part of the charge-zero sector, degrees 0..D.
std::vector<std::size_t> gl_invariant_dims(int ell, int max_degree, std::size_t bound = kDefaultSectorBound);

}  // namespace freefield::fock
