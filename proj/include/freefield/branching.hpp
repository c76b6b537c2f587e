#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "freefield/rational.hpp"
#include "freefield/rootlie.hpp"

namespace freefield::branching {

using rootlie::RootSystem;
using rootlie::SeriesLabel;
using rootlie::Weight;

/// -(level) Lambda_0 written as k Lambda_0 + finite_part.
struct AffineHighestWeight {
  SeriesLabel label;
  Rational level;
  Weight finite_part;
  std::vector<long> labels;  // Dynkin labels of finite_part
  std::string notation;      // e.g. "-3L0+2L1"
};

/// (mu, mu + 2 rho) / (2 (k + h)) - s^2 / (2 heis_norm). Throws Criticality, InvalidArgument.
Rational lowest_conformal_weight(const RootSystem& rs, const Rational& k, const Weight& mu, const Rational& heis_norm,
                                 long s);

/// k dim g / (k + h). Throws Criticality.
Rational central_charge(const RootSystem& rs, const Rational& k);

using FusionLabel = long;

/// pi_a x pi_b = pi_{a+b}.
FusionLabel fusion_product(FusionLabel a, FusionLabel b);

struct MonoidCheck {
  bool associative = true;
  bool commutative = true;
  bool unital = true;
  bool inverses = true;
  long checked_triples = 0;
  std::optional<std::string> witness;
  bool ok() const { return associative && commutative && unital && inverses; }
};

/// Exhaustive check of the fusion monoid axioms on |a|, |b|, |c| <= range.
MonoidCheck check_fusion_monoid(long range);

struct BranchComponent {
  long dim = 0;
  Rational h_eigenvalue;
  std::vector<long> d5_labels;
  std::string highest_weight_vector;  // Chevalley basis name, e.g. "e[(234)]"
  std::string root_label;             // shorthand, e.g. "(234)" or "e5+e4"; empty for Cartan vectors
};

struct E6Branching {
  std::vector<BranchComponent> components;  // ordered: adjoint, trivial, H = +1, H = -1
  Rational h_norm;                          // <H, H> in the normalized form
  long total_dim = 0;
};

/// Decomposes the adjoint of E6 under the embedded D5 + C H. Throws VerificationFailed.
E6Branching finite_e6_branching();

struct ClassificationFamily {
  std::string algebra;           // "A_{l-1}", "C_l", ...
  std::string vertex_algebra;    // the VOA whose modules are listed
  std::vector<std::string> members;  // parameterized by s in Z>=0
  std::vector<std::string> sporadic;
  std::string note;
};

std::vector<ClassificationFamily> classification_tables();

/// pi_s for the A family: -(s+1)L0 + sL1 (s >= 0), (s-1)L0 - sL_{l-1} (s < 0), on A_{l-1}.
AffineHighestWeight a_family_weight(int ell, long s);
/// -(s+3)L0 + sL4 (s >= 0), (s-3)L0 - sL5 (s < 0), on D5.
AffineHighestWeight d5_family_weight(long s);

enum class ReportFamily { A_in_Weyl, E6_over_D5 };

struct ReportCheck {
  std::string name;
  bool passed = false;
  std::optional<std::string> witness;
};

struct ReportRow {
  long s = 0;
  AffineHighestWeight weight;
  std::string heisenberg;  // "M(1,s)"
  Rational lowest_weight;
  std::vector<Rational> degrees;
  std::vector<long> dims;
  std::vector<long> quotient;
  std::vector<ReportCheck> checks;
  bool passed() const;
};

struct DecompositionReport {
  ReportFamily family;
  int ell = 0;
  Rational max_degree;
  std::vector<ReportRow> rows;
  std::vector<ReportCheck> global_checks;
  std::string scope;
  bool passed() const;
};

inline constexpr const char* kReportVersion = "1";

/// A_in_Weyl: fock-verified rows for s in [s_min, s_max] up to degree |s|/2 + max_degree.
/// E6_over_D5: label-level rows (conformal weights, charges, singular vectors in the affine E6 algebra).
DecompositionReport decomposition_report(ReportFamily family, int ell, long s_min, long s_max,
                                         const Rational& max_degree);

nlohmann::ordered_json to_json(const DecompositionReport& report);
nlohmann::ordered_json to_json(const E6Branching& b);
nlohmann::ordered_json to_json(const std::vector<ClassificationFamily>& tables);

std::string family_name(ReportFamily f);

}  // namespace freefield::branching
