#include "freefield/branching.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <sstream>

#include "freefield/affine_univ.hpp"
#include "freefield/charact.hpp"
#include "freefield/error.hpp"
#include "freefield/fock.hpp"
#include "freefield/linalg.hpp"

namespace freefield::branching {

using rootlie::ChevalleyBasis;
using rootlie::LieElement;
using rootlie::Series;

namespace {

std::string lambda_term(const Rational& c, const std::string& name, bool first) {
  std::ostringstream os;
  if (c < 0) os << "-";
  else if (!first) os << "+";
  Rational a = abs(c);
  if (a != 1) os << to_string(a);
  os << name;
  return os.str();
}

/// k0 L0 + k_i L_i
std::string affine_notation(const Rational& k0, long ki, const std::string& li) {
  std::string out = lambda_term(k0, "L0", true);
  if (ki != 0) out += lambda_term(ki, li, false);
  return out;
}

/// Coefficient c with [x, unit(idx)] = c unit(idx); throws if unit(idx) is not an eigenvector.
Rational ad_eigenvalue(const ChevalleyBasis& b, const LieElement& x, std::size_t idx) {
  LieElement y = b.bracket(x, b.unit(idx));
  Rational c = y[idx];
  for (std::size_t j = 0; j < y.size(); ++j)
    if (j != idx && y[j] != 0) throw Error(ErrorKind::VerificationFailed, "basis vector is not an ad-eigenvector");
  return c;
}

/// "(S)" for half-integral E6 roots, epsilon notation otherwise.
std::string e6_shorthand(const Weight& root) {
  if (is_integer(root[0])) {
    std::string out;
    for (std::size_t i = root.size(); i-- > 0;) {
      if (root[i] == 0) continue;
      if (!out.empty() || root[i] < 0) out += root[i] < 0 ? "-" : "+";
      out += "e" + std::to_string(i + 1);
    }
    return out;
  }
  if (root[7] < 0) return "-" + e6_shorthand(-root);
  std::string s = "(";
  for (std::size_t i = 0; i < 5; ++i)
    if (root[i] > 0) s += std::to_string(i + 1);
  return s + ")";
}

Rational lie_form(const ChevalleyBasis& b, const LieElement& x, const LieElement& y) {
  Rational s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j)
      if (y[j] != 0) s += x[i] * y[j] * b.form(i, j);
  }
  return s;
}

ReportCheck make_check(std::string name, bool ok, std::optional<std::string> witness = std::nullopt) {
  ReportCheck c{std::move(name), ok, std::nullopt};
  if (!ok) c.witness = witness ? std::move(witness) : std::optional<std::string>("check failed");
  return c;
}

std::vector<long> gl_to_labels(const std::vector<int>& w) {
  std::vector<long> out;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) out.push_back(w[i] - w[i + 1]);
  return out;
}

ReportRow a_row(int ell, long s, const Rational& extra) {
  ReportRow row;
  row.s = s;
  row.weight = a_family_weight(ell, s);
  row.heisenberg = "M(1," + std::to_string(s) + ")";
  auto rs = RootSystem::build({Series::A, ell - 1});
  row.lowest_weight = lowest_conformal_weight(rs, -1, row.weight.finite_part, ell, s);
  const Rational low = frac(std::labs(s), 2);
  row.checks.push_back(make_check("lowest_weight_formula", row.lowest_weight == low,
                                  "formula gives " + to_string(row.lowest_weight)));

  fock::SectorIndex idx{ell, static_cast<int>(s), low + extra};
  auto ch = fock::graded_character(idx, false);
  row.degrees = ch.degrees;
  row.dims = ch.dims;
  row.quotient = ch.quotient;
  row.checks.push_back(make_check("lowest_degree", !ch.dims.empty() && ch.dims.front() > 0 && ch.degrees.front() == low,
                                  "sector empty at the lowest degree"));
  try {
    fock::graded_character(idx, true);
    row.checks.push_back(make_check("heisenberg_quotient", true));
  } catch (const Error& e) {
    row.checks.push_back(make_check("heisenberg_quotient", false, std::string(e.what())));
  }

  // Lowest component versus the character of V(|s| w1) or V(|s| w_{l-1}).
  std::map<std::vector<long>, long> fock_weights;
  for (const auto& [w, m] : ch.weights.front()) fock_weights[gl_to_labels(w)] += m;
  auto table = charact::weight_multiplicities(rs, row.weight.finite_part);
  row.checks.push_back(make_check("lowest_component", fock_weights == table.multiplicities,
                                  "gl-weights at the lowest degree differ from the finite character"));

  fock::FockVector lv = fock::lowest_vector(ell, static_cast<int>(s));
  fock::FockVector expect;
  fock::add_scaled(expect, s, lv);
  row.checks.push_back(make_check("heisenberg_charge",
                                  fock::apply_current(ell, fock::GlElement::H(ell), 0, lv) == expect,
                                  "H(0) does not act by s on the lowest vector"));

  auto scan = fock::singular_scan(idx);
  std::optional<std::string> witness;
  if (!scan.lowest_singular) witness = "lowest vector not singular";
  for (const auto& cell : scan.cells)
    if (!cell.extra.empty() && !witness)
      witness = "degree " + to_string(cell.degree) + ": " + fock::to_string(cell.extra.front());
  row.checks.push_back(make_check("singular_scan", scan.clean(), witness));
  return row;
}

struct D5Context {
  std::shared_ptr<const ChevalleyBasis> basis;
  rootlie::EmbeddingSpec emb;
  std::size_t f_theta = 0;  // lowest root vector of the embedded D5
};

D5Context d5_context() {
  D5Context ctx;
  ctx.basis = std::make_shared<ChevalleyBasis>(RootSystem::build({Series::E, 6}));
  ctx.emb = rootlie::build_embedding(*ctx.basis, rootlie::EmbeddingName::D5_in_E6);
  auto d5 = RootSystem::build({Series::D, 5});
  auto coeff = d5.simple_coefficients(d5.highest_root());
  Weight theta(ctx.basis->root_system().ambient_dim());
  for (std::size_t i = 0; i < coeff.size(); ++i) {
    auto it = std::find_if(ctx.emb.raising[i].begin(), ctx.emb.raising[i].end(), [](const Rational& c) { return c != 0; });
    std::size_t idx = static_cast<std::size_t>(it - ctx.emb.raising[i].begin());
    theta += Rational(coeff[i]) * ctx.basis->weight(idx);
  }
  ctx.f_theta = ctx.basis->root_vector(-theta);
  return ctx;
}

ReportRow e6_row(const D5Context& ctx, const E6Branching& fin, long s) {
  ReportRow row;
  row.s = s;
  row.weight = d5_family_weight(s);
  row.heisenberg = "M(1," + std::to_string(s) + ")";
  auto d5 = RootSystem::build({Series::D, 5});
  row.lowest_weight = lowest_conformal_weight(d5, -3, row.weight.finite_part, 4, s);
  row.checks.push_back(make_check("lowest_weight_formula", row.lowest_weight == std::labs(s),
                                  "formula gives " + to_string(row.lowest_weight)));

  const auto& comp = s >= 0 ? fin.components[2] : fin.components[3];
  row.checks.push_back(make_check("heisenberg_charge", comp.h_eigenvalue * std::labs(s) == s,
                                  "H-charge of the generator is " + to_string(comp.h_eigenvalue * std::labs(s))));
  std::vector<long> want(5, 0);
  want[s >= 0 ? 3 : 4] = std::labs(s);
  row.checks.push_back(make_check("d5_highest_weight", row.weight.labels == want && comp.d5_labels[s >= 0 ? 3 : 4] == 1,
                                  "generator weight does not match the family label"));

  const int deg = static_cast<int>(std::labs(s));
  if (deg <= affine::kDefaultCutoff) {
    affine::AffineAlgebra alg(ctx.basis, -3, std::max(deg, 1));
    const auto& rs = ctx.basis->root_system();
    std::size_t gen = ctx.basis->root_vector(rootlie::resolve_root_label(rs, comp.root_label));
    affine::PBWVector v = alg.vacuum();
    for (int i = 0; i < deg; ++i) v = alg.act_mode(gen, -1, v);
    std::optional<std::string> witness;
    for (std::size_t i = 0; i < ctx.emb.raising.size() && !witness; ++i)
      if (!alg.act(ctx.emb.raising[i], 0, v).empty()) witness = "e'" + std::to_string(i + 1) + "(0) v != 0";
    if (!witness && !alg.act_mode(ctx.f_theta, 1, v).empty()) witness = "f'_theta(1) v != 0";
    for (int n = 1; n <= deg && !witness; ++n)
      if (!alg.act(ctx.emb.cartan_element_H, n, v).empty()) witness = "H(" + std::to_string(n) + ") v != 0";
    row.degrees = {Rational(deg)};
    row.dims = {1};
    row.checks.push_back(make_check("d5_singular_in_e6", !v.empty() && !witness, witness));
  }
  return row;
}

}  // namespace

Rational lowest_conformal_weight(const RootSystem& rs, const Rational& k, const Weight& mu, const Rational& heis_norm,
                                 long s) {
  Rational shift = k + rs.dual_coxeter();
  if (shift == 0) throw Error(ErrorKind::Criticality, "k + h^vee = 0");
  if (heis_norm == 0) throw Error(ErrorKind::InvalidArgument, "Heisenberg norm must be nonzero");
  Weight two_rho = Rational(2) * rs.rho();
  return rs.inner_product(mu, mu + two_rho) / (2 * shift) - Rational(s * s) / (2 * heis_norm);
}

Rational central_charge(const RootSystem& rs, const Rational& k) {
  Rational shift = k + rs.dual_coxeter();
  if (shift == 0) throw Error(ErrorKind::Criticality, "k + h^vee = 0");
  return k * rs.dim_algebra() / shift;
}

FusionLabel fusion_product(FusionLabel a, FusionLabel b) { return a + b; }

MonoidCheck check_fusion_monoid(long range) {
  MonoidCheck m;
  auto fail = [&](bool& flag, const std::string& w) {
    flag = false;
    if (!m.witness) m.witness = w;
  };
  for (long a = -range; a <= range; ++a) {
    if (fusion_product(0, a) != a || fusion_product(a, 0) != a) fail(m.unital, "unit fails at " + std::to_string(a));
    if (fusion_product(a, -a) != 0) fail(m.inverses, "no inverse for " + std::to_string(a));
    for (long b = -range; b <= range; ++b) {
      if (fusion_product(a, b) != fusion_product(b, a))
        fail(m.commutative, "(" + std::to_string(a) + "," + std::to_string(b) + ")");
      for (long c = -range; c <= range; ++c) {
        ++m.checked_triples;
        if (fusion_product(fusion_product(a, b), c) != fusion_product(a, fusion_product(b, c)))
          fail(m.associative, "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")");
      }
    }
  }
  return m;
}

E6Branching finite_e6_branching() {
  auto ctx = d5_context();
  const auto& b = *ctx.basis;
  const auto& emb = ctx.emb;
  auto d5 = RootSystem::build({Series::D, 5});

  // Every Chevalley basis vector is a joint eigenvector of the D5 Cartan and H.
  using Key = std::pair<Rational, std::vector<long>>;
  std::map<Key, std::vector<std::size_t>> spaces;
  for (std::size_t idx = 0; idx < b.dim(); ++idx) {
    Rational h = ad_eigenvalue(b, emb.cartan_element_H, idx);
    std::vector<long> labels;
    for (const auto& c : emb.cartan) {
      Rational l = ad_eigenvalue(b, c, idx);
      if (!is_integer(l)) throw Error(ErrorKind::VerificationFailed, "non-integral D5 weight");
      labels.push_back(to_long(l));
    }
    spaces[{h, labels}].push_back(idx);
  }

  E6Branching out;
  for (const auto& [key, idxs] : spaces) {
    // Kernel of ad e'_i on the joint eigenspace.
    std::vector<linalg::SparseVector> images;
    for (std::size_t idx : idxs) {
      std::map<std::size_t, Rational> col;
      for (std::size_t i = 0; i < emb.raising.size(); ++i) {
        LieElement y = b.bracket(emb.raising[i], b.unit(idx));
        for (std::size_t j = 0; j < y.size(); ++j)
          if (y[j] != 0) col[i * b.dim() + j] += y[j];
      }
      images.push_back(linalg::from_map(col));
    }
    for (const auto& k : linalg::nullspace(images)) {
      bool dominant = std::all_of(key.second.begin(), key.second.end(), [](long l) { return l >= 0; });
      if (!dominant) throw Error(ErrorKind::VerificationFailed, "highest weight vector of non-dominant weight");
      BranchComponent comp;
      comp.h_eigenvalue = key.first;
      comp.d5_labels = key.second;
      comp.dim = to_long(Rational(rootlie::weyl_dimension(d5, d5.from_dynkin(key.second))));
      if (k.size() == 1 && !b.is_cartan(idxs[k.front().first])) {
        std::size_t idx = idxs[k.front().first];
        comp.highest_weight_vector = b.basis_name(idx);
        comp.root_label = e6_shorthand(b.weight(idx));
      } else {
        // The centralizer of D5 inside the Cartan: must be proportional to H.
        LieElement v(b.dim(), Rational(0));
        for (const auto& [j, c] : k) v[idxs[j]] = c;
        Rational ratio;
        bool prop = true;
        for (std::size_t j = 0; j < v.size(); ++j) {
          if (emb.cartan_element_H[j] == 0) {
            if (v[j] != 0) prop = false;
            continue;
          }
          Rational r = v[j] / emb.cartan_element_H[j];
          if (ratio == 0) ratio = r;
          else if (r != ratio) prop = false;
        }
        if (!prop) throw Error(ErrorKind::VerificationFailed, "unexpected Cartan highest weight vector");
        comp.highest_weight_vector = "H";
      }
      out.components.push_back(std::move(comp));
    }
  }
  auto rank = [](const BranchComponent& c) { return c.h_eigenvalue == 0 ? 0 : (c.h_eigenvalue > 0 ? 1 : 2); };
  std::stable_sort(out.components.begin(), out.components.end(), [&](const auto& x, const auto& y) {
    if (rank(x) != rank(y)) return rank(x) < rank(y);
    return x.dim > y.dim;
  });
  for (const auto& c : out.components) out.total_dim += c.dim;
  if (out.total_dim != static_cast<long>(b.dim()) || out.components.size() != 4)
    throw Error(ErrorKind::VerificationFailed, "branching does not exhaust the adjoint");
  out.h_norm = lie_form(b, emb.cartan_element_H, emb.cartan_element_H);
  return out;
}

std::vector<ClassificationFamily> classification_tables() {
  return {
      {"A_{l-1}", "L_{A_{l-1}}(-L0), l >= 3", {"-(s+1)L0+sL1", "-(s+1)L0+sL_{l-1}"}, {},
       "also the complete list for the simple quotient of N_{A_{l-1}}(-L0) by the explicit singular vector"},
      {"C_l", "L_{C_l}(-L0), l >= 3", {"-(s+1)L0+sL1"}, {"-2L0+L2"},
       "via the conformal embedding into L_{A_{2l-1}}(-L0); M_{2l} is completely reducible"},
      {"D_l", "N_{D_l}((2-l)L0) / <v>", {"-(s+l-2)L0+sL_{l-1}", "-(s+l-2)L0+sL_l"}, {},
       "for l odd (D_{2m-1}) the same list is complete for the simple quotient"},
      {"D_5", "L~_{D_5}(-3L0) inside L_{E_6}(-3L0)", {"-(s+3)L0+sL4", "-(s+3)L0+sL5"}, {},
       "L_{E_6}(-3L0) = sum_{s>=0} L_{D_5}(-(s+3)L0+sL4) x M(1,s) + sum_{s<0} L_{D_5}((s-3)L0-sL5) x M(1,s)"},
      {"B_4", "L_{F_4}(-3L0) over L_{B_4}(-3L0) x M(1)^+", {"-(s+3)L0+sL4"}, {"-3L0", "-4L0+L1"},
       "label-level only: -3L0 pairs with M(1)^+, -4L0+L1 with M(1)^-, and -(s+3)L0+sL4 (s > 0) with M(1,s); "
       "orbifold characters are not computed; c(F4,-3) = c(B4,-3) + 1"},
  };
}

AffineHighestWeight a_family_weight(int ell, long s) {
  if (ell < 3) throw Error(ErrorKind::InvalidArgument, "the A family needs l >= 3");
  auto rs = RootSystem::build({Series::A, ell - 1});
  AffineHighestWeight w;
  w.label = rs.label();
  w.level = -1;
  w.labels.assign(ell - 1, 0);
  if (s >= 0) {
    w.labels[0] = s;
    w.notation = affine_notation(-(s + 1), s, "L1");
  } else {
    w.labels[ell - 2] = -s;
    w.notation = affine_notation(s - 1, -s, "L" + std::to_string(ell - 1));
  }
  w.finite_part = rs.from_dynkin(w.labels);
  return w;
}

AffineHighestWeight d5_family_weight(long s) {
  auto rs = RootSystem::build({Series::D, 5});
  AffineHighestWeight w;
  w.label = rs.label();
  w.level = -3;
  w.labels.assign(5, 0);
  if (s >= 0) {
    w.labels[3] = s;
    w.notation = affine_notation(-(s + 3), s, "L4");
  } else {
    w.labels[4] = -s;
    w.notation = affine_notation(s - 3, -s, "L5");
  }
  w.finite_part = rs.from_dynkin(w.labels);
  return w;
}

bool ReportRow::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const ReportCheck& c) { return c.passed; });
}

bool DecompositionReport::passed() const {
  auto ok = [](const ReportCheck& c) { return c.passed; };
  return std::all_of(global_checks.begin(), global_checks.end(), ok) &&
         std::all_of(rows.begin(), rows.end(), [](const ReportRow& r) { return r.passed(); });
}

DecompositionReport decomposition_report(ReportFamily family, int ell, long s_min, long s_max,
                                         const Rational& max_degree) {
  if (s_min > s_max) throw Error(ErrorKind::InvalidArgument, "empty charge range");
  if (max_degree < 0) throw Error(ErrorKind::InvalidArgument, "degree must be nonnegative");
  DecompositionReport rep;
  rep.family = family;
  rep.max_degree = max_degree;
  if (family == ReportFamily::A_in_Weyl) {
    if (ell < 3) throw Error(ErrorKind::InvalidArgument, "A_in_Weyl needs l >= 3");
    if (!is_integer(max_degree)) throw Error(ErrorKind::InvalidArgument, "degree above the lowest must be an integer");
    rep.ell = ell;
    rep.scope = "finite degree: rows verified in the Fock model up to |s|/2 + " + to_string(max_degree);
    auto cv = fock::conformal_vectors(ell);
    fock::FockVector sum = cv.omega_sug;
    fock::add_scaled(sum, 1, cv.omega_one);
    rep.global_checks.push_back(make_check("sugawara_split", sum == cv.omega, "omega_sug + omega_1 != omega"));
    fock::GlElement H = fock::GlElement::H(ell);
    fock::FockVector hh = fock::apply_current(ell, H, 1, fock::apply_current(ell, H, -1, fock::vacuum()));
    fock::FockVector want;
    fock::add_scaled(want, -ell, fock::vacuum());
    rep.global_checks.push_back(make_check("heisenberg_norm", hh == want, "[H(1),H(-1)]1 != -l 1"));
    auto rs = RootSystem::build({Series::A, ell - 1});
    // symplectic bosons: c = -1 per pair
    rep.global_checks.push_back(make_check("central_charge_split", central_charge(rs, -1) + 1 == -ell,
                                           "c(A_{l-1}, -1) + 1 = " + to_string(central_charge(rs, -1) + 1)));
    for (long s = s_min; s <= s_max; ++s) rep.rows.push_back(a_row(ell, s, max_degree));
    return rep;
  }

  rep.ell = 5;
  rep.scope =
      "label level: no free-field model; verified finite E6 branching, singular vectors in N_{E6}(-3L0) up to "
      "degree 3, conformal weights and central charges";
  auto fin = finite_e6_branching();
  auto e6 = RootSystem::build({Series::E, 6});
  auto d5 = RootSystem::build({Series::D, 5});
  std::vector<long> dims;
  for (const auto& c : fin.components) dims.push_back(c.dim);
  rep.global_checks.push_back(make_check("finite_branching", dims == std::vector<long>{45, 1, 16, 16}, "dims differ"));
  rep.global_checks.push_back(make_check("heisenberg_norm", Rational(3) * fin.h_norm == 4,
                                         "-k<H,H> = " + to_string(Rational(3) * fin.h_norm)));
  rep.global_checks.push_back(make_check("central_charge_split", central_charge(d5, -3) + 1 == central_charge(e6, -3),
                                         "c(D5,-3) + 1 != c(E6,-3)"));
  auto pv = affine::build_paper_vector(affine::VectorKind::E6);
  auto sing = affine::is_singular(pv.algebra, pv.vector);
  rep.global_checks.push_back(make_check("e6_singular_vector", sing.singular, sing.failing_operator));
  auto ctx = d5_context();
  for (long s = s_min; s <= s_max; ++s) rep.rows.push_back(e6_row(ctx, fin, s));
  return rep;
}

std::string family_name(ReportFamily f) { return f == ReportFamily::A_in_Weyl ? "A_in_Weyl" : "E6_over_D5"; }

nlohmann::ordered_json to_json(const DecompositionReport& report) {
  using nlohmann::ordered_json;
  auto checks_json = [](const std::vector<ReportCheck>& checks) {
    ordered_json arr = ordered_json::array();
    for (const auto& c : checks) {
      ordered_json j;
      j["name"] = c.name;
      j["status"] = c.passed ? "pass" : "fail";
      if (c.witness) j["witness"] = *c.witness;
      arr.push_back(j);
    }
    return arr;
  };
  ordered_json j;
  j["family"] = family_name(report.family);
  j["rank"] = report.ell;
  j["max_degree"] = to_string(report.max_degree);
  j["scope"] = report.scope;
  j["global_checks"] = checks_json(report.global_checks);
  j["rows"] = ordered_json::array();
  for (const auto& r : report.rows) {
    ordered_json row;
    row["s"] = r.s;
    row["weight"] = r.weight.notation;
    row["finite_labels"] = r.weight.labels;
    row["algebra"] = rootlie::to_string(r.weight.label);
    row["level"] = to_string(r.weight.level);
    row["heisenberg"] = r.heisenberg;
    row["lowest_weight"] = to_string(r.lowest_weight);
    ordered_json degrees = ordered_json::array();
    for (const auto& d : r.degrees) degrees.push_back(to_string(d));
    row["degrees"] = degrees;
    row["dims"] = r.dims;
    if (!r.quotient.empty()) row["quotient"] = r.quotient;
    row["checks"] = checks_json(r.checks);
    row["status"] = r.passed() ? "pass" : "fail";
    j["rows"].push_back(row);
  }
  j["status"] = report.passed() ? "pass" : "fail";
  j["version"] = kReportVersion;
  return j;
}

nlohmann::ordered_json to_json(const E6Branching& b) {
  nlohmann::ordered_json j;
  j["total_dim"] = b.total_dim;
  j["h_norm"] = to_string(b.h_norm);
  j["components"] = nlohmann::ordered_json::array();
  for (const auto& c : b.components) {
    nlohmann::ordered_json cj;
    cj["dim"] = c.dim;
    cj["h_eigenvalue"] = to_string(c.h_eigenvalue);
    cj["d5_labels"] = c.d5_labels;
    cj["highest_weight_vector"] = c.highest_weight_vector;
    if (!c.root_label.empty()) cj["root_label"] = c.root_label;
    j["components"].push_back(cj);
  }
  return j;
}

nlohmann::ordered_json to_json(const std::vector<ClassificationFamily>& tables) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& t : tables) {
    nlohmann::ordered_json j;
    j["algebra"] = t.algebra;
    j["vertex_algebra"] = t.vertex_algebra;
    j["members"] = t.members;
    j["sporadic"] = t.sporadic;
    j["note"] = t.note;
    arr.push_back(j);
  }
  return arr;
}

}  // namespace freefield::branching
