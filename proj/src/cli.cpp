#include "freefield/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <optional>
#include <regex>
#include <sstream>

#include <json.hpp>

#include "freefield/affine_univ.hpp"
#include "freefield/branching.hpp"
#include "freefield/charact.hpp"
#include "freefield/error.hpp"
#include "freefield/fock.hpp"
#include "freefield/rootlie.hpp"

namespace freefield::cli {

namespace {

using json = nlohmann::ordered_json;
using rootlie::RootSystem;
using rootlie::Series;
using rootlie::Weight;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Output {
  json doc;
  std::optional<std::string> csv;
  int code = kExitOk;
};

struct Options {
  std::string series = "A";
  int rank = 0;
  std::string level;
  std::string charge = "0";
  std::string degree;
  std::string format = "json";
  std::string output;
  std::uint64_t seed = 20240101;
  std::size_t samples = 1000;
  std::string lam, mu;
  std::string vector;
  std::string family = "A";
  long bound = charact::kDefaultDimensionBound;
  bool closed_form = false;
  std::optional<long> a, b;
  long range = 5;
};

json weight_json(const Weight& w) {
  json arr = json::array();
  for (const auto& c : w.coords) arr.push_back(to_string(c));
  return arr;
}

std::string weight_csv(const Weight& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? " " : "") + to_string(w[i]);
  return s;
}

template <typename T>
std::string join(const std::vector<T>& v, const std::string& sep = " ") {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? sep : "") << v[i];
  return os.str();
}

RootSystem root_system(const Options& o) { return RootSystem::build(rootlie::make_label(o.series, o.rank)); }

/// "w1+2*w3", "2w1-w2", "0", or comma-separated epsilon coordinates.
Weight parse_weight(const RootSystem& rs, const std::string& text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (t.empty()) throw UsageError("empty weight");
  if (t == "0") return Weight(rs.ambient_dim());
  if (t.find('w') == std::string::npos) {
    RationalVector coords;
    std::stringstream ss(t);
    std::string item;
    while (std::getline(ss, item, ',')) coords.push_back(parse_rational(item));
    if (coords.size() != rs.ambient_dim())
      throw UsageError("expected " + std::to_string(rs.ambient_dim()) + " epsilon coordinates");
    return Weight(coords);
  }
  static const std::regex term(R"(([+-]?)(\d+(?:/\d+)?)?\*?w(\d+))");
  Weight w(rs.ambient_dim());
  std::size_t pos = 0;
  for (auto it = std::sregex_iterator(t.begin(), t.end(), term); it != std::sregex_iterator(); ++it) {
    const auto& m = *it;
    if (static_cast<std::size_t>(m.position()) != pos || (pos > 0 && m[1].length() == 0))
      throw UsageError("cannot parse weight '" + text + "'");
    pos += m.length();
    Rational c = m[2].matched ? parse_rational(m[2].str()) : Rational(1);
    if (m[1] == "-") c = -c;
    std::size_t i = std::stoul(m[3].str());
    if (i < 1 || i > rs.fundamental_weights().size()) throw UsageError("no fundamental weight w" + m[3].str());
    w += c * rs.fundamental_weights()[i - 1];
  }
  if (pos != t.size()) throw UsageError("cannot parse weight '" + text + "'");
  return w;
}

std::pair<long, long> parse_range(const std::string& text) {
  static const std::regex rx(R"(\s*(-?\d+)\s*(?:\.\.\s*(-?\d+))?\s*)");
  std::smatch m;
  if (!std::regex_match(text, m, rx)) throw UsageError("bad range '" + text + "' (use a or a..b)");
  long lo = std::stol(m[1].str());
  long hi = m[2].matched ? std::stol(m[2].str()) : lo;
  if (lo > hi) throw UsageError("empty range '" + text + "'");
  return {lo, hi};
}

Rational parse_level(const std::string& text) {
  try {
    return parse_rational(text);
  } catch (const Error&) {
    throw UsageError("bad level '" + text + "'");
  }
}

Rational parse_degree(const std::string& text, const char* fallback) {
  return parse_rational(text.empty() ? fallback : text);
}

long parse_long_degree(const std::string& text, long fallback) {
  if (text.empty()) return fallback;
  Rational d = parse_rational(text);
  if (!is_integer(d) || d < 0) throw UsageError("--degree must be a nonnegative integer here");
  return to_long(d);
}

// ---------------------------------------------------------------------------

Output cmd_roots(const Options& o) {
  auto rs = root_system(o);
  Output out;
  json& j = out.doc;
  j["label"] = rootlie::to_string(rs.label());
  j["ambient_dim"] = rs.ambient_dim();
  j["dim"] = rs.dim_algebra();
  j["dual_coxeter"] = rs.dual_coxeter();
  j["form_scale"] = to_string(rs.form_scale());
  j["cartan_matrix"] = rs.cartan_matrix();
  j["simple_roots"] = json::array();
  for (const auto& a : rs.simple_roots()) j["simple_roots"].push_back(weight_json(a));
  j["fundamental_weights"] = json::array();
  for (const auto& w : rs.fundamental_weights()) j["fundamental_weights"].push_back(weight_json(w));
  j["rho"] = weight_json(rs.rho());
  j["positive_roots"] = json::array();
  std::ostringstream csv;
  csv << "index,height,root\n";
  std::size_t i = 0;
  for (const auto& a : rs.positive_roots()) {
    json r;
    r["root"] = weight_json(a);
    r["height"] = rs.height(a);
    j["positive_roots"].push_back(r);
    csv << i++ << "," << rs.height(a) << "," << weight_csv(a) << "\n";
  }
  out.csv = csv.str();
  return out;
}

Output cmd_char(const Options& o) {
  auto rs = root_system(o);
  if (o.lam.empty()) throw UsageError("--lam is required");
  Weight lam = parse_weight(rs, o.lam);
  auto table = charact::weight_multiplicities(rs, lam, o.bound);
  Output out;
  json& j = out.doc;
  j["label"] = rootlie::to_string(rs.label());
  j["highest_weight"] = rs.integral_labels(lam);
  j["dimension"] = table.dimension();
  j["weyl_dimension"] = rootlie::weyl_dimension(rs, lam).get_str();
  j["weights"] = json::array();
  std::ostringstream csv;
  csv << "labels,multiplicity\n";
  for (auto it = table.multiplicities.rbegin(); it != table.multiplicities.rend(); ++it) {
    json w;
    w["labels"] = it->first;
    w["multiplicity"] = it->second;
    j["weights"].push_back(w);
    csv << join(it->first) << "," << it->second << "\n";
  }
  out.csv = csv.str();
  if (Integer(table.dimension()) != rootlie::weyl_dimension(rs, lam)) out.code = kExitFailed;
  j["status"] = out.code == kExitOk ? "pass" : "fail";
  return out;
}

json components_json(const RootSystem& rs, const charact::DecompositionList& list) {
  json arr = json::array();
  for (const auto& c : list) {
    json x;
    x["labels"] = c.labels;
    x["multiplicity"] = c.multiplicity;
    x["dim"] = rootlie::weyl_dimension(rs, c.highest_weight).get_str();
    arr.push_back(x);
  }
  return arr;
}

/// Which closed form applies to (lam, mu), if any.
std::optional<std::pair<std::string, charact::DecompositionList>> closed_form(const RootSystem& rs,
                                                                               const std::vector<long>& l,
                                                                               const std::vector<long>& m) {
  const int r = rs.rank();
  auto only = [&](const std::vector<long>& v, std::size_t i) {
    for (std::size_t k = 0; k < v.size(); ++k)
      if (k != i && v[k] != 0) return false;
    return true;
  };
  const auto series = rs.label().series;
  if (series == Series::A && r >= 2) {
    const std::size_t first = 0, last = r - 1;
    long a1 = l[first], al = l[last], b1 = m[first], bl = m[last];
    if (only(l, first) && only(m, first)) {
      long hi = std::max(a1, b1), lo = std::min(a1, b1);
      return std::make_pair(std::string("A case I"), charact::type_a_rule(r, charact::TypeACase::I, hi, lo));
    }
    if (only(l, last) && only(m, last)) {
      long hi = std::max(al, bl), lo = std::min(al, bl);
      return std::make_pair(std::string("A case II"), charact::type_a_rule(r, charact::TypeACase::II, hi, lo));
    }
    if (only(l, first) && only(m, last) && a1 >= bl)
      return std::make_pair(std::string("A case III"), charact::type_a_rule(r, charact::TypeACase::III, a1, bl));
  }
  if (series == Series::D && r >= 5 && r % 2 == 1) {
    auto as_u = [&](const std::vector<long>& v) -> std::optional<long> {
      if (only(v, r - 2)) return v[r - 2];
      if (only(v, r - 1)) return -v[r - 1];
      return std::nullopt;
    };
    auto ur = as_u(l), us = as_u(m);
    if (ur && us && ((*ur >= 0) == (*us >= 0)) && *ur != 0 && *us != 0) {
      auto res = charact::okada_rule(r, *ur, *us);
      return std::make_pair(std::string("Okada"), res.components);
    }
  }
  return std::nullopt;
}

Output cmd_tensor(const Options& o) {
  auto rs = root_system(o);
  if (o.lam.empty() || o.mu.empty()) throw UsageError("--lam and --mu are required");
  Weight lam = parse_weight(rs, o.lam), mu = parse_weight(rs, o.mu);
  auto list = charact::tensor_decompose(rs, lam, mu, o.bound);
  Output out;
  json& j = out.doc;
  j["label"] = rootlie::to_string(rs.label());
  auto ll = rs.integral_labels(lam), ml = rs.integral_labels(mu);
  j["lam"] = ll;
  j["mu"] = ml;
  j["components"] = components_json(rs, list);
  Integer total = charact::total_dimension(rs, list);
  Integer product = rootlie::weyl_dimension(rs, lam) * rootlie::weyl_dimension(rs, mu);
  j["total_dim"] = total.get_str();
  j["product_dim"] = product.get_str();
  if (total != product) out.code = kExitFailed;
  if (o.closed_form) {
    auto cf = closed_form(rs, ll, ml);
    json c;
    if (!cf) {
      c["rule"] = "none";
    } else {
      c["rule"] = cf->first;
      c["agrees"] = cf->second == list;
      if (!(cf->second == list)) {
        c["closed_form_components"] = components_json(rs, cf->second);
        out.code = kExitFailed;
      }
    }
    j["closed_form"] = c;
  }
  j["status"] = out.code == kExitOk ? "pass" : "fail";
  std::ostringstream csv;
  csv << "labels,multiplicity,dim\n";
  for (const auto& c : list)
    csv << join(c.labels) << "," << c.multiplicity << "," << rootlie::weyl_dimension(rs, c.highest_weight).get_str()
        << "\n";
  out.csv = csv.str();
  return out;
}

int fock_rank(const Options& o, int min_rank) {
  if (o.rank < min_rank || o.rank > 16)
    throw UsageError("--rank (the number l of Weyl pairs) must lie in " + std::to_string(min_rank) + "..16");
  return o.rank;
}

Output cmd_fock_basis(const Options& o) {
  int ell = fock_rank(o, 1);
  auto [s, s_hi] = parse_range(o.charge);
  if (s != s_hi) throw UsageError("fock basis takes a single charge");
  Rational d = parse_degree(o.degree, "0");
  auto basis = fock::sector_basis(ell, static_cast<int>(s), d);
  Output out;
  json& j = out.doc;
  j["rank"] = ell;
  j["charge"] = s;
  j["degree"] = to_string(d);
  j["size"] = basis.size();
  j["monomials"] = json::array();
  std::ostringstream csv;
  csv << "monomial,gl_weight\n";
  for (const auto& m : basis) {
    std::string name = fock::to_string(fock::FockVector{{m, Rational(1)}});
    json x;
    x["monomial"] = name;
    x["gl_weight"] = fock::gl_weight(ell, m);
    j["monomials"].push_back(x);
    csv << name << "," << join(fock::gl_weight(ell, m)) << "\n";
  }
  out.csv = csv.str();
  return out;
}

Output cmd_fock_character(const Options& o) {
  int ell = fock_rank(o, 2);
  auto [lo, hi] = parse_range(o.charge);
  long extra = parse_long_degree(o.degree, 2);
  Output out;
  json& j = out.doc;
  j["rank"] = ell;
  j["degrees_above_lowest"] = extra;
  j["diagnostic"] = ell == 2;
  j["sectors"] = json::array();
  std::ostringstream csv;
  csv << "charge,degree,dim,quotient\n";
  for (long s = lo; s <= hi; ++s) {
    fock::SectorIndex idx{ell, static_cast<int>(s), frac(std::labs(s), 2) + extra};
    json x;
    x["charge"] = s;
    fock::GradedCharacter ch;
    try {
      ch = fock::graded_character(idx, true);
      x["status"] = "pass";
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NonIntegralQuotient) throw;
      ch = fock::graded_character(idx, false);
      x["status"] = "fail";
      x["witness"] = e.what();
      if (ell >= 3) out.code = kExitFailed;
    }
    json degrees = json::array();
    for (const auto& d : ch.degrees) degrees.push_back(to_string(d));
    x["degrees"] = degrees;
    x["dims"] = ch.dims;
    x["quotient"] = ch.quotient;
    x["top_weight"] = ch.top_weight;
    x["top_weight_quotient"] = ch.weight_quotient.count(ch.top_weight) ? ch.weight_quotient.at(ch.top_weight)
                                                                       : std::vector<long>{};
    j["sectors"].push_back(x);
    for (std::size_t k = 0; k < ch.dims.size(); ++k)
      csv << s << "," << to_string(ch.degrees[k]) << "," << ch.dims[k] << "," << ch.quotient[k] << "\n";
  }
  j["status"] = out.code == kExitOk ? "pass" : "fail";
  out.csv = csv.str();
  return out;
}

Output cmd_fock_scan(const Options& o) {
  int ell = fock_rank(o, 2);
  auto [lo, hi] = parse_range(o.charge);
  long extra = parse_long_degree(o.degree, 2);
  Output out;
  json& j = out.doc;
  j["rank"] = ell;
  j["degrees_above_lowest"] = extra;
  j["raising_operators"] = "e_i(0), f_theta(1), H(n) for n >= 1";
  j["diagnostic"] = ell == 2;
  j["sectors"] = json::array();
  std::ostringstream csv;
  csv << "charge,degree,sector_dim,kernel_dim,extra\n";
  for (long s = lo; s <= hi; ++s) {
    auto r = fock::singular_scan({ell, static_cast<int>(s), frac(std::labs(s), 2) + extra});
    json x;
    x["charge"] = s;
    x["lowest_singular"] = r.lowest_singular;
    x["cells"] = json::array();
    for (const auto& c : r.cells) {
      json cell;
      cell["degree"] = to_string(c.degree);
      cell["sector_dim"] = c.sector_dim;
      cell["kernel_dim"] = c.kernel_dim;
      json extras = json::array();
      for (const auto& v : c.extra) extras.push_back(fock::to_string(v));
      cell["extra"] = extras;
      x["cells"].push_back(cell);
      csv << s << "," << to_string(c.degree) << "," << c.sector_dim << "," << c.kernel_dim << "," << c.extra.size()
          << "\n";
    }
    x["first_extra_degree"] = nullptr;
    for (const auto& c : r.cells)
      if (!c.extra.empty()) {
        x["first_extra_degree"] = to_string(c.degree);
        break;
      }
    x["status"] = ell == 2 ? "diagnostic" : (r.clean() ? "pass" : "fail");
    if (ell >= 3 && !r.clean()) out.code = kExitFailed;
    j["sectors"].push_back(x);
  }
  j["status"] = ell == 2 ? "diagnostic" : (out.code == kExitOk ? "pass" : "fail");
  out.csv = csv.str();
  return out;
}

Output cmd_fock_properties(const Options& o) {
  int ell = fock_rank(o, 1);
  auto rep = fock::property_suite(ell, o.samples, o.seed);
  Output out;
  json& j = out.doc;
  j["rank"] = ell;
  j["seed"] = o.seed;
  j["samples"] = o.samples;
  j["ccr_checks"] = rep.ccr_checks;
  j["affine_checks"] = rep.affine_checks;
  j["charge_checks"] = rep.charge_checks;
  j["failure_count"] = rep.failure_count;
  j["failures"] = rep.failures;
  j["status"] = rep.ok() ? "pass" : "fail";
  if (!rep.ok()) out.code = kExitFailed;
  return out;
}

affine::VectorKind vector_kind(const std::string& v) {
  std::string u;
  for (char c : v) u += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  if (u == "A" || u == "A_TYPE") return affine::VectorKind::A_type;
  if (u == "D" || u == "D_TYPE") return affine::VectorKind::D_type;
  if (u == "E6") return affine::VectorKind::E6;
  throw UsageError("--vector must be A, D or E6");
}

Output cmd_singular(const Options& o) {
  if (o.vector.empty()) throw UsageError("--vector is required");
  auto kind = vector_kind(o.vector);
  int rank = kind == affine::VectorKind::E6 ? 6 : o.rank;
  auto pv = affine::build_paper_vector(kind, rank);
  Rational level = o.level.empty() ? pv.algebra.k() : parse_level(o.level);
  auto alg = pv.algebra.with_level(level);
  auto res = affine::is_singular(alg, pv.vector);
  Output out;
  json& j = out.doc;
  j["vector"] = kind == affine::VectorKind::E6 ? "E6" : (kind == affine::VectorKind::A_type ? "A" : "D");
  j["rank"] = rank;
  j["algebra"] = rootlie::to_string(alg.basis().root_system().label());
  j["level"] = to_string(level);
  j["default_level"] = to_string(pv.algebra.k());
  j["formula"] = pv.formula;
  j["terms"] = pv.vector.size();
  j["status"] = res.singular ? "singular" : "not-singular";
  if (!res.singular) {
    j["failing_operator"] = res.failing_operator;
    j["witness"] = alg.to_string(res.witness);
    out.code = kExitFailed;
  }
  return out;
}

Output cmd_sugawara(const Options& o) {
  int ell = fock_rank(o, 2);
  auto cv = fock::conformal_vectors(ell);
  fock::FockVector sum = cv.omega_sug;
  fock::add_scaled(sum, 1, cv.omega_one);
  Output out;
  json& j = out.doc;
  j["rank"] = ell;
  j["omega"] = fock::to_string(cv.omega);
  j["omega_sug"] = fock::to_string(cv.omega_sug);
  j["omega_one"] = fock::to_string(cv.omega_one);
  bool ok = sum == cv.omega;
  if (!ok) {
    fock::add_scaled(sum, -1, cv.omega);
    j["witness"] = fock::to_string(sum);
    out.code = kExitFailed;
  }
  j["status"] = ok ? "pass" : "fail";
  return out;
}

Output cmd_phi(const Options& o) {
  int ell = fock_rank(o, 3);
  auto pv = affine::build_paper_vector(affine::VectorKind::A_type, ell);
  auto img = fock::phi_image(ell, pv.algebra, pv.vector);
  Output out;
  json& j = out.doc;
  j["rank"] = ell;
  j["vector"] = pv.formula;
  j["image"] = fock::to_string(img);
  j["status"] = img.empty() ? "zero" : "nonzero";
  if (!img.empty()) out.code = kExitFailed;
  return out;
}

Output cmd_branch_report(const Options& o) {
  std::string f;
  for (char c : o.family) f += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  auto [lo, hi] = parse_range(o.charge);
  Output out;
  branching::DecompositionReport rep;
  if (f == "A" || f == "A_IN_WEYL") {
    rep = branching::decomposition_report(branching::ReportFamily::A_in_Weyl, fock_rank(o, 3), lo, hi,
                                          parse_long_degree(o.degree, 2));
  } else if (f == "E6" || f == "E6_OVER_D5") {
    rep = branching::decomposition_report(branching::ReportFamily::E6_over_D5, 5, lo, hi, 0);
  } else {
    throw UsageError("--family must be A or E6");
  }
  out.doc = branching::to_json(rep);
  if (!rep.passed()) out.code = kExitFailed;
  return out;
}

Output cmd_branch_finite(const Options&) {
  Output out;
  auto b = branching::finite_e6_branching();
  out.doc = branching::to_json(b);
  std::vector<long> dims;
  for (const auto& c : b.components) dims.push_back(c.dim);
  bool ok = b.total_dim == 78 && dims == std::vector<long>{45, 1, 16, 16};
  out.doc["status"] = ok ? "pass" : "fail";
  if (!ok) out.code = kExitFailed;
  return out;
}

Output cmd_branch_tables(const Options&) {
  Output out;
  out.doc["families"] = branching::to_json(branching::classification_tables());
  return out;
}

Output cmd_fusion(const Options& o) {
  Output out;
  json& j = out.doc;
  if (o.a || o.b) {
    if (!o.a || !o.b) throw UsageError("--a and --b go together");
    j["a"] = *o.a;
    j["b"] = *o.b;
    j["product"] = branching::fusion_product(*o.a, *o.b);
    return out;
  }
  if (o.range < 0) throw UsageError("--range must be nonnegative");
  auto m = branching::check_fusion_monoid(o.range);
  j["range"] = o.range;
  j["checked_triples"] = m.checked_triples;
  j["associative"] = m.associative;
  j["commutative"] = m.commutative;
  j["unital"] = m.unital;
  j["inverses"] = m.inverses;
  if (m.witness) j["witness"] = *m.witness;
  j["status"] = m.ok() ? "pass" : "fail";
  if (!m.ok()) out.code = kExitFailed;
  return out;
}

Output cmd_cc(const Options& o) {
  auto rs = root_system(o);
  if (o.level.empty()) throw UsageError("--level is required");
  Rational k = parse_level(o.level);
  Output out;
  json& j = out.doc;
  j["label"] = rootlie::to_string(rs.label());
  j["level"] = to_string(k);
  j["dim"] = rs.dim_algebra();
  j["dual_coxeter"] = rs.dual_coxeter();
  j["central_charge"] = to_string(branching::central_charge(rs, k));
  return out;
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::VerificationFailed:
    case ErrorKind::InternalInconsistency:
    case ErrorKind::NonIntegralQuotient:
      return kExitFailed;
    default:
      return kExitUsage;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact free-field and affine Lie algebra computations", "freefield"};
  app.require_subcommand(1);
  Options o;

  auto add_output = [&](CLI::App* sub, bool csv) {
    if (csv) sub->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    else sub->add_option("--format", o.format, "json")->check(CLI::IsMember({"json"}));
    sub->add_option("--output", o.output, "write to this file instead of stdout");
  };
  auto add_algebra = [&](CLI::App* sub) {
    sub->add_option("--series", o.series, "A, B, C, D, E or F")->required();
    sub->add_option("--rank", o.rank, "rank")->required();
  };

  auto* roots = app.add_subcommand("roots", "root system data");
  add_algebra(roots);
  add_output(roots, true);

  auto* tensor = app.add_subcommand("tensor", "decompose V(lam) x V(mu)");
  add_algebra(tensor);
  tensor->add_option("--lam", o.lam, "w1+2*w3 or epsilon coordinates")->required();
  tensor->add_option("--mu", o.mu, "second highest weight")->required();
  tensor->add_option("--bound", o.bound, "dimension bound");
  tensor->add_flag("--closed-form", o.closed_form, "compare with the type A / Okada closed forms");
  add_output(tensor, true);

  auto* chr = app.add_subcommand("char", "weight multiplicities of V(lam)");
  add_algebra(chr);
  chr->add_option("--lam", o.lam, "highest weight")->required();
  chr->add_option("--bound", o.bound, "dimension bound");
  add_output(chr, true);

  auto* fock_cmd = app.add_subcommand("fock", "Weyl vertex algebra M_l");
  fock_cmd->require_subcommand(1);
  auto* fbasis = fock_cmd->add_subcommand("basis", "monomials of one charge and degree");
  auto* fchar = fock_cmd->add_subcommand("character", "graded dimensions and Heisenberg quotients");
  auto* fscan = fock_cmd->add_subcommand("scan", "singular-vector scan of charge sectors");
  auto* fprop = fock_cmd->add_subcommand("properties", "sampled operator identities");
  for (auto* sub : {fbasis, fchar, fscan, fprop}) sub->add_option("--rank", o.rank, "number l of Weyl pairs")->required();
  fbasis->add_option("--charge", o.charge, "charge s");
  fbasis->add_option("--degree", o.degree, "conformal degree (in 1/2 Z)");
  add_output(fbasis, true);
  for (auto* sub : {fchar, fscan}) {
    sub->add_option("--charge", o.charge, "charge or range a..b");
    sub->add_option("--degree", o.degree, "degrees above the lowest |s|/2 (default 2)");
    add_output(sub, true);
  }
  fprop->add_option("--samples", o.samples, "number of sampled vectors");
  fprop->add_option("--seed", o.seed, "sampling seed");
  add_output(fprop, false);

  auto* singular = app.add_subcommand("singular", "explicit singular vectors");
  singular->require_subcommand(1);
  auto* sverify = singular->add_subcommand("verify", "check e_i(0) v = 0 and f_theta(1) v = 0");
  sverify->add_option("--vector", o.vector, "A, D or E6")->required();
  sverify->add_option("--rank", o.rank, "l for A (A_{l-1}) and D (D_l)");
  sverify->add_option("--level", o.level, "level (default: the vector's own level)");
  add_output(sverify, false);

  auto* sugawara = app.add_subcommand("sugawara", "Sugawara split of the conformal vector");
  sugawara->require_subcommand(1);
  auto* scheck = sugawara->add_subcommand("check", "omega_sug + omega_1 = omega");
  scheck->add_option("--rank", o.rank, "l")->required();
  add_output(scheck, false);

  auto* phi = app.add_subcommand("phi", "free-field image of affine vectors");
  phi->require_subcommand(1);
  auto* pimage = phi->add_subcommand("image", "image of the A-type singular vector in M_l");
  pimage->add_option("--rank", o.rank, "l")->required();
  add_output(pimage, false);

  auto* branch = app.add_subcommand("branch", "branching data and decomposition reports");
  branch->require_subcommand(1);
  auto* breport = branch->add_subcommand("report", "decomposition report");
  breport->add_option("--family", o.family, "A or E6");
  breport->add_option("--rank", o.rank, "l for the A family");
  breport->add_option("--charge", o.charge, "charge range a..b");
  breport->add_option("--degree", o.degree, "degrees above the lowest (A family, default 2)");
  add_output(breport, false);
  auto* bfinite = branch->add_subcommand("finite", "adjoint of E6 under D5 + C H");
  add_output(bfinite, false);
  auto* btables = branch->add_subcommand("tables", "classification label lists");
  add_output(btables, false);

  auto* fusion = app.add_subcommand("fusion", "fusion labels");
  fusion->add_option("--a", o.a, "first label");
  fusion->add_option("--b", o.b, "second label");
  fusion->add_option("--range", o.range, "exhaustive axiom check on |a|,|b|,|c| <= range");
  add_output(fusion, false);

  auto* cc = app.add_subcommand("cc", "central charge k dim g / (k + h)");
  add_algebra(cc);
  cc->add_option("--level", o.level, "level k")->required();
  add_output(cc, false);

  std::vector<std::string> argv_store{"freefield"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : argv_store) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  Output result;
  try {
    if (*roots) result = cmd_roots(o);
    else if (*tensor) result = cmd_tensor(o);
    else if (*chr) result = cmd_char(o);
    else if (*fbasis) result = cmd_fock_basis(o);
    else if (*fchar) result = cmd_fock_character(o);
    else if (*fscan) result = cmd_fock_scan(o);
    else if (*fprop) result = cmd_fock_properties(o);
    else if (*sverify) result = cmd_singular(o);
    else if (*scheck) result = cmd_sugawara(o);
    else if (*pimage) result = cmd_phi(o);
    else if (*breport) result = cmd_branch_report(o);
    else if (*bfinite) result = cmd_branch_finite(o);
    else if (*btables) result = cmd_branch_tables(o);
    else if (*fusion) result = cmd_fusion(o);
    else if (*cc) result = cmd_cc(o);
    else throw UsageError("no command");
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  }

  std::string text;
  if (o.format == "csv") {
    if (!result.csv) {
      err << "usage error: no CSV form for this command\n";
      return kExitUsage;
    }
    text = *result.csv;
  } else {
    text = result.doc.dump(2) + "\n";
  }
  if (!o.output.empty()) {
    std::ofstream f(o.output, std::ios::binary);
    if (!f) {
      err << "usage error: cannot write " << o.output << "\n";
      return kExitUsage;
    }
    f << text;
  } else {
    out << text;
  }
  return result.code;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace freefield::cli
