#include "freefield/rootlie.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <sstream>

#include "freefield/error.hpp"
#include "freefield/linalg.hpp"

namespace freefield::rootlie {

// ---------------------------------------------------------------------------
// Labels and weights
// ---------------------------------------------------------------------------

void SeriesLabel::validate() const {
  bool ok = false;
  switch (series) {
    case Series::A: ok = rank >= 1 && rank <= 16; break;
    case Series::B: ok = rank >= 2 && rank <= 16; break;
    case Series::C: ok = rank >= 2 && rank <= 16; break;
    case Series::D: ok = rank >= 3 && rank <= 16; break;
    case Series::E: ok = rank == 6; break;
    case Series::F: ok = rank == 4; break;
  }
  if (!ok) throw Error(ErrorKind::UnsupportedLabel, to_string(*this));
}

std::string to_string(const SeriesLabel& label) {
  static const char* names = "ABCDEF";
  return std::string(1, names[static_cast<int>(label.series)]) + std::to_string(label.rank);
}

SeriesLabel make_label(std::string_view series, int rank) {
  if (series.size() != 1) throw Error(ErrorKind::UnsupportedLabel, "series '" + std::string(series) + "'");
  char c = static_cast<char>(std::toupper(static_cast<unsigned char>(series[0])));
  if (c < 'A' || c > 'F') throw Error(ErrorKind::UnsupportedLabel, "series '" + std::string(series) + "'");
  SeriesLabel label{static_cast<Series>(c - 'A'), rank};
  label.validate();
  return label;
}

bool Weight::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](const Rational& q) { return q == 0; });
}

Weight& Weight::operator+=(const Weight& o) {
  if (o.size() != size()) throw Error(ErrorKind::DimensionMismatch, "weight addition");
  for (std::size_t i = 0; i < size(); ++i) coords[i] += o.coords[i];
  return *this;
}

Weight& Weight::operator-=(const Weight& o) {
  if (o.size() != size()) throw Error(ErrorKind::DimensionMismatch, "weight subtraction");
  for (std::size_t i = 0; i < size(); ++i) coords[i] -= o.coords[i];
  return *this;
}

Weight operator-(Weight a) {
  for (auto& c : a.coords) c = -c;
  return a;
}

Weight operator*(const Rational& s, Weight a) {
  for (auto& c : a.coords) c *= s;
  return a;
}

std::string to_string(const Weight& w) {
  std::string out = "(";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ",";
    out += w[i].get_str();
  }
  return out + ")";
}

// ---------------------------------------------------------------------------
// Root systems
// ---------------------------------------------------------------------------

namespace {

Weight unit(std::size_t dim, std::size_t i, const Rational& c = 1) {
  Weight w(dim);
  w[i] = c;
  return w;
}

Weight combo(std::size_t dim, std::initializer_list<std::pair<std::size_t, Rational>> terms) {
  Weight w(dim);
  for (const auto& [i, c] : terms) w[i] += c;
  return w;
}

struct RawSystem {
  std::size_t dim;
  Rational scale;
  std::vector<Weight> positive;
  std::vector<Weight> simple;
};

RawSystem raw_system(const SeriesLabel& label) {
  const int n = label.rank;
  const Rational half(1, 2);
  RawSystem raw{0, Rational(1), {}, {}};
  auto add_pm_pairs = [&](std::size_t dim, std::size_t upto) {
    for (std::size_t i = 0; i < upto; ++i)
      for (std::size_t j = i + 1; j < upto; ++j) {
        raw.positive.push_back(combo(dim, {{i, 1}, {j, -1}}));
        raw.positive.push_back(combo(dim, {{i, 1}, {j, 1}}));
      }
  };
  switch (label.series) {
    case Series::A: {
      raw.dim = n + 1;
      for (std::size_t i = 0; i < raw.dim; ++i)
        for (std::size_t j = i + 1; j < raw.dim; ++j) raw.positive.push_back(combo(raw.dim, {{i, 1}, {j, -1}}));
      for (int i = 0; i < n; ++i) raw.simple.push_back(combo(raw.dim, {{i, 1}, {i + 1, -1}}));
      break;
    }
    case Series::B: {
      raw.dim = n;
      add_pm_pairs(raw.dim, n);
      for (int i = 0; i < n; ++i) raw.positive.push_back(unit(raw.dim, i));
      for (int i = 0; i + 1 < n; ++i) raw.simple.push_back(combo(raw.dim, {{i, 1}, {i + 1, -1}}));
      raw.simple.push_back(unit(raw.dim, n - 1));
      break;
    }
    case Series::C: {
      raw.dim = n;
      raw.scale = half;
      add_pm_pairs(raw.dim, n);
      for (int i = 0; i < n; ++i) raw.positive.push_back(unit(raw.dim, i, 2));
      for (int i = 0; i + 1 < n; ++i) raw.simple.push_back(combo(raw.dim, {{i, 1}, {i + 1, -1}}));
      raw.simple.push_back(unit(raw.dim, n - 1, 2));
      break;
    }
    case Series::D: {
      raw.dim = n;
      add_pm_pairs(raw.dim, n);
      for (int i = 0; i + 1 < n; ++i) raw.simple.push_back(combo(raw.dim, {{i, 1}, {i + 1, -1}}));
      raw.simple.push_back(combo(raw.dim, {{n - 2, 1}, {n - 1, 1}}));
      break;
    }
    case Series::E: {
      // Realization inside R^8: roots +-e_i +- e_j (i < j <= 5), positive when e_j has sign +, and
      // 1/2(e8 - e7 - e6 + sum_{i<=5} (-1)^{nu_i} e_i) with sum nu_i even.
      raw.dim = 8;
      for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = i + 1; j < 5; ++j) {
          raw.positive.push_back(combo(raw.dim, {{j, 1}, {i, -1}}));
          raw.positive.push_back(combo(raw.dim, {{j, 1}, {i, 1}}));
        }
      for (unsigned mask = 0; mask < 32; ++mask) {
        if (__builtin_popcount(mask) % 2 != 0) continue;  // mask marks the minus signs
        Weight w(raw.dim);
        for (std::size_t i = 0; i < 5; ++i) w[i] = (mask >> i) & 1u ? -half : half;
        w[5] = -half;
        w[6] = -half;
        w[7] = half;
        raw.positive.push_back(w);
      }
      Weight a1(raw.dim);
      a1[0] = half;
      a1[7] = half;
      for (std::size_t i = 1; i < 7; ++i) a1[i] = -half;
      raw.simple = {a1,
                    combo(raw.dim, {{0, 1}, {1, 1}}),
                    combo(raw.dim, {{1, 1}, {0, -1}}),
                    combo(raw.dim, {{2, 1}, {1, -1}}),
                    combo(raw.dim, {{3, 1}, {2, -1}}),
                    combo(raw.dim, {{4, 1}, {3, -1}})};
      break;
    }
    case Series::F: {
      raw.dim = 4;
      add_pm_pairs(raw.dim, 4);
      for (std::size_t i = 0; i < 4; ++i) raw.positive.push_back(unit(raw.dim, i));
      for (unsigned mask = 0; mask < 8; ++mask) {
        Weight w(raw.dim);
        w[0] = half;
        for (std::size_t i = 1; i < 4; ++i) w[i] = (mask >> (i - 1)) & 1u ? -half : half;
        raw.positive.push_back(w);
      }
      raw.simple = {combo(raw.dim, {{1, 1}, {2, -1}}), combo(raw.dim, {{2, 1}, {3, -1}}), unit(raw.dim, 3),
                    combo(raw.dim, {{0, half}, {1, -half}, {2, -half}, {3, -half}})};
      break;
    }
  }
  return raw;
}

}  // namespace

RootSystem RootSystem::build(const SeriesLabel& label) {
  label.validate();
  RawSystem raw = raw_system(label);
  RootSystem rs;
  rs.label_ = label;
  rs.ambient_dim_ = raw.dim;
  rs.scale_ = raw.scale;
  rs.simple_ = raw.simple;
  const std::size_t r = raw.simple.size();

  linalg::DenseMatrix gram(r, RationalVector(r));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) gram[i][j] = rs.inner_product(raw.simple[i], raw.simple[j]);
  rs.gram_inverse_ = linalg::inverse(gram);

  rs.cartan_.assign(r, std::vector<int>(r, 0));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      Rational a = 2 * gram[i][j] / gram[i][i];
      rs.cartan_[i][j] = static_cast<int>(to_long(a));
    }

  // Order positive roots by height, then by descending coordinates.
  std::vector<std::pair<long, Weight>> keyed;
  for (const auto& root : raw.positive) {
    auto coeffs = rs.simple_coefficients(root);
    long h = 0;
    for (long c : coeffs) {
      if (c < 0) throw Error(ErrorKind::InternalInconsistency, "listed positive root is not positive");
      h += c;
    }
    keyed.emplace_back(h, root);
  }
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return b.second < a.second;
  });
  for (auto& [h, root] : keyed) {
    rs.positive_lookup_.emplace(root, rs.positive_.size());
    rs.positive_.push_back(std::move(root));
  }

  // omega_i = sum_j M_ij alpha_j with M = (A^T)^{-1}.
  linalg::DenseMatrix at(r, RationalVector(r));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) at[i][j] = rs.cartan_[j][i];
  linalg::DenseMatrix m = linalg::inverse(at);
  for (std::size_t i = 0; i < r; ++i) {
    Weight w(raw.dim);
    for (std::size_t j = 0; j < r; ++j) w += m[i][j] * raw.simple[j];
    rs.fundamental_.push_back(std::move(w));
  }

  rs.rho_ = Weight(raw.dim);
  for (const auto& root : rs.positive_) rs.rho_ += root;
  rs.rho_ = Rational(1, 2) * rs.rho_;

  Rational theta2 = rs.inner_product(rs.highest_root(), rs.highest_root());
  if (theta2 != 2) throw Error(ErrorKind::InternalInconsistency, "highest root not normalized");
  rs.dual_coxeter_ = static_cast<int>(to_long(1 + rs.inner_product(rs.rho_, rs.highest_root())));
  return rs;
}

Rational RootSystem::inner_product(const Weight& a, const Weight& b) const {
  if (a.size() != ambient_dim_ || b.size() != ambient_dim_)
    throw Error(ErrorKind::DimensionMismatch, "weight of length " + std::to_string(a.size()) + "/" +
                                                  std::to_string(b.size()) + " in " + to_string(label_));
  return scale_ * dot(a.coords, b.coords);
}

RationalVector RootSystem::dynkin_labels(const Weight& w) const {
  RationalVector labels;
  labels.reserve(simple_.size());
  for (const auto& a : simple_) labels.push_back(2 * inner_product(w, a) / inner_product(a, a));
  return labels;
}

std::vector<long> RootSystem::integral_labels(const Weight& w) const {
  std::vector<long> out;
  for (const auto& q : dynkin_labels(w)) {
    if (!is_integer(q)) throw Error(ErrorKind::NotDominantIntegral, "non-integral weight " + to_string(w));
    out.push_back(q.get_num().get_si());
  }
  return out;
}

Weight RootSystem::from_dynkin(const std::vector<long>& labels) const {
  RationalVector q(labels.begin(), labels.end());
  return from_dynkin(q);
}

Weight RootSystem::from_dynkin(const RationalVector& labels) const {
  if (labels.size() != fundamental_.size())
    throw Error(ErrorKind::DimensionMismatch, "expected " + std::to_string(fundamental_.size()) + " Dynkin labels");
  Weight w(ambient_dim_);
  for (std::size_t i = 0; i < labels.size(); ++i) w += labels[i] * fundamental_[i];
  return w;
}

bool RootSystem::is_integral(const Weight& w) const {
  if (w.size() != ambient_dim_) return false;
  auto labels = dynkin_labels(w);
  if (!std::all_of(labels.begin(), labels.end(), [](const Rational& q) { return is_integer(q); })) return false;
  // Must lie in the span of the roots (matters for A and E realizations).
  return from_dynkin(labels) == w;
}

bool RootSystem::is_dominant_integral(const Weight& w) const {
  if (!is_integral(w)) return false;
  auto labels = dynkin_labels(w);
  return std::all_of(labels.begin(), labels.end(), [](const Rational& q) { return q >= 0; });
}

std::vector<long> RootSystem::simple_coefficients(const Weight& w) const {
  const std::size_t r = simple_.size();
  RationalVector b(r);
  for (std::size_t i = 0; i < r; ++i) b[i] = inner_product(w, simple_[i]);
  std::vector<long> out(r);
  Weight check(ambient_dim_);
  for (std::size_t i = 0; i < r; ++i) {
    Rational c = 0;
    for (std::size_t j = 0; j < r; ++j) c += gram_inverse_[i][j] * b[j];
    if (!is_integer(c)) throw Error(ErrorKind::InvalidArgument, "not in the root lattice: " + to_string(w));
    out[i] = c.get_num().get_si();
    check += c * simple_[i];
  }
  if (!(check == w)) throw Error(ErrorKind::InvalidArgument, "not in the root lattice: " + to_string(w));
  return out;
}

long RootSystem::height(const Weight& root) const {
  long h = 0;
  for (long c : simple_coefficients(root)) h += c;
  return h;
}

std::optional<std::size_t> RootSystem::positive_index(const Weight& root) const {
  auto it = positive_lookup_.find(root);
  if (it == positive_lookup_.end()) return std::nullopt;
  return it->second;
}

bool RootSystem::is_root(const Weight& w) const {
  if (w.size() != ambient_dim_) return false;
  return positive_lookup_.count(w) > 0 || positive_lookup_.count(-w) > 0;
}

std::vector<long> RootSystem::coroot_coefficients(const Weight& root) const {
  auto k = simple_coefficients(root);
  Rational len = inner_product(root, root);
  std::vector<long> out(k.size());
  for (std::size_t i = 0; i < k.size(); ++i) {
    Rational c = k[i] * inner_product(simple_[i], simple_[i]) / len;
    out[i] = to_long(c);
  }
  return out;
}

Integer weyl_dimension(const RootSystem& rs, const Weight& lam) {
  if (!rs.is_dominant_integral(lam))
    throw Error(ErrorKind::NotDominantIntegral, to_string(lam) + " in " + to_string(rs.label()));
  Weight shifted = lam + rs.rho();
  Rational prod = 1;
  for (const auto& a : rs.positive_roots()) prod *= rs.inner_product(shifted, a) / rs.inner_product(rs.rho(), a);
  if (!is_integer(prod)) throw Error(ErrorKind::InternalInconsistency, "Weyl dimension not integral");
  return prod.get_num();
}

// ---------------------------------------------------------------------------
// Chevalley basis
// ---------------------------------------------------------------------------

ChevalleyBasis::ChevalleyBasis(RootSystem rs) : rs_(std::move(rs)) {
  const auto& pos = rs_.positive_roots();
  npos_ = pos.size();
  const std::size_t r = static_cast<std::size_t>(rs_.rank());
  dim_ = 2 * npos_ + r;
  weights_.reserve(dim_);
  for (const auto& a : pos) weights_.push_back(a);
  for (const auto& a : pos) weights_.push_back(-a);
  for (std::size_t i = 0; i < r; ++i) weights_.emplace_back(rs_.ambient_dim());
  for (std::size_t i = 0; i < 2 * npos_; ++i) root_lookup_.emplace(weights_[i], i);
  for (std::size_t i = 0; i < 2 * npos_; ++i) root_form_.push_back(2 / rs_.inner_product(weights_[i], weights_[i]));

  // Extraspecial pairs: smallest alpha (in root order) with xi - alpha positive.
  for (std::size_t x = 0; x < npos_; ++x) {
    if (rs_.height(pos[x]) == 1) continue;
    for (std::size_t a = 0; a < x; ++a) {
      auto b = rs_.positive_index(pos[x] - pos[a]);
      if (!b) continue;
      extraspecial_.emplace(x, std::make_pair(a, *b));
      break;
    }
  }

  table_.assign(dim_ * dim_, {});
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) {
      IntTerms& out = table_[i * dim_ + j];
      bool ri = !is_cartan(i), rj = !is_cartan(j);
      if (ri && rj) {
        Weight sum = weights_[i] + weights_[j];
        if (sum.is_zero()) {
          const bool positive = i < npos_;
          auto coeffs = rs_.coroot_coefficients(weights_[positive ? i : j]);
          for (std::size_t k = 0; k < r; ++k)
            if (coeffs[k] != 0) out.emplace_back(cartan(k), positive ? coeffs[k] : -coeffs[k]);
        } else if (long n = compute_n(i, j); n != 0) {
          out.emplace_back(root_lookup_.at(sum), n);
        }
      } else if (ri && !rj) {
        long c = to_long(rs_.dynkin_labels(weights_[i])[j - 2 * npos_]);
        if (c != 0) out.emplace_back(i, -c);
      } else if (!ri && rj) {
        long c = to_long(rs_.dynkin_labels(weights_[j])[i - 2 * npos_]);
        if (c != 0) out.emplace_back(j, c);
      }
    }
}

std::optional<std::size_t> ChevalleyBasis::root_id(const Weight& w) const {
  auto it = root_lookup_.find(w);
  if (it == root_lookup_.end()) return std::nullopt;
  return it->second;
}

long ChevalleyBasis::compute_n(std::size_t a, std::size_t b) {
  Weight sum = weights_[a] + weights_[b];
  if (sum.is_zero()) return 0;
  auto s = root_id(sum);
  if (!s) return 0;
  if (auto it = n_memo_.find({a, b}); it != n_memo_.end()) return it->second;

  auto len = [&](std::size_t idx) { return rs_.inner_product(weights_[idx], weights_[idx]); };
  auto neg = [&](std::size_t idx) { return idx < npos_ ? idx + npos_ : idx - npos_; };
  auto as_long = [](const Rational& q) {
    if (!is_integer(q)) throw Error(ErrorKind::InternalInconsistency, "non-integral structure constant");
    return q.get_num().get_si();
  };

  long result = 0;
  const bool pa = a < npos_, pb = b < npos_;
  if (pa && pb) {
    if (a > b) {
      result = -compute_n(b, a);
    } else {
      const auto [ap, bp] = extraspecial_.at(*s);
      if (a == ap) {
        // p = largest integer with beta - p alpha a root.
        long p = 0;
        Weight probe = weights_[b] - weights_[a];
        while (rs_.is_root(probe)) {
          ++p;
          probe -= weights_[a];
        }
        result = p + 1;
      } else {
        Rational acc = 0;
        if (rs_.is_root(weights_[b] - weights_[ap])) {
          Weight d = weights_[b] - weights_[ap];
          acc += Rational(compute_n(b, neg(ap)) * compute_n(a, neg(bp))) / rs_.inner_product(d, d);
        }
        if (rs_.is_root(weights_[a] - weights_[ap])) {
          Weight d = weights_[a] - weights_[ap];
          acc += Rational(compute_n(neg(ap), a) * compute_n(b, neg(bp))) / rs_.inner_product(d, d);
        }
        result = as_long(len(*s) * acc / compute_n(ap, bp));
      }
    }
  } else if (!pa && !pb) {
    result = -compute_n(neg(a), neg(b));
  } else {
    // x + y + z = 0: N_{x,y}/(z,z) = N_{y,z}/(x,x) = N_{z,x}/(y,y).
    const std::size_t c = neg(*s);
    const bool pc = c < npos_;
    if (pc == pa) {
      result = as_long(len(c) / len(b) * compute_n(c, a));
    } else {
      result = as_long(len(c) / len(a) * compute_n(b, c));
    }
  }
  n_memo_.emplace(std::make_pair(a, b), result);
  return result;
}

std::size_t ChevalleyBasis::root_vector(const Weight& root) const {
  auto id = root_id(root);
  if (!id) throw Error(ErrorKind::UnresolvedRootLabel, to_string(root) + " is not a root of " + to_string(rs_.label()));
  return *id;
}

std::size_t ChevalleyBasis::opposite(std::size_t idx) const {
  if (is_cartan(idx)) return idx;
  return idx < npos_ ? idx + npos_ : idx - npos_;
}

std::size_t ChevalleyBasis::simple_raising(std::size_t i) const { return root_vector(rs_.simple_roots().at(i)); }

std::size_t ChevalleyBasis::simple_lowering(std::size_t i) const { return root_vector(-rs_.simple_roots().at(i)); }

LieElement ChevalleyBasis::bracket(const LieElement& x, const LieElement& y) const {
  LieElement out(dim_, Rational(0));
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (y[j] == 0) continue;
      Rational c = x[i] * y[j];
      for (const auto& [k, n] : bracket(i, j)) out[k] += c * n;
    }
  }
  return out;
}

Rational ChevalleyBasis::form(std::size_t i, std::size_t j) const {
  if (is_cartan(i) && is_cartan(j)) {
    const auto& s = rs_.simple_roots();
    const auto& a = s[i - 2 * npos_];
    const auto& b = s[j - 2 * npos_];
    return 4 * rs_.inner_product(a, b) / (rs_.inner_product(a, a) * rs_.inner_product(b, b));
  }
  if (is_cartan(i) || is_cartan(j)) return 0;
  if (opposite(i) != j) return 0;
  return root_form_[i];
}

long ChevalleyBasis::structure_constant(const Weight& alpha, const Weight& beta) const {
  std::size_t a = root_vector(alpha), b = root_vector(beta);
  const auto& terms = bracket(a, b);
  Weight sum = alpha + beta;
  if (sum.is_zero()) return 0;
  for (const auto& [k, n] : terms)
    if (!is_cartan(k)) return n;
  return 0;
}

std::pair<Weight, Weight> ChevalleyBasis::extraspecial_pair(const Weight& xi) const {
  auto id = root_id(xi);
  if (!id || *id >= npos_ || !extraspecial_.count(*id))
    throw Error(ErrorKind::InvalidArgument, to_string(xi) + " is not a non-simple positive root");
  const auto& [a, b] = extraspecial_.at(*id);
  return {weights_[a], weights_[b]};
}

std::string ChevalleyBasis::basis_name(std::size_t idx) const {
  if (is_cartan(idx)) return "h" + std::to_string(idx - 2 * npos_ + 1);
  return "e" + to_string(weights_[idx]);
}

LieElement ChevalleyBasis::unit(std::size_t idx) const {
  LieElement e(dim_, Rational(0));
  e.at(idx) = 1;
  return e;
}

ChevalleyBasis chevalley_constants(const RootSystem& rs) { return ChevalleyBasis(rs); }

std::optional<std::tuple<std::size_t, std::size_t, std::size_t>> find_jacobi_violation(const ChevalleyBasis& basis) {
  const std::size_t n = basis.dim();
  std::vector<long> acc(n, 0);
  std::vector<std::size_t> touched;
  auto add = [&](std::size_t x, std::size_t y, std::size_t z) {
    // [[x, y], z]
    for (const auto& [k, c] : basis.bracket(x, y))
      for (const auto& [m, d] : basis.bracket(k, z)) {
        if (acc[m] == 0) touched.push_back(m);
        acc[m] += c * d;
      }
  };
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y)
      for (std::size_t z = y + 1; z < n; ++z) {
        touched.clear();
        add(x, y, z);
        add(y, z, x);
        add(z, x, y);
        bool bad = false;
        for (std::size_t m : touched) {
          if (acc[m] != 0) bad = true;
          acc[m] = 0;
        }
        if (bad) return std::make_tuple(x, y, z);
      }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Root labels
// ---------------------------------------------------------------------------

Weight resolve_root_label(const RootSystem& rs, std::string_view label) {
  auto fail = [&]() -> Weight {
    throw Error(ErrorKind::UnresolvedRootLabel, "'" + std::string(label) + "' in " + to_string(rs.label()));
  };
  const std::size_t dim = rs.ambient_dim();
  Weight w(dim);
  if (!label.empty() && label.front() == '(') {
    // E6 shorthand (S): plus signs on the listed indices, minus elsewhere.
    if (rs.label().series != Series::E || label.back() != ')') return fail();
    std::string_view digits = label.substr(1, label.size() - 2);
    bool plus[5] = {false, false, false, false, false};
    for (char c : digits) {
      if (c < '1' || c > '5' || plus[c - '1']) return fail();
      plus[c - '1'] = true;
    }
    const Rational half(1, 2);
    for (std::size_t i = 0; i < 5; ++i) w[i] = plus[i] ? half : -half;
    w[5] = -half;
    w[6] = -half;
    w[7] = half;
  } else {
    // Sum of terms [+-][k]e<i>.
    std::size_t pos = 0;
    bool any = false;
    while (pos < label.size()) {
      int sign = 1;
      if (label[pos] == '+' || label[pos] == '-') {
        sign = label[pos] == '-' ? -1 : 1;
        ++pos;
      } else if (any) {
        return fail();
      }
      long coef = 0;
      bool has_coef = false;
      while (pos < label.size() && std::isdigit(static_cast<unsigned char>(label[pos]))) {
        coef = coef * 10 + (label[pos++] - '0');
        has_coef = true;
      }
      if (!has_coef) coef = 1;
      if (pos >= label.size() || label[pos] != 'e') return fail();
      ++pos;
      long idx = 0;
      bool has_idx = false;
      while (pos < label.size() && std::isdigit(static_cast<unsigned char>(label[pos]))) {
        idx = idx * 10 + (label[pos++] - '0');
        has_idx = true;
      }
      if (!has_idx || idx < 1 || static_cast<std::size_t>(idx) > dim) return fail();
      w[idx - 1] += sign * coef;
      any = true;
    }
    if (!any) return fail();
  }
  if (!rs.is_root(w)) return fail();
  return w;
}

// ---------------------------------------------------------------------------
// Embeddings
// ---------------------------------------------------------------------------

LieElement cartan_element_from_functional(const ChevalleyBasis& basis, const RationalVector& functional) {
  const auto& rs = basis.root_system();
  const std::size_t r = static_cast<std::size_t>(rs.rank());
  // alpha_j(sum_k c_k h_k) = sum_k c_k a_kj.
  linalg::DenseMatrix at(r, RationalVector(r));
  RationalVector rhs(r);
  for (std::size_t j = 0; j < r; ++j) {
    for (std::size_t k = 0; k < r; ++k) at[j][k] = rs.cartan_matrix()[k][j];
    rhs[j] = dot(functional, rs.simple_roots()[j].coords);
  }
  RationalVector c = linalg::solve(at, rhs);
  LieElement h(basis.dim(), Rational(0));
  for (std::size_t k = 0; k < r; ++k) h[basis.cartan(k)] = c[k];
  for (const auto& root : rs.positive_roots()) {
    Rational value = 0;
    auto labels = rs.dynkin_labels(root);
    for (std::size_t k = 0; k < r; ++k) value += c[k] * labels[k];
    if (value != dot(functional, root.coords))
      throw Error(ErrorKind::VerificationFailed, "functional is not realized on the Cartan subalgebra");
  }
  return h;
}

std::size_t generated_subalgebra_dim(const ChevalleyBasis& basis, const std::vector<LieElement>& gens) {
  auto to_sparse = [](const LieElement& x) {
    linalg::SparseVector v;
    for (std::size_t i = 0; i < x.size(); ++i)
      if (x[i] != 0) v.emplace_back(i, x[i]);
    return v;
  };
  linalg::EchelonBasis span;
  std::deque<LieElement> queue;
  for (const auto& g : gens)
    if (span.insert(to_sparse(g))) queue.push_back(g);
  while (!queue.empty()) {
    LieElement x = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : gens) {
      LieElement y = basis.bracket(g, x);
      if (span.insert(to_sparse(y))) queue.push_back(std::move(y));
    }
  }
  return span.rank();
}

namespace {

LieElement add(LieElement a, const LieElement& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

bool is_zero(const LieElement& x) {
  return std::all_of(x.begin(), x.end(), [](const Rational& q) { return q == 0; });
}

bool is_multiple(const LieElement& x, const LieElement& y, const Rational& c) {
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] != c * y[i]) return false;
  return true;
}

void verify_serre(const ChevalleyBasis& basis, const EmbeddingSpec& spec) {
  const auto sub = RootSystem::build(spec.sub);
  const auto& a = sub.cartan_matrix();
  const std::size_t r = spec.raising.size();
  auto fail = [&](const std::string& what) {
    throw Error(ErrorKind::VerificationFailed, "embedding " + to_string(spec.sub) + " in " + to_string(spec.ambient) +
                                                   ": " + what);
  };
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      if (!is_multiple(basis.bracket(spec.cartan[i], spec.raising[j]), spec.raising[j], a[i][j]))
        fail("[h_i, e_j] != a_ij e_j");
      if (!is_multiple(basis.bracket(spec.cartan[i], spec.lowering[j]), spec.lowering[j], -a[i][j]))
        fail("[h_i, f_j] != -a_ij f_j");
      LieElement ef = basis.bracket(spec.raising[i], spec.lowering[j]);
      if (i == j ? !is_multiple(ef, spec.cartan[i], 1) : !is_zero(ef)) fail("[e_i, f_j] != delta_ij h_i");
      if (!is_zero(basis.bracket(spec.cartan[i], spec.cartan[j]))) fail("Cartan images do not commute");
      if (i == j) continue;
      LieElement xe = spec.raising[j], xf = spec.lowering[j];
      for (int k = 0; k < 1 - a[i][j]; ++k) {
        xe = basis.bracket(spec.raising[i], xe);
        xf = basis.bracket(spec.lowering[i], xf);
      }
      if (!is_zero(xe) || !is_zero(xf)) fail("Serre relation fails");
    }
  if (!spec.cartan_element_H.empty()) {
    for (std::size_t i = 0; i < r; ++i)
      if (!is_zero(basis.bracket(spec.cartan_element_H, spec.raising[i])) ||
          !is_zero(basis.bracket(spec.cartan_element_H, spec.lowering[i])))
        fail("H does not centralize the sub-algebra");
  }
}

}  // namespace

EmbeddingSpec build_embedding(const ChevalleyBasis& basis, EmbeddingName name, int rank) {
  const auto& rs = basis.root_system();
  EmbeddingSpec spec{name, rs.label(), {}, {}, {}, {}, {}, {}};
  if (name == EmbeddingName::D5_in_E6) {
    if (rs.label() != SeriesLabel{Series::E, 6})
      throw Error(ErrorKind::InvalidArgument, "D5_in_E6 needs the E6 algebra");
    spec.sub = SeriesLabel{Series::D, 5};
    // D5 simple roots in the order of the D5 Dynkin labels 1..5.
    spec.generator_labels = {"(5)", "e2+e1", "e3-e2", "e2-e1", "e4-e3"};
    for (const auto& label : spec.generator_labels) {
      Weight root = resolve_root_label(rs, label);
      spec.raising.push_back(basis.unit(basis.root_vector(root)));
      spec.lowering.push_back(basis.unit(basis.root_vector(-root)));
    }
    // H = (h8 - h7 - h6 - 3 h5)/3 with eps_i(h_j) = delta_ij.
    RationalVector functional(8, Rational(0));
    functional[7] = Rational(1, 3);
    functional[6] = Rational(-1, 3);
    functional[5] = Rational(-1, 3);
    functional[4] = -1;
    spec.cartan_element_H = cartan_element_from_functional(basis, functional);
  } else {
    if (rank < 2 || rs.label() != SeriesLabel{Series::A, 2 * rank - 1})
      throw Error(ErrorKind::InvalidArgument, "C_in_A needs A_{2l-1} with l >= 2");
    spec.sub = SeriesLabel{Series::C, rank};
    const std::size_t n = 2 * static_cast<std::size_t>(rank) - 1;
    for (std::size_t i = 0; i < static_cast<std::size_t>(rank); ++i) {
      std::size_t mirror = n - 1 - i;
      LieElement e = basis.unit(basis.simple_raising(i));
      LieElement f = basis.unit(basis.simple_lowering(i));
      if (mirror != i) {
        e = add(e, basis.unit(basis.simple_raising(mirror)));
        f = add(f, basis.unit(basis.simple_lowering(mirror)));
      }
      spec.raising.push_back(std::move(e));
      spec.lowering.push_back(std::move(f));
      spec.generator_labels.push_back(mirror != i ? "a" + std::to_string(i + 1) + "+a" + std::to_string(mirror + 1)
                                                  : "a" + std::to_string(i + 1));
    }
  }
  for (std::size_t i = 0; i < spec.raising.size(); ++i)
    spec.cartan.push_back(basis.bracket(spec.raising[i], spec.lowering[i]));
  verify_serre(basis, spec);
  return spec;
}

}  // namespace freefield::rootlie
