#include "freefield/fock.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <random>
#include <sstream>

#include "freefield/error.hpp"
#include "freefield/linalg.hpp"

namespace freefield::fock {

namespace {

constexpr std::uint32_t kTwiceMax = 0xFFFF;

void check_species(int ell, int species) {
  if (species < 1 || species > ell)
    throw Error(ErrorKind::InvalidArgument,
                "species " + std::to_string(species) + " outside 1.." + std::to_string(ell));
}

std::uint32_t raw_key(int species, Sign sign, int twice_abs) {
  return ((kTwiceMax - static_cast<std::uint32_t>(twice_abs)) << 16) |
         (static_cast<std::uint32_t>(species) << 1) | (sign == Sign::Minus ? 1u : 0u);
}

int key_twice_abs(std::uint32_t key) { return static_cast<int>(kTwiceMax - (key >> 16)); }
int key_species(std::uint32_t key) { return static_cast<int>((key & 0xFFFF) >> 1); }
Sign key_sign(std::uint32_t key) { return (key & 1u) ? Sign::Minus : Sign::Plus; }

Sign opposite(Sign s) { return s == Sign::Plus ? Sign::Minus : Sign::Plus; }

/// One Weyl mode on one monomial: a single monomial times an integer, or nothing.
std::optional<std::pair<FockMonomial, long>> apply_mono(int species, Sign sign, int twice_index,
                                                        const FockMonomial& m) {
  if (twice_index < 0) {
    FockMonomial out = m;
    std::uint32_t key = raw_key(species, sign, -twice_index);
    out.insert(std::upper_bound(out.begin(), out.end(), key), key);
    return std::make_pair(std::move(out), 1L);
  }
  std::uint32_t partner = raw_key(species, opposite(sign), twice_index);
  auto [lo, hi] = std::equal_range(m.begin(), m.end(), partner);
  long count = hi - lo;
  if (count == 0) return std::nullopt;
  FockMonomial out;
  out.reserve(m.size() - 1);
  out.insert(out.end(), m.begin(), lo);
  out.insert(out.end(), lo + 1, m.end());
  // [a^+(r), a^-(-r)] = 1 and [a^-(r), a^+(-r)] = -1
  return std::make_pair(std::move(out), sign == Sign::Plus ? count : -count);
}

void accumulate(FockVector& out, FockMonomial&& m, const Rational& c) {
  auto [it, inserted] = out.try_emplace(std::move(m), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) out.erase(it);
  }
}

/// X_ij(n) on a single monomial, scaled by c.
void current_into(int i, int j, int n, const FockMonomial& m, const Rational& c, FockVector& out) {
  const int d2 = twice_degree(m);
  const int reach = (d2 + 2 * std::abs(n) + 1) | 1;
  for (int p = -reach; p <= reach; p += 2) {
    const int q = 2 * n - p;
    if (p < 0) {
      auto first = apply_mono(j, Sign::Minus, q, m);
      if (!first) continue;
      auto second = apply_mono(i, Sign::Plus, p, first->first);
      if (!second) continue;
      accumulate(out, std::move(second->first), c * (first->second * second->second));
    } else {
      auto first = apply_mono(i, Sign::Plus, p, m);
      if (!first) continue;
      auto second = apply_mono(j, Sign::Minus, q, first->first);
      if (!second) continue;
      accumulate(out, std::move(second->first), c * (first->second * second->second));
    }
  }
}

class MonomialIndex {
 public:
  std::size_t id(const FockMonomial& m) {
    auto [it, inserted] = ids_.try_emplace(m, ids_.size());
    return it->second;
  }
  linalg::SparseVector sparse(const FockVector& v, std::size_t offset = 0) {
    std::map<std::size_t, Rational> tmp;
    for (const auto& [m, c] : v) tmp[offset + id(m)] = c;
    return linalg::from_map(tmp);
  }

 private:
  std::map<FockMonomial, std::size_t> ids_;
};

int twice_of(const Rational& d, const char* what) {
  Rational t = 2 * d;
  if (!is_integer(t) || t < 0) throw Error(ErrorKind::InvalidArgument, std::string(what) + " must lie in 1/2 Z>=0");
  return static_cast<int>(to_long(t));
}

FockVector from_sparse(const linalg::SparseVector& v, const std::vector<FockMonomial>& basis) {
  FockVector out;
  for (const auto& [j, c] : v) out.emplace(basis[j], c);
  return out;
}

/// Kernel of the stacked operators on span(basis).
std::vector<linalg::SparseVector> stacked_kernel(int ell, const std::vector<FockMonomial>& basis,
                                                 const std::vector<RaisingOperator>& ops) {
  std::vector<MonomialIndex> targets(ops.size());
  std::vector<std::size_t> offsets(ops.size());
  // Each operator gets its own block of target coordinates.
  constexpr std::size_t kBlock = std::size_t{1} << 40;
  for (std::size_t o = 0; o < ops.size(); ++o) offsets[o] = o * kBlock;
  std::vector<linalg::SparseVector> images;
  images.reserve(basis.size());
  for (const auto& m : basis) {
    FockVector unit{{m, Rational(1)}};
    linalg::SparseVector col;
    for (std::size_t o = 0; o < ops.size(); ++o) {
      FockVector y = apply_current(ell, ops[o].x, ops[o].mode, unit);
      auto part = targets[o].sparse(y, offsets[o]);
      col.insert(col.end(), part.begin(), part.end());
    }
    images.push_back(std::move(col));
  }
  return linalg::nullspace(images);
}

}  // namespace

WeylMode WeylMode::make(int species, Sign sign, const Rational& index) {
  Rational t = 2 * index;
  if (!is_integer(t) || t.get_num() % 2 == 0)
    throw Error(ErrorKind::InvalidArgument, "Weyl mode index must lie in 1/2 + Z");
  return {species, sign, static_cast<int>(to_long(t))};
}

std::uint32_t mode_key(const WeylMode& mode) {
  if (!mode.creation()) throw Error(ErrorKind::InvalidArgument, "only creation modes have monomial keys");
  return raw_key(mode.species, mode.sign, -mode.twice_index);
}

WeylMode key_to_mode(std::uint32_t key) { return {key_species(key), key_sign(key), -key_twice_abs(key)}; }

int twice_degree(const FockMonomial& m) {
  int t = 0;
  for (auto k : m) t += key_twice_abs(k);
  return t;
}

Rational degree(const FockMonomial& m) { return frac(twice_degree(m), 2); }

int charge(const FockMonomial& m) {
  int c = 0;
  for (auto k : m) c += key_sign(k) == Sign::Plus ? 1 : -1;
  return c;
}

std::vector<int> gl_weight(int ell, const FockMonomial& m) {
  std::vector<int> w(ell, 0);
  for (auto k : m) w[key_species(k) - 1] += key_sign(k) == Sign::Plus ? 1 : -1;
  return w;
}

FockVector vacuum() { return {{FockMonomial{}, Rational(1)}}; }

void add_scaled(FockVector& y, const Rational& a, const FockVector& x) {
  if (a == 0) return;
  for (const auto& [m, c] : x) {
    FockMonomial copy = m;
    accumulate(y, std::move(copy), a * c);
  }
}

std::string to_string(const FockVector& v) {
  if (v.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : v) {
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    Rational a = abs(c);
    bool need_space = false;
    if (a != 1 || m.empty()) {
      os << freefield::to_string(a);
      need_space = true;
    }
    for (auto k : m) {
      if (need_space) os << " ";
      need_space = true;
      os << "a" << key_species(k) << (key_sign(k) == Sign::Plus ? "+" : "-") << "(-" << key_twice_abs(k) << "/2)";
    }
  }
  return os.str();
}

FockVector apply_weyl_mode(int ell, const WeylMode& mode, const FockVector& v) {
  check_species(ell, mode.species);
  if (mode.twice_index % 2 == 0) throw Error(ErrorKind::InvalidArgument, "Weyl mode index must lie in 1/2 + Z");
  FockVector out;
  for (const auto& [m, c] : v) {
    auto r = apply_mono(mode.species, mode.sign, mode.twice_index, m);
    if (r) accumulate(out, std::move(r->first), c * r->second);
  }
  return out;
}

GlElement GlElement::X(int i, int j, const Rational& c) {
  GlElement g;
  if (c != 0) g.terms[{i, j}] = c;
  return g;
}

GlElement GlElement::H(int ell) {
  GlElement g;
  for (int i = 1; i <= ell; ++i) g.terms[{i, i}] = -1;
  return g;
}

GlElement& GlElement::add(const GlElement& o, const Rational& c) {
  for (const auto& [ij, a] : o.terms) {
    Rational& t = terms[ij];
    t += c * a;
    if (t == 0) terms.erase(ij);
  }
  return *this;
}

bool GlElement::is_zero() const { return terms.empty(); }

GlElement gl_bracket(const GlElement& x, const GlElement& y) {
  GlElement out;
  for (const auto& [ij, a] : x.terms)
    for (const auto& [kl, b] : y.terms) {
      auto [i, j] = ij;
      auto [k, l] = kl;
      if (i == l) out.add(GlElement::X(k, j, a * b));
      if (j == k) out.add(GlElement::X(i, l, -a * b));
    }
  return out;
}

Rational gl_form(const GlElement& x, const GlElement& y) {
  Rational s = 0;
  for (const auto& [ij, a] : x.terms) {
    auto it = y.terms.find({ij.second, ij.first});
    if (it != y.terms.end()) s += a * it->second;
  }
  return s;
}

FockVector apply_current(int ell, const GlElement& x, int n, const FockVector& v) {
  for (const auto& [ij, a] : x.terms) {
    check_species(ell, ij.first);
    check_species(ell, ij.second);
  }
  FockVector out;
  for (const auto& [ij, a] : x.terms)
    for (const auto& [m, c] : v) current_into(ij.first, ij.second, n, m, a * c, out);
  return out;
}

GlElement gl_image(const affine::ChevalleyBasis& basis, const std::vector<int>& signs, std::size_t idx) {
  const std::size_t npos = basis.num_positive();
  if (basis.is_cartan(idx)) {
    int k = static_cast<int>(idx - 2 * npos) + 1;
    return GlElement::X(k + 1, k + 1).add(GlElement::X(k, k), -1);
  }
  if (idx < npos) {
    auto [i, j] = affine::gl_indices(basis.weight(idx));
    return GlElement::X(i, j, signs[idx]);
  }
  auto [i, j] = affine::gl_indices(basis.weight(basis.opposite(idx)));
  return GlElement::X(j, i, signs[idx - npos]);
}

std::vector<FockMonomial> sector_basis(int ell, int s, const Rational& d) {
  if (ell < 1) throw Error(ErrorKind::InvalidArgument, "l must be positive");
  const int d2 = twice_of(d, "degree");
  std::vector<FockMonomial> out;
  if (std::abs(s) > d2 || (d2 - s) % 2 != 0) return out;
  std::vector<std::uint32_t> keys;
  for (int t = 1; t <= d2; t += 2)
    for (int i = 1; i <= ell; ++i)
      for (Sign sg : {Sign::Plus, Sign::Minus}) keys.push_back(raw_key(i, sg, t));
  std::sort(keys.begin(), keys.end());
  FockMonomial cur;
  auto rec = [&](auto&& self, std::size_t from, int remaining, int c) -> void {
    if (remaining == 0) {
      if (c == s) out.push_back(cur);
      return;
    }
    if (std::abs(s - c) > remaining) return;
    for (std::size_t k = from; k < keys.size(); ++k) {
      int t = key_twice_abs(keys[k]);
      if (t > remaining) continue;
      cur.push_back(keys[k]);
      self(self, k, remaining - t, c + (key_sign(keys[k]) == Sign::Plus ? 1 : -1));
      cur.pop_back();
    }
  };
  rec(rec, 0, d2, 0);
  std::sort(out.begin(), out.end());
  return out;
}

ConformalVectors conformal_vectors(int ell) {
  if (ell < 2) throw Error(ErrorKind::InvalidArgument, "conformal vectors need l >= 2");
  ConformalVectors cv;
  auto mode = [](int i, Sign s, int twice) { return WeylMode{i, s, twice}; };
  for (int i = 1; i <= ell; ++i) {
    FockVector a = apply_weyl_mode(ell, mode(i, Sign::Minus, -3),
                                   apply_weyl_mode(ell, mode(i, Sign::Plus, -1), vacuum()));
    FockVector b = apply_weyl_mode(ell, mode(i, Sign::Plus, -3),
                                   apply_weyl_mode(ell, mode(i, Sign::Minus, -1), vacuum()));
    add_scaled(cv.omega, Rational(1, 2), a);
    add_scaled(cv.omega, Rational(-1, 2), b);
  }

  auto sq = [&](const GlElement& x, const GlElement& y) {
    return apply_current(ell, x, -1, apply_current(ell, y, -1, vacuum()));
  };
  FockVector sug;
  for (int i = 1; i <= ell; ++i)
    for (int j = i + 1; j <= ell; ++j) {
      GlElement e = GlElement::X(i, j), f = GlElement::X(j, i);
      add_scaled(sug, 1, sq(e, f));
      add_scaled(sug, 1, sq(f, e));
    }
  for (int i = 1; i < ell; ++i) {
    GlElement h;
    for (int r = 1; r <= i; ++r) h.add(GlElement::X(r, r), -1);
    h.add(GlElement::X(i + 1, i + 1), i);
    add_scaled(sug, Rational(1, i * (i + 1)), sq(h, h));
  }
  add_scaled(cv.omega_sug, Rational(1, 2 * (ell - 1)), sug);

  GlElement H = GlElement::H(ell);
  add_scaled(cv.omega_one, Rational(-1, 2 * ell), sq(H, H));
  return cv;
}

FockVector phi_image(int ell, const affine::AffineAlgebra& alg, const affine::PBWVector& v) {
  const auto& label = alg.basis().root_system().label();
  if (label.series != rootlie::Series::A || label.rank != ell - 1)
    throw Error(ErrorKind::InvalidArgument, "phi needs the A_{l-1} algebra");
  if (alg.k() != -1) throw Error(ErrorKind::InvalidArgument, "phi is defined at level -1");
  auto signs = affine::gl_realization_signs(alg.basis());
  FockVector out;
  for (const auto& [mono, c] : v) {
    FockVector w = vacuum();
    for (auto it = mono.rbegin(); it != mono.rend() && !w.empty(); ++it)
      w = apply_current(ell, gl_image(alg.basis(), signs, affine::key_index(*it)), affine::key_mode(*it), w);
    add_scaled(out, c, w);
  }
  return out;
}

FockVector lowest_vector(int ell, int s) {
  FockVector v = vacuum();
  WeylMode m = s >= 0 ? WeylMode{1, Sign::Plus, -1} : WeylMode{ell, Sign::Minus, -1};
  for (int i = 0; i < std::abs(s); ++i) v = apply_weyl_mode(ell, m, v);
  return v;
}

std::vector<RaisingOperator> raising_operators(int ell, int max_h_mode) {
  std::vector<RaisingOperator> ops;
  for (int i = 1; i < ell; ++i) ops.push_back({"e" + std::to_string(i) + "(0)", GlElement::X(i, i + 1), 0});
  ops.push_back({"f_theta(1)", GlElement::X(ell, 1), 1});
  for (int n = 1; n <= max_h_mode; ++n) ops.push_back({"H(" + std::to_string(n) + ")", GlElement::H(ell), n});
  return ops;
}

bool ScanResult::clean() const {
  if (!lowest_singular) return false;
  return std::all_of(cells.begin(), cells.end(), [](const ScanCell& c) { return c.extra.empty(); });
}

ScanResult singular_scan(const SectorIndex& idx, std::size_t bound) {
  if (idx.ell < 2) throw Error(ErrorKind::InvalidArgument, "scan needs l >= 2");
  const int cut2 = twice_of(idx.cutoff, "cutoff");
  ScanResult res;
  res.index = idx;
  const int low2 = std::abs(idx.charge);
  FockVector expected = lowest_vector(idx.ell, idx.charge);
  {
    res.lowest_singular = true;
    for (const auto& op : raising_operators(idx.ell, (cut2 + 1) / 2))
      if (!apply_current(idx.ell, op.x, op.mode, expected).empty()) res.lowest_singular = false;
  }
  for (int d2 = low2; d2 <= cut2; d2 += 2) {
    Rational d = frac(d2, 2);
    auto basis = sector_basis(idx.ell, idx.charge, d);
    if (basis.size() > bound)
      throw Error(ErrorKind::BoundExceeded, "sector of dimension " + std::to_string(basis.size()) + " exceeds bound");
    ScanCell cell;
    cell.degree = d;
    cell.sector_dim = basis.size();
    auto kernel = stacked_kernel(idx.ell, basis, raising_operators(idx.ell, d2 / 2));
    cell.kernel_dim = kernel.size();
    if (d2 == low2 && res.lowest_singular) {
      std::map<FockMonomial, std::size_t> pos;
      for (std::size_t j = 0; j < basis.size(); ++j) pos[basis[j]] = j;
      linalg::EchelonBasis span;
      std::map<std::size_t, Rational> e;
      for (const auto& [m, c] : expected) e[pos.at(m)] = c;
      span.insert(linalg::from_map(e));
      for (auto& k : kernel)
        if (span.insert(k)) cell.extra.push_back(from_sparse(k, basis));
    } else {
      for (auto& k : kernel) cell.extra.push_back(from_sparse(k, basis));
    }
    res.cells.push_back(std::move(cell));
  }
  return res;
}

GradedCharacter graded_character(const SectorIndex& idx, bool strict, std::size_t bound) {
  const int cut2 = twice_of(idx.cutoff, "cutoff");
  GradedCharacter ch;
  ch.index = idx;
  const int low2 = std::abs(idx.charge);
  for (int d2 = low2; d2 <= cut2; d2 += 2) {
    auto basis = sector_basis(idx.ell, idx.charge, frac(d2, 2));
    if (basis.size() > bound)
      throw Error(ErrorKind::BoundExceeded, "sector of dimension " + std::to_string(basis.size()) + " exceeds bound");
    ch.degrees.push_back(frac(d2, 2));
    ch.dims.push_back(static_cast<long>(basis.size()));
    std::map<std::vector<int>, long> w;
    for (const auto& m : basis) ++w[gl_weight(idx.ell, m)];
    ch.weights.push_back(std::move(w));
  }
  const std::size_t n = ch.dims.size();
  // prod_{m>=1} (1 - q^m) truncated at q^{n-1}
  std::vector<long> euler(n, 0);
  if (n > 0) euler[0] = 1;
  for (std::size_t m = 1; m < n; ++m)
    for (std::size_t k = n - 1; k >= m; --k) {
      euler[k] -= euler[k - m];
      if (k == m) break;
    }
  auto divide = [&](const std::vector<long>& a) {
    std::vector<long> out(n, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; i + j < n; ++j) out[i + j] += a[i] * euler[j];
    return out;
  };
  ch.quotient = divide(ch.dims);
  std::map<std::vector<int>, std::vector<long>> series;
  for (std::size_t k = 0; k < n; ++k)
    for (const auto& [w, mult] : ch.weights[k]) {
      auto& sr = series[w];
      sr.resize(n, 0);
      sr[k] = mult;
    }
  for (const auto& [w, sr] : series) ch.weight_quotient[w] = divide(sr);
  ch.top_weight.assign(idx.ell, 0);
  if (idx.charge >= 0) ch.top_weight[0] = idx.charge;
  else ch.top_weight[idx.ell - 1] = idx.charge;
  if (strict) {
    auto check = [](const std::vector<long>& q, const std::string& what) {
      for (std::size_t k = 0; k < q.size(); ++k)
        if (q[k] < 0)
          throw Error(ErrorKind::NonIntegralQuotient,
                      "negative quotient coefficient at q^" + std::to_string(k) + " (" + what + ")");
    };
    check(ch.quotient, "dimensions");
    for (const auto& [w, q] : ch.weight_quotient) check(q, "weight");
    auto it = ch.weight_quotient.find(ch.top_weight);
    if (n > 0 && (it == ch.weight_quotient.end() || it->second[0] != 1))
      throw Error(ErrorKind::NonIntegralQuotient, "top weight does not occur once at the lowest degree");
  }
  return ch;
}

std::vector<std::size_t> gl_invariant_dims(int ell, int max_degree, std::size_t bound) {
  if (ell < 2) throw Error(ErrorKind::InvalidArgument, "invariants need l >= 2");
  std::vector<RaisingOperator> ops;
  for (int i = 1; i < ell; ++i) {
    ops.push_back({"e", GlElement::X(i, i + 1), 0});
    ops.push_back({"f", GlElement::X(i + 1, i), 0});
  }
  std::vector<std::size_t> dims;
  for (int d = 0; d <= max_degree; ++d) {
    auto all = sector_basis(ell, 0, d);
    if (all.size() > bound)
      throw Error(ErrorKind::BoundExceeded, "sector of dimension " + std::to_string(all.size()) + " exceeds bound");
    std::vector<FockMonomial> basis;
    const std::vector<int> zero(ell, 0);
    for (auto& m : all)
      if (gl_weight(ell, m) == zero) basis.push_back(std::move(m));
    dims.push_back(stacked_kernel(ell, basis, ops).size());
  }
  return dims;
}

PropertyReport property_suite(int ell, std::size_t samples, std::uint64_t seed) {
  if (ell < 1) throw Error(ErrorKind::InvalidArgument, "l must be positive");
  std::vector<FockMonomial> basis;
  for (int d2 = 0; d2 <= 6; ++d2)
    for (int s = -d2; s <= d2; ++s)
      for (auto& m : sector_basis(ell, s, frac(d2, 2))) basis.push_back(std::move(m));
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
  std::uniform_int_distribution<int> sp(1, ell), md(-2, 2), half(-3, 2), kind(0, 2);
  PropertyReport rep;
  auto fail = [&](const std::string& what) {
    ++rep.failure_count;
    if (rep.failures.size() < 5) rep.failures.push_back(what);
  };
  auto minus = [](FockVector a, const FockVector& b) {
    add_scaled(a, -1, b);
    return a;
  };
  const GlElement H = GlElement::H(ell);
  for (std::size_t t = 0; t < samples; ++t) {
    const FockMonomial& m = basis[pick(rng)];
    const FockVector v{{m, Rational(1)}};
    const std::string at = " on " + to_string(v);

    // CCR
    {
      int i = sp(rng), j = sp(rng), r = 2 * half(rng) + 1, q = 2 * half(rng) + 1;
      WeylMode ap{i, Sign::Plus, r}, am{j, Sign::Minus, q};
      FockVector c = minus(apply_weyl_mode(ell, ap, apply_weyl_mode(ell, am, v)),
                           apply_weyl_mode(ell, am, apply_weyl_mode(ell, ap, v)));
      FockVector want = (i == j && r + q == 0) ? v : FockVector{};
      ++rep.ccr_checks;
      if (c != want) fail("CCR [a" + std::to_string(i) + "+(" + std::to_string(r) + "/2), a" + std::to_string(j) + "-(" +
                          std::to_string(q) + "/2)]" + at);
    }

    // affine relations at level -1
    {
      GlElement x = GlElement::X(sp(rng), sp(rng)), y = GlElement::X(sp(rng), sp(rng));
      int a = md(rng), b = md(rng);
      FockVector lhs = minus(apply_current(ell, x, a, apply_current(ell, y, b, v)),
                             apply_current(ell, y, b, apply_current(ell, x, a, v)));
      FockVector rhs = apply_current(ell, gl_bracket(x, y), a + b, v);
      if (a + b == 0) add_scaled(rhs, -a * gl_form(x, y), v);
      ++rep.affine_checks;
      if (lhs != rhs) fail("affine relation, modes " + std::to_string(a) + "," + std::to_string(b) + at);
    }

    // charge additivity and grading
    {
      int k = kind(rng), cx = 0, shift2 = 0;
      FockVector y;
      if (k == 2) {
        int n = md(rng);
        y = apply_current(ell, GlElement::X(sp(rng), sp(rng)), n, v);
        shift2 = -2 * n;
      } else {
        int twice = 2 * half(rng) + 1;
        cx = k == 0 ? 1 : -1;
        y = apply_weyl_mode(ell, {sp(rng), k == 0 ? Sign::Plus : Sign::Minus, twice}, v);
        shift2 = -twice;
      }
      FockVector want;
      add_scaled(want, cx + charge(m), y);
      ++rep.charge_checks;
      bool graded = std::all_of(y.begin(), y.end(),
                                [&](const auto& e) { return twice_degree(e.first) == twice_degree(m) + shift2; });
      if (apply_current(ell, H, 0, y) != want || !graded) fail("charge/grading" + at);
    }
  }
  return rep;
}

}  // namespace freefield::fock
