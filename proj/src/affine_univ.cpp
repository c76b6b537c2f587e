#include "freefield/affine_univ.hpp"

#include <algorithm>
#include <deque>
#include <functional>

#include "freefield/error.hpp"
#include "freefield/linalg.hpp"

namespace freefield::affine {

using rootlie::RootSystem;
using rootlie::Series;

std::uint32_t pbw_key(std::size_t idx, int mode) {
  return (static_cast<std::uint32_t>(mode + 0x8000) << 16) | static_cast<std::uint32_t>(idx);
}

std::size_t key_index(std::uint32_t key) { return key & 0xFFFFu; }

int key_mode(std::uint32_t key) { return static_cast<int>(key >> 16) - 0x8000; }

int degree(const PBWMonomial& m) {
  int d = 0;
  for (auto k : m) d -= key_mode(k);
  return d;
}

void prune(PBWVector& v) {
  for (auto it = v.begin(); it != v.end();) it = it->second == 0 ? v.erase(it) : std::next(it);
}

void add_scaled(PBWVector& y, const Rational& a, const PBWVector& x) {
  if (a == 0) return;
  for (const auto& [m, c] : x) {
    if (c == 0) continue;
    auto [it, inserted] = y.try_emplace(m, a * c);
    if (!inserted) {
      it->second += a * c;
      if (it->second == 0) y.erase(it);
    }
  }
}

AffineAlgebra::AffineAlgebra(const SeriesLabel& label, Rational k, int cutoff)
    : AffineAlgebra(std::make_shared<const ChevalleyBasis>(RootSystem::build(label)), std::move(k), cutoff) {}

AffineAlgebra::AffineAlgebra(std::shared_ptr<const ChevalleyBasis> basis, Rational k, int cutoff)
    : basis_(std::move(basis)), k_(std::move(k)), cutoff_(cutoff) {
  if (cutoff_ < 0) throw Error(ErrorKind::InvalidArgument, "negative degree cutoff");
}

PBWVector AffineAlgebra::vacuum() const { return PBWVector{{PBWMonomial{}, Rational(1)}}; }

void AffineAlgebra::apply_into(std::size_t x, int n, const std::uint32_t* m, std::size_t len, const Rational& coef,
                               PBWVector& out) const {
  if (len == 0) {
    if (n < 0) out[PBWMonomial{pbw_key(x, n)}] += coef;
    return;
  }
  if (n < 0) {
    std::uint32_t kx = pbw_key(x, n);
    if (kx <= m[0]) {
      PBWMonomial mono;
      mono.reserve(len + 1);
      mono.push_back(kx);
      mono.insert(mono.end(), m, m + len);
      out[std::move(mono)] += coef;
      return;
    }
  }
  // x(n) y(n1) rest = y(n1) x(n) rest + [x, y](n + n1) rest + n delta_{n+n1,0} k <x, y> rest
  const std::size_t y = key_index(m[0]);
  const int n1 = key_mode(m[0]);
  PBWVector inner;
  apply_into(x, n, m + 1, len - 1, Rational(1), inner);
  for (const auto& [mono, c] : inner) {
    if (c == 0) continue;
    apply_into(y, n1, mono.data(), mono.size(), coef * c, out);
  }
  for (const auto& [z, c] : basis_->bracket(x, y)) apply_into(z, n + n1, m + 1, len - 1, coef * c, out);
  if (n + n1 == 0) {
    Rational f = basis_->form(x, y);
    if (f != 0 && k_ != 0) out[PBWMonomial(m + 1, m + len)] += coef * n * k_ * f;
  }
}

PBWVector AffineAlgebra::act_mode(std::size_t x, int n, const PBWVector& v) const {
  if (x >= basis_->dim()) throw Error(ErrorKind::InvalidArgument, "basis index out of range");
  PBWVector out;
  for (const auto& [mono, c] : v) {
    if (affine::degree(mono) - n > cutoff_)
      throw Error(ErrorKind::CutoffExceeded, "degree " + std::to_string(affine::degree(mono) - n) +
                                                 " above cutoff " + std::to_string(cutoff_));
    apply_into(x, n, mono.data(), mono.size(), c, out);
  }
  prune(out);
  return out;
}

PBWVector AffineAlgebra::act(const LieElement& x, int n, const PBWVector& v) const {
  PBWVector out;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] != 0) add_scaled(out, x[i], act_mode(i, n, v));
  return out;
}

std::vector<PBWMonomial> AffineAlgebra::pbw_basis(int d, const std::optional<Weight>& weight) const {
  if (d > cutoff_) throw Error(ErrorKind::CutoffExceeded, "degree " + std::to_string(d) + " above cutoff");
  std::vector<std::uint32_t> keys;
  for (int n = -d; n <= -1; ++n)
    for (std::size_t i = 0; i < basis_->dim(); ++i) keys.push_back(pbw_key(i, n));
  std::sort(keys.begin(), keys.end());
  std::vector<PBWMonomial> out;
  PBWMonomial cur;
  std::function<void(std::size_t, int)> rec = [&](std::size_t start, int left) {
    if (left == 0) {
      if (!weight || this->weight(cur) == *weight) out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i < keys.size(); ++i) {
      int deg = -key_mode(keys[i]);
      if (deg > left) continue;
      cur.push_back(keys[i]);
      rec(i, left - deg);
      cur.pop_back();
    }
  };
  rec(0, d);
  std::sort(out.begin(), out.end());
  return out;
}

Weight AffineAlgebra::weight(const PBWMonomial& m) const {
  Weight w(basis_->root_system().ambient_dim());
  for (auto k : m) w += basis_->weight(key_index(k));
  return w;
}

std::optional<Weight> AffineAlgebra::weight(const PBWVector& v) const {
  if (v.empty()) return std::nullopt;
  Weight w = weight(v.begin()->first);
  for (const auto& [m, c] : v)
    if (!(weight(m) == w)) return std::nullopt;
  return w;
}

std::optional<int> AffineAlgebra::degree(const PBWVector& v) const {
  if (v.empty()) return std::nullopt;
  int d = affine::degree(v.begin()->first);
  for (const auto& [m, c] : v)
    if (affine::degree(m) != d) return std::nullopt;
  return d;
}

std::string AffineAlgebra::to_string(const PBWVector& v) const {
  if (v.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : v) {
    if (!out.empty()) out += " + ";
    out += "(" + c.get_str() + ")";
    for (auto k : m) out += " " + basis_->basis_name(key_index(k)) + "(" + std::to_string(key_mode(k)) + ")";
    out += " 1";
  }
  return out;
}

SingularResult is_singular(const AffineAlgebra& alg, const PBWVector& v) {
  const auto& basis = alg.basis();
  const std::size_t r = static_cast<std::size_t>(basis.root_system().rank());
  for (std::size_t i = 0; i < r; ++i) {
    PBWVector w = alg.act_mode(basis.simple_raising(i), 0, v);
    if (!w.empty()) return {false, "e" + std::to_string(i + 1) + "(0)", std::move(w)};
  }
  PBWVector w = alg.act_mode(basis.lowest_root_vector(), 1, v);
  if (!w.empty()) return {false, "f_theta(1)", std::move(w)};
  return {true, "", {}};
}

namespace {

class MonomialIndex {
 public:
  linalg::SparseVector sparse(const PBWVector& v) {
    std::map<std::size_t, Rational> m;
    for (const auto& [mono, c] : v) {
      auto [it, inserted] = index_.try_emplace(mono, index_.size());
      m.emplace(it->second, c);
    }
    return linalg::from_map(m);
  }

 private:
  std::map<PBWMonomial, std::size_t> index_;
};

}  // namespace

std::map<int, std::size_t> ideal_graded_dims(const AffineAlgebra& alg, const PBWVector& v, int max_degree) {
  if (max_degree > alg.cutoff())
    throw Error(ErrorKind::CutoffExceeded, "degree " + std::to_string(max_degree) + " above cutoff");
  auto d0 = alg.degree(v);
  if (!d0) throw Error(ErrorKind::InvalidArgument, "generator must be nonzero and homogeneous");
  std::map<int, std::size_t> dims;
  for (int d = 0; d <= max_degree; ++d) dims[d] = 0;
  if (*d0 > max_degree) return dims;

  MonomialIndex index;
  std::map<int, linalg::EchelonBasis> spaces;
  std::deque<std::pair<int, PBWVector>> queue;
  if (spaces[*d0].insert(index.sparse(v))) queue.emplace_back(*d0, v);
  const std::size_t dim = alg.basis().dim();
  while (!queue.empty()) {
    auto [d, w] = std::move(queue.front());
    queue.pop_front();
    for (int n = d - max_degree; n <= d; ++n)
      for (std::size_t x = 0; x < dim; ++x) {
        PBWVector y = alg.act_mode(x, n, w);
        if (y.empty()) continue;
        if (spaces[d - n].insert(index.sparse(y))) queue.emplace_back(d - n, std::move(y));
      }
  }
  for (const auto& [d, space] : spaces) dims[d] = space.rank();
  return dims;
}

// ---------------------------------------------------------------------------
// Type A matrix units
// ---------------------------------------------------------------------------

std::pair<int, int> gl_indices(const Weight& root) {
  int i = 0, j = 0;
  for (std::size_t p = 0; p < root.size(); ++p) {
    if (root[p] == 1) i = static_cast<int>(p) + 1;
    if (root[p] == -1) j = static_cast<int>(p) + 1;
  }
  if (i == 0 || j == 0) throw Error(ErrorKind::InvalidArgument, "not a type A root: " + rootlie::to_string(root));
  return {i, j};
}

std::vector<int> gl_realization_signs(const ChevalleyBasis& basis) {
  const auto& rs = basis.root_system();
  if (rs.label().series != Series::A) throw Error(ErrorKind::InvalidArgument, "matrix units need type A");
  const auto& pos = rs.positive_roots();
  std::vector<int> c(pos.size(), 0);
  for (std::size_t x = 0; x < pos.size(); ++x) {
    if (rs.height(pos[x]) == 1) {
      c[x] = 1;
      continue;
    }
    auto [a, b] = basis.extraspecial_pair(pos[x]);
    auto [ai, aj] = gl_indices(a);
    auto [bi, bj] = gl_indices(b);
    // [X_{ai aj}, X_{bi bj}] = delta_{ai bj} X_{bi aj} - delta_{aj bi} X_{ai bj}
    int sigma = ai == bj ? 1 : (aj == bi ? -1 : 0);
    long n = basis.structure_constant(a, b);
    if (sigma == 0 || std::labs(n) != 1) throw Error(ErrorKind::InternalInconsistency, "bad type A extraspecial pair");
    c[x] = c[*rs.positive_index(a)] * c[*rs.positive_index(b)] * sigma * static_cast<int>(n);
  }
  return c;
}

// ---------------------------------------------------------------------------
// Explicit singular vectors
// ---------------------------------------------------------------------------

namespace {

std::string kind_name(VectorKind kind, int rank) {
  switch (kind) {
    case VectorKind::A_type: return "A_type(" + std::to_string(rank) + ")";
    case VectorKind::D_type: return "D_type(" + std::to_string(rank) + ")";
    case VectorKind::E6: return "E6";
  }
  return "";
}

SeriesLabel algebra_label(VectorKind kind, int rank) {
  switch (kind) {
    case VectorKind::A_type:
      if (rank < 3 || rank > 17) throw Error(ErrorKind::InvalidArgument, "A_type needs 3 <= l <= 17");
      return {Series::A, rank - 1};
    case VectorKind::D_type:
      if (rank < 3 || rank > 16) throw Error(ErrorKind::InvalidArgument, "D_type needs 3 <= l <= 16");
      return {Series::D, rank};
    case VectorKind::E6: return {Series::E, 6};
  }
  throw Error(ErrorKind::InvalidArgument, "unknown vector");
}

Rational default_level(VectorKind kind, int rank) {
  switch (kind) {
    case VectorKind::A_type: return -1;
    case VectorKind::D_type: return 2 - rank;
    case VectorKind::E6: return -3;
  }
  return 0;
}

std::vector<PBWVector> quadratic_monomials(const AffineAlgebra& alg, VectorKind kind, int rank) {
  const auto& basis = alg.basis();
  const auto& rs = basis.root_system();
  std::vector<PBWVector> out;
  for (const auto& [a, b] : quadratic_terms(kind, rank)) {
    std::size_t ia = basis.root_vector(rootlie::resolve_root_label(rs, a));
    std::size_t ib = basis.root_vector(rootlie::resolve_root_label(rs, b));
    out.push_back(alg.act_mode(ia, -1, alg.act_mode(ib, -1, alg.vacuum())));
  }
  return out;
}

// Normalized type A elements: e_{eps_i - eps_j} = X_ij and friends.
LieElement gl_e(const ChevalleyBasis& basis, const std::vector<int>& signs, int i, int j) {
  const auto& rs = basis.root_system();
  Weight root(rs.ambient_dim());
  root[i - 1] = 1;
  root[j - 1] = -1;
  LieElement x = basis.unit(basis.root_vector(root));
  auto p = rs.positive_index(i < j ? root : -root);
  for (auto& q : x) q *= signs[*p];
  return x;
}

LieElement gl_h(const ChevalleyBasis& basis, int i, int j) {
  // h_{eps_i - eps_j} = X_jj - X_ii = sum_{k=i}^{j-1} h_k for i < j.
  LieElement x(basis.dim(), Rational(0));
  for (int k = i; k < j; ++k) x[basis.cartan(k - 1)] = 1;
  return x;
}

}  // namespace

std::vector<std::pair<std::string, std::string>> quadratic_terms(VectorKind kind, int rank) {
  std::vector<std::pair<std::string, std::string>> out;
  if (kind == VectorKind::D_type) {
    for (int i = 2; i <= rank; ++i) out.emplace_back("e1-e" + std::to_string(i), "e1+e" + std::to_string(i));
  } else if (kind == VectorKind::E6) {
    out = {{"(5)", "(12345)"}, {"(125)", "(345)"}, {"(135)", "(245)"}, {"(235)", "(145)"}};
  } else {
    throw Error(ErrorKind::InvalidArgument, "A_type is not a sum of quadratic terms");
  }
  return out;
}

std::optional<std::vector<int>> sign_table(VectorKind kind, int rank) {
  // Relative signs under the extraspecial-pair Chevalley basis; reproduced by derive_signs.
  static const std::map<int, std::vector<int>> d_table = {
      {3, {1, 1}},
      {4, {1, 1, 1}},
      {5, {1, 1, 1, 1}},
      {6, {1, 1, 1, 1, 1}},
      {7, {1, 1, 1, 1, 1, 1}},
      {8, {1, 1, 1, 1, 1, 1, 1}},
  };
  static const std::vector<int> e6_table = {1, -1, 1, -1};
  if (kind == VectorKind::E6) return e6_table;
  if (kind == VectorKind::D_type) {
    auto it = d_table.find(rank);
    if (it != d_table.end()) return it->second;
  }
  return std::nullopt;
}

std::vector<int> derive_signs(VectorKind kind, int rank) {
  AffineAlgebra alg(algebra_label(kind, rank), default_level(kind, rank), 2);
  auto terms = quadratic_monomials(alg, kind, rank);
  const auto& basis = alg.basis();
  std::vector<std::pair<std::size_t, int>> ops;
  for (std::size_t i = 0; i < static_cast<std::size_t>(basis.root_system().rank()); ++i)
    ops.emplace_back(basis.simple_raising(i), 0);
  ops.emplace_back(basis.lowest_root_vector(), 1);

  // Stack the images of every term under every raising operator into one column.
  std::map<std::pair<std::size_t, PBWMonomial>, std::size_t> index;
  std::vector<linalg::SparseVector> columns;
  for (const auto& t : terms) {
    std::map<std::size_t, Rational> col;
    for (std::size_t o = 0; o < ops.size(); ++o)
      for (const auto& [m, c] : alg.act_mode(ops[o].first, ops[o].second, t)) {
        auto [it, inserted] = index.try_emplace({o, m}, index.size());
        col[it->second] += c;
      }
    columns.push_back(linalg::from_map(col));
  }
  auto kernel = linalg::nullspace(columns);
  auto fail = [&](const std::string& why) -> std::vector<int> {
    throw Error(ErrorKind::VerificationFailed, kind_name(kind, rank) + ": " + why);
  };
  if (kernel.size() != 1) return fail("kernel of dimension " + std::to_string(kernel.size()));
  const auto& k = kernel.front();
  if (k.size() != terms.size()) return fail("kernel vector misses a term");
  std::vector<int> signs;
  const int flip = k.front().second > 0 ? 1 : -1;
  for (const auto& [i, c] : k) {
    if (c != 1 && c != -1) return fail("kernel entries are not signs");
    signs.push_back(flip * (c > 0 ? 1 : -1));
  }
  return signs;
}

ExplicitVector build_paper_vector(VectorKind kind, int rank, int cutoff) {
  if (kind == VectorKind::E6) rank = 6;
  AffineAlgebra alg(algebra_label(kind, rank), default_level(kind, rank), cutoff);
  const auto& basis = alg.basis();
  ExplicitVector out{kind, rank, alg, {}, ""};

  if (kind == VectorKind::A_type) {
    auto signs = gl_realization_signs(basis);
    const int l = rank;
    auto e = [&](int i, int j) { return gl_e(basis, signs, i, j); };
    auto apply = [&](std::initializer_list<LieElement> ops) {
      // Rightmost operator acts first.
      PBWVector v = alg.vacuum();
      std::vector<LieElement> seq(ops);
      for (auto it = seq.rbegin(); it != seq.rend(); ++it) v = alg.act(*it, -1, v);
      return v;
    };
    if (l >= 4) {
      out.vector = apply({e(1, l), e(2, l - 1)});
      add_scaled(out.vector, -1, apply({e(2, l), e(1, l - 1)}));
      out.formula = "e_{e1-e" + std::to_string(l) + "}(-1) e_{e2-e" + std::to_string(l - 1) + "}(-1)1 - e_{e2-e" +
                    std::to_string(l) + "}(-1) e_{e1-e" + std::to_string(l - 1) + "}(-1)1";
    } else {
      out.vector = apply({e(2, 3), e(2, 3), e(1, 2)});
      add_scaled(out.vector, -1, apply({e(1, 3), e(2, 3), gl_h(basis, 1, 2)}));
      add_scaled(out.vector, -1, apply({e(1, 3), e(1, 3), e(2, 1)}));
      out.formula =
          "e_{e2-e3}(-1)^2 e_{e1-e2}(-1)1 - e_{e1-e3}(-1) e_{e2-e3}(-1) h_{e1-e2}(-1)1 - e_{e1-e3}(-1)^2 "
          "f_{e1-e2}(-1)1";
    }
    return out;
  }

  auto signs = sign_table(kind, rank);
  std::vector<int> s = signs ? *signs : derive_signs(kind, rank);
  auto terms = quadratic_monomials(alg, kind, rank);
  auto labels = quadratic_terms(kind, rank);
  for (std::size_t i = 0; i < terms.size(); ++i) {
    add_scaled(out.vector, Rational(s[i]), terms[i]);
    if (i) out.formula += s[i] > 0 ? " + " : " - ";
    else if (s[i] < 0) out.formula += "-";
    out.formula += "e_{" + labels[i].first + "}(-1) e_{" + labels[i].second + "}(-1)1";
  }
  return out;
}

}  // namespace freefield::affine
