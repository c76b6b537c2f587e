#include "freefield/linalg.hpp"

#include <numeric>

#include "freefield/error.hpp"

namespace freefield::linalg {

void axpy(SparseVector& y, const Rational& a, const SparseVector& x) {
  if (a == 0 || x.empty()) return;
  SparseVector out;
  out.reserve(y.size() + x.size());
  std::size_t i = 0, j = 0;
  while (i < y.size() || j < x.size()) {
    if (j == x.size() || (i < y.size() && y[i].first < x[j].first)) {
      out.push_back(std::move(y[i++]));
    } else if (i == y.size() || x[j].first < y[i].first) {
      out.emplace_back(x[j].first, a * x[j].second);
      ++j;
    } else {
      Rational s = y[i].second + a * x[j].second;
      if (s != 0) out.emplace_back(y[i].first, std::move(s));
      ++i;
      ++j;
    }
  }
  y = std::move(out);
}

SparseVector from_map(const std::map<std::size_t, Rational>& m) {
  SparseVector v;
  v.reserve(m.size());
  for (const auto& [k, c] : m)
    if (c != 0) v.emplace_back(k, c);
  return v;
}

void make_primitive(SparseVector& v) {
  if (v.empty()) return;
  Integer den_lcm = 1, num_gcd = 0;
  for (const auto& [k, c] : v) {
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
  }
  Rational scale(den_lcm, num_gcd);
  scale.canonicalize();
  if (v.front().second < 0) scale = -scale;
  for (auto& [k, c] : v) c *= scale;
}

SparseVector EchelonBasis::reduce(SparseVector v) const {
  while (!v.empty()) {
    auto it = rows_.find(v.front().first);
    if (it == rows_.end()) break;
    Rational a = -v.front().second;
    axpy(v, a, it->second);
  }
  return v;
}

bool EchelonBasis::insert(SparseVector v) {
  v = reduce(std::move(v));
  if (v.empty()) return false;
  Rational inv = 1 / v.front().second;
  for (auto& [k, c] : v) c *= inv;
  std::size_t pivot = v.front().first;
  rows_.emplace(pivot, std::move(v));
  return true;
}

std::vector<SparseVector> nullspace(const std::vector<SparseVector>& images) {
  struct Row {
    SparseVector image;
    SparseVector combo;
  };
  std::map<std::size_t, Row> pivots;
  std::vector<SparseVector> kernel;
  for (std::size_t j = 0; j < images.size(); ++j) {
    SparseVector r = images[j];
    SparseVector combo{{j, Rational(1)}};
    while (!r.empty()) {
      auto it = pivots.find(r.front().first);
      if (it == pivots.end()) break;
      Rational a = -r.front().second;
      axpy(r, a, it->second.image);
      axpy(combo, a, it->second.combo);
    }
    if (r.empty()) {
      make_primitive(combo);
      kernel.push_back(std::move(combo));
      continue;
    }
    Rational inv = 1 / r.front().second;
    for (auto& [k, c] : r) c *= inv;
    for (auto& [k, c] : combo) c *= inv;
    std::size_t p = r.front().first;
    pivots.emplace(p, Row{std::move(r), std::move(combo)});
  }
  return kernel;
}

std::size_t rank(const std::vector<SparseVector>& vectors) {
  EchelonBasis basis;
  for (const auto& v : vectors) basis.insert(v);
  return basis.rank();
}

DenseMatrix inverse(const DenseMatrix& m) {
  const std::size_t n = m.size();
  DenseMatrix a = m;
  DenseMatrix inv(n, RationalVector(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != n) throw Error(ErrorKind::DimensionMismatch, "matrix is not square");
    inv[i][i] = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) throw Error(ErrorKind::InternalInconsistency, "singular matrix");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    Rational s = 1 / a[col][col];
    for (std::size_t k = 0; k < n; ++k) {
      a[col][k] *= s;
      inv[col][k] *= s;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rational f = a[r][col];
      for (std::size_t k = 0; k < n; ++k) {
        a[r][k] -= f * a[col][k];
        inv[r][k] -= f * inv[col][k];
      }
    }
  }
  return inv;
}

RationalVector solve(const DenseMatrix& m, const RationalVector& b) {
  DenseMatrix inv = inverse(m);
  if (b.size() != inv.size()) throw Error(ErrorKind::DimensionMismatch, "right-hand side length");
  RationalVector x(inv.size(), Rational(0));
  for (std::size_t i = 0; i < inv.size(); ++i)
    for (std::size_t j = 0; j < inv.size(); ++j) x[i] += inv[i][j] * b[j];
  return x;
}

}  // namespace freefield::linalg
