#include "freefield/charact.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <set>

#include "freefield/error.hpp"

namespace freefield::charact {

namespace {

// Integer data for label arithmetic: simple roots and the scaled form on labels.
struct LabelSpace {
  std::size_t r = 0;
  std::vector<Labels> simple;    // Dynkin labels of alpha_i
  std::vector<Labels> positive;  // Dynkin labels of positive roots
  std::vector<std::vector<long>> form;  // L * (omega_i, omega_j)
  Labels rho;

  explicit LabelSpace(const RootSystem& rs) : r(rs.simple_roots().size()) {
    for (const auto& a : rs.simple_roots()) simple.push_back(rs.integral_labels(a));
    for (const auto& a : rs.positive_roots()) positive.push_back(rs.integral_labels(a));
    const auto& fw = rs.fundamental_weights();
    Integer den = 1;
    std::vector<std::vector<Rational>> q(r, std::vector<Rational>(r));
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) {
        q[i][j] = rs.inner_product(fw[i], fw[j]);
        den = lcm(den, Integer(q[i][j].get_den()));
      }
    form.assign(r, std::vector<long>(r));
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) form[i][j] = to_long(q[i][j] * den);
    rho.assign(r, 1);
  }

  long ip(const Labels& a, const Labels& b) const {
    long s = 0;
    for (std::size_t i = 0; i < r; ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < r; ++j) s += a[i] * form[i][j] * b[j];
    }
    return s;
  }

  static bool dominant(const Labels& w) {
    return std::all_of(w.begin(), w.end(), [](long x) { return x >= 0; });
  }

  Labels dominant_conjugate(Labels w) const {
    for (;;) {
      std::size_t i = 0;
      while (i < r && w[i] >= 0) ++i;
      if (i == r) return w;
      long c = w[i];
      for (std::size_t j = 0; j < r; ++j) w[j] -= c * simple[i][j];
    }
  }

  std::vector<Labels> orbit(const Labels& w) const {
    std::set<Labels> seen{w};
    std::deque<Labels> queue{w};
    while (!queue.empty()) {
      Labels x = queue.front();
      queue.pop_front();
      for (std::size_t i = 0; i < r; ++i) {
        if (x[i] == 0) continue;
        Labels y = x;
        for (std::size_t j = 0; j < r; ++j) y[j] -= x[i] * simple[i][j];
        if (seen.insert(y).second) queue.push_back(std::move(y));
      }
    }
    return {seen.begin(), seen.end()};
  }
};

Labels add(Labels a, const Labels& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

Labels sub(Labels a, const Labels& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

std::map<Labels, long> dominant_table(const LabelSpace& sp, const Labels& lam) {
  // Dominant weights below lam are connected to lam through dominant steps by positive roots.
  std::set<Labels> found{lam};
  std::deque<Labels> queue{lam};
  while (!queue.empty()) {
    Labels x = queue.front();
    queue.pop_front();
    for (const auto& a : sp.positive) {
      Labels y = sub(x, a);
      if (LabelSpace::dominant(y) && found.insert(y).second) queue.push_back(std::move(y));
    }
  }
  Labels lam_rho = add(lam, sp.rho);
  const long top = sp.ip(lam_rho, lam_rho);
  std::vector<std::pair<long, Labels>> order;
  for (const auto& w : found) {
    Labels wr = add(w, sp.rho);
    order.emplace_back(sp.ip(wr, wr), w);
  }
  std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first > b.first;
    return a.second > b.second;
  });

  std::map<Labels, long> mult;
  for (const auto& [norm, mu] : order) {
    if (mu == lam) {
      mult[mu] = 1;
      continue;
    }
    long num = 0;
    for (const auto& a : sp.positive) {
      Labels w = add(mu, a);
      for (;;) {
        auto it = mult.find(sp.dominant_conjugate(w));
        if (it == mult.end()) break;
        num += it->second * sp.ip(w, a);
        w = add(w, a);
      }
    }
    long den = top - norm;
    if (den <= 0 || (2 * num) % den != 0)
      throw Error(ErrorKind::InternalInconsistency, "Freudenthal recursion produced a non-integer multiplicity");
    long m = 2 * num / den;
    if (m > 0) mult[mu] = m;
  }
  return mult;
}

void check_bound(const RootSystem& rs, const Weight& lam, long bound, Integer& dim) {
  dim = rootlie::weyl_dimension(rs, lam);
  if (dim > bound)
    throw Error(ErrorKind::DimensionBoundExceeded,
                "dimension " + dim.get_str() + " exceeds bound " + std::to_string(bound));
}

Component make_component(const RootSystem& rs, const Labels& labels, long mult) {
  return Component{rs.from_dynkin(labels), labels, mult};
}

void sort_list(DecompositionList& list) {
  std::sort(list.begin(), list.end(), [](const Component& a, const Component& b) { return a.labels > b.labels; });
}

}  // namespace

long CharacterTable::dimension() const {
  long d = 0;
  for (const auto& [w, m] : multiplicities) d += m;
  return d;
}

std::map<Weight, long> CharacterTable::entries(const RootSystem& rs) const {
  std::map<Weight, long> out;
  for (const auto& [w, m] : multiplicities) out.emplace(rs.from_dynkin(w), m);
  return out;
}

std::map<Labels, long> dominant_multiplicities(const RootSystem& rs, const Labels& lam) {
  LabelSpace sp(rs);
  if (lam.size() != sp.r || !LabelSpace::dominant(lam))
    throw Error(ErrorKind::NotDominantIntegral, "labels are not dominant integral");
  return dominant_table(sp, lam);
}

CharacterTable weight_multiplicities(const RootSystem& rs, const Weight& lam, long bound) {
  Integer dim;
  check_bound(rs, lam, bound, dim);
  LabelSpace sp(rs);
  Labels top = rs.integral_labels(lam);
  CharacterTable table{rs.label(), lam, {}};
  for (const auto& [mu, m] : dominant_table(sp, top))
    for (const auto& w : sp.orbit(mu)) table.multiplicities.emplace(w, m);
  if (table.dimension() != dim)
    throw Error(ErrorKind::InternalInconsistency, "character dimension disagrees with the Weyl dimension");
  return table;
}

DecompositionList tensor_decompose(const RootSystem& rs, const Weight& lam, const Weight& mu, long bound) {
  Integer dl = rootlie::weyl_dimension(rs, lam);
  Integer dm = rootlie::weyl_dimension(rs, mu);
  if (dl * dm > bound)
    throw Error(ErrorKind::DimensionBoundExceeded,
                "product dimension " + Integer(dl * dm).get_str() + " exceeds bound " + std::to_string(bound));
  LabelSpace sp(rs);
  CharacterTable cl = weight_multiplicities(rs, lam, bound);
  CharacterTable cm = weight_multiplicities(rs, mu, bound);

  std::map<Labels, long> product;
  for (const auto& [a, ma] : cl.multiplicities)
    for (const auto& [b, mb] : cm.multiplicities) {
      Labels w = add(a, b);
      if (LabelSpace::dominant(w)) product[w] += ma * mb;
    }

  DecompositionList out;
  while (!product.empty()) {
    auto best = product.begin();
    long best_key = sp.ip(best->first, sp.rho);
    for (auto it = product.begin(); it != product.end(); ++it) {
      long key = sp.ip(it->first, sp.rho);
      if (key > best_key || (key == best_key && it->first > best->first)) {
        best = it;
        best_key = key;
      }
    }
    const Labels top = best->first;
    const long m = best->second;
    if (m < 0) throw Error(ErrorKind::InternalInconsistency, "negative multiplicity while peeling");
    out.push_back(make_component(rs, top, m));
    for (const auto& [w, k] : dominant_table(sp, top)) {
      long& slot = product[w];
      slot -= m * k;
      if (slot < 0) throw Error(ErrorKind::InternalInconsistency, "negative multiplicity while peeling");
      if (slot == 0) product.erase(w);
    }
  }
  sort_list(out);
  if (total_dimension(rs, out) != dl * dm)
    throw Error(ErrorKind::InternalInconsistency, "tensor decomposition fails the dimension balance");
  return out;
}

Integer total_dimension(const RootSystem& rs, const DecompositionList& list) {
  Integer sum = 0;
  for (const auto& c : list) sum += c.multiplicity * rootlie::weyl_dimension(rs, c.highest_weight);
  return sum;
}

DecompositionList type_a_rule(int rank, TypeACase which, long r, long s) {
  if (rank < 2) throw Error(ErrorKind::InvalidArgument, "type A rule needs rank >= 2");
  if (s < 0 || r < s) throw Error(ErrorKind::InvalidArgument, "type A rule needs r >= s >= 0");
  auto rs = RootSystem::build({rootlie::Series::A, rank});
  const std::size_t l = static_cast<std::size_t>(rank);
  DecompositionList out;
  for (long k = 0; k <= s; ++k) {
    Labels w(l, 0);
    switch (which) {
      case TypeACase::I:
        w[0] += r + s - 2 * k;
        w[1] += k;
        break;
      case TypeACase::II:
        w[l - 1] += r + s - 2 * k;
        w[l - 2] += k;
        break;
      case TypeACase::III:
        w[0] += r - s + k;
        w[l - 1] += k;
        break;
    }
    out.push_back(make_component(rs, w, 1));
  }
  sort_list(out);
  return out;
}

Weight u_weight(const RootSystem& rs, long t) {
  if (rs.label().series != rootlie::Series::D) throw Error(ErrorKind::InvalidArgument, "U(t) is defined for type D");
  const auto& fw = rs.fundamental_weights();
  const std::size_t l = fw.size();
  return t >= 0 ? Rational(t) * fw[l - 2] : Rational(-t) * fw[l - 1];
}

std::vector<std::pair<long, long>> u_summands(const RootSystem& rs, const DecompositionList& list) {
  std::vector<std::pair<long, long>> out;
  const std::size_t l = rs.simple_roots().size();
  for (const auto& c : list) {
    bool other = false;
    for (std::size_t i = 0; i + 2 < l; ++i) other = other || c.labels[i] != 0;
    long a = c.labels[l - 2], b = c.labels[l - 1];
    if (other || (a != 0 && b != 0)) continue;
    out.emplace_back(a != 0 ? a : -b, c.multiplicity);
  }
  std::sort(out.begin(), out.end());
  return out;
}

OkadaResult okada_rule(int rank, long r, long s) {
  if (rank < 3 || rank % 2 == 0)
    throw Error(ErrorKind::InvalidArgument, "the Okada rule is implemented for odd rank >= 3 only");
  auto rs = RootSystem::build({rootlie::Series::D, rank});
  OkadaResult res;
  const std::size_t l = static_cast<std::size_t>(rank);
  if ((r >= 0 && s >= 0) || (r <= 0 && s <= 0)) {
    res.closed_form = true;
    const long total = std::labs(r) + std::labs(s);
    const long cap = std::min(std::labs(r), std::labs(s));
    const bool negative = r < 0 || s < 0;
    std::vector<std::size_t> odd;  // 0-based indices of w1, w3, ..., w_{l-2}
    for (std::size_t j = 0; j + 2 < l; j += 2) odd.push_back(j);
    Labels k(odd.size(), 0);
    // Enumerate compositions with sum(k) <= cap.
    std::vector<Labels> choices;
    std::function<void(std::size_t, long)> rec = [&](std::size_t pos, long left) {
      if (pos == k.size()) {
        choices.push_back(k);
        return;
      }
      for (long v = 0; v <= left; ++v) {
        k[pos] = v;
        rec(pos + 1, left - v);
      }
      k[pos] = 0;
    };
    rec(0, cap);
    for (const auto& ks : choices) {
      long sum = std::accumulate(ks.begin(), ks.end(), 0L);
      Labels w(l, 0);
      for (std::size_t i = 0; i < odd.size(); ++i) w[odd[i]] = ks[i];
      w[negative ? l - 1 : l - 2] = total - 2 * sum;
      res.components.push_back(make_component(rs, w, 1));
    }
    sort_list(res.components);
  } else {
    res.components = tensor_decompose(rs, u_weight(rs, r), u_weight(rs, s));
  }
  res.u_summands = u_summands(rs, res.components);
  return res;
}

}  // namespace freefield::charact
