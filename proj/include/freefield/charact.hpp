#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "freefield/rational.hpp"
#include "freefield/rootlie.hpp"

namespace freefield::charact {

using rootlie::RootSystem;
using rootlie::SeriesLabel;
using rootlie::Weight;

/// Dynkin-label coordinates of an integral weight.
using Labels = std::vector<long>;

inline constexpr long kDefaultDimensionBound = 1000000;

/// Weight multiplicities of a finite-dimensional irreducible module.
struct CharacterTable {
  SeriesLabel label;
  Weight highest_weight;
  std::map<Labels, long> multiplicities;  // keyed by Dynkin labels

  long dimension() const;
  /// Same data keyed by epsilon coordinates.
  std::map<Weight, long> entries(const RootSystem& rs) const;
};

struct Component {
  Weight highest_weight;
  Labels labels;
  long multiplicity = 0;
  friend bool operator==(const Component&, const Component&) = default;
};

/// Components sorted by Dynkin labels in descending lexicographic order.
using DecompositionList = std::vector<Component>;

/// Full character via the Freudenthal recursion on dominant weights and Weyl orbits.
/// Throws NotDominantIntegral, DimensionBoundExceeded.
CharacterTable weight_multiplicities(const RootSystem& rs, const Weight& lam, long bound = kDefaultDimensionBound);

/// Multiplicities of the dominant weights only.
std::map<Labels, long> dominant_multiplicities(const RootSystem& rs, const Labels& lam);

/// Brute-force decomposition of V(lam) (x) V(mu): character product, then
/// repeated subtraction of the character of the highest remaining weight.
DecompositionList tensor_decompose(const RootSystem& rs, const Weight& lam, const Weight& mu,
                                   long bound = kDefaultDimensionBound);

/// Sum of multiplicity * dim over a decomposition.
Integer total_dimension(const RootSystem& rs, const DecompositionList& list);

enum class TypeACase { I, II, III };

/// Closed-form decompositions of V(r w1) (x) V(s w1), V(r w_l) (x) V(s w_l)
/// and V(r w1) (x) V(s w_l) for A_l, r >= s >= 0, l >= 2.
DecompositionList type_a_rule(int rank, TypeACase which, long r, long s);

/// U(t) for D_l: V(t w_{l-1}) for t >= 0, V(-t w_l) for t < 0.
Weight u_weight(const RootSystem& rs, long t);

struct OkadaResult {
  bool closed_form = false;  // false for mixed signs: answered by the oracle
  DecompositionList components;
  /// (t, multiplicity) for every summand isomorphic to some U(t).
  std::vector<std::pair<long, long>> u_summands;
};

/// U(r) (x) U(s) for D_l with l odd. Equal signs: closed form
/// { sum_{j odd <= l-2} k_j w_j + k w_{l-1} : 2 sum k_j + k = |r|+|s|, sum k_j <= min(|r|,|s|) }
/// (w_l for negative signs). Mixed signs: tensor_decompose, reduced to the U summands.
/// Throws InvalidArgument for even or small l.
OkadaResult okada_rule(int rank, long r, long s);

/// The U(t) summands of a D_l decomposition.
std::vector<std::pair<long, long>> u_summands(const RootSystem& rs, const DecompositionList& list);

}  // namespace freefield::charact
