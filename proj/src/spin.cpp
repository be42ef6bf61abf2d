#include "spinfactor/spin.hpp"

#include <algorithm>

namespace spinfactor {

Rat coweight_pairing(const RootSystem& rs, const Coweight& d, const Weight& w) {
  if (static_cast<int>(d.coeffs.size()) != rs.n) fail(ErrorKind::RootSystemMismatch, "coweight rank mismatch");
  auto coords = rs.alpha_coords(w);
  Rat acc = 0;
  for (int i = 0; i < rs.n; ++i) acc += rat_of(d.coeffs[i]) * coords[i];
  acc.canonicalize();
  return acc;
}

bool check_orthogonal_candidate(const RootSystem& rs, const FormalCharacter& chi) {
  decompose(rs, chi);  // throws NotACharacter unless chi is a genuine character
  return chi == chi.negated_weights();
}

namespace {

struct PositiveSide {
  std::vector<std::pair<Weight, unsigned long>> positives;  // d-positive weights with multiplicity
  Weight lambda2;                                           // doubled coordinates of Lambda
  unsigned long m0 = 0;
};

PositiveSide split_positive(const RootSystem& rs, const FormalCharacter& chi, const Coweight& d) {
  if (&chi.rs() != &rs) fail(ErrorKind::RootSystemMismatch, "character on a different root system");
  if (chi != chi.negated_weights()) fail(ErrorKind::NotSelfDual, "character is not self-dual");
  PositiveSide out;
  out.lambda2 = Weight::zero(rs.n);
  for (const auto& [w, c] : chi.terms()) {
    if (c < 0) fail(ErrorKind::NotACharacter, "negative multiplicity");
    if (!w.is_integral()) fail(ErrorKind::NotIntegral, "character weight is not integral");
    if (w.is_zero()) {
      out.m0 = static_cast<unsigned long>(to_ll(c));
      continue;
    }
    Rat p = coweight_pairing(rs, d, w);
    if (p == 0)
      fail(ErrorKind::ZeroPairing, "nonzero weight " + format_weight(w) + " pairs to zero with d");
    if (p > 0) {
      unsigned long m = static_cast<unsigned long>(to_ll(c));
      out.positives.emplace_back(w, m);
      for (int j = 0; j < rs.n; ++j) out.lambda2.c2[j] += static_cast<long long>(m) * (w.c2[j] / 2);
    }
  }
  return out;
}

}  // namespace

FormalCharacter spin0_character(const RootSystem& rs, const FormalCharacter& chi, const Coweight& d) {
  PositiveSide side = split_positive(rs, chi, d);
  for (int j = 0; j < rs.n; ++j)
    if (side.lambda2.c2[j] % 2 != 0)
      fail(ErrorKind::NonIntegralLambda, "half-sum of d-positive weights is not an integral weight");
  FormalCharacter out(rs);
  out.add(side.lambda2, 1);
  for (const auto& [w, m] : side.positives) out = multiply_binomial(out, -w, +1, m);
  return out;
}

FormalCharacter spin_character(const RootSystem& rs, const FormalCharacter& chi, const Coweight& d) {
  FormalCharacter out = spin0_character(rs, chi, d);
  unsigned long m0 = 0;
  Int z = chi.coeff(Weight::zero(rs.n));
  if (z < 0) fail(ErrorKind::NotACharacter, "negative multiplicity");
  m0 = static_cast<unsigned long>(to_ll(z));
  out *= pow2(m0 / 2);
  return out;
}

bool spin0_additivity_check(const RootSystem& rs, const FormalCharacter& chi1, const FormalCharacter& chi2,
                            const Coweight& d) {
  FormalCharacter lhs = spin0_character(rs, chi1 + chi2, d);
  FormalCharacter rhs = multiply(spin0_character(rs, chi1, d), spin0_character(rs, chi2, d));
  return lhs == rhs;
}

namespace {

// operators e_a on the wedge basis of subsets of I^+ = {1..p}; a in
// {-p..-1, 1..p} and 0 when a middle index is present
std::vector<std::vector<int>> clifford_matrix(int p, bool has_zero, int a) {
  const int dim = 1 << p;
  std::vector<std::vector<int>> m(dim, std::vector<int>(dim, 0));
  for (int mask = 0; mask < dim; ++mask) {
    if (a == 0) {
      m[mask][mask] = (__builtin_popcount(static_cast<unsigned>(mask)) % 2 == 0) ? 1 : -1;
      continue;
    }
    int i = a > 0 ? a : -a;
    int bit = 1 << (i - 1);
    int above = __builtin_popcount(static_cast<unsigned>(mask) >> i);  // |{j in J : j > i}|
    int sgn = (above % 2 == 0) ? 1 : -1;
    if (a > 0) {
      if (!(mask & bit)) m[mask | bit][mask] = sgn;  // e_i wedge
    } else {
      if (mask & bit) m[mask & ~bit][mask] = 2 * sgn;  // contraction, epsilon(i,J)
    }
  }
  (void)has_zero;
  return m;
}

bool anticommutator_is(const std::vector<std::vector<int>>& A, const std::vector<std::vector<int>>& B,
                       int scalar) {
  const int dim = static_cast<int>(A.size());
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      long long s = 0;
      for (int k = 0; k < dim; ++k) s += 1LL * A[i][k] * B[k][j] + 1LL * B[i][k] * A[k][j];
      long long want = (i == j) ? scalar : 0;
      if (s != want) return false;
    }
  return true;
}

}  // namespace

bool clifford_relations_hold(int positive_count, bool has_zero_index) {
  const int p = positive_count;
  std::vector<int> labels;
  for (int i = 1; i <= p; ++i) {
    labels.push_back(i);
    labels.push_back(-i);
  }
  if (has_zero_index) labels.push_back(0);
  std::vector<std::vector<std::vector<int>>> mats;
  for (int a : labels) mats.push_back(clifford_matrix(p, has_zero_index, a));
  for (size_t x = 0; x < labels.size(); ++x)
    for (size_t y = x; y < labels.size(); ++y) {
      int q = 0;  // 2*Q(e_a, e_b)
      if (labels[x] == -labels[y]) q = 2;          // pairs e_i, e_-i and e_0,e_0
      if (!anticommutator_is(mats[x], mats[y], q)) return false;
    }
  return true;
}

FormalCharacter clifford_wedge_oracle(const RootSystem& rs, const std::vector<std::pair<Weight, Int>>& weights,
                                      const Coweight& d) {
  std::vector<Weight> instances;
  long long zero_count = 0;
  for (const auto& [w, m] : weights) {
    long long mm = to_ll(m);
    if (mm < 0) fail(ErrorKind::NotACharacter, "negative multiplicity");
    if (!w.is_integral()) fail(ErrorKind::NotIntegral, "oracle weight is not integral");
    for (long long k = 0; k < mm; ++k) {
      if (w.is_zero())
        ++zero_count;
      else
        instances.push_back(w);
    }
  }
  if (static_cast<long long>(instances.size()) + zero_count > 24)
    fail(ErrorKind::TooLarge, "wedge oracle capped at |I| <= 24");
  // self-duality of the multiset
  {
    std::map<Weight, long long> count;
    for (const auto& w : instances) ++count[w];
    for (const auto& [w, c] : count) {
      auto it = count.find(-w);
      if (it == count.end() || it->second != c) fail(ErrorKind::NotSelfDual, "weight multiset is not self-dual");
    }
  }
  std::vector<Weight> positives;
  for (const auto& w : instances) {
    Rat p = coweight_pairing(rs, d, w);
    if (p == 0) fail(ErrorKind::ZeroPairing, "nonzero weight pairs to zero with d");
    if (p > 0) positives.push_back(w);
  }
  // zero weights: floor(m0/2) isotropic pairs contribute index pairs (i,-i);
  // an odd count leaves one index-0 basis vector
  for (long long k = 0; k < zero_count / 2; ++k) positives.push_back(Weight::zero(rs.n));
  const bool has_zero_index = (zero_count % 2 != 0);

  const int p = static_cast<int>(positives.size());
  if (p <= 5 && !clifford_relations_hold(p, has_zero_index))
    fail(ErrorKind::Internal, "Clifford relations failed on the wedge basis");

  Weight lambda2 = Weight::zero(rs.n);
  for (const auto& w : positives)
    for (int j = 0; j < rs.n; ++j) lambda2.c2[j] += w.c2[j] / 2;

  FormalCharacter out(rs);
  for (long long mask = 0; mask < (1LL << p); ++mask) {
    Weight w = lambda2;
    for (int i = 0; i < p; ++i)
      if (mask & (1LL << i))
        for (int j = 0; j < rs.n; ++j) w.c2[j] -= positives[i].c2[j];
    out.add(w, 1);
  }
  return out;
}

}  // namespace spinfactor
