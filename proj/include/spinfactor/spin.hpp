#ifndef SPINFACTOR_SPIN_HPP
#define SPINFACTOR_SPIN_HPP

#include <vector>

#include "spinfactor/charalg.hpp"

namespace spinfactor {

// Distinguished coweight d = sum_i coeffs[i] * (i-th fundamental coweight),
// acting on a weight through its simple-root coordinates. The default
// all-ones vector is rho^vee, so roots pair to their height.
struct Coweight {
  std::vector<long long> coeffs;

  static Coweight rho_vee(const RootSystem& rs) { return Coweight{std::vector<long long>(rs.n, 1)}; }
};

Rat coweight_pairing(const RootSystem& rs, const Coweight& d, const Weight& w);

// necessary weight-level condition for orthogonality: self-duality
bool check_orthogonal_candidate(const RootSystem& rs, const FormalCharacter& chi);

// e^Lambda prod_{beta(d)>0} (1+e^{-beta})^{m_beta}, Lambda = (1/2) sum_{beta(d)>0} m_beta beta
FormalCharacter spin0_character(const RootSystem& rs, const FormalCharacter& chi, const Coweight& d);

// 2^{floor(m0/2)} copies of spin0
FormalCharacter spin_character(const RootSystem& rs, const FormalCharacter& chi, const Coweight& d);

bool spin0_additivity_check(const RootSystem& rs, const FormalCharacter& chi1, const FormalCharacter& chi2,
                            const Coweight& d);

// Subset enumeration over a wedge basis of V^+, with the Clifford relation
// matrices checked whenever the basis is small enough. Never calls
// spin0_character; used as an independent oracle against spin_character.
FormalCharacter clifford_wedge_oracle(const RootSystem& rs, const std::vector<std::pair<Weight, Int>>& weights,
                                      const Coweight& d);

// e_a e_b + e_b e_a = 2 Q(e_a,e_b) id on the wedge basis, exact; dim(V) <= cap
bool clifford_relations_hold(int positive_count, bool has_zero_index);

}  // namespace spinfactor

#endif
