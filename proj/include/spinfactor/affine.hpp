#ifndef SPINFACTOR_AFFINE_HPP
#define SPINFACTOR_AFFINE_HPP

#include <optional>
#include <string>
#include <vector>

#include "spinfactor/charalg.hpp"
#include "spinfactor/report.hpp"
#include "spinfactor/spin.hpp"

namespace spinfactor {

struct AffineWeight {
  Weight finite;
  long long level = 0;
  long long delta = 0;
};

// delta-truncated character: slices[j] is a finite character at
// delta degree top_delta - j; the level is constant across terms.
class AffineCharacter {
 public:
  AffineCharacter(const RootSystem& rs, long long level, long long top_delta, int depth)
      : rs_(&rs), level_(level), top_delta_(top_delta) {
    if (depth < 0) fail(ErrorKind::Usage, "truncation depth must be nonnegative");
    slices_.assign(static_cast<size_t>(depth) + 1, FormalCharacter(rs));
  }

  const RootSystem& rs() const { return *rs_; }
  long long level() const { return level_; }
  long long top_delta() const { return top_delta_; }
  int depth() const { return static_cast<int>(slices_.size()) - 1; }
  FormalCharacter& slice(int j) { return slices_[j]; }
  const FormalCharacter& slice(int j) const { return slices_[j]; }
  Int coeff(const Weight& finite, long long delta) const {
    long long j = top_delta_ - delta;
    if (j < 0 || j > depth()) return 0;
    return slices_[static_cast<size_t>(j)].coeff(finite);
  }

  nlohmann::ordered_json to_json() const;

 private:
  const RootSystem* rs_;
  long long level_;
  long long top_delta_;
  std::vector<FormalCharacter> slices_;
};

// slice-wise equality of the delta windows (levels compared separately)
bool same_slices(const AffineCharacter& a, const AffineCharacter& b);

// in place: A *= (1 + sign e^{shift} e^{-drop delta})^m, truncated
void mult_affine_binomial(AffineCharacter& a, const Weight& shift, int drop, int sign, unsigned long m);

// level-0 loop character of chi, delta degrees -K..K
AffineCharacter affinize_character(const RootSystem& rs, const FormalCharacter& chi, int K);

// character of wedge(t^k V) as a truncated factor, top at delta 0
AffineCharacter wedge_factor(const RootSystem& rs, const FormalCharacter& chi, int k, int K);

// Spin0 of the affinization, top term nu + c Lambda_0
AffineCharacter affine_spin0_character(const RootSystem& rs, const FormalCharacter& chi, int K);

// level and top finite part of Spin0 of the affinization
AffineWeight affine_spin0_top(const RootSystem& rs, const FormalCharacter& chi);

// numerator slices sum_{w in affine Weyl} sign(w) e^{w(mu_hat)} for
// mu_hat = mu + m Lambda_0 strictly dominant; used by the Weyl-Kac quotient
// and directly testable for enumeration-radius stability
std::vector<FormalCharacter> affine_numerator_slices(const RootSystem& rs, const Weight& mu, long long m,
                                                     int K, int radius_multiplier = 1);

struct AffineIrreducible {
  AffineCharacter ch;
  // per slice: decomposition into finite irreducibles
  std::vector<std::vector<std::pair<Weight, Int>>> slice_decomp;
};

AffineIrreducible affine_irreducible_decomposed(const RootSystem& rs, const AffineWeight& highest, int K,
                                                bool allow_large = false);
AffineCharacter affine_irreducible_character(const RootSystem& rs, const AffineWeight& highest, int K,
                                             bool allow_large = false);

bool affine_denominator_check(const RootSystem& rs, int K, bool allow_large = false);

Report verify_prop6_7_8(const RootSystem& rs, int K, const std::optional<AffineWeight>& mu_hat = std::nullopt,
                        bool allow_large = false);

enum class CoprimaryCase { adjoint, theta_s, two_theta_s };
CoprimaryCase coprimary_case_from_name(const std::string& name);

Report coprimary_check(const RootSystem& rs, CoprimaryCase which, int K, bool allow_large = false);

Report dual_rootsystem_facts(const RootSystem& rs, int K);

}  // namespace spinfactor

#endif
