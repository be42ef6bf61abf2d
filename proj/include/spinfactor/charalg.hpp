#ifndef SPINFACTOR_CHARALG_HPP
#define SPINFACTOR_CHARALG_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "spinfactor/bigint.hpp"
#include "spinfactor/rootsys.hpp"

#include "json.hpp"

namespace spinfactor {

// Total order refining the root order: height first, then lex on labels.
// Used for character term maps and for all serialized output.
struct WeightOrder {
  const RootSystem* rs;
  bool operator()(const Weight& a, const Weight& b) const {
    long long ha = rs->ht2num(a), hb = rs->ht2num(b);
    if (ha != hb) return ha < hb;
    return a < b;
  }
};

// Finitely supported map Weight -> Int. No zero coefficients are stored.
class FormalCharacter {
 public:
  using Map = std::map<Weight, Int, WeightOrder>;

  explicit FormalCharacter(const RootSystem& rs) : rs_(&rs), terms_(WeightOrder{&rs}) {}

  const RootSystem& rs() const { return *rs_; }
  const Map& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }

  void add(const Weight& w, const Int& c) {
    if (c == 0) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
      terms_.emplace(w, c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  void set(const Weight& w, const Int& c) {
    terms_.erase(w);
    if (c != 0) terms_.emplace(w, c);
  }
  Int coeff(const Weight& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Int(0) : it->second;
  }

  Int dimension() const {
    Int d = 0;
    for (const auto& [w, c] : terms_) d += c;
    return d;
  }

  friend bool operator==(const FormalCharacter& a, const FormalCharacter& b) {
    return a.rs_ == b.rs_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const FormalCharacter& a, const FormalCharacter& b) { return !(a == b); }

  FormalCharacter& operator+=(const FormalCharacter& o);
  FormalCharacter& operator-=(const FormalCharacter& o);
  FormalCharacter& operator*=(const Int& k);
  friend FormalCharacter operator+(FormalCharacter a, const FormalCharacter& b) { return a += b; }
  friend FormalCharacter operator-(FormalCharacter a, const FormalCharacter& b) { return a -= b; }

  // e^w * this
  FormalCharacter shifted(const Weight& w) const;
  FormalCharacter negated_weights() const;

  nlohmann::ordered_json to_json() const;
  std::string hash() const;

 private:
  const RootSystem* rs_;
  Map terms_;
};

FormalCharacter unit_character(const RootSystem& rs);  // {0 -> 1}

// Sum over the Weyl group of sign(w) e^{w(mu)}; zero iff mu is non-regular.
FormalCharacter skew_symmetrizer(const RootSystem& rs, const Weight& mu);

// Full weight-multiplicity map of V(lambda), by Freudenthal recursion.
// Results are memoized per (root system, lambda).
const FormalCharacter& irreducible_character(const RootSystem& rs, const Weight& lambda);

// chi * A_rho == A_{lambda+rho}, checked by exact multiplication.
bool verify_weyl_character(const RootSystem& rs, const Weight& lambda, const FormalCharacter& chi);

Int weyl_dimension(const RootSystem& rs, const Weight& lambda);

FormalCharacter multiply(const FormalCharacter& a, const FormalCharacter& b);

// multiply by (1 + sign * e^{shift})^m, expanded by binomials
FormalCharacter multiply_binomial(const FormalCharacter& a, const Weight& shift, int sign, unsigned long m);

FormalCharacter square_weights(const FormalCharacter& a);

std::vector<std::pair<Weight, Int>> decompose(const RootSystem& rs, const FormalCharacter& chi);

bool denominator_check(const RootSystem& rs);

// Writes a Weyl-anti-invariant Y as sum c_i A_{nu_i}; returns (nu_i - rho, c_i).
std::vector<std::pair<Weight, Int>> alt_expand(const RootSystem& rs, const FormalCharacter& y);

FormalCharacter character_of_decomposition(const RootSystem& rs,
                                           const std::vector<std::pair<Weight, Int>>& parts);

// Dominant weights mu <= lambda with lambda - mu in the root lattice.
std::vector<Weight> dominant_weights_below(const RootSystem& rs, const Weight& lambda);

FormalCharacter adjoint_character(const RootSystem& rs);

}  // namespace spinfactor

#endif
