#ifndef SPINFACTOR_QPOLY_HPP
#define SPINFACTOR_QPOLY_HPP

#include <map>
#include <string>
#include <vector>

#include "spinfactor/bigint.hpp"
#include "spinfactor/error.hpp"

#include "json.hpp"

namespace spinfactor {

// Exact Laurent polynomial in q with Int coefficients.
class QPoly {
 public:
  QPoly() = default;
  static QPoly one() { return monomial(0, 1); }
  static QPoly monomial(long long e, const Int& c) {
    QPoly p;
    p.add(e, c);
    return p;
  }

  void add(long long e, const Int& c) {
    if (c == 0) return;
    auto it = c_.find(e);
    if (it == c_.end()) {
      c_.emplace(e, c);
    } else {
      it->second += c;
      if (it->second == 0) c_.erase(it);
    }
  }
  Int coeff(long long e) const {
    auto it = c_.find(e);
    return it == c_.end() ? Int(0) : it->second;
  }
  bool is_zero() const { return c_.empty(); }
  const std::map<long long, Int>& terms() const { return c_; }

  friend bool operator==(const QPoly& a, const QPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const QPoly& a, const QPoly& b) { return !(a == b); }
  friend QPoly operator+(const QPoly& a, const QPoly& b) {
    QPoly r = a;
    for (const auto& [e, c] : b.c_) r.add(e, c);
    return r;
  }
  friend QPoly operator*(const QPoly& a, const QPoly& b) {
    QPoly r;
    for (const auto& [ea, ca] : a.c_)
      for (const auto& [eb, cb] : b.c_) r.add(ea + eb, ca * cb);
    return r;
  }

  std::string str() const;
  nlohmann::ordered_json to_json() const;

 private:
  std::map<long long, Int> c_;
};

// palindromic over the support window and rising-then-falling
bool is_symmetric_unimodal(const QPoly& p);

// (1+q)(1+q^2)...(1+q^{k+1})
QPoly w_factor(int k);

// S_lambda(1, q^step, q^{2 step}, ..., q^{(n-1) step}) by semistandard-tableau
// enumeration; independent of the character machinery.
QPoly schur_principal_specialization(const std::vector<long long>& lambda, int n, int step = 1);

Int binomial_n3(int n);

}  // namespace spinfactor

#endif
