#include "spinfactor/charalg.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

namespace spinfactor {

FormalCharacter& FormalCharacter::operator+=(const FormalCharacter& o) {
  if (rs_ != o.rs_) fail(ErrorKind::RootSystemMismatch, "characters on different root systems");
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

FormalCharacter& FormalCharacter::operator-=(const FormalCharacter& o) {
  if (rs_ != o.rs_) fail(ErrorKind::RootSystemMismatch, "characters on different root systems");
  for (const auto& [w, c] : o.terms_) add(w, -c);
  return *this;
}

FormalCharacter& FormalCharacter::operator*=(const Int& k) {
  if (k == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, c] : terms_) c *= k;
  return *this;
}

FormalCharacter FormalCharacter::shifted(const Weight& w) const {
  FormalCharacter r(*rs_);
  for (const auto& [x, c] : terms_) r.terms_.emplace(x + w, c);
  return r;
}

FormalCharacter FormalCharacter::negated_weights() const {
  FormalCharacter r(*rs_);
  for (const auto& [x, c] : terms_) r.terms_.emplace(-x, c);
  return r;
}

namespace {

nlohmann::ordered_json weight_json(const Weight& w) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (int i = 0; i < w.n; ++i) {
    if (w.c2[i] % 2 == 0)
      arr.push_back(w.c2[i] / 2);
    else
      arr.push_back(std::to_string(w.c2[i]) + "/2");
  }
  return arr;
}

nlohmann::ordered_json coeff_json(const Int& c) {
  if (c.fits_slong_p()) return nlohmann::ordered_json(c.get_si());
  return nlohmann::ordered_json(c.get_str());
}

uint64_t fnv1a(const std::string& s) {
  uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace

nlohmann::ordered_json FormalCharacter::to_json() const {
  nlohmann::ordered_json j;
  j["rs"] = rs_->name;
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  for (const auto& [w, c] : terms_) {
    nlohmann::ordered_json t = nlohmann::ordered_json::array();
    t.push_back(weight_json(w));
    t.push_back(coeff_json(c));
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  return j;
}

std::string FormalCharacter::hash() const {
  std::ostringstream os;
  os << std::hex << fnv1a(to_json().dump());
  std::string s = os.str();
  return std::string(16 - s.size(), '0') + s;
}

FormalCharacter unit_character(const RootSystem& rs) {
  FormalCharacter c(rs);
  c.add(Weight::zero(rs.n), 1);
  return c;
}

FormalCharacter skew_symmetrizer(const RootSystem& rs, const Weight& mu) {
  if (mu.n != rs.n) fail(ErrorKind::RootSystemMismatch, "weight rank mismatch");
  if (!mu.is_integral()) fail(ErrorKind::NotIntegral, "skew_symmetrizer needs an integral weight");
  FormalCharacter out(rs);
  DominantRep rep = dominant_representative(rs, mu);
  if (!rep.regular) return out;  // stabilized by a reflection: terms cancel
  std::map<Weight, int> sign;
  std::queue<Weight> work;
  sign[rep.w] = rep.sign;
  work.push(rep.w);
  while (!work.empty()) {
    Weight x = work.front();
    work.pop();
    int s = sign[x];
    for (int i = 1; i <= rs.n; ++i) {
      Weight y = weyl_reflect(rs, i, x);
      if (sign.emplace(y, -s).second) work.push(y);
    }
  }
  for (const auto& [w, s] : sign) out.add(w, Int(s));
  return out;
}

std::vector<Weight> dominant_weights_below(const RootSystem& rs, const Weight& lambda) {
  const int n = rs.n;
  // bound: mu = lambda - sum k_i alpha_i dominant forces 0 <= k_i <= c_i(lambda)
  std::vector<long long> bound(n, 0);
  unsigned long long box = 1;
  for (int i = 0; i < n; ++i) {
    long long num = 0;
    for (int j = 0; j < n; ++j) num += rs.adjA[i][j] * lambda.c2[j];
    if (num < 0) fail(ErrorKind::Internal, "dominant weight with negative alpha coordinate");
    bound[i] = num / (2 * rs.detA);
    box *= static_cast<unsigned long long>(bound[i] + 1);
    if (box > 80'000'000ULL) fail(ErrorKind::TooLarge, "weight enumeration box too large at desk scale");
  }
  std::vector<Weight> out;
  std::vector<long long> k(n, 0);
  for (;;) {
    Weight mu = lambda;
    for (int i = 0; i < n; ++i)
      if (k[i] != 0)
        for (int j = 0; j < n; ++j) mu.c2[j] -= 2 * k[i] * rs.a[j][i];
    if (rs.is_dominant(mu)) out.push_back(mu);
    int p = n - 1;
    while (p >= 0 && k[p] == bound[p]) {
      k[p] = 0;
      --p;
    }
    if (p < 0) break;
    ++k[p];
  }
  std::sort(out.begin(), out.end(), [&](const Weight& x, const Weight& y) {
    long long hx = rs.ht2num(x), hy = rs.ht2num(y);
    if (hx != hy) return hx > hy;
    return y < x;
  });
  return out;
}

namespace {

struct FreudenthalTable {
  std::map<Weight, Int> mult;  // keyed by dominant weight
};

FreudenthalTable freudenthal(const RootSystem& rs, const Weight& lambda) {
  FreudenthalTable t;
  auto dominants = dominant_weights_below(rs, lambda);
  const Weight lr = lambda + rs.rho;
  // scaled squared norm: 4*detA*(x,x)
  auto norm4 = [&](const Weight& x) {
    long long acc = 0;
    for (int j = 0; j < rs.n; ++j) {
      long long cy = 0;
      for (int k = 0; k < rs.n; ++k) cy += rs.adjA[j][k] * x.c2[k];
      acc += cy * rs.eps[j] * x.c2[j];
    }
    return acc;
  };
  const long long top_norm = norm4(lr);
  for (const auto& mu : dominants) {
    if (mu == lambda) {
      t.mult[mu] = 1;
      continue;
    }
    Int num = 0;  // = 4*detA * sum_{alpha>0, k>=1} m(mu+k a) (mu+k a, alpha)
    for (const auto& alpha : rs.positive_roots) {
      for (long long k = 1;; ++k) {
        Weight x = mu + k * alpha.w;
        DominantRep rep = dominant_representative(rs, x);
        auto it = t.mult.find(rep.w);
        if (it == t.mult.end()) break;
        long long pair2 = 0;  // 2*x(alpha^vee)
        for (int j = 0; j < rs.n; ++j) pair2 += alpha.covec[j] * x.c2[j];
        // 4*detA * 2 * (x,alpha) with (x,alpha) = (norm2/2)*(pair2/2)
        num += it->second * int_of(2 * rs.detA * alpha.norm2 * pair2);
      }
    }
    long long den = top_norm - norm4(mu + rs.rho);
    if (den <= 0) fail(ErrorKind::Internal, "Freudenthal denominator not positive");
    t.mult[mu] = divexact(num, int_of(den));
  }
  return t;
}

std::mutex& char_cache_mutex() {
  static std::mutex m;
  return m;
}
std::map<std::pair<const RootSystem*, Weight>, std::unique_ptr<FormalCharacter>>& char_cache() {
  static std::map<std::pair<const RootSystem*, Weight>, std::unique_ptr<FormalCharacter>> c;
  return c;
}

}  // namespace

const FormalCharacter& irreducible_character(const RootSystem& rs, const Weight& lambda) {
  if (lambda.n != rs.n) fail(ErrorKind::RootSystemMismatch, "weight rank mismatch");
  if (!lambda.is_integral()) fail(ErrorKind::NotIntegral, "highest weight must be integral");
  if (!rs.is_dominant(lambda)) fail(ErrorKind::NotDominant, "highest weight must be dominant");
  {
    std::lock_guard<std::mutex> lock(char_cache_mutex());
    auto it = char_cache().find({&rs, lambda});
    if (it != char_cache().end()) return *it->second;
  }
  auto table = freudenthal(rs, lambda);
  auto chi = std::make_unique<FormalCharacter>(rs);
  for (const auto& [mu, m] : table.mult) {
    for (const auto& w : weyl_orbit(rs, mu)) chi->add(w, m);
    if (chi->size() > 20'000'000)
      fail(ErrorKind::TooLarge, "character support exceeds the desk-scale cap");
  }
  std::lock_guard<std::mutex> lock(char_cache_mutex());
  auto [it, inserted] = char_cache().emplace(std::make_pair(&rs, lambda), std::move(chi));
  return *it->second;
}

bool verify_weyl_character(const RootSystem& rs, const Weight& lambda, const FormalCharacter& chi) {
  FormalCharacter lhs = multiply(chi, skew_symmetrizer(rs, rs.rho));
  return lhs == skew_symmetrizer(rs, lambda + rs.rho);
}

Int weyl_dimension(const RootSystem& rs, const Weight& lambda) {
  if (!lambda.is_integral()) fail(ErrorKind::NotIntegral, "weight must be integral");
  if (!rs.is_dominant(lambda)) fail(ErrorKind::NotDominant, "weight must be dominant");
  const Weight lr = lambda + rs.rho;
  std::vector<long long> nums, dens;
  for (const auto& alpha : rs.positive_roots) {
    long long a = 0, b = 0;
    for (int j = 0; j < rs.n; ++j) {
      a += alpha.covec[j] * lr.c2[j];
      b += alpha.covec[j] * rs.rho.c2[j];
    }
    nums.push_back(a);
    dens.push_back(b);
  }
  // cancel small factors before multiplying out
  for (auto& d : dens)
    for (auto& v : nums) {
      if (d == 1) break;
      long long g = std::gcd(v, d);
      if (g > 1) {
        v /= g;
        d /= g;
      }
    }
  Int out = 1;
  for (auto d : dens)
    if (d != 1) fail(ErrorKind::Internal, "Weyl dimension denominator did not cancel");
  for (auto v : nums) out *= int_of(v);
  return out;
}

FormalCharacter multiply(const FormalCharacter& a, const FormalCharacter& b) {
  if (&a.rs() != &b.rs()) fail(ErrorKind::RootSystemMismatch, "characters on different root systems");
  FormalCharacter out(a.rs());
  const FormalCharacter& small = a.size() <= b.size() ? a : b;
  const FormalCharacter& big = a.size() <= b.size() ? b : a;
  for (const auto& [ws, cs] : small.terms())
    for (const auto& [wb, cb] : big.terms()) out.add(ws + wb, cs * cb);
  return out;
}

FormalCharacter multiply_binomial(const FormalCharacter& a, const Weight& shift, int sign, unsigned long m) {
  FormalCharacter out = a;
  for (unsigned long k = 1; k <= m; ++k) {
    Int c = binomial(m, k);
    if (sign < 0 && k % 2 == 1) c = -c;
    Weight total = static_cast<long long>(k) * shift;
    for (const auto& [w, v] : a.terms()) out.add(w + total, v * c);
  }
  return out;
}

FormalCharacter square_weights(const FormalCharacter& a) {
  FormalCharacter out(a.rs());
  for (const auto& [w, c] : a.terms()) out.add(2 * w, c);
  return out;
}

std::vector<std::pair<Weight, Int>> decompose(const RootSystem& rs, const FormalCharacter& chi) {
  if (&chi.rs() != &rs) fail(ErrorKind::RootSystemMismatch, "character on a different root system");
  std::vector<std::pair<Weight, Int>> out;
  FormalCharacter rest = chi;
  while (!rest.empty()) {
    const auto& [w, c] = *rest.terms().rbegin();
    if (!rs.is_dominant(w) || c < 0)
      fail(ErrorKind::NotACharacter, "input is not a nonnegative sum of irreducible characters");
    Weight lambda = w;
    Int mult = c;
    const FormalCharacter& piece = irreducible_character(rs, lambda);
    for (const auto& [x, v] : piece.terms()) {
      rest.add(x, -mult * v);
      if (rest.coeff(x) < 0)
        fail(ErrorKind::NotACharacter, "subtraction produced a negative coefficient at " + format_weight(x));
    }
    out.emplace_back(lambda, mult);
  }
  return out;
}

bool denominator_check(const RootSystem& rs) {
  FormalCharacter prod(rs);
  prod.add(rs.rho, 1);
  for (const auto& alpha : rs.positive_roots) prod = multiply_binomial(prod, -alpha.w, -1, 1);
  return prod == skew_symmetrizer(rs, rs.rho);
}

std::vector<std::pair<Weight, Int>> alt_expand(const RootSystem& rs, const FormalCharacter& y) {
  std::vector<std::pair<Weight, Int>> out;
  FormalCharacter rest = y;
  while (!rest.empty()) {
    const Weight w = rest.terms().rbegin()->first;
    const Int coeff = rest.terms().rbegin()->second;
    bool strictly_dominant = true;
    for (int i = 0; i < rs.n; ++i)
      if (w.c2[i] <= 0) strictly_dominant = false;
    if (!strictly_dominant)
      fail(ErrorKind::Internal, "alt_expand: top term " + format_weight(w) + " is not strictly dominant");
    FormalCharacter t = skew_symmetrizer(rs, w);
    t *= coeff;
    rest -= t;
    out.emplace_back(w - rs.rho, coeff);
  }
  return out;
}

FormalCharacter character_of_decomposition(const RootSystem& rs,
                                           const std::vector<std::pair<Weight, Int>>& parts) {
  FormalCharacter out(rs);
  for (const auto& [lambda, mult] : parts) {
    FormalCharacter t = irreducible_character(rs, lambda);
    t *= mult;
    out += t;
  }
  return out;
}

FormalCharacter adjoint_character(const RootSystem& rs) {
  FormalCharacter out(rs);
  for (const auto& r : rs.positive_roots) {
    out.add(r.w, 1);
    out.add(-r.w, 1);
  }
  out.add(Weight::zero(rs.n), int_of(rs.n));
  return out;
}

}  // namespace spinfactor
