#ifndef SPINFACTOR_WEIGHT_HPP
#define SPINFACTOR_WEIGHT_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "spinfactor/error.hpp"

namespace spinfactor {

inline constexpr int kMaxRank = 9;

// A weight in Dynkin-label coordinates (pairings with the simple coroots).
// Coordinates are stored doubled so that half-integral weights stay exact:
// c2[i] == 2 * lambda(alpha_i^vee).
struct Weight {
  int n = 0;
  std::array<long long, kMaxRank> c2{};

  Weight() = default;
  explicit Weight(int rank) : n(rank) {
    if (rank < 0 || rank > kMaxRank) fail(ErrorKind::BadRank, "rank out of range");
  }

  static Weight from_labels(const std::vector<long long>& labels) {
    Weight w(static_cast<int>(labels.size()));
    for (int i = 0; i < w.n; ++i) w.c2[i] = 2 * labels[i];
    return w;
  }
  static Weight from_doubled(const std::vector<long long>& doubled) {
    Weight w(static_cast<int>(doubled.size()));
    for (int i = 0; i < w.n; ++i) w.c2[i] = doubled[i];
    return w;
  }
  static Weight zero(int rank) { return Weight(rank); }

  bool is_integral() const {
    for (int i = 0; i < n; ++i)
      if (c2[i] % 2 != 0) return false;
    return true;
  }
  bool is_zero() const {
    for (int i = 0; i < n; ++i)
      if (c2[i] != 0) return false;
    return true;
  }
  // Dynkin labels; requires integrality.
  long long label(int i) const {
    if (c2[i] % 2 != 0) fail(ErrorKind::NotIntegral, "weight has a half-integral coordinate");
    return c2[i] / 2;
  }

  friend Weight operator+(const Weight& a, const Weight& b) {
    Weight r(a.n);
    for (int i = 0; i < a.n; ++i) r.c2[i] = a.c2[i] + b.c2[i];
    return r;
  }
  friend Weight operator-(const Weight& a, const Weight& b) {
    Weight r(a.n);
    for (int i = 0; i < a.n; ++i) r.c2[i] = a.c2[i] - b.c2[i];
    return r;
  }
  friend Weight operator*(long long k, const Weight& a) {
    Weight r(a.n);
    for (int i = 0; i < a.n; ++i) r.c2[i] = k * a.c2[i];
    return r;
  }
  Weight operator-() const { return -1 * *this; }

  friend bool operator==(const Weight& a, const Weight& b) {
    if (a.n != b.n) return false;
    for (int i = 0; i < a.n; ++i)
      if (a.c2[i] != b.c2[i]) return false;
    return true;
  }
  friend bool operator!=(const Weight& a, const Weight& b) { return !(a == b); }
  // Plain lexicographic order, independent of any root system. Character maps
  // use the (height, lex) order provided by RootSystem instead.
  friend bool operator<(const Weight& a, const Weight& b) {
    if (a.n != b.n) return a.n < b.n;
    for (int i = 0; i < a.n; ++i)
      if (a.c2[i] != b.c2[i]) return a.c2[i] < b.c2[i];
    return false;
  }
};

std::string format_weight(const Weight& w);
// Parses "1,0,-2" as integer Dynkin labels.
Weight parse_weight(const std::string& s);

}  // namespace spinfactor

#endif
