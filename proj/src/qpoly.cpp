#include "spinfactor/qpoly.hpp"

#include <functional>
#include <sstream>

namespace spinfactor {

std::string QPoly::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : c_) {
    if (!first) os << (c > 0 ? " + " : " - ");
    if (first && c < 0) os << "-";
    Int a = abs(c);
    first = false;
    if (a != 1 || e == 0) os << a.get_str();
    if (e != 0) {
      if (a != 1) os << "*";
      os << "q";
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

nlohmann::ordered_json QPoly::to_json() const {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& [e, c] : c_) {
    nlohmann::ordered_json t = nlohmann::ordered_json::array();
    t.push_back(e);
    t.push_back(c.fits_slong_p() ? nlohmann::ordered_json(c.get_si()) : nlohmann::ordered_json(c.get_str()));
    arr.push_back(std::move(t));
  }
  return arr;
}

bool is_symmetric_unimodal(const QPoly& p) {
  if (p.is_zero()) fail(ErrorKind::ZeroPolynomial, "zero polynomial");
  const long long lo = p.terms().begin()->first;
  const long long hi = p.terms().rbegin()->first;
  std::vector<Int> a;
  for (long long e = lo; e <= hi; ++e) a.push_back(p.coeff(e));
  const size_t m = a.size();
  for (size_t i = 0; i < m; ++i)
    if (a[i] != a[m - 1 - i]) return false;
  size_t k = 0;
  while (k + 1 < m && a[k] <= a[k + 1]) ++k;
  while (k + 1 < m && a[k] >= a[k + 1]) ++k;
  return k + 1 == m || m == 1;
}

QPoly w_factor(int k) {
  QPoly p = QPoly::one();
  for (int j = 1; j <= k + 1; ++j) {
    QPoly f = QPoly::one();
    f.add(j, 1);
    p = p * f;
  }
  return p;
}

QPoly schur_principal_specialization(const std::vector<long long>& lambda, int n, int step) {
  if (n < 1) fail(ErrorKind::BadRank, "n must be positive");
  for (size_t i = 0; i < lambda.size(); ++i) {
    if (lambda[i] < 0) fail(ErrorKind::BadPartition, "negative part");
    if (i + 1 < lambda.size() && lambda[i] < lambda[i + 1]) fail(ErrorKind::BadPartition, "parts must be weakly decreasing");
  }
  std::vector<long long> shape(lambda);
  while (!shape.empty() && shape.back() == 0) shape.pop_back();
  if (static_cast<int>(shape.size()) > n) fail(ErrorKind::BadPartition, "partition longer than n");
  QPoly out;
  if (shape.empty()) return QPoly::one();

  const int rows = static_cast<int>(shape.size());
  std::vector<std::vector<int>> t(rows);
  for (int r = 0; r < rows; ++r) t[r].assign(static_cast<size_t>(shape[r]), 0);

  // fill cells row-major; rows weakly increase, columns strictly increase
  std::function<void(int, int, long long)> rec = [&](int r, int c, long long expo) {
    if (r == rows) {
      out.add(step * expo, 1);
      return;
    }
    int nr = r, nc = c + 1;
    if (nc >= static_cast<int>(shape[r])) {
      nr = r + 1;
      nc = 0;
    }
    int lo = 1;
    if (c > 0) lo = std::max(lo, t[r][c - 1]);
    if (r > 0) lo = std::max(lo, t[r - 1][c] + 1);
    for (int v = lo; v <= n; ++v) {
      t[r][c] = v;
      rec(nr, nc, expo + (v - 1));
    }
  };
  rec(0, 0, 0);
  return out;
}

Int binomial_n3(int n) { return binomial(static_cast<unsigned long>(n), 3); }

}  // namespace spinfactor
