#include "spinfactor/rootsys.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

namespace spinfactor {

const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::NotGCM: return "NotGCM";
    case ErrorKind::NotSymmetrizable: return "NotSymmetrizable";
    case ErrorKind::NotFiniteType: return "NotFiniteType";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::NotDominant: return "NotDominant";
    case ErrorKind::NotIntegral: return "NotIntegral";
    case ErrorKind::RootSystemMismatch: return "RootSystemMismatch";
    case ErrorKind::NotACharacter: return "NotACharacter";
    case ErrorKind::NotSelfDual: return "NotSelfDual";
    case ErrorKind::ZeroPairing: return "ZeroPairing";
    case ErrorKind::NonIntegralLambda: return "NonIntegralLambda";
    case ErrorKind::NonIntegralNu: return "NonIntegralNu";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::NonIntegralImage: return "NonIntegralImage";
    case ErrorKind::BadRank: return "BadRank";
    case ErrorKind::UnsupportedKind: return "UnsupportedKind";
    case ErrorKind::BadPartition: return "BadPartition";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::DecompositionMismatch: return "DecompositionMismatch";
    case ErrorKind::NotDominantAffine: return "NotDominantAffine";
    case ErrorKind::LevelNotPositive: return "LevelNotPositive";
    case ErrorKind::RankGate: return "RankGate";
    case ErrorKind::UnsupportedCase: return "UnsupportedCase";
    case ErrorKind::SimplyLaced: return "SimplyLaced";
    case ErrorKind::Internal: return "Internal";
    case ErrorKind::Usage: return "Usage";
  }
  return "Error";
}

std::string format_weight(const Weight& w) {
  std::ostringstream os;
  os << '(';
  for (int i = 0; i < w.n; ++i) {
    if (i) os << ',';
    if (w.c2[i] % 2 == 0)
      os << w.c2[i] / 2;
    else
      os << w.c2[i] << "/2";
  }
  os << ')';
  return os.str();
}

Weight parse_weight(const std::string& s) {
  std::vector<long long> labels;
  std::string tok;
  std::istringstream is(s);
  while (std::getline(is, tok, ',')) {
    size_t pos = 0;
    long long v = 0;
    try {
      v = std::stoll(tok, &pos);
    } catch (const std::exception&) {
      fail(ErrorKind::Usage, "bad weight coordinate '" + tok + "'");
    }
    while (pos < tok.size() && isspace(static_cast<unsigned char>(tok[pos]))) ++pos;
    if (pos != tok.size()) fail(ErrorKind::Usage, "bad weight coordinate '" + tok + "'");
    labels.push_back(v);
  }
  if (labels.empty()) fail(ErrorKind::Usage, "empty weight");
  if (labels.size() > kMaxRank) fail(ErrorKind::BadRank, "weight longer than max rank");
  return Weight::from_labels(labels);
}

namespace {

void validate_gcm(const IMat& a) {
  const int n = static_cast<int>(a.size());
  if (n < 1) fail(ErrorKind::NotGCM, "empty matrix");
  if (n > kMaxRank) fail(ErrorKind::NotGCM, "rank exceeds supported maximum");
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(a[i].size()) != n) fail(ErrorKind::NotGCM, "matrix not square");
    if (a[i][i] != 2) fail(ErrorKind::NotGCM, "diagonal entry is not 2");
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (a[i][j] > 0) fail(ErrorKind::NotGCM, "positive off-diagonal entry");
      if ((a[i][j] == 0) != (a[j][i] == 0)) fail(ErrorKind::NotGCM, "a_ij=0 without a_ji=0");
    }
  }
  // connectivity: theta and the mark data need an indecomposable diagram
  std::vector<char> seen(n, 0);
  std::queue<int> q;
  q.push(0);
  seen[0] = 1;
  int cnt = 1;
  while (!q.empty()) {
    int i = q.front();
    q.pop();
    for (int j = 0; j < n; ++j)
      if (!seen[j] && a[i][j] != 0) {
        seen[j] = 1;
        ++cnt;
        q.push(j);
      }
  }
  if (cnt != n) fail(ErrorKind::NotGCM, "decomposable Cartan matrix; build each simple factor separately");
}

std::vector<long long> symmetrizer(const IMat& a) {
  const int n = static_cast<int>(a.size());
  std::vector<Rat> e(n, Rat(0));
  e[0] = 1;
  std::vector<char> done(n, 0);
  done[0] = 1;
  std::queue<int> q;
  q.push(0);
  while (!q.empty()) {
    int i = q.front();
    q.pop();
    for (int j = 0; j < n; ++j) {
      if (i == j || a[i][j] == 0) continue;
      Rat want = e[i] * rat_of(a[i][j]) / rat_of(a[j][i]);  // eps_i a_ij = eps_j a_ji
      if (done[j]) {
        if (e[j] != want) fail(ErrorKind::NotSymmetrizable, "no symmetrizing witness exists");
      } else {
        e[j] = want;
        done[j] = 1;
        q.push(j);
      }
    }
  }
  Int lcm_den = 1;
  for (const auto& r : e) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), r.get_den().get_mpz_t());
  std::vector<Int> scaled(n);
  Int g = 0;
  for (int i = 0; i < n; ++i) {
    scaled[i] = e[i].get_num() * divexact(lcm_den, Int(e[i].get_den()));
    if (scaled[i] <= 0) fail(ErrorKind::NotSymmetrizable, "nonpositive symmetrizer entry");
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), scaled[i].get_mpz_t());
  }
  std::vector<long long> out(n);
  for (int i = 0; i < n; ++i) out[i] = to_ll(divexact(scaled[i], g));
  return out;
}

Int det_int(const std::vector<std::vector<Int>>& m) {
  // fraction-free Gaussian elimination (Bareiss)
  auto w = m;
  const int n = static_cast<int>(w.size());
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (w[k][k] == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (w[i][k] != 0) {
          p = i;
          break;
        }
      if (p < 0) return 0;
      std::swap(w[k], w[p]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        w[i][j] = divexact(w[i][j] * w[k][k] - w[i][k] * w[k][j], prev);
    prev = w[k][k];
  }
  return sign * w[n - 1][n - 1];
}

std::vector<std::vector<Int>> to_int_mat(const IMat& a) {
  std::vector<std::vector<Int>> m(a.size());
  for (size_t i = 0; i < a.size(); ++i)
    for (auto v : a[i]) m[i].push_back(int_of(v));
  return m;
}

// adjugate via cofactors; rank <= 9 so this is cheap
IMat adjugate(const IMat& a, long long det) {
  const int n = static_cast<int>(a.size());
  IMat adj(n, std::vector<long long>(n, 0));
  if (n == 1) {
    adj[0][0] = 1;
    (void)det;
    return adj;
  }
  auto m = to_int_mat(a);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::vector<std::vector<Int>> minor;
      minor.reserve(n - 1);
      for (int r = 0; r < n; ++r) {
        if (r == i) continue;
        std::vector<Int> row;
        row.reserve(n - 1);
        for (int c = 0; c < n; ++c)
          if (c != j) row.push_back(m[r][c]);
        minor.push_back(std::move(row));
      }
      Int cof = det_int(minor);
      if ((i + j) % 2 != 0) cof = -cof;
      adj[j][i] = to_ll(cof);  // adjugate is the transposed cofactor matrix
    }
  return adj;
}

struct InternKey {
  IMat a;
  bool operator<(const InternKey& o) const { return a < o.a; }
};

std::map<InternKey, std::unique_ptr<RootSystem>>& intern_table() {
  static std::map<InternKey, std::unique_ptr<RootSystem>> t;
  return t;
}
std::mutex& intern_mutex() {
  static std::mutex m;
  return m;
}

struct BuiltinDef {
  std::string name;
  IMat a;
};

IMat cartan_A(int n) {
  IMat a(n, std::vector<long long>(n, 0));
  for (int i = 0; i < n; ++i) {
    a[i][i] = 2;
    if (i + 1 < n) a[i][i + 1] = a[i + 1][i] = -1;
  }
  return a;
}
IMat cartan_B(int n) {
  IMat a = cartan_A(n);
  a[n - 1][n - 2] = -2;  // alpha_n short
  return a;
}
IMat cartan_C(int n) {
  IMat a = cartan_A(n);
  a[n - 2][n - 1] = -2;  // alpha_n long
  return a;
}
IMat cartan_D(int n) {
  // chain 1..n-1 with node n attached to node n-2 (Bourbaki)
  IMat a(n, std::vector<long long>(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  for (int i = 0; i + 1 < n - 1; ++i) a[i][i + 1] = a[i + 1][i] = -1;
  a[n - 3][n - 1] = a[n - 1][n - 3] = -1;
  return a;
}
IMat cartan_G2() { return {{2, -3}, {-1, 2}}; }  // alpha_1 short
IMat cartan_F4() { return {{2, -1, 0, 0}, {-1, 2, -1, 0}, {0, -2, 2, -1}, {0, 0, -1, 2}}; }
IMat cartan_E6() {
  // chain 1-2-3-4-5 with node 6 attached to node 3
  IMat a(6, std::vector<long long>(6, 0));
  for (int i = 0; i < 6; ++i) a[i][i] = 2;
  for (int i = 0; i + 1 < 5; ++i) a[i][i + 1] = a[i + 1][i] = -1;
  a[2][5] = a[5][2] = -1;
  return a;
}

const std::vector<BuiltinDef>& builtin_defs() {
  static const std::vector<BuiltinDef> defs = [] {
    std::vector<BuiltinDef> d;
    for (int n = 1; n <= 9; ++n) d.push_back({"A" + std::to_string(n), cartan_A(n)});
    for (int n = 2; n <= 4; ++n) d.push_back({"B" + std::to_string(n), cartan_B(n)});
    for (int n = 2; n <= 4; ++n) d.push_back({"C" + std::to_string(n), cartan_C(n)});
    d.push_back({"D4", cartan_D(4)});
    d.push_back({"G2", cartan_G2()});
    d.push_back({"F4", cartan_F4()});
    // internal systems used by folding constructions; not advertised on the CLI
    d.push_back({"D3", cartan_D(3)});
    d.push_back({"D5", cartan_D(5)});
    d.push_back({"E6", cartan_E6()});
    for (int n = 5; n <= 9; ++n) d.push_back({"B" + std::to_string(n), cartan_B(n)});
    for (int n = 5; n <= 9; ++n) d.push_back({"C" + std::to_string(n), cartan_C(n)});
    for (int n = 6; n <= 9; ++n) d.push_back({"D" + std::to_string(n), cartan_D(n)});
    return d;
  }();
  return defs;
}

std::string canonical_name(const IMat& a) {
  for (const auto& d : builtin_defs())
    if (d.a == a) return d.name;
  std::ostringstream os;
  os << "cartan[";
  for (size_t i = 0; i < a.size(); ++i) {
    if (i) os << ',';
    os << '[';
    for (size_t j = 0; j < a[i].size(); ++j) {
      if (j) os << ',';
      os << a[i][j];
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

std::unique_ptr<RootSystem> construct(const GCM& cm) {
  validate_gcm(cm.a);
  auto rs = std::make_unique<RootSystem>();
  rs->a = cm.a;
  rs->n = cm.rank();
  rs->name = canonical_name(cm.a);
  rs->eps = symmetrizer(cm.a);
  rs->eps_max = *std::max_element(rs->eps.begin(), rs->eps.end());

  const int n = rs->n;
  // positive definiteness of diag(eps)*A via leading principal minors
  {
    std::vector<std::vector<Int>> b(n, std::vector<Int>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) b[i][j] = int_of(rs->eps[i] * cm.a[i][j]);
    for (int k = 1; k <= n; ++k) {
      std::vector<std::vector<Int>> lead(k, std::vector<Int>(k));
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) lead[i][j] = b[i][j];
      if (det_int(lead) <= 0) fail(ErrorKind::NotFiniteType, "symmetrized Cartan matrix is not positive definite");
    }
  }

  Int d = det_int(to_int_mat(cm.a));
  if (d <= 0) fail(ErrorKind::NotFiniteType, "Cartan determinant not positive");
  rs->detA = to_ll(d);
  rs->adjA = adjugate(cm.a, rs->detA);

  rs->heightvec.assign(n, 0);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) rs->heightvec[j] += rs->adjA[i][j];

  // reflection closure from the simple roots
  auto make_root = [&](const std::vector<long long>& alpha) {
    Root r;
    r.alpha = alpha;
    r.height = std::accumulate(alpha.begin(), alpha.end(), 0LL);
    Weight w(n);
    for (int i = 0; i < n; ++i) {
      long long v = 0;
      for (int j = 0; j < n; ++j) v += cm.a[i][j] * alpha[j];
      w.c2[i] = 2 * v;
    }
    r.w = w;
    long long norm2 = 0;  // alpha^T diag(eps) A alpha
    for (int i = 0; i < n; ++i) norm2 += rs->eps[i] * alpha[i] * (r.w.c2[i] / 2);
    r.norm2 = norm2;
    return r;
  };

  std::set<std::vector<long long>> seen;
  std::vector<Root> roots;
  std::queue<Root> work;
  for (int j = 0; j < n; ++j) {
    std::vector<long long> e(n, 0);
    e[j] = 1;
    Root r = make_root(e);
    seen.insert(e);
    roots.push_back(r);
    work.push(r);
  }
  while (!work.empty()) {
    Root r = work.front();
    work.pop();
    for (int i = 0; i < n; ++i) {
      long long li = r.w.c2[i] / 2;
      if (li == 0) continue;
      std::vector<long long> alpha = r.alpha;
      alpha[i] -= li;
      bool positive = true;
      for (auto v : alpha)
        if (v < 0) {
          positive = false;
          break;
        }
      if (!positive || seen.count(alpha)) continue;
      seen.insert(alpha);
      Root nr = make_root(alpha);
      roots.push_back(nr);
      work.push(nr);
      if (roots.size() > 4096) fail(ErrorKind::NotFiniteType, "reflection closure did not terminate");
    }
  }
  std::sort(roots.begin(), roots.end(), [](const Root& x, const Root& y) {
    if (x.height != y.height) return x.height < y.height;
    return x.w < y.w;
  });

  long long minn = roots[0].norm2, maxn = roots[0].norm2;
  for (const auto& r : roots) {
    minn = std::min(minn, r.norm2);
    maxn = std::max(maxn, r.norm2);
  }
  if (minn != 2) fail(ErrorKind::Internal, "normalization: shortest root squared length != 2");
  rs->simply_laced = (minn == maxn);
  for (auto& r : roots) {
    // simply-laced convention: every root counts as short, R_l empty
    r.is_short = rs->simply_laced || r.norm2 == minn;
    r.covec.assign(n, 0);
    for (int j = 0; j < n; ++j) {
      long long num = r.alpha[j] * rs->eps[j] * 2;
      if (num % r.norm2 != 0) fail(ErrorKind::Internal, "coroot is not integral");
      r.covec[j] = num / r.norm2;
    }
  }
  rs->positive_roots = roots;
  for (size_t k = 0; k < roots.size(); ++k)
    (roots[k].is_short ? rs->short_positive : rs->long_positive).push_back(static_cast<int>(k));
  rs->simple_roots.clear();
  for (int j = 0; j < n; ++j) {
    std::vector<long long> e(n, 0);
    e[j] = 1;
    for (const auto& r : roots)
      if (r.alpha == e) {
        rs->simple_roots.push_back(r);
        break;
      }
  }

  rs->rho = Weight::from_labels(std::vector<long long>(n, 1));
  {
    Weight acc(n);
    for (int idx : rs->short_positive) acc = acc + rs->positive_roots[idx].w;
    for (int i = 0; i < n; ++i) {
      if (acc.c2[i] % 2 != 0) fail(ErrorKind::Internal, "rho_s not integral");
      acc.c2[i] /= 2;
    }
    rs->rho_s = acc;
  }

  const Root& top = roots.back();
  for (size_t k = 0; k + 1 < roots.size(); ++k)
    if (roots[k].height == top.height) fail(ErrorKind::Internal, "highest root is not unique");
  rs->theta = top.w;
  rs->marks = top.alpha;
  rs->coxeter = top.height + 1;
  rs->comarks = top.covec;
  rs->dual_coxeter = 1 + std::accumulate(top.covec.begin(), top.covec.end(), 0LL);
  {
    const Root* best = nullptr;
    for (int idx : rs->short_positive) {
      const Root& r = rs->positive_roots[idx];
      if (!best || r.height > best->height) best = &r;
    }
    rs->theta_s = best->w;
  }
  for (int i = 0; i < n; ++i)
    if (rs->eps[i] == 1) ++rs->n_short_simple;
  return rs;
}

}  // namespace

GCM gcm_from_matrix(const IMat& m) { return GCM{m}; }

bool is_builtin_name(const std::string& name) {
  static const std::set<std::string> cli_names = [] {
    std::set<std::string> s;
    for (int n = 1; n <= 9; ++n) s.insert("A" + std::to_string(n));
    for (int n = 2; n <= 4; ++n) s.insert("B" + std::to_string(n));
    for (int n = 2; n <= 4; ++n) s.insert("C" + std::to_string(n));
    s.insert("D4");
    s.insert("G2");
    s.insert("F4");
    return s;
  }();
  return cli_names.count(name) > 0;
}

std::vector<std::string> builtin_names() {
  std::vector<std::string> v;
  for (int n = 1; n <= 9; ++n) v.push_back("A" + std::to_string(n));
  for (int n = 2; n <= 4; ++n) v.push_back("B" + std::to_string(n));
  for (int n = 2; n <= 4; ++n) v.push_back("C" + std::to_string(n));
  v.push_back("D4");
  v.push_back("G2");
  v.push_back("F4");
  return v;
}

GCM builtin_cartan(const std::string& name) {
  for (const auto& d : builtin_defs())
    if (d.name == name) return GCM{d.a};
  fail(ErrorKind::Usage, "unknown type name '" + name + "'");
}

const RootSystem& build_root_system(const GCM& cm) {
  std::lock_guard<std::mutex> lock(intern_mutex());
  auto& table = intern_table();
  InternKey key{cm.a};
  auto it = table.find(key);
  if (it != table.end()) return *it->second;
  auto rs = construct(cm);
  auto* ptr = rs.get();
  table.emplace(std::move(key), std::move(rs));
  return *ptr;
}

const RootSystem& root_system(const std::string& name) { return build_root_system(builtin_cartan(name)); }

Rat RootSystem::height_q(const Weight& w) const {
  Rat num = 0;
  for (int j = 0; j < n; ++j) num += rat_of(heightvec[j] * w.c2[j]);
  num /= rat_of(2 * detA);
  num.canonicalize();
  return num;
}

long long RootSystem::ht2num(const Weight& w) const {
  long long s = 0;
  for (int j = 0; j < n; ++j) s += heightvec[j] * w.c2[j];
  return s;
}

std::vector<Rat> RootSystem::alpha_coords(const Weight& w) const {
  std::vector<Rat> c(n, Rat(0));
  for (int i = 0; i < n; ++i) {
    Rat v = 0;
    for (int j = 0; j < n; ++j) v += rat_of(adjA[i][j] * w.c2[j]);
    c[i] = v / rat_of(2 * detA);
    c[i].canonicalize();
  }
  return c;
}

long long RootSystem::theta_pairing2(const Weight& w) const {
  long long s = 0;
  for (int j = 0; j < n; ++j) s += comarks[j] * w.c2[j];
  return s;
}

Rat RootSystem::ip_q(const Weight& x, const Weight& y) const {
  // (x,y) = sum_j c_j(y) eps_j x_j with short roots of squared length 2
  Rat acc = 0;
  for (int j = 0; j < n; ++j) {
    Rat cy = 0;
    for (int k = 0; k < n; ++k) cy += rat_of(adjA[j][k] * y.c2[k]);
    acc += cy * rat_of(eps[j] * x.c2[j]);
  }
  acc /= rat_of(4 * detA);
  acc.canonicalize();
  return acc;
}

bool RootSystem::is_dominant(const Weight& w) const {
  for (int i = 0; i < n; ++i)
    if (w.c2[i] < 0) return false;
  return true;
}

int RootSystem::root_index(const Weight& w) const {
  for (size_t k = 0; k < positive_roots.size(); ++k)
    if (positive_roots[k].w == w) return static_cast<int>(k);
  return -1;
}

bool RootSystem::is_positive_root(const Weight& w) const { return root_index(w) >= 0; }

Weight weyl_reflect(const RootSystem& rs, int i, const Weight& w) {
  if (i < 1 || i > rs.n) fail(ErrorKind::IndexOutOfRange, "reflection index out of range");
  if (w.n != rs.n) fail(ErrorKind::RootSystemMismatch, "weight rank mismatch");
  const int k = i - 1;
  Weight r = w;
  const long long pair2 = w.c2[k];  // 2*w(alpha_k^vee)
  for (int j = 0; j < rs.n; ++j) r.c2[j] -= pair2 * rs.a[j][k];
  return r;
}

std::vector<Weight> weyl_orbit(const RootSystem& rs, const Weight& w) {
  std::set<Weight> seen;
  std::queue<Weight> work;
  seen.insert(w);
  work.push(w);
  while (!work.empty()) {
    Weight x = work.front();
    work.pop();
    for (int i = 1; i <= rs.n; ++i) {
      Weight y = weyl_reflect(rs, i, x);
      if (seen.insert(y).second) work.push(y);
    }
  }
  return std::vector<Weight>(seen.begin(), seen.end());
}

DominantRep dominant_representative(const RootSystem& rs, const Weight& w) {
  DominantRep out;
  out.w = w;
  out.sign = 1;
  for (;;) {
    int i = -1;
    for (int k = 0; k < rs.n; ++k)
      if (out.w.c2[k] < 0) {
        i = k;
        break;
      }
    if (i < 0) break;
    out.w = weyl_reflect(rs, i + 1, out.w);
    out.sign = -out.sign;
  }
  out.regular = true;
  for (int k = 0; k < rs.n; ++k)
    if (out.w.c2[k] == 0) out.regular = false;
  return out;
}

bool root_order_leq(const RootSystem& rs, const Weight& b, const Weight& c) {
  if (b.n != rs.n || c.n != rs.n) fail(ErrorKind::RootSystemMismatch, "weight rank mismatch");
  Weight d = c - b;
  for (int i = 0; i < rs.n; ++i) {
    long long num = 0;
    for (int j = 0; j < rs.n; ++j) num += rs.adjA[i][j] * d.c2[j];
    if (num % (2 * rs.detA) != 0) return false;
    if (num / (2 * rs.detA) < 0) return false;
  }
  return true;
}

}  // namespace spinfactor
