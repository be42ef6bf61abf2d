#include "spinfactor/embed.hpp"

#include <algorithm>
#include <sstream>

namespace spinfactor {

Weight restrict_weight(const EmbeddingSpec& spec, const Weight& w) {
  if (w.n != spec.source->n) fail(ErrorKind::RootSystemMismatch, "weight rank mismatch");
  Weight out(spec.target->n);
  for (int i = 0; i < spec.target->n; ++i) {
    long long acc = 0;
    for (int j = 0; j < spec.source->n; ++j) acc += spec.map_num[i][j] * w.c2[j];
    if (acc % spec.map_den != 0)
      fail(ErrorKind::NonIntegralImage, "restriction of " + format_weight(w) + " is not integral");
    out.c2[i] = acc / spec.map_den;
  }
  if (w.is_integral() && !out.is_integral())
    fail(ErrorKind::NonIntegralImage, "restriction of " + format_weight(w) + " is not integral");
  return out;
}

FormalCharacter restrict_character(const EmbeddingSpec& spec, const FormalCharacter& chi) {
  if (&chi.rs() != spec.source) fail(ErrorKind::RootSystemMismatch, "character is not on the source system");
  FormalCharacter out(*spec.target);
  for (const auto& [w, c] : chi.terms()) out.add(restrict_weight(spec, w), c);
  return out;
}

namespace {

void validate_embedding(const EmbeddingSpec& spec) {
  // positive roots of the source restrict to the d-nonnegative side
  for (const auto& r : spec.source->positive_roots) {
    Weight img = restrict_weight(spec, r.w);
    if (coweight_pairing(*spec.target, spec.d, img) < 0)
      fail(ErrorKind::Internal, "embedding " + spec.name + ": a positive root restricts to the negative side");
  }
  // simple roots of the target occur among restrictions of simple roots
  for (const auto& s : spec.target->simple_roots) {
    bool found = false;
    for (const auto& r : spec.source->simple_roots)
      if (restrict_weight(spec, r.w) == s.w) found = true;
    if (!found) fail(ErrorKind::Internal, "embedding " + spec.name + ": target simple root not hit");
  }
}

}  // namespace

EmbeddingSpec identity_embedding(const RootSystem& rs) {
  EmbeddingSpec spec;
  spec.name = "identity:" + rs.name;
  spec.source = &rs;
  spec.target = &rs;
  spec.map_num.assign(rs.n, std::vector<long long>(rs.n, 0));
  for (int i = 0; i < rs.n; ++i) spec.map_num[i][i] = 1;
  spec.map_den = 1;
  spec.d = Coweight::rho_vee(rs);
  return spec;
}

EmbeddingSpec principal_sl2_embedding(int n) {
  if (n < 2) fail(ErrorKind::BadRank, "principal sl2 needs n >= 2");
  if (n > 10) fail(ErrorKind::BadRank, "principal sl2 capped at n <= 10");
  EmbeddingSpec spec;
  spec.name = "principal_sl2:" + std::to_string(n);
  spec.source = &root_system("A" + std::to_string(n - 1));
  spec.target = &root_system("A1");
  // lambda -> lambda(H) with H = sum (n+1-2i) E_ii; row entries i(n-i)
  spec.map_num.assign(1, std::vector<long long>(n - 1, 0));
  for (int i = 1; i <= n - 1; ++i) spec.map_num[0][i - 1] = static_cast<long long>(i) * (n - i);
  spec.map_den = 1;
  spec.d = Coweight::rho_vee(*spec.target);
  validate_embedding(spec);
  return spec;
}

namespace {

Folding make_folding(const std::string& name, const RootSystem& src, const RootSystem& tgt, IMat map,
                     std::vector<Weight> part_highest, int auto_order, int folded_edges) {
  Folding f;
  f.spec.name = name;
  f.spec.source = &src;
  f.spec.target = &tgt;
  f.spec.map_num = std::move(map);
  f.spec.map_den = 1;
  f.spec.d = Coweight::rho_vee(tgt);
  f.spec.auto_order = auto_order;
  f.spec.folded_edges = folded_edges;
  validate_embedding(f.spec);
  for (const auto& hw : part_highest) f.parts.push_back(irreducible_character(tgt, hw));
  // the stated decomposition of the restricted adjoint pins the matrix down
  FormalCharacter lhs = restrict_character(f.spec, adjoint_character(src));
  FormalCharacter rhs = adjoint_character(tgt);
  for (const auto& p : f.parts) rhs += p;
  if (lhs != rhs) fail(ErrorKind::Internal, "folding " + name + ": adjoint decomposition mismatch");
  return f;
}

}  // namespace

Folding folding_embedding(FoldingKind kind, int n) {
  switch (kind) {
    case FoldingKind::A2n1_to_Cn: {
      if (n < 2 || n > 4) fail(ErrorKind::UnsupportedKind, "A(2n-1)->Cn supported for 2<=n<=4");
      const auto& src = root_system("A" + std::to_string(2 * n - 1));
      const auto& tgt = root_system("C" + std::to_string(n));
      IMat m(n, std::vector<long long>(2 * n - 1, 0));
      for (int i = 1; i <= n - 1; ++i) {
        m[i - 1][i - 1] = 1;
        m[i - 1][2 * n - i - 1] = 1;
      }
      m[n - 1][n - 1] = 1;
      return make_folding("A" + std::to_string(2 * n - 1) + "_to_C" + std::to_string(n), src, tgt, m,
                          {tgt.theta_s}, 2, 0);
    }
    case FoldingKind::Dn1_to_Bn: {
      if (n < 2 || n > 4) fail(ErrorKind::UnsupportedKind, "D(n+1)->Bn supported for 2<=n<=4");
      const auto& src = root_system("D" + std::to_string(n + 1));
      const auto& tgt = root_system("B" + std::to_string(n));
      IMat m(n, std::vector<long long>(n + 1, 0));
      for (int i = 1; i <= n - 1; ++i) m[i - 1][i - 1] = 1;
      m[n - 1][n - 1] = 1;
      m[n - 1][n] = 1;
      return make_folding("D" + std::to_string(n + 1) + "_to_B" + std::to_string(n), src, tgt, m,
                          {tgt.theta_s}, 2, 0);
    }
    case FoldingKind::A2n_to_Bn: {
      if (n < 1 || n > 4) fail(ErrorKind::UnsupportedKind, "A(2n)->Bn supported for 1<=n<=4");
      const auto& src = root_system("A" + std::to_string(2 * n));
      const auto& tgt = root_system(n == 1 ? "A1" : "B" + std::to_string(n));
      IMat m(n, std::vector<long long>(2 * n, 0));
      for (int i = 1; i <= n - 1; ++i) {
        m[i - 1][i - 1] = 1;
        m[i - 1][2 * n - i] = 1;
      }
      m[n - 1][n - 1] = 2;
      m[n - 1][n] = 2;
      return make_folding("A" + std::to_string(2 * n) + "_to_B" + std::to_string(n), src, tgt, m,
                          {2 * tgt.theta_s}, 2, 1);
    }
    case FoldingKind::D4_to_G2: {
      const auto& src = root_system("D4");
      const auto& tgt = root_system("G2");
      IMat m(2, std::vector<long long>(4, 0));
      m[0][0] = m[0][2] = m[0][3] = 1;  // outer triality orbit -> short node
      m[1][1] = 1;                      // center node -> long node
      return make_folding("D4_to_G2", src, tgt, m, {tgt.theta_s, tgt.theta_s}, 3, 0);
    }
    case FoldingKind::E6_to_F4: {
      const auto& src = root_system("E6");
      const auto& tgt = root_system("F4");
      // E6 nodes: chain 1-2-3-4-5, node 6 on node 3; phi: 1<->5, 2<->4
      IMat m(4, std::vector<long long>(6, 0));
      m[0][5] = 1;
      m[1][2] = 1;
      m[2][1] = 1;
      m[2][3] = 1;
      m[3][0] = 1;
      m[3][4] = 1;
      return make_folding("E6_to_F4", src, tgt, m, {tgt.theta_s}, 2, 0);
    }
  }
  fail(ErrorKind::UnsupportedKind, "unknown folding kind");
}

std::vector<std::string> folding_names() {
  return {"A3_to_C2", "A5_to_C3", "A7_to_C4", "D3_to_B2", "D4_to_B3", "D5_to_B4",
          "A2_to_B1", "A4_to_B2", "A6_to_B3", "A8_to_B4", "D4_to_G2", "E6_to_F4"};
}

Folding folding_by_name(const std::string& name) {
  auto parse = [&](const std::string& pre, const std::string& mid) -> int {
    // e.g. pre="A", mid="_to_C": "A5_to_C3" -> 3
    if (name.rfind(pre, 0) != 0) return -1;
    auto pos = name.find(mid);
    if (pos == std::string::npos) return -1;
    try {
      int src_rank = std::stoi(name.substr(pre.size(), pos - pre.size()));
      int tgt_rank = std::stoi(name.substr(pos + mid.size()));
      (void)src_rank;
      return tgt_rank;
    } catch (const std::exception&) {
      return -1;
    }
  };
  if (name == "D4_to_G2") return folding_embedding(FoldingKind::D4_to_G2);
  if (name == "E6_to_F4") return folding_embedding(FoldingKind::E6_to_F4);
  int n;
  if ((n = parse("A", "_to_C")) > 0 && name == "A" + std::to_string(2 * n - 1) + "_to_C" + std::to_string(n))
    return folding_embedding(FoldingKind::A2n1_to_Cn, n);
  if ((n = parse("D", "_to_B")) > 0 && name == "D" + std::to_string(n + 1) + "_to_B" + std::to_string(n))
    return folding_embedding(FoldingKind::Dn1_to_Bn, n);
  if ((n = parse("A", "_to_B")) > 0 && name == "A" + std::to_string(2 * n) + "_to_B" + std::to_string(n))
    return folding_embedding(FoldingKind::A2n_to_Bn, n);
  fail(ErrorKind::UnsupportedKind, "unknown folding '" + name + "'");
}

std::vector<FormalCharacter> default_parts(const EmbeddingSpec& spec) {
  FormalCharacter rest = restrict_character(spec, adjoint_character(*spec.source));
  rest -= adjoint_character(*spec.target);
  auto decomp = decompose(*spec.target, rest);
  std::vector<FormalCharacter> parts;
  for (const auto& [lambda, mult] : decomp) {
    const FormalCharacter& piece = irreducible_character(*spec.target, lambda);
    if (piece != piece.negated_weights())
      fail(ErrorKind::NotSelfDual, "complement constituent " + format_weight(lambda) + " is not self-dual");
    long long m = to_ll(mult);
    for (long long k = 0; k < m; ++k) parts.push_back(piece);
  }
  return parts;
}

namespace {

std::string first_diff_of(const FormalCharacter& lhs, const FormalCharacter& rhs) {
  for (const auto& [w, c] : lhs.terms()) {
    Int rc = rhs.coeff(w);
    if (rc != c)
      return format_weight(w) + ": lhs " + to_string(c) + " vs rhs " + to_string(rc);
  }
  for (const auto& [w, c] : rhs.terms())
    if (lhs.coeff(w) == 0) return format_weight(w) + ": lhs 0 vs rhs " + to_string(c);
  return "";
}

Report compare_report(const std::string& identity, const FormalCharacter& lhs, const FormalCharacter& rhs) {
  Report rep;
  rep.identity = identity;
  rep.lhs_hash = lhs.hash();
  rep.rhs_hash = rhs.hash();
  rep.pass = (lhs == rhs);
  if (!rep.pass) rep.first_diff = first_diff_of(lhs, rhs);
  return rep;
}

void check_theorem1_precondition(const EmbeddingSpec& spec, const std::vector<FormalCharacter>& parts) {
  FormalCharacter lhs = restrict_character(spec, adjoint_character(*spec.source));
  FormalCharacter rhs = adjoint_character(*spec.target);
  for (const auto& p : parts) rhs += p;
  if (lhs != rhs)
    fail(ErrorKind::DecompositionMismatch,
         "restricted adjoint of " + spec.source->name + " does not equal adjoint + sum of parts");
}

}  // namespace

Report verify_theorem1(const EmbeddingSpec& spec, const std::vector<FormalCharacter>& parts) {
  check_theorem1_precondition(spec, parts);
  const RootSystem& g = *spec.target;
  FormalCharacter lhs = restrict_character(spec, irreducible_character(*spec.source, spec.source->rho));
  FormalCharacter rhs = irreducible_character(g, g.rho);
  for (const auto& p : parts) rhs = multiply(rhs, spin0_character(g, p, spec.d));
  Report rep = compare_report("theorem1:" + spec.name, lhs, rhs);
  rep.notes.push_back("dim lhs = " + to_string(lhs.dimension()));
  return rep;
}

Report verify_theorem2(const EmbeddingSpec& spec, const std::vector<FormalCharacter>& parts,
                       const Weight& mu_tilde) {
  check_theorem1_precondition(spec, parts);
  const RootSystem& gt = *spec.source;
  const RootSystem& g = *spec.target;
  if (!gt.is_dominant(mu_tilde) || !mu_tilde.is_integral())
    fail(ErrorKind::NotDominant, "mu_tilde must be dominant integral");
  auto mu_parts = decompose(g, restrict_character(spec, irreducible_character(gt, mu_tilde)));
  FormalCharacter lhs =
      restrict_character(spec, irreducible_character(gt, 2 * mu_tilde + gt.rho));
  FormalCharacter sum(g);
  for (const auto& [mu, mult] : mu_parts) {
    FormalCharacter t = irreducible_character(g, 2 * mu + g.rho);
    t *= mult;
    sum += t;
  }
  FormalCharacter rhs = sum;
  for (const auto& p : parts) rhs = multiply(rhs, spin0_character(g, p, spec.d));
  Report rep = compare_report("theorem2:" + spec.name + ":mu=" + format_weight(mu_tilde), lhs, rhs);
  rep.notes.push_back("restricted V(mu~) has " + std::to_string(mu_parts.size()) + " distinct constituents");
  return rep;
}

Report verify_prop4_closed_form(const Folding& f) {
  const RootSystem& g = *f.spec.target;
  const int a = f.spec.auto_order;
  const int e = f.spec.folded_edges;
  FormalCharacter prod = unit_character(g);
  for (const auto& p : f.parts) prod = multiply(prod, spin0_character(g, p, f.spec.d));
  Weight hw = static_cast<long long>(e) * (g.rho + g.rho_s) + g.rho_s;
  FormalCharacter base = irreducible_character(g, hw);
  FormalCharacter unit = unit_character(g);
  unit *= int_of(a - 2);
  base += unit;
  FormalCharacter rhs = unit_character(g);
  for (int k = 0; k < a - 1; ++k) rhs = multiply(rhs, base);
  return compare_report("prop4_closed_form:" + f.spec.name, prod, rhs);
}

Report verify_prop3(int n, const std::vector<long long>& mu) {
  if (n < 2) fail(ErrorKind::BadRank, "n must be at least 2");
  if (static_cast<int>(mu.size()) > n) fail(ErrorKind::BadPartition, "mu has more than n parts");
  std::vector<long long> staircase(n);
  for (int i = 0; i < n; ++i) staircase[i] = n - 1 - i;
  std::vector<long long> two_mu_rho = staircase;
  for (size_t i = 0; i < mu.size(); ++i) two_mu_rho[i] += 2 * mu[i];
  for (size_t i = 0; i + 1 < two_mu_rho.size(); ++i)
    if (two_mu_rho[i] < two_mu_rho[i + 1]) fail(ErrorKind::BadPartition, "2mu+rho is not a partition");

  QPoly lhs = schur_principal_specialization(two_mu_rho, n, 1);

  std::vector<QPoly> factors;
  QPoly f1 = QPoly::monomial(to_ll(binomial_n3(n)), 1);
  QPoly oneq = QPoly::one();
  oneq.add(1, 1);
  f1 = f1 * oneq * schur_principal_specialization(mu, n, 2);
  factors.push_back(f1);
  for (int k = 1; k <= n - 2; ++k) factors.push_back(w_factor(k));

  QPoly rhs = QPoly::one();
  for (const auto& f : factors) rhs = rhs * f;

  Report rep;
  std::ostringstream id;
  id << "prop3:n=" << n << ":mu=";
  for (size_t i = 0; i < mu.size(); ++i) id << (i ? "," : "") << mu[i];
  if (mu.empty()) id << "0";
  rep.identity = id.str();
  rep.pass = (lhs == rhs);
  bool all_uni = true;
  for (const auto& f : factors) {
    bool u = is_symmetric_unimodal(f);
    all_uni = all_uni && u;
    rep.factors.push_back({f.str(), u});
  }
  rep.pass = rep.pass && all_uni;
  if (lhs != rhs) rep.first_diff = "lhs " + lhs.str() + " vs rhs " + rhs.str();
  rep.lhs_hash = lhs.str();
  rep.rhs_hash = rhs.str();
  return rep;
}

QPoly principal_specialization_via_character(const std::vector<long long>& lambda, int n) {
  if (n < 2) fail(ErrorKind::BadRank, "n must be at least 2");
  for (size_t i = 0; i + 1 < lambda.size(); ++i)
    if (lambda[i] < lambda[i + 1]) fail(ErrorKind::BadPartition, "parts must be weakly decreasing");
  std::vector<long long> shape(lambda);
  shape.resize(n, 0);
  long long size = 0;
  for (auto v : shape) size += v;
  std::vector<long long> labels(n - 1);
  for (int i = 0; i < n - 1; ++i) labels[i] = shape[i] - shape[i + 1];
  EmbeddingSpec pr = principal_sl2_embedding(n);
  FormalCharacter chi = restrict_character(pr, irreducible_character(*pr.source, Weight::from_labels(labels)));
  // S_lambda(1,q,...,q^{n-1}) = q^{(n-1)|lambda|/2} * sum_t m_t q^{-t/2}, t = mu(H)
  QPoly out;
  for (const auto& [w, c] : chi.terms()) {
    long long t = w.c2[0] / 2;
    long long num = (n - 1) * size - t;
    if (num % 2 != 0) fail(ErrorKind::Internal, "principal specialization exponent is not integral");
    out.add(num / 2, c);
  }
  return out;
}

}  // namespace spinfactor
