// Acceptance suite: runs every verification criterion at its stated budget
// and prints one pass/fail line per criterion. Exit code is the number of
// failing criteria.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

#include "spinfactor/affine.hpp"
#include "spinfactor/cli.hpp"
#include "spinfactor/embed.hpp"

using namespace spinfactor;

namespace {

struct Criterion {
  int number;
  std::string label;
  double budget_seconds;
  std::function<bool(std::string&)> run;
};

const char* kRank4Types[] = {"A1", "A2", "A3", "A4", "B2", "B3", "B4", "C2", "C3", "C4", "D4", "G2", "F4"};

bool criterion1(std::string& detail) {
  bool ok = true;
  auto t0 = std::chrono::steady_clock::now();
  for (const char* name : kRank4Types) ok = ok && denominator_check(root_system(name));
  double finite_secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  t0 = std::chrono::steady_clock::now();
  for (std::string name : {"A1", "A2", "B2"}) ok = ok && affine_denominator_check(root_system(name), 3);
  double affine_secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(2);
  os << "13 finite types in " << finite_secs << "s (budget 10s); affine A1, A2, B2 at K=3 in "
     << affine_secs << "s (budget 60s)";
  detail = os.str();
  return ok && finite_secs < 10.0 && affine_secs < 60.0;
}

bool criterion2(std::string& detail) {
  long long count = 0;
  for (const char* name : kRank4Types) {
    const RootSystem& rs = root_system(name);
    if (rs.n > 3) continue;
    std::vector<long long> labels(rs.n, 0);
    for (;;) {
      Weight lambda = Weight::from_labels(labels);
      const FormalCharacter& chi = irreducible_character(rs, lambda);
      if (!verify_weyl_character(rs, lambda, chi)) return false;
      if (chi.dimension() != weyl_dimension(rs, lambda)) return false;
      ++count;
      int p = rs.n - 1;
      while (p >= 0 && labels[p] == 2) {
        labels[p] = 0;
        --p;
      }
      if (p < 0) break;
      ++labels[p];
    }
  }
  detail = std::to_string(count) + " highest weights across rank <= 3";
  return true;
}

bool criterion3(std::string& detail) {
  for (const char* name : kRank4Types) {
    const RootSystem& rs = root_system(name);
    FormalCharacter sp = spin0_character(rs, adjoint_character(rs), Coweight::rho_vee(rs));
    if (sp != irreducible_character(rs, rs.rho)) {
      detail = std::string("mismatch at ") + name;
      return false;
    }
  }
  detail = "Spin0(adjoint) = V(rho) exactly for all 13 rank <= 4 types";
  return true;
}

bool criterion4(std::string& detail) {
  struct Item {
    const RootSystem* rs;
    FormalCharacter chi;
  };
  std::vector<Item> base;
  for (std::string t : {"A1", "A2", "B2"}) {
    const RootSystem& rs = root_system(t);
    base.push_back({&rs, adjoint_character(rs)});
  }
  const RootSystem& b2 = root_system("B2");
  base.push_back({&b2, irreducible_character(b2, b2.theta_s)});
  std::vector<Item> cases = base;
  for (size_t i = 0; i < base.size(); ++i)
    for (size_t j = i; j < base.size(); ++j)
      if (base[i].rs == base[j].rs) cases.push_back({base[i].rs, base[i].chi + base[j].chi});
  int checked = 0;
  for (const auto& c : cases) {
    Coweight d = Coweight::rho_vee(*c.rs);
    std::vector<std::pair<Weight, Int>> terms(c.chi.terms().begin(), c.chi.terms().end());
    if (clifford_wedge_oracle(*c.rs, terms, d) != spin_character(*c.rs, c.chi, d)) return false;
    ++checked;
  }
  for (int p = 0; p <= 5; ++p)
    if (!clifford_relations_hold(p, false) || !clifford_relations_hold(p, true)) return false;
  detail = std::to_string(checked) + " corpus inputs; anticommutation matrices through dim 11";
  return true;
}

bool criterion5(std::string& detail) {
  for (std::string name : {"A3_to_C2", "D3_to_B2", "A2_to_B1", "A4_to_B2", "D4_to_G2"}) {
    Folding f = folding_by_name(name);
    if (!verify_theorem1(f.spec, f.parts).pass) {
      detail = "theorem 1 failed on " + name;
      return false;
    }
    if (!verify_prop4_closed_form(f).pass) {
      detail = "closed-form factors failed on " + name;
      return false;
    }
  }
  // stated factors: A2n -> Bn produces V(rho) (x) V(rho + 2 rho_s)
  for (std::string name : {"A2_to_B1", "A4_to_B2"}) {
    Folding f = folding_by_name(name);
    const RootSystem& g = *f.spec.target;
    FormalCharacter w1 = spin0_character(g, f.parts[0], f.spec.d);
    if (w1 != irreducible_character(g, g.rho + 2 * g.rho_s)) return false;
  }
  // D4 -> G2 produces (V(rho_s)+V(0)) (x) (V(rho_s)+V(0))
  {
    Folding f = folding_by_name("D4_to_G2");
    const RootSystem& g = *f.spec.target;
    FormalCharacter w1 = spin0_character(g, f.parts[0], f.spec.d);
    if (w1 != irreducible_character(g, g.rho_s) + unit_character(g)) return false;
  }
  detail = "A3->C2, D3->B2, A2->B1, A4->B2, D4->G2 with the stated factors";
  return true;
}

bool criterion6(std::string& detail) {
  int count = 0;
  for (std::string name : {"A3_to_C2", "A2_to_B1"}) {
    Folding f = folding_by_name(name);
    for (int i = 0; i < f.spec.source->n; ++i) {
      std::vector<long long> lab(f.spec.source->n, 0);
      lab[i] = 1;
      if (!verify_theorem2(f.spec, f.parts, Weight::from_labels(lab)).pass) {
        detail = "theorem 2 failed on " + name;
        return false;
      }
      ++count;
    }
  }
  detail = std::to_string(count) + " fundamental weights across A3->C2 and A2->B1";
  return true;
}

bool criterion7(std::string& detail) {
  std::vector<std::vector<long long>> mus = {{}};
  std::function<void(std::vector<long long>&, long long, int)> gen = [&](std::vector<long long>& cur,
                                                                         long long hi, int max_len) {
    if (static_cast<int>(cur.size()) == max_len) return;
    for (long long v = hi; v >= 1; --v) {
      cur.push_back(v);
      mus.push_back(cur);
      gen(cur, v, max_len);
      cur.pop_back();
    }
  };
  int count = 0;
  for (int n = 2; n <= 4; ++n) {
    mus = {{}};
    std::vector<long long> cur;
    gen(cur, 2, n);
    for (const auto& mu : mus) {
      Report rep = verify_prop3(n, mu);
      if (!rep.pass) {
        detail = rep.identity;
        return false;
      }
      for (const auto& fac : rep.factors)
        if (!fac.symmetric_unimodal) return false;
      ++count;
    }
  }
  detail = std::to_string(count) + " (n, mu) pairs, all factors symmetric unimodal";
  return true;
}

bool criterion8(std::string& detail) {
  for (const char* name : kRank4Types)
    if (!coprimary_check(root_system(name), CoprimaryCase::adjoint, 0).pass) return false;
  for (std::string name : {"B2", "B3", "C2", "C3"})
    if (!coprimary_check(root_system(name), CoprimaryCase::theta_s, 0).pass) return false;
  for (std::string name : {"A1", "B2"})
    if (!coprimary_check(root_system(name), CoprimaryCase::two_theta_s, 0).pass) return false;
  detail = "V(rho) for 13 types; V(rho_s) for B2,B3,C2,C3; V(2rho_s+rho) for A1,B2";
  return true;
}

bool criterion9(std::string& detail) {
  const RootSystem& a1 = root_system("A1");
  AffineCharacter sp = affine_spin0_character(a1, adjoint_character(a1), 2);
  if (sp.level() != 2) return false;
  AffineCharacter irr = affine_irreducible_character(a1, AffineWeight{a1.rho, a1.dual_coxeter, 0}, 2);
  if (!same_slices(sp, irr) || sp.level() != irr.level()) return false;
  std::optional<AffineWeight> mh = AffineWeight{a1.rho, 1, 0};
  if (!verify_prop6_7_8(a1, 2, mh).pass) return false;
  detail = "A1 at K=2: level 2, slice-by-slice match, props 6-8 pass";
  return true;
}

bool criterion10(std::string& detail) {
  const RootSystem& a1 = root_system("A1");
  FormalCharacter v4 = irreducible_character(a1, Weight::from_labels({4}));
  AffineWeight top = affine_spin0_top(a1, v4);
  // Lambda = 3 rho + 10 Lambda_0 and Lambda' = 7 rho - delta + 10 Lambda_0
  if (top.finite != Weight::from_labels({3}) || top.level != 10) return false;
  AffineCharacter sp = affine_spin0_character(a1, v4, 1);
  if (sp.coeff(Weight::from_labels({7}), -1) == 0) return false;
  // Lambda - Lambda' = alpha_0 - alpha_1, i.e. delta - (theta + alpha_1)
  if (a1.theta + a1.simple_roots[0].w != Weight::from_labels({7}) - Weight::from_labels({3})) return false;
  if (!coprimary_check(a1, CoprimaryCase::two_theta_s, 1).pass) return false;
  if (!coprimary_check(root_system("B2"), CoprimaryCase::theta_s, 1).pass) return false;
  detail = "A1 obstruction pair (3rho+10L0, 7rho-delta+10L0); B2 Spin0 = V(rho_hat_s) at K=1";
  return true;
}

bool criterion11(std::string& detail) {
  for (std::string name : {"B2", "B3", "C3", "F4", "G2"})
    if (!dual_rootsystem_facts(root_system(name), 4).pass) {
      detail = "failed on " + name;
      return false;
    }
  detail = "B2, B3, C3, F4, G2 with imaginary multiplicities to K=4";
  return true;
}

bool criterion12(std::string& detail) {
  std::vector<std::vector<std::string>> cmds = {
      {"--json", "char", "--type", "A2", "--weight", "1,1"},
      {"--json", "roots", "--type", "F4"},
      {"--json", "verify", "denominator", "--type", "G2"},
      {"--json", "spin0", "--type", "B2", "--weight", "1,0"},
      {"--json", "verify", "clifford"},
  };
  for (const auto& cmd : cmds) {
    std::ostringstream o1, e1, o2, e2, o3, e3;
    int r1 = run_cli(cmd, o1, e1);
    int r2 = run_cli(cmd, o2, e2);
    setenv("SPINFACTOR_THREADS", "1", 1);
    int r3 = run_cli(cmd, o3, e3);
    setenv("SPINFACTOR_THREADS", "4", 1);
    std::ostringstream o4, e4;
    int r4 = run_cli(cmd, o4, e4);
    unsetenv("SPINFACTOR_THREADS");
    if (r1 != r2 || r1 != r3 || r1 != r4) return false;
    if (o1.str() != o2.str() || o1.str() != o3.str() || o1.str() != o4.str()) return false;
  }
  detail = "byte-identical JSON across reruns and SPINFACTOR_THREADS in {1,4}";
  return true;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {1, "denominator identities (finite rank <= 4; affine A1, A2, B2 at K=3)", 70.0, criterion1},
      {2, "character engine: Weyl quotient and dimension for labels <= 2, rank <= 3", 60.0, criterion2},
      {3, "Spin0(adjoint) = V(rho) for all simple types of rank <= 4", 30.0, criterion3},
      {4, "Clifford wedge oracle matches Spin, relations exact", 60.0, criterion4},
      {5, "theorem 1 across the folding list with the stated factors", 180.0, criterion5},
      {6, "theorem 2 for all fundamental weights on A3->C2 and A2->B1", 180.0, criterion6},
      {7, "proposition 3 for n in {2,3,4}, mu with parts <= 2", 60.0, criterion7},
      {8, "proposition 9 table of coprimary representations", 120.0, criterion8},
      {9, "propositions 5-7 for A1 at K=2", 180.0, criterion9},
      {10, "proposition 10: obstruction pair and the B2 theta_s case", 180.0, criterion10},
      {11, "dual root system facts for B2, B3, C3, F4, G2", 30.0, criterion11},
      {12, "deterministic byte-identical output", 60.0, criterion12},
  };

  int failures = 0;
  for (auto& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    std::string detail;
    try {
      ok = c.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
      ok = false;
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > c.budget_seconds) {
      ok = false;
      detail += " [over budget]";
    }
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << (ok ? "PASS" : "FAIL") << " criterion " << c.number << ": " << c.label << " (" << secs << "s)";
    if (!detail.empty()) line << " -- " << detail;
    std::cout << line.str() << std::endl;
    if (!ok) ++failures;
  }
  if (failures == 0)
    std::cout << "all 12 acceptance criteria pass" << std::endl;
  else
    std::cout << failures << " acceptance criteria FAILED" << std::endl;
  return failures;
}
