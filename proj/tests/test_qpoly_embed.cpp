#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "spinfactor/embed.hpp"

using namespace spinfactor;

namespace {

QPoly qp(std::vector<std::pair<long long, long long>> terms) {
  QPoly p;
  for (auto& [e, c] : terms) p.add(e, int_of(c));
  return p;
}

}  // namespace

TEST_CASE("qpoly arithmetic and printing") {
  QPoly p = qp({{0, 1}, {1, 1}});
  QPoly q = qp({{0, 1}, {2, 1}});
  CHECK(p * q == qp({{0, 1}, {1, 1}, {2, 1}, {3, 1}}));
  CHECK(p + p == qp({{0, 2}, {1, 2}}));
  CHECK(p.str() == "1 + q");
  CHECK(qp({{2, 3}, {0, -1}}).str() == "-1 + 3*q^2");
}

TEST_CASE("is_symmetric_unimodal") {
  CHECK(is_symmetric_unimodal(qp({{0, 1}, {1, 1}})));
  CHECK(!is_symmetric_unimodal(qp({{0, 1}, {1, 1}, {3, 1}})));
  CHECK(is_symmetric_unimodal(qp({{0, 1}, {1, 1}, {2, 1}, {3, 1}})));  // (1+q)(1+q^2)
  CHECK(is_symmetric_unimodal(qp({{5, 1}})));
  CHECK(!is_symmetric_unimodal(qp({{0, 2}, {1, 1}, {2, 2}})));  // dips in the middle
  CHECK_THROWS_AS(is_symmetric_unimodal(QPoly()), Error);
}

TEST_CASE("schur principal specialization by tableau enumeration") {
  CHECK(schur_principal_specialization({1, 0}, 2) == qp({{0, 1}, {1, 1}}));
  // frozen from the tableau oracle: q(1+q)^2(1+q^2) expanded
  CHECK(schur_principal_specialization({2, 1, 0}, 3) ==
        qp({{1, 1}, {2, 2}, {3, 2}, {4, 2}, {5, 1}}));
  CHECK(schur_principal_specialization({0}, 5) == QPoly::one());
  CHECK(schur_principal_specialization({}, 3) == QPoly::one());
  CHECK_THROWS_AS(schur_principal_specialization({1, 2}, 3), Error);
  CHECK_THROWS_AS(schur_principal_specialization({1, 1, 1}, 2), Error);
}

TEST_CASE("specialization via the principal character path agrees with tableaux") {
  for (int n = 2; n <= 4; ++n) {
    std::vector<std::vector<long long>> shapes = {{}, {1}, {2}, {2, 1}, {2, 2}, {3, 1}};
    for (const auto& lam : shapes) {
      if (static_cast<int>(lam.size()) > n) continue;
      CHECK(schur_principal_specialization(lam, n) == principal_specialization_via_character(lam, n));
    }
  }
}

TEST_CASE("principal_sl2_embedding") {
  EmbeddingSpec e2 = principal_sl2_embedding(2);
  CHECK(e2.map_num == IMat{{1}});
  EmbeddingSpec e3 = principal_sl2_embedding(3);
  const RootSystem& a2 = root_system("A2");
  for (const auto& r : a2.simple_roots)
    CHECK(restrict_weight(e3, r.w) == Weight::from_labels({2}));
  CHECK(restrict_weight(e3, a2.theta) == Weight::from_labels({4}));
  EmbeddingSpec e4 = principal_sl2_embedding(4);
  CHECK(restrict_weight(e4, root_system("A3").rho) == Weight::from_labels({10}));
  CHECK_THROWS_AS(principal_sl2_embedding(1), Error);
}

TEST_CASE("restrict_character: identity, principal, folding") {
  const RootSystem& a2 = root_system("A2");
  EmbeddingSpec id = identity_embedding(a2);
  CHECK(restrict_character(id, adjoint_character(a2)) == adjoint_character(a2));

  EmbeddingSpec pr = principal_sl2_embedding(3);
  FormalCharacter res = restrict_character(pr, adjoint_character(a2));
  const RootSystem& a1 = root_system("A1");
  FormalCharacter expect = irreducible_character(a1, Weight::from_labels({2}));
  expect += irreducible_character(a1, Weight::from_labels({4}));
  CHECK(res == expect);

  Folding f = folding_by_name("A3_to_C2");
  const RootSystem& c2 = *f.spec.target;
  FormalCharacter adj_res = restrict_character(f.spec, adjoint_character(*f.spec.source));
  FormalCharacter want = adjoint_character(c2) + irreducible_character(c2, c2.theta_s);
  CHECK(adj_res == want);

  // a synthetic rational map that misses the lattice
  EmbeddingSpec halved;
  halved.name = "halved";
  halved.source = &a1;
  halved.target = &a1;
  halved.map_num = {{1}};
  halved.map_den = 2;
  halved.d = Coweight::rho_vee(a1);
  try {
    restrict_weight(halved, Weight::from_labels({1}));
    FAIL("expected NonIntegralImage");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonIntegralImage);
  }
}

TEST_CASE("folding data matches the stated adjoint decompositions") {
  // A3 -> C2: p1 = V(theta_s)
  Folding f1 = folding_by_name("A3_to_C2");
  REQUIRE(f1.parts.size() == 1);
  CHECK(f1.parts[0] == irreducible_character(*f1.spec.target, f1.spec.target->theta_s));
  // A2 -> B1: p1 = V(2 theta_s) = V(4)
  Folding f2 = folding_by_name("A2_to_B1");
  REQUIRE(f2.parts.size() == 1);
  CHECK(f2.spec.target == &root_system("A1"));
  CHECK(f2.parts[0] == irreducible_character(root_system("A1"), Weight::from_labels({4})));
  // D4 -> G2: p1 = p2 = V(theta_s)
  Folding f3 = folding_by_name("D4_to_G2");
  REQUIRE(f3.parts.size() == 2);
  CHECK(f3.parts[0] == f3.parts[1]);
  CHECK(f3.parts[0] == irreducible_character(*f3.spec.target, f3.spec.target->theta_s));
  // remaining kinds construct and self-validate
  folding_by_name("D3_to_B2");
  folding_by_name("A4_to_B2");
  folding_by_name("A5_to_C3");
  folding_by_name("D4_to_B3");
  folding_by_name("E6_to_F4");
  CHECK_THROWS_AS(folding_by_name("A3_to_B9"), Error);
}

TEST_CASE("default_parts recovers the folding complements") {
  for (std::string name : {"A3_to_C2", "D4_to_G2", "A4_to_B2"}) {
    Folding f = folding_by_name(name);
    auto parts = default_parts(f.spec);
    REQUIRE(parts.size() == f.parts.size());
    // both lists are sums of the same characters
    FormalCharacter sum1(*f.spec.target), sum2(*f.spec.target);
    for (const auto& p : f.parts) sum1 += p;
    for (const auto& p : parts) sum2 += p;
    CHECK(sum1 == sum2);
  }
}

TEST_CASE("embedding invariants: positive roots restrict to the nonnegative side") {
  for (std::string name : {"A3_to_C2", "D3_to_B2", "A2_to_B1", "A4_to_B2", "D4_to_G2"}) {
    Folding f = folding_by_name(name);
    for (const auto& r : f.spec.source->positive_roots) {
      Weight img = restrict_weight(f.spec, r.w);
      CHECK(coweight_pairing(*f.spec.target, f.spec.d, img) >= 0);
    }
    // restriction preserves dimension
    for (int i = 0; i < f.spec.source->n; ++i) {
      std::vector<long long> lab(f.spec.source->n, 0);
      lab[i] = 1;
      const FormalCharacter& chi = irreducible_character(*f.spec.source, Weight::from_labels(lab));
      CHECK(restrict_character(f.spec, chi).dimension() == chi.dimension());
    }
  }
}

TEST_CASE("the restricted adjoint of sl_n under the principal sl2") {
  // chi_2 + chi_4 + ... + chi_{2(n-1)}
  for (int n = 3; n <= 5; ++n) {
    EmbeddingSpec pr = principal_sl2_embedding(n);
    const RootSystem& a1 = *pr.target;
    FormalCharacter res = restrict_character(pr, adjoint_character(*pr.source));
    FormalCharacter expect(a1);
    for (int j = 1; j <= n - 1; ++j) expect += irreducible_character(a1, Weight::from_labels({2 * j}));
    CHECK(res == expect);
    // the complement pieces are chi_4 ... chi_{2(n-1)}
    auto parts = default_parts(pr);
    CHECK(parts.size() == static_cast<size_t>(n - 2));
  }
}

TEST_CASE("theorem 1 for the principal embedding presented as A2 -> B1") {
  Folding f = folding_by_name("A2_to_B1");
  Report rep = verify_theorem1(f.spec, f.parts);
  CHECK(rep.pass);
  // the stated factors: V(rho) (x) V(rho + 2 rho_s) = chi_1 * chi_3
  const RootSystem& a1 = root_system("A1");
  FormalCharacter lhs = restrict_character(f.spec, irreducible_character(*f.spec.source, f.spec.source->rho));
  FormalCharacter expect = multiply(irreducible_character(a1, Weight::from_labels({1})),
                                    irreducible_character(a1, Weight::from_labels({3})));
  CHECK(lhs == expect);
}

TEST_CASE("theorem 1 for A3 -> C2 with W1 = V(rho_s)") {
  Folding f = folding_by_name("A3_to_C2");
  Report rep = verify_theorem1(f.spec, f.parts);
  CHECK(rep.pass);
  const RootSystem& c2 = *f.spec.target;
  CHECK(spin0_character(c2, f.parts[0], f.spec.d) == irreducible_character(c2, c2.rho_s));
}

TEST_CASE("theorem 1 for D4 -> G2 with the (V(rho_s) + V(0)) x2 pattern") {
  Folding f = folding_by_name("D4_to_G2");
  Report rep = verify_theorem1(f.spec, f.parts);
  CHECK(rep.pass);
  const RootSystem& g2 = *f.spec.target;
  FormalCharacter w1 = spin0_character(g2, f.parts[0], f.spec.d);
  FormalCharacter expect = irreducible_character(g2, g2.rho_s) + unit_character(g2);
  CHECK(w1 == expect);
}

TEST_CASE("theorem 1 rejects a wrong complement list") {
  Folding f = folding_by_name("A3_to_C2");
  std::vector<FormalCharacter> bad = {unit_character(*f.spec.target)};
  try {
    verify_theorem1(f.spec, bad);
    FAIL("expected DecompositionMismatch");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DecompositionMismatch);
  }
}

TEST_CASE("theorem 2: degenerate and fundamental cases") {
  Folding f = folding_by_name("A3_to_C2");
  // mu = 0 reduces to theorem 1
  CHECK(verify_theorem2(f.spec, f.parts, Weight::zero(3)).pass);
  CHECK(verify_theorem2(f.spec, f.parts, Weight::from_labels({1, 0, 0})).pass);

  EmbeddingSpec pr = principal_sl2_embedding(3);
  auto parts = default_parts(pr);
  CHECK(verify_theorem2(pr, parts, Weight::from_labels({1, 0})).pass);

  CHECK_THROWS_AS(verify_theorem2(f.spec, f.parts, Weight::from_labels({-1, 0, 0})), Error);
}

TEST_CASE("theorem 2 with multiplicity in the restricted decomposition") {
  // V(2,2) of A2 restricts along the principal sl2 with a doubled constituent
  EmbeddingSpec pr = principal_sl2_embedding(3);
  auto parts = default_parts(pr);
  Weight mu = Weight::from_labels({2, 2});
  auto dec = decompose(*pr.target, restrict_character(pr, irreducible_character(*pr.source, mu)));
  bool has_mult2 = false;
  for (const auto& [w, m] : dec)
    if (m == 2) has_mult2 = true;
  CHECK(has_mult2);
  CHECK(verify_theorem2(pr, parts, mu).pass);

  Folding f = folding_by_name("A3_to_C2");
  CHECK(verify_theorem2(f.spec, f.parts, Weight::from_labels({2, 1, 0})).pass);
}

TEST_CASE("theorem 2 over the fundamental weights of D4 -> G2") {
  Folding f = folding_by_name("D4_to_G2");
  for (int i = 0; i < 4; ++i) {
    std::vector<long long> lab(4, 0);
    lab[i] = 1;
    CHECK(verify_theorem2(f.spec, f.parts, Weight::from_labels(lab)).pass);
  }
}

TEST_CASE("restriction preserves dimension on random irreducibles") {
  unsigned long long s = 0x9e3779b97f4a7c15ULL;
  auto next = [&] {
    s ^= s << 13;
    s ^= s >> 7;
    s ^= s << 17;
    return s;
  };
  for (std::string name : {"A3_to_C2", "D4_to_G2"}) {
    Folding f = folding_by_name(name);
    for (int t = 0; t < 10; ++t) {
      std::vector<long long> lab(f.spec.source->n);
      for (auto& v : lab) v = static_cast<long long>(next() % 2);
      const FormalCharacter& chi = irreducible_character(*f.spec.source, Weight::from_labels(lab));
      CHECK(restrict_character(f.spec, chi).dimension() == chi.dimension());
    }
  }
}

TEST_CASE("prop4 closed form for every folding case") {
  for (std::string name : {"A3_to_C2", "D3_to_B2", "A2_to_B1", "A4_to_B2", "D4_to_G2"}) {
    Folding f = folding_by_name(name);
    CHECK_MESSAGE(verify_prop4_closed_form(f).pass, name);
  }
}

TEST_CASE("theorem 1 on the higher-rank folding instances") {
  for (std::string name : {"A5_to_C3", "D4_to_B3", "A6_to_B3", "D5_to_B4"}) {
    Folding f = folding_by_name(name);
    CHECK_MESSAGE(verify_theorem1(f.spec, f.parts).pass, name);
    CHECK_MESSAGE(verify_prop4_closed_form(f).pass, name);
  }
}

TEST_CASE("prop3: examples") {
  Report r1 = verify_prop3(2, {});
  CHECK(r1.pass);
  REQUIRE(r1.factors.size() == 1);
  CHECK(r1.factors[0].poly == "1 + q");

  Report r2 = verify_prop3(3, {});
  CHECK(r2.pass);
  Report r3 = verify_prop3(3, {1});
  CHECK(r3.pass);
  Report r4 = verify_prop3(4, {2, 2, 1});
  CHECK(r4.pass);
  for (const auto& f : r4.factors) CHECK(f.symmetric_unimodal);

  CHECK_THROWS_AS(verify_prop3(3, {1, 1, 1, 1}), Error);
}
