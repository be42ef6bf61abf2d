#ifndef SPINFACTOR_EMBED_HPP
#define SPINFACTOR_EMBED_HPP

#include <string>
#include <utility>
#include <vector>

#include "spinfactor/charalg.hpp"
#include "spinfactor/qpoly.hpp"
#include "spinfactor/report.hpp"
#include "spinfactor/spin.hpp"

namespace spinfactor {

// Linear restriction map between weight lattices: target labels =
// (map_num * source labels) / map_den.
struct EmbeddingSpec {
  std::string name;
  const RootSystem* source = nullptr;  // g-tilde
  const RootSystem* target = nullptr;  // g
  IMat map_num;
  long long map_den = 1;
  Coweight d;  // on the target

  // order of the diagram automorphism and the folded-edge count, for the
  // closed-form factor check; a=1 marks non-folding embeddings
  int auto_order = 1;
  int folded_edges = 0;
};

Weight restrict_weight(const EmbeddingSpec& spec, const Weight& w);
FormalCharacter restrict_character(const EmbeddingSpec& spec, const FormalCharacter& chi);

EmbeddingSpec identity_embedding(const RootSystem& rs);
EmbeddingSpec principal_sl2_embedding(int n);

enum class FoldingKind { A2n1_to_Cn, Dn1_to_Bn, E6_to_F4, A2n_to_Bn, D4_to_G2 };

struct Folding {
  EmbeddingSpec spec;
  std::vector<FormalCharacter> parts;  // orthogonal complement characters p_j
};

Folding folding_embedding(FoldingKind kind, int n = 0);
// names like A3_to_C2, D3_to_B2, A2_to_B1, A4_to_B2, D4_to_G2, E6_to_F4
Folding folding_by_name(const std::string& name);
std::vector<std::string> folding_names();

// p_j list from decomposing restrict(adjoint of source) - adjoint of target
std::vector<FormalCharacter> default_parts(const EmbeddingSpec& spec);

Report verify_theorem1(const EmbeddingSpec& spec, const std::vector<FormalCharacter>& parts);
Report verify_theorem2(const EmbeddingSpec& spec, const std::vector<FormalCharacter>& parts,
                       const Weight& mu_tilde);

// closed-form factor check: prod_j Spin0(p_j) = [V(e(rho+rho_s)+rho_s) + (a-2)V(0)]^{a-1}
Report verify_prop4_closed_form(const Folding& f);

Report verify_prop3(int n, const std::vector<long long>& mu);

// second route to the specialization: pair the A_{n-1} character with the
// principal H and collect q-exponents
QPoly principal_specialization_via_character(const std::vector<long long>& lambda, int n);

}  // namespace spinfactor

#endif
