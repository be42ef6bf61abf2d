#ifndef SPINFACTOR_ROOTSYS_HPP
#define SPINFACTOR_ROOTSYS_HPP

#include <string>
#include <vector>

#include "spinfactor/bigint.hpp"
#include "spinfactor/weight.hpp"

namespace spinfactor {

using IMat = std::vector<std::vector<long long>>;

// Generalized Cartan matrix, convention a[i][j] = alpha_j(alpha_i^vee),
// so the Dynkin labels of alpha_j form column j.
struct GCM {
  IMat a;
  int rank() const { return static_cast<int>(a.size()); }
};

struct Root {
  Weight w;                      // Dynkin labels (doubled storage)
  std::vector<long long> alpha;  // coordinates in the simple-root basis
  long long height = 0;          // sum of alpha coordinates
  long long norm2 = 0;           // (beta,beta) with short roots normalized to 2
  bool is_short = false;
  std::vector<long long> covec;  // beta^vee in the simple-coroot basis
};

// Finite (indecomposable) root system with all derived data. Instances are
// interned and immutable; operations are pure functions.
struct RootSystem {
  std::string name;
  int n = 0;
  IMat a;                    // Cartan matrix
  IMat adjA;                 // adjugate of a
  long long detA = 1;        // determinant of a (positive for finite type)
  std::vector<long long> eps;  // symmetrizer, min entry 1; (a_i,a_i) = 2 eps_i
  long long eps_max = 1;

  std::vector<Root> positive_roots;  // sorted by (height, lex on labels)
  std::vector<int> short_positive, long_positive;  // indices into positive_roots
  std::vector<Root> simple_roots;

  Weight rho, rho_s;
  Weight theta, theta_s;
  long long coxeter = 0;       // h
  long long dual_coxeter = 0;  // h^vee
  std::vector<long long> marks, comarks;
  std::vector<long long> heightvec;  // ht2num(w) = dot(heightvec, w.c2) = 2*detA*height(w)
  int n_short_simple = 0;
  bool simply_laced = false;

  // exact height of a weight in the simple-root basis
  Rat height_q(const Weight& w) const;
  long long ht2num(const Weight& w) const;
  // alpha-coordinates of a weight, exact
  std::vector<Rat> alpha_coords(const Weight& w) const;
  // pairing 2*w(theta^vee)
  long long theta_pairing2(const Weight& w) const;
  // invariant form, short roots of squared length 2
  Rat ip_q(const Weight& x, const Weight& y) const;
  bool is_dominant(const Weight& w) const;
  bool is_positive_root(const Weight& w) const;
  int root_index(const Weight& w) const;  // -1 if not a positive root
};

GCM gcm_from_matrix(const IMat& m);
GCM builtin_cartan(const std::string& name);
bool is_builtin_name(const std::string& name);
std::vector<std::string> builtin_names();

// Validates and interns; returned reference lives for the whole process.
const RootSystem& build_root_system(const GCM& cm);
const RootSystem& root_system(const std::string& name);

// i is 1-based, as in s_1,...,s_n.
Weight weyl_reflect(const RootSystem& rs, int i, const Weight& w);

std::vector<Weight> weyl_orbit(const RootSystem& rs, const Weight& w);

struct DominantRep {
  Weight w;
  int sign = 1;       // parity of a reducing reflection word
  bool regular = true;  // false iff some reflection fixes the weight
};
DominantRep dominant_representative(const RootSystem& rs, const Weight& w);

// true iff c - b is a nonnegative integer combination of simple roots
bool root_order_leq(const RootSystem& rs, const Weight& b, const Weight& c);

}  // namespace spinfactor

#endif
