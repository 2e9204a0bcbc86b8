// Fully enumerated 3-groups S = A x| T for the four module cases: the
// symmetric-square module under UT3(F3) and the three coordinate modules
// under the translation group, together with the distinguished subgroups
// Z, A_*, U_k, W_k, Q_k and the unique special subgroup Q, and the
// verification suites for the special-group lemmas.

#pragma once

#include "gt/mathieu.hpp"

#include <array>
#include <vector>

namespace gt {

enum class PgCase { m12, a6, m11, m11dual };

// Element of S as a pair (module index, actor index).
struct SGElem {
  int a = 0;
  int t = 0;
  friend bool operator==(const SGElem &, const SGElem &) = default;
};

// Semidirect product with a precomputed action table: multiplication is
// (a, t)(a', t') = (a + ^t a', tt').  Module indices are positional base-3
// encodings of the coordinates, so addition is digitwise.
struct SmallGroup {
  PgCase kind = PgCase::a6;
  int mod_size = 0;
  int act_size = 0;
  std::vector<std::vector<int>> act;  // act[t][a] = index of ^t a
  std::vector<std::vector<int>> tmul; // actor composition
  std::vector<int> tinv;              // actor inverses

  int size() const { return mod_size * act_size; }
  int index(SGElem e) const { return e.a * act_size + e.t; }
  SGElem from_index(int i) const { return {i / act_size, i % act_size}; }
  SGElem identity() const { return {0, 0}; }

  static int add_mod(int x, int y)
  {
    int r = 0, p = 1;
    while (x != 0 || y != 0) {
      r += (x % 3 + y % 3) % 3 * p;
      x /= 3;
      y /= 3;
      p *= 3;
    }
    return r;
  }

  static int neg_mod(int x)
  {
    int r = 0, p = 1;
    while (x != 0) {
      r += (3 - x % 3) % 3 * p;
      x /= 3;
      p *= 3;
    }
    return r;
  }

  SGElem mul(const SGElem &x, const SGElem &y) const
  {
    return {add_mod(x.a, act[static_cast<std::size_t>(x.t)][static_cast<std::size_t>(y.a)]),
            tmul[static_cast<std::size_t>(x.t)][static_cast<std::size_t>(y.t)]};
  }

  SGElem inverse(const SGElem &x) const
  {
    int ti = tinv[static_cast<std::size_t>(x.t)];
    return {neg_mod(act[static_cast<std::size_t>(ti)][static_cast<std::size_t>(x.a)]), ti};
  }

  SGElem conj(const SGElem &g, const SGElem &h) const { return mul(mul(g, h), inverse(g)); }

  SGElem commutator(const SGElem &g, const SGElem &h) const
  {
    return mul(conj(g, h), inverse(h));
  }

  int order(const SGElem &x) const
  {
    SGElem y = x;
    int n = 1;
    while (!(y == identity())) {
      y = mul(y, x);
      ++n;
    }
    return n;
  }
};

SmallGroup build_S(PgCase c);

// Spot checks of the group axioms: associativity on random triples,
// identity and inverse on every element.
bool check_group_axioms(const SmallGroup &g, int triples, unsigned seed);

// ---------------------------------------------------------------------------
// Index encodings

int todd10_index(const Todd10 &t);
Todd10 todd10_at(int idx);
int todd11_index(const Todd11 &t);
Todd11 todd11_at(int idx);
int todd11d_index(const Todd11Dual &t);
Todd11Dual todd11d_at(int idx);

// Actors: translations indexed by F9 in the coordinate cases, unitriangular
// matrices by their three upper entries in the M12 case.
int dpar_index(F9 x);
F9 dpar_at(int t);
int ut3_index(F3 x01, F3 x02, F3 x12);
MatF3 ut3_at(int t);

// Number of base-3 digits of a module index.
int module_rank(PgCase c);

// Membership in the distinguished submodules.
bool in_center_module(PgCase c, int mod_idx); // Z = C_A(T)
bool in_a_star(PgCase c, int mod_idx);        // A_* = [T, A]

// Unit-vector generators of A and of A_*.
std::vector<SGElem> module_units(const SmallGroup &g);
std::vector<SGElem> a_star_units(const SmallGroup &g);

// Distinguished actors in the M12 case: eta(k) for k = 0, 1, 2 and
// eta(3) for the remaining generator; eta_bar spans the center of T.
SGElem eta(int k);
SGElem eta_bar();

// ---------------------------------------------------------------------------
// Subgroups

struct SubgroupHandle {
  std::vector<SGElem> gens;  // reduced generating set
  std::vector<int> members;  // sorted element indices
  std::vector<char> inset;   // membership bitmap over the parent group

  std::size_t size() const { return members.size(); }
  bool contains(int idx) const { return inset[static_cast<std::size_t>(idx)] != 0; }
  bool contains(const SmallGroup &g, const SGElem &e) const { return contains(g.index(e)); }
};

SubgroupHandle subgroup(const SmallGroup &g, const std::vector<SGElem> &gens);
SubgroupHandle subgroup_from_members(const SmallGroup &g, std::vector<int> members);

// Exhaustive closure test over all member pairs.
bool is_closed(const SmallGroup &g, const SubgroupHandle &h);
bool is_abelian(const SmallGroup &g, const SubgroupHandle &h);

SubgroupHandle center_of(const SmallGroup &g, const SubgroupHandle &h);
SubgroupHandle derived_of(const SmallGroup &g, const SubgroupHandle &h);
SubgroupHandle frattini_of(const SmallGroup &g, const SubgroupHandle &h);
SubgroupHandle omega1_of(const SmallGroup &g, const SubgroupHandle &h);

SubgroupHandle centralizer_in_S(const SmallGroup &g, const std::vector<SGElem> &of);
SubgroupHandle normalizer_in_S(const SmallGroup &g, const SubgroupHandle &h);

struct StructureInfo {
  std::size_t order = 0;
  std::size_t center = 0;
  std::size_t derived = 0;
  std::size_t frattini = 0;
  std::size_t omega1 = 0;
  int exponent = 0;
  bool abelian = false;
  bool special = false;      // center = derived = Frattini, elementary abelian
  bool extraspecial = false; // special with center of order 3
};

StructureInfo structure(const SmallGroup &g, const SubgroupHandle &h);

// ---------------------------------------------------------------------------
// The M12-case family U_k, W_k, Q_k

struct UWQData {
  SubgroupHandle U, W, Q, NSQ;
};

// k = 0, 1, 2, or 3 for the infinity member of the family.
UWQData build_UWQ(const SmallGroup &g, int k);

// The conjugation formulas for eta_k, eta_inf, eta_bar on symmetric
// matrices, against the action table on random matrices.
bool check_ton_a_formulas(const SmallGroup &g, int samples, unsigned seed);

// Exhaustive search over the coset-pair candidates B with B meet A = W_inf
// and BA = U_inf A for abelian subgroups of order 3^5 outside A.
struct AbelianSearchResult {
  int candidates = 0;
  int found = 0;
  bool all_conjugate_to_q_inf = false; // by an element of <a_33>, outside A_*
};
AbelianSearchResult count_abelian_3_5_not_in_A(const SmallGroup &g);

// Classification of the extraspecial order-3^5 subgroups found by the same
// coset-pair searches over all four values of k.
struct ExtraspecialReport {
  std::array<int, 4> valid_candidates{};   // subgroups P with P meet A = W_k
  std::array<int, 4> extraspecial_count{}; // among them
  bool all_centers_equal_Z = false;
  bool none_over_infinity = false;
  bool q_k_found_for_each_finite_k = false;
  bool a23_member_valid_not_extraspecial = false; // W_0<eta_bar, a_23 eta_0>
};
ExtraspecialReport extraspecial_3_5_classification(const SmallGroup &g);

// ---------------------------------------------------------------------------
// The unique special subgroup Q in the coordinate cases

struct SpecialSearchResult {
  int candidates = 0;
  int valid = 0; // candidates with Q meet A = A_* and QA = S
  int hits = 0;  // valid, special, Q/Z abelian of order 3^4, exponent 3
  SubgroupHandle q;
  bool equals_a_star_t = false;
  std::size_t out_s_order = 0; // |N_S(Q)| / |Q C_S(Q)|
};

SpecialSearchResult unique_special_Q(const SmallGroup &g);

// ---------------------------------------------------------------------------
// Triple coordinates on Q = A_* T

// <<a, b, z>> = [0, a, z] <b>; z ranges over F3 (im part zero) except in
// the m11 case, where it ranges over F9.
struct QTriple {
  F9 a, b, z;
  friend bool operator==(const QTriple &, const QTriple &) = default;
};

QTriple qtriple_mul(PgCase c, const QTriple &x, const QTriple &y);
SGElem qtriple_elem(const SmallGroup &g, const QTriple &q);
QTriple qtriple_of(const SmallGroup &g, const SGElem &e);

// Exhaustive agreement of qtriple_mul with the group multiplication, and
// the conjugation formulas for [0,r,0]-translations, the scalar and
// Frobenius column maps, and -Id.
bool check_qtriple_tables(const SmallGroup &g);

// ---------------------------------------------------------------------------
// Cube criterion

// (ax)^3 = x^3 if and only if [x,[x,a]] = 1; both sides are evaluated and
// the equivalence is asserted.
bool cube_criterion(const SmallGroup &g, const SGElem &x, int a_mod);
bool check_cube_criterion(const SmallGroup &g);

// a in A_* forces (ax)^3 = x^3 in every case; in the a6 and m11 cases the
// converse holds for every fixed x outside A, and in the m11dual case the
// common kernel over all x is exactly A_*.
bool check_cubes_vs_a_star(const SmallGroup &g);

// ---------------------------------------------------------------------------
// Special-group lemma suite

struct SpecReport {
  bool hypothesis = false;            // special with elementary abelian center
  bool quotient_elem_abelian = false; // all cubes lie in the center
  bool power_map_homomorphism = false;
  bool rho_trivial = false;
  int abelian_maximal_count = -1;  // |Q/Z| = 27, |Z| = 9: expected 1
  int abelian_order_p4_count = -1; // |Q/Z| = 81, |Z| = 9: expected 10
  bool commutator_condition = false; // [g, Q] = Z for all g outside Z
  bool pairwise_meet_in_center = false;
};

SpecReport spec_lemma_suite(const SmallGroup &g, const SubgroupHandle &q);

// ---------------------------------------------------------------------------
// Automorphisms of the a6-case S fixing A pointwise

struct AlphaReport {
  bool cocycle_condition = false;   // over all 81 translation pairs
  bool automorphisms = false;       // exhaustive homomorphism check
  bool alpha1_is_inner = false;     // conjugation by [1,0,0]
  std::array<MatF3, 3> matrices{};  // on Q/Z in the basis <<1,0>>,<<i,0>>,<<0,1>>,<<0,i>>
  bool matrices_expected = false;   // [[I,X],[0,I]] with X = I, diag(1,-1), antidiag(1,1)
  bool unipotent_order_27 = false;  // the three matrices generate E27
  bool commutator_form_standard = false; // +/- [[0,I],[-I,0]] on the basis
  bool c_beta_formula = false;      // conjugation by -[i] acts as stated
  bool alpha23_commute_with_c_beta = false;
  bool alpha1_does_not_commute = false;
};

AlphaReport alpha_automorphisms(const SmallGroup &g);

// ---------------------------------------------------------------------------
// Census inside the enumerated double cover of M12

struct M12Census {
  std::size_t c_gamma_z = 0;       // 432
  std::size_t n_gamma_z = 0;       // 864
  bool n_gamma_a_star_is_N = false;
  bool n_gamma_u0_equals_n_gamma_z = false;
  bool n_gamma_z_splits_off_neg = false; // N_Gamma(Z) = C_Gamma(Z) x <-Id>
  std::size_t conj_kernel = 0;     // 9: the translations themselves
  std::size_t conj_image = 0;      // 48
  bool image_is_gl2_3 = false;
  bool o3_of_quotient_trivial = false;
  bool complement_found = false;   // C_Gamma(Z) = U_0 x| GL2(3)
  bool invariant_subspaces_are_Z_W0 = false;
  bool u0_commutators_span_w0 = false; // [U_0, A] = W_0
  bool u0_trivial_on_quotient = false;
  bool neg_id_is_minus_one_on_quotient = false;
  bool quotient_action_irreducible = false; // on A / W_0
  bool q0_normal_in_model = false; // A x| N_Gamma(U_0) normalizes Q_0
  std::size_t model_normalizer_over_q0 = 0; // 2592
};

M12Census m12_census(const SmallGroup &g);

// ---------------------------------------------------------------------------
// Module tables for the coordinate cases

// The commutator, centralizer and Jordan-shape rows for the action of the
// translations on each coordinate module, checked exhaustively.
bool check_module_tables(const SmallGroup &g);

// For every nontrivial R <= T, |C_A(R)| |R| < |A|: any abelian subgroup of
// order |A| then lies in A, so A is the unique one.
bool check_unique_abelian_certificate(const SmallGroup &g);

} // namespace gt
