// The symplectic group Sp4(3) and its extension by the form-negating
// similitudes: enumeration, the four conjugacy classes of order-3 elements
// with their determinant and sign invariants, the order-3 subgroup orbits
// on the unipotent radicals, automorphism lifting to the extraspecial group
// 3^{1+4} of exponent 3, the distinguished small subgroups generated by
// 3-elements, and the automorphism structure of the unitriangular groups
// UT3(3) and UT3(9).

#pragma once

#include "gt/pgroups.hpp"

#include <array>
#include <cstdint>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace gt {

// Base-3 packing of a 4x4 matrix over F3, row-major.
using SpKey = std::uint32_t;
SpKey sp_key(const MatF3 &m);
MatF3 sp_unkey(SpKey k);

struct SpGroup {
  std::vector<SpKey> elems; // sorted
  std::unordered_set<SpKey> lookup;
  std::vector<MatF3> gens;

  std::size_t size() const { return elems.size(); }
  bool contains(SpKey k) const { return lookup.count(k) != 0; }
  bool contains(const MatF3 &m) const { return contains(sp_key(m)); }
};

// Closure under multiplication; throws if the cap is exceeded.
SpGroup sp_closure(const std::vector<MatF3> &gens, std::size_t cap = 1 << 18);

struct Sp4Data {
  MatF3 j;          // Gram matrix [[0,I],[-I,0]]
  SpGroup sp;       // order 51840: m^T J m = J
  SpGroup sp_star;  // order 103680: m^T J m = +/- J
};

const Sp4Data &sp4_data();

// +1 or -1 according to m^T J m = +/- J; throws otherwise.
int sp_sign(const MatF3 &m);

int sp_order(const MatF3 &m);

// ---------------------------------------------------------------------------
// Order-3 classification

enum class ClassLabel { c3a, c3b, c3c, c3d };

// For Jordan type {2,1,1} the label is decided by the sign invariant
// s(g) = b(w, gw - w) for any w moved by g (s = +1 gives c3a by our fixed
// convention); for type {2,2} a basis is constructed in which g is
// [[I,X],[0,I]] and the Gram matrix is the standard one, and det X = 1
// gives c3c, det X = -1 gives c3d.
ClassLabel classify_order3(const MatF3 &g);

// The invariant s(g) agrees over every moved witness w.
bool sign_invariant_well_defined(const MatF3 &g);

struct Sp4ClassReport {
  std::size_t order3_count = 0;
  int class_count = 0;                     // conjugacy classes of order 3
  std::array<std::size_t, 4> label_sizes{}; // indexed by ClassLabel
  bool labels_constant_on_classes = false;
  bool inversion_swaps_ab_fixes_cd = false;
  bool conjugation_invariant = false;      // random sample
  bool sign_invariant_well_defined_on_sample = false;
};

Sp4ClassReport sp4_class_report(unsigned seed);

// ---------------------------------------------------------------------------
// Subgroup orbits of the unipotent <[[I,X],[0,I]]> and the Lagrangians

struct Sp4OrbitReport {
  std::size_t orbit_det1 = 0;   // 120
  std::size_t orbit_detm1 = 0;  // 240
  std::size_t orbit_det0 = 0;   // 40
  int lagrangians = 0;          // 40
  bool fixed_spaces_are_lagrangian = false;
  bool each_lagrangian_3_det1 = false; // every Lagrangian pointwise-fixed by 3
  bool each_lagrangian_6_detm1 = false; // and by 6 of the det -1 subgroups
};

Sp4OrbitReport sp4_orbit_report();

// ---------------------------------------------------------------------------
// Lifting to the extraspecial group of order 3^5 and exponent 3

// Elements are pairs (z, v) in F3 x F3^4 with
// (z,v)(z',v') = (z + z' + 2 b(v,v'), v + v') for the standard form b;
// packed as z + 3 * (base-3 code of v).
int heis_mul(int x, int y);
int heis_index(F3 z, const VecF3 &v);

struct LiftReport {
  bool group_valid = false;            // extraspecial 3^{1+4}, exponent 3
  bool lifts_multiplicative = false;   // alpha_g is a homomorphism, sampled g
  bool compose_exactly = false;        // alpha_g alpha_h = alpha_{gh}, gen pairs
  bool identity_lift_trivial = false;
  bool neg_identity_inverts_quotient_fixes_center = false;
  bool center_action_is_sign = false;  // over all of Sp*4(3)
  bool quotient_action_is_g = false;   // sampled
};

LiftReport sp4_lift_report(unsigned seed);

// ---------------------------------------------------------------------------
// Small subgroups generated by 3-elements

struct SmallSubgroupInfo {
  std::size_t order = 0;
  bool o3_trivial = false;             // two Sylow 3-subgroups meet trivially
  bool generated_by_3_elements = false;
  std::size_t n_3c = 0, n_3d = 0, n_other = 0; // order-3 element labels
};

struct Sp4SubgroupReport {
  SmallSubgroupInfo sl23_3c, sl23_3d;   // order 24, both class variants
  SmallSubgroupInfo sl25_3c, sl25_3d;   // order 120
  SmallSubgroupInfo q8q8_3c, q8q8_3d;   // order 192
  SmallSubgroupInfo sl29;               // order 720, both labels present
  SmallSubgroupInfo ext2_normalizer;    // order 1920
  bool ext2_is_minus_type = false;      // 20 elements of order 4 in the 2-group
};

Sp4SubgroupReport sp4_subgroup_report(unsigned seed);

// ---------------------------------------------------------------------------
// UT3(q) automorphisms

// Elements (x, y, z) over GF(q), q in {3, 9}, multiplying as the upper
// unitriangular matrices [[1,x,z],[0,1,y],[0,0,1]]; packed base-q.
struct UT3AutReport {
  int q = 0;
  int kernel_rank = 0;                  // 2 m^2 for q = 3^m
  bool kernel_maps_are_automorphisms = false;
  bool kernel_elementary_abelian = false;
  bool kernel_fixes_center_and_quotient = false;
  std::size_t image_order = 0;          // 48 at q = 3, 11520 at q = 9
  bool det1_iff_fixes_center = false;   // over the whole image
  bool gamma_is_involution = false;     // the lift of -Id
  bool gamma_inverts_kernel = false;
  int commuting_lift_samples = 0;
  bool commuting_lift_unique = false;   // exactly one lift commutes with gamma
};

UT3AutReport ut3_aut_suite(int q);

// The m11-case special subgroup Q of shape 3^{2+4} is isomorphic to UT3(9)
// via (a, b, z) -> (b, a, z), checked on all pairs.
bool check_ut39_isomorphic_m11_q();

} // namespace gt
