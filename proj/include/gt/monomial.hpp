// Signed permutations of the 12 coordinates, the groups N0 and N, the
// matrix identification Theta of N0 with the block-upper subgroup of
// GL3(3), and the stabilizer search that completes N to the full monomial
// automorphism group of the Golay code (the double cover of M12).

#pragma once

#include "gt/golay.hpp"

#include <array>
#include <cstdint>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace gt {

struct MonMap {
  std::array<std::uint8_t, 12> perm{}; // e_d -> sign(d) * e_perm(d)
  std::array<std::uint8_t, 12> sign{}; // 0 -> +1, 1 -> -1

  friend bool operator==(const MonMap &, const MonMap &) = default;

  static MonMap identity()
  {
    MonMap m;
    for (int d = 0; d < 12; ++d)
      m.perm[d] = static_cast<std::uint8_t>(d);
    return m;
  }

  static MonMap neg_identity()
  {
    MonMap m = identity();
    m.sign.fill(1);
    return m;
  }

  DeltaVec apply(const DeltaVec &v) const
  {
    DeltaVec r{};
    for (int d = 0; d < 12; ++d) {
      F3 c = v[d];
      r[perm[d]] = sign[d] ? f3_neg(c) : c;
    }
    return r;
  }

  // Composition: (this after h)(x) = this(h(x)).
  MonMap after(const MonMap &h) const
  {
    MonMap r;
    for (int d = 0; d < 12; ++d) {
      r.perm[d] = perm[h.perm[d]];
      r.sign[d] = static_cast<std::uint8_t>(h.sign[d] ^ sign[h.perm[d]]);
    }
    return r;
  }

  MonMap inverse() const
  {
    MonMap r;
    for (int d = 0; d < 12; ++d) {
      r.perm[perm[d]] = static_cast<std::uint8_t>(d);
      r.sign[perm[d]] = sign[d];
    }
    return r;
  }

  // 60-bit canonical key: five bits per source position.
  std::uint64_t key() const
  {
    std::uint64_t k = 0;
    for (int d = 11; d >= 0; --d)
      k = (k << 5) | static_cast<std::uint64_t>(perm[d] | (sign[d] << 4));
    return k;
  }

  static MonMap from_key(std::uint64_t k)
  {
    MonMap m;
    for (int d = 0; d < 12; ++d) {
      m.perm[d] = static_cast<std::uint8_t>(k & 0xF);
      m.sign[d] = static_cast<std::uint8_t>((k >> 4) & 1);
      k >>= 5;
    }
    return m;
  }

  bool is_column_permutation() const
  {
    // True if the map permutes the columns F3 x {i} among themselves.
    for (int i = 0; i < 4; ++i) {
      int col = perm[3 * i] / 3;
      if (perm[3 * i + 1] / 3 != col || perm[3 * i + 2] / 3 != col)
        return false;
    }
    return true;
  }
};

inline std::uint64_t mon_mul_key(std::uint64_t a, std::uint64_t b)
{
  return MonMap::from_key(a).after(MonMap::from_key(b)).key();
}

// Monomial maps on F3^{1..4}: e_i -> eps_i * e_{sigma(i)}.
struct ColMonomial {
  std::array<std::uint8_t, 4> sigma{}; // 0-based column targets
  std::array<F3, 4> eps{};             // scalars in {1,2}

  friend bool operator==(const ColMonomial &, const ColMonomial &) = default;

  TetraWord apply_word(const TetraWord &w) const
  {
    TetraWord r{};
    for (int i = 0; i < 4; ++i)
      r[sigma[i]] = f3_mul(eps[i], w[i]);
    return r;
  }

  bool preserves_tetracode() const
  {
    for (const TetraWord &w : tetracode())
      if (!tetra_is_member(apply_word(w)))
        return false;
    return true;
  }
};

// All 48 monomial maps preserving the tetracode.
const std::vector<ColMonomial> &tetra_automorphisms();

// Translation by a tetracode word: e_(c,i) -> e_(c + eta(i), i).
MonMap trs(const TetraWord &eta);

// Column map with sign twists: e_(c,i) -> e_(eps_i * c, sigma(i)).
// Rejects maps that do not preserve the tetracode.
MonMap tau(const ColMonomial &alpha);

// The tetracode automorphism acting on words as multiplication by u (via
// kappa), and the one acting as the Frobenius.
ColMonomial scalar_aut(F9 u);
ColMonomial frobenius_aut();

// ---------------------------------------------------------------------------
// Closure engine

struct GroupClosure {
  std::vector<MonMap> gens;
  std::vector<std::uint64_t> elems; // sorted ascending
  std::unordered_set<std::uint64_t> lookup;

  std::size_t size() const { return elems.size(); }
  bool contains(std::uint64_t k) const { return lookup.count(k) != 0; }
  bool contains(const MonMap &m) const { return contains(m.key()); }
};

// Breadth-first closure with sorted frontiers; aborts above the cap.
GroupClosure group_closure(std::vector<MonMap> gens, std::size_t cap = std::size_t{1} << 21);

// Sorted element-key set of a subgroup inside some ambient closure.
struct KeySet {
  std::vector<std::uint64_t> elems; // sorted
  std::unordered_set<std::uint64_t> lookup;

  static KeySet from(std::vector<std::uint64_t> v);
  std::size_t size() const { return elems.size(); }
  bool contains(std::uint64_t k) const { return lookup.count(k) != 0; }
};

// Greedy generating set: scan the elements in key order and keep those that
// enlarge the closure.
std::vector<MonMap> find_generators(const std::vector<std::uint64_t> &elems);

// ---------------------------------------------------------------------------
// Theta

struct ThetaIso {
  std::unordered_map<std::uint64_t, std::uint32_t> fwd; // monomial key -> matrix key
  std::unordered_map<std::uint32_t, std::uint64_t> rev;

  static std::uint32_t mat_key(const MatF3 &m);
  static MatF3 mat_from_key(std::uint32_t k);

  MatF3 matrix_of(const MonMap &m) const;
  MonMap preimage_of(const MatF3 &m) const;
  bool defined_on(const MonMap &m) const { return fwd.count(m.key()) != 0; }
};

// ---------------------------------------------------------------------------
// The assembled construction

struct Mat12 {
  GolayCode code;
  PhiIso phi;
  GroupClosure N0;   // order 432
  GroupClosure N;    // order 864
  GroupClosure G;    // full stabilizer of the code, order 190080
  ThetaIso theta;    // defined on N0
  MonMap extra;      // element of G outside N found by the stabilizer search

  // Matrix of g acting on the code, in reduced-basis coordinates.
  MatF3 code_matrix(const MonMap &g) const;

  // Matrix of g acting on Sym_3(F3) transported through Phi.
  MatF3 sym_matrix(const MonMap &g) const;
};

const Mat12 &mat12_data();

// Backtrack search for an element of the code stabilizer outside N.
// Exposed separately for testing; requires the code and the subgroup N.
MonMap stabilizer_search_extra(const GolayCode &code, const GroupClosure &N);

// ---------------------------------------------------------------------------
// Queries used by the verification suites

// Orbit lengths of the group generated by gens on the 364 projective points
// of the code, sorted ascending.
std::vector<int> orbit_lengths_on_projective(const Mat12 &m, const std::vector<MonMap> &gens);

// Conjugacy classes of order-3 elements: list of (class size, Jordan
// partition of the action on the code).
struct Order3Class {
  std::uint64_t rep;
  std::size_t size;
  std::vector<int> jordan;
};
std::vector<Order3Class> order3_class_data(const Mat12 &m);

// Largest dimension of the fixed space on the code over all order-3 elements.
int max_order3_fixed_rank(const Mat12 &m);

// Coset action of the group generated by gens (which must contain H) on the
// cosets of H; returns generator images as permutations of the cosets.
struct CosetAction {
  int degree = 0;
  std::vector<std::vector<int>> gen_images;
};
CosetAction coset_action(const std::vector<MonMap> &gens, const KeySet &subgroup,
                         std::size_t expected_index);

bool is_transitive(const CosetAction &act);

// Primitivity of a transitive action: no nontrivial block system.
bool is_primitive(const CosetAction &act);

// Normalizer and centralizer of a subgroup / element set, by full scan.
KeySet normalizer_scan(const GroupClosure &G, const std::vector<MonMap> &subgroup_gens,
                       const KeySet &subgroup);
KeySet centralizer_scan(const GroupClosure &G, const std::vector<MonMap> &of);

// Closure of a generating set inside a known ambient group, as a KeySet.
KeySet subgroup_closure(const std::vector<MonMap> &gens);

// Normal closure of the subgroup generated by "sub" under conjugation by
// group generators "group_gens".
KeySet normal_closure(const std::vector<MonMap> &group_gens, const std::vector<MonMap> &sub);

} // namespace gt
