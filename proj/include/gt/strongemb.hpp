// Strongly p-embedded subgroups at desk scale: Sylow enumeration by
// normalizer climb, the p-isolation criterion on the Sylow intersection
// graph, invariance of the answer under index-prime-to-p extensions and
// p'-quotients, the p-power-order lemma for chain-compatible automorphisms,
// the obstruction certificates for essential subgroups, and the Jordan-type
// computations for SL2(9) and the minus-type orthogonal group inside GL4(3).

#pragma once

#include "gt/sp4ut3.hpp"

#include <cstdint>
#include <functional>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace gt {

// ---------------------------------------------------------------------------
// Group views

// A finite group given by its sorted element keys, a generating subset and
// a multiplication callback; everything else is derived.
struct FiniteGroupView {
  int p = 3;
  std::uint64_t id = 0;
  std::vector<std::uint64_t> elems; // sorted
  std::vector<std::uint64_t> gens;
  std::function<std::uint64_t(std::uint64_t, std::uint64_t)> mul;
  std::unordered_set<std::uint64_t> lookup;

  std::size_t size() const { return elems.size(); }
  bool contains(std::uint64_t k) const { return lookup.count(k) != 0; }
  std::uint64_t inv(std::uint64_t k) const;
  int order(std::uint64_t k) const;
};

FiniteGroupView make_view(int p, std::uint64_t id, std::vector<std::uint64_t> elems,
                          std::vector<std::uint64_t> gens,
                          std::function<std::uint64_t(std::uint64_t, std::uint64_t)> mul);

// Test-bed groups.
FiniteGroupView view_e9();
FiniteGroupView view_sl29();      // 720 matrices in GL4(3)
FiniteGroupView view_psl29();     // 360, also the A6 model
FiniteGroupView view_a6xc2();     // 720
FiniteGroupView view_psl29_sq();  // 129600
FiniteGroupView view_sp43();      // 51840
// Monomial-map groups by key set (2M11, M0_11, 2M10, M0_10).
FiniteGroupView view_monomial(const std::vector<std::uint64_t> &elems,
                              const std::vector<std::uint64_t> &gens);

// ---------------------------------------------------------------------------
// Sylow systems and the isolation criterion

struct SylowSystem {
  std::size_t sylow_order = 0;
  std::vector<std::vector<std::uint64_t>> sylows; // each sorted
  bool covers_p_elements = false;
};

// One Sylow p-subgroup by normalizer climb, then the full conjugation
// orbit; asserts the count is 1 mod p.
SylowSystem sylow_p(const FiniteGroupView &g);

struct IsolationResult {
  bool strongly_embedded = false;
  std::size_t sylow_count = 0;
  std::size_t components = 0;
  std::vector<std::uint64_t> witness; // stabilizer of one component, if any
};

// Graph on the Sylows with edges at intersections of order divisible by p;
// strongly embedded iff disconnected with more than one Sylow.  Throws if
// p does not divide |G|.
IsolationResult has_strongly_p_embedded(const FiniteGroupView &g);

// Direct definition: H proper, p divides |H|, and no p-element of H lies
// in any conjugate H^g with g outside H.
bool strongly_embedded_direct(const FiniteGroupView &g, const std::vector<std::uint64_t> &h);

struct ReductionReport {
  // Sylow counts
  std::size_t e9_sylows = 0;       // 1
  std::size_t sl29_sylows = 0;     // 10
  std::size_t m011_sylows = 0;     // 55
  bool all_systems_cover = false;

  // positive and negative isolation verdicts
  bool sl29_true = false;
  bool psl29_true = false;
  bool m011_true = false;
  bool twoM11_true = false;
  bool m010_true = false;
  bool twoM10_true = false;
  bool a6xc2_true = false;
  bool sp43_false = false;
  bool psl29_sq_false = false;

  // invariance under index prime to p, and under the p'-quotient
  bool pair_m11_agree = false;  // M0_11 normal in 2M11, index 2
  bool pair_m10_agree = false;  // M0_10 normal in 2M10, index 8
  bool quotient_agrees = false; // (A6 x C2) / C2 against A6

  // the witnesses satisfy the direct definition, and every proper
  // overgroup of a witness is again a witness (or the witness is maximal)
  bool witnesses_direct = false;
  bool monotone_or_maximal = false;
};

ReductionReport reduction_lemma_tests();

// ---------------------------------------------------------------------------
// Chain data in the semidirect-product engine

struct ChainDatum {
  const SmallGroup *s = nullptr;
  SubgroupHandle p_sub;               // P
  std::vector<SubgroupHandle> chain;  // P_0 <= ... <= P_m = P
  int witness = -1;                   // element index in S, or -1
};

// All x in S with alpha_x(P) = P and [x, P_i] <= P_{i-1} for every i >= 1.
std::vector<int> chain_stabilizing_elements(const ChainDatum &d);

// Verifies that alpha is a bijective homomorphism of P compatible with the
// chain (and that P_0 lies in the Frattini subgroup), then decides whether
// its order is a power of p.  Throws on a hypothesis violation.
bool p_power_order_check(const ChainDatum &d, const std::function<int(int)> &alpha);

enum class ObstructionKind { QcharP, filtered_a, filtered_b, filtered_c };

// Certifies the hypotheses of the corresponding obstruction lemma on the
// concrete datum; returns true when they all hold.  For QcharP the witness
// element is required; for the filtered kinds the chain quotients must be
// elementary abelian of rank >= 2 (a) or >= 4 (b); for filtered_c the
// conjugation action of the module normalizer N_A(P) must induce at least
// p^2 outer automorphisms while centralizing a subgroup of index p.
bool essential_obstruction(const ChainDatum &d, ObstructionKind kind);

struct FilteredCInstance {
  ChainDatum datum;           // P = C_A(eta_0) <eta_0> in the matrix case
  std::size_t p_order = 0;    // 81
  std::size_t outer_order = 0; // 9
  std::size_t fixed_index = 0; // 3
  bool obstructed = false;
};

// The concrete matrix-case instance for the filtered_c certificate.
FilteredCInstance filtered_c_m12_instance(const SmallGroup &g);

// ---------------------------------------------------------------------------
// Jordan types in GL4(3)

struct GL4JordanReport {
  std::size_t sl29_order = 0;        // 720
  bool sl29_order3_all_22 = false;   // Jordan type {2,2}

  std::size_t ominus_order = 0;      // 1440: full orthogonal group, minus type
  std::size_t core_order = 0;        // 360: subgroup generated by 3-elements
  bool ominus_order3_all_31 = false; // Jordan type {3,1}
  bool minus_form_anisotropic_plane = false; // x3^2 + x4^2 = 0 only at 0

  bool omega3_block3 = false;        // an order-3 isometry in dim 3 is a full block

  int gl3_trials = 0;
  int gl3_full_sl3 = 0;              // closures equal to SL3(3)
  bool gl3_spotcheck_ok = false;     // irreducible with 9 | order forces SL3(3)
};

GL4JordanReport gl4_jordan_suite(unsigned seed);

} // namespace gt
