#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gt/strongemb.hpp"

using namespace gt;

namespace {

SmallGroup &m12_group()
{
  static SmallGroup g = build_S(PgCase::m12);
  return g;
}

ChainDatum q0_chain_datum(SmallGroup &g)
{
  static UWQData u = build_UWQ(g, 0);
  std::vector<int> zmem;
  for (int a = 0; a < g.mod_size; ++a)
    if (in_center_module(PgCase::m12, a))
      zmem.push_back(g.index({a, 0}));
  ChainDatum d;
  d.s = &g;
  d.p_sub = u.Q;
  d.chain = {subgroup_from_members(g, zmem), u.W, u.Q};
  return d;
}

} // namespace

TEST_CASE("Sylow 3-systems by normalizer climb")
{
  SylowSystem e9 = sylow_p(view_e9());
  CHECK(e9.sylows.size() == 1);
  CHECK(e9.sylow_order == 9);
  CHECK(e9.covers_p_elements);

  SylowSystem sl = sylow_p(view_sl29());
  CHECK(sl.sylows.size() == 10);
  CHECK(sl.sylow_order == 9);
  CHECK(sl.covers_p_elements);
}

TEST_CASE("isolation graph verdicts, invariance and witnesses")
{
  ReductionReport r = reduction_lemma_tests();
  CHECK(r.e9_sylows == 1);
  CHECK(r.sl29_sylows == 10);
  CHECK(r.m011_sylows == 55);
  CHECK(r.all_systems_cover);

  CHECK(r.sl29_true);
  CHECK(r.psl29_true);
  CHECK(r.m011_true);
  CHECK(r.twoM11_true);
  CHECK(r.m010_true);
  CHECK(r.twoM10_true);
  CHECK(r.a6xc2_true);
  CHECK(r.sp43_false);
  CHECK(r.psl29_sq_false);

  CHECK(r.pair_m11_agree);
  CHECK(r.pair_m10_agree);
  CHECK(r.quotient_agrees);

  CHECK(r.witnesses_direct);
  CHECK(r.monotone_or_maximal);
}

TEST_CASE("p-power order of chain-compatible automorphisms")
{
  SmallGroup &g = m12_group();
  ChainDatum d = q0_chain_datum(g);

  // exactly one third of the group satisfies the commutator chain condition
  std::vector<int> stab = chain_stabilizing_elements(d);
  CHECK(stab.size() == 6561);

  CHECK(p_power_order_check(d, [](int m) { return m; }));

  // conjugation by a chain stabilizer that moves Q has 3-power order
  int moved = -1;
  for (int xi : stab) {
    SGElem x = g.from_index(xi);
    for (int m : d.p_sub.members)
      if (!(g.conj(x, g.from_index(m)) == g.from_index(m))) {
        moved = xi;
        break;
      }
    if (moved >= 0)
      break;
  }
  REQUIRE(moved >= 0);
  SGElem x = g.from_index(moved);
  CHECK(p_power_order_check(d, [&](int m) { return g.index(g.conj(x, g.from_index(m))); }));

  // conjugation violating the chain hypothesis is rejected
  int bad = -1;
  std::unordered_set<int> stabset(stab.begin(), stab.end());
  for (int xi = 0; xi < g.size() && bad < 0; ++xi) {
    if (stabset.count(xi))
      continue;
    SGElem y = g.from_index(xi);
    bool maps = true;
    for (const SGElem &pg : d.p_sub.gens)
      if (!d.p_sub.contains(g.index(g.conj(y, pg))))
        maps = false;
    if (maps)
      bad = xi;
  }
  REQUIRE(bad >= 0);
  SGElem y = g.from_index(bad);
  CHECK_THROWS_AS(
      p_power_order_check(d, [&](int m) { return g.index(g.conj(y, g.from_index(m))); }),
      std::invalid_argument);
}

TEST_CASE("obstruction certificates on the matrix-case chains")
{
  SmallGroup &g = m12_group();
  ChainDatum d = q0_chain_datum(g);

  // a chain stabilizer outside Q is a witness for the character chain
  std::vector<int> stab = chain_stabilizing_elements(d);
  int outside = -1;
  for (int xi : stab)
    if (!d.p_sub.contains(xi)) {
      outside = xi;
      break;
    }
  REQUIRE(outside >= 0);
  d.witness = outside;
  CHECK(essential_obstruction(d, ObstructionKind::QcharP));

  // a witness inside P is refused
  ChainDatum inner = d;
  inner.witness = d.p_sub.members.front();
  CHECK_FALSE(essential_obstruction(inner, ObstructionKind::QcharP));

  // both quotients of the chain have rank 2: enough for filtered_a only
  d.witness = -1;
  CHECK(essential_obstruction(d, ObstructionKind::filtered_a));
  CHECK_FALSE(essential_obstruction(d, ObstructionKind::filtered_b));

  // rank-5 instance: the elementary abelian Q_inf over the trivial group
  UWQData ui = build_UWQ(g, 3);
  ChainDatum fb;
  fb.s = &g;
  fb.p_sub = ui.Q;
  fb.chain = {subgroup(g, {}), ui.Q};
  CHECK(essential_obstruction(fb, ObstructionKind::filtered_b));

  // rank-4 instance with normalizer quotient of order 9: the special group
  // A_* U_inf over its center
  std::vector<SGElem> qb = a_star_units(g);
  qb.push_back(eta_bar());
  qb.push_back(eta(3));
  SubgroupHandle qbar = subgroup(g, qb);
  ChainDatum fb2;
  fb2.s = &g;
  fb2.p_sub = qbar;
  fb2.chain = {center_of(g, qbar), qbar};
  CHECK(essential_obstruction(fb2, ObstructionKind::filtered_b));
  SubgroupHandle nq = normalizer_in_S(g, qbar);
  CHECK(nq.size() == static_cast<std::size_t>(g.size()));
  CHECK(nq.size() / qbar.size() == 9);
}

TEST_CASE("the centralizer-of-eta0 instance of the filtered_c certificate")
{
  FilteredCInstance fc = filtered_c_m12_instance(m12_group());
  CHECK(fc.p_order == 81);
  CHECK(fc.outer_order == 9);
  CHECK(fc.fixed_index == 3);
  CHECK(fc.obstructed);
}

TEST_CASE("Jordan types in GL4(3) and the GL3(3) spot-check")
{
  GL4JordanReport r = gl4_jordan_suite(2024u);
  CHECK(r.sl29_order == 720);
  CHECK(r.sl29_order3_all_22);
  CHECK(r.ominus_order == 1440);
  CHECK(r.core_order == 360);
  CHECK(r.ominus_order3_all_31);
  CHECK(r.minus_form_anisotropic_plane);
  CHECK(r.omega3_block3);
  CHECK(r.gl3_trials == 200);
  CHECK(r.gl3_full_sl3 > 0);
  CHECK(r.gl3_spotcheck_ok);
}
