#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gt/pgroups.hpp"

using namespace gt;

namespace {

SmallGroup &group_for(PgCase c)
{
  static SmallGroup g12 = build_S(PgCase::m12);
  static SmallGroup ga6 = build_S(PgCase::a6);
  static SmallGroup g11 = build_S(PgCase::m11);
  static SmallGroup g11d = build_S(PgCase::m11dual);
  switch (c) {
  case PgCase::m12: return g12;
  case PgCase::a6: return ga6;
  case PgCase::m11: return g11;
  default: return g11d;
  }
}

SubgroupHandle whole_group(const SmallGroup &g)
{
  std::vector<SGElem> gens = module_units(g);
  if (g.kind == PgCase::m12) {
    gens.push_back(eta(0));
    gens.push_back(eta(3));
  } else {
    gens.push_back({0, dpar_index(f9(1))});
    gens.push_back({0, dpar_index(f9_i())});
  }
  return subgroup(g, gens);
}

const PgCase all_cases[] = {PgCase::m12, PgCase::a6, PgCase::m11, PgCase::m11dual};
const PgCase coord_cases[] = {PgCase::a6, PgCase::m11, PgCase::m11dual};

} // namespace

TEST_CASE("group axioms hold in all four semidirect products")
{
  for (PgCase c : all_cases)
    CHECK(check_group_axioms(group_for(c), 2000, 7u));
}

TEST_CASE("orders, centers, derived subgroups and self-centralizing modules")
{
  struct Row {
    PgCase c;
    int order, center, derived;
  };
  // [S,S] is A_* in the coordinate cases and A_* <eta_bar> in the matrix
  // case; the center is the fixed submodule Z.
  const Row rows[] = {{PgCase::m12, 19683, 3, 729},
                      {PgCase::a6, 729, 3, 27},
                      {PgCase::m11, 2187, 9, 81},
                      {PgCase::m11dual, 2187, 3, 27}};
  for (const Row &r : rows) {
    SmallGroup &g = group_for(r.c);
    SubgroupHandle s = whole_group(g);
    CHECK(static_cast<int>(s.size()) == g.size());
    CHECK(static_cast<int>(s.size()) == r.order);

    SubgroupHandle z = center_of(g, s);
    CHECK(static_cast<int>(z.size()) == r.center);
    for (int idx : z.members) {
      SGElem e = g.from_index(idx);
      CHECK(e.t == 0);
      CHECK(in_center_module(r.c, e.a));
    }

    SubgroupHandle d = derived_of(g, s);
    CHECK(static_cast<int>(d.size()) == r.derived);
    for (int idx : d.members) {
      SGElem e = g.from_index(idx);
      CHECK(in_a_star(r.c, e.a));
      if (r.c == PgCase::m12)
        CHECK((e.t == 0 || e.t == eta_bar().t || e.t == g.tmul[eta_bar().t][eta_bar().t]));
      else
        CHECK(e.t == 0);
    }

    // The module is its own centralizer, so it is the unique abelian
    // subgroup of its order.
    SubgroupHandle ca = centralizer_in_S(g, module_units(g));
    CHECK(static_cast<int>(ca.size()) == g.mod_size);
    for (int idx : ca.members)
      CHECK(g.from_index(idx).t == 0);
    CHECK(check_unique_abelian_certificate(g));
  }
}

TEST_CASE("commutator, centralizer and Jordan tables of the coordinate modules")
{
  for (PgCase c : coord_cases)
    CHECK(check_module_tables(group_for(c)));
}

TEST_CASE("conjugation formulas for the distinguished unitriangular actors")
{
  CHECK(check_ton_a_formulas(group_for(PgCase::m12), 20, 11u));
}

TEST_CASE("the family U_k, W_k, Q_k in the matrix case")
{
  SmallGroup &g = group_for(PgCase::m12);
  for (int k = 0; k <= 3; ++k) {
    UWQData d = build_UWQ(g, k);
    CHECK(d.U.size() == 9);
    CHECK(d.W.size() == 27);
    CHECK(d.Q.size() == 243);

    // W_k is a submodule: check the explicit coordinate shapes.
    for (int idx : d.W.members) {
      SGElem e = g.from_index(idx);
      CHECK(e.t == 0);
      SymMat3 m = SymMat3::from_index(e.a);
      CHECK(m.e[4] == 0);
      CHECK(m.e[5] == 0);
      if (k < 3)
        CHECK(m.e[3] == f3_neg(f3_mul(static_cast<F3>(k), m.e[2])));
      else
        CHECK(m.e[2] == 0);
    }

    StructureInfo st = structure(g, d.Q);
    if (k < 3) {
      // Q_k is extraspecial of order 3^5, exponent 3, with center Z.
      CHECK(st.extraspecial);
      CHECK(st.exponent == 3);
      CHECK(st.center == 3);
    } else {
      // Q_inf is elementary abelian of order 3^5.
      CHECK(st.abelian);
      CHECK(st.exponent == 3);
    }

    // Only Q_0 is normal in S; the other normalizers have index 3.
    if (k == 0)
      CHECK(d.NSQ.size() == 19683);
    else
      CHECK(d.NSQ.size() == 6561);
  }
}

TEST_CASE("exactly three abelian subgroups of order 3^5 meet A in W_inf")
{
  AbelianSearchResult r = count_abelian_3_5_not_in_A(group_for(PgCase::m12));
  CHECK(r.candidates == 729);
  CHECK(r.found == 3);
  CHECK(r.all_conjugate_to_q_inf);
}

TEST_CASE("classification of the extraspecial order-3^5 subgroups over W_k")
{
  ExtraspecialReport r = extraspecial_3_5_classification(group_for(PgCase::m12));
  CHECK(r.valid_candidates == std::array<int, 4>{729, 81, 81, 81});
  CHECK(r.extraspecial_count == std::array<int, 4>{81, 9, 9, 0});
  CHECK(r.all_centers_equal_Z);
  CHECK(r.none_over_infinity);
  CHECK(r.q_k_found_for_each_finite_k);
  CHECK(r.a23_member_valid_not_extraspecial);
}

TEST_CASE("A_* U_inf is special of order 3^7 with center of order 27")
{
  SmallGroup &g = group_for(PgCase::m12);
  std::vector<SGElem> gens = a_star_units(g);
  gens.push_back(eta_bar());
  gens.push_back(eta(3));
  SubgroupHandle qbar = subgroup(g, gens);
  StructureInfo st = structure(g, qbar);
  CHECK(st.order == 2187);
  CHECK(st.special);
  CHECK(st.center == 27);
  CHECK(st.exponent == 3);
}

TEST_CASE("the unique special subgroup Q = A_* T in the coordinate cases")
{
  struct Row {
    PgCase c;
    int candidates, order, center;
    bool extraspecial;
    std::size_t out;
  };
  // a6: 3^(1+4); m11: 3^(2+4); m11dual: 3^(1+4); the outer automorphism
  // group induced by S has order 3, 3 and 9 respectively.
  const Row rows[] = {{PgCase::a6, 9, 243, 3, true, 3},
                      {PgCase::m11, 9, 729, 9, false, 3},
                      {PgCase::m11dual, 81, 243, 3, true, 9}};
  for (const Row &r : rows) {
    SmallGroup &g = group_for(r.c);
    SpecialSearchResult sr = unique_special_Q(g);
    CHECK(sr.candidates == r.candidates);
    CHECK(sr.valid == r.candidates);
    CHECK(sr.hits == 1);
    CHECK(sr.equals_a_star_t);
    CHECK(sr.out_s_order == r.out);

    StructureInfo st = structure(g, sr.q);
    CHECK(static_cast<int>(st.order) == r.order);
    CHECK(static_cast<int>(st.center) == r.center);
    CHECK(st.special);
    CHECK(st.extraspecial == r.extraspecial);
    CHECK(st.exponent == 3);
  }
}

TEST_CASE("triple coordinates on A_* T agree with the group")
{
  for (PgCase c : coord_cases)
    CHECK(check_qtriple_tables(group_for(c)));
}

TEST_CASE("cube criterion (ax)^3 = x^3 iff [x,[x,a]] = 1")
{
  for (PgCase c : all_cases)
    CHECK(check_cube_criterion(group_for(c)));
}

TEST_CASE("the cube kernel of the coordinate modules is A_*")
{
  for (PgCase c : coord_cases)
    CHECK(check_cubes_vs_a_star(group_for(c)));
}

TEST_CASE("special-group lemmas on the m11-case Q and its subgroup")
{
  SmallGroup &g = group_for(PgCase::m11);
  SpecialSearchResult sr = unique_special_Q(g);
  REQUIRE(sr.hits == 1);

  SpecReport sp = spec_lemma_suite(g, sr.q);
  CHECK(sp.hypothesis);
  CHECK(sp.quotient_elem_abelian);
  CHECK(sp.power_map_homomorphism);
  CHECK(sp.rho_trivial);
  CHECK(sp.commutator_condition);
  // Exactly ten abelian subgroups of order 3^4, pairwise meeting in the
  // center: the totally isotropic planes of the commutator form.
  CHECK(sp.abelian_order_p4_count == 10);
  CHECK(sp.pairwise_meet_in_center);

  // The subgroup generated by Z, <<1,0,0>>, <<i,0,0>> and <<0,1,0>> has
  // |Q'/Z| = 27 and a unique abelian maximal subgroup.
  std::vector<SGElem> gens = {qtriple_elem(g, {f9(0), f9(0), f9(1)}),
                              qtriple_elem(g, {f9(0), f9(0), f9_i()}),
                              qtriple_elem(g, {f9(1), f9(0), f9(0)}),
                              qtriple_elem(g, {f9_i(), f9(0), f9(0)}),
                              qtriple_elem(g, {f9(0), f9(1), f9(0)})};
  SubgroupHandle qprime = subgroup(g, gens);
  CHECK(qprime.size() == 243);
  SpecReport spp = spec_lemma_suite(g, qprime);
  CHECK(spp.hypothesis);
  CHECK(spp.quotient_elem_abelian);
  CHECK(spp.power_map_homomorphism);
  CHECK(spp.rho_trivial);
  CHECK(spp.abelian_maximal_count == 1);
}

TEST_CASE("the a6-case Q has trivial cube map")
{
  SmallGroup &g = group_for(PgCase::a6);
  SpecialSearchResult sr = unique_special_Q(g);
  REQUIRE(sr.hits == 1);
  SpecReport sp = spec_lemma_suite(g, sr.q);
  CHECK(sp.hypothesis);
  CHECK(sp.rho_trivial);
  CHECK(sp.power_map_homomorphism);
}

TEST_CASE("module-fixing automorphisms of the a6-case group")
{
  AlphaReport r = alpha_automorphisms(group_for(PgCase::a6));
  CHECK(r.cocycle_condition);
  CHECK(r.automorphisms);
  CHECK(r.alpha1_is_inner);
  CHECK(r.matrices_expected);
  CHECK(r.unipotent_order_27);
  CHECK(r.commutator_form_standard);
  CHECK(r.c_beta_formula);
  CHECK(r.alpha23_commute_with_c_beta);
  CHECK(r.alpha1_does_not_commute);
}

TEST_CASE("census of normalizers and centralizers in the monomial group")
{
  M12Census c = m12_census(group_for(PgCase::m12));
  CHECK(c.c_gamma_z == 432);
  CHECK(c.n_gamma_z == 864);
  CHECK(c.n_gamma_a_star_is_N);
  CHECK(c.n_gamma_u0_equals_n_gamma_z);
  CHECK(c.n_gamma_z_splits_off_neg);
  CHECK(c.conj_kernel == 9);
  CHECK(c.conj_image == 48);
  CHECK(c.image_is_gl2_3);
  CHECK(c.o3_of_quotient_trivial);
  CHECK(c.complement_found);
  CHECK(c.invariant_subspaces_are_Z_W0);
  CHECK(c.u0_commutators_span_w0);
  CHECK(c.u0_trivial_on_quotient);
  CHECK(c.neg_id_is_minus_one_on_quotient);
  CHECK(c.quotient_action_irreducible);
  CHECK(c.q0_normal_in_model);
  CHECK(c.model_normalizer_over_q0 == 2592);
}
