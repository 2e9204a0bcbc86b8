#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gt/sp4ut3.hpp"

using namespace gt;

TEST_CASE("orders of Sp4(3) and its extension by the form-negating coset")
{
  const Sp4Data &d = sp4_data();
  CHECK(d.sp.size() == 51840);
  CHECK(d.sp_star.size() == 103680);
  for (std::size_t i = 0; i < d.sp.size(); i += 509)
    CHECK(sp_sign(sp_unkey(d.sp.elems[i])) == 1);

  // the extension is closed: products of coset representatives land inside
  for (std::size_t i = 0; i < d.sp_star.size(); i += 1013)
    for (std::size_t j = 0; j < d.sp_star.size(); j += 997) {
      MatF3 p = mat_mul(sp_unkey(d.sp_star.elems[i]), sp_unkey(d.sp_star.elems[j]));
      CHECK(d.sp_star.contains(p));
    }
}

TEST_CASE("four conjugacy classes of order-3 elements with stable labels")
{
  Sp4ClassReport r = sp4_class_report(12345u);
  CHECK(r.order3_count == 800);
  CHECK(r.class_count == 4);
  CHECK(r.label_sizes == std::array<std::size_t, 4>{40, 40, 240, 480});
  CHECK(r.labels_constant_on_classes);
  CHECK(r.inversion_swaps_ab_fixes_cd);
  CHECK(r.conjugation_invariant);
  CHECK(r.sign_invariant_well_defined_on_sample);
}

TEST_CASE("subgroup orbits of the unitriangular order-3 subgroups")
{
  Sp4OrbitReport r = sp4_orbit_report();
  CHECK(r.orbit_det1 == 120);
  CHECK(r.orbit_detm1 == 240);
  CHECK(r.orbit_det0 == 40);
  CHECK(r.lagrangians == 40);
  CHECK(r.fixed_spaces_are_lagrangian);
  CHECK(r.each_lagrangian_3_det1);
  CHECK(r.each_lagrangian_6_detm1);
}

TEST_CASE("exact lift of the extended group to the extraspecial 3^{1+4}")
{
  LiftReport r = sp4_lift_report(777u);
  CHECK(r.group_valid);
  CHECK(r.lifts_multiplicative);
  CHECK(r.compose_exactly);
  CHECK(r.identity_lift_trivial);
  CHECK(r.neg_identity_inverts_quotient_fixes_center);
  CHECK(r.center_action_is_sign);
  CHECK(r.quotient_action_is_g);
}

TEST_CASE("small subgroups generated by 3-elements, by order and class label")
{
  Sp4SubgroupReport r = sp4_subgroup_report(99u);

  auto check_pure = [](const SmallSubgroupInfo &i, std::size_t order, std::size_t n3,
                       bool pure_c) {
    CHECK(i.order == order);
    CHECK(i.o3_trivial);
    CHECK(i.generated_by_3_elements);
    CHECK(i.n_other == 0);
    CHECK((pure_c ? i.n_3c : i.n_3d) == n3);
    CHECK((pure_c ? i.n_3d : i.n_3c) == 0);
  };
  check_pure(r.sl23_3c, 24, 8, true);
  check_pure(r.sl23_3d, 24, 8, false);
  check_pure(r.sl25_3c, 120, 20, true);
  check_pure(r.sl25_3d, 120, 20, false);
  check_pure(r.q8q8_3c, 192, 32, true);
  check_pure(r.q8q8_3d, 192, 32, false);

  CHECK(r.sl29.order == 720);
  CHECK(r.sl29.o3_trivial);
  CHECK(r.sl29.generated_by_3_elements);
  CHECK(r.sl29.n_3c == 40);
  CHECK(r.sl29.n_3d == 40);
  CHECK(r.sl29.n_other == 0);

  CHECK(r.ext2_is_minus_type);
  check_pure(r.ext2_normalizer, 1920, 80, true);
}

TEST_CASE("automorphisms of UT3(3): kernel of rank 2, image of order 48")
{
  UT3AutReport r = ut3_aut_suite(3);
  CHECK(r.kernel_rank == 2);
  CHECK(r.kernel_maps_are_automorphisms);
  CHECK(r.kernel_elementary_abelian);
  CHECK(r.kernel_fixes_center_and_quotient);
  CHECK(r.image_order == 48);
  CHECK(r.det1_iff_fixes_center);
  CHECK(r.gamma_is_involution);
  CHECK(r.gamma_inverts_kernel);
  CHECK(r.commuting_lift_samples == 48);
  CHECK(r.commuting_lift_unique);
}

TEST_CASE("automorphisms of UT3(9): kernel of rank 8, image of order 11520")
{
  UT3AutReport r = ut3_aut_suite(9);
  CHECK(r.kernel_rank == 8);
  CHECK(r.kernel_maps_are_automorphisms);
  CHECK(r.kernel_elementary_abelian);
  CHECK(r.kernel_fixes_center_and_quotient);
  CHECK(r.image_order == 11520);
  CHECK(r.det1_iff_fixes_center);
  CHECK(r.gamma_is_involution);
  CHECK(r.gamma_inverts_kernel);
  CHECK(r.commuting_lift_samples >= 100);
  CHECK(r.commuting_lift_unique);
}

TEST_CASE("the m11-case special group is UT3(9) in triple coordinates")
{
  CHECK(check_ut39_isomorphic_m11_q());
}
