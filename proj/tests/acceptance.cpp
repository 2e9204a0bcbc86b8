// End-to-end acceptance run: fifteen numbered checks covering the full
// construction, each with a wall-clock budget.  Prints one line per check
// and exits nonzero if any check fails or overruns its budget.

#include "gt/strongemb.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <vector>

using namespace gt;

namespace {

SmallGroup &small_group(PgCase c)
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

bool check01_code()
{
  GolayCode code = build_golay();
  MatF3 m(6, 12);
  for (int r = 0; r < 6; ++r)
    for (int k = 0; k < 12; ++k)
      m.at(r, k) = code.basis[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)];
  bool ok = mat_rank(m) == 6 && golay_bar_dimension() == 7;

  for (const DeltaVec &x : code.basis)
    for (const DeltaVec &y : code.basis)
      ok = ok && delta_dot(x, y) == 0;

  auto w = golay_weight_enumerator(code);
  ok = ok && w[0] == 1 && w[6] == 264 && w[9] == 440 && w[12] == 24;
  for (int k : {1, 2, 3, 4, 5, 7, 8, 10, 11})
    ok = ok && w[static_cast<std::size_t>(k)] == 0;

  int pairs = 0;
  std::set<std::string> seen;
  for (const DeltaVec &v : code.codewords) {
    if (delta_weight(v) != 12)
      continue;
    if (seen.count(delta_to_string(delta_neg(v))))
      ++pairs;
    else
      seen.insert(delta_to_string(v));
  }
  return ok && pairs == 12;
}

bool check02_graph_relation() { return check_graph_relation(); }

bool check03_phi_theta()
{
  const Mat12 &d = mat12_data();

  std::array<bool, 729> hit{};
  bool ok = true;
  for (const DeltaVec &w : d.code.codewords) {
    SymMat3 s = d.phi.apply(w);
    auto idx = static_cast<std::size_t>(s.index());
    ok = ok && !hit[idx] && d.phi.invert(s) == w;
    hit[idx] = true;
  }
  for (unsigned mask = 0; mask < 16; ++mask)
    ok = ok && phi_well_defined(d.code, mask);

  ok = ok && d.theta.fwd.size() == 432;
  for (std::uint64_t k : d.N0.elems) {
    MonMap beta = MonMap::from_key(k);
    MatF3 t = d.theta.matrix_of(beta);
    MatF3 tt = mat_transpose(t);
    for (const DeltaVec &w : d.code.codewords)
      ok = ok && d.phi.apply(beta.apply(w)).to_mat() ==
                     mat_mul(mat_mul(t, d.phi.apply(w).to_mat()), tt);
  }
  return ok;
}

bool check04_stabilizer()
{
  const Mat12 &d = mat12_data();
  bool ok = d.G.size() == 190080 && d.N.size() == 864;

  std::vector<MonMap> t_gens = {trs(tetra_kappa_inv(f9(1))), trs(tetra_kappa_inv(f9_i()))};
  KeySet t = subgroup_closure(t_gens);
  KeySet nrm = normalizer_scan(d.G, t_gens, t);
  ok = ok && t.size() == 9 && nrm.size() == 864;
  for (std::uint64_t k : nrm.elems)
    ok = ok && d.N.contains(k);

  CosetAction act = coset_action(d.G.gens, KeySet::from(d.N.elems), 220);
  return ok && act.degree == 220 && is_transitive(act) && is_primitive(act);
}

bool check05_order3_classes()
{
  const Mat12 &d = mat12_data();
  auto classes = order3_class_data(d);
  if (classes.size() != 2)
    return false;
  std::vector<std::vector<int>> js = {classes[0].jordan, classes[1].jordan};
  std::sort(js.begin(), js.end());
  return js[0] == std::vector<int>{3, 2, 1} && js[1] == std::vector<int>{3, 3} &&
         max_order3_fixed_rank(d) == 3;
}

bool check06_projective_orbits()
{
  const Mat12 &d = mat12_data();
  return orbit_lengths_on_projective(d, d.G.gens) == std::vector<int>{12, 132, 220};
}

bool check07_stabilizer_family()
{
  const MathieuData &m = mathieu_data();
  bool ok = m.twoM11.size() == 15840 && m.twoM10.size() == 2880 && m.M0_11.size() == 7920 &&
            m.M0_10.size() == 360;
  ok = ok && quotient_is_c2(m.twoM11_gens, m.twoM11, m.M0_11);
  ok = ok && quotient_is_d8(m.twoM10_gens, m.twoM10, m.M0_10);

  // The cores are exactly the elements fixing the spanning weight-12
  // vectors pointwise.
  for (std::uint64_t k : m.twoM11.elems) {
    bool fix = MonMap::from_key(k).apply(m.star[0]) == m.star[0];
    ok = ok && fix == m.M0_11.contains(k);
  }
  for (std::uint64_t k : m.twoM10.elems) {
    MonMap g = MonMap::from_key(k);
    bool fix = g.apply(m.star[1]) == m.star[1] && g.apply(m.star[2]) == m.star[2];
    ok = ok && fix == m.M0_10.contains(k);
  }
  return ok && check_acttheta();
}

bool check08_todd_modules()
{
  const MathieuData &m = mathieu_data();
  int zero10 = 0, zero11 = 0;
  std::set<int> im10, im11;
  for (int idx = 0; idx < 729; ++idx) {
    SymMat3 s = SymMat3::from_index(idx);
    Todd10 t10 = kappa10(s);
    Todd11 t11 = kappa11(s);
    zero10 += (t10 == Todd10{});
    zero11 += (t11 == Todd11{});
    im10.insert(t10.a * 27 + f9_index(t10.b) * 3 + t10.c);
    im11.insert(t11.a * 81 + f9_index(t11.b) * 9 + f9_index(t11.c));
  }
  bool ok = zero10 == 9 && zero11 == 3 && im10.size() == 81 && im11.size() == 243;
  ok = ok && kappa11(m.theta[0]) == Todd11{} && kappa10(m.theta[1]) == Todd10{} &&
       kappa10(m.theta[2]) == Todd10{};
  return ok && check_todd10_equivariance() && check_todd11_equivariance() && check_todd_pairing();
}

bool check09_pgroup_suite()
{
  struct Row {
    PgCase c;
    std::size_t order, center, derived;
  };
  const Row rows[] = {{PgCase::m12, 19683, 3, 729},
                      {PgCase::a6, 729, 3, 27},
                      {PgCase::m11, 2187, 9, 81},
                      {PgCase::m11dual, 2187, 3, 27}};
  bool ok = true;
  for (const Row &r : rows) {
    SmallGroup &g = small_group(r.c);
    ok = ok && check_group_axioms(g, 2000, 7u);
    SubgroupHandle s = whole_group(g);
    ok = ok && s.size() == r.order && center_of(g, s).size() == r.center &&
         derived_of(g, s).size() == r.derived;
    ok = ok && check_unique_abelian_certificate(g);
    ok = ok && check_cube_criterion(g);
  }
  for (PgCase c : {PgCase::a6, PgCase::m11, PgCase::m11dual})
    ok = ok && check_module_tables(small_group(c)) && check_cubes_vs_a_star(small_group(c));
  return ok;
}

bool check10_unique_special_q()
{
  struct Row {
    PgCase c;
    std::size_t order, center, out;
    bool extraspecial;
  };
  const Row rows[] = {{PgCase::a6, 243, 3, 3, true},
                      {PgCase::m11, 729, 9, 3, false},
                      {PgCase::m11dual, 243, 3, 9, true}};
  bool ok = true;
  for (const Row &r : rows) {
    SmallGroup &g = small_group(r.c);
    SpecialSearchResult sr = unique_special_Q(g);
    StructureInfo st = structure(g, sr.q);
    ok = ok && sr.hits == 1 && sr.equals_a_star_t && sr.out_s_order == r.out;
    ok = ok && st.order == r.order && st.center == r.center && st.special &&
         st.extraspecial == r.extraspecial && st.exponent == 3;
    ok = ok && check_qtriple_tables(g);
  }
  return ok;
}

bool check11_m12_census()
{
  SmallGroup &g = small_group(PgCase::m12);

  AbelianSearchResult ab = count_abelian_3_5_not_in_A(g);
  bool ok = ab.candidates == 729 && ab.found == 3 && ab.all_conjugate_to_q_inf;

  ExtraspecialReport ex = extraspecial_3_5_classification(g);
  ok = ok && ex.valid_candidates == std::array<int, 4>{729, 81, 81, 81};
  ok = ok && ex.extraspecial_count == std::array<int, 4>{81, 9, 9, 0};
  ok = ok && ex.all_centers_equal_Z && ex.none_over_infinity && ex.q_k_found_for_each_finite_k;

  M12Census c = m12_census(g);
  ok = ok && c.c_gamma_z == 432 && c.n_gamma_z == 864 && c.n_gamma_z_splits_off_neg;
  ok = ok && c.conj_kernel == 9 && c.conj_image == 48 && c.image_is_gl2_3 && c.complement_found;
  ok = ok && c.invariant_subspaces_are_Z_W0;
  ok = ok && c.q0_normal_in_model && c.model_normalizer_over_q0 == 2592;
  return ok;
}

bool check12_alpha()
{
  AlphaReport r = alpha_automorphisms(small_group(PgCase::a6));
  return r.cocycle_condition && r.automorphisms && r.alpha1_is_inner && r.matrices_expected &&
         r.unipotent_order_27 && r.commutator_form_standard && r.c_beta_formula &&
         r.alpha23_commute_with_c_beta && r.alpha1_does_not_commute;
}

bool check13_sp4()
{
  const Sp4Data &d = sp4_data();
  bool ok = d.sp.size() == 51840 && d.sp_star.size() == 103680;

  Sp4ClassReport cr = sp4_class_report(12345u);
  ok = ok && cr.order3_count == 800 && cr.class_count == 4;
  ok = ok && cr.label_sizes == std::array<std::size_t, 4>{40, 40, 240, 480};
  ok = ok && cr.labels_constant_on_classes && cr.inversion_swaps_ab_fixes_cd &&
       cr.conjugation_invariant && cr.sign_invariant_well_defined_on_sample;

  Sp4OrbitReport orb = sp4_orbit_report();
  ok = ok && orb.orbit_det1 == 120 && orb.orbit_detm1 == 240 && orb.orbit_det0 == 40;
  ok = ok && orb.lagrangians == 40 && orb.fixed_spaces_are_lagrangian;

  Sp4SubgroupReport sg = sp4_subgroup_report(99u);
  auto pure = [](const SmallSubgroupInfo &i, std::size_t order) {
    return i.order == order && i.o3_trivial && i.generated_by_3_elements && i.n_other == 0;
  };
  ok = ok && pure(sg.sl23_3c, 24) && pure(sg.sl23_3d, 24);
  ok = ok && pure(sg.sl25_3c, 120) && pure(sg.sl25_3d, 120);
  ok = ok && pure(sg.q8q8_3c, 192) && pure(sg.q8q8_3d, 192);
  ok = ok && pure(sg.sl29, 720) && sg.sl29.n_3c == 40 && sg.sl29.n_3d == 40;
  ok = ok && sg.ext2_is_minus_type && sg.ext2_normalizer.order == 1920;
  return ok;
}

bool check14_ut3()
{
  UT3AutReport r3 = ut3_aut_suite(3);
  bool ok = r3.kernel_rank == 2 && r3.image_order == 48 && r3.kernel_maps_are_automorphisms &&
            r3.kernel_elementary_abelian && r3.det1_iff_fixes_center && r3.gamma_is_involution &&
            r3.gamma_inverts_kernel && r3.commuting_lift_unique;

  UT3AutReport r9 = ut3_aut_suite(9);
  ok = ok && r9.kernel_rank == 8 && r9.image_order == 11520 && r9.kernel_maps_are_automorphisms &&
       r9.kernel_elementary_abelian && r9.det1_iff_fixes_center && r9.gamma_is_involution &&
       r9.gamma_inverts_kernel && r9.commuting_lift_samples >= 100 && r9.commuting_lift_unique;
  return ok;
}

bool check15_strong_embedding()
{
  ReductionReport r = reduction_lemma_tests();
  bool ok = r.sl29_true && r.psl29_true && r.m011_true && r.twoM11_true && r.m010_true &&
            r.twoM10_true && r.a6xc2_true;
  ok = ok && r.sp43_false && r.psl29_sq_false;
  ok = ok && r.pair_m11_agree && r.pair_m10_agree && r.quotient_agrees && r.witnesses_direct;

  GL4JordanReport g = gl4_jordan_suite(2024u);
  ok = ok && g.sl29_order == 720 && g.sl29_order3_all_22;
  ok = ok && g.ominus_order == 1440 && g.core_order == 360 && g.ominus_order3_all_31;
  return ok;
}

struct Check {
  const char *name;
  double budget_s;
  std::function<bool()> run;
};

} // namespace

int main()
{
  const std::vector<Check> checks = {
      {"code dimension, self-duality, weight enumerator, 12 heavy pairs", 1.0, check01_code},
      {"graph vector relation over all 81 pairs", 1.0, check02_graph_relation},
      {"Phi bijective and sign-independent, Theta equivariant on 432 x 729", 5.0,
       check03_phi_theta},
      {"stabilizer order 190080, N = normalizer of T, primitive degree 220", 60.0,
       check04_stabilizer},
      {"two order-3 classes with Jordan types 321 and 33, fixed rank 3", 30.0,
       check05_order3_classes},
      {"projective orbit lengths 12, 132, 220", 30.0, check06_projective_orbits},
      {"stabilizer family orders and quotients, cores as centralizers", 60.0,
       check07_stabilizer_family},
      {"quotient module kernels, equivariance and dual pairing", 10.0, check08_todd_modules},
      {"semidirect product suite for all four cases", 30.0, check09_pgroup_suite},
      {"unique special subgroup Q with its triple-coordinate model", 30.0,
       check10_unique_special_q},
      {"matrix-case census: abelian and extraspecial subgroups, normalizers", 60.0,
       check11_m12_census},
      {"module-fixing automorphisms of the a6-case group", 5.0, check12_alpha},
      {"Sp4(3): orders, classes, orbit counts, small subgroups", 90.0, check13_sp4},
      {"UT3(3) and UT3(9) automorphism structure", 30.0, check14_ut3},
      {"strong 3-embedding verdicts and GL4(3) Jordan types", 60.0, check15_strong_embedding},
  };

  int failed = 0;
  for (std::size_t k = 0; k < checks.size(); ++k) {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = checks[k].run();
    } catch (const std::exception &e) {
      std::printf("check %2zu: exception: %s\n", k + 1, e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool in_budget = secs <= checks[k].budget_s;
    bool pass = ok && in_budget;
    failed += !pass;
    std::printf("check %2zu: %s  %s (%.2fs, budget %.0fs)%s\n", k + 1, pass ? "pass" : "FAIL",
                checks[k].name, secs, checks[k].budget_s,
                !ok ? "" : (in_budget ? "" : " [over budget]"));
  }
  std::printf("%zu checks, %d failed\n", checks.size(), failed);
  return failed == 0 ? 0 : 1;
}
