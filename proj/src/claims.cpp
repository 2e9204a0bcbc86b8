#include "gt/claims.hpp"

#include "gt/strongemb.hpp"

#include <atomic>
#include <chrono>
#include <set>
#include <sstream>
#include <thread>

namespace gt {

namespace {

// ---------------------------------------------------------------------------
// Shared constructions, memoized behind thread-safe static initialization

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

const GolayCode &golay()
{
  static GolayCode code = build_golay();
  return code;
}

const ReductionReport &reduction_report()
{
  static ReductionReport r = reduction_lemma_tests();
  return r;
}

// ---------------------------------------------------------------------------
// Summary formatting

char flag(bool b) { return b ? '1' : '0'; }

std::string jordan_str(const std::vector<int> &j)
{
  std::string s;
  for (int p : j)
    s += static_cast<char>('0' + p);
  return s;
}

// ---------------------------------------------------------------------------
// Composite computations shared by a few claims

std::string chain_summary()
{
  SmallGroup &g = small_group(PgCase::m12);
  UWQData u = build_UWQ(g, 0);
  std::vector<int> zmem;
  for (int a = 0; a < g.mod_size; ++a)
    if (in_center_module(PgCase::m12, a))
      zmem.push_back(g.index({a, 0}));
  ChainDatum d;
  d.s = &g;
  d.p_sub = u.Q;
  d.chain = {subgroup_from_members(g, zmem), u.W, u.Q};

  std::vector<int> stab = chain_stabilizing_elements(d);
  bool ppower = p_power_order_check(d, [](int m) { return m; });

  int outside = -1;
  for (int xi : stab)
    if (!d.p_sub.contains(xi)) {
      outside = xi;
      break;
    }
  d.witness = outside;
  bool qcharp = outside >= 0 && essential_obstruction(d, ObstructionKind::QcharP);

  d.witness = -1;
  bool fa = essential_obstruction(d, ObstructionKind::filtered_a);

  UWQData ui = build_UWQ(g, 3);
  ChainDatum fb1;
  fb1.s = &g;
  fb1.p_sub = ui.Q;
  fb1.chain = {subgroup(g, {}), ui.Q};

  std::vector<SGElem> qb = a_star_units(g);
  qb.push_back(eta_bar());
  qb.push_back(eta(3));
  SubgroupHandle qbar = subgroup(g, qb);
  ChainDatum fb2;
  fb2.s = &g;
  fb2.p_sub = qbar;
  fb2.chain = {center_of(g, qbar), qbar};

  FilteredCInstance fc = filtered_c_m12_instance(g);

  std::ostringstream o;
  o << "stabilizers=" << stab.size() << " ppower=" << flag(ppower) << " qcharp=" << flag(qcharp)
    << " fa=" << flag(fa) << " fb=" << flag(essential_obstruction(fb1, ObstructionKind::filtered_b))
    << ',' << flag(essential_obstruction(fb2, ObstructionKind::filtered_b)) << " fc=" << fc.p_order
    << ',' << fc.outer_order << ',' << fc.fixed_index << ',' << flag(fc.obstructed);
  return o.str();
}

std::vector<Claim> build_registry()
{
  std::vector<Claim> reg;
  auto add = [&](std::string id, std::string reference, std::string expected,
                 std::function<std::string(unsigned)> compute) {
    reg.push_back({std::move(id), std::move(reference), std::move(expected), std::move(compute)});
  };

  // -------------------------------------------------------------- golay
  add("golay.dimension",
      "the code spanned by the C_i + Gr(xi) has dimension 6 inside the "
      "7-dimensional span of the C_i and Gr(xi)",
      "dim=6 overdim=7", [](unsigned) {
        const GolayCode &c = golay();
        MatF3 m(6, 12);
        for (int r = 0; r < 6; ++r)
          for (int k = 0; k < 12; ++k)
            m.at(r, k) = c.basis[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)];
        std::ostringstream o;
        o << "dim=" << mat_rank(m) << " overdim=" << golay_bar_dimension();
        return o.str();
      });

  add("golay.selfdual", "the code is self-dual for the standard inner product",
      "basis_orthogonal=1 words=729", [](unsigned) {
        const GolayCode &c = golay();
        bool orth = true;
        for (const DeltaVec &x : c.basis)
          for (const DeltaVec &y : c.basis)
            orth = orth && delta_dot(x, y) == 0;
        std::ostringstream o;
        o << "basis_orthogonal=" << flag(orth) << " words=" << c.codewords.size();
        return o.str();
      });

  add("golay.weights",
      "the weight enumerator is 1, 264, 440, 24 at weights 0, 6, 9, 12 and "
      "vanishes elsewhere",
      "w0=1 w6=264 w9=440 w12=24 other=0", [](unsigned) {
        auto w = golay_weight_enumerator(golay());
        int other = 0;
        for (int k : {1, 2, 3, 4, 5, 7, 8, 10, 11})
          other += w[static_cast<std::size_t>(k)];
        std::ostringstream o;
        o << "w0=" << w[0] << " w6=" << w[6] << " w9=" << w[9] << " w12=" << w[12]
          << " other=" << other;
        return o.str();
      });

  add("golay.heavy", "the 24 codewords of weight 12 form 12 pairs {w, -w}",
      "weight12=24 pairs=12", [](unsigned) {
        const GolayCode &c = golay();
        std::set<std::string> seen;
        int count = 0, pairs = 0;
        for (const DeltaVec &v : c.codewords) {
          if (delta_weight(v) != 12)
            continue;
          ++count;
          std::string a = delta_to_string(v), b = delta_to_string(delta_neg(v));
          if (!seen.count(b))
            seen.insert(a);
          else
            ++pairs;
        }
        std::ostringstream o;
        o << "weight12=" << count << " pairs=" << pairs;
        return o.str();
      });

  add("golay.graphrel",
      "Gr(xi) + Gr(eta) + Gr(theta) is the sum of the C_i over the columns "
      "where xi and eta differ, for all 81 pairs",
      "pairs=81 ok=1", [](unsigned) {
        std::ostringstream o;
        o << "pairs=81 ok=" << flag(check_graph_relation());
        return o.str();
      });

  add("golay.phi",
      "Phi is a linear bijection of the code onto the symmetric 3x3 matrices, "
      "independent of the signs chosen for the lambda words",
      "bijective=1 sign_masks=16", [](unsigned) {
        const GolayCode &c = golay();
        PhiIso phi = phi_iso(c);
        std::array<bool, 729> hit{};
        bool bij = true;
        for (const DeltaVec &w : c.codewords) {
          SymMat3 s = phi.apply(w);
          auto idx = static_cast<std::size_t>(s.index());
          bij = bij && !hit[idx] && phi.invert(s) == w;
          hit[idx] = true;
        }
        int masks = 0;
        for (unsigned mask = 0; mask < 16; ++mask)
          masks += phi_well_defined(c, mask);
        std::ostringstream o;
        o << "bijective=" << flag(bij) << " sign_masks=" << masks;
        return o.str();
      });

  // -------------------------------------------------------------- m12
  add("m12.orders",
      "the monomial stabilizer of the code has order 190080, containing N0 of "
      "order 432 and N of order 864",
      "N0=432 N=864 G=190080", [](unsigned) {
        const Mat12 &d = mat12_data();
        std::ostringstream o;
        o << "N0=" << d.N0.size() << " N=" << d.N.size() << " G=" << d.G.size();
        return o.str();
      });

  add("m12.normalizer",
      "N is the normalizer of the order-9 translation group, of index 220 "
      "with a primitive coset action",
      "trs=9 normalizer=864 in_N=1 index=220 transitive=1 primitive=1", [](unsigned) {
        const Mat12 &d = mat12_data();
        std::vector<MonMap> t_gens = {trs(tetra_kappa_inv(f9(1))), trs(tetra_kappa_inv(f9_i()))};
        KeySet t = subgroup_closure(t_gens);
        KeySet nrm = normalizer_scan(d.G, t_gens, t);
        bool in_n = true;
        for (std::uint64_t k : nrm.elems)
          in_n = in_n && d.N.contains(k);
        CosetAction act = coset_action(d.G.gens, KeySet::from(d.N.elems), 220);
        std::ostringstream o;
        o << "trs=" << t.size() << " normalizer=" << nrm.size() << " in_N=" << flag(in_n)
          << " index=" << act.degree << " transitive=" << flag(is_transitive(act))
          << " primitive=" << flag(is_primitive(act));
        return o.str();
      });

  add("m12.theta",
      "Theta identifies N0 with a 432-element matrix group and transports the "
      "action through Phi",
      "image=432 equivariant=1", [](unsigned) {
        const Mat12 &d = mat12_data();
        bool eq = true;
        for (std::uint64_t k : d.N0.elems) {
          MonMap beta = MonMap::from_key(k);
          MatF3 t = d.theta.matrix_of(beta);
          MatF3 tt = mat_transpose(t);
          for (const DeltaVec &b : d.code.rref)
            eq = eq && d.phi.apply(beta.apply(b)).to_mat() ==
                           mat_mul(mat_mul(t, d.phi.apply(b).to_mat()), tt);
        }
        std::ostringstream o;
        o << "image=" << d.theta.fwd.size() << " equivariant=" << flag(eq);
        return o.str();
      });

  add("m12.classes",
      "the order-3 elements form two classes with Jordan types 321 and 33 on "
      "the code, and no fixed space exceeds dimension 3",
      "classes=2 jordan=321,33 max_fixed=3", [](unsigned) {
        const Mat12 &d = mat12_data();
        auto classes = order3_class_data(d);
        std::vector<std::string> js;
        for (const Order3Class &c : classes)
          js.push_back(jordan_str(c.jordan));
        std::sort(js.begin(), js.end());
        std::ostringstream o;
        o << "classes=" << classes.size() << " jordan=";
        for (std::size_t k = 0; k < js.size(); ++k)
          o << (k ? "," : "") << js[k];
        o << " max_fixed=" << max_order3_fixed_rank(d);
        return o.str();
      });

  add("m12.orbits",
      "the orbits of the stabilizer on the 364 projective points of the code "
      "have lengths 132, 220, and 12",
      "orbits=12,132,220", [](unsigned) {
        const Mat12 &d = mat12_data();
        auto lengths = orbit_lengths_on_projective(d, d.G.gens);
        std::ostringstream o;
        o << "orbits=";
        for (std::size_t k = 0; k < lengths.size(); ++k)
          o << (k ? "," : "") << lengths[k];
        return o.str();
      });

  // -------------------------------------------------------------- mathieu
  add("mat.orders",
      "the stabilizers of K1 and K2 have orders 15840 and 2880; their "
      "3-cores have orders 7920 and 360 with quotients C2 and D8",
      "2M11=15840 2M10=2880 M0_11=7920 M0_10=360 quo=C2,D8", [](unsigned) {
        const MathieuData &m = mathieu_data();
        std::ostringstream o;
        o << "2M11=" << m.twoM11.size() << " 2M10=" << m.twoM10.size()
          << " M0_11=" << m.M0_11.size() << " M0_10=" << m.M0_10.size() << " quo="
          << (quotient_is_c2(m.twoM11_gens, m.twoM11, m.M0_11) ? "C2" : "?") << ','
          << (quotient_is_d8(m.twoM10_gens, m.twoM10, m.M0_10) ? "D8" : "?");
        return o.str();
      });

  add("mat.centralizers",
      "inside each stabilizer, the elements fixing the spanning theta* "
      "vectors pointwise are exactly the simple core",
      "fix_K1=7920 fix_K2=360 match=1 simple=1,1", [](unsigned) {
        const MathieuData &m = mathieu_data();
        std::size_t f1 = 0, f2 = 0;
        bool match = true;
        for (std::uint64_t k : m.twoM11.elems) {
          bool fix = MonMap::from_key(k).apply(m.star[0]) == m.star[0];
          f1 += fix;
          match = match && fix == m.M0_11.contains(k);
        }
        for (std::uint64_t k : m.twoM10.elems) {
          MonMap g = MonMap::from_key(k);
          bool fix = g.apply(m.star[1]) == m.star[1] && g.apply(m.star[2]) == m.star[2];
          f2 += fix;
          match = match && fix == m.M0_10.contains(k);
        }
        std::ostringstream o;
        o << "fix_K1=" << f1 << " fix_K2=" << f2 << " match=" << flag(match) << " simple="
          << flag(is_simple_group(m.M0_11_gens, m.M0_11)) << ','
          << flag(is_simple_group(m.M0_10_gens, m.M0_10));
        return o.str();
      });

  add("mat.acttheta",
      "the 12-cell action table of the scalar, Frobenius and negation maps on "
      "the theta* vectors holds",
      "cells=12 ok=1", [](unsigned) {
        std::ostringstream o;
        o << "cells=12 ok=" << flag(check_acttheta());
        return o.str();
      });

  add("todd.kernels",
      "the quotient maps from the symmetric matrices are linear surjections "
      "with kernels of orders 9 and 3",
      "ker10=9 ker11=3 im10=81 im11=243", [](unsigned) {
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
        std::ostringstream o;
        o << "ker10=" << zero10 << " ker11=" << zero11 << " im10=" << im10.size()
          << " im11=" << im11.size();
        return o.str();
      });

  add("todd.equivariance",
      "the coordinate actions on both quotient modules match the action on "
      "the code through the quotient maps",
      "todd10=1 todd11=1", [](unsigned) {
        std::ostringstream o;
        o << "todd10=" << flag(check_todd10_equivariance())
          << " todd11=" << flag(check_todd11_equivariance());
        return o.str();
      });

  add("todd.pairing",
      "the pairing between the dual module and the module is nondegenerate "
      "and contravariant",
      "contravariant=1", [](unsigned) {
        std::ostringstream o;
        o << "contravariant=" << flag(check_todd_pairing());
        return o.str();
      });

  // -------------------------------------------------------------- pgroups
  add("pg.structure",
      "the four semidirect products have the stated orders, centers and "
      "derived subgroups, and the module is the unique abelian subgroup of "
      "its order",
      "m12=19683,3,729 a6=729,3,27 m11=2187,9,81 m11dual=2187,3,27 unique=1111", [](unsigned) {
        std::ostringstream o;
        const char *names[] = {"m12", "a6", "m11", "m11dual"};
        const PgCase cases[] = {PgCase::m12, PgCase::a6, PgCase::m11, PgCase::m11dual};
        std::string uniq;
        for (int k = 0; k < 4; ++k) {
          SmallGroup &g = small_group(cases[k]);
          SubgroupHandle s = whole_group(g);
          o << (k ? " " : "") << names[k] << '=' << s.size() << ','
            << center_of(g, s).size() << ',' << derived_of(g, s).size();
          uniq += flag(check_unique_abelian_certificate(g));
        }
        o << " unique=" << uniq;
        return o.str();
      });

  add("pg.tables",
      "the commutator, centralizer and Jordan-shape tables of the coordinate "
      "modules hold exhaustively",
      "a6=1 m11=1 m11dual=1", [](unsigned) {
        std::ostringstream o;
        o << "a6=" << flag(check_module_tables(small_group(PgCase::a6)))
          << " m11=" << flag(check_module_tables(small_group(PgCase::m11)))
          << " m11dual=" << flag(check_module_tables(small_group(PgCase::m11dual)));
        return o.str();
      });

  add("pg.uwq",
      "in the matrix case the family U_k, W_k, Q_k has orders 9, 27, 243; "
      "Q_k is extraspecial of exponent 3 for finite k and elementary abelian "
      "at infinity, and only Q_0 is normal",
      "orders=9,27,243 extraspecial=1,1,1,0 abelian_inf=1 nsq=19683,6561,6561,6561",
      [](unsigned) {
        SmallGroup &g = small_group(PgCase::m12);
        bool sizes = true;
        std::string es, nsq;
        bool ab_inf = false;
        for (int k = 0; k <= 3; ++k) {
          UWQData d = build_UWQ(g, k);
          sizes = sizes && d.U.size() == 9 && d.W.size() == 27 && d.Q.size() == 243;
          StructureInfo st = structure(g, d.Q);
          es += (k ? "," : "");
          es += flag(st.extraspecial && st.exponent == 3);
          if (k == 3)
            ab_inf = st.abelian && st.exponent == 3;
          nsq += (k ? "," : "") + std::to_string(d.NSQ.size());
        }
        std::ostringstream o;
        o << "orders=" << (sizes ? "9,27,243" : "bad") << " extraspecial=" << es
          << " abelian_inf=" << flag(ab_inf) << " nsq=" << nsq;
        return o.str();
      });

  add("pg.abelian",
      "exactly three abelian subgroups of order 3^5 meet the module in "
      "W_inf, all conjugate to Q_inf",
      "candidates=729 found=3 conjugate=1", [](unsigned) {
        AbelianSearchResult r = count_abelian_3_5_not_in_A(small_group(PgCase::m12));
        std::ostringstream o;
        o << "candidates=" << r.candidates << " found=" << r.found
          << " conjugate=" << flag(r.all_conjugate_to_q_inf);
        return o.str();
      });

  add("pg.extraspecial",
      "the extraspecial order-3^5 subgroups over each W_k are classified, "
      "all with center Z and none over infinity",
      "candidates=729,81,81,81 extraspecial=81,9,9,0 flags=1111", [](unsigned) {
        ExtraspecialReport r = extraspecial_3_5_classification(small_group(PgCase::m12));
        std::ostringstream o;
        o << "candidates=" << r.valid_candidates[0] << ',' << r.valid_candidates[1] << ','
          << r.valid_candidates[2] << ',' << r.valid_candidates[3]
          << " extraspecial=" << r.extraspecial_count[0] << ',' << r.extraspecial_count[1] << ','
          << r.extraspecial_count[2] << ',' << r.extraspecial_count[3] << " flags="
          << flag(r.all_centers_equal_Z) << flag(r.none_over_infinity)
          << flag(r.q_k_found_for_each_finite_k) << flag(r.a23_member_valid_not_extraspecial);
        return o.str();
      });

  add("pg.specialq",
      "each coordinate case has a unique special subgroup Q = A_* T, of "
      "shapes 3^(1+4), 3^(2+4), 3^(1+4) with outer action of order 3, 3, 9",
      "a6=243,3,1,3 m11=729,9,0,3 m11dual=243,3,1,9 unique=111", [](unsigned) {
        std::ostringstream o;
        const char *names[] = {"a6", "m11", "m11dual"};
        const PgCase cases[] = {PgCase::a6, PgCase::m11, PgCase::m11dual};
        std::string uniq;
        for (int k = 0; k < 3; ++k) {
          SmallGroup &g = small_group(cases[k]);
          SpecialSearchResult sr = unique_special_Q(g);
          StructureInfo st = structure(g, sr.q);
          o << (k ? " " : "") << names[k] << '=' << st.order << ',' << st.center << ','
            << flag(st.extraspecial) << ',' << sr.out_s_order;
          uniq += flag(sr.hits == 1 && sr.equals_a_star_t && st.special && st.exponent == 3);
        }
        o << " unique=" << uniq;
        return o.str();
      });

  add("pg.qtriple",
      "the triple-coordinate model of Q agrees with the group multiplication "
      "and the conjugation formulas in all three coordinate cases",
      "a6=1 m11=1 m11dual=1", [](unsigned) {
        std::ostringstream o;
        o << "a6=" << flag(check_qtriple_tables(small_group(PgCase::a6)))
          << " m11=" << flag(check_qtriple_tables(small_group(PgCase::m11)))
          << " m11dual=" << flag(check_qtriple_tables(small_group(PgCase::m11dual)));
        return o.str();
      });

  add("pg.speclemmas",
      "the special-group lemmas hold on the m11-case Q: ten abelian "
      "subgroups of order 3^4 pairwise meeting in the center, and a "
      "distinguished subgroup with a unique abelian maximal subgroup",
      "planes=10 meet=1 maximal=1 a6_rho=1", [](unsigned) {
        SmallGroup &g = small_group(PgCase::m11);
        SpecialSearchResult sr = unique_special_Q(g);
        SpecReport sp = spec_lemma_suite(g, sr.q);
        std::vector<SGElem> gens = {qtriple_elem(g, {f9(0), f9(0), f9(1)}),
                                    qtriple_elem(g, {f9(0), f9(0), f9_i()}),
                                    qtriple_elem(g, {f9(1), f9(0), f9(0)}),
                                    qtriple_elem(g, {f9_i(), f9(0), f9(0)}),
                                    qtriple_elem(g, {f9(0), f9(1), f9(0)})};
        SpecReport spp = spec_lemma_suite(g, subgroup(g, gens));
        SmallGroup &ga = small_group(PgCase::a6);
        SpecReport spa = spec_lemma_suite(ga, unique_special_Q(ga).q);
        std::ostringstream o;
        o << "planes=" << sp.abelian_order_p4_count << " meet=" << flag(sp.pairwise_meet_in_center)
          << " maximal=" << spp.abelian_maximal_count
          << " a6_rho=" << flag(spa.rho_trivial && spa.power_map_homomorphism);
        return o.str();
      });

  add("pg.cubes",
      "the cube criterion (ax)^3 = x^3 iff [x,[x,a]] = 1 holds in all four "
      "cases, and the cube kernel of the coordinate modules is A_*",
      "criterion=1111 kernel=111", [](unsigned) {
        std::string crit, ker;
        for (PgCase c : {PgCase::m12, PgCase::a6, PgCase::m11, PgCase::m11dual})
          crit += flag(check_cube_criterion(small_group(c)));
        for (PgCase c : {PgCase::a6, PgCase::m11, PgCase::m11dual})
          ker += flag(check_cubes_vs_a_star(small_group(c)));
        return "criterion=" + crit + " kernel=" + ker;
      });

  add("pg.alpha",
      "the three module-fixing automorphisms of the a6-case group satisfy "
      "the cocycle condition, act by the stated unipotent matrices, and have "
      "the stated commutation with conjugation by the negated scalar",
      "flags=111111111", [](unsigned) {
        AlphaReport r = alpha_automorphisms(small_group(PgCase::a6));
        std::string f;
        f += flag(r.cocycle_condition);
        f += flag(r.automorphisms);
        f += flag(r.alpha1_is_inner);
        f += flag(r.matrices_expected);
        f += flag(r.unipotent_order_27);
        f += flag(r.commutator_form_standard);
        f += flag(r.c_beta_formula);
        f += flag(r.alpha23_commute_with_c_beta);
        f += flag(r.alpha1_does_not_commute);
        return "flags=" + f;
      });

  add("pg.census",
      "inside the monomial group, C(Z) = 432 and N(Z) = 864 split as a "
      "complemented extension with image GL2(3), the invariant subspaces are "
      "Z and W_0 only, and the model normalizer of Q_0 has index 2592 over it",
      "C=432 N=864 kernel=9 image=48 model=2592 flags=111111111111", [](unsigned) {
        M12Census c = m12_census(small_group(PgCase::m12));
        std::string f;
        f += flag(c.n_gamma_a_star_is_N);
        f += flag(c.n_gamma_u0_equals_n_gamma_z);
        f += flag(c.n_gamma_z_splits_off_neg);
        f += flag(c.image_is_gl2_3);
        f += flag(c.o3_of_quotient_trivial);
        f += flag(c.complement_found);
        f += flag(c.invariant_subspaces_are_Z_W0);
        f += flag(c.u0_commutators_span_w0);
        f += flag(c.u0_trivial_on_quotient);
        f += flag(c.neg_id_is_minus_one_on_quotient);
        f += flag(c.quotient_action_irreducible);
        f += flag(c.q0_normal_in_model);
        std::ostringstream o;
        o << "C=" << c.c_gamma_z << " N=" << c.n_gamma_z << " kernel=" << c.conj_kernel
          << " image=" << c.conj_image << " model=" << c.model_normalizer_over_q0
          << " flags=" << f;
        return o.str();
      });

  // -------------------------------------------------------------- sp4
  add("sp4.order", "the symplectic group has order 51840 and its extension by "
                   "the form-negating similitudes has order 103680",
      "sp=51840 spstar=103680", [](unsigned) {
        const Sp4Data &d = sp4_data();
        std::ostringstream o;
        o << "sp=" << d.sp.size() << " spstar=" << d.sp_star.size();
        return o.str();
      });

  add("sp4.classes",
      "the 800 order-3 elements fall into four conjugacy classes of sizes "
      "40, 40, 240, 480, labeled by the determinant and sign invariants, "
      "with inversion swapping the two small classes",
      "order3=800 classes=4 sizes=40,40,240,480 flags=1111", [](unsigned seed) {
        Sp4ClassReport r = sp4_class_report(seed);
        std::ostringstream o;
        o << "order3=" << r.order3_count << " classes=" << r.class_count << " sizes="
          << r.label_sizes[0] << ',' << r.label_sizes[1] << ',' << r.label_sizes[2] << ','
          << r.label_sizes[3] << " flags=" << flag(r.labels_constant_on_classes)
          << flag(r.inversion_swaps_ab_fixes_cd) << flag(r.conjugation_invariant)
          << flag(r.sign_invariant_well_defined_on_sample);
        return o.str();
      });

  add("sp4.counts",
      "the order-3 subgroup orbits on the unipotent blocks have 120, 240, "
      "and 40 subgroups, and the 40 fixed spaces of the third orbit are the "
      "40 Lagrangians",
      "det1=120 detm1=240 det0=40 lagrangians=40 flags=111", [](unsigned) {
        Sp4OrbitReport r = sp4_orbit_report();
        std::ostringstream o;
        o << "det1=" << r.orbit_det1 << " detm1=" << r.orbit_detm1 << " det0=" << r.orbit_det0
          << " lagrangians=" << r.lagrangians << " flags=" << flag(r.fixed_spaces_are_lagrangian)
          << flag(r.each_lagrangian_3_det1) << flag(r.each_lagrangian_6_detm1);
        return o.str();
      });

  add("sp4.lift",
      "the action lifts to the extraspecial group 3^(1+4) of exponent 3, "
      "multiplicatively and with exact composition, acting on the center by "
      "the sign character",
      "flags=1111111", [](unsigned seed) {
        LiftReport r = sp4_lift_report(seed);
        std::string f;
        f += flag(r.group_valid);
        f += flag(r.lifts_multiplicative);
        f += flag(r.compose_exactly);
        f += flag(r.identity_lift_trivial);
        f += flag(r.neg_identity_inverts_quotient_fixes_center);
        f += flag(r.center_action_is_sign);
        f += flag(r.quotient_action_is_g);
        return "flags=" + f;
      });

  add("sp4.subgroups",
      "the small subgroups generated by 3-elements exist in both class "
      "variants at orders 24, 120, 192, in a single class at order 720, and "
      "the minus-type extraspecial 2-group has normalizer of order 1920",
      "sl23=24,24 sl25=120,120 q8q8=192,192 sl29=720 ext2=1920 flags=1", [](unsigned seed) {
        Sp4SubgroupReport r = sp4_subgroup_report(seed);
        auto pure = [](const SmallSubgroupInfo &i, std::size_t order) {
          return i.order == order && i.o3_trivial && i.generated_by_3_elements && i.n_other == 0;
        };
        bool ok = pure(r.sl23_3c, 24) && pure(r.sl23_3d, 24) && r.sl23_3c.n_3d == 0 &&
                  r.sl23_3d.n_3c == 0 && pure(r.sl25_3c, 120) && pure(r.sl25_3d, 120) &&
                  r.sl25_3c.n_3d == 0 && r.sl25_3d.n_3c == 0 && pure(r.q8q8_3c, 192) &&
                  pure(r.q8q8_3d, 192) && r.q8q8_3c.n_3d == 0 && r.q8q8_3d.n_3c == 0 &&
                  pure(r.sl29, 720) && r.sl29.n_3c == 40 && r.sl29.n_3d == 40 &&
                  r.ext2_is_minus_type;
        std::ostringstream o;
        o << "sl23=" << r.sl23_3c.order << ',' << r.sl23_3d.order << " sl25=" << r.sl25_3c.order
          << ',' << r.sl25_3d.order << " q8q8=" << r.q8q8_3c.order << ',' << r.q8q8_3d.order
          << " sl29=" << r.sl29.order << " ext2=" << r.ext2_normalizer.order
          << " flags=" << flag(ok);
        return o.str();
      });

  // -------------------------------------------------------------- ut3
  add("ut3.aut3",
      "the central automorphisms of UT3(3) form an elementary abelian kernel "
      "of rank 2 with linear image of order 48, and each image element has a "
      "unique lift commuting with the inversion involution",
      "rank=2 image=48 unique=48/48 flags=11111", [](unsigned) {
        UT3AutReport r = ut3_aut_suite(3);
        std::ostringstream o;
        o << "rank=" << r.kernel_rank << " image=" << r.image_order << " unique="
          << (r.commuting_lift_unique ? r.commuting_lift_samples : 0) << '/'
          << r.commuting_lift_samples << " flags=" << flag(r.kernel_maps_are_automorphisms)
          << flag(r.kernel_elementary_abelian) << flag(r.kernel_fixes_center_and_quotient)
          << flag(r.det1_iff_fixes_center)
          << flag(r.gamma_is_involution && r.gamma_inverts_kernel);
        return o.str();
      });

  add("ut3.aut9",
      "for UT3(9) the kernel has rank 8 and the image is the semilinear "
      "group of order 11520, with the same unique commuting lift",
      "rank=8 image=11520 unique=1 samples_ge_100=1 flags=11111", [](unsigned) {
        UT3AutReport r = ut3_aut_suite(9);
        std::ostringstream o;
        o << "rank=" << r.kernel_rank << " image=" << r.image_order
          << " unique=" << flag(r.commuting_lift_unique)
          << " samples_ge_100=" << flag(r.commuting_lift_samples >= 100) << " flags="
          << flag(r.kernel_maps_are_automorphisms) << flag(r.kernel_elementary_abelian)
          << flag(r.kernel_fixes_center_and_quotient) << flag(r.det1_iff_fixes_center)
          << flag(r.gamma_is_involution && r.gamma_inverts_kernel);
        return o.str();
      });

  add("ut3.m11iso",
      "the m11-case special subgroup of shape 3^(2+4) is isomorphic to "
      "UT3(9) by swapping the two module coordinates, on all pairs",
      "iso=1", [](unsigned) {
        return std::string("iso=") + flag(check_ut39_isomorphic_m11_q());
      });

  // -------------------------------------------------------------- emb
  add("emb.sl29",
      "SL2(9) has 10 Sylow 3-subgroups meeting pairwise trivially, so it "
      "and its central quotient contain a strongly 3-embedded subgroup",
      "e9_sylows=1 sl29_sylows=10 cover=1 sl29=1 psl29=1", [](unsigned) {
        const ReductionReport &r = reduction_report();
        std::ostringstream o;
        o << "e9_sylows=" << r.e9_sylows << " sl29_sylows=" << r.sl29_sylows
          << " cover=" << flag(r.all_systems_cover) << " sl29=" << flag(r.sl29_true)
          << " psl29=" << flag(r.psl29_true);
        return o.str();
      });

  add("emb.m11",
      "M11 with its 55 Sylow 3-subgroups, its double-cover stabilizer, the "
      "A6 core with its double cover, and A6 x C2 all contain strongly "
      "3-embedded subgroups, witnessed directly",
      "m011_sylows=55 verdicts=11111 witnesses=1 monotone=1", [](unsigned) {
        const ReductionReport &r = reduction_report();
        std::ostringstream o;
        o << "m011_sylows=" << r.m011_sylows << " verdicts=" << flag(r.m011_true)
          << flag(r.twoM11_true) << flag(r.m010_true) << flag(r.twoM10_true)
          << flag(r.a6xc2_true) << " witnesses=" << flag(r.witnesses_direct)
          << " monotone=" << flag(r.monotone_or_maximal);
        return o.str();
      });

  add("emb.negatives",
      "Sp4(3) and the direct square of PSL2(9) contain no strongly "
      "3-embedded subgroup",
      "sp43=0 psl29sq=0", [](unsigned) {
        const ReductionReport &r = reduction_report();
        std::ostringstream o;
        o << "sp43=" << flag(!r.sp43_false) << " psl29sq=" << flag(!r.psl29_sq_false);
        return o.str();
      });

  add("emb.invariance",
      "the strongly embedded verdict is invariant under normal subgroups of "
      "index prime to 3 and under quotients by normal 3'-subgroups",
      "pair_m11=1 pair_m10=1 quotient=1", [](unsigned) {
        const ReductionReport &r = reduction_report();
        std::ostringstream o;
        o << "pair_m11=" << flag(r.pair_m11_agree) << " pair_m10=" << flag(r.pair_m10_agree)
          << " quotient=" << flag(r.quotient_agrees);
        return o.str();
      });

  add("emb.chain",
      "chain-compatible automorphisms of the matrix-case chain have 3-power "
      "order, and the four obstruction certificates hold on their instances",
      "stabilizers=6561 ppower=1 qcharp=1 fa=1 fb=1,1 fc=81,9,3,1",
      [](unsigned) { return chain_summary(); });

  add("emb.gl4",
      "in GL4(3) the order-3 elements of the embedded SL2(9) have Jordan "
      "type 22 while those of the minus-type orthogonal group have type 31, "
      "and irreducible two-Sylow closures in GL3(3) of order divisible by 9 "
      "are all of SL3(3)",
      "sl29=720 all22=1 ominus=1440 core=360 all31=1 flags=111 trials=200 full=1 ok=1",
      [](unsigned seed) {
        GL4JordanReport r = gl4_jordan_suite(seed);
        std::ostringstream o;
        o << "sl29=" << r.sl29_order << " all22=" << flag(r.sl29_order3_all_22)
          << " ominus=" << r.ominus_order << " core=" << r.core_order
          << " all31=" << flag(r.ominus_order3_all_31) << " flags="
          << flag(r.minus_form_anisotropic_plane) << flag(r.omega3_block3)
          << flag(r.gl3_spotcheck_ok) << " trials=" << r.gl3_trials
          << " full=" << flag(r.gl3_full_sl3 > 0) << " ok=" << flag(r.gl3_spotcheck_ok);
        return o.str();
      });

  return reg;
}

} // namespace

const std::vector<Claim> &claim_registry()
{
  static const std::vector<Claim> reg = build_registry();
  return reg;
}

bool glob_match(const std::string &pattern, const std::string &text)
{
  // Iterative matcher with single-star backtracking.
  std::size_t p = 0, t = 0, star = std::string::npos, mark = 0;
  while (t < text.size()) {
    if (p < pattern.size() && (pattern[p] == '?' || pattern[p] == text[t])) {
      ++p;
      ++t;
    } else if (p < pattern.size() && pattern[p] == '*') {
      star = p++;
      mark = t;
    } else if (star != std::string::npos) {
      p = star + 1;
      t = ++mark;
    } else {
      return false;
    }
  }
  while (p < pattern.size() && pattern[p] == '*')
    ++p;
  return p == pattern.size();
}

std::vector<ClaimResult> run_claims(const std::vector<const Claim *> &selected, unsigned seed,
                                    int threads)
{
  std::vector<ClaimResult> results(selected.size());
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= selected.size())
        return;
      const Claim &c = *selected[i];
      ClaimResult &r = results[i];
      r.id = c.id;
      r.reference = c.reference;
      r.expected = c.expected;
      auto t0 = std::chrono::steady_clock::now();
      try {
        r.computed = c.compute(seed);
      } catch (const std::exception &e) {
        r.computed = std::string("error: ") + e.what();
      }
      auto t1 = std::chrono::steady_clock::now();
      r.runtime_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
      r.status = (r.computed == r.expected) ? "pass" : "fail";
    }
  };

  int n = std::max(1, std::min<int>(threads, static_cast<int>(selected.size())));
  if (n == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k)
      pool.emplace_back(worker);
    for (std::thread &t : pool)
      t.join();
  }
  return results;
}

} // namespace gt
