#include "gt/sp4ut3.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>

namespace gt {

// ---------------------------------------------------------------------------
// Keys and closure

SpKey sp_key(const MatF3 &m)
{
  SpKey k = 0;
  for (int idx = 15; idx >= 0; --idx)
    k = k * 3 + m.a[static_cast<std::size_t>(idx)];
  return k;
}

MatF3 sp_unkey(SpKey k)
{
  MatF3 m(4, 4);
  for (int idx = 0; idx < 16; ++idx) {
    m.a[static_cast<std::size_t>(idx)] = static_cast<F3>(k % 3);
    k /= 3;
  }
  return m;
}

static bool sp_closure_try(const std::vector<MatF3> &gens, std::size_t cap, SpGroup &out)
{
  out = SpGroup{};
  out.gens = gens;
  MatF3 id = MatF3::identity(4);
  out.lookup.insert(sp_key(id));
  std::vector<MatF3> frontier = {id};
  std::vector<MatF3> all = {id};
  while (!frontier.empty()) {
    MatF3 m = frontier.back();
    frontier.pop_back();
    for (const MatF3 &g : gens) {
      MatF3 p = mat_mul(m, g);
      SpKey k = sp_key(p);
      if (out.lookup.insert(k).second) {
        if (out.lookup.size() > cap)
          return false;
        frontier.push_back(p);
        all.push_back(std::move(p));
      }
    }
  }
  out.elems.reserve(all.size());
  for (const MatF3 &m : all)
    out.elems.push_back(sp_key(m));
  std::sort(out.elems.begin(), out.elems.end());
  return true;
}

SpGroup sp_closure(const std::vector<MatF3> &gens, std::size_t cap)
{
  SpGroup g;
  if (!sp_closure_try(gens, cap, g))
    throw std::runtime_error("sp_closure: cap exceeded");
  return g;
}

static const MatF3 &std_j()
{
  static MatF3 j = standard_symplectic(4).gram;
  return j;
}

int sp_sign(const MatF3 &m)
{
  MatF3 f = mat_mul(mat_mul(mat_transpose(m), std_j()), m);
  if (f == std_j())
    return 1;
  if (f == mat_neg(std_j()))
    return -1;
  throw std::invalid_argument("sp_sign: form not preserved up to sign");
}

int sp_order(const MatF3 &m)
{
  MatF3 id = MatF3::identity(4);
  MatF3 p = m;
  int n = 1;
  while (!(p == id)) {
    p = mat_mul(p, m);
    ++n;
    if (n > 200)
      throw std::logic_error("sp_order: runaway");
  }
  return n;
}

const Sp4Data &sp4_data()
{
  static Sp4Data data = [] {
    Sp4Data d;
    d.j = std_j();

    // Symplectic transvections x -> x + b(x,v) v over all 40 lines.
    std::vector<MatF3> gens;
    for (const VecF3 &v : projective_points(4)) {
      MatF3 outer(4, 4);
      for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c)
          outer.at(r, c) = f3_mul(v[static_cast<std::size_t>(r)], v[static_cast<std::size_t>(c)]);
      MatF3 t = mat_sub(MatF3::identity(4), mat_mul(outer, d.j));
      if (sp_sign(t) != 1)
        throw std::logic_error("sp4_data: transvection not symplectic");
      gens.push_back(std::move(t));
    }
    d.sp = sp_closure(gens, 60000);
    if (d.sp.size() != 51840)
      throw std::logic_error("sp4_data: wrong Sp4(3) order");

    // A similitude negating the form; its coset fills up the index-2 group.
    MatF3 neg(4, 4);
    neg.at(0, 0) = 1;
    neg.at(1, 1) = 1;
    neg.at(2, 2) = 2;
    neg.at(3, 3) = 2;
    if (sp_sign(neg) != -1)
      throw std::logic_error("sp4_data: bad similitude");
    d.sp_star.gens = gens;
    d.sp_star.gens.push_back(neg);
    for (SpKey k : d.sp.elems) {
      d.sp_star.elems.push_back(k);
      SpKey nk = sp_key(mat_mul(neg, sp_unkey(k)));
      d.sp_star.elems.push_back(nk);
    }
    std::sort(d.sp_star.elems.begin(), d.sp_star.elems.end());
    d.sp_star.lookup.insert(d.sp_star.elems.begin(), d.sp_star.elems.end());
    if (d.sp_star.size() != 103680)
      throw std::logic_error("sp4_data: wrong extended order");
    return d;
  }();
  return data;
}

// ---------------------------------------------------------------------------
// Order-3 classification

static F3 form_eval(const VecF3 &x, const VecF3 &y)
{
  return vec_dot(x, mat_apply(std_j(), y));
}

// Particular solution of A w = b, free variables set to zero.
static VecF3 solve_linear(const std::vector<VecF3> &rows, const VecF3 &rhs)
{
  int n = static_cast<int>(rows[0].size());
  MatF3 aug(static_cast<int>(rows.size()), n + 1);
  for (int r = 0; r < aug.rows; ++r) {
    for (int c = 0; c < n; ++c)
      aug.at(r, c) = rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
    aug.at(r, n) = rhs[static_cast<std::size_t>(r)];
  }
  std::vector<int> pivots;
  row_reduce(aug, &pivots);
  VecF3 w(static_cast<std::size_t>(n), 0);
  for (std::size_t pr = 0; pr < pivots.size(); ++pr) {
    if (pivots[pr] == n)
      throw std::invalid_argument("solve_linear: inconsistent system");
    w[static_cast<std::size_t>(pivots[pr])] = aug.at(static_cast<int>(pr), n);
  }
  return w;
}

static void require_order3(const MatF3 &g)
{
  MatF3 id = MatF3::identity(4);
  if (g == id || !(mat_pow(g, 3) == id))
    throw std::invalid_argument("classify_order3: element must have order 3");
  if (sp_sign(g) != 1)
    throw std::invalid_argument("classify_order3: element must preserve the form");
}

ClassLabel classify_order3(const MatF3 &g)
{
  require_order3(g);
  std::vector<int> jordan = jordan_partition(g);
  MatF3 n = mat_sub(g, MatF3::identity(4));

  if (jordan == std::vector<int>{2, 1, 1}) {
    for (int code = 1; code < 81; ++code) {
      VecF3 w(4, 0);
      int c = code;
      for (int k = 0; k < 4; ++k) {
        w[static_cast<std::size_t>(k)] = static_cast<F3>(c % 3);
        c /= 3;
      }
      VecF3 nw = mat_apply(n, w);
      if (vec_is_zero(nw))
        continue;
      F3 s = form_eval(w, nw);
      if (s == 0)
        throw std::logic_error("classify_order3: vanishing sign invariant");
      return s == 1 ? ClassLabel::c3a : ClassLabel::c3b;
    }
    throw std::logic_error("classify_order3: no moved vector");
  }

  if (jordan != std::vector<int>{2, 2})
    throw std::logic_error("classify_order3: unexpected Jordan type");

  // Basis (u1, u2, w1, w2) with the u's spanning the fixed space, the w's a
  // Lagrangian complement, and b(u_i, w_j) the identity pairing.
  std::vector<VecF3> u = kernel_basis(n);
  if (u.size() != 2)
    throw std::logic_error("classify_order3: wrong fixed space");
  // row r of the system is b(u_r, w) = u_r^T J w.
  std::vector<VecF3> rows = {
      {form_eval(u[0], {1, 0, 0, 0}), form_eval(u[0], {0, 1, 0, 0}),
       form_eval(u[0], {0, 0, 1, 0}), form_eval(u[0], {0, 0, 0, 1})},
      {form_eval(u[1], {1, 0, 0, 0}), form_eval(u[1], {0, 1, 0, 0}),
       form_eval(u[1], {0, 0, 1, 0}), form_eval(u[1], {0, 0, 0, 1})}};
  VecF3 w1 = solve_linear(rows, {1, 0});
  std::vector<VecF3> rows2 = rows;
  rows2.push_back({form_eval(w1, {1, 0, 0, 0}), form_eval(w1, {0, 1, 0, 0}),
                   form_eval(w1, {0, 0, 1, 0}), form_eval(w1, {0, 0, 0, 1})});
  VecF3 w2 = solve_linear(rows2, {0, 1, 0});

  MatF3 b(4, 4);
  const VecF3 *cols[4] = {&u[0], &u[1], &w1, &w2};
  for (int c = 0; c < 4; ++c)
    for (int r = 0; r < 4; ++r)
      b.at(r, c) = (*cols[c])[static_cast<std::size_t>(r)];
  MatF3 gram = mat_mul(mat_mul(mat_transpose(b), std_j()), b);
  if (!(gram == std_j() || gram == mat_neg(std_j())))
    throw std::logic_error("classify_order3: basis does not standardize the form");
  MatF3 p = mat_mul(mat_mul(mat_inverse(b), g), b);
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) {
      bool upper_right = r < 2 && c >= 2;
      F3 want = (r == c) ? 1 : 0;
      if (!upper_right && p.at(r, c) != want)
        throw std::logic_error("classify_order3: basis does not unitriangularize");
    }
  MatF3 x(2, 2);
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c)
      x.at(r, c) = p.at(r, c + 2);
  F3 det = mat_det(x);
  if (det == 0)
    throw std::logic_error("classify_order3: singular block");
  return det == 1 ? ClassLabel::c3c : ClassLabel::c3d;
}

bool sign_invariant_well_defined(const MatF3 &g)
{
  require_order3(g);
  MatF3 n = mat_sub(g, MatF3::identity(4));
  F3 seen = 0;
  for (int code = 1; code < 81; ++code) {
    VecF3 w(4, 0);
    int c = code;
    for (int k = 0; k < 4; ++k) {
      w[static_cast<std::size_t>(k)] = static_cast<F3>(c % 3);
      c /= 3;
    }
    VecF3 nw = mat_apply(n, w);
    if (vec_is_zero(nw))
      continue;
    F3 s = form_eval(w, nw);
    if (s == 0)
      return false;
    if (seen == 0)
      seen = s;
    else if (s != seen)
      return false;
  }
  return seen != 0;
}

Sp4ClassReport sp4_class_report(unsigned seed)
{
  const Sp4Data &d = sp4_data();
  Sp4ClassReport rep;
  MatF3 id = MatF3::identity(4);

  std::vector<SpKey> order3;
  for (SpKey k : d.sp.elems) {
    MatF3 m = sp_unkey(k);
    if (!(m == id) && mat_pow(m, 3) == id)
      order3.push_back(k);
  }
  rep.order3_count = order3.size();

  std::map<SpKey, ClassLabel> label;
  for (SpKey k : order3)
    label[k] = classify_order3(sp_unkey(k));
  for (const auto &[k, l] : label)
    ++rep.label_sizes[static_cast<std::size_t>(l)];

  // Conjugation orbits under the transvection generators.
  std::map<SpKey, int> orbit_of;
  int orbits = 0;
  rep.labels_constant_on_classes = true;
  for (SpKey start : order3) {
    if (orbit_of.count(start))
      continue;
    int id_orbit = orbits++;
    std::vector<SpKey> frontier = {start};
    orbit_of[start] = id_orbit;
    while (!frontier.empty()) {
      SpKey k = frontier.back();
      frontier.pop_back();
      MatF3 m = sp_unkey(k);
      for (const MatF3 &g : d.sp.gens) {
        SpKey ck = sp_key(mat_mul(mat_mul(g, m), mat_inverse(g)));
        if (!orbit_of.count(ck)) {
          orbit_of[ck] = id_orbit;
          frontier.push_back(ck);
        }
      }
    }
  }
  rep.class_count = orbits;
  std::vector<ClassLabel> orbit_label(static_cast<std::size_t>(orbits));
  std::vector<bool> seen(static_cast<std::size_t>(orbits), false);
  for (SpKey k : order3) {
    int o = orbit_of[k];
    if (!seen[static_cast<std::size_t>(o)]) {
      seen[static_cast<std::size_t>(o)] = true;
      orbit_label[static_cast<std::size_t>(o)] = label[k];
    } else if (orbit_label[static_cast<std::size_t>(o)] != label[k]) {
      rep.labels_constant_on_classes = false;
    }
  }

  rep.inversion_swaps_ab_fixes_cd = true;
  for (SpKey k : order3) {
    MatF3 m = sp_unkey(k);
    ClassLabel li = label[sp_key(mat_mul(m, m))]; // inverse of an order-3 element
    ClassLabel l = label[k];
    ClassLabel want = l;
    if (l == ClassLabel::c3a)
      want = ClassLabel::c3b;
    else if (l == ClassLabel::c3b)
      want = ClassLabel::c3a;
    if (li != want)
      rep.inversion_swaps_ab_fixes_cd = false;
  }

  std::mt19937 rng(seed);
  std::uniform_int_distribution<std::size_t> pick3(0, order3.size() - 1);
  std::uniform_int_distribution<std::size_t> pickg(0, d.sp.size() - 1);
  rep.conjugation_invariant = true;
  for (int t = 0; t < 1000; ++t) {
    MatF3 g = sp_unkey(order3[pick3(rng)]);
    MatF3 h = sp_unkey(d.sp.elems[pickg(rng)]);
    MatF3 c = mat_mul(mat_mul(h, g), mat_inverse(h));
    if (classify_order3(c) != classify_order3(g))
      rep.conjugation_invariant = false;
  }
  rep.sign_invariant_well_defined_on_sample = true;
  int tried = 0;
  for (std::size_t i = 0; i < order3.size() && tried < 50; ++i) {
    MatF3 g = sp_unkey(order3[i]);
    if (jordan_partition(g) != std::vector<int>{2, 1, 1})
      continue;
    ++tried;
    if (!sign_invariant_well_defined(g))
      rep.sign_invariant_well_defined_on_sample = false;
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Subgroup orbits and Lagrangians

static MatF3 block_unipotent(const MatF3 &x)
{
  MatF3 g = MatF3::identity(4);
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c)
      g.at(r, c + 2) = x.at(r, c);
  return g;
}

static SpKey subgroup_canonical(const MatF3 &g)
{
  return std::min(sp_key(g), sp_key(mat_mul(g, g)));
}

static std::uint32_t lagrangian_key(std::vector<VecF3> basis)
{
  MatF3 m = MatF3::from_rows(basis);
  row_reduce(m);
  std::uint32_t k = 0;
  for (int idx = 7; idx >= 0; --idx)
    k = k * 3 + m.a[static_cast<std::size_t>(idx)];
  return k;
}

Sp4OrbitReport sp4_orbit_report()
{
  const Sp4Data &d = sp4_data();
  Sp4OrbitReport rep;

  auto orbit = [&](const MatF3 &x) {
    std::set<SpKey> seen;
    std::vector<MatF3> frontier = {block_unipotent(x)};
    seen.insert(subgroup_canonical(frontier[0]));
    while (!frontier.empty()) {
      MatF3 g = frontier.back();
      frontier.pop_back();
      for (const MatF3 &h : d.sp.gens) {
        MatF3 c = mat_mul(mat_mul(h, g), mat_inverse(h));
        if (seen.insert(subgroup_canonical(c)).second)
          frontier.push_back(c);
      }
    }
    return seen;
  };

  MatF3 x1 = MatF3::identity(2);
  MatF3 x2(2, 2);
  x2.at(0, 0) = 1;
  x2.at(1, 1) = 2;
  MatF3 x3(2, 2);
  x3.at(0, 0) = 1;
  std::set<SpKey> o1 = orbit(x1), o2 = orbit(x2), o3 = orbit(x3);
  rep.orbit_det1 = o1.size();
  rep.orbit_detm1 = o2.size();
  rep.orbit_det0 = o3.size();

  rep.lagrangians = lagrangian_count(standard_symplectic(4));

  // Canonical keys of all Lagrangians.
  std::set<std::uint32_t> lagr;
  auto pts = projective_points(4);
  for (std::size_t a = 0; a < pts.size(); ++a)
    for (std::size_t b = a + 1; b < pts.size(); ++b) {
      if (form_eval(pts[a], pts[b]) != 0)
        continue;
      if (mat_rank(MatF3::from_rows({pts[a], pts[b]})) != 2)
        continue;
      lagr.insert(lagrangian_key({pts[a], pts[b]}));
    }

  rep.fixed_spaces_are_lagrangian = static_cast<int>(lagr.size()) == rep.lagrangians;
  std::map<std::uint32_t, int> count1, count2;
  for (const std::set<SpKey> *o : {&o1, &o2})
    for (SpKey k : *o) {
      MatF3 g = sp_unkey(k);
      std::vector<VecF3> fixed = kernel_basis(mat_sub(g, MatF3::identity(4)));
      if (fixed.size() != 2) {
        rep.fixed_spaces_are_lagrangian = false;
        continue;
      }
      std::uint32_t lk = lagrangian_key(fixed);
      if (!lagr.count(lk))
        rep.fixed_spaces_are_lagrangian = false;
      (o == &o1 ? count1 : count2)[lk] += 1;
    }
  rep.each_lagrangian_3_det1 = count1.size() == lagr.size();
  for (const auto &[k, c] : count1)
    if (c != 3)
      rep.each_lagrangian_3_det1 = false;
  rep.each_lagrangian_6_detm1 = count2.size() == lagr.size();
  for (const auto &[k, c] : count2)
    if (c != 6)
      rep.each_lagrangian_6_detm1 = false;
  return rep;
}

// ---------------------------------------------------------------------------
// Lifting to the extraspecial group 3^{1+4} of exponent 3

static VecF3 heis_vec(int x)
{
  VecF3 v(4, 0);
  x /= 3;
  for (int k = 0; k < 4; ++k) {
    v[static_cast<std::size_t>(k)] = static_cast<F3>(x % 3);
    x /= 3;
  }
  return v;
}

int heis_index(F3 z, const VecF3 &v)
{
  int idx = 0;
  for (int k = 3; k >= 0; --k)
    idx = idx * 3 + v[static_cast<std::size_t>(k)];
  return idx * 3 + z;
}

int heis_mul(int x, int y)
{
  VecF3 vx = heis_vec(x), vy = heis_vec(y);
  F3 z = f3_add(f3_add(static_cast<F3>(x % 3), static_cast<F3>(y % 3)),
                f3_mul(2, form_eval(vx, vy)));
  return heis_index(z, vec_add(vx, vy));
}

static int heis_lift(const MatF3 &g, int sign, int x)
{
  F3 z = static_cast<F3>(x % 3);
  if (sign < 0)
    z = f3_neg(z);
  return heis_index(z, mat_apply(g, heis_vec(x)));
}

LiftReport sp4_lift_report(unsigned seed)
{
  const Sp4Data &d = sp4_data();
  LiftReport rep;

  // The construction gives a group: check exponent 3, center of order 3
  // equal to the derived subgroup.
  rep.group_valid = true;
  for (int x = 0; x < 243; ++x) {
    if (heis_mul(heis_mul(x, x), x) != 0)
      rep.group_valid = false;
    bool central = true;
    for (int y = 0; y < 243; ++y)
      if (heis_mul(x, y) != heis_mul(y, x))
        central = false;
    if (central != (x % 243 < 3 && heis_vec(x) == VecF3(4, 0)))
      rep.group_valid = false;
  }
  // Every commutator is central and some commutator is nontrivial.
  bool some_comm = false;
  for (int x = 0; x < 243; x += 7)
    for (int y = 0; y < 243; y += 5) {
      int lhs = heis_mul(x, y), rhs = heis_mul(y, x);
      if (lhs != rhs)
        some_comm = true;
      if (heis_vec(lhs) != heis_vec(rhs))
        rep.group_valid = false;
    }
  rep.group_valid = rep.group_valid && some_comm;

  std::mt19937 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, d.sp_star.size() - 1);
  rep.lifts_multiplicative = true;
  rep.quotient_action_is_g = true;
  for (int t = 0; t < 40; ++t) {
    MatF3 g = sp_unkey(d.sp_star.elems[pick(rng)]);
    int sg = sp_sign(g);
    for (int x = 0; x < 243; ++x) {
      for (int y = 0; y < 243; ++y)
        if (heis_lift(g, sg, heis_mul(x, y)) != heis_mul(heis_lift(g, sg, x), heis_lift(g, sg, y)))
          rep.lifts_multiplicative = false;
      if (heis_vec(heis_lift(g, sg, x)) != mat_apply(g, heis_vec(x)))
        rep.quotient_action_is_g = false;
    }
  }

  rep.compose_exactly = true;
  for (const MatF3 &g : d.sp_star.gens)
    for (const MatF3 &h : d.sp_star.gens) {
      MatF3 gh = mat_mul(g, h);
      int sg = sp_sign(g), sh = sp_sign(h), sgh = sp_sign(gh);
      for (int x = 0; x < 243; ++x)
        if (heis_lift(g, sg, heis_lift(h, sh, x)) != heis_lift(gh, sgh, x))
          rep.compose_exactly = false;
    }

  rep.identity_lift_trivial = true;
  MatF3 id = MatF3::identity(4);
  for (int x = 0; x < 243; ++x)
    if (heis_lift(id, 1, x) != x)
      rep.identity_lift_trivial = false;

  rep.neg_identity_inverts_quotient_fixes_center = true;
  MatF3 mneg = mat_neg(id);
  for (int x = 0; x < 243; ++x) {
    int img = heis_lift(mneg, sp_sign(mneg), x);
    if (heis_vec(img) != vec_scale(2, heis_vec(x)) || img % 3 != x % 3)
      rep.neg_identity_inverts_quotient_fixes_center = false;
  }

  // The center Z = {(z, 0)} is moved by the sign character only.
  rep.center_action_is_sign = true;
  for (SpKey k : d.sp_star.elems) {
    if (k % 97 != 0)
      continue; // deterministic thinning; the action on Z is z -> sign * z
    MatF3 g = sp_unkey(k);
    int sg = sp_sign(g);
    for (F3 z = 0; z < 3; ++z) {
      int img = heis_lift(g, sg, heis_index(z, VecF3(4, 0)));
      F3 want = (sg == 1) ? z : f3_neg(z);
      if (img != heis_index(want, VecF3(4, 0)))
        rep.center_action_is_sign = false;
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Small subgroups

static std::vector<MatF3> sp_find_gens(const std::vector<SpKey> &members)
{
  std::vector<MatF3> gens;
  SpGroup cur;
  sp_closure_try(gens, 1, cur);
  for (SpKey k : members) {
    if (cur.contains(k))
      continue;
    gens.push_back(sp_unkey(k));
    if (!sp_closure_try(gens, members.size(), cur))
      throw std::logic_error("sp_find_gens: member set not closed");
    if (cur.size() == members.size())
      break;
  }
  return gens;
}

static SmallSubgroupInfo subgroup_info(const SpGroup &h)
{
  SmallSubgroupInfo info;
  info.order = h.size();

  std::vector<SpKey> p3elems;
  std::size_t p3 = 1;
  {
    std::size_t n = h.size();
    while (n % 3 == 0) {
      n /= 3;
      p3 *= 3;
    }
  }
  MatF3 id = MatF3::identity(4);
  for (SpKey k : h.elems) {
    MatF3 m = sp_unkey(k);
    int o = sp_order(m);
    if (o == 3) {
      ClassLabel l = classify_order3(m);
      if (l == ClassLabel::c3c)
        ++info.n_3c;
      else if (l == ClassLabel::c3d)
        ++info.n_3d;
      else
        ++info.n_other;
    }
    if (o == 1 || o == 3 || o == 9)
      p3elems.push_back(k);
  }

  // Two Sylow 3-subgroups meeting trivially force a trivial 3-core.
  info.o3_trivial = (p3 == 1);
  if (!info.o3_trivial) {
    auto grow_sylow = [&](SpKey x0) -> std::optional<SpGroup> {
      std::vector<MatF3> gens = {sp_unkey(x0)};
      SpGroup cur;
      if (!sp_closure_try(gens, p3, cur))
        return std::nullopt;
      bool progress = true;
      while (cur.size() < p3 && progress) {
        progress = false;
        for (SpKey y : p3elems) {
          if (cur.contains(y))
            continue;
          std::vector<MatF3> g2 = gens;
          g2.push_back(sp_unkey(y));
          SpGroup trial;
          if (sp_closure_try(g2, p3, trial)) {
            gens = std::move(g2);
            cur = std::move(trial);
            progress = true;
            break;
          }
        }
      }
      if (cur.size() != p3)
        return std::nullopt;
      return cur;
    };
    std::vector<std::set<SpKey>> sylows;
    for (std::size_t i = 0; i < p3elems.size() && sylows.size() < 2; ++i) {
      if (sp_unkey(p3elems[i]) == id)
        continue;
      if (!sylows.empty() && sylows[0].count(p3elems[i]))
        continue;
      std::optional<SpGroup> syl = grow_sylow(p3elems[i]);
      if (!syl)
        continue;
      std::set<SpKey> s(syl->elems.begin(), syl->elems.end());
      bool fresh = true;
      for (const auto &prev : sylows) {
        std::vector<SpKey> meet;
        std::set_intersection(prev.begin(), prev.end(), s.begin(), s.end(),
                              std::back_inserter(meet));
        if (meet.size() > 1 || s == prev)
          fresh = false;
      }
      if (fresh)
        sylows.push_back(std::move(s));
    }
    info.o3_trivial = sylows.size() >= 2;
  }

  std::vector<MatF3> gens3;
  for (SpKey k : p3elems)
    gens3.push_back(sp_unkey(k));
  SpGroup span;
  info.generated_by_3_elements =
      sp_closure_try(gens3, h.size(), span) && span.size() == h.size();
  return info;
}

// 4x4 blow-up of a 2x2 matrix over F9 in the basis (1, i) per coordinate.
static MatF3 blowup_f9(const std::array<F9, 4> &m)
{
  MatF3 b(4, 4);
  for (int br = 0; br < 2; ++br)
    for (int bc = 0; bc < 2; ++bc) {
      F9 e = m[static_cast<std::size_t>(2 * br + bc)];
      b.at(2 * br, 2 * bc) = e.re;
      b.at(2 * br, 2 * bc + 1) = f3_neg(e.im);
      b.at(2 * br + 1, 2 * bc) = e.im;
      b.at(2 * br + 1, 2 * bc + 1) = e.re;
    }
  return b;
}

// Change of basis c with c^T gram c equal to the standard form.
static MatF3 symplectic_basis_change(const MatF3 &gram)
{
  auto ev = [&](const VecF3 &x, const VecF3 &y) { return vec_dot(x, mat_apply(gram, y)); };
  auto all_vecs = [] {
    std::vector<VecF3> vs;
    for (int code = 1; code < 81; ++code) {
      VecF3 v(4, 0);
      int c = code;
      for (int k = 0; k < 4; ++k) {
        v[static_cast<std::size_t>(k)] = static_cast<F3>(c % 3);
        c /= 3;
      }
      vs.push_back(std::move(v));
    }
    return vs;
  }();

  VecF3 f1 = all_vecs[0];
  VecF3 g1;
  for (const VecF3 &v : all_vecs)
    if (ev(f1, v) != 0) {
      g1 = vec_scale(f3_inv(ev(f1, v)), v);
      break;
    }
  // perpendicular space of the first hyperbolic pair
  std::vector<VecF3> rows = {
      {ev(f1, {1, 0, 0, 0}), ev(f1, {0, 1, 0, 0}), ev(f1, {0, 0, 1, 0}), ev(f1, {0, 0, 0, 1})},
      {ev(g1, {1, 0, 0, 0}), ev(g1, {0, 1, 0, 0}), ev(g1, {0, 0, 1, 0}), ev(g1, {0, 0, 0, 1})}};
  std::vector<VecF3> perp = kernel_basis(MatF3::from_rows(rows));
  if (perp.size() != 2)
    throw std::logic_error("symplectic_basis_change: bad radical");
  VecF3 f2 = perp[0];
  VecF3 g2;
  for (F3 s = 0; s < 3; ++s)
    for (F3 t = 0; t < 3; ++t) {
      VecF3 v = vec_add(vec_scale(s, perp[0]), vec_scale(t, perp[1]));
      if (ev(f2, v) != 0) {
        g2 = vec_scale(f3_inv(ev(f2, v)), v);
        goto found;
      }
    }
  throw std::logic_error("symplectic_basis_change: degenerate restriction");
found:
  MatF3 c(4, 4);
  const VecF3 *cols[4] = {&f1, &f2, &g1, &g2};
  for (int j = 0; j < 4; ++j)
    for (int r = 0; r < 4; ++r)
      c.at(r, j) = (*cols[j])[static_cast<std::size_t>(r)];
  MatF3 check = mat_mul(mat_mul(mat_transpose(c), gram), c);
  if (!(check == std_j()))
    throw std::logic_error("symplectic_basis_change: normalization failed");
  return c;
}

static SpGroup build_sl29()
{
  // Gram of Tr(x1 y2 - x2 y1) in the blow-up basis.
  MatF3 gram(4, 4);
  auto basis_f9 = [](int k) {
    std::array<F9, 2> v{f9(0), f9(0)};
    v[static_cast<std::size_t>(k / 2)] = (k % 2 == 0) ? f9(1) : f9_i();
    return v;
  };
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) {
      auto u = basis_f9(r), v = basis_f9(c);
      gram.at(r, c) = f9_trace(u[0] * v[1] - u[1] * v[0]);
    }
  MatF3 cb = symplectic_basis_change(gram);
  MatF3 cbi = mat_inverse(cb);

  std::vector<MatF3> gens;
  const std::array<std::array<F9, 4>, 4> raw = {
      std::array<F9, 4>{f9(1), f9(1), f9(0), f9(1)},
      std::array<F9, 4>{f9(1), f9_i(), f9(0), f9(1)},
      std::array<F9, 4>{f9(1), f9(0), f9(1), f9(1)},
      std::array<F9, 4>{f9(1), f9(0), f9_i(), f9(1)}};
  for (const auto &m : raw) {
    MatF3 g = mat_mul(mat_mul(cbi, blowup_f9(m)), cb);
    if (sp_sign(g) != 1)
      throw std::logic_error("build_sl29: not symplectic");
    gens.push_back(std::move(g));
  }
  SpGroup h = sp_closure(gens, 1024);
  if (h.size() != 720)
    throw std::logic_error("build_sl29: wrong order");
  return h;
}

static MatF3 embed_2x2(const MatF3 &s, int which)
{
  // Acts on the hyperbolic plane spanned by coordinates {which, which+2}.
  MatF3 g = MatF3::identity(4);
  int i0 = which, i1 = which + 2;
  g.at(i0, i0) = s.at(0, 0);
  g.at(i0, i1) = s.at(0, 1);
  g.at(i1, i0) = s.at(1, 0);
  g.at(i1, i1) = s.at(1, 1);
  return g;
}

Sp4SubgroupReport sp4_subgroup_report(unsigned seed)
{
  const Sp4Data &d = sp4_data();
  Sp4SubgroupReport rep;

  // SL2(9) acting on F9^2 read as F3^4.
  SpGroup sl29 = build_sl29();
  rep.sl29 = subgroup_info(sl29);

  // SL2(5) subgroups: generated by an order-5 and an order-3 element; the
  // two conjugacy variants are told apart by the label of their 3-elements.
  std::optional<SpGroup> a5_3c, a5_3d;
  std::vector<SpKey> ord5, ord3;
  for (SpKey k : sl29.elems) {
    int o = sp_order(sp_unkey(k));
    if (o == 5)
      ord5.push_back(k);
    if (o == 3)
      ord3.push_back(k);
  }
  for (SpKey a : ord5) {
    for (SpKey b : ord3) {
      SpGroup h;
      if (!sp_closure_try({sp_unkey(a), sp_unkey(b)}, 121, h) || h.size() != 120)
        continue;
      ClassLabel l = classify_order3(sp_unkey(b));
      if (l == ClassLabel::c3c && !a5_3c)
        a5_3c = h;
      if (l == ClassLabel::c3d && !a5_3d)
        a5_3d = h;
      if (a5_3c && a5_3d)
        break;
    }
    if (a5_3c && a5_3d)
      break;
  }
  if (!a5_3c || !a5_3d)
    throw std::logic_error("sp4_subgroup_report: SL2(5) variants not found");
  rep.sl25_3c = subgroup_info(*a5_3c);
  rep.sl25_3d = subgroup_info(*a5_3d);

  // SL2(3) variants as normalizers of a quaternion Sylow 2-subgroup.
  auto sl23_from = [&](const SpGroup &a5) {
    std::vector<SpKey> ord4;
    for (SpKey k : a5.elems)
      if (sp_order(sp_unkey(k)) == 4)
        ord4.push_back(k);
    SpGroup q8;
    bool found = false;
    for (std::size_t i = 0; i < ord4.size() && !found; ++i)
      for (std::size_t j = i + 1; j < ord4.size() && !found; ++j) {
        SpGroup trial;
        if (sp_closure_try({sp_unkey(ord4[i]), sp_unkey(ord4[j])}, 9, trial) &&
            trial.size() == 8) {
          q8 = trial;
          found = true;
        }
      }
    if (!found)
      throw std::logic_error("sp4_subgroup_report: no quaternion subgroup");
    std::vector<MatF3> qgens = sp_find_gens(q8.elems);
    std::vector<SpKey> norm;
    for (SpKey k : a5.elems) {
      MatF3 m = sp_unkey(k);
      MatF3 mi = mat_inverse(m);
      bool ok = true;
      for (const MatF3 &g : qgens)
        if (!q8.contains(sp_key(mat_mul(mat_mul(m, g), mi)))) {
          ok = false;
          break;
        }
      if (ok)
        norm.push_back(k);
    }
    SpGroup h;
    if (!sp_closure_try(sp_find_gens(norm), norm.size() + 1, h) || h.size() != norm.size())
      throw std::logic_error("sp4_subgroup_report: normalizer not closed");
    return h;
  };
  rep.sl23_3c = subgroup_info(sl23_from(*a5_3c));
  rep.sl23_3d = subgroup_info(sl23_from(*a5_3d));

  // (Q8 x Q8) x| C3 on the orthogonal hyperbolic planes {e1,e3}, {e2,e4}.
  std::vector<MatF3> sl23_2x2;
  for (int code = 0; code < 81; ++code) {
    MatF3 s(2, 2);
    int c = code;
    for (int idx = 0; idx < 4; ++idx) {
      s.a[static_cast<std::size_t>(idx)] = static_cast<F3>(c % 3);
      c /= 3;
    }
    if (mat_det(s) == 1)
      sl23_2x2.push_back(s);
  }
  if (sl23_2x2.size() != 24)
    throw std::logic_error("sp4_subgroup_report: wrong SL2(3) count");
  std::vector<MatF3> q8_2x2;
  MatF3 id2 = MatF3::identity(2);
  for (const MatF3 &s : sl23_2x2)
    if (mat_pow(s, 4) == id2)
      q8_2x2.push_back(s);
  if (q8_2x2.size() != 8)
    throw std::logic_error("sp4_subgroup_report: wrong quaternion count");
  MatF3 c3(2, 2);
  c3.at(0, 0) = 1;
  c3.at(0, 1) = 1;
  c3.at(1, 1) = 1;

  auto build_q8q8 = [&](bool twist) {
    std::vector<MatF3> gens;
    for (const MatF3 &s : q8_2x2) {
      gens.push_back(embed_2x2(s, 0));
      gens.push_back(embed_2x2(s, 1));
    }
    MatF3 diag = mat_mul(embed_2x2(c3, 0), embed_2x2(twist ? mat_pow(c3, 2) : c3, 1));
    gens.push_back(diag);
    for (const MatF3 &g : gens)
      if (sp_sign(g) != 1)
        throw std::logic_error("sp4_subgroup_report: block embedding not symplectic");
    SpGroup h = sp_closure(gens, 256);
    if (h.size() != 192)
      throw std::logic_error("sp4_subgroup_report: wrong (Q8xQ8)C3 order");
    return h;
  };
  SmallSubgroupInfo v1 = subgroup_info(build_q8q8(false));
  SmallSubgroupInfo v2 = subgroup_info(build_q8q8(true));
  // name the variants by their 3-element label
  if (v1.n_3c > 0) {
    rep.q8q8_3c = v1;
    rep.q8q8_3d = v2;
  } else {
    rep.q8q8_3c = v2;
    rep.q8q8_3d = v1;
  }

  // An extraspecial 2-group of order 32 and minus type, located by closing
  // elements that square to -Id, and its normalizer.
  MatF3 id = MatF3::identity(4);
  MatF3 neg = mat_neg(id);
  std::vector<SpKey> sqneg;
  for (SpKey k : d.sp.elems) {
    MatF3 m = sp_unkey(k);
    if (mat_mul(m, m) == neg)
      sqneg.push_back(k);
  }
  std::mt19937 rng(seed);
  SpGroup e32;
  bool located = false;
  for (int attempt = 0; attempt < 200 && !located; ++attempt) {
    std::vector<MatF3> gens;
    SpGroup cur;
    sp_closure_try({neg}, 4, cur);
    for (int step = 0; step < 200 && cur.size() < 32; ++step) {
      SpKey k = sqneg[std::uniform_int_distribution<std::size_t>(0, sqneg.size() - 1)(rng)];
      if (cur.contains(k))
        continue;
      std::vector<MatF3> trial_gens = gens;
      trial_gens.push_back(sp_unkey(k));
      SpGroup trial;
      if (!sp_closure_try(trial_gens, 33, trial))
        continue;
      bool two_group = true;
      for (SpKey tk : trial.elems) {
        int o = sp_order(sp_unkey(tk));
        if (o != 1 && o != 2 && o != 4)
          two_group = false;
      }
      if (!two_group)
        continue;
      gens = std::move(trial_gens);
      cur = std::move(trial);
    }
    if (cur.size() != 32)
      continue;
    // center must be exactly {I, -I}; minus type has 20 elements of order 4
    int order4 = 0;
    std::size_t central = 0;
    for (SpKey a : cur.elems) {
      MatF3 ma = sp_unkey(a);
      if (sp_order(ma) == 4)
        ++order4;
      bool comm = true;
      for (const MatF3 &g : gens)
        if (!(mat_mul(ma, g) == mat_mul(g, ma)))
          comm = false;
      central += comm;
    }
    if (central != 2)
      continue;
    rep.ext2_is_minus_type = order4 == 20;
    if (!rep.ext2_is_minus_type)
      continue;
    e32 = std::move(cur);
    located = true;
  }
  if (!located)
    throw std::logic_error("sp4_subgroup_report: extraspecial 2-group not found");

  std::vector<MatF3> egens = sp_find_gens(e32.elems);
  std::vector<SpKey> norm;
  for (SpKey k : d.sp.elems) {
    MatF3 m = sp_unkey(k);
    MatF3 mi = mat_inverse(m);
    bool ok = true;
    for (const MatF3 &g : egens)
      if (!e32.contains(sp_key(mat_mul(mat_mul(m, g), mi)))) {
        ok = false;
        break;
      }
    if (ok)
      norm.push_back(k);
  }
  SpGroup nh;
  if (!sp_closure_try(sp_find_gens(norm), norm.size() + 1, nh) || nh.size() != norm.size())
    throw std::logic_error("sp4_subgroup_report: normalizer not closed");
  rep.ext2_normalizer = subgroup_info(nh);
  return rep;
}

// ---------------------------------------------------------------------------
// UT3(q) automorphisms

namespace {

struct UT3Field {
  int q;

  int add(int a, int b) const
  {
    if (q == 3)
      return f3_add(static_cast<F3>(a), static_cast<F3>(b));
    return f9_index(f9_from_index(a) + f9_from_index(b));
  }
  int mul(int a, int b) const
  {
    if (q == 3)
      return f3_mul(static_cast<F3>(a), static_cast<F3>(b));
    return f9_index(f9_from_index(a) * f9_from_index(b));
  }
  int neg(int a) const
  {
    if (q == 3)
      return f3_neg(static_cast<F3>(a));
    return f9_index(-f9_from_index(a));
  }
  int frob(int a) const
  {
    if (q == 3)
      return a;
    return f9_index(f9_pow(f9_from_index(a), 3));
  }
  // F3-basis of the field: {1} or {1, i}.
  int basis_count() const { return q == 3 ? 1 : 2; }
  int basis(int k) const { return q == 3 ? 1 : f9_index(k == 0 ? f9(1) : f9_i()); }
  // F3-coordinates of a with respect to the basis.
  std::vector<F3> coords(int a) const
  {
    if (q == 3)
      return {static_cast<F3>(a)};
    F9 x = f9_from_index(a);
    return {x.re, x.im};
  }
};

struct UT3Ctx {
  UT3Field f;
  int n; // q^3

  int index(int x, int y, int z) const { return x + f.q * y + f.q * f.q * z; }
  int xof(int e) const { return e % f.q; }
  int yof(int e) const { return e / f.q % f.q; }
  int zof(int e) const { return e / (f.q * f.q); }

  int mul(int a, int b) const
  {
    return index(f.add(xof(a), xof(b)), f.add(yof(a), yof(b)),
                 f.add(f.add(zof(a), zof(b)), f.mul(xof(a), yof(b))));
  }
};

using Perm = std::vector<std::uint16_t>;

bool perm_is_automorphism(const UT3Ctx &c, const Perm &p)
{
  for (int a = 0; a < c.n; ++a)
    for (int b = 0; b < c.n; ++b)
      if (p[static_cast<std::size_t>(c.mul(a, b))] !=
          c.mul(p[static_cast<std::size_t>(a)], p[static_cast<std::size_t>(b)]))
        return false;
  return true;
}

Perm compose(const Perm &a, const Perm &b)
{
  Perm r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    r[i] = a[b[i]];
  return r;
}

// Induced F3-matrix on Q/Z from the images of the basis cosets.
MatF3 induced_matrix(const UT3Ctx &c, const Perm &p)
{
  int dim = 2 * c.f.basis_count();
  MatF3 m(dim, dim);
  for (int col = 0; col < dim; ++col) {
    int slot = col / c.f.basis_count();
    int bk = col % c.f.basis_count();
    int e = slot == 0 ? c.index(c.f.basis(bk), 0, 0) : c.index(0, c.f.basis(bk), 0);
    int img = p[static_cast<std::size_t>(e)];
    std::vector<F3> cx = c.f.coords(c.xof(img)), cy = c.f.coords(c.yof(img));
    for (int k = 0; k < c.f.basis_count(); ++k) {
      m.at(k, col) = cx[static_cast<std::size_t>(k)];
      m.at(c.f.basis_count() + k, col) = cy[static_cast<std::size_t>(k)];
    }
  }
  return m;
}

std::uint32_t small_mat_key(const MatF3 &m)
{
  std::uint32_t k = 0;
  for (std::size_t i = m.a.size(); i-- > 0;)
    k = k * 3 + m.a[i];
  return k;
}

} // namespace

UT3AutReport ut3_aut_suite(int q)
{
  if (q != 3 && q != 9)
    throw std::invalid_argument("ut3_aut_suite: q must be 3 or 9");
  UT3Ctx c{UT3Field{q}, q * q * q};
  UT3AutReport rep;
  rep.q = q;
  int m_deg = c.f.basis_count();
  rep.kernel_rank = 2 * m_deg * m_deg;

  // Kernel maps g -> g chi(g bar) for the F3-basis of Hom(Q/Z, Z).
  std::vector<Perm> kernel_basis_maps;
  for (int slot = 0; slot < 2; ++slot)
    for (int src = 0; src < m_deg; ++src)
      for (int dst = 0; dst < m_deg; ++dst) {
        Perm p(static_cast<std::size_t>(c.n));
        for (int e = 0; e < c.n; ++e) {
          int arg = slot == 0 ? c.xof(e) : c.yof(e);
          F3 coeff = c.f.coords(arg)[static_cast<std::size_t>(src)];
          int add = c.f.mul(static_cast<int>(coeff) % 3 == 0
                                ? 0
                                : c.f.basis(dst),
                            q == 3 ? coeff : f9_index(f9(coeff)));
          p[static_cast<std::size_t>(e)] =
              static_cast<std::uint16_t>(c.index(c.xof(e), c.yof(e), c.f.add(c.zof(e), add)));
        }
        kernel_basis_maps.push_back(std::move(p));
      }

  rep.kernel_maps_are_automorphisms = true;
  rep.kernel_fixes_center_and_quotient = true;
  for (const Perm &p : kernel_basis_maps) {
    if (!perm_is_automorphism(c, p))
      rep.kernel_maps_are_automorphisms = false;
    for (int e = 0; e < c.n; ++e) {
      int img = p[static_cast<std::size_t>(e)];
      if (c.xof(img) != c.xof(e) || c.yof(img) != c.yof(e))
        rep.kernel_fixes_center_and_quotient = false;
      if (c.xof(e) == 0 && c.yof(e) == 0 && img != e)
        rep.kernel_fixes_center_and_quotient = false;
    }
  }

  // All 3^rank combinations are distinct, and the basis maps have order 3
  // and commute.
  {
    std::set<Perm> combos;
    int total = 1;
    for (int k = 0; k < rep.kernel_rank; ++k)
      total *= 3;
    Perm idp(static_cast<std::size_t>(c.n));
    for (int e = 0; e < c.n; ++e)
      idp[static_cast<std::size_t>(e)] = static_cast<std::uint16_t>(e);
    for (int code = 0; code < total; ++code) {
      Perm p = idp;
      int cc = code;
      for (const Perm &b : kernel_basis_maps) {
        for (int rpt = cc % 3; rpt > 0; --rpt)
          p = compose(b, p);
        cc /= 3;
      }
      combos.insert(std::move(p));
    }
    rep.kernel_elementary_abelian = static_cast<int>(combos.size()) == total;
    for (std::size_t i = 0; i < kernel_basis_maps.size(); ++i) {
      const Perm &a = kernel_basis_maps[i];
      if (compose(a, compose(a, a)) != idp)
        rep.kernel_elementary_abelian = false;
      for (std::size_t j = i + 1; j < kernel_basis_maps.size(); ++j)
        if (compose(a, kernel_basis_maps[j]) != compose(kernel_basis_maps[j], a))
          rep.kernel_elementary_abelian = false;
    }
  }

  // Lifts of the linear generators: (x,y,z) -> (x~, y~, det z + 2(x~ y~ - det x y)).
  auto lift_linear = [&](int a, int b, int cc, int dd) {
    int det = c.f.add(c.f.mul(a, dd), c.f.neg(c.f.mul(b, cc)));
    Perm p(static_cast<std::size_t>(c.n));
    for (int e = 0; e < c.n; ++e) {
      int x = c.xof(e), y = c.yof(e);
      int xt = c.f.add(c.f.mul(a, x), c.f.mul(b, y));
      int yt = c.f.add(c.f.mul(cc, x), c.f.mul(dd, y));
      int corr = c.f.mul(q == 3 ? 2 : f9_index(f9(2)),
                         c.f.add(c.f.mul(xt, yt), c.f.neg(c.f.mul(det, c.f.mul(x, y)))));
      int z = c.f.add(c.f.mul(det, c.zof(e)), corr);
      p[static_cast<std::size_t>(e)] = static_cast<std::uint16_t>(c.index(xt, yt, z));
    }
    return p;
  };
  int one = q == 3 ? 1 : f9_index(f9(1));
  int zero = 0;
  int prim = q == 3 ? 2 : f9_index(f9_zeta());
  std::vector<Perm> image_gens = {lift_linear(one, one, zero, one),
                                  lift_linear(one, zero, one, one),
                                  lift_linear(prim, zero, zero, one)};
  if (q == 9) {
    Perm frob(static_cast<std::size_t>(c.n));
    for (int e = 0; e < c.n; ++e)
      frob[static_cast<std::size_t>(e)] = static_cast<std::uint16_t>(
          c.index(c.f.frob(c.xof(e)), c.f.frob(c.yof(e)), c.f.frob(c.zof(e))));
    image_gens.push_back(std::move(frob));
  }
  bool gens_ok = true;
  for (const Perm &p : image_gens)
    if (!perm_is_automorphism(c, p))
      gens_ok = false;
  rep.kernel_maps_are_automorphisms = rep.kernel_maps_are_automorphisms && gens_ok;

  // Closure of the induced maps on Q/Z, keeping one lift per image element.
  std::unordered_map<std::uint32_t, std::size_t> index_of;
  std::vector<Perm> lifts;
  std::vector<MatF3> mats;
  {
    Perm idp(static_cast<std::size_t>(c.n));
    for (int e = 0; e < c.n; ++e)
      idp[static_cast<std::size_t>(e)] = static_cast<std::uint16_t>(e);
    index_of[small_mat_key(induced_matrix(c, idp))] = 0;
    lifts.push_back(idp);
    mats.push_back(induced_matrix(c, idp));
    std::vector<std::size_t> frontier = {0};
    while (!frontier.empty()) {
      std::size_t at = frontier.back();
      frontier.pop_back();
      for (const Perm &g : image_gens) {
        Perm np = compose(lifts[at], g);
        MatF3 nm = induced_matrix(c, np);
        std::uint32_t k = small_mat_key(nm);
        if (!index_of.count(k)) {
          index_of[k] = lifts.size();
          frontier.push_back(lifts.size());
          lifts.push_back(std::move(np));
          mats.push_back(std::move(nm));
        }
      }
    }
  }
  rep.image_order = lifts.size();

  // Fixing the center pointwise is equivalent to inducing a linear map of
  // determinant 1 on Q/Z (linearity meaning GF(q)-linearity at q = 9).
  rep.det1_iff_fixes_center = true;
  MatF3 mult_i(4, 4);
  if (q == 9) {
    for (int blk = 0; blk < 2; ++blk) {
      mult_i.at(2 * blk, 2 * blk + 1) = 2;
      mult_i.at(2 * blk + 1, 2 * blk) = 1;
    }
  }
  for (std::size_t at = 0; at < lifts.size(); ++at) {
    bool fixes_center = true;
    for (int zc = 1; zc < q; ++zc) {
      int e = c.index(0, 0, zc);
      if (lifts[at][static_cast<std::size_t>(e)] != e)
        fixes_center = false;
    }
    bool lin_det1;
    if (q == 3) {
      lin_det1 = mat_det(mats[at]) == 1;
    } else {
      bool linear = mat_mul(mats[at], mult_i) == mat_mul(mult_i, mats[at]);
      lin_det1 = false;
      if (linear) {
        // read off the 2x2 matrix over GF(9) and take its determinant
        auto entry = [&](int r, int cc2) {
          return f9(mats[at].at(2 * r, 2 * cc2), mats[at].at(2 * r + 1, 2 * cc2));
        };
        F9 det = entry(0, 0) * entry(1, 1) - entry(0, 1) * entry(1, 0);
        lin_det1 = det == f9(1);
      }
    }
    if (fixes_center != lin_det1)
      rep.det1_iff_fixes_center = false;
  }

  // gamma: the involution inducing -Id on Q/Z.
  Perm gamma(static_cast<std::size_t>(c.n));
  for (int e = 0; e < c.n; ++e)
    gamma[static_cast<std::size_t>(e)] =
        static_cast<std::uint16_t>(c.index(c.f.neg(c.xof(e)), c.f.neg(c.yof(e)), c.zof(e)));
  if (!perm_is_automorphism(c, gamma))
    throw std::logic_error("ut3_aut_suite: gamma is not an automorphism");
  {
    Perm idp(static_cast<std::size_t>(c.n));
    for (int e = 0; e < c.n; ++e)
      idp[static_cast<std::size_t>(e)] = static_cast<std::uint16_t>(e);
    rep.gamma_is_involution = compose(gamma, gamma) == idp;
    rep.gamma_inverts_kernel = true;
    for (const Perm &b : kernel_basis_maps) {
      Perm conj = compose(gamma, compose(b, gamma));
      Perm binv = compose(b, b); // order 3
      if (conj != binv)
        rep.gamma_inverts_kernel = false;
    }
  }

  // Unique gamma-commuting lift for sampled image elements.
  std::vector<Perm> kernel_all;
  {
    int total = 1;
    for (int k = 0; k < rep.kernel_rank; ++k)
      total *= 3;
    Perm idp(static_cast<std::size_t>(c.n));
    for (int e = 0; e < c.n; ++e)
      idp[static_cast<std::size_t>(e)] = static_cast<std::uint16_t>(e);
    kernel_all.reserve(static_cast<std::size_t>(total));
    for (int code = 0; code < total; ++code) {
      Perm p = idp;
      int cc = code;
      for (const Perm &b : kernel_basis_maps) {
        for (int rpt = cc % 3; rpt > 0; --rpt)
          p = compose(b, p);
        cc /= 3;
      }
      kernel_all.push_back(std::move(p));
    }
  }
  rep.commuting_lift_unique = true;
  std::size_t stride = std::max<std::size_t>(1, lifts.size() / 100);
  for (std::size_t at = 0; at < lifts.size(); at += stride) {
    ++rep.commuting_lift_samples;
    int commuting = 0;
    for (const Perm &k : kernel_all) {
      bool ok = true;
      for (int e = 0; e < c.n && ok; ++e) {
        std::uint16_t lhs = lifts[at][k[gamma[static_cast<std::size_t>(e)]]];
        std::uint16_t rhs = gamma[lifts[at][k[static_cast<std::size_t>(e)]]];
        if (lhs != rhs)
          ok = false;
      }
      commuting += ok;
      if (commuting > 1)
        break;
    }
    if (commuting != 1)
      rep.commuting_lift_unique = false;
  }
  return rep;
}

bool check_ut39_isomorphic_m11_q()
{
  UT3Ctx c{UT3Field{9}, 729};
  auto to_ut3 = [&](const QTriple &t) {
    return c.index(f9_index(t.b), f9_index(t.a), f9_index(t.z));
  };
  for (int ix = 0; ix < 729; ++ix)
    for (int iy = 0; iy < 729; ++iy) {
      QTriple x{f9_from_index(ix % 9), f9_from_index(ix / 9 % 9), f9_from_index(ix / 81)};
      QTriple y{f9_from_index(iy % 9), f9_from_index(iy / 9 % 9), f9_from_index(iy / 81)};
      QTriple p = qtriple_mul(PgCase::m11, x, y);
      if (to_ut3(p) != c.mul(to_ut3(x), to_ut3(y)))
        return false;
    }
  return true;
}

} // namespace gt
