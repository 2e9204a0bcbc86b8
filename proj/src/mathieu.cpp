#include "gt/mathieu.hpp"

#include <algorithm>
#include <stdexcept>

namespace gt {

std::array<SymMat3, 3> theta_elements()
{
  // theta_1 = [1 (x) 1] + [i (x) i] = E11 + E22 in kappa coordinates.
  // theta_2/3 = [1 (x) 1] - [i (x) i] +/- [1 (x) i], where [1 (x) i] is the
  // symmetric matrix with entries 1/2 = 2 at positions (1,2) and (2,1).
  SymMat3 t1, t2, t3;
  t1.set(0, 0, 1);
  t1.set(1, 1, 1);
  t2.set(0, 0, 1);
  t2.set(1, 1, 2);
  t2.set(0, 1, 2);
  t3.set(0, 0, 1);
  t3.set(1, 1, 2);
  t3.set(0, 1, 1);
  return {t1, t2, t3};
}

MonMap dpar(F9 x) { return trs(tetra_kappa_inv(x)); }
MonMap sbk(F9 u) { return tau(scalar_aut(u)); }
MonMap sbk_phi() { return tau(frobenius_aut()); }

namespace {

bool vec_in(const std::vector<DeltaVec> &set, const DeltaVec &v)
{
  return std::find(set.begin(), set.end(), v) != set.end();
}

KeySet intersect(const KeySet &a, const KeySet &b)
{
  std::vector<std::uint64_t> out;
  for (std::uint64_t k : a.elems)
    if (b.contains(k))
      out.push_back(k);
  return KeySet::from(std::move(out));
}

} // namespace

const MathieuData &mathieu_data()
{
  static const MathieuData data = [] {
    const Mat12 &d = mat12_data();
    MathieuData m;
    m.theta = theta_elements();
    for (int i = 0; i < 3; ++i)
      m.star[static_cast<std::size_t>(i)] =
          d.phi.invert(m.theta[static_cast<std::size_t>(i)]);

    const DeltaVec &s1 = m.star[0], &s2 = m.star[1], &s3 = m.star[2];
    m.K1 = {DeltaVec{}, s1, delta_neg(s1)};
    for (F3 p = 0; p < 3; ++p)
      for (F3 q = 0; q < 3; ++q)
        m.K2.push_back(delta_add(delta_scale(p, s2), delta_scale(q, s3)));

    std::vector<std::uint64_t> tw11, tw10, m011, m010;
    for (std::uint64_t k : d.G.elems) {
      MonMap g = MonMap::from_key(k);
      DeltaVec g1 = g.apply(s1), g2 = g.apply(s2), g3 = g.apply(s3);
      if (g1 == s1)
        m011.push_back(k);
      if (g1 == s1 || g1 == delta_neg(s1))
        tw11.push_back(k);
      if (g2 == s2 && g3 == s3)
        m010.push_back(k);
      if (vec_in(m.K2, g2) && vec_in(m.K2, g3))
        tw10.push_back(k);
    }
    m.twoM11 = KeySet::from(std::move(tw11));
    m.twoM10 = KeySet::from(std::move(tw10));
    m.M0_11 = KeySet::from(std::move(m011));
    m.M0_10 = KeySet::from(std::move(m010));

    m.T = subgroup_closure({dpar(f9(1)), dpar(f9_i())});
    KeySet n = KeySet::from(d.N.elems);
    m.Nhat = intersect(n, m.twoM11);
    if (!(intersect(n, m.twoM10).elems == m.Nhat.elems))
      throw std::logic_error("mathieu_data: N meet 2M10 differs from N meet 2M11");
    m.Nhat_M0_11 = intersect(m.Nhat, m.M0_11);
    m.Nhat_M0_10 = intersect(m.Nhat, m.M0_10);

    m.twoM11_gens = find_generators(m.twoM11.elems);
    m.twoM10_gens = find_generators(m.twoM10.elems);
    m.M0_11_gens = find_generators(m.M0_11.elems);
    m.M0_10_gens = find_generators(m.M0_10.elems);
    return m;
  }();
  return data;
}

bool check_acttheta()
{
  const MathieuData &m = mathieu_data();
  const DeltaVec &s1 = m.star[0], &s2 = m.star[1], &s3 = m.star[2];
  auto neg = delta_neg;

  MonMap z = sbk(f9_zeta()), i = sbk(f9_i()), f = sbk_phi(), n = MonMap::neg_identity();
  return z.apply(s1) == neg(s1) && z.apply(s2) == neg(s3) && z.apply(s3) == s2 &&
         i.apply(s1) == s1 && i.apply(s2) == neg(s2) && i.apply(s3) == neg(s3) &&
         f.apply(s1) == s1 && f.apply(s2) == s3 && f.apply(s3) == s2 &&
         n.apply(s1) == neg(s1) && n.apply(s2) == neg(s2) && n.apply(s3) == neg(s3);
}

bool is_simple_group(const std::vector<MonMap> &gens, const KeySet &elems)
{
  if (elems.size() < 2)
    return false;
  std::unordered_set<std::uint64_t> assigned;
  std::uint64_t id = MonMap::identity().key();
  assigned.insert(id);
  for (std::uint64_t rep : elems.elems) {
    if (assigned.count(rep))
      continue;
    // Conjugacy class of rep; every nontrivial class must normally generate
    // the whole group.
    std::vector<std::uint64_t> frontier = {rep};
    std::unordered_set<std::uint64_t> cls = {rep};
    while (!frontier.empty()) {
      std::vector<std::uint64_t> next;
      for (std::uint64_t k : frontier) {
        MonMap x = MonMap::from_key(k);
        for (const MonMap &a : gens) {
          std::uint64_t y = a.after(x).after(a.inverse()).key();
          if (cls.insert(y).second)
            next.push_back(y);
        }
      }
      frontier = std::move(next);
    }
    assigned.insert(cls.begin(), cls.end());
    if (normal_closure(gens, {MonMap::from_key(rep)}).size() != elems.size())
      return false;
  }
  return true;
}

namespace {

// Coset multiplication table of group/normal, or empty on failure.
std::vector<std::vector<int>> coset_table(const std::vector<MonMap> &gens, const KeySet &group,
                                          const KeySet &normal)
{
  for (const MonMap &g : gens) {
    MonMap gi = g.inverse();
    for (std::uint64_t k : normal.elems)
      if (!normal.contains(g.after(MonMap::from_key(k)).after(gi).key()))
        return {};
  }
  std::vector<MonMap> reps;
  auto coset_of = [&](const MonMap &x) -> int {
    for (std::size_t j = 0; j < reps.size(); ++j)
      if (normal.contains(reps[j].inverse().after(x).key()))
        return static_cast<int>(j);
    return -1;
  };
  for (std::uint64_t k : group.elems)
    if (coset_of(MonMap::from_key(k)) < 0)
      reps.push_back(MonMap::from_key(k));
  std::vector<std::vector<int>> table(reps.size(), std::vector<int>(reps.size()));
  for (std::size_t a = 0; a < reps.size(); ++a)
    for (std::size_t b = 0; b < reps.size(); ++b)
      table[a][b] = coset_of(reps[a].after(reps[b]));
  return table;
}

int table_element_order(const std::vector<std::vector<int>> &t, int x)
{
  int id = -1;
  // Identity coset: the one with t[e][b] = b for all b.
  for (std::size_t e = 0; e < t.size(); ++e) {
    bool ok = true;
    for (std::size_t b = 0; b < t.size(); ++b)
      if (t[e][b] != static_cast<int>(b))
        ok = false;
    if (ok) {
      id = static_cast<int>(e);
      break;
    }
  }
  int y = x, n = 1;
  while (y != id) {
    y = t[static_cast<std::size_t>(y)][static_cast<std::size_t>(x)];
    ++n;
  }
  return n;
}

} // namespace

bool quotient_is_c2(const std::vector<MonMap> &gens, const KeySet &group, const KeySet &normal)
{
  auto t = coset_table(gens, group, normal);
  return t.size() == 2 && group.size() == 2 * normal.size();
}

bool quotient_is_d8(const std::vector<MonMap> &gens, const KeySet &group, const KeySet &normal)
{
  auto t = coset_table(gens, group, normal);
  if (t.size() != 8 || group.size() != 8 * normal.size())
    return false;
  bool abelian = true;
  for (std::size_t a = 0; a < 8 && abelian; ++a)
    for (std::size_t b = 0; b < 8; ++b)
      if (t[a][b] != t[b][a]) {
        abelian = false;
        break;
      }
  if (abelian)
    return false;
  int order4 = 0;
  for (int x = 0; x < 8; ++x)
    order4 += (table_element_order(t, x) == 4);
  return order4 == 2; // D8 has 2 elements of order 4; Q8 has 6
}

// ---------------------------------------------------------------------------
// Module actions

Todd10 act10_dpar(F9 x, const Todd10 &t)
{
  return {t.a, t.b - f9(t.a) * x,
          f3_sub(f3_add(t.c, f9_trace(x * f9_conj(t.b))), f3_mul(t.a, f9_norm(x)))};
}
Todd10 act10_sbk(F9 u, const Todd10 &t) { return {t.a, u * t.b, f3_mul(f9_norm(u), t.c)}; }
Todd10 act10_phi(const Todd10 &t) { return {t.a, f9_conj(t.b), t.c}; }
Todd10 act10_neg(const Todd10 &t) { return {f3_neg(t.a), -t.b, f3_neg(t.c)}; }

Todd11 act11_dpar(F9 x, const Todd11 &t)
{
  return {t.a, t.b - f9(t.a) * x, t.c + t.b * x + f9(t.a) * x * x};
}
Todd11 act11_sbk(F9 u, const Todd11 &t) { return {t.a, u * t.b, u * u * t.c}; }
Todd11 act11_phi(const Todd11 &t) { return {t.a, f9_conj(t.b), f9_conj(t.c)}; }
Todd11 act11_neg(const Todd11 &t) { return {f3_neg(t.a), -t.b, -t.c}; }

Todd11Dual act11d_dpar(F9 x, const Todd11Dual &t)
{
  return {t.a, t.b - t.a * x, f3_add(t.c, f9_trace(t.b * x + t.a * x * x))};
}
Todd11Dual act11d_sbk(F9 u, const Todd11Dual &t)
{
  F9 ui = f9_inv(u);
  return {ui * ui * t.a, ui * t.b, t.c};
}
Todd11Dual act11d_phi(const Todd11Dual &t) { return {f9_conj(t.a), f9_conj(t.b), t.c}; }
Todd11Dual act11d_neg(const Todd11Dual &t) { return {-t.a, -t.b, f3_neg(t.c)}; }

// ---------------------------------------------------------------------------
// Quotient maps

namespace {

// Basis of the kappa coordinates on the tetracode plus the extra line: pairs
// (field part, scalar part).
struct BasisVec {
  F9 f;
  F3 r;
};

constexpr int sym_pos(int j, int k)
{
  constexpr int pos[3][3] = {{0, 1, 2}, {1, 3, 4}, {2, 4, 5}};
  return pos[j][k];
}

Todd11 kappa11_pair(const BasisVec &v, const BasisVec &w)
{
  return {f3_mul(v.r, w.r), f9(v.r) * w.f + f9(w.r) * v.f, v.f * w.f};
}

Todd10 kappa10_pair(const BasisVec &v, const BasisVec &w)
{
  return {f3_mul(v.r, w.r), f9(v.r) * w.f + f9(w.r) * v.f, f9_trace(v.f * f9_conj(w.f))};
}

const std::array<BasisVec, 3> &module_basis()
{
  static const std::array<BasisVec, 3> basis = {
      BasisVec{f9(1), 0}, BasisVec{f9_i(), 0}, BasisVec{f9(0), 1}};
  return basis;
}

} // namespace

Todd11 kappa11(const SymMat3 &m)
{
  // m = sum_j m_jj [e_j (x) e_j] + sum_{j<k} 2 m_jk [e_j (x) e_k], since
  // [e_j (x) e_k] maps to the symmetric matrix with 1/2 = 2 at (j,k), (k,j).
  const auto &e = module_basis();
  Todd11 t;
  for (int j = 0; j < 3; ++j)
    for (int k = j; k < 3; ++k) {
      F3 coeff = m.e[static_cast<std::size_t>(sym_pos(j, k))];
      if (j != k)
        coeff = f3_mul(2, coeff);
      Todd11 p = kappa11_pair(e[static_cast<std::size_t>(j)], e[static_cast<std::size_t>(k)]);
      t.a = f3_add(t.a, f3_mul(coeff, p.a));
      t.b = t.b + f9(coeff) * p.b;
      t.c = t.c + f9(coeff) * p.c;
    }
  return t;
}

Todd10 kappa10(const SymMat3 &m)
{
  const auto &e = module_basis();
  Todd10 t;
  for (int j = 0; j < 3; ++j)
    for (int k = j; k < 3; ++k) {
      F3 coeff = m.e[static_cast<std::size_t>(sym_pos(j, k))];
      if (j != k)
        coeff = f3_mul(2, coeff);
      Todd10 p = kappa10_pair(e[static_cast<std::size_t>(j)], e[static_cast<std::size_t>(k)]);
      t.a = f3_add(t.a, f3_mul(coeff, p.a));
      t.b = t.b + f9(coeff) * p.b;
      t.c = f3_add(t.c, f3_mul(coeff, p.c));
    }
  return t;
}

F3 todd_pair(const Todd11Dual &x, const Todd11 &y)
{
  // <[a,b,z],[y0,c,d]> = y0 z + Tr(a d + b c)
  return f3_add(f3_mul(y.a, x.c), f9_trace(x.a * y.c + x.b * y.b));
}

std::vector<Todd10> todd10_all()
{
  std::vector<Todd10> out;
  for (F3 a = 0; a < 3; ++a)
    for (F9 b : f9_all())
      for (F3 c = 0; c < 3; ++c)
        out.push_back({a, b, c});
  return out;
}

std::vector<Todd11> todd11_all()
{
  std::vector<Todd11> out;
  for (F3 a = 0; a < 3; ++a)
    for (F9 b : f9_all())
      for (F9 c : f9_all())
        out.push_back({a, b, c});
  return out;
}

std::vector<Todd11Dual> todd11dual_all()
{
  std::vector<Todd11Dual> out;
  for (F9 a : f9_all())
    for (F9 b : f9_all())
      for (F3 c = 0; c < 3; ++c)
        out.push_back({a, b, c});
  return out;
}

// ---------------------------------------------------------------------------
// Equivariance checks

namespace {

template <class Module, class Map, class Act>
bool check_equivariance(Map quot, const MonMap &g, Act act)
{
  const Mat12 &d = mat12_data();
  for (const DeltaVec &v : d.code.codewords) {
    Module lhs = quot(d.phi.apply(g.apply(v)));
    Module rhs = act(quot(d.phi.apply(v)));
    if (!(lhs == rhs))
      return false;
  }
  return true;
}

} // namespace

bool check_todd10_equivariance()
{
  for (F9 x : f9_all())
    if (!check_equivariance<Todd10>(kappa10, dpar(x),
                                    [&](const Todd10 &t) { return act10_dpar(x, t); }))
      return false;
  for (F9 u : f9_units())
    if (!check_equivariance<Todd10>(kappa10, sbk(u),
                                    [&](const Todd10 &t) { return act10_sbk(u, t); }))
      return false;
  return check_equivariance<Todd10>(kappa10, sbk_phi(), act10_phi) &&
         check_equivariance<Todd10>(kappa10, MonMap::neg_identity(), act10_neg);
}

bool check_todd11_equivariance()
{
  for (F9 x : f9_all())
    if (!check_equivariance<Todd11>(kappa11, dpar(x),
                                    [&](const Todd11 &t) { return act11_dpar(x, t); }))
      return false;
  for (F9 u : f9_units())
    if (!check_equivariance<Todd11>(kappa11, sbk(u),
                                    [&](const Todd11 &t) { return act11_sbk(u, t); }))
      return false;
  return check_equivariance<Todd11>(kappa11, sbk_phi(), act11_phi) &&
         check_equivariance<Todd11>(kappa11, MonMap::neg_identity(), act11_neg);
}

bool check_todd_pairing()
{
  auto duals = todd11dual_all();
  auto mods = todd11_all();

  // Nondegenerate: no nonzero element pairs to zero with everything.
  for (const Todd11Dual &x : duals) {
    if (x == Todd11Dual{})
      continue;
    bool all_zero = true;
    for (const Todd11 &y : mods)
      if (todd_pair(x, y) != 0) {
        all_zero = false;
        break;
      }
    if (all_zero)
      return false;
  }
  for (const Todd11 &y : mods) {
    if (y == Todd11{})
      continue;
    bool all_zero = true;
    for (const Todd11Dual &x : duals)
      if (todd_pair(x, y) != 0) {
        all_zero = false;
        break;
      }
    if (all_zero)
      return false;
  }

  // <g x, y> = <x, g^{-1} y> for each generator of Nhat.
  auto contra = [&](auto act_dual, auto act_inv) {
    for (const Todd11Dual &x : duals)
      for (const Todd11 &y : mods)
        if (todd_pair(act_dual(x), y) != todd_pair(x, act_inv(y)))
          return false;
    return true;
  };
  for (F9 t : f9_all())
    if (!contra([&](const Todd11Dual &x) { return act11d_dpar(t, x); },
                [&](const Todd11 &y) { return act11_dpar(-t, y); }))
      return false;
  for (F9 u : f9_units())
    if (!contra([&](const Todd11Dual &x) { return act11d_sbk(u, x); },
                [&](const Todd11 &y) { return act11_sbk(f9_inv(u), y); }))
      return false;
  return contra([](const Todd11Dual &x) { return act11d_phi(x); },
                [](const Todd11 &y) { return act11_phi(y); }) &&
         contra([](const Todd11Dual &x) { return act11d_neg(x); },
                [](const Todd11 &y) { return act11_neg(y); });
}

} // namespace gt
