#include "gt/strongemb.hpp"

#include "gt/mathieu.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

namespace gt {

// ---------------------------------------------------------------------------
// Views

std::uint64_t FiniteGroupView::inv(std::uint64_t k) const
{
  if (k == id)
    return id;
  std::uint64_t prev = k, y = mul(k, k);
  while (y != id) {
    prev = y;
    y = mul(y, k);
  }
  return prev;
}

int FiniteGroupView::order(std::uint64_t k) const
{
  int o = 1;
  std::uint64_t y = k;
  while (y != id) {
    y = mul(y, k);
    ++o;
    if (o > 1 << 20)
      throw std::logic_error("FiniteGroupView::order: runaway");
  }
  return o;
}

FiniteGroupView make_view(int p, std::uint64_t id, std::vector<std::uint64_t> elems,
                          std::vector<std::uint64_t> gens,
                          std::function<std::uint64_t(std::uint64_t, std::uint64_t)> mul)
{
  FiniteGroupView v;
  v.p = p;
  v.id = id;
  v.elems = std::move(elems);
  std::sort(v.elems.begin(), v.elems.end());
  v.gens = std::move(gens);
  v.mul = std::move(mul);
  v.lookup.insert(v.elems.begin(), v.elems.end());
  if (!v.contains(id))
    throw std::invalid_argument("make_view: identity not in element set");
  return v;
}

FiniteGroupView view_e9()
{
  auto mul = [](std::uint64_t a, std::uint64_t b) {
    return static_cast<std::uint64_t>((a + b) % 3 + (a / 3 + b / 3) % 3 * 3);
  };
  std::vector<std::uint64_t> elems(9);
  std::iota(elems.begin(), elems.end(), 0);
  return make_view(3, 0, elems, {1, 3}, mul);
}

// 4x4 blow-up of a 2x2 matrix over F9, basis (1, i) per coordinate.
static MatF3 blow2(const std::array<F9, 4> &m)
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

static const SpGroup &sl29_gl4()
{
  static SpGroup g = [] {
    std::vector<MatF3> gens = {blow2({f9(1), f9(1), f9(0), f9(1)}),
                               blow2({f9(1), f9_i(), f9(0), f9(1)}),
                               blow2({f9(1), f9(0), f9(1), f9(1)}),
                               blow2({f9(1), f9(0), f9_i(), f9(1)})};
    SpGroup h = sp_closure(gens, 1024);
    if (h.size() != 720)
      throw std::logic_error("sl29_gl4: wrong order");
    return h;
  }();
  return g;
}

static std::uint64_t gl4_mul(std::uint64_t a, std::uint64_t b)
{
  return sp_key(mat_mul(sp_unkey(static_cast<SpKey>(a)), sp_unkey(static_cast<SpKey>(b))));
}

FiniteGroupView view_sl29()
{
  const SpGroup &g = sl29_gl4();
  std::vector<std::uint64_t> elems(g.elems.begin(), g.elems.end());
  std::vector<std::uint64_t> gens;
  for (const MatF3 &m : g.gens)
    gens.push_back(sp_key(m));
  return make_view(3, sp_key(MatF3::identity(4)), elems, gens, gl4_mul);
}

static std::uint64_t psl_canon(std::uint64_t k)
{
  return std::min<std::uint64_t>(k, sp_key(mat_neg(sp_unkey(static_cast<SpKey>(k)))));
}

static std::uint64_t psl_mul(std::uint64_t a, std::uint64_t b) { return psl_canon(gl4_mul(a, b)); }

FiniteGroupView view_psl29()
{
  const SpGroup &g = sl29_gl4();
  std::set<std::uint64_t> elems;
  for (SpKey k : g.elems)
    elems.insert(psl_canon(k));
  std::vector<std::uint64_t> gens;
  for (const MatF3 &m : g.gens)
    gens.push_back(psl_canon(sp_key(m)));
  return make_view(3, psl_canon(sp_key(MatF3::identity(4))),
                   std::vector<std::uint64_t>(elems.begin(), elems.end()), gens, psl_mul);
}

FiniteGroupView view_a6xc2()
{
  FiniteGroupView a6 = view_psl29();
  auto mul = [m = a6.mul](std::uint64_t a, std::uint64_t b) {
    return m(a >> 1, b >> 1) << 1 | ((a ^ b) & 1);
  };
  std::vector<std::uint64_t> elems, gens;
  for (std::uint64_t k : a6.elems) {
    elems.push_back(k << 1);
    elems.push_back(k << 1 | 1);
  }
  for (std::uint64_t k : a6.gens)
    gens.push_back(k << 1);
  gens.push_back(a6.id << 1 | 1);
  return make_view(3, a6.id << 1, elems, gens, mul);
}

FiniteGroupView view_psl29_sq()
{
  FiniteGroupView a6 = view_psl29();
  auto mul = [m = a6.mul](std::uint64_t a, std::uint64_t b) {
    return m(a >> 32, b >> 32) << 32 | m(a & 0xffffffffu, b & 0xffffffffu);
  };
  std::vector<std::uint64_t> elems, gens;
  elems.reserve(a6.size() * a6.size());
  for (std::uint64_t x : a6.elems)
    for (std::uint64_t y : a6.elems)
      elems.push_back(x << 32 | y);
  for (std::uint64_t k : a6.gens) {
    gens.push_back(k << 32 | a6.id);
    gens.push_back(a6.id << 32 | k);
  }
  return make_view(3, a6.id << 32 | a6.id, elems, gens, mul);
}

FiniteGroupView view_sp43()
{
  const Sp4Data &d = sp4_data();
  std::vector<std::uint64_t> elems(d.sp.elems.begin(), d.sp.elems.end());
  std::vector<std::uint64_t> gens;
  for (const MatF3 &m : d.sp.gens)
    gens.push_back(sp_key(m));
  return make_view(3, sp_key(MatF3::identity(4)), elems, gens, gl4_mul);
}

FiniteGroupView view_monomial(const std::vector<std::uint64_t> &elems,
                              const std::vector<std::uint64_t> &gens)
{
  return make_view(3, MonMap::identity().key(), elems, gens, mon_mul_key);
}

// ---------------------------------------------------------------------------
// Sylow enumeration

namespace {

struct ViewSubgroup {
  std::vector<std::uint64_t> elems; // sorted
  std::vector<std::uint64_t> gens;
  std::unordered_set<std::uint64_t> lookup;

  bool contains(std::uint64_t k) const { return lookup.count(k) != 0; }
};

ViewSubgroup view_closure(const FiniteGroupView &g, std::vector<std::uint64_t> gens,
                          std::size_t cap)
{
  ViewSubgroup h;
  h.gens = gens;
  h.lookup.insert(g.id);
  std::vector<std::uint64_t> frontier = {g.id};
  while (!frontier.empty()) {
    std::uint64_t x = frontier.back();
    frontier.pop_back();
    for (std::uint64_t s : h.gens) {
      std::uint64_t y = g.mul(x, s);
      if (h.lookup.insert(y).second) {
        if (h.lookup.size() > cap)
          throw std::runtime_error("view_closure: cap exceeded");
        frontier.push_back(y);
      }
    }
  }
  h.elems.assign(h.lookup.begin(), h.lookup.end());
  std::sort(h.elems.begin(), h.elems.end());
  return h;
}

// Inverse and order of every element in one pass each.
struct ViewTables {
  std::unordered_map<std::uint64_t, std::uint64_t> inv;
  std::unordered_map<std::uint64_t, int> ord;
};

ViewTables view_tables(const FiniteGroupView &g)
{
  ViewTables t;
  t.inv.reserve(g.size());
  t.ord.reserve(g.size());
  for (std::uint64_t k : g.elems) {
    std::uint64_t prev = g.id, y = k;
    int o = 1;
    while (y != g.id) {
      prev = y;
      y = g.mul(y, k);
      ++o;
    }
    t.inv[k] = (k == g.id) ? g.id : prev;
    t.ord[k] = (k == g.id) ? 1 : o;
  }
  return t;
}

bool is_p_power(int n, int p)
{
  while (n % p == 0)
    n /= p;
  return n == 1;
}

} // namespace

SylowSystem sylow_p(const FiniteGroupView &g)
{
  std::size_t q = 1, n = g.size();
  while (n % static_cast<std::size_t>(g.p) == 0) {
    n /= static_cast<std::size_t>(g.p);
    q *= static_cast<std::size_t>(g.p);
  }
  if (q == 1)
    throw std::invalid_argument("sylow_p: p does not divide the group order");

  ViewTables t = view_tables(g);

  // seed with an element of order p
  std::uint64_t seed = g.id;
  for (std::uint64_t k : g.elems)
    if (t.ord[k] % g.p == 0) {
      int e = t.ord[k] / g.p;
      std::uint64_t y = k;
      for (int i = 1; i < e; ++i)
        y = g.mul(y, k);
      seed = y;
      break;
    }
  ViewSubgroup syl = view_closure(g, {seed}, q);

  while (syl.elems.size() < q) {
    // normalizer climb: any p-element of N(P) outside P enlarges P
    std::uint64_t grow = 0;
    bool found = false;
    for (std::uint64_t k : g.elems) {
      if (!is_p_power(t.ord[k], g.p) || syl.contains(k))
        continue;
      bool normalizes = true;
      for (std::uint64_t s : syl.gens)
        if (!syl.contains(g.mul(g.mul(k, s), t.inv[k]))) {
          normalizes = false;
          break;
        }
      if (normalizes) {
        grow = k;
        found = true;
        break;
      }
    }
    if (!found)
      throw std::logic_error("sylow_p: climb stalled below the Sylow order");
    std::vector<std::uint64_t> gens = syl.gens;
    gens.push_back(grow);
    ViewSubgroup bigger = view_closure(g, gens, q);
    if (bigger.elems.size() <= syl.elems.size())
      throw std::logic_error("sylow_p: climb did not grow");
    syl = std::move(bigger);
  }

  // conjugation orbit of the Sylow
  SylowSystem sys;
  sys.sylow_order = q;
  std::set<std::vector<std::uint64_t>> seen;
  std::vector<ViewSubgroup> frontier = {syl};
  seen.insert(syl.elems);
  while (!frontier.empty()) {
    ViewSubgroup cur = frontier.back();
    frontier.pop_back();
    for (std::uint64_t h : g.gens) {
      std::vector<std::uint64_t> conj_gens;
      for (std::uint64_t s : cur.gens)
        conj_gens.push_back(g.mul(g.mul(h, s), t.inv[h]));
      ViewSubgroup img = view_closure(g, conj_gens, q);
      if (img.elems.size() != q)
        throw std::logic_error("sylow_p: conjugate has wrong order");
      if (seen.insert(img.elems).second)
        frontier.push_back(img);
    }
  }
  for (const auto &s : seen)
    sys.sylows.push_back(s);
  if (sys.sylows.size() % static_cast<std::size_t>(g.p) != 1)
    throw std::logic_error("sylow_p: count not 1 mod p");

  std::unordered_set<std::uint64_t> covered;
  for (const auto &s : sys.sylows)
    covered.insert(s.begin(), s.end());
  sys.covers_p_elements = true;
  for (std::uint64_t k : g.elems)
    if (is_p_power(t.ord[k], g.p) && !covered.count(k))
      sys.covers_p_elements = false;
  return sys;
}

IsolationResult has_strongly_p_embedded(const FiniteGroupView &g)
{
  if (g.size() % static_cast<std::size_t>(g.p) != 0)
    throw std::invalid_argument("has_strongly_p_embedded: p does not divide |G|");
  SylowSystem sys = sylow_p(g);
  IsolationResult res;
  res.sylow_count = sys.sylows.size();
  if (res.sylow_count == 1) {
    res.components = 1;
    return res;
  }

  // union-find over Sylows; edges at intersections of order divisible by p
  std::vector<std::size_t> parent(res.sylow_count);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    while (parent[x] != x)
      x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < res.sylow_count; ++i)
    for (std::size_t j = i + 1; j < res.sylow_count; ++j) {
      std::vector<std::uint64_t> meet;
      std::set_intersection(sys.sylows[i].begin(), sys.sylows[i].end(), sys.sylows[j].begin(),
                            sys.sylows[j].end(), std::back_inserter(meet));
      if (meet.size() > 1)
        parent[find(i)] = find(j);
    }
  std::set<std::size_t> roots;
  for (std::size_t i = 0; i < res.sylow_count; ++i)
    roots.insert(find(i));
  res.components = roots.size();
  res.strongly_embedded = res.components > 1;
  if (!res.strongly_embedded)
    return res;

  // witness: stabilizer of the component of the first Sylow
  std::map<std::vector<std::uint64_t>, std::size_t> index_of;
  for (std::size_t i = 0; i < res.sylow_count; ++i)
    index_of[sys.sylows[i]] = i;
  ViewTables t = view_tables(g);
  std::size_t comp0 = find(0);
  for (std::uint64_t k : g.elems) {
    std::vector<std::uint64_t> img;
    img.reserve(sys.sylows[0].size());
    for (std::uint64_t s : sys.sylows[0])
      img.push_back(g.mul(g.mul(k, s), t.inv[k]));
    std::sort(img.begin(), img.end());
    auto it = index_of.find(img);
    if (it == index_of.end())
      throw std::logic_error("has_strongly_p_embedded: conjugate not a Sylow");
    if (find(it->second) == comp0)
      res.witness.push_back(k);
  }
  return res;
}

bool strongly_embedded_direct(const FiniteGroupView &g, const std::vector<std::uint64_t> &h)
{
  if (h.size() >= g.size() || h.size() % static_cast<std::size_t>(g.p) != 0)
    return false;
  std::unordered_set<std::uint64_t> hset(h.begin(), h.end());
  std::vector<std::uint64_t> p_elems;
  ViewTables t = view_tables(g);
  for (std::uint64_t k : h)
    if (k != g.id && is_p_power(t.ord[k], g.p))
      p_elems.push_back(k);
  if (p_elems.empty())
    return false;
  for (std::uint64_t k : g.elems) {
    if (hset.count(k))
      continue;
    for (std::uint64_t x : p_elems)
      if (hset.count(g.mul(g.mul(t.inv[k], x), k)))
        return false;
  }
  return true;
}

ReductionReport reduction_lemma_tests()
{
  ReductionReport rep;
  const MathieuData &md = mathieu_data();

  auto keys_of = [](const std::vector<MonMap> &ms) {
    std::vector<std::uint64_t> ks;
    for (const MonMap &m : ms)
      ks.push_back(m.key());
    return ks;
  };

  FiniteGroupView e9 = view_e9();
  FiniteGroupView sl29 = view_sl29();
  FiniteGroupView a6 = view_psl29();
  FiniteGroupView a6c2 = view_a6xc2();
  FiniteGroupView m011 = view_monomial(md.M0_11.elems, keys_of(md.M0_11_gens));
  FiniteGroupView twoM11 = view_monomial(md.twoM11.elems, keys_of(md.twoM11_gens));
  FiniteGroupView m010 = view_monomial(md.M0_10.elems, keys_of(md.M0_10_gens));
  FiniteGroupView twoM10 = view_monomial(md.twoM10.elems, keys_of(md.twoM10_gens));

  SylowSystem se9 = sylow_p(e9), ssl = sylow_p(sl29), sm11 = sylow_p(m011);
  rep.e9_sylows = se9.sylows.size();
  rep.sl29_sylows = ssl.sylows.size();
  rep.m011_sylows = sm11.sylows.size();
  rep.all_systems_cover =
      se9.covers_p_elements && ssl.covers_p_elements && sm11.covers_p_elements;

  IsolationResult rsl = has_strongly_p_embedded(sl29);
  IsolationResult ra6 = has_strongly_p_embedded(a6);
  IsolationResult rm011 = has_strongly_p_embedded(m011);
  IsolationResult r2m11 = has_strongly_p_embedded(twoM11);
  IsolationResult rm010 = has_strongly_p_embedded(m010);
  IsolationResult r2m10 = has_strongly_p_embedded(twoM10);
  IsolationResult ra6c2 = has_strongly_p_embedded(a6c2);
  IsolationResult rsp = has_strongly_p_embedded(view_sp43());
  IsolationResult rsq = has_strongly_p_embedded(view_psl29_sq());

  rep.sl29_true = rsl.strongly_embedded;
  rep.psl29_true = ra6.strongly_embedded;
  rep.m011_true = rm011.strongly_embedded;
  rep.twoM11_true = r2m11.strongly_embedded;
  rep.m010_true = rm010.strongly_embedded;
  rep.twoM10_true = r2m10.strongly_embedded;
  rep.a6xc2_true = ra6c2.strongly_embedded;
  rep.sp43_false = !rsp.strongly_embedded;
  rep.psl29_sq_false = !rsq.strongly_embedded;

  rep.pair_m11_agree = r2m11.strongly_embedded == rm011.strongly_embedded;
  rep.pair_m10_agree = r2m10.strongly_embedded == rm010.strongly_embedded;
  rep.quotient_agrees = ra6c2.strongly_embedded == ra6.strongly_embedded;

  // the isolation witnesses satisfy the direct definition
  rep.witnesses_direct = true;
  struct Positive {
    const FiniteGroupView *g;
    const IsolationResult *r;
  };
  const Positive positives[] = {{&sl29, &rsl}, {&a6, &ra6},       {&m011, &rm011},
                                {&twoM11, &r2m11}, {&m010, &rm010}, {&twoM10, &r2m10},
                                {&a6c2, &ra6c2}};
  for (const Positive &pc : positives)
    if (!pc.r->strongly_embedded ||
        !strongly_embedded_direct(*pc.g, pc.r->witness))
      rep.witnesses_direct = false;

  // every proper overgroup of a witness is again strongly embedded
  rep.monotone_or_maximal = true;
  for (const Positive &pc : positives) {
    // greedy small generating set of the witness
    std::vector<std::uint64_t> wgens;
    {
      ViewSubgroup cur = view_closure(*pc.g, {pc.g->id}, pc.g->size());
      for (std::uint64_t k : pc.r->witness) {
        if (cur.contains(k))
          continue;
        wgens.push_back(k);
        cur = view_closure(*pc.g, wgens, pc.g->size());
        if (cur.elems.size() == pc.r->witness.size())
          break;
      }
    }
    std::unordered_set<std::uint64_t> w(pc.r->witness.begin(), pc.r->witness.end());
    int tried = 0;
    for (std::uint64_t x : pc.g->elems) {
      if (w.count(x))
        continue;
      if (++tried > 8)
        break;
      std::vector<std::uint64_t> gens = wgens;
      gens.push_back(x);
      ViewSubgroup over = view_closure(*pc.g, gens, pc.g->size());
      if (over.elems.size() == pc.g->size())
        continue; // x generates the whole group on top of the witness
      if (!strongly_embedded_direct(*pc.g, over.elems))
        rep.monotone_or_maximal = false;
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Chain lemmas in the semidirect-product engine

static void validate_chain(const ChainDatum &d, bool need_frattini)
{
  if (!d.s || d.chain.empty())
    throw std::invalid_argument("chain datum: missing group or chain");
  const SmallGroup &g = *d.s;
  if (d.chain.back().members != d.p_sub.members)
    throw std::invalid_argument("chain datum: chain does not end at P");
  for (std::size_t i = 0; i + 1 < d.chain.size(); ++i)
    for (int m : d.chain[i].members)
      if (!d.chain[i + 1].contains(m))
        throw std::invalid_argument("chain datum: chain not nested");
  for (const SubgroupHandle &h : d.chain)
    for (const SGElem &pg : d.p_sub.gens)
      for (int m : h.members)
        if (!h.contains(g.index(g.conj(pg, g.from_index(m)))))
          throw std::invalid_argument("chain datum: term not normal in P");
  if (need_frattini) {
    SubgroupHandle fr = frattini_of(g, d.p_sub);
    for (int m : d.chain.front().members)
      if (!fr.contains(m))
        throw std::invalid_argument("chain datum: P_0 not in the Frattini subgroup");
  }
}

std::vector<int> chain_stabilizing_elements(const ChainDatum &d)
{
  validate_chain(d, false);
  const SmallGroup &g = *d.s;
  std::vector<int> out;
  for (int xi = 0; xi < g.size(); ++xi) {
    SGElem x = g.from_index(xi);
    bool ok = true;
    for (std::size_t i = 1; i < d.chain.size() && ok; ++i)
      for (int m : d.chain[i].members) {
        if (!d.chain[i - 1].contains(g.index(g.commutator(x, g.from_index(m))))) {
          ok = false;
          break;
        }
      }
    if (ok)
      out.push_back(xi);
  }
  return out;
}

bool p_power_order_check(const ChainDatum &d, const std::function<int(int)> &alpha)
{
  validate_chain(d, true);
  const SmallGroup &g = *d.s;
  const std::vector<int> &mem = d.p_sub.members;

  // alpha is a bijection of P and a homomorphism
  std::unordered_map<int, int> img;
  for (int m : mem) {
    int a = alpha(m);
    if (!d.p_sub.contains(a) || !img.emplace(m, a).second)
      throw std::invalid_argument("p_power_order_check: alpha not a map into P");
  }
  std::unordered_set<int> hit;
  for (const auto &[k, v] : img)
    if (!hit.insert(v).second)
      throw std::invalid_argument("p_power_order_check: alpha not injective");
  for (int x : mem)
    for (int y : mem) {
      int xy = g.index(g.mul(g.from_index(x), g.from_index(y)));
      if (img[xy] != g.index(g.mul(g.from_index(img[x]), g.from_index(img[y]))))
        throw std::invalid_argument("p_power_order_check: alpha not multiplicative");
    }

  // chain compatibility [alpha, P_i] <= P_{i-1}
  for (std::size_t i = 1; i < d.chain.size(); ++i)
    for (int m : d.chain[i].members) {
      SGElem diff = g.mul(g.from_index(img[m]), g.inverse(g.from_index(m)));
      if (!d.chain[i - 1].contains(g.index(diff)))
        throw std::invalid_argument("p_power_order_check: chain hypothesis violated");
    }

  // order of alpha as a permutation of P
  std::unordered_map<int, std::size_t> pos;
  for (std::size_t i = 0; i < mem.size(); ++i)
    pos[mem[i]] = i;
  std::vector<std::size_t> perm(mem.size());
  for (std::size_t i = 0; i < mem.size(); ++i)
    perm[i] = pos[img[mem[i]]];
  std::vector<bool> seen(perm.size(), false);
  long long ord = 1;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i])
      continue;
    long long len = 0;
    for (std::size_t j = i; !seen[j]; j = perm[j]) {
      seen[j] = true;
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  while (ord % 3 == 0)
    ord /= 3;
  return ord == 1;
}

// Conjugation action of the module normalizer N_A(P) on P, reported as
// (outer image size, index of the fixed subgroup).
static void filtered_c_data(const SmallGroup &g, const SubgroupHandle &p,
                            std::size_t &outer, std::size_t &fixed_index)
{
  const std::vector<int> &mem = p.members;
  std::unordered_map<int, std::size_t> pos;
  for (std::size_t i = 0; i < mem.size(); ++i)
    pos[mem[i]] = i;

  auto conj_perm = [&](const SGElem &x) {
    std::vector<std::size_t> perm(mem.size());
    for (std::size_t i = 0; i < mem.size(); ++i) {
      int c = g.index(g.conj(x, g.from_index(mem[i])));
      auto it = pos.find(c);
      if (it == pos.end())
        return std::vector<std::size_t>{};
      perm[i] = it->second;
    }
    return perm;
  };

  std::set<std::vector<std::size_t>> t_perms;
  for (int a = 0; a < g.mod_size; ++a) {
    std::vector<std::size_t> perm = conj_perm({a, 0});
    if (!perm.empty())
      t_perms.insert(std::move(perm));
  }
  std::set<std::vector<std::size_t>> inn_perms;
  for (int m : mem)
    inn_perms.insert(conj_perm(g.from_index(m)));

  std::size_t meet = 0;
  for (const auto &perm : t_perms)
    meet += inn_perms.count(perm);
  outer = t_perms.size() / meet;

  std::size_t fixed = 0;
  for (std::size_t i = 0; i < mem.size(); ++i) {
    bool all = true;
    for (const auto &perm : t_perms)
      if (perm[i] != i) {
        all = false;
        break;
      }
    fixed += all;
  }
  fixed_index = mem.size() / fixed;
}

bool essential_obstruction(const ChainDatum &d, ObstructionKind kind)
{
  if (!d.s)
    throw std::invalid_argument("essential_obstruction: missing group");
  const SmallGroup &g = *d.s;

  if (kind == ObstructionKind::filtered_c) {
    std::size_t outer = 0, fixed_index = 0;
    filtered_c_data(g, d.p_sub, outer, fixed_index);
    return outer >= 9 && fixed_index == 3;
  }

  validate_chain(d, kind == ObstructionKind::QcharP);

  if (kind == ObstructionKind::QcharP) {
    if (d.witness < 0)
      throw std::invalid_argument("essential_obstruction: witness required");
    SGElem x = g.from_index(d.witness);
    if (d.p_sub.contains(d.witness))
      return false; // the witness must lie outside P
    for (const SGElem &pg : d.p_sub.gens)
      if (!d.p_sub.contains(g.index(g.conj(x, pg))))
        return false; // and normalize it
    for (std::size_t i = 1; i < d.chain.size(); ++i)
      for (int m : d.chain[i].members)
        if (!d.chain[i - 1].contains(g.index(g.commutator(x, g.from_index(m)))))
          return false;
    return true;
  }

  // filtered_a / filtered_b: elementary abelian quotients of large rank
  int min_rank = kind == ObstructionKind::filtered_a ? 2 : 4;
  for (std::size_t i = 1; i < d.chain.size(); ++i) {
    const SubgroupHandle &hi = d.chain[i];
    const SubgroupHandle &lo = d.chain[i - 1];
    std::size_t ratio = hi.size() / lo.size();
    int rank = 0;
    while (ratio % 3 == 0) {
      ratio /= 3;
      ++rank;
    }
    if (ratio != 1 || rank < min_rank)
      return false;
    for (int x : hi.members) {
      SGElem ex = g.from_index(x);
      SGElem cube = g.mul(g.mul(ex, ex), ex);
      if (!lo.contains(g.index(cube)))
        return false;
      for (int y : hi.members)
        if (!lo.contains(g.index(g.commutator(ex, g.from_index(y)))))
          return false;
    }
  }
  return true;
}

FilteredCInstance filtered_c_m12_instance(const SmallGroup &g)
{
  if (g.kind != PgCase::m12)
    throw std::invalid_argument("filtered_c_m12_instance: matrix case required");
  FilteredCInstance inst;

  SGElem eta0 = eta(0);
  std::vector<SGElem> gens;
  for (int a = 0; a < g.mod_size; ++a) {
    SGElem e{a, 0};
    if (g.mul(e, eta0) == g.mul(eta0, e))
      gens.push_back(e);
  }
  gens.push_back(eta0);
  inst.datum.s = &g;
  inst.datum.p_sub = subgroup(g, gens);
  inst.p_order = inst.datum.p_sub.size();
  filtered_c_data(g, inst.datum.p_sub, inst.outer_order, inst.fixed_index);
  inst.obstructed = essential_obstruction(inst.datum, ObstructionKind::filtered_c);
  return inst;
}

// ---------------------------------------------------------------------------
// Jordan types in GL4(3)

// All isometries of the quadratic form given by qval on F3^dim, by
// backtracking over the images of the basis vectors.
static std::vector<MatF3> orthogonal_group(int dim,
                                           const std::function<F3(const VecF3 &)> &qval)
{
  std::vector<VecF3> vecs;
  int total = 1;
  for (int i = 0; i < dim; ++i)
    total *= 3;
  for (int code = 1; code < total; ++code) {
    VecF3 v(static_cast<std::size_t>(dim), 0);
    int c = code;
    for (int k = 0; k < dim; ++k) {
      v[static_cast<std::size_t>(k)] = static_cast<F3>(c % 3);
      c /= 3;
    }
    vecs.push_back(std::move(v));
  }
  auto polar = [&](const VecF3 &x, const VecF3 &y) {
    return f3_sub(f3_sub(qval(vec_add(x, y)), qval(x)), qval(y));
  };
  std::vector<VecF3> basis;
  for (int i = 0; i < dim; ++i) {
    VecF3 e(static_cast<std::size_t>(dim), 0);
    e[static_cast<std::size_t>(i)] = 1;
    basis.push_back(std::move(e));
  }

  std::vector<MatF3> out;
  std::vector<VecF3> cols;
  std::function<void()> rec = [&]() {
    int at = static_cast<int>(cols.size());
    if (at == dim) {
      MatF3 m(dim, dim);
      for (int c = 0; c < dim; ++c)
        for (int r = 0; r < dim; ++r)
          m.at(r, c) = cols[static_cast<std::size_t>(c)][static_cast<std::size_t>(r)];
      if (mat_det(m) != 0)
        out.push_back(std::move(m));
      return;
    }
    for (const VecF3 &v : vecs) {
      if (qval(v) != qval(basis[static_cast<std::size_t>(at)]))
        continue;
      bool ok = true;
      for (int j = 0; j < at; ++j)
        if (polar(cols[static_cast<std::size_t>(j)], v) !=
            polar(basis[static_cast<std::size_t>(j)], basis[static_cast<std::size_t>(at)])) {
          ok = false;
          break;
        }
      if (!ok)
        continue;
      cols.push_back(v);
      rec();
      cols.pop_back();
    }
  };
  rec();
  return out;
}

namespace {

// generic closure over base-3 packed 3x3 matrices
std::uint32_t m3_key(const MatF3 &m)
{
  std::uint32_t k = 0;
  for (std::size_t i = m.a.size(); i-- > 0;)
    k = k * 3 + m.a[i];
  return k;
}

std::vector<MatF3> m3_closure(const std::vector<MatF3> &gens, std::size_t cap)
{
  std::unordered_set<std::uint32_t> seen;
  std::vector<MatF3> all = {MatF3::identity(gens[0].rows)};
  seen.insert(m3_key(all[0]));
  std::vector<MatF3> frontier = all;
  while (!frontier.empty()) {
    MatF3 m = frontier.back();
    frontier.pop_back();
    for (const MatF3 &h : gens) {
      MatF3 p = mat_mul(m, h);
      if (seen.insert(m3_key(p)).second) {
        if (seen.size() > cap)
          throw std::runtime_error("m3_closure: cap exceeded");
        frontier.push_back(p);
        all.push_back(std::move(p));
      }
    }
  }
  return all;
}

int mat_order(const MatF3 &m)
{
  MatF3 id = MatF3::identity(m.rows);
  MatF3 p = m;
  int o = 1;
  while (!(p == id)) {
    p = mat_mul(p, m);
    ++o;
  }
  return o;
}

// Smallest invariant-subspace dimension witness: true if some nonzero
// vector generates a proper invariant subspace under the generators.
bool has_invariant_line_closure(const std::vector<MatF3> &gens, int dim)
{
  for (const VecF3 &v : projective_points(dim)) {
    std::vector<VecF3> span = {v};
    bool grew = true;
    while (grew && static_cast<int>(span.size()) < dim) {
      grew = false;
      std::vector<VecF3> next = span;
      for (const VecF3 &w : span)
        for (const MatF3 &g : gens)
          next.push_back(mat_apply(g, w));
      MatF3 m = MatF3::from_rows(next);
      int r = mat_rank(m);
      if (r > static_cast<int>(span.size())) {
        // re-extract a basis of the grown span
        row_reduce(m);
        span.clear();
        for (int i = 0; i < r; ++i)
          span.push_back(m.row(i));
        grew = true;
      }
    }
    if (static_cast<int>(span.size()) < dim)
      return true;
  }
  return false;
}

} // namespace

GL4JordanReport gl4_jordan_suite(unsigned seed)
{
  GL4JordanReport rep;

  // (i) SL2(9) inside GL4(3): every order-3 element has Jordan type {2,2}
  const SpGroup &sl = sl29_gl4();
  rep.sl29_order = sl.size();
  rep.sl29_order3_all_22 = true;
  MatF3 id4 = MatF3::identity(4);
  for (SpKey k : sl.elems) {
    MatF3 m = sp_unkey(k);
    if (m == id4 || !(mat_pow(m, 3) == id4))
      continue;
    if (jordan_partition(m) != std::vector<int>{2, 2})
      rep.sl29_order3_all_22 = false;
  }

  // (ii) the minus-type form x1 x2 + x3^2 + x4^2
  auto qminus = [](const VecF3 &x) {
    return f3_add(f3_mul(x[0], x[1]), f3_add(f3_mul(x[2], x[2]), f3_mul(x[3], x[3])));
  };
  rep.minus_form_anisotropic_plane = true;
  for (F3 a = 0; a < 3; ++a)
    for (F3 b = 0; b < 3; ++b)
      if ((a != 0 || b != 0) && f3_add(f3_mul(a, a), f3_mul(b, b)) == 0)
        rep.minus_form_anisotropic_plane = false;

  std::vector<MatF3> omin = orthogonal_group(4, qminus);
  rep.ominus_order = omin.size();
  rep.ominus_order3_all_31 = true;
  std::vector<MatF3> threes;
  for (const MatF3 &m : omin) {
    int o = mat_order(m);
    if (o == 3 && jordan_partition(m) != std::vector<int>{3, 1})
      rep.ominus_order3_all_31 = false;
    if (is_p_power(o, 3) && o > 1)
      threes.push_back(m);
  }
  // the subgroup generated by all 3-elements
  {
    std::unordered_set<std::uint32_t> seen;
    std::vector<MatF3> frontier = {id4};
    auto key4 = [](const MatF3 &m) { return sp_key(m); };
    seen.insert(key4(id4));
    std::vector<MatF3> all = frontier;
    while (!frontier.empty()) {
      MatF3 m = frontier.back();
      frontier.pop_back();
      for (const MatF3 &g : threes) {
        MatF3 p = mat_mul(m, g);
        if (seen.insert(key4(p)).second) {
          frontier.push_back(p);
          all.push_back(std::move(p));
        }
      }
    }
    rep.core_order = all.size();
  }

  // (iii) an order-3 isometry of x1 x2 + x3^2 in dimension 3 is one block
  auto q3 = [](const VecF3 &x) {
    return f3_add(f3_mul(x[0], x[1]), f3_mul(x[2], x[2]));
  };
  std::vector<MatF3> o3 = orthogonal_group(3, q3);
  rep.omega3_block3 = false;
  bool all_blocks3 = true;
  for (const MatF3 &m : o3)
    if (mat_order(m) == 3) {
      if (jordan_partition(m) == std::vector<int>{3})
        rep.omega3_block3 = true;
      else
        all_blocks3 = false;
    }
  rep.omega3_block3 = rep.omega3_block3 && all_blocks3;

  // spot-check in GL3(3): a subgroup generated by two Sylow 3-subgroups is
  // never irreducible with order divisible by 9 unless it is all of SL3(3)
  std::mt19937 rng(seed);
  auto random_invertible = [&] {
    for (;;) {
      MatF3 m(3, 3);
      for (auto &e : m.a)
        e = static_cast<F3>(rng() % 3);
      if (mat_det(m) != 0)
        return m;
    }
  };
  MatF3 u1 = MatF3::identity(3), u2 = MatF3::identity(3);
  u1.at(0, 1) = 1;
  u2.at(1, 2) = 1;
  rep.gl3_trials = 200;
  rep.gl3_spotcheck_ok = true;
  for (int trial = 0; trial < rep.gl3_trials; ++trial) {
    MatF3 h1 = random_invertible(), h2 = random_invertible();
    std::vector<MatF3> gens = {
        mat_mul(mat_mul(h1, u1), mat_inverse(h1)), mat_mul(mat_mul(h1, u2), mat_inverse(h1)),
        mat_mul(mat_mul(h2, u1), mat_inverse(h2)), mat_mul(mat_mul(h2, u2), mat_inverse(h2))};
    std::vector<MatF3> sub = m3_closure(gens, 5617);
    if (sub.size() % 9 != 0)
      continue;
    // reducible if the generators fix a line, or their inverse-transposes do
    std::vector<MatF3> dual;
    for (const MatF3 &g : gens)
      dual.push_back(mat_transpose(mat_inverse(g)));
    bool reducible =
        has_invariant_line_closure(gens, 3) || has_invariant_line_closure(dual, 3);
    if (reducible)
      continue;
    if (sub.size() == 5616)
      ++rep.gl3_full_sl3;
    else
      rep.gl3_spotcheck_ok = false;
  }
  return rep;
}

} // namespace gt
