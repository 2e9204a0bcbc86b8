// The tetracode, the length-12 ternary Golay code and its presentation by
// column vectors C_i and graph vectors Gr(xi), and the linear identification
// of the code with the symmetric 3x3 matrices over GF(3).
//
// Coordinates: the 12 positions are pairs (c, i) with c in F3 and i in
// {1,2,3,4}, laid out as idx(c, i) = 3*(i-1) + c.  All serialization uses
// this order.

#pragma once

#include "gt/gf.hpp"
#include "gt/linalg.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace gt {

using TetraWord = std::array<F3, 4>; // value at column i is word[i-1]
using DeltaVec = std::array<F3, 12>;

inline int delta_idx(F3 c, int i) { return 3 * (i - 1) + c; }

inline DeltaVec delta_add(const DeltaVec &x, const DeltaVec &y)
{
  DeltaVec r{};
  for (int k = 0; k < 12; ++k)
    r[k] = f3_add(x[k], y[k]);
  return r;
}

inline DeltaVec delta_sub(const DeltaVec &x, const DeltaVec &y)
{
  DeltaVec r{};
  for (int k = 0; k < 12; ++k)
    r[k] = f3_sub(x[k], y[k]);
  return r;
}

inline DeltaVec delta_neg(const DeltaVec &x)
{
  DeltaVec r{};
  for (int k = 0; k < 12; ++k)
    r[k] = f3_neg(x[k]);
  return r;
}

inline DeltaVec delta_scale(F3 s, const DeltaVec &x)
{
  DeltaVec r{};
  for (int k = 0; k < 12; ++k)
    r[k] = f3_mul(s, x[k]);
  return r;
}

inline F3 delta_dot(const DeltaVec &x, const DeltaVec &y)
{
  int s = 0;
  for (int k = 0; k < 12; ++k)
    s += x[k] * y[k];
  return static_cast<F3>(s % 3);
}

inline int delta_weight(const DeltaVec &x)
{
  int w = 0;
  for (F3 c : x)
    w += (c != 0);
  return w;
}

inline bool delta_is_zero(const DeltaVec &x)
{
  for (F3 c : x)
    if (c != 0)
      return false;
  return true;
}

inline VecF3 delta_to_vec(const DeltaVec &x) { return VecF3(x.begin(), x.end()); }

inline std::string delta_to_string(const DeltaVec &x)
{
  std::string s(12, '0');
  for (int k = 0; k < 12; ++k)
    s[k] = static_cast<char>('0' + x[k]);
  return s;
}

// ---------------------------------------------------------------------------
// Tetracode

inline TetraWord tetra_word(F3 a, F3 b)
{
  return {a, b, f3_add(b, a), f3_add(b, f3_mul(2, a))};
}

inline TetraWord tetra_add(const TetraWord &x, const TetraWord &y)
{
  TetraWord r{};
  for (int k = 0; k < 4; ++k)
    r[k] = f3_add(x[k], y[k]);
  return r;
}

inline TetraWord tetra_neg(const TetraWord &x)
{
  TetraWord r{};
  for (int k = 0; k < 4; ++k)
    r[k] = f3_neg(x[k]);
  return r;
}

inline bool tetra_is_member(const TetraWord &w)
{
  return w[2] == f3_add(w[1], w[0]) && w[3] == f3_add(w[1], f3_mul(2, w[0]));
}

// All 9 words, indexed consistently with the (a, b) parameters.
inline const std::array<TetraWord, 9> &tetracode()
{
  static const std::array<TetraWord, 9> words = [] {
    std::array<TetraWord, 9> w{};
    int k = 0;
    for (F3 a = 0; a < 3; ++a)
      for (F3 b = 0; b < 3; ++b)
        w[k++] = tetra_word(a, b);
    return w;
  }();
  return words;
}

// kappa: restriction of a tetracode word to its first two coordinates,
// viewed in F9 via (a, b) -> a + b*i.  This identifies the tetracode with
// the additive group of F9.
inline F9 tetra_kappa(const TetraWord &w) { return F9{w[0], w[1]}; }
inline TetraWord tetra_kappa_inv(F9 x) { return tetra_word(x.re, x.im); }

// The word vanishing at column i whose first nonzero coordinate is 1.
inline TetraWord lambda_word(int i)
{
  for (const TetraWord &w : tetracode()) {
    if (w[i - 1] != 0)
      continue;
    bool zero = true, first_is_one = false;
    for (F3 c : w)
      if (c != 0) {
        zero = false;
        first_is_one = (c == 1);
        break;
      }
    if (!zero && first_is_one)
      return w;
  }
  throw std::logic_error("lambda_word: no word found");
}

// ---------------------------------------------------------------------------
// Generators of the codes

// C_i: sum of the three unit vectors in column i.
inline DeltaVec col_vec(int i)
{
  DeltaVec v{};
  for (F3 c = 0; c < 3; ++c)
    v[delta_idx(c, i)] = 1;
  return v;
}

// Gr(xi): one unit vector per column, at row xi(i).
inline DeltaVec graph_vec(const TetraWord &xi)
{
  DeltaVec v{};
  for (int i = 1; i <= 4; ++i)
    v[delta_idx(xi[i - 1], i)] = 1;
  return v;
}

// ---------------------------------------------------------------------------
// The codes

struct SymMat3 {
  // Entries (0,0),(0,1),(0,2),(1,1),(1,2),(2,2) of a symmetric 3x3 matrix.
  std::array<F3, 6> e{};

  friend bool operator==(const SymMat3 &, const SymMat3 &) = default;

  F3 at(int r, int c) const
  {
    static constexpr int pos[3][3] = {{0, 1, 2}, {1, 3, 4}, {2, 4, 5}};
    return e[pos[r][c]];
  }

  void set(int r, int c, F3 v)
  {
    static constexpr int pos[3][3] = {{0, 1, 2}, {1, 3, 4}, {2, 4, 5}};
    e[pos[r][c]] = v;
  }

  MatF3 to_mat() const
  {
    MatF3 m(3, 3);
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c)
        m.at(r, c) = at(r, c);
    return m;
  }

  static SymMat3 from_mat(const MatF3 &m)
  {
    SymMat3 s;
    for (int r = 0; r < 3; ++r)
      for (int c = r; c < 3; ++c)
        s.set(r, c, m.at(r, c));
    return s;
  }

  static SymMat3 outer(const std::array<F3, 3> &v)
  {
    SymMat3 s;
    for (int r = 0; r < 3; ++r)
      for (int c = r; c < 3; ++c)
        s.set(r, c, f3_mul(v[r], v[c]));
    return s;
  }

  SymMat3 plus(const SymMat3 &o) const
  {
    SymMat3 s;
    for (int k = 0; k < 6; ++k)
      s.e[k] = f3_add(e[k], o.e[k]);
    return s;
  }

  int index() const
  {
    int r = 0;
    for (int k = 0; k < 6; ++k)
      r = r * 3 + e[k];
    return r;
  }

  static SymMat3 from_index(int idx)
  {
    SymMat3 s;
    for (int k = 5; k >= 0; --k) {
      s.e[k] = static_cast<F3>(idx % 3);
      idx /= 3;
    }
    return s;
  }
};

struct GolayCode {
  std::array<DeltaVec, 6> basis;     // C12, C13, C14, gr(xi1), gr(xi2), C1 + Gr(0)
  std::array<DeltaVec, 7> bar_basis; // basis of the 7-dimensional overcode
  std::vector<DeltaVec> codewords;   // all 729, ordered by basis coordinates
  std::array<int, 6> pivot;          // pivot columns of the reduced basis
  std::array<DeltaVec, 6> rref;      // reduced basis for coordinate extraction

  bool contains(const DeltaVec &v) const
  {
    // Self-duality: membership is vanishing of the six basis inner products,
    // plus membership in the span of the pivot structure.  Because the code
    // equals its own dual, the inner products alone characterize membership.
    for (const DeltaVec &b : basis)
      if (delta_dot(v, b) != 0)
        return false;
    return true;
  }

  std::array<F3, 6> coords(const DeltaVec &v) const
  {
    std::array<F3, 6> c{};
    for (int k = 0; k < 6; ++k)
      c[k] = v[pivot[k]];
    return c;
  }

  DeltaVec from_coords(const std::array<F3, 6> &c) const
  {
    DeltaVec v{};
    for (int k = 0; k < 6; ++k)
      v = delta_add(v, delta_scale(c[k], rref[k]));
    return v;
  }

  int codeword_index(const DeltaVec &v) const
  {
    auto c = coords(v);
    int r = 0;
    for (int k = 0; k < 6; ++k)
      r = r * 3 + c[k];
    return r;
  }
};

GolayCode build_golay();

// dim of the span of { C_i } u { Gr(xi) } and related data for the overcode.
int golay_bar_dimension();

// Weight enumerator as a map weight -> count over all 729 codewords.
std::array<int, 13> golay_weight_enumerator(const GolayCode &code);

// Checks Gr(xi) + Gr(eta) + Gr(theta) = sum of C_i over columns where xi and
// eta differ, for all 81 pairs (theta = -xi-eta).
bool check_graph_relation();

// ---------------------------------------------------------------------------
// The identification Phi of the code with Sym_3(F3)

struct PhiIso {
  const GolayCode *code = nullptr;
  std::array<SymMat3, 6> basis_image; // Phi on the 6 reduced basis vectors
  std::array<DeltaVec, 6> preimage;   // Phi^{-1} on the 6 elementary symmetric units

  SymMat3 apply(const DeltaVec &v) const
  {
    auto c = code->coords(v);
    SymMat3 s;
    for (int k = 0; k < 6; ++k)
      for (int j = 0; j < 6; ++j)
        s.e[j] = f3_add(s.e[j], f3_mul(c[k], basis_image[k].e[j]));
    return s;
  }

  DeltaVec invert(const SymMat3 &s) const
  {
    DeltaVec v{};
    for (int k = 0; k < 6; ++k)
      v = delta_add(v, delta_scale(s.e[k], preimage[k]));
    return v;
  }
};

// Builds Phi from the images of C_i and Gr(xi); sign_mask selects the signs
// of the four lambda words (bit i-1 set means use -lambda(i)), which must not
// change the map.
PhiIso phi_iso(const GolayCode &code, unsigned sign_mask = 0);

// Images of the spanning vectors of the overcode under the defining recipe.
SymMat3 phi_col_image(int i, unsigned sign_mask = 0);
SymMat3 phi_graph_image(const TetraWord &xi);

// True if the defining recipe is a well-defined linear map on the overcode
// (each spanning vector's image agrees with the linear extension from a
// basis).
bool phi_well_defined(const GolayCode &code, unsigned sign_mask = 0);

} // namespace gt
