// Arithmetic in GF(3) and GF(9) = F3[i] with i^2 = -1.
//
// GF(3) elements are plain residues 0,1,2 stored in uint8_t.  GF(9) elements
// are pairs (re, im) representing re + im*i; this is a unique normal form, so
// structural equality and hashing work directly on the pair.

#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace gt {

using F3 = std::uint8_t; // residue in {0,1,2}

inline F3 f3_add(F3 x, F3 y) { return static_cast<F3>((x + y) % 3); }
inline F3 f3_sub(F3 x, F3 y) { return static_cast<F3>((x + 3 - y) % 3); }
inline F3 f3_neg(F3 x) { return static_cast<F3>((3 - x) % 3); }
inline F3 f3_mul(F3 x, F3 y) { return static_cast<F3>((x * y) % 3); }

inline F3 f3_inv(F3 x)
{
  if (x == 0)
    throw std::invalid_argument("f3_inv: zero has no inverse");
  return x; // 1*1 = 1, 2*2 = 4 = 1
}

struct F9 {
  F3 re = 0;
  F3 im = 0;

  friend bool operator==(const F9 &, const F9 &) = default;
  bool is_zero() const { return re == 0 && im == 0; }
};

inline F9 f9(F3 re, F3 im = 0) { return F9{re, im}; }

inline F9 operator+(F9 x, F9 y) { return {f3_add(x.re, y.re), f3_add(x.im, y.im)}; }
inline F9 operator-(F9 x, F9 y) { return {f3_sub(x.re, y.re), f3_sub(x.im, y.im)}; }
inline F9 operator-(F9 x) { return {f3_neg(x.re), f3_neg(x.im)}; }

inline F9 operator*(F9 x, F9 y)
{
  // (a+bi)(c+di) = (ac - bd) + (ad + bc)i
  return {f3_sub(f3_mul(x.re, y.re), f3_mul(x.im, y.im)),
          f3_add(f3_mul(x.re, y.im), f3_mul(x.im, y.re))};
}

inline F9 f9_i() { return {0, 1}; }
inline F9 f9_zeta() { return {1, 1}; } // generator of F9^x, order 8

// Frobenius x -> x^3, i.e. a+bi -> a-bi.
inline F9 f9_conj(F9 x) { return {x.re, f3_neg(x.im)}; }

inline F3 f9_trace(F9 x) { return f3_add(x.re, x.re); } // x + conj(x) = 2*re
inline F3 f9_norm(F9 x)
{
  // x * conj(x) = re^2 + im^2
  return f3_add(f3_mul(x.re, x.re), f3_mul(x.im, x.im));
}

inline F9 f9_inv(F9 x)
{
  if (x.is_zero())
    throw std::invalid_argument("f9_inv: zero has no inverse");
  // 1/x = conj(x)/N(x)
  F3 n = f9_norm(x);
  return f9_conj(x) * f9(f3_inv(n));
}

inline F9 f9_pow(F9 x, int e)
{
  if (e < 0)
    return f9_pow(f9_inv(x), -e);
  F9 r = f9(1);
  for (; e > 0; --e)
    r = r * x;
  return r;
}

inline int f9_mult_order(F9 x)
{
  if (x.is_zero())
    throw std::invalid_argument("f9_mult_order: zero input");
  int n = 1;
  F9 y = x;
  while (!(y == f9(1))) {
    y = y * x;
    ++n;
  }
  return n;
}

// All 9 field elements, in (re, im) lexicographic order.
inline const std::array<F9, 9> &f9_all()
{
  static const std::array<F9, 9> all = [] {
    std::array<F9, 9> a{};
    int k = 0;
    for (F3 re = 0; re < 3; ++re)
      for (F3 im = 0; im < 3; ++im)
        a[k++] = F9{re, im};
    return a;
  }();
  return all;
}

// The 8 nonzero elements.
inline std::array<F9, 8> f9_units()
{
  std::array<F9, 8> u{};
  int k = 0;
  for (F9 x : f9_all())
    if (!x.is_zero())
      u[k++] = x;
  return u;
}

inline int f9_index(F9 x) { return x.re * 3 + x.im; } // rank in f9_all()
inline F9 f9_from_index(int k) { return f9_all()[static_cast<std::size_t>(k)]; }

// Renders "a+bi" with zero terms omitted, "0" for zero.
inline std::string to_string(F9 x)
{
  if (x.is_zero())
    return "0";
  std::string s;
  if (x.re != 0)
    s += static_cast<char>('0' + x.re);
  if (x.im != 0) {
    if (!s.empty())
      s += '+';
    if (x.im != 1)
      s += static_cast<char>('0' + x.im);
    s += 'i';
  }
  return s;
}

} // namespace gt
