#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gt/gf.hpp"

using namespace gt;

TEST_CASE("GF(3) arithmetic")
{
  for (F3 x = 0; x < 3; ++x) {
    CHECK(f3_add(x, f3_neg(x)) == 0);
    CHECK(f3_sub(x, x) == 0);
    if (x != 0)
      CHECK(f3_mul(x, f3_inv(x)) == 1);
    for (F3 y = 0; y < 3; ++y) {
      CHECK(f3_add(x, y) == f3_add(y, x));
      CHECK(f3_mul(x, y) == f3_mul(y, x));
      CHECK(f3_sub(x, y) == f3_add(x, f3_neg(y)));
    }
  }
  CHECK_THROWS(f3_inv(0));
}

TEST_CASE("GF(9) field axioms, exhaustive")
{
  for (F9 x : f9_all())
    for (F9 y : f9_all()) {
      CHECK(x + y == y + x);
      CHECK(x * y == y * x);
      CHECK(x - y == x + (-y));
      for (F9 z : f9_all()) {
        CHECK((x + y) + z == x + (y + z));
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
      }
    }
  for (F9 x : f9_units())
    CHECK(x * f9_inv(x) == f9(1));
}

TEST_CASE("GF(9) structure constants")
{
  CHECK(f9_i() * f9_i() == -f9(1));
  CHECK(f9_mult_order(f9_zeta()) == 8);
  CHECK(f9_zeta() == f9(1) + f9_i());

  for (F9 x : f9_all()) {
    // Frobenius is x -> x^3.
    CHECK(f9_conj(x) == f9_pow(x, 3));
    CHECK(f9(f9_norm(x)) == x * f9_conj(x));
    CHECK(f9(f9_trace(x)) == x + f9_conj(x));
  }

  // Conjugation is a field automorphism.
  for (F9 x : f9_all())
    for (F9 y : f9_all()) {
      CHECK(f9_conj(x + y) == f9_conj(x) + f9_conj(y));
      CHECK(f9_conj(x * y) == f9_conj(x) * f9_conj(y));
    }

  // N(x + y) = N(x) + N(y) + Tr(conj(x) * y).
  for (F9 x : f9_all())
    for (F9 y : f9_all())
      CHECK(f9_norm(x + y) ==
            f3_add(f3_add(f9_norm(x), f9_norm(y)), f9_trace(f9_conj(x) * y)));
}

TEST_CASE("index round trips")
{
  for (int k = 0; k < 9; ++k)
    CHECK(f9_index(f9_from_index(k)) == k);
  CHECK(to_string(f9(0)) == "0");
  CHECK(to_string(f9(2, 1)) == "2+i");
  CHECK(to_string(f9(0, 2)) == "2i");
}
