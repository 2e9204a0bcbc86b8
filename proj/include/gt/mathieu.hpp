// The weight-12 elements theta*_i, the stabilizers 2M11 and 2M10 of the
// subspaces K1 and K2 inside the full monomial stabilizer, their normal
// subgroups isomorphic to M11 and A6, and the induced modules on the
// quotients of the code by K1 and K2 with their explicit coordinate actions.

#pragma once

#include "gt/monomial.hpp"

namespace gt {

// ---------------------------------------------------------------------------
// Distinguished elements and subgroups

// theta_1 = [1 (x) 1 + i (x) i], theta_2/theta_3 = [1 (x) 1 - i (x) i
// +/- 1 (x) i] in the symmetric square, written as symmetric matrices.
std::array<SymMat3, 3> theta_elements();

// dpar(x): translation by kappa^{-1}(x).  sbk(u): the column map acting on
// tetracode words as multiplication by u.  sbk_phi: the one acting as the
// Frobenius.
MonMap dpar(F9 x);
MonMap sbk(F9 u);
MonMap sbk_phi();

struct MathieuData {
  std::array<SymMat3, 3> theta;   // theta_1, theta_2, theta_3
  std::array<DeltaVec, 3> star;   // theta*_i = Phi^{-1}(theta_i)

  std::vector<DeltaVec> K1, K2;   // <theta*_1> and <theta*_2, theta*_3> as vector sets

  KeySet twoM11, twoM10;          // stabilizers of K1, K2 in the full group
  KeySet M0_11, M0_10;            // centralizers of K1, K2 in the full group
  KeySet T;                       // trs of the tetracode, order 9
  KeySet Nhat;                    // N meet twoM11 = N meet twoM10, order 288
  KeySet Nhat_M0_11, Nhat_M0_10;  // Nhat meet M0_l

  std::vector<MonMap> twoM11_gens, twoM10_gens, M0_11_gens, M0_10_gens;
};

const MathieuData &mathieu_data();

// The action table of sbk(zeta), sbk(i), sbk_phi and -Id on the theta*_i.
bool check_acttheta();

// Certificates: no proper nontrivial normal subgroup.
bool is_simple_group(const std::vector<MonMap> &gens, const KeySet &elems);

// Quotient shape of a group by a normal subgroup, decided from the coset
// multiplication table: cyclic of order 2, or dihedral of order 8.
bool quotient_is_c2(const std::vector<MonMap> &gens, const KeySet &group, const KeySet &normal);
bool quotient_is_d8(const std::vector<MonMap> &gens, const KeySet &group, const KeySet &normal);

// ---------------------------------------------------------------------------
// The three coordinate modules

struct Todd10 { // F3 x F9 x F3
  F3 a = 0;
  F9 b;
  F3 c = 0;
  friend bool operator==(const Todd10 &, const Todd10 &) = default;
};

struct Todd11 { // F3 x F9 x F9
  F3 a = 0;
  F9 b, c;
  friend bool operator==(const Todd11 &, const Todd11 &) = default;
};

struct Todd11Dual { // F9 x F9 x F3
  F9 a, b;
  F3 c = 0;
  friend bool operator==(const Todd11Dual &, const Todd11Dual &) = default;
};

// Coordinate actions of the generators of Nhat.
Todd10 act10_dpar(F9 x, const Todd10 &t);
Todd10 act10_sbk(F9 u, const Todd10 &t);
Todd10 act10_phi(const Todd10 &t);
Todd10 act10_neg(const Todd10 &t);

Todd11 act11_dpar(F9 x, const Todd11 &t);
Todd11 act11_sbk(F9 u, const Todd11 &t);
Todd11 act11_phi(const Todd11 &t);
Todd11 act11_neg(const Todd11 &t);

Todd11Dual act11d_dpar(F9 x, const Todd11Dual &t);
Todd11Dual act11d_sbk(F9 u, const Todd11Dual &t);
Todd11Dual act11d_phi(const Todd11Dual &t);
Todd11Dual act11d_neg(const Todd11Dual &t);

// Quotient maps from the symmetric matrices, linear with kernels Phi(K2)
// and Phi(K1) respectively.
Todd10 kappa10(const SymMat3 &m);
Todd11 kappa11(const SymMat3 &m);

// Pairing between the dual module and the module, nondegenerate and
// contravariant for the group action.
F3 todd_pair(const Todd11Dual &x, const Todd11 &y);

// Enumerations of all module elements, in a fixed order.
std::vector<Todd10> todd10_all();
std::vector<Todd11> todd11_all();
std::vector<Todd11Dual> todd11dual_all();

// Checks that the coordinate action of each generator matches the action on
// the code transported through kappa10 / kappa11.
bool check_todd10_equivariance();
bool check_todd11_equivariance();

// Checks contravariance of the pairing against all generators.
bool check_todd_pairing();

} // namespace gt
