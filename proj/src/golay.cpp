#include "gt/golay.hpp"

#include <algorithm>
#include <stdexcept>

namespace gt {

namespace {

std::vector<VecF3> code_spanning_vectors()
{
  std::vector<VecF3> rows;
  for (int i = 1; i <= 4; ++i)
    for (const TetraWord &xi : tetracode())
      rows.push_back(delta_to_vec(delta_add(col_vec(i), graph_vec(xi))));
  return rows;
}

std::vector<VecF3> bar_spanning_vectors()
{
  std::vector<VecF3> rows;
  for (int i = 1; i <= 4; ++i)
    rows.push_back(delta_to_vec(col_vec(i)));
  for (const TetraWord &xi : tetracode())
    rows.push_back(delta_to_vec(graph_vec(xi)));
  return rows;
}

DeltaVec to_delta(const VecF3 &v)
{
  DeltaVec d{};
  for (int k = 0; k < 12; ++k)
    d[k] = v[static_cast<std::size_t>(k)];
  return d;
}

} // namespace

int golay_bar_dimension()
{
  return mat_rank(MatF3::from_rows(bar_spanning_vectors()));
}

GolayCode build_golay()
{
  GolayCode code;

  // The chosen basis: C1-C2, C1-C3, C1-C4, Gr(xi1)-Gr(0), Gr(xi2)-Gr(0),
  // C1+Gr(0), where xi1, xi2 are the words mapping to 1 and i under kappa.
  DeltaVec c1 = col_vec(1);
  code.basis = {
      delta_sub(c1, col_vec(2)),
      delta_sub(c1, col_vec(3)),
      delta_sub(c1, col_vec(4)),
      delta_sub(graph_vec(tetra_kappa_inv(f9(1))), graph_vec(tetra_word(0, 0))),
      delta_sub(graph_vec(tetra_kappa_inv(f9_i())), graph_vec(tetra_word(0, 0))),
      delta_add(c1, graph_vec(tetra_word(0, 0))),
  };

  // Every basis vector must lie in the span of the C_i + Gr(xi), and the
  // span of the basis must equal that span.
  {
    auto span = code_spanning_vectors();
    MatF3 span_m = MatF3::from_rows(span);
    if (mat_rank(span_m) != 6)
      throw std::logic_error("build_golay: spanning set has wrong rank");
    for (const DeltaVec &b : code.basis) {
      auto rows = span;
      rows.push_back(delta_to_vec(b));
      if (mat_rank(MatF3::from_rows(rows)) != 6)
        throw std::logic_error("build_golay: basis vector outside code");
    }
    MatF3 basis_m = MatF3::from_rows(
        {delta_to_vec(code.basis[0]), delta_to_vec(code.basis[1]),
         delta_to_vec(code.basis[2]), delta_to_vec(code.basis[3]),
         delta_to_vec(code.basis[4]), delta_to_vec(code.basis[5])});
    if (mat_rank(basis_m) != 6)
      throw std::logic_error("build_golay: basis not independent");

    std::vector<int> pivots;
    row_reduce(basis_m, &pivots);
    for (int k = 0; k < 6; ++k) {
      code.pivot[k] = pivots[static_cast<std::size_t>(k)];
      code.rref[k] = to_delta(basis_m.row(k));
    }
  }

  // Overcode basis: C1..C4 plus Gr(0), Gr(xi1), Gr(xi2).
  code.bar_basis = {col_vec(1),
                    col_vec(2),
                    col_vec(3),
                    col_vec(4),
                    graph_vec(tetra_word(0, 0)),
                    graph_vec(tetra_kappa_inv(f9(1))),
                    graph_vec(tetra_kappa_inv(f9_i()))};
  {
    std::vector<VecF3> rows;
    for (const DeltaVec &b : code.bar_basis)
      rows.push_back(delta_to_vec(b));
    if (mat_rank(MatF3::from_rows(rows)) != 7)
      throw std::logic_error("build_golay: overcode basis not independent");
  }

  // Enumerate all 729 codewords in coordinate order.
  code.codewords.reserve(729);
  for (int idx = 0; idx < 729; ++idx) {
    std::array<F3, 6> c{};
    int t = idx;
    for (int k = 5; k >= 0; --k) {
      c[k] = static_cast<F3>(t % 3);
      t /= 3;
    }
    code.codewords.push_back(code.from_coords(c));
  }
  return code;
}

std::array<int, 13> golay_weight_enumerator(const GolayCode &code)
{
  std::array<int, 13> counts{};
  for (const DeltaVec &w : code.codewords)
    ++counts[static_cast<std::size_t>(delta_weight(w))];
  return counts;
}

bool check_graph_relation()
{
  for (const TetraWord &xi : tetracode())
    for (const TetraWord &eta : tetracode()) {
      TetraWord theta = tetra_neg(tetra_add(xi, eta));
      DeltaVec lhs = delta_add(delta_add(graph_vec(xi), graph_vec(eta)), graph_vec(theta));
      DeltaVec rhs{};
      for (int i = 1; i <= 4; ++i)
        if (xi[i - 1] != eta[i - 1])
          rhs = delta_add(rhs, col_vec(i));
      if (!(lhs == rhs))
        return false;
    }
  return true;
}

SymMat3 phi_col_image(int i, unsigned sign_mask)
{
  TetraWord lam = lambda_word(i);
  if (sign_mask & (1u << (i - 1)))
    lam = tetra_neg(lam);
  F9 k = tetra_kappa(lam);
  return SymMat3::outer({k.re, k.im, 0});
}

SymMat3 phi_graph_image(const TetraWord &xi)
{
  F9 k = tetra_kappa(xi);
  return SymMat3::outer({k.re, k.im, 1});
}

namespace {

// Linear map on the overcode determined by the images of its basis; used to
// verify well-definedness and to transport the map to the code's own basis.
struct BarMap {
  MatF3 rref;              // reduced basis of the overcode, 7 x 12
  std::vector<int> pivots; // 7 pivot columns
  std::array<SymMat3, 7> image;

  SymMat3 apply(const DeltaVec &v) const
  {
    SymMat3 s;
    for (int k = 0; k < 7; ++k) {
      F3 c = v[static_cast<std::size_t>(pivots[static_cast<std::size_t>(k)])];
      for (int j = 0; j < 6; ++j)
        s.e[j] = f3_add(s.e[j], f3_mul(c, image[static_cast<std::size_t>(k)].e[j]));
    }
    return s;
  }
};

BarMap build_bar_map(const GolayCode &code, unsigned sign_mask)
{
  // Images of the chosen overcode basis under the defining recipe.
  std::array<SymMat3, 7> gen_image = {
      phi_col_image(1, sign_mask),
      phi_col_image(2, sign_mask),
      phi_col_image(3, sign_mask),
      phi_col_image(4, sign_mask),
      phi_graph_image(tetra_word(0, 0)),
      phi_graph_image(tetra_kappa_inv(f9(1))),
      phi_graph_image(tetra_kappa_inv(f9_i())),
  };

  // Row reduce [basis | image coordinates] together so the reduced rows keep
  // their image data.
  MatF3 aug(7, 12 + 6);
  for (int r = 0; r < 7; ++r) {
    for (int c = 0; c < 12; ++c)
      aug.at(r, c) = code.bar_basis[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
    for (int c = 0; c < 6; ++c)
      aug.at(r, 12 + c) = gen_image[static_cast<std::size_t>(r)].e[static_cast<std::size_t>(c)];
  }
  // Reduce using only the first 12 columns for pivot selection.
  MatF3 basis_only(7, 12);
  for (int r = 0; r < 7; ++r)
    for (int c = 0; c < 12; ++c)
      basis_only.at(r, c) = aug.at(r, c);
  std::vector<int> pivots;
  row_reduce(basis_only, &pivots);
  // Redo the same elimination on the augmented matrix by re-solving: express
  // each reduced row in terms of the original basis.
  BarMap bm;
  bm.pivots = pivots;
  bm.rref = basis_only;
  for (int r = 0; r < 7; ++r) {
    // Solve original-basis coordinates of the reduced row r.
    MatF3 sys(12, 8);
    for (int c = 0; c < 12; ++c) {
      for (int k = 0; k < 7; ++k)
        sys.at(c, k) = code.bar_basis[static_cast<std::size_t>(k)][static_cast<std::size_t>(c)];
      sys.at(c, 7) = basis_only.at(r, c);
    }
    std::vector<int> piv2;
    row_reduce(sys, &piv2);
    std::array<F3, 7> coeff{};
    for (std::size_t k = 0; k < piv2.size(); ++k) {
      if (piv2[k] < 7)
        coeff[static_cast<std::size_t>(piv2[k])] = sys.at(static_cast<int>(k), 7);
      else if (sys.at(static_cast<int>(k), 7) != 0)
        throw std::logic_error("build_bar_map: inconsistent system");
    }
    SymMat3 img;
    for (int k = 0; k < 7; ++k)
      for (int j = 0; j < 6; ++j)
        img.e[j] = f3_add(img.e[j], f3_mul(coeff[static_cast<std::size_t>(k)],
                                           gen_image[static_cast<std::size_t>(k)].e[j]));
    bm.image[static_cast<std::size_t>(r)] = img;
  }
  return bm;
}

} // namespace

bool phi_well_defined(const GolayCode &code, unsigned sign_mask)
{
  BarMap bm = build_bar_map(code, sign_mask);
  // Every spanning vector of the overcode must map to its recipe image.
  for (int i = 1; i <= 4; ++i)
    if (!(bm.apply(col_vec(i)) == phi_col_image(i, sign_mask)))
      return false;
  for (const TetraWord &xi : tetracode())
    if (!(bm.apply(graph_vec(xi)) == phi_graph_image(xi)))
      return false;
  return true;
}

PhiIso phi_iso(const GolayCode &code, unsigned sign_mask)
{
  if (!phi_well_defined(code, sign_mask))
    throw std::logic_error("phi_iso: recipe is not a well-defined linear map");
  BarMap bm = build_bar_map(code, sign_mask);

  PhiIso phi;
  phi.code = &code;
  for (int k = 0; k < 6; ++k)
    phi.basis_image[static_cast<std::size_t>(k)] = bm.apply(code.rref[static_cast<std::size_t>(k)]);

  // Invert: solve for the preimages of the 6 elementary symmetric units.
  MatF3 m6(6, 6);
  for (int r = 0; r < 6; ++r)
    for (int c = 0; c < 6; ++c)
      m6.at(r, c) = phi.basis_image[static_cast<std::size_t>(r)].e[static_cast<std::size_t>(c)];
  MatF3 inv = mat_inverse(mat_transpose(m6)); // maps sym coordinates to rref coordinates
  for (int j = 0; j < 6; ++j) {
    std::array<F3, 6> coord{};
    for (int k = 0; k < 6; ++k)
      coord[static_cast<std::size_t>(k)] = inv.at(k, j);
    phi.preimage[static_cast<std::size_t>(j)] = code.from_coords(coord);
  }
  return phi;
}

} // namespace gt
