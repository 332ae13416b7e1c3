// SPDX-License-Identifier: Apache-2.0
//
// polydisc: characteristic functions of commuting contraction tuples
// Copyright (C) 2026 The polydisc authors

#include "polydisc/defects.hpp"

#include <algorithm>
#include <cmath>

#include "polydisc/error.hpp"

namespace polydisc {

CMatrix delta_map(const CMatrix& x, const CMatrix& a) { return congruence(x, a); }

CMatrix one_minus_delta(const CMatrix& x, const CMatrix& a) {
  return a - congruence(x, a);
}

namespace {

void check_index(const CTuple& t, int k) {
  if (k < 0 || static_cast<std::size_t>(k) >= t.n()) {
    throw Error(ErrorCode::BadIndex, "operator index out of range", {.i = k});
  }
}

void check_set(const CTuple& t, int j, std::span<const int> p) {
  check_index(t, j);
  std::vector<int> seen;
  for (int k : p) {
    check_index(t, k);
    if (k == j) {
      throw Error(ErrorCode::BadIndex, "index set contains j", {.i = j});
    }
    if (std::find(seen.begin(), seen.end(), k) != seen.end()) {
      throw Error(ErrorCode::BadIndex, "repeated index", {.i = k});
    }
    seen.push_back(k);
  }
}

CMatrix classical_square(const CTuple& t, int j) {
  const CMatrix& tj = t.op(static_cast<std::size_t>(j));
  return hermitian_part(CMatrix::identity(t.dim()) - adj_mul(tj, tj));
}

IndexSet others(std::size_t n, std::initializer_list<int> skip) {
  IndexSet out;
  for (int k = 0; k < static_cast<int>(n); ++k)
    if (std::find(skip.begin(), skip.end(), k) == skip.end()) out.push_back(k);
  return out;
}

// sum_{m=0}^{cutoff} T_k^m x T_k^{*m}
CMatrix geometric_sum(const CMatrix& tk, const CMatrix& x, int cutoff) {
  CMatrix acc = x;
  CMatrix term = x;
  for (int m = 1; m <= cutoff; ++m) {
    term = congruence(tk, term);
    acc += term;
  }
  return acc;
}

}  // namespace

CMatrix truncated_defect_in_order(const CTuple& t, int j,
                                  std::span<const int> order) {
  check_set(t, j, order);
  CMatrix x = classical_square(t, j);
  for (int k : order) x = one_minus_delta(t.op(static_cast<std::size_t>(k)), x);
  return hermitian_part(x);
}

CMatrix truncated_defect(const CTuple& t, int j, std::span<const int> p) {
  IndexSet sorted(p.begin(), p.end());
  std::sort(sorted.begin(), sorted.end());
  return truncated_defect_in_order(t, j, sorted);
}

CMatrix full_truncated_defect(const CTuple& t, int j) {
  check_index(t, j);
  return truncated_defect(t, j, others(t.n(), {j}));
}

CMatrix joint_commutator(const CTuple& t, int i, int j) {
  check_index(t, i);
  check_index(t, j);
  if (i == j) throw Error(ErrorCode::BadIndex, "commutator needs i != j", {i, j});
  const CMatrix& tj = t.op(static_cast<std::size_t>(j));
  const CMatrix& ti_h = t.adjoints()[static_cast<std::size_t>(i)];
  CMatrix x = tj * ti_h - ti_h * tj;
  for (int k : others(t.n(), {i, j}))
    x = one_minus_delta(t.op(static_cast<std::size_t>(k)), x);
  return x;
}

CMatrix joint_defect_square(const CTuple& t) {
  const std::size_t n = t.n();
  const std::size_t d = t.dim();
  CMatrix sq(n * d, n * d);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const int ii = static_cast<int>(i);
      const int jj = static_cast<int>(j);
      sq.set_block(i * d, j * d,
                   i == j ? full_truncated_defect(t, ii)
                          : joint_commutator(t, ii, jj));
    }
  return sq;
}

JointDefect joint_defect(const CTuple& t) {
  JointDefect out;
  out.square = joint_defect_square(t);
  out.anti_hermitian_residual =
      0.5 * spectral_norm(out.square - out.square.adjoint());
  const CMatrix h = hermitian_part(out.square);
  out.min_eig = min_eigenvalue(h, t.tol());
  try {
    out.root = psd_root(h, t.tol());
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotPsd) throw;
  }
  return out;
}

CommutatorDefect commutator_defect(const CTuple& t) {
  const std::size_t n = t.n();
  const std::size_t d = t.dim();
  CommutatorDefect out;
  out.square = CMatrix(n * d, n * d);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) {
        out.square.set_block(i * d, i * d,
                             classical_square(t, static_cast<int>(i)));
      } else {
        out.square.set_block(i * d, j * d,
                             commutator(t.op(j), t.adjoints()[i]));
      }
    }
  out.square = hermitian_part(out.square);
  out.min_eig = min_eigenvalue(out.square, t.tol());
  return out;
}

double defect_series_residual(const CTuple& t, int j, std::span<const int> p,
                              int cutoff) {
  check_set(t, j, p);
  if (cutoff < 0) throw Error(ErrorCode::InvalidArgument, "negative cutoff");
  const CMatrix partial = truncated_defect(t, j, p);

  CMatrix rebuilt = partial;
  for (int k : p) rebuilt = geometric_sum(t.op(static_cast<std::size_t>(k)), rebuilt, cutoff);
  const double r1 = spectral_norm(classical_square(t, j) - rebuilt);

  IndexSet rest;
  for (int k : others(t.n(), {j}))
    if (std::find(p.begin(), p.end(), k) == p.end()) rest.push_back(k);
  CMatrix rebuilt2 = full_truncated_defect(t, j);
  for (int k : rest) rebuilt2 = geometric_sum(t.op(static_cast<std::size_t>(k)), rebuilt2, cutoff);
  const double r2 = spectral_norm(partial - rebuilt2);
  return std::max(r1, r2);
}

int default_series_cutoff(const CTuple& t, double tol) {
  double rho = 0.0;
  for (double r : is_pure(t).spectral_radii) rho = std::max(rho, r);
  if (rho < 1e-12) return static_cast<int>(t.dim());
  if (rho >= 1.0) return 200;
  const double k = std::ceil(std::log(tol) / (2.0 * std::log(rho)));
  return static_cast<int>(std::clamp(k, 1.0, 200.0));
}

std::vector<IndexSet> subsets_without(std::size_t n, int j) {
  const IndexSet pool = others(n, {j});
  std::vector<IndexSet> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << pool.size()); ++mask) {
    IndexSet s;
    for (std::size_t b = 0; b < pool.size(); ++b)
      if (mask & (std::size_t{1} << b)) s.push_back(pool[b]);
    out.push_back(std::move(s));
  }
  std::stable_sort(out.begin(), out.end(), [](const IndexSet& a, const IndexSet& b) {
    return a.size() < b.size();
  });
  return out;
}

DefectPackage build_defect_package(const CTuple& t) {
  DefectPackage pkg{t, defect_first_kind(t), {}, {}, {}, {}, {}};
  for (std::size_t i = 0; i < t.n(); ++i)
    pkg.classical.push_back(classical_defect(t.op(i), t.tol()));
  for (int j = 0; j < static_cast<int>(t.n()); ++j)
    for (const auto& p : subsets_without(t.n(), j))
      pkg.truncated.emplace(std::make_pair(j, p), truncated_defect(t, j, p));
  for (int i = 0; i < static_cast<int>(t.n()); ++i)
    for (int j = 0; j < static_cast<int>(t.n()); ++j)
      if (i != j) pkg.joint_commutators.emplace(std::make_pair(i, j),
                                                joint_commutator(t, i, j));
  pkg.joint = joint_defect(t);
  pkg.commutator = commutator_defect(t);
  return pkg;
}

DefectEmbedding embed_joint_defect(const DefectPackage& pkg) {
  if (!pkg.joint.root) {
    throw Error(ErrorCode::NotAvailable, "joint defect is not positive",
                {.value = pkg.joint.min_eig});
  }
  const CTuple& t = pkg.tuple;
  const std::size_t n = t.n();
  const std::size_t d = t.dim();
  DefectEmbedding out;

  std::vector<CMatrix> roots;
  for (int j = 0; j < static_cast<int>(n); ++j)
    roots.push_back(psd_sqrt(full_truncated_defect(t, j), t.tol()));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      out.orthogonality_residual =
          std::max(out.orthogonality_residual, spectral_norm(roots[i] * roots[j]));
      out.classical_residual = std::max(
          out.classical_residual,
          spectral_norm(pkg.classical[i].op * pkg.classical[j].op));
    }

  const CMatrix& basis = pkg.joint.root->range.basis;
  CMatrix flat(d, basis.cols());
  for (std::size_t b = 0; b < n; ++b) flat += basis.block(b * d, 0, d, basis.cols());
  out.isometry_residual =
      spectral_norm(adj_mul(flat, flat) - CMatrix::identity(basis.cols()));
  out.flattened = range_basis(flat, t.tol());
  out.isometric = out.isometry_residual <= t.tol().structural;
  return out;
}

}  // namespace polydisc
