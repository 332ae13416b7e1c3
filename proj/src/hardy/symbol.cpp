// SPDX-License-Identifier: Apache-2.0
//
// polydisc: characteristic functions of commuting contraction tuples
// Copyright (C) 2026 The polydisc authors

#include <algorithm>
#include <cmath>
#include <numbers>

#include "polydisc/error.hpp"
#include "polydisc/inner_symbol.hpp"
#include "polydisc/linalg.hpp"

namespace polydisc {

struct InnerSymbol::Node {
  Kind kind;
  std::size_t n = 0;
  std::size_t in = 0;
  std::size_t out = 0;
  std::vector<int> exponent;
  std::size_t var = 0;
  std::vector<cplx> zeros;
  CMatrix matrix;
  std::vector<InnerSymbol> children;
  Evaluator f;
};

InnerSymbol::InnerSymbol(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

InnerSymbol InnerSymbol::monomial(std::vector<int> exponent) {
  if (exponent.empty()) throw Error(ErrorCode::InvalidArgument, "empty exponent");
  for (int e : exponent)
    if (e < 0) throw Error(ErrorCode::InvalidArgument, "negative exponent");
  auto node = std::make_shared<Node>();
  node->kind = Kind::Monomial;
  node->n = exponent.size();
  node->in = node->out = 1;
  node->exponent = std::move(exponent);
  return InnerSymbol(node);
}

InnerSymbol InnerSymbol::blaschke1(std::size_t n, std::size_t var,
                                   std::vector<cplx> zeros) {
  if (var >= n) throw Error(ErrorCode::BadIndex, "Blaschke variable", {.i = static_cast<int>(var)});
  for (const auto& a : zeros)
    if (!(std::abs(a) < 1.0)) {
      throw Error(ErrorCode::NotInner, "Blaschke zero outside the open disc",
                  {.value = std::abs(a)});
    }
  auto node = std::make_shared<Node>();
  node->kind = Kind::Blaschke1;
  node->n = n;
  node->in = node->out = 1;
  node->var = var;
  node->zeros = std::move(zeros);
  return InnerSymbol(node);
}

InnerSymbol InnerSymbol::unitary(std::size_t n, CMatrix w) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "need at least one variable");
  if (w.rows() < w.cols() || w.cols() == 0) {
    throw Error(ErrorCode::NotInner, "constant part must be a tall isometry");
  }
  auto node = std::make_shared<Node>();
  node->kind = Kind::Unitary;
  node->n = n;
  node->out = w.rows();
  node->in = w.cols();
  node->matrix = std::move(w);
  return InnerSymbol(node);
}

InnerSymbol InnerSymbol::block_diag(std::vector<InnerSymbol> parts) {
  if (parts.empty()) throw Error(ErrorCode::InvalidArgument, "empty blockdiag");
  auto node = std::make_shared<Node>();
  node->kind = Kind::BlockDiag;
  node->n = parts.front().n();
  for (const auto& p : parts) {
    if (p.n() != node->n) {
      throw Error(ErrorCode::IncompatibleDims, "blocks differ in variable count");
    }
    node->in += p.input_dim();
    node->out += p.output_dim();
  }
  node->children = std::move(parts);
  return InnerSymbol(node);
}

InnerSymbol InnerSymbol::product(std::vector<InnerSymbol> factors) {
  if (factors.empty()) throw Error(ErrorCode::InvalidArgument, "empty product");
  for (std::size_t k = 0; k + 1 < factors.size(); ++k) {
    if (factors[k].n() != factors[k + 1].n()) {
      throw Error(ErrorCode::IncompatibleDims, "factors differ in variable count");
    }
    if (factors[k].input_dim() != factors[k + 1].output_dim()) {
      throw Error(ErrorCode::IncompatibleDims, "factor dimensions do not chain",
                  {.i = static_cast<int>(k)});
    }
  }
  auto node = std::make_shared<Node>();
  node->kind = Kind::Product;
  node->n = factors.front().n();
  node->out = factors.front().output_dim();
  node->in = factors.back().input_dim();
  node->children = std::move(factors);
  return InnerSymbol(node);
}

InnerSymbol InnerSymbol::sampled(std::size_t n, std::size_t output_dim,
                                 std::size_t input_dim, Evaluator f) {
  if (n == 0 || input_dim == 0 || output_dim < input_dim || !f) {
    throw Error(ErrorCode::InvalidArgument, "sampled symbol shape");
  }
  auto node = std::make_shared<Node>();
  node->kind = Kind::Sampled;
  node->n = n;
  node->out = output_dim;
  node->in = input_dim;
  node->f = std::move(f);
  return InnerSymbol(node);
}

InnerSymbol::Kind InnerSymbol::kind() const { return node_->kind; }
std::size_t InnerSymbol::n() const { return node_->n; }
std::size_t InnerSymbol::input_dim() const { return node_->in; }
std::size_t InnerSymbol::output_dim() const { return node_->out; }
const std::vector<int>& InnerSymbol::exponent() const { return node_->exponent; }
std::size_t InnerSymbol::var() const { return node_->var; }
const std::vector<cplx>& InnerSymbol::zeros() const { return node_->zeros; }
const CMatrix& InnerSymbol::matrix() const { return node_->matrix; }
const std::vector<InnerSymbol>& InnerSymbol::children() const {
  return node_->children;
}

const char* kind_name(InnerSymbol::Kind k) {
  switch (k) {
    case InnerSymbol::Kind::Monomial: return "monomial";
    case InnerSymbol::Kind::Blaschke1: return "blaschke1";
    case InnerSymbol::Kind::Unitary: return "unitary";
    case InnerSymbol::Kind::BlockDiag: return "blockdiag";
    case InnerSymbol::Kind::Product: return "product";
    case InnerSymbol::Kind::Sampled: return "sampled";
  }
  return "unknown";
}

CMatrix InnerSymbol::eval(std::span<const cplx> z) const {
  if (z.size() != node_->n) {
    throw Error(ErrorCode::ShapeMismatch, "point has the wrong number of coordinates");
  }
  switch (node_->kind) {
    case Kind::Monomial: {
      cplx v = 1.0;
      for (std::size_t i = 0; i < z.size(); ++i)
        for (int e = 0; e < node_->exponent[i]; ++e) v *= z[i];
      return CMatrix{{v}};
    }
    case Kind::Blaschke1: {
      const cplx w = z[node_->var];
      cplx v = 1.0;
      for (const auto& a : node_->zeros) v *= (w - a) / (1.0 - std::conj(a) * w);
      return CMatrix{{v}};
    }
    case Kind::Unitary:
      return node_->matrix;
    case Kind::BlockDiag: {
      std::vector<CMatrix> blocks;
      for (const auto& c : node_->children) blocks.push_back(c.eval(z));
      return block_diagonal(blocks);
    }
    case Kind::Product: {
      CMatrix acc = node_->children.front().eval(z);
      for (std::size_t k = 1; k < node_->children.size(); ++k)
        acc = acc * node_->children[k].eval(z);
      return acc;
    }
    case Kind::Sampled: {
      CMatrix v = node_->f(z);
      if (v.rows() != node_->out || v.cols() != node_->in) {
        throw Error(ErrorCode::ShapeMismatch, "sampled symbol returned wrong shape");
      }
      return v;
    }
  }
  return {};
}

std::vector<std::vector<cplx>> torus_grid(std::size_t n, int per_axis) {
  if (per_axis < 1) throw Error(ErrorCode::InvalidArgument, "grid needs points");
  std::vector<cplx> axis(static_cast<std::size_t>(per_axis));
  for (int m = 0; m < per_axis; ++m)
    axis[static_cast<std::size_t>(m)] =
        std::polar(1.0, 2.0 * std::numbers::pi * m / per_axis);
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= static_cast<std::size_t>(per_axis);
  std::vector<std::vector<cplx>> out(total, std::vector<cplx>(n));
  for (std::size_t c = 0; c < total; ++c) {
    std::size_t rest = c;
    for (std::size_t i = n; i-- > 0;) {
      out[c][i] = axis[rest % static_cast<std::size_t>(per_axis)];
      rest /= static_cast<std::size_t>(per_axis);
    }
  }
  return out;
}

std::map<MultiIndex, CMatrix> torus_taylor_coefficients(
    std::size_t n, int per_axis, const std::vector<CMatrix>& samples) {
  const auto g = static_cast<std::size_t>(per_axis);
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= g;
  if (samples.size() != total) {
    throw Error(ErrorCode::ShapeMismatch, "sample count does not match grid");
  }
  const std::size_t rows = samples.front().rows();
  const std::size_t cols = samples.front().cols();
  const std::size_t width = rows * cols;
  // data[c * width + e]: grid point (or partially transformed index) c.
  std::vector<cplx> data(total * width);
  for (std::size_t c = 0; c < total; ++c)
    std::copy(samples[c].data(), samples[c].data() + width, data.begin() + static_cast<std::ptrdiff_t>(c * width));
  std::vector<cplx> roots(g);
  for (std::size_t m = 0; m < g; ++m)
    roots[m] = std::polar(1.0 / per_axis, -2.0 * std::numbers::pi * static_cast<double>(m) / per_axis);
  std::vector<cplx> line(g * width);
  std::size_t stride = 1;
  for (std::size_t axis = n; axis-- > 0;) {
    // Transform along `axis`, whose digit has weight `stride`.
    for (std::size_t base = 0; base < total; ++base) {
      if ((base / stride) % g != 0) continue;
      for (std::size_t k = 0; k < g; ++k) {
        cplx* out = line.data() + k * width;
        std::fill(out, out + width, cplx(0.0));
        for (std::size_t m = 0; m < g; ++m) {
          const cplx w = roots[(k * m) % g];
          const cplx* in = data.data() + (base + m * stride) * width;
          for (std::size_t e = 0; e < width; ++e) out[e] += w * in[e];
        }
      }
      for (std::size_t k = 0; k < g; ++k)
        std::copy(line.begin() + static_cast<std::ptrdiff_t>(k * width),
                  line.begin() + static_cast<std::ptrdiff_t>((k + 1) * width),
                  data.begin() + static_cast<std::ptrdiff_t>((base + k * stride) * width));
    }
    stride *= g;
  }
  std::map<MultiIndex, CMatrix> out;
  MultiIndex k(n);
  for (std::size_t c = 0; c < total; ++c) {
    std::size_t rest = c;
    for (std::size_t i = n; i-- > 0;) {
      k[i] = static_cast<int>(rest % g);
      rest /= g;
    }
    out.emplace(k, CMatrix(rows, cols,
                           std::vector<cplx>(data.begin() + static_cast<std::ptrdiff_t>(c * width),
                                             data.begin() + static_cast<std::ptrdiff_t>((c + 1) * width))));
  }
  return out;
}

InnerResidual InnerSymbol::torus_inner_residual(int per_axis) const {
  InnerResidual r;
  const CMatrix id = CMatrix::identity(node_->in);
  for (const auto& z : torus_grid(node_->n, per_axis)) {
    const CMatrix v = eval(z);
    const double res = spectral_norm(adj_mul(v, v) - id);
    if (r.worst_point.empty() || res > r.residual || std::isnan(res)) {
      r.residual = std::isnan(res) ? std::numeric_limits<double>::infinity() : res;
      r.worst_point = z;
    }
  }
  return r;
}

namespace {

using Terms = std::map<MultiIndex, CMatrix>;

struct RawCoefficients {
  Terms terms;
  bool polynomial = false;
  std::vector<int> degree;
};

bool within(const MultiIndex& k, int cap) {
  return std::all_of(k.begin(), k.end(), [cap](int e) { return e <= cap; });
}

// Taylor coefficients of a finite Blaschke product up to `length` - 1.
std::vector<cplx> blaschke_series(const std::vector<cplx>& zeros, int length) {
  std::vector<cplx> acc(static_cast<std::size_t>(length), 0.0);
  acc[0] = 1.0;
  for (const auto& a : zeros) {
    std::vector<cplx> f(static_cast<std::size_t>(length), 0.0);
    f[0] = -a;
    cplx p = 1.0 - std::norm(a);
    for (int m = 1; m < length; ++m) {
      f[static_cast<std::size_t>(m)] = p;
      p *= std::conj(a);
    }
    std::vector<cplx> next(static_cast<std::size_t>(length), 0.0);
    for (int i = 0; i < length; ++i) {
      if (acc[static_cast<std::size_t>(i)] == cplx(0.0)) continue;
      for (int j = 0; i + j < length; ++j)
        next[static_cast<std::size_t>(i + j)] +=
            acc[static_cast<std::size_t>(i)] * f[static_cast<std::size_t>(j)];
    }
    acc = std::move(next);
  }
  return acc;
}

}  // namespace

namespace {

RawCoefficients raw_coefficients(const InnerSymbol& s, int cap);

RawCoefficients sampled_coefficients(const InnerSymbol& s, int cap) {
  const std::size_t n = s.n();
  const int g = std::max(2 * (cap + 1), 8);
  const auto grid = torus_grid(n, g);
  std::vector<CMatrix> values;
  values.reserve(grid.size());
  for (const auto& z : grid) values.push_back(s.eval(z));
  auto all = torus_taylor_coefficients(n, g, values);

  RawCoefficients out;
  double peak = 0.0;
  double high = 0.0;
  std::vector<int> degree(n, 0);
  for (auto& [k, c] : all) {
    const double mag = c.max_abs();
    peak = std::max(peak, mag);
    if (!within(k, cap)) {
      high = std::max(high, mag);
      continue;
    }
    if (mag > 1e-11)
      for (std::size_t i = 0; i < n; ++i) degree[i] = std::max(degree[i], k[i]);
    out.terms.emplace(k, std::move(c));
  }
  out.polynomial = high <= 1e-11 * std::max(peak, 1.0);
  out.degree = degree;
  if (out.polynomial) {
    std::erase_if(out.terms, [](const auto& kv) { return kv.second.max_abs() <= 1e-11; });
  }
  return out;
}

RawCoefficients raw_coefficients(const InnerSymbol& s, int cap) {
  using Kind = InnerSymbol::Kind;
  const std::size_t n = s.n();
  RawCoefficients out;
  switch (s.kind()) {
    case Kind::Monomial: {
      out.polynomial = true;
      out.degree = s.exponent();
      if (within(s.exponent(), cap)) out.terms.emplace(s.exponent(), CMatrix{{1.0}});
      return out;
    }
    case Kind::Blaschke1: {
      const bool all_zero = std::all_of(s.zeros().begin(), s.zeros().end(),
                                        [](cplx a) { return a == cplx(0.0); });
      out.polynomial = all_zero;
      out.degree.assign(n, 0);
      if (all_zero) out.degree[s.var()] = static_cast<int>(s.zeros().size());
      const auto series = blaschke_series(s.zeros(), cap + 1);
      for (int m = 0; m <= cap; ++m) {
        if (series[static_cast<std::size_t>(m)] == cplx(0.0)) continue;
        MultiIndex k(n, 0);
        k[s.var()] = m;
        out.terms.emplace(k, CMatrix{{series[static_cast<std::size_t>(m)]}});
      }
      return out;
    }
    case Kind::Unitary: {
      out.polynomial = true;
      out.degree.assign(n, 0);
      out.terms.emplace(MultiIndex(n, 0), s.matrix());
      return out;
    }
    case Kind::BlockDiag: {
      out.polynomial = true;
      out.degree.assign(n, 0);
      std::size_t r0 = 0;
      std::size_t c0 = 0;
      for (const auto& child : s.children()) {
        const RawCoefficients cc = raw_coefficients(child, cap);
        out.polynomial = out.polynomial && cc.polynomial;
        for (std::size_t i = 0; i < n; ++i)
          out.degree[i] = std::max(out.degree[i], cc.degree[i]);
        for (const auto& [k, c] : cc.terms) {
          auto it = out.terms.find(k);
          if (it == out.terms.end())
            it = out.terms.emplace(k, CMatrix(s.output_dim(), s.input_dim())).first;
          it->second.set_block(r0, c0, c);
        }
        r0 += child.output_dim();
        c0 += child.input_dim();
      }
      return out;
    }
    case Kind::Product: {
      RawCoefficients acc = raw_coefficients(s.children().front(), cap);
      for (std::size_t f = 1; f < s.children().size(); ++f) {
        const RawCoefficients rhs = raw_coefficients(s.children()[f], cap);
        Terms next;
        for (const auto& [ka, ca] : acc.terms)
          for (const auto& [kb, cb] : rhs.terms) {
            MultiIndex k(n);
            for (std::size_t i = 0; i < n; ++i) k[i] = ka[i] + kb[i];
            if (!within(k, cap)) continue;
            CMatrix prod = ca * cb;
            auto it = next.find(k);
            if (it == next.end()) {
              next.emplace(k, std::move(prod));
            } else {
              it->second += prod;
            }
          }
        acc.terms = std::move(next);
        acc.polynomial = acc.polynomial && rhs.polynomial;
        for (std::size_t i = 0; i < n; ++i) acc.degree[i] += rhs.degree[i];
      }
      return acc;
    }
    case Kind::Sampled:
      return sampled_coefficients(s, cap);
  }
  return out;
}

// Exact tail of a single Blaschke product from an extended series.
double blaschke_tail(const std::vector<cplx>& zeros, int cap) {
  double r = 0.0;
  for (const auto& a : zeros) r = std::max(r, std::abs(a));
  if (r == 0.0) return 0.0;
  const int extra = static_cast<int>(std::ceil(std::log(1e-18) / std::log(r))) +
                    4 * static_cast<int>(zeros.size());
  const int length = cap + 1 + std::clamp(extra, 8, 4000);
  const auto series = blaschke_series(zeros, length);
  double tail2 = 0.0;
  for (int m = cap + 1; m < length; ++m) tail2 += std::norm(series[static_cast<std::size_t>(m)]);
  return std::sqrt(tail2);
}

}  // namespace

SymbolCoefficients InnerSymbol::coefficients(int cap) const {
  if (cap < 0) throw Error(ErrorCode::InvalidArgument, "negative coefficient cap");
  RawCoefficients raw = raw_coefficients(*this, cap);
  SymbolCoefficients out;
  out.terms = std::move(raw.terms);
  out.polynomial = raw.polynomial;
  out.degree = raw.degree;
  const bool fits = raw.polynomial && std::all_of(raw.degree.begin(), raw.degree.end(),
                                                  [cap](int d) { return d <= cap; });
  if (fits) {
    out.tail_bound = 0.0;
  } else if (kind() == Kind::Blaschke1) {
    out.tail_bound = blaschke_tail(zeros(), cap);
  } else {
    // An inner function has unit H^2 norm on unit inputs, so the omitted
    // mass is 1 - lambda_min(sum_k C_k^H C_k). Resolution is about 1e-8.
    CMatrix gram(input_dim(), input_dim());
    for (const auto& [k, c] : out.terms) gram += adj_mul(c, c);
    Tolerances loose;
    loose.structural = 1e-6;
    const double lmin = min_eigenvalue(hermitian_part(gram), loose);
    out.tail_bound = std::sqrt(std::max(0.0, 1.0 - lmin));
  }
  return out;
}

}  // namespace polydisc
