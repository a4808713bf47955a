#include "tricube/grid.hpp"

#include <utility>

#include "tricube/common.hpp"
#include "tricube/densepoly.hpp"
#include "tricube/pll.hpp"

namespace tricube {

namespace {

std::size_t next_pow2(std::size_t n) {
  std::size_t r = 1;
  while (r < n) r <<= 1;
  return r;
}

}  // namespace

Fp GridDim::point(const PrimeField& F, std::size_t k) const {
  if (kind == GridKind::RootsOfUnity) return F.pow(root, k);
  return F.from_uint(offset + k);
}

Grid::Grid(const PrimeField& F, std::vector<GridDim> dims)
    : field_(&F), dims_(std::move(dims)) {
  for (const auto& d : dims_) total_ *= d.length;
}

Grid Grid::make(const PrimeField& F, const std::vector<int>& degree_bounds,
                const GridPrefs& prefs) {
  std::vector<GridDim> dims;
  dims.reserve(degree_bounds.size());
  for (int b : degree_bounds) {
    if (b < 0) throw precondition_error("negative degree bound for grid axis");
    std::size_t need = static_cast<std::size_t>(b) + 1;
    GridDim dim;
    std::size_t padded = next_pow2(need);
    if (prefs.prefer_ntt && need > 1 && padded <= (uint64_t{1} << F.two_adicity()) &&
        padded < F.modulus()) {
      dim.kind = GridKind::RootsOfUnity;
      dim.length = padded;
      std::size_t k = 0;
      while ((std::size_t{1} << k) < padded) ++k;
      dim.root = F.root_of_unity(static_cast<unsigned>(k));
    } else {
      // Consecutive points offset .. offset+need-1 must be distinct mod p.
      if (need > F.modulus())
        throw precondition_error(
            "prime too small: a grid axis needs " + std::to_string(need) +
            " distinct points but the field has only " +
            std::to_string(F.modulus()));
      dim.kind = GridKind::Consecutive;
      dim.length = need;
      dim.offset = prefs.offset;
    }
    dims.push_back(dim);
  }
  return Grid(F, std::move(dims));
}

namespace {

// Apply the forward (coefficients -> values) or inverse transform along one
// axis of the tensor. Lines along axis a start at base = outer*block + inner
// with elements spaced stride apart.
void transform_axis(const PrimeField& F, std::vector<Fp>& tensor,
                    const std::vector<GridDim>& dims, std::size_t axis,
                    bool forward) {
  const GridDim& dim = dims[axis];
  std::size_t stride = 1;
  for (std::size_t i = axis + 1; i < dims.size(); ++i) stride *= dims[i].length;
  std::size_t block = stride * dim.length;
  std::size_t nlines = tensor.size() / dim.length;
  parallel_for(nlines, [&](std::size_t line) {
    std::size_t outer = line / stride, inner = line % stride;
    std::size_t base = outer * block + inner;
    std::vector<Fp> buf(dim.length);
    for (std::size_t k = 0; k < dim.length; ++k)
      buf[k] = tensor[base + k * stride];
    if (dim.kind == GridKind::RootsOfUnity) {
      ntt_transform(F, buf, dim.root, !forward);
    } else if (forward) {
      std::vector<Fp> vals(dim.length);
      for (std::size_t k = 0; k < dim.length; ++k) {
        Fp x = dim.point(F, k);
        Fp acc = F.zero();
        for (std::size_t j = dim.length; j-- > 0;)
          acc = F.add(F.mul(acc, x), buf[j]);
        vals[k] = acc;
      }
      buf = std::move(vals);
    } else {
      std::vector<Fp> xs(dim.length);
      for (std::size_t k = 0; k < dim.length; ++k) xs[k] = dim.point(F, k);
      DensePoly1 f = dp_newton_interp(F, xs, buf);
      for (std::size_t k = 0; k < dim.length; ++k)
        buf[k] = k < f.c.size() ? f.c[k] : F.zero();
    }
    for (std::size_t k = 0; k < dim.length; ++k)
      tensor[base + k * stride] = buf[k];
  }, 4);
}

void fill_coeff_tensor(const MultiPoly& f, const Grid& g, std::size_t axis,
                       std::size_t base, std::vector<Fp>& tensor,
                       const std::vector<std::size_t>& strides) {
  if (axis == g.axes()) {
    // All axes consumed; f must be constant here.
    tensor[base] = f.is_zero() ? Fp{} : f.constant_value();
    return;
  }
  int v = static_cast<int>(axis);
  int d = f.degree(v);
  if (d + 1 > static_cast<int>(g.dims()[axis].length))
    throw precondition_error("grid too small: degree " + std::to_string(d) +
                             " in variable " + std::to_string(v) +
                             " exceeds axis length " +
                             std::to_string(g.dims()[axis].length));
  if (f.is_zero()) return;
  for (int e = 0; e <= std::max(d, 0); ++e)
    fill_coeff_tensor(f.coeff_in(v, e), g, axis + 1,
                      base + static_cast<std::size_t>(e) * strides[axis],
                      tensor, strides);
}

// Builds with the highest axis outermost so children stay below their level,
// as the canonical representation requires.
MultiPoly read_coeff_tensor(const CtxPtr& ctx, const std::vector<Fp>& tensor,
                            const Grid& g, std::size_t levels_left,
                            std::size_t base,
                            const std::vector<std::size_t>& strides) {
  if (levels_left == 0) return MultiPoly::constant(ctx, tensor[base]);
  std::size_t axis = levels_left - 1;
  std::size_t len = g.dims()[axis].length;
  std::vector<MultiPoly> coeffs;
  coeffs.reserve(len);
  for (std::size_t e = 0; e < len; ++e)
    coeffs.push_back(read_coeff_tensor(ctx, tensor, g, axis,
                                       base + e * strides[axis], strides));
  return MultiPoly::from_coeffs(ctx, static_cast<int>(axis),
                                std::move(coeffs));
}

std::vector<std::size_t> axis_strides(const Grid& g) {
  std::vector<std::size_t> strides(g.axes(), 1);
  for (std::size_t i = g.axes(); i-- > 1;)
    strides[i - 1] = strides[i] * g.dims()[i].length;
  return strides;
}

}  // namespace

std::vector<Fp> grid_eval(const MultiPoly& f, const Grid& g) {
  if (f.main_var() >= static_cast<int>(g.axes()))
    throw precondition_error("polynomial involves variables beyond the grid");
  const PrimeField& F = g.field();
  std::vector<Fp> tensor(g.total_points(), F.zero());
  std::vector<std::size_t> strides = axis_strides(g);
  fill_coeff_tensor(f, g, 0, 0, tensor, strides);
  for (std::size_t a = 0; a < g.axes(); ++a)
    transform_axis(F, tensor, g.dims(), a, true);
  return tensor;
}

MultiPoly grid_interp(const CtxPtr& ctx, const std::vector<Fp>& values,
                      const Grid& g) {
  if (values.size() != g.total_points())
    throw precondition_error("value tensor size does not match the grid");
  if (ctx->field.modulus() != g.field().modulus())
    throw precondition_error("context and grid use different primes");
  std::vector<Fp> tensor = values;
  for (std::size_t a = 0; a < g.axes(); ++a)
    transform_axis(g.field(), tensor, g.dims(), a, false);
  std::vector<std::size_t> strides = axis_strides(g);
  return read_coeff_tensor(ctx, tensor, g, g.axes(), 0, strides);
}

}  // namespace tricube
