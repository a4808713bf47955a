#pragma once

#include <cstdint>
#include <vector>

#include "tricube/field.hpp"
#include "tricube/mpoly.hpp"

namespace tricube {

// Rectangular evaluation grids over F_p. Each axis is either the full set of
// L-th roots of unity (L a power of two dividing p-1, so lines transform with
// the NTT) or L consecutive field elements starting at a configurable offset
// (lines transform with Horner evaluation / Newton interpolation).

enum class GridKind { RootsOfUnity, Consecutive };

struct GridDim {
  GridKind kind = GridKind::Consecutive;
  std::size_t length = 1;
  Fp root;          // RootsOfUnity: a primitive length-th root of unity
  uint64_t offset = 0;  // Consecutive: first sample point

  Fp point(const PrimeField& F, std::size_t k) const;
};

struct GridPrefs {
  bool prefer_ntt = true;
  uint64_t offset = 0;
};

class Grid {
 public:
  // One axis per entry of degree_bounds: axis i must be able to carry
  // polynomials of degree up to degree_bounds[i]. Roots of unity are chosen
  // when the field supports a transform of the padded length; otherwise
  // consecutive points are used. Throws when the prime is too small to
  // provide enough distinct sample points on some axis.
  static Grid make(const PrimeField& F, const std::vector<int>& degree_bounds,
                   const GridPrefs& prefs = {});

  const PrimeField& field() const { return *field_; }
  const std::vector<GridDim>& dims() const { return dims_; }
  std::size_t axes() const { return dims_.size(); }
  std::size_t total_points() const { return total_; }

 private:
  Grid(const PrimeField& F, std::vector<GridDim> dims);

  const PrimeField* field_;
  std::vector<GridDim> dims_;
  std::size_t total_ = 1;
};

// Values of f on every grid point, row-major with the last axis fastest.
// Axis i samples variable i of f's context; f must not involve variables
// beyond the grid axes, and deg(f, x_i) must be smaller than the axis length
// (otherwise evaluation is not invertible and a grid-too-small error is
// thrown).
std::vector<Fp> grid_eval(const MultiPoly& f, const Grid& g);

// Inverse of grid_eval: the unique polynomial with deg(f, x_i) < length_i
// matching the given value tensor.
MultiPoly grid_interp(const CtxPtr& ctx, const std::vector<Fp>& values,
                      const Grid& g);

}  // namespace tricube
