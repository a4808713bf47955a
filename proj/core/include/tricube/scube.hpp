#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <vector>

#include "tricube/grid.hpp"
#include "tricube/mpoly.hpp"
#include "tricube/subres.hpp"

namespace tricube {

struct ScubeOptions {
  uint64_t seed = 0;  // drives the affine-shift retries
  GridPrefs grid;
};

/// Subresultant chain of P, Q taken in the variable y, encoded by the values
/// of the univariate chains on a rectangular grid over the variables below
/// y. Values are stored index-major (for each chain index j, one tensor per
/// y-power), so interpolating only the principal coefficients touches one
/// tensor per index. Interpolated polynomials are cached.
///
/// When some grid point kills an initial of P or Q, the whole computation is
/// retried under a random affine substitution x_i := x_i + c_i (seeded,
/// bounded attempts); stored values then live in the shifted coordinates and
/// every interpolated output is shifted back.
class Scube {
 public:
  /// P, Q non-constant with main variable y, deg(P,y) >= deg(Q,y) >= 1.
  /// Throws precondition_error when the prime cannot supply enough sample
  /// points and unsupported_error when all shift attempts hit a vanishing
  /// initial.
  static Scube build(const MultiPoly& P, const MultiPoly& Q, int y,
                     const ScubeOptions& opt = {});

  int var() const { return y_; }
  int degp() const { return p_; }
  int degq() const { return q_; }
  const MultiPoly& P() const { return P_; }
  const MultiPoly& Q() const { return Q_; }
  const Grid& grid() const { return *grid_; }
  /// Shift constants c_i per grid axis; all zero when no shift was needed.
  const std::vector<uint64_t>& shift() const { return shift_; }

  /// Every stored value of S_j is zero; by the degree bounds this proves
  /// S_j = 0. 0 <= j < degq.
  bool row_zero(int j) const;
  /// Interpolated S_j in the original coordinates, 0 <= j < degq. Cached.
  const MultiPoly& full(int j);
  /// Principal coefficient of index j: the coefficient of y^j in S_j for
  /// j < degq (zero exactly when S_j is defective or zero), and the formal
  /// top value lc(Q,y)^(degp-degq) for j == degq. Cached.
  const MultiPoly& principal(int j);
  /// S_0 of the chain, the resultant of P and Q in y.
  const MultiPoly& resultant() { return full(0); }

  /// Raw tensor dump for debugging, little-endian 64-bit words:
  /// prime, naxes, degp, degq, naxes degree bounds, seed, naxes shift
  /// constants, then for j = 0..degq-1 and k = 0..j the value tensor of the
  /// y^k coefficient of S_j in grid row-major order (last axis fastest),
  /// in the shifted coordinates.
  void dump(std::ostream& os) const;

 private:
  Scube() = default;

  MultiPoly interp_unshift(const std::vector<Fp>& values) const;

  MultiPoly P_, Q_;  // original coordinates
  int y_ = -1;
  int p_ = 0;
  int q_ = 0;
  uint64_t seed_ = 0;
  std::vector<int> bounds_;
  std::optional<Grid> grid_;
  std::vector<uint64_t> shift_;
  // values_[j][k] is the tensor of the y^k coefficient of S_j.
  std::vector<std::vector<std::vector<Fp>>> values_;
  std::vector<std::optional<MultiPoly>> full_cache_;
  std::vector<std::optional<MultiPoly>> lc_cache_;
};

/// Uniform access to one subresultant chain for the gcd machinery: either
/// grid-backed (interpolating on demand) or computed directly over the
/// polynomial ring when the prime is too small for a grid.
class SubresProvider {
 public:
  virtual ~SubresProvider() = default;
  virtual int degp() const = 0;
  virtual int degq() const = 0;
  virtual int var() const = 0;
  /// S_0.
  virtual const MultiPoly& resultant() = 0;
  /// Principal coefficient s_j, 0 <= j <= degq (j == degq is the formal top).
  virtual const MultiPoly& principal(int j) = 0;
  /// Full S_j, 0 <= j < degq.
  virtual const MultiPoly& full(int j) = 0;
  virtual bool row_zero(int j) = 0;
};

class ScubeProvider final : public SubresProvider {
 public:
  explicit ScubeProvider(Scube s) : s_(std::move(s)) {}
  int degp() const override { return s_.degp(); }
  int degq() const override { return s_.degq(); }
  int var() const override { return s_.var(); }
  const MultiPoly& resultant() override { return s_.resultant(); }
  const MultiPoly& principal(int j) override { return s_.principal(j); }
  const MultiPoly& full(int j) override { return s_.full(j); }
  bool row_zero(int j) override { return s_.row_zero(j); }
  Scube& scube() { return s_; }

 private:
  Scube s_;
};

/// Fallback: the chain computed once over k[x...] by the classical
/// relations. Same index conventions as the grid encoding.
class ClassicalProvider final : public SubresProvider {
 public:
  ClassicalProvider(const MultiPoly& P, const MultiPoly& Q, int y);
  int degp() const override { return ch_.p; }
  int degq() const override { return ch_.q; }
  int var() const override { return ch_.var; }
  const MultiPoly& resultant() override { return ch_.s[0]; }
  const MultiPoly& principal(int j) override;
  const MultiPoly& full(int j) override;
  bool row_zero(int j) override;

 private:
  SubresChainM ch_;
  std::vector<std::optional<MultiPoly>> lc_cache_;
};

/// Builds the grid-backed provider when every axis fits in the prime
/// (bound + 1 <= p) and falls back to the classical one when the prime is
/// too small or the shift attempts run out.
std::unique_ptr<SubresProvider> make_provider(const MultiPoly& P,
                                              const MultiPoly& Q, int y,
                                              const ScubeOptions& opt = {});

}  // namespace tricube
