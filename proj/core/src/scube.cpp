#include "tricube/scube.hpp"

#include <ostream>
#include <random>
#include <utility>

#include "tricube/densepoly.hpp"
#include "tricube/pll.hpp"

namespace tricube {

namespace {

MultiPoly apply_shift(const MultiPoly& f, const std::vector<uint64_t>& shift) {
  MultiPoly r = f;
  for (std::size_t i = 0; i < shift.size(); ++i)
    if (shift[i] != 0) r = r.subst_shift(static_cast<int>(i), Fp{shift[i]});
  return r;
}

bool all_nonzero(const std::vector<Fp>& v) {
  for (Fp x : v)
    if (x.v == 0) return false;
  return true;
}

void put_u64(std::ostream& os, uint64_t x) {
  char b[8];
  for (int i = 0; i < 8; ++i) b[i] = static_cast<char>((x >> (8 * i)) & 0xff);
  os.write(b, 8);
}

}  // namespace

Scube Scube::build(const MultiPoly& P, const MultiPoly& Q, int y,
                   const ScubeOptions& opt) {
  check_same_ctx(P, Q);
  if (P.is_constant() || Q.is_constant() || P.main_var() != y ||
      Q.main_var() != y)
    throw precondition_error("both inputs must have the given main variable");
  Scube s;
  s.P_ = P;
  s.Q_ = Q;
  s.y_ = y;
  s.p_ = P.degree(y);
  s.q_ = Q.degree(y);
  s.seed_ = opt.seed;
  if (s.p_ < s.q_ || s.q_ < 1)
    throw precondition_error("degree order: need deg(P,y) >= deg(Q,y) >= 1");

  const CtxPtr& ctx = P.ctx();
  const PrimeField& F = ctx->field;
  s.bounds_.resize(static_cast<std::size_t>(y));
  for (int i = 0; i < y; ++i)
    s.bounds_[static_cast<std::size_t>(i)] =
        P.degree(i) * s.q_ + Q.degree(i) * s.p_;
  s.grid_.emplace(Grid::make(F, s.bounds_, opt.grid));
  const Grid& grid = *s.grid_;

  // Find a specialization that keeps both initials nonzero everywhere on the
  // grid: plain coordinates first, then seeded random shifts.
  s.shift_.assign(static_cast<std::size_t>(y), 0);
  MultiPoly Ps = P, Qs = Q;
  bool clean = false;
  for (int attempt = 0; attempt <= 5 && !clean; ++attempt) {
    if (attempt > 0) {
      std::mt19937_64 rng(opt.seed + static_cast<uint64_t>(attempt));
      for (std::size_t i = 0; i < s.shift_.size(); ++i)
        s.shift_[i] = rng() % F.modulus();
      Ps = apply_shift(P, s.shift_);
      Qs = apply_shift(Q, s.shift_);
    }
    clean = all_nonzero(grid_eval(Ps.coeff_in(y, s.p_), grid)) &&
            all_nonzero(grid_eval(Qs.coeff_in(y, s.q_), grid));
  }
  if (!clean)
    throw unsupported_error(
        "no shift attempt kept the initials nonzero on the whole grid");

  std::size_t N = grid.total_points();
  std::vector<std::vector<Fp>> pv(static_cast<std::size_t>(s.p_) + 1);
  std::vector<std::vector<Fp>> qv(static_cast<std::size_t>(s.q_) + 1);
  for (int k = 0; k <= s.p_; ++k)
    pv[static_cast<std::size_t>(k)] = grid_eval(Ps.coeff_in(y, k), grid);
  for (int k = 0; k <= s.q_; ++k)
    qv[static_cast<std::size_t>(k)] = grid_eval(Qs.coeff_in(y, k), grid);

  s.values_.resize(static_cast<std::size_t>(s.q_));
  for (int j = 0; j < s.q_; ++j)
    s.values_[static_cast<std::size_t>(j)].assign(
        static_cast<std::size_t>(j) + 1, std::vector<Fp>(N));

  parallel_for(N, [&](std::size_t pt) {
    DensePoly1 a, b;
    a.c.resize(static_cast<std::size_t>(s.p_) + 1);
    b.c.resize(static_cast<std::size_t>(s.q_) + 1);
    for (int k = 0; k <= s.p_; ++k)
      a.c[static_cast<std::size_t>(k)] = pv[static_cast<std::size_t>(k)][pt];
    for (int k = 0; k <= s.q_; ++k)
      b.c[static_cast<std::size_t>(k)] = qv[static_cast<std::size_t>(k)][pt];
    SubresChainFp ch = dp_subres_chain(F, a, b);
    for (int j = 0; j < s.q_; ++j) {
      const DensePoly1& sj = ch.s[static_cast<std::size_t>(j)];
      for (int k = 0; k <= j; ++k)
        s.values_[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)]
                 [pt] = k < static_cast<int>(sj.c.size())
                            ? sj.c[static_cast<std::size_t>(k)]
                            : F.zero();
    }
  }, 16);

  s.full_cache_.resize(static_cast<std::size_t>(s.q_));
  s.lc_cache_.resize(static_cast<std::size_t>(s.q_) + 1);
  return s;
}

bool Scube::row_zero(int j) const {
  if (j < 0 || j >= q_) throw precondition_error("chain index out of range");
  for (const std::vector<Fp>& t : values_[static_cast<std::size_t>(j)])
    for (Fp x : t)
      if (x.v != 0) return false;
  return true;
}

MultiPoly Scube::interp_unshift(const std::vector<Fp>& values) const {
  MultiPoly g = grid_interp(P_.ctx(), values, *grid_);
  const PrimeField& F = P_.ctx()->field;
  for (std::size_t i = 0; i < shift_.size(); ++i)
    if (shift_[i] != 0)
      g = g.subst_shift(static_cast<int>(i), F.sub(F.zero(), Fp{shift_[i]}));
  return g;
}

const MultiPoly& Scube::full(int j) {
  if (j < 0 || j >= q_) throw precondition_error("chain index out of range");
  std::optional<MultiPoly>& slot = full_cache_[static_cast<std::size_t>(j)];
  if (!slot) {
    std::vector<MultiPoly> coeffs;
    coeffs.reserve(static_cast<std::size_t>(j) + 1);
    for (int k = 0; k <= j; ++k)
      coeffs.push_back(interp_unshift(
          values_[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)]));
    slot = MultiPoly::from_univar(P_.ctx(), y_, std::move(coeffs));
  }
  return *slot;
}

const MultiPoly& Scube::principal(int j) {
  if (j < 0 || j > q_) throw precondition_error("chain index out of range");
  std::optional<MultiPoly>& slot = lc_cache_[static_cast<std::size_t>(j)];
  if (!slot) {
    if (j == q_)
      slot = Q_.coeff_in(y_, q_).pow(static_cast<uint64_t>(p_ - q_));
    else
      slot = interp_unshift(
          values_[static_cast<std::size_t>(j)][static_cast<std::size_t>(j)]);
  }
  return *slot;
}

void Scube::dump(std::ostream& os) const {
  const PrimeField& F = P_.ctx()->field;
  put_u64(os, F.modulus());
  put_u64(os, static_cast<uint64_t>(y_));
  put_u64(os, static_cast<uint64_t>(p_));
  put_u64(os, static_cast<uint64_t>(q_));
  for (int b : bounds_) put_u64(os, static_cast<uint64_t>(b));
  put_u64(os, seed_);
  for (uint64_t c : shift_) put_u64(os, c);
  for (const auto& row : values_)
    for (const auto& tensor : row)
      for (Fp x : tensor) put_u64(os, x.v);
}

ClassicalProvider::ClassicalProvider(const MultiPoly& P, const MultiPoly& Q,
                                     int y)
    : ch_(subres_chain_m(P, Q, y)) {
  lc_cache_.resize(static_cast<std::size_t>(ch_.q) + 1);
}

const MultiPoly& ClassicalProvider::principal(int j) {
  if (j < 0 || j > ch_.q) throw precondition_error("chain index out of range");
  std::optional<MultiPoly>& slot = lc_cache_[static_cast<std::size_t>(j)];
  if (!slot) {
    if (j == ch_.q)
      slot = ch_.sq;
    else
      slot = ch_.s[static_cast<std::size_t>(j)].coeff_in(ch_.var, j);
  }
  return *slot;
}

const MultiPoly& ClassicalProvider::full(int j) {
  if (j < 0 || j >= ch_.q) throw precondition_error("chain index out of range");
  return ch_.s[static_cast<std::size_t>(j)];
}

bool ClassicalProvider::row_zero(int j) {
  if (j < 0 || j >= ch_.q) throw precondition_error("chain index out of range");
  return ch_.s[static_cast<std::size_t>(j)].is_zero();
}

std::unique_ptr<SubresProvider> make_provider(const MultiPoly& P,
                                              const MultiPoly& Q, int y,
                                              const ScubeOptions& opt) {
  int p = P.degree(y), q = Q.degree(y);
  bool fits = p >= q && q >= 1;
  for (int i = 0; fits && i < y; ++i) {
    uint64_t b = static_cast<uint64_t>(P.degree(i)) * static_cast<uint64_t>(q) +
                 static_cast<uint64_t>(Q.degree(i)) * static_cast<uint64_t>(p);
    fits = b + 1 <= P.ctx()->field.modulus();
  }
  if (fits) {
    try {
      return std::make_unique<ScubeProvider>(Scube::build(P, Q, y, opt));
    } catch (const unsupported_error&) {
      // All shift attempts hit a vanishing initial; the direct chain has no
      // specialization to protect.
    }
  }
  return std::make_unique<ClassicalProvider>(P, Q, y);
}

}  // namespace tricube
