#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "tricube/mpoly.hpp"
#include "tricube/regchain.hpp"

namespace tricube {

/// Dense polynomial in which every monomial of total degree <= d carries an
/// independent uniform coefficient; the draw is redone until the degree-d
/// homogeneous part is nonzero.
MultiPoly random_dense(const CtxPtr& ctx, std::mt19937_64& rng, int d);

/// Two polynomials as above, redrawn until both have the top context
/// variable as main variable.
std::pair<MultiPoly, MultiPoly> random_dense_system(const CtxPtr& ctx,
                                                    uint64_t seed, int d);

/// Bivariate pair built as products of `blocks` linear-rooted factors each:
/// P = prod_i (y - c_i x - d_i), Q = prod_i (y - e_i x - f_i). Two of Q's
/// factors are arranged to cross two of P's factors at the same x over
/// different y values, so that fiber has at least two points while generic
/// fibers have one; a single chain cannot carry fibers of unequal degree.
/// Requires a 2-variable context, blocks >= 2 and p >= 5.
std::pair<MultiPoly, MultiPoly> non_equiprojectable_system(const CtxPtr& ctx,
                                                           uint64_t seed,
                                                           int blocks);

/// Normalized zero-dimensional chain: one polynomial per context variable,
/// monic of degree degs[v] >= 1 in x_v, lower coefficients fully reduced
/// with respect to the tower below (exponent of x_w below degs[w]).
RegularChain random_monic_tower(const CtxPtr& ctx, std::mt19937_64& rng,
                                const std::vector<int>& degs);

}  // namespace tricube
