// Copyright 2026 The symrig Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Numerical rigidity oracle: random symmetric placements, the rigidity
// matrix of the covering framework, and kernels restricted to the velocity
// subspaces that transform by a character of the group.

#pragma once

#include <Eigen/Core>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "symrig/covering.hpp"
#include "symrig/error.hpp"
#include "symrig/gain_graph.hpp"
#include "symrig/group.hpp"

namespace symrig {

struct Placement {
  std::uint64_t seed = 0;
  Eigen::MatrixX2d quotient;  // p'(v), one row per quotient vertex
  Eigen::MatrixX2d full;      // p((g, v)) = tau(g) p'(v), rows in covering order
};

/// Quotient coordinates drawn uniformly from [-1, 1]^2, extended equivariantly.
/// Redrawn (at most 100 times) until the covering points are pairwise distinct.
inline Placement symmetric_generic_placement(const GainGraph& g, std::uint64_t seed) {
  const GroupSpec& grp = g.group();
  const std::size_t n = g.vertex_count();
  const std::size_t total = grp.order() * n;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coord(-1.0, 1.0);
  for (int attempt = 0; attempt < 100; ++attempt) {
    Placement p{seed, Eigen::MatrixX2d(n, 2), Eigen::MatrixX2d(total, 2)};
    for (std::size_t v = 0; v < n; ++v) {
      p.quotient(v, 0) = coord(rng);
      p.quotient(v, 1) = coord(rng);
    }
    for (const auto& gamma : grp.elements()) {
      const Eigen::Matrix2d t = grp.tau(gamma);
      for (std::size_t v = 0; v < n; ++v)
        p.full.row(lift_index(grp, n, gamma, v)) = (t * p.quotient.row(v).transpose()).transpose();
    }
    bool distinct = true;
    for (std::size_t a = 0; a < total && distinct; ++a)
      for (std::size_t b = a + 1; b < total && distinct; ++b)
        distinct = (p.full.row(a) - p.full.row(b)).norm() > 1e-9;
    if (distinct) return p;
  }
  throw Indeterminate("could not draw an injective placement in 100 attempts");
}

/// One row per covering edge {i, j}: p_i - p_j in the columns of i, p_j - p_i in those of j.
inline Eigen::MatrixXd build_rigidity_matrix(const CoveringGraph& cov, const Placement& p) {
  if (static_cast<std::size_t>(p.full.rows()) != cov.vertex_count())
    throw InvalidInput("placement does not match the covering graph");
  Eigen::MatrixXd r = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(cov.edge_count()),
                                            static_cast<Eigen::Index>(2 * cov.vertex_count()));
  for (std::size_t e = 0; e < cov.edge_count(); ++e) {
    const auto [i, j] = cov.graph().edges[e];
    const Eigen::RowVector2d d = p.full.row(i) - p.full.row(j);
    const auto row = static_cast<Eigen::Index>(e);
    r.block<1, 2>(row, static_cast<Eigen::Index>(2 * i)) = d;
    r.block<1, 2>(row, static_cast<Eigen::Index>(2 * j)) = -d;
  }
  return r;
}

/// Columns parameterize velocities by their values on the vertices (id, v):
/// u_{(g, v)} = omega^{-t e(g)} tau(g) u_v with omega = exp(2 pi i / m), where
/// e(g) is the exponent of g in the cyclic group of order m. t = 0 is also
/// accepted for dihedral groups.
inline Eigen::MatrixXcd iota_subspace_basis(const GainGraph& g, int t) {
  const GroupSpec& grp = g.group();
  const std::size_t n = g.vertex_count();
  int modulus = 1;
  if (!grp.is_abstractly_cyclic()) {
    if (t != 0) throw Unsupported("characters t != 0 are not available for dihedral groups");
  } else {
    modulus = grp.character_modulus();
  }
  const int tt = ((t % modulus) + modulus) % modulus;
  Eigen::MatrixXcd b = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(2 * grp.order() * n),
                                              static_cast<Eigen::Index>(2 * n));
  for (const auto& gamma : grp.elements()) {
    std::complex<double> phase = 1.0;
    if (tt != 0) {
      const int e = grp.character_exponent(gamma);
      const int step = (tt * e) % modulus;
      if (step == 0) {
        phase = 1.0;
      } else if (2 * step == modulus) {
        phase = -1.0;
      } else {
        phase = std::polar(1.0, -2.0 * std::numbers::pi * step / modulus);
      }
    }
    const Eigen::Matrix2cd block = phase * grp.tau(gamma).cast<std::complex<double>>();
    for (std::size_t v = 0; v < n; ++v) {
      const auto row = static_cast<Eigen::Index>(2 * lift_index(grp, n, gamma, v));
      b.block<2, 2>(row, static_cast<Eigen::Index>(2 * v)) = block;
    }
  }
  return b;
}

namespace detail {

inline constexpr double kRelativeTolerance = 1e-8;

/// Singular values above tol * max(s_0, scale). A restriction R B passes the
/// scale of R so that a block made only of rounding noise has rank 0.
template <class Matrix>
std::size_t numerical_rank(const Matrix& m, double tol = kRelativeTolerance, double scale = 0.0) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  Eigen::BDCSVD<Matrix> svd(m);
  const auto& s = svd.singularValues();
  if (s.size() == 0) return 0;
  const double cutoff = tol * std::max(s(0), scale);
  if (cutoff == 0.0) return 0;
  std::size_t r = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) > cutoff) ++r;
  return r;
}

}  // namespace detail

/// Dimension of the trivial motions that transform by character t.
inline std::size_t trivial_motion_dim(const GroupSpec& grp, int t, std::size_t quotient_vertices) {
  if (grp.order() == 1) return quotient_vertices <= 1 ? 2 : 3;
  if (grp.kind() == GroupKind::dihedral && grp.k() > 1) {
    if (t != 0) throw Unsupported("characters t != 0 are not available for dihedral groups");
    return 0;
  }
  const int m = static_cast<int>(grp.order());
  const int tt = ((t % m) + m) % m;
  if (m == 2) return tt == 0 ? 1 : 2;
  return (tt == 0 || tt == 1 || tt == m - 1) ? 1 : 0;
}

struct MotionSpaceReport {
  int t = 0;
  std::size_t subspace_dim = 0;
  std::size_t rank = 0;
  std::size_t kernel_dim = 0;
  std::size_t trivial_dim = 0;
  bool rigid = false;
  std::uint64_t seed = 0;
};

/// Kernel of R restricted to the character-t subspace at one placement.
inline MotionSpaceReport motion_space_at(const GainGraph& g, const CoveringGraph& cov, const Placement& p, int t,
                                         double tol = detail::kRelativeTolerance) {
  const GroupSpec& grp = g.group();
  MotionSpaceReport out;
  out.t = t;
  out.seed = p.seed;
  out.trivial_dim = trivial_motion_dim(grp, t, g.vertex_count());
  const Eigen::MatrixXd r = build_rigidity_matrix(cov, p);
  const Eigen::MatrixXcd b = iota_subspace_basis(g, t);
  out.subspace_dim = static_cast<std::size_t>(b.cols());
  const bool real = b.imag().cwiseAbs().maxCoeff() == 0.0;
  // Basis columns have norm sqrt|Gamma|.
  const double scale = r.norm() * std::sqrt(static_cast<double>(grp.order()));
  if (real) {
    const Eigen::MatrixXd rb = r * b.real();
    out.rank = detail::numerical_rank(rb, tol, scale);
  } else {
    const Eigen::MatrixXcd rb = r.cast<std::complex<double>>() * b;
    out.rank = detail::numerical_rank(rb, tol, scale);
  }
  out.kernel_dim = out.subspace_dim - out.rank;
  if (out.kernel_dim < out.trivial_dim)
    throw Indeterminate("kernel of dimension " + std::to_string(out.kernel_dim) +
                        " is smaller than the trivial motion space");
  out.rigid = out.kernel_dim == out.trivial_dim;
  return out;
}

/// motion_space_at for every seed; the kernel dimensions must agree.
inline MotionSpaceReport motion_space(const GainGraph& g, int t, const std::vector<std::uint64_t>& seeds = {1, 2, 3},
                                      double tol = detail::kRelativeTolerance) {
  if (seeds.empty()) throw InvalidInput("at least one seed is required");
  const CoveringGraph cov = expand(g);
  std::optional<MotionSpaceReport> first;
  for (std::uint64_t s : seeds) {
    const auto report = motion_space_at(g, cov, symmetric_generic_placement(g, s), t, tol);
    if (!first) {
      first = report;
    } else if (report.kernel_dim != first->kernel_dim) {
      throw Indeterminate("kernel dimension differs between seeds " + std::to_string(first->seed) + " and " +
                          std::to_string(s));
    }
  }
  return *first;
}

struct NumericRigidity {
  bool rigid = false;
  std::size_t rank = 0;
  std::size_t required_rank = 0;           // 2|V~| - 3, or 0 for a single point
  std::vector<MotionSpaceReport> characters;  // every character, for abstractly cyclic groups
};

/// rank R = 2|V~| - 3 at every seed. For abstractly cyclic groups the ranks of
/// the character blocks must add up to rank R and their verdicts must agree
/// with the full one; a mismatch raises Indeterminate.
inline NumericRigidity is_rigid_numeric(const GainGraph& g, const std::vector<std::uint64_t>& seeds = {1, 2, 3},
                                        double tol = detail::kRelativeTolerance) {
  if (seeds.empty()) throw InvalidInput("at least one seed is required");
  const GroupSpec& grp = g.group();
  const CoveringGraph cov = expand(g);
  const std::size_t total = cov.vertex_count();
  std::optional<NumericRigidity> first;
  for (std::uint64_t s : seeds) {
    const Placement p = symmetric_generic_placement(g, s);
    NumericRigidity out;
    out.rank = detail::numerical_rank(build_rigidity_matrix(cov, p), tol);
    out.required_rank = total >= 2 ? 2 * total - 3 : 0;
    out.rigid = out.rank >= out.required_rank;
    if (grp.is_abstractly_cyclic()) {
      const int m = static_cast<int>(grp.order());
      std::size_t sum = 0;
      bool all = true;
      for (int t = 0; t < m; ++t) {
        out.characters.push_back(motion_space_at(g, cov, p, t, tol));
        sum += out.characters.back().rank;
        all = all && out.characters.back().rigid;
      }
      if (sum != out.rank)
        throw Indeterminate("character ranks add up to " + std::to_string(sum) + " but the full rank is " +
                            std::to_string(out.rank));
      if (all != out.rigid) throw Indeterminate("character verdicts disagree with the full rank test");
    }
    if (!first) {
      first = std::move(out);
    } else if (out.rank != first->rank) {
      throw Indeterminate("rigidity matrix rank differs between seeds");
    }
  }
  return *first;
}

}  // namespace symrig
