// Copyright 2026 The lipkit Authors
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

#include <array>
#include <cmath>
#include <random>

#include "doctest.h"
#include "lipkit/convex.hpp"
#include "lipkit/error.hpp"
#include "oracles.hpp"

using namespace lipkit;

namespace {

PolyhedralGauge Box(std::size_t dim) {
  DenseMatrix rows(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) rows(i, i) = 1.0;
  return PolyhedralGauge(dim, rows);
}

PolyhedralGauge Strip() { return PolyhedralGauge(2, DenseMatrix{{1.0, 0.0}}); }

double Support(const PolyhedralGauge& g, std::vector<double> x) {
  const SupportValue v = ComputeSupportValue(g, DualVector{std::move(x)});
  REQUIRE_FALSE(IsUnbounded(v));
  return std::get<double>(v);
}

// Integer rows in [-2, 2] of the given rank, built as integer combinations of
// a random integer basis so the rank is exact.
PolyhedralGauge RandomGauge(std::size_t dim, std::size_t rank, std::size_t k,
                            std::mt19937_64& gen) {
  REQUIRE(rank <= k);
  for (;;) {
    DenseMatrix basis(rank, dim);
    for (std::size_t t = 0; t < rank; ++t) {
      for (std::size_t i = 0; i < dim; ++i) basis(t, i) = static_cast<double>(gen() % 5) - 2.0;
    }
    DenseMatrix rows(k, dim);
    for (std::size_t r = 0; r < k; ++r) {
      for (std::size_t t = 0; t < rank; ++t) {
        const double c = static_cast<double>(gen() % 5) - 2.0;
        for (std::size_t i = 0; i < dim; ++i) rows(r, i) += c * basis(t, i);
      }
    }
    PolyhedralGauge g(dim, rows);
    if (g.rank() == rank) return g;
  }
}

}  // namespace

TEST_CASE("gauge evaluation") {
  CHECK(GaugeEval(Box(2), std::vector<double>{3, -4}) == 4.0);
  const PolyhedralGauge strip = Strip();
  CHECK(GaugeEval(strip, std::vector<double>{0, 7}) == 0.0);
  CHECK(strip.degenerate());
  CHECK_FALSE(Box(3).degenerate());
  CHECK_THROWS_AS(GaugeEval(strip, std::vector<double>{1, 2, 3}), Error);
  CHECK_THROWS_AS(PolyhedralGauge(2, DenseMatrix(0, 2)), Error);
  CHECK_THROWS_AS(PolyhedralGauge(3, DenseMatrix{{1.0, 0.0}}), Error);

  std::mt19937_64 gen(1);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t rank = 1 + gen() % 4;
    const PolyhedralGauge g = RandomGauge(4, rank, rank + gen() % 3, gen);
    std::vector<double> x(4), x2(4), xn(4);
    for (std::size_t i = 0; i < 4; ++i) {
      x[i] = oracle::Uniform(gen, -1, 1);
      x2[i] = 2.0 * x[i];
      xn[i] = -x[i];
    }
    CHECK(GaugeEval(g, x2) == doctest::Approx(2.0 * GaugeEval(g, x)).epsilon(1e-15));
    CHECK(GaugeEval(g, xn) == GaugeEval(g, x));
  }
}

TEST_CASE("support values") {
  CHECK(Support(Box(2), {1, 0}) == doctest::Approx(1.0));
  CHECK(Support(Strip(), {1, 0}) == 1.0);
  CHECK(IsUnbounded(ComputeSupportValue(Strip(), DualVector{{0, 1}})));
  CHECK(Support(Box(2), {0.5, 0.5}) == doctest::Approx(1.0));
  // The box support is the l1 norm of the dual vector.
  std::mt19937_64 gen(6);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> x(3);
    for (double& v : x) v = oracle::Uniform(gen, -2, 2);
    CHECK(Support(Box(3), x) == doctest::Approx(std::fabs(x[0]) + std::fabs(x[1]) + std::fabs(x[2])));
  }
}

TEST_CASE("barrier and polar membership") {
  CHECK_FALSE(BarrierMembership(Strip(), DualVector{{0, 1}}));
  CHECK(BarrierMembership(Strip(), DualVector{{5, 0}}));
  CHECK(PolarMembership(Box(2), DualVector{{0.5, 0.5}}));
  CHECK(PolarMembership(Strip(), DualVector{{0, 0}}));
  CHECK(PolarMembership(Box(4), DualVector{{0, 0, 0, 0}}));
  CHECK_FALSE(PolarMembership(Strip(), DualVector{{0, 1e-6}}));
  CHECK_FALSE(PolarMembership(Box(2), DualVector{{0.75, 0.5}}));
}

TEST_CASE("full-rank gauges put every dual vector in the barrier cone") {
  std::mt19937_64 gen(14);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t dim = 1 + gen() % 5;
    const PolyhedralGauge g = RandomGauge(dim, dim, dim + gen() % 3, gen);
    std::vector<double> x(dim);
    for (double& v : x) v = oracle::Uniform(gen, -1, 1);
    CHECK(BarrierMembership(g, DualVector{x}));
    // Positive homogeneity of the support function.
    std::vector<double> x3 = x;
    for (double& v : x3) v *= 3.0;
    CHECK(Support(g, x3) == doctest::Approx(3.0 * Support(g, x)).epsilon(1e-9));
  }
}

TEST_CASE("barrier membership agrees with both span tests") {
  std::mt19937_64 gen(15);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t dim = 1 + gen() % 6;
    const std::size_t rank = 1 + gen() % dim;
    const PolyhedralGauge g = RandomGauge(dim, rank, rank + gen() % (9 - rank), gen);
    std::vector<double> x(dim, 0.0);
    if (gen() % 2 == 0) {
      for (std::size_t r = 0; r < g.rows().rows(); ++r) {
        const double c = static_cast<double>(gen() % 7) - 3.0;
        for (std::size_t i = 0; i < dim; ++i) x[i] += c * g.rows()(r, i);
      }
    } else {
      for (double& v : x) v = oracle::Uniform(gen, -1, 1);
    }
    const DualVector xs{x};
    const bool barrier = BarrierMembership(g, xs);
    CHECK(barrier == RowSpanContains(g, xs));
    CHECK(barrier == LevelSetSupportFinite(g, xs));
    if (PolarMembership(g, xs)) CHECK(barrier);
  }
}

TEST_CASE("boundedness") {
  CHECK(BoundednessCheck(Box(2)).bounded);
  CHECK_FALSE(BoundednessCheck(Box(2)).witness.has_value());
  const Boundedness strip = BoundednessCheck(Strip());
  CHECK_FALSE(strip.bounded);
  REQUIRE(strip.witness.has_value());
  CHECK(std::fabs((*strip.witness)[0]) < 1e-15);
  CHECK(std::fabs((*strip.witness)[1]) == doctest::Approx(1.0));

  std::mt19937_64 gen(16);
  for (int trial = 0; trial < 30; ++trial) {
    const PolyhedralGauge g = RandomGauge(4, 1 + gen() % 3, 5, gen);
    const Boundedness b = BoundednessCheck(g);
    CHECK_FALSE(b.bounded);
    REQUIRE(b.witness.has_value());
    CHECK(GaugeEval(g, *b.witness) <= 1e-12);
    CHECK(Norm(*b.witness, NormKind::kL2) == doctest::Approx(1.0));
    CHECK(MinOnUnitSphere(g.rows(), NormKind::kLinf) <= 1e-9);
    const PolyhedralGauge full = RandomGauge(4, 4, 5, gen);
    CHECK(BoundednessCheck(full).bounded);
    CHECK(MinOnUnitSphere(full.rows(), NormKind::kLinf) > 1e-9);
    CHECK(MinOnUnitSphere(full.rows(), NormKind::kL1) > 1e-9);
  }
}

TEST_CASE("norming constants") {
  const std::vector<DualVector> basis{{{1, 0}}, {{0, 1}}};
  const NormingResult linf = NormingConstant(basis, NormKind::kLinf);
  CHECK(linf.separating);
  CHECK(linf.c == doctest::Approx(1.0));
  // On the l1 sphere max |x_i| is smallest at (1/2, 1/2).
  const NormingResult l1 = NormingConstant(basis, NormKind::kL1);
  CHECK(l1.c == doctest::Approx(0.5));

  const NormingResult one = NormingConstant({{{1, 0}}, {{0, 0}}}, NormKind::kLinf);
  CHECK_FALSE(one.separating);
  CHECK(one.c == 0.0);
  CHECK_THROWS_AS(NormingConstant({}, NormKind::kL1), Error);

  // Rescaling a vector does not change the normalized set.
  const NormingResult scaled = NormingConstant({{{5, 0}}, {{0, 0.1}}}, NormKind::kLinf);
  CHECK(scaled.c == doctest::Approx(1.0));

  std::mt19937_64 gen(17);
  for (int trial = 0; trial < 30; ++trial) {
    const PolyhedralGauge g = RandomGauge(3, 3, 4, gen);
    std::vector<DualVector> set;
    for (std::size_t r = 0; r < 4; ++r) {
      const auto row = g.rows().row(r);
      set.push_back({std::vector<double>(row.begin(), row.end())});
    }
    CHECK(NormingConstant(set, NormKind::kL1).c > 0.0);
    CHECK(NormingConstant(set, NormKind::kLinf).c > 0.0);
  }
}

TEST_CASE("dual vertex witness realizes the pair distance with a linear map") {
  DenseMatrix points{{0, 0, 0}, {1, 0, 0}, {0, -1, 0}, {1, 1, 1}, {0.5, -2, 0.25}};
  for (NormKind norm : {NormKind::kL1, NormKind::kLinf}) {
    const SpacePtr space = MakeSpace(NormMetricSpace(points, norm, 0));
    for (std::size_t a = 0; a < points.rows(); ++a) {
      for (std::size_t b = a + 1; b < points.rows(); ++b) {
        const DualVertexWitness w =
            MakeDualVertexWitness(points, space, norm, {a, b}, TargetSpace::Scalar());
        const NormKind dual = norm == NormKind::kL1 ? NormKind::kLinf : NormKind::kL1;
        CHECK(Norm(w.functional.coords, dual) == doctest::Approx(1.0));
        CHECK(w.witness.p.GapNorm(a, b) == doctest::Approx(space->dist(a, b)).epsilon(1e-14));
        CHECK(LipNorm(w.witness.p).value <= 1.0 + 1e-12);
      }
    }
  }
}
