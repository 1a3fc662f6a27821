// Copyright 2026 The blotto-iu Authors.
//
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

#include "blotto/iu_strategy.h"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "blotto/error.h"
#include "parallel.h"

namespace blotto {

IUSampler::IUSampler(ValidatedGame game, GammaSolution solution)
    : game_(std::move(game)), marginals_(UniformTypeMarginals(game_, solution)) {}

void IUSampler::SampleInto(Player player, RandomStream& rng, std::span<double> out) const {
  const auto& dists = marginals_.of(player);
  double sum = 0.0;
  for (std::size_t i = 0; i < dists.size(); ++i) {
    out[i] = dists[i].Sample(rng);
    sum += out[i];
  }
  if (sum == 0.0) return;  // every draw was 0: play nothing
  const double budget = game_.budget(player);
  for (std::size_t i = 0; i < dists.size(); ++i) out[i] = budget * (out[i] / sum);
}

Allocation IUSampler::Sample(Player player, RandomStream& rng) const {
  std::vector<double> x(game_.n());
  SampleInto(player, rng, x);
  return Allocation(std::move(x));
}

EmpiricalMarginals::EmpiricalMarginals(std::vector<std::vector<double>> columns)
    : columns_(std::move(columns)) {
  for (auto& c : columns_) std::sort(c.begin(), c.end());
}

double EmpiricalMarginals::FractionBelow(std::size_t i, double x) const {
  const auto& c = columns_[i];
  return static_cast<double>(std::lower_bound(c.begin(), c.end(), x) - c.begin()) /
         static_cast<double>(c.size());
}

double EmpiricalMarginals::FractionEqual(std::size_t i, double x) const {
  const auto& c = columns_[i];
  const auto range = std::equal_range(c.begin(), c.end(), x);
  return static_cast<double>(range.second - range.first) / static_cast<double>(c.size());
}

double EmpiricalMarginals::Cdf(std::size_t i, double x) const {
  const auto& c = columns_[i];
  return static_cast<double>(std::upper_bound(c.begin(), c.end(), x) - c.begin()) /
         static_cast<double>(c.size());
}

SampleBatch DrawBatch(const IUSampler& sampler, Player player, std::size_t m,
                      const RandomStream& root, int threads, bool keep_draws) {
  if (m == 0) ThrowInvalid("sample count must be at least 1");
  const std::size_t n = sampler.game().n();
  std::vector<std::vector<double>> columns(n, std::vector<double>(m));
  SampleBatch batch;
  if (keep_draws) batch.draws.resize(m);
  internal::ParallelFor(m, threads, [&](std::size_t begin, std::size_t end) {
    std::vector<double> x(n);
    for (std::size_t j = begin; j < end; ++j) {
      RandomStream rng = root.Split(j);
      sampler.SampleInto(player, rng, x);
      for (std::size_t i = 0; i < n; ++i) columns[i][j] = x[i];
      if (keep_draws) batch.draws[j] = Allocation(x);
    }
  });
  internal::ParallelFor(n, threads, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) std::sort(columns[i].begin(), columns[i].end());
  });
  batch.marginals = EmpiricalMarginals(std::move(columns));
  return batch;
}

double KolmogorovDistance(const std::vector<double>& sorted, const UniformTypeDistribution& dist) {
  const double m = static_cast<double>(sorted.size());
  if (sorted.empty()) ThrowInvalid("empty sample");
  double gap = 0.0;
  // Both one-sided limits of the step function at every jump point.
  std::size_t lo = 0;
  while (lo < sorted.size()) {
    std::size_t hi = lo;
    while (hi < sorted.size() && sorted[hi] == sorted[lo]) ++hi;
    const double x = sorted[lo];
    gap = std::max(gap, std::fabs(static_cast<double>(lo) / m - dist.CdfBelow(x)));
    gap = std::max(gap, std::fabs(static_cast<double>(hi) / m - dist.Cdf(x)));
    lo = hi;
  }
  // Kinks of the analytic CDF.
  for (double x : {0.0, dist.upper()}) {
    const auto below = std::lower_bound(sorted.begin(), sorted.end(), x) - sorted.begin();
    const auto upto = std::upper_bound(sorted.begin(), sorted.end(), x) - sorted.begin();
    gap = std::max(gap, std::fabs(static_cast<double>(below) / m - dist.CdfBelow(x)));
    gap = std::max(gap, std::fabs(static_cast<double>(upto) / m - dist.Cdf(x)));
  }
  return gap;
}

std::vector<double> MarginalGap(const EmpiricalMarginals& empirical, const MarginalSet& analytic,
                                Player player) {
  const auto& dists = analytic.of(player);
  if (empirical.n() != dists.size()) {
    std::ostringstream os;
    os << "empirical marginals cover " << empirical.n() << " battlefields, analytic "
       << dists.size();
    ThrowInvalid(os.str());
  }
  std::vector<double> gaps;
  for (std::size_t i = 0; i < dists.size(); ++i) {
    gaps.push_back(KolmogorovDistance(empirical.sorted(i), dists[i]));
  }
  return gaps;
}

}  // namespace blotto
