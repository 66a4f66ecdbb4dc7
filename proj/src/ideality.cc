// Copyright 2026 The storyeval Authors.
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

#include "storyeval/ideality.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <thread>

#include "storyeval/errors.h"
#include "storyeval/numeric.h"
#include "storyeval/random.h"

namespace storyeval {
namespace {

std::vector<double> ColumnSpreads(const ScoreMatrix& matrix) {
  std::vector<double> spreads(matrix.metric_count(), 0.0);
  for (size_t j = 0; j < matrix.metric_count(); ++j) {
    std::vector<double> column;
    for (const auto& row : matrix.rows()) {
      if (row.values[j]) column.push_back(*row.values[j]);
    }
    if (column.size() < 2) continue;
    const double mean = Mean(column);
    CompensatedSum ss;
    for (double v : column) ss.Add((v - mean) * (v - mean));
    spreads[j] = std::sqrt(ss.value() / static_cast<double>(column.size()));
  }
  return spreads;
}

// Shared by the weighted and unweighted scores so that unit weights give
// identical floating-point operations.
struct Accumulated {
  double sum = 0.0;
  size_t count = 0;
};

Accumulated Accumulate(std::span<const std::optional<double>> gaps,
                       const std::vector<double>* weights) {
  CompensatedSum sum;
  size_t count = 0;
  for (size_t i = 0; i < gaps.size(); ++i) {
    if (!gaps[i]) continue;
    const double w = weights ? (*weights)[i] : 1.0;
    sum.Add(w * GapContribution(*gaps[i]));
    ++count;
  }
  return {sum.value(), count};
}

}  // namespace

double Sigmoid(double x) { return 1.0 / (1.0 + std::exp(-x)); }

double GapContribution(double gap) { return 1.0 + std::exp(-gap); }

std::vector<std::optional<double>> MetricGaps(const ScoreMatrix& matrix,
                                              std::string_view model,
                                              const IdealityOptions& options) {
  const auto& human = matrix.human().values;
  const auto& values = matrix.row(model).values;
  std::vector<double> spreads;
  if (options.standardize_gaps) spreads = ColumnSpreads(matrix);

  std::vector<std::optional<double>> gaps(matrix.metric_count());
  for (size_t j = 0; j < gaps.size(); ++j) {
    if (!values[j] || !human[j]) continue;
    double gap = std::fabs(*values[j] - *human[j]);
    if (options.standardize_gaps && spreads[j] > 0.0) gap /= spreads[j];
    gaps[j] = gap;
  }
  return gaps;
}

std::optional<ChScore> ClosestToHuman(const ScoreMatrix& matrix,
                                      size_t metric) {
  const auto human = matrix.human().values.at(metric);
  if (!human) return std::nullopt;

  std::optional<ChScore> best;
  for (const auto& row : matrix.rows()) {
    if (row.model == matrix.human_row() || !row.values[metric]) continue;
    const double gap = std::fabs(*row.values[metric] - *human);
    if (!best || gap < best->gap) {
      best = ChScore{metric, row.model, gap, {row.model}};
    } else if (gap == best->gap) {
      best->tied.push_back(row.model);
    }
  }
  if (best) {
    std::sort(best->tied.begin(), best->tied.end());
    best->model = best->tied.front();
  }
  return best;
}

std::optional<IdealityScore> Ideality(const ScoreMatrix& matrix,
                                      std::string_view model,
                                      const IdealityOptions& options) {
  const auto gaps = MetricGaps(matrix, model, options);
  const Accumulated acc = Accumulate(gaps, nullptr);
  if (acc.count == 0) return std::nullopt;
  IdealityScore score;
  score.model = std::string(model);
  score.raw = acc.sum;
  score.evaluated_metrics = acc.count;
  score.normalized = acc.sum / static_cast<double>(acc.count);
  return score;
}

std::string_view NormKindName(NormKind kind) {
  return kind == NormKind::kL1 ? "l1" : "l2";
}

NormKind ParseNormKind(std::string_view text) {
  std::string t(text);
  for (char& c : t) c = static_cast<char>(std::tolower(
                        static_cast<unsigned char>(c)));
  if (t == "l1") return NormKind::kL1;
  if (t == "l2") return NormKind::kL2;
  throw ConfigError("unknown norm '" + std::string(text) +
                    "' (expected l1 or l2)");
}

WeightVector WeightVector::Ones(size_t dim) {
  return WeightVector{std::vector<double>(dim, 1.0), NormKind::kL1};
}

WeightVector SampleWeights(uint64_t seed, NormKind kind, size_t dim) {
  if (dim == 0) throw ConfigError("weight dimension must be >= 1");
  RandomStream rng(seed);
  WeightVector w;
  w.kind = kind;
  w.weights.resize(dim);
  const double target = static_cast<double>(dim);

  if (kind == NormKind::kL1) {
    CompensatedSum total;
    for (double& x : w.weights) {
      x = rng.Exponential();
      total.Add(x);
    }
    const double scale = target / total.value();
    for (double& x : w.weights) x *= scale;
    return w;
  }

  double norm = 0.0;
  do {
    CompensatedSum ss;
    for (double& x : w.weights) {
      x = std::fabs(rng.Normal());
      ss.Add(x * x);
    }
    norm = std::sqrt(ss.value());
  } while (norm == 0.0);
  const double scale = target / norm;
  for (double& x : w.weights) x *= scale;
  return w;
}

std::optional<double> WeightedIdeality(const ScoreMatrix& matrix,
                                       std::string_view model,
                                       const WeightVector& weights,
                                       const IdealityOptions& options) {
  if (weights.weights.size() != matrix.metric_count()) {
    throw AlignmentError("weight vector has " +
                         std::to_string(weights.weights.size()) +
                         " entries but the matrix has " +
                         std::to_string(matrix.metric_count()) + " metrics");
  }
  const auto gaps = MetricGaps(matrix, model, options);
  const Accumulated acc = Accumulate(gaps, &weights.weights);
  if (acc.count == 0) return std::nullopt;
  return acc.sum;
}

McRun ScoreRun(const ScoreMatrix& matrix, std::span<const std::string> models,
               size_t run_index, const WeightVector& weights,
               const IdealityOptions& options) {
  McRun run;
  run.run_index = run_index;
  run.kind = weights.kind;
  run.weights = weights;
  run.scores.reserve(models.size());
  for (const auto& m : models) {
    run.scores.push_back({m, WeightedIdeality(matrix, m, weights, options)});
  }
  return run;
}

std::vector<McRun> MonteCarlo(const ScoreMatrix& matrix,
                              std::span<const std::string> models,
                              const McConfig& config) {
  for (const auto& m : models) matrix.row(m);  // unknown models fail early

  std::vector<McRun> runs(config.runs);
  auto work = [&](size_t begin, size_t end) {
    for (size_t i = begin; i < end; ++i) {
      const auto w = SampleWeights(StreamSeed(config.seed, i), config.kind,
                                   matrix.metric_count());
      runs[i] = ScoreRun(matrix, models, i, w, config.options);
      runs[i].seed = config.seed;
    }
  };

  const size_t hw = std::max(1u, std::thread::hardware_concurrency());
  const size_t workers = std::min<size_t>(hw, config.runs / 256 + 1);
  if (workers <= 1) {
    work(0, config.runs);
    return runs;
  }
  std::vector<std::jthread> pool;
  const size_t chunk = (config.runs + workers - 1) / workers;
  for (size_t begin = 0; begin < config.runs; begin += chunk) {
    pool.emplace_back(work, begin, std::min(config.runs, begin + chunk));
  }
  pool.clear();
  return runs;
}

}  // namespace storyeval
