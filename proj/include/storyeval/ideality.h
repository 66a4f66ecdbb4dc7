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

// Human-likeness scoring against a designated human row of a score matrix.
//
// For a metric with machine score ms and human score hs the gap is
// |ms - hs|, and its contribution is 1 / sigmoid(gap) = 1 + exp(-gap), which
// falls from 2 (exact match) towards 1 (far away). Ideality sums the
// contributions over the metrics a model shares with the human row, so for
// m shared metrics it lies in (m, 2m]; normalized ideality divides by m.
// Weighted ideality scales each contribution by a per-metric weight drawn
// under an L1 or L2 norm constraint.

#ifndef STORYEVAL_IDEALITY_H_
#define STORYEVAL_IDEALITY_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "storyeval/corpus.h"

namespace storyeval {

double Sigmoid(double x);

// 1 / sigmoid(gap), evaluated as 1 + exp(-gap).
double GapContribution(double gap);

struct IdealityOptions {
  // Divide each gap by the population standard deviation of its metric
  // column. Off by default; a sensitivity-analysis variant, not the
  // published score.
  bool standardize_gaps = false;
};

// Gap per metric for `model`, std::nullopt where either the model or the
// human value is missing.
std::vector<std::optional<double>> MetricGaps(const ScoreMatrix& matrix,
                                              std::string_view model,
                                              const IdealityOptions& options = {});

// Closest-to-human result for one metric. The human row never competes.
struct ChScore {
  size_t metric = 0;
  std::string model;                // lexicographically first among ties
  double gap = 0.0;
  std::vector<std::string> tied;    // all models at the minimal gap, sorted

  bool is_tie() const { return tied.size() > 1; }
};

// std::nullopt (metric excluded) when the human value is missing or no
// machine model has a value.
std::optional<ChScore> ClosestToHuman(const ScoreMatrix& matrix, size_t metric);

struct IdealityScore {
  std::string model;
  double raw = 0.0;
  size_t evaluated_metrics = 0;
  double normalized = 0.0;
};

// std::nullopt when the model shares no metric with the human row.
std::optional<IdealityScore> Ideality(const ScoreMatrix& matrix,
                                      std::string_view model,
                                      const IdealityOptions& options = {});

enum class NormKind { kL1, kL2 };

std::string_view NormKindName(NormKind kind);  // "l1" / "l2"
NormKind ParseNormKind(std::string_view text);  // throws ConfigError

struct WeightVector {
  std::vector<double> weights;  // aligned to ScoreMatrix::metrics()
  NormKind kind = NormKind::kL1;

  // All ones; satisfies the L1 constraint sum(w) == dim.
  static WeightVector Ones(size_t dim);
};

// L1: `dim` unit exponentials divided by their sum, times dim (uniform on the
// scaled simplex). L2: absolute values of `dim` standard normals scaled to
// Euclidean norm dim (uniform on the positive orthant of the sphere).
// Deterministic in `seed`. Requires dim >= 1.
WeightVector SampleWeights(uint64_t seed, NormKind kind, size_t dim);

// Sum of w_i * (1 + exp(-gap_i)) over shared metrics. Throws AlignmentError
// when the weights do not match the metric count; std::nullopt when nothing
// is shared. All-ones weights reproduce Ideality().raw bit for bit.
std::optional<double> WeightedIdeality(const ScoreMatrix& matrix,
                                       std::string_view model,
                                       const WeightVector& weights,
                                       const IdealityOptions& options = {});

struct ModelScore {
  std::string model;
  std::optional<double> score;
};

// One Monte-Carlo draw: a single weight vector applied to every model.
struct McRun {
  size_t run_index = 0;
  NormKind kind = NormKind::kL1;
  uint64_t seed = 0;  // master seed; the stream is StreamSeed(seed, run_index)
  WeightVector weights;
  std::vector<ModelScore> scores;  // in the order of the requested models
};

struct McConfig {
  size_t runs = 1000;
  NormKind kind = NormKind::kL1;
  uint64_t seed = 0;
  IdealityOptions options;
};

// Scores `models` under fixed weights.
McRun ScoreRun(const ScoreMatrix& matrix, std::span<const std::string> models,
               size_t run_index, const WeightVector& weights,
               const IdealityOptions& options = {});

// Runs are independent: run i draws its weights from StreamSeed(seed, i),
// so results do not depend on execution order.
std::vector<McRun> MonteCarlo(const ScoreMatrix& matrix,
                              std::span<const std::string> models,
                              const McConfig& config);

}  // namespace storyeval

#endif  // STORYEVAL_IDEALITY_H_
