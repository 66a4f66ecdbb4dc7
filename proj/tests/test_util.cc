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

#include "test_util.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <deque>
#include <fstream>
#include <functional>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include <sys/wait.h>

namespace storyeval::testing {

std::filesystem::path TestData(const std::string& name) {
  return std::filesystem::path(STORYEVAL_TEST_DATA) / name;
}

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void WriteText(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
}

ScoreMatrix LoadLexicalScores() {
  return LoadScoreMatrix(TestData("lexical_scores.csv"), "Humans");
}

TempDir::TempDir() {
  static int counter = 0;
  std::random_device rd;
  path_ = std::filesystem::temp_directory_path() /
          ("storyeval_test_" + std::to_string(rd()) + "_" +
           std::to_string(counter++));
  std::filesystem::create_directories(path_);
}

TempDir::~TempDir() {
  std::error_code ec;
  std::filesystem::remove_all(path_, ec);
}

int RunCli(const std::string& args) {
  const std::string cmd = std::string("\"") + STORYEVAL_CLI + "\" " + args;
  const int status = std::system(cmd.c_str());
  if (status == -1) return -1;
  return WEXITSTATUS(status);
}

double OracleRepN(const std::vector<std::string>& tokens, int n) {
  std::unordered_set<std::string> unique;
  size_t total = 0;
  for (size_t i = 0; i + n <= tokens.size(); ++i) {
    std::string key;
    for (int k = 0; k < n; ++k) key += tokens[i + k] + '\x1f';
    unique.insert(key);
    ++total;
  }
  return 100.0 * (1.0 - static_cast<double>(unique.size()) /
                            static_cast<double>(total));
}

namespace {
std::map<std::string, long long> Counts(const std::vector<std::string>& t) {
  std::map<std::string, long long> counts;
  for (const auto& w : t) ++counts[w];
  return counts;
}
}  // namespace

double OracleYulesK(const std::vector<std::string>& tokens) {
  long long sum_sq = 0;
  for (const auto& [w, f] : Counts(tokens)) sum_sq += f * f;
  const double length = static_cast<double>(tokens.size());
  return 10000.0 * (static_cast<double>(sum_sq) - length) / (length * length);
}

double OracleEntropy(const std::vector<std::string>& tokens) {
  // H = log2(L) - (1/L) sum f log2 f, an algebraically different route.
  const double length = static_cast<double>(tokens.size());
  long double acc = 0.0L;
  for (const auto& [w, f] : Counts(tokens)) {
    acc += static_cast<long double>(f) * std::log2(static_cast<long double>(f));
  }
  return static_cast<double>(std::log2(static_cast<long double>(length)) -
                             acc / static_cast<long double>(length));
}

double OracleTtrPct(const std::vector<std::vector<std::string>>& stories) {
  std::set<std::string> vocab;
  size_t total = 0;
  for (const auto& s : stories) {
    vocab.insert(s.begin(), s.end());
    total += s.size();
  }
  return 100.0 * static_cast<double>(vocab.size()) / static_cast<double>(total);
}

std::vector<std::string> RandomTokens(std::mt19937_64& rng, size_t length,
                                      size_t vocab) {
  std::uniform_int_distribution<size_t> pick(0, vocab - 1);
  std::vector<std::string> out;
  out.reserve(length);
  for (size_t i = 0; i < length; ++i) out.push_back("w" + std::to_string(pick(rng)));
  return out;
}

std::vector<std::map<std::string, int>> BuildBallots(
    const std::map<std::string, long long>& rank_sums, int ballots) {
  // Work on a k x k count matrix A[m][r] = ballots giving model m rank r+1.
  // Rows and columns always sum to `ballots`; unit exchanges move one
  // model's rank sum up by one and another's down by one.
  std::vector<std::string> models;
  std::vector<long long> target;
  for (const auto& [m, s] : rank_sums) {
    models.push_back(m);
    target.push_back(s);
  }
  const size_t k = models.size();

  // Start from the cyclic Latin-square spread so every pair of models sits
  // on adjacent ranks in many ballots.
  std::vector<std::vector<long long>> a(k, std::vector<long long>(k, 0));
  std::vector<long long> current(k, 0);
  for (int b = 0; b < ballots; ++b) {
    for (size_t m = 0; m < k; ++m) {
      const size_t r = (static_cast<size_t>(b) + m) % k;
      ++a[m][r];
      current[m] += static_cast<long long>(r + 1);
    }
  }

  auto find_rank = [&](size_t x, size_t y) -> std::optional<size_t> {
    for (size_t r = 0; r + 1 < k; ++r) {
      if (a[x][r] > 0 && a[y][r + 1] > 0) return r;
    }
    return std::nullopt;
  };
  auto exchange = [&](size_t x, size_t y, size_t r, int sign) {
    a[x][r] -= sign;
    a[x][r + 1] += sign;
    a[y][r + 1] -= sign;
    a[y][r] += sign;
    current[x] += sign;
    current[y] -= sign;
  };

  // Moves one unit of rank sum from a model above its target to `src`
  // along an exchange path. Returns false when no path applies cleanly.
  auto push = [&](size_t src) {
    std::vector<int> parent(k, -1);
    std::deque<size_t> queue = {src};
    parent[src] = static_cast<int>(src);
    size_t dst = k;
    while (!queue.empty() && dst == k) {
      const size_t x = queue.front();
      queue.pop_front();
      for (size_t y = 0; y < k; ++y) {
        if (parent[y] != -1 || !find_rank(x, y)) continue;
        parent[y] = static_cast<int>(x);
        if (current[y] > target[y]) {
          dst = y;
          break;
        }
        queue.push_back(y);
      }
    }
    if (dst == k) return false;
    std::vector<size_t> path = {dst};
    while (path.back() != src) {
      path.push_back(static_cast<size_t>(parent[path.back()]));
    }
    std::reverse(path.begin(), path.end());
    std::vector<size_t> applied;
    for (size_t i = 0; i + 1 < path.size(); ++i) {
      const auto r = find_rank(path[i], path[i + 1]);
      if (!r) {
        for (size_t j = applied.size(); j-- > 0;) {
          exchange(path[j], path[j + 1], applied[j], -1);
        }
        return false;
      }
      exchange(path[i], path[i + 1], *r, +1);
      applied.push_back(*r);
    }
    return true;
  };

  for (;;) {
    bool below = false, moved = false;
    for (size_t i = 0; i < k && !moved; ++i) {
      if (current[i] >= target[i]) continue;
      below = true;
      moved = push(i);
    }
    if (!below) break;
    if (!moved) throw std::runtime_error("rank sums are infeasible");
  }
  if (current != target) throw std::runtime_error("ballot search did not converge");

  // Peel off one permutation at a time (Birkhoff decomposition).
  std::vector<std::map<std::string, int>> out;
  for (int b = 0; b < ballots; ++b) {
    std::vector<int> rank_owner(k, -1);
    std::function<bool(size_t, std::vector<bool>&)> augment =
        [&](size_t m, std::vector<bool>& seen) {
          for (size_t r = 0; r < k; ++r) {
            if (a[m][r] == 0 || seen[r]) continue;
            seen[r] = true;
            if (rank_owner[r] < 0 ||
                augment(static_cast<size_t>(rank_owner[r]), seen)) {
              rank_owner[r] = static_cast<int>(m);
              return true;
            }
          }
          return false;
        };
    for (size_t m = 0; m < k; ++m) {
      std::vector<bool> seen(k, false);
      if (!augment(m, seen)) throw std::runtime_error("no perfect matching");
    }
    std::map<std::string, int> ballot;
    for (size_t r = 0; r < k; ++r) {
      const auto m = static_cast<size_t>(rank_owner[r]);
      --a[m][r];
      ballot[models[m]] = static_cast<int>(r + 1);
    }
    out.push_back(std::move(ballot));
  }
  return out;
}

}  // namespace storyeval::testing
