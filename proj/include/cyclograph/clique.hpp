//
// Project cyclograph - Copyright 2026 The cyclograph Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef CYCLOGRAPH_CLIQUE_HPP_
#define CYCLOGRAPH_CLIQUE_HPP_

// Exact maximum clique by branch and bound over bitset adjacency rows, with a
// greedy-colouring upper bound (bitset MCQ family) and a wall-clock deadline.
// When the deadline passes the best clique found so far is returned and the
// result is marked inexact.

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <numeric>
#include <vector>

namespace cyclograph {

class BitGraph {
 public:
  BitGraph() = default;
  explicit BitGraph(int n)
      : n_(n), words_((n + 63) / 64),
        rows_(static_cast<std::size_t>(n) * words_, 0) {}

  int size() const { return n_; }
  int words() const { return words_; }

  void add_edge(int a, int b) {
    if (a == b)
      return;
    row(a)[b >> 6] |= std::uint64_t{1} << (b & 63);
    row(b)[a >> 6] |= std::uint64_t{1} << (a & 63);
  }

  bool adjacent(int a, int b) const {
    return (row(a)[b >> 6] >> (b & 63)) & 1U;
  }

  int degree(int a) const {
    int d = 0;
    for (int w = 0; w < words_; ++w)
      d += std::popcount(row(a)[w]);
    return d;
  }

  const std::uint64_t *row(int a) const {
    return rows_.data() + static_cast<std::size_t>(a) * words_;
  }

  long long num_edges() const {
    long long total = 0;
    for (int a = 0; a < n_; ++a)
      total += degree(a);
    return total / 2;
  }

 private:
  std::uint64_t *row(int a) {
    return rows_.data() + static_cast<std::size_t>(a) * words_;
  }

  int n_ = 0;
  int words_ = 0;
  std::vector<std::uint64_t> rows_;
};

struct CliqueResult {
  std::vector<int> vertices;  // ascending
  bool exact = true;
  std::uint64_t search_nodes = 0;
};

namespace internal {

class CliqueSearch {
 public:
  using Clock = std::chrono::steady_clock;

  CliqueSearch(const BitGraph &g, Clock::time_point deadline)
      : deadline_(deadline), n_(g.size()), words_((g.size() + 63) / 64) {
    // Renumber by non-increasing degree (ties by original index) so that the
    // colouring sees dense vertices first.
    order_.resize(n_);
    std::iota(order_.begin(), order_.end(), 0);
    std::vector<int> degree(n_);
    for (int v = 0; v < n_; ++v)
      degree[v] = g.degree(v);
    std::stable_sort(order_.begin(), order_.end(),
                     [&](int a, int b) { return degree[a] > degree[b]; });
    adj_.assign(static_cast<std::size_t>(n_) * words_, 0);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j)
        if (i != j && g.adjacent(order_[i], order_[j]))
          adj_[static_cast<std::size_t>(i) * words_ + (j >> 6)] |=
              std::uint64_t{1} << (j & 63);
  }

  CliqueResult run() {
    CliqueResult result;
    if (n_ == 0)
      return result;
    greedy_start();
    std::vector<std::uint64_t> all(words_, 0);
    for (int v = 0; v < n_; ++v)
      all[v >> 6] |= std::uint64_t{1} << (v & 63);
    current_.clear();
    expand(all);
    for (int v : best_)
      result.vertices.push_back(order_[v]);
    std::sort(result.vertices.begin(), result.vertices.end());
    result.exact = !timed_out_;
    result.search_nodes = nodes_;
    return result;
  }

 private:
  const std::uint64_t *row(int v) const {
    return adj_.data() + static_cast<std::size_t>(v) * words_;
  }

  void greedy_start() {
    std::vector<int> clique;
    for (int v = 0; v < n_; ++v) {
      bool ok = std::all_of(clique.begin(), clique.end(), [&](int u) {
        return (row(u)[v >> 6] >> (v & 63)) & 1U;
      });
      if (ok)
        clique.push_back(v);
    }
    best_ = clique;
  }

  bool out_of_time() {
    if (timed_out_)
      return true;
    if ((++nodes_ & 255U) == 0 && Clock::now() >= deadline_)
      timed_out_ = true;
    return timed_out_;
  }

  // Greedy sequential colouring of `candidates`; fills (vertex, colour) in
  // non-decreasing colour order, skipping vertices whose colour cannot lead
  // past the incumbent.
  void colour(const std::vector<std::uint64_t> &candidates,
              std::vector<int> &verts, std::vector<int> &colours) const {
    verts.clear();
    colours.clear();
    std::vector<std::uint64_t> uncoloured = candidates;
    const int kmin =
        static_cast<int>(best_.size()) - static_cast<int>(current_.size()) + 1;
    int k = 0;
    std::vector<std::uint64_t> klass(words_);
    while (std::any_of(uncoloured.begin(), uncoloured.end(),
                       [](std::uint64_t w) { return w != 0; })) {
      ++k;
      klass = uncoloured;
      for (int w = 0; w < words_; ++w) {
        while (klass[w] != 0) {
          int v = w * 64 + std::countr_zero(klass[w]);
          klass[w] &= klass[w] - 1;
          uncoloured[w] &= ~(std::uint64_t{1} << (v & 63));
          const std::uint64_t *nbrs = row(v);
          for (int x = w; x < words_; ++x)
            klass[x] &= ~nbrs[x];
          if (k >= kmin) {
            verts.push_back(v);
            colours.push_back(k);
          }
        }
      }
    }
  }

  void expand(std::vector<std::uint64_t> candidates) {
    if (out_of_time())
      return;
    std::vector<int> verts, colours;
    colour(candidates, verts, colours);
    std::vector<std::uint64_t> next(words_);
    for (int i = static_cast<int>(verts.size()) - 1; i >= 0; --i) {
      if (current_.size() + colours[i] <= best_.size() || timed_out_)
        return;
      int v = verts[i];
      current_.push_back(v);
      const std::uint64_t *nbrs = row(v);
      bool any = false;
      for (int w = 0; w < words_; ++w) {
        next[w] = candidates[w] & nbrs[w];
        any |= next[w] != 0;
      }
      if (!any) {
        if (current_.size() > best_.size())
          best_ = current_;
      } else {
        expand(next);
      }
      current_.pop_back();
      candidates[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
    }
  }

  Clock::time_point deadline_;
  int n_;
  int words_;
  std::vector<int> order_;
  std::vector<std::uint64_t> adj_;
  std::vector<int> current_;
  std::vector<int> best_;
  std::uint64_t nodes_ = 0;
  bool timed_out_ = false;
};

}  // namespace internal

inline CliqueResult max_clique(const BitGraph &g,
                               std::chrono::steady_clock::time_point deadline) {
  return internal::CliqueSearch(g, deadline).run();
}

inline CliqueResult max_clique(const BitGraph &g,
                               std::chrono::milliseconds budget) {
  return max_clique(g, std::chrono::steady_clock::now() + budget);
}

}  // namespace cyclograph

#endif  // CYCLOGRAPH_CLIQUE_HPP_
