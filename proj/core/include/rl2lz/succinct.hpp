#pragma once

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "rl2lz/types.hpp"

namespace rl2lz {

// pred(S, x) = |{ y in S : y <= x }| over a strictly increasing span.
Index predecessor(std::span<const Index> sorted, Index x);

// Static predecessor structures over a strictly increasing integer set.
// Everything above them is written against this interface only.
template <typename P>
concept PredecessorStructure = requires(const P& p, Index x) {
  { p.pred(x) } -> std::convertible_to<Index>;
  { p.size() } -> std::convertible_to<std::size_t>;
  { p.element_count() } -> std::convertible_to<std::size_t>;
  { p.elements() } -> std::convertible_to<std::span<const Index>>;
};

// Binary search over the sorted array. O(log m) query, m words.
class SortedPredecessor {
 public:
  SortedPredecessor() = default;
  // Throws std::invalid_argument unless `elements` is strictly increasing.
  explicit SortedPredecessor(std::vector<Index> elements);

  Index pred(Index x) const { return predecessor(elements_, x); }

  // 1-based element access; (*this)[pred(x)] is the largest element <= x.
  Index operator[](Index i) const { return elements_[i - 1]; }

  std::size_t size() const { return elements_.size(); }
  std::span<const Index> elements() const { return elements_; }
  std::size_t element_count() const { return elements_.size(); }

 private:
  std::vector<Index> elements_;
};

// Buckets on the top bits of the universe, then binary search inside one
// bucket. About m buckets, so at most 2m + 1 words; queries touch one
// bucket, which is O(1) expected on uniformly spread keys.
class BucketPredecessor {
 public:
  BucketPredecessor() = default;
  explicit BucketPredecessor(std::vector<Index> elements);

  Index pred(Index x) const;

  Index operator[](Index i) const { return elements_[i - 1]; }

  std::size_t size() const { return elements_.size(); }
  std::span<const Index> elements() const { return elements_; }
  std::size_t element_count() const {
    return elements_.size() + bucket_begin_.size();
  }

 private:
  std::vector<Index> elements_;
  // bucket_begin_[b] = number of elements whose bucket is < b.
  std::vector<Index> bucket_begin_;
  unsigned shift_ = 0;
};

static_assert(PredecessorStructure<SortedPredecessor>);
static_assert(PredecessorStructure<BucketPredecessor>);

using PredecessorSet = SortedPredecessor;

/*
 * Sparse table answering range maximum queries in O(1) with
 * len * (floor(log2 len) + 1) words. Positions are 1-based.
 */
class SparseTableMax {
 public:
  SparseTableMax() = default;
  explicit SparseTableMax(std::vector<Index> values);

  // max values[i..j]; std::nullopt when i > j (empty range).
  // Throws std::out_of_range when i == 0 or j > size().
  std::optional<Index> max(Index i, Index j) const;

  std::size_t size() const { return levels_.empty() ? 0 : levels_[0].size(); }
  std::size_t element_count() const;

 private:
  // levels_[k][i] = max of values[i .. i + 2^k - 1] (0-based).
  std::vector<std::vector<Index>> levels_;
};

}  // namespace rl2lz
