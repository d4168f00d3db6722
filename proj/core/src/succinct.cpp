#include "rl2lz/succinct.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace rl2lz {

namespace {

void require_strictly_increasing(std::span<const Index> v) {
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (v[i - 1] >= v[i]) {
      throw std::invalid_argument("predecessor set must be strictly increasing");
    }
  }
}

}  // namespace

Index predecessor(std::span<const Index> sorted, Index x) {
  return static_cast<Index>(std::upper_bound(sorted.begin(), sorted.end(), x) -
                            sorted.begin());
}

SortedPredecessor::SortedPredecessor(std::vector<Index> elements)
    : elements_(std::move(elements)) {
  require_strictly_increasing(elements_);
}

BucketPredecessor::BucketPredecessor(std::vector<Index> elements)
    : elements_(std::move(elements)) {
  require_strictly_increasing(elements_);
  if (elements_.empty()) return;

  const auto universe_bits = static_cast<unsigned>(std::bit_width(elements_.back()));
  const auto count_bits = static_cast<unsigned>(std::bit_width(elements_.size()));
  shift_ = universe_bits > count_bits ? universe_bits - count_bits : 0;

  const Index buckets = (elements_.back() >> shift_) + 1;
  bucket_begin_.assign(buckets + 1, 0);
  for (Index e : elements_) ++bucket_begin_[(e >> shift_) + 1];
  for (Index b = 1; b <= buckets; ++b) bucket_begin_[b] += bucket_begin_[b - 1];
}

Index BucketPredecessor::pred(Index x) const {
  if (elements_.empty() || x < elements_.front()) return 0;
  if (x >= elements_.back()) return elements_.size();
  const Index bucket = x >> shift_;
  const auto first = elements_.begin() + static_cast<std::ptrdiff_t>(bucket_begin_[bucket]);
  const auto last = elements_.begin() + static_cast<std::ptrdiff_t>(bucket_begin_[bucket + 1]);
  return static_cast<Index>(std::upper_bound(first, last, x) - elements_.begin());
}

SparseTableMax::SparseTableMax(std::vector<Index> values) {
  if (values.empty()) return;
  const std::size_t len = values.size();
  levels_.push_back(std::move(values));
  for (std::size_t width = 2; width <= len; width *= 2) {
    const auto& prev = levels_.back();
    std::vector<Index> cur(len - width + 1);
    const std::size_t half = width / 2;
    for (std::size_t i = 0; i < cur.size(); ++i) {
      cur[i] = std::max(prev[i], prev[i + half]);
    }
    levels_.push_back(std::move(cur));
  }
}

std::optional<Index> SparseTableMax::max(Index i, Index j) const {
  if (i > j) return std::nullopt;
  if (i == 0 || j > size()) throw std::out_of_range("range maximum query out of range");
  const Index len = j - i + 1;
  const auto level = static_cast<std::size_t>(std::bit_width(len) - 1);
  const auto& row = levels_[level];
  return std::max(row[i - 1], row[j - (Index{1} << level)]);
}

std::size_t SparseTableMax::element_count() const {
  std::size_t total = 0;
  for (const auto& row : levels_) total += row.size();
  return total;
}

}  // namespace rl2lz
