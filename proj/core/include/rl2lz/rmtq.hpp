#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "rl2lz/rlbwt.hpp"
#include "rl2lz/succinct.hpp"
#include "rl2lz/types.hpp"

// Range more-than queries (report some SA[j] >= k, j in [b, e]) over the
// suffix array partitioned by BWT runs, without storing the suffix array.
namespace rl2lz {

/*
 * The partitioned suffix array: run i of L is mapped by LF onto the
 * contiguous SA block starting at row LF(p(i)). Sorting those blocks by
 * starting row gives r subarrays; subarray i starts at Z[i], comes from
 * run X[i], and M[i] is the largest SA value inside it.
 */
class PsaLayout {
 public:
  // `sentinel_row` is the L-row holding T[n]; only used to walk the text
  // once while folding the maxima.
  PsaLayout(const OccIndex& index, Index sentinel_row);

  Index size() const { return starts_.size(); }
  Index text_length() const { return n_; }

  // All 1-based over subarrays.
  Index start(Index i) const { return starts_[i]; }
  Index length(Index i) const { return (i < size() ? starts_[i + 1] : n_ + 1) - starts_[i]; }
  Index source_run(Index i) const { return runs_[i - 1]; }
  Index max_value(Index i) const { return maxima_[i - 1]; }

  // pred(Z, row): the subarray containing SA row `row`.
  Index subarray_of(Index row) const { return starts_.pred(row); }

  // max M[first..last], std::nullopt if first > last.
  std::optional<Index> max_over(Index first, Index last) const { return rmq_.max(first, last); }

  std::span<const Index> starts() const { return starts_.elements(); }
  std::span<const Index> source_runs() const { return runs_; }
  std::span<const Index> maxima() const { return maxima_; }

  // Persistent O(r) arrays (Z, X, M); the RMQ table is reported apart.
  std::size_t element_count() const {
    return starts_.element_count() + runs_.size() + maxima_.size();
  }
  std::size_t rmq_element_count() const { return rmq_.element_count(); }

 private:
  Index n_ = 0;
  PredecessorSet starts_;    // Z
  std::vector<Index> runs_;  // X
  std::vector<Index> maxima_;  // M
  SparseTableMax rmq_;
};

// A k-open or k-close entry: the SA value and row, or value -1 (row n + 1
// for open, row 0 for close) when the subarray holds no value >= k.
struct Slot {
  std::int64_t value = -1;
  Index position = 0;

  bool empty() const { return value < 0; }
  friend bool operator==(const Slot&, const Slot&) = default;
};

/*
 * M^open_k and M^close_k for the current threshold k. Values are admitted
 * one at a time in decreasing order (k -> k - 1), touching only the
 * subarray that holds the admitted row.
 */
class OpenCloseState {
 public:
  // All slots empty. This is the state for threshold n + 1: no SA value
  // reaches it, and the first admit brings in the value n.
  static OpenCloseState initial(Index runs, Index n);

  Index threshold() const { return threshold_; }
  Index text_length() const { return n_; }
  Index size() const { return open_.size(); }

  const Slot& open(Index i) const { return open_[i - 1]; }
  const Slot& close(Index i) const { return close_[i - 1]; }

  // Lowers the threshold to `value` given SA[row] = value. Throws
  // std::logic_error unless value == threshold() - 1 and row is in [1, n].
  void admit(const PsaLayout& layout, Index row, Index value);

  // Two words per slot.
  std::size_t element_count() const { return 2 * (open_.size() + close_.size()); }

 private:
  Index threshold_ = 0;
  Index n_ = 0;
  std::vector<Slot> open_;
  std::vector<Slot> close_;
};

enum class IntervalCase : std::uint8_t {
  interior,  // strictly inside one subarray; answered from the previous step
  boundary,  // touches a subarray boundary; answered from open/close slots + RMQ
};

struct Classification {
  IntervalCase kind = IntervalCase::boundary;
  Index first = 0;  // pred(Z, b)
  Index last = 0;   // pred(Z, e)
};

Classification classify_interval(const PsaLayout& layout, Interval range);

// Boundary case at threshold state.threshold(): the close slot of the first
// subarray, then the open slot of the last, then the maximum of the
// subarrays strictly between them.
std::optional<Index> rmtq_boundary(const PsaLayout& layout, const OpenCloseState& state,
                                   Interval range, const Classification& where);

// Interior case: previous answer minus one. Throws std::logic_error if
// there is no previous answer (or it is 1), which means the caller broke
// the invariant that the previous pattern had a right occurrence.
Index rmtq_interior(std::optional<Index> previous);

}  // namespace rl2lz
