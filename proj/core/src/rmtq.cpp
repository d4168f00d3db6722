#include "rl2lz/rmtq.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace rl2lz {

PsaLayout::PsaLayout(const OccIndex& index, Index sentinel_row) : n_(index.size()) {
  const auto r = static_cast<std::size_t>(index.runs());
  std::vector<Index> starts;
  starts.reserve(r);
  runs_.reserve(r);
  // LF keeps the relative order of equal characters, so the images of the
  // c-run starts are already sorted and the code blocks follow C.
  for (Code c = index.code_base(); c < index.code_limit(); ++c) {
    for (Index run_start : index.code_run_starts(c)) {
      starts.push_back(index.lf(run_start));
      runs_.push_back(index.run_of(run_start));
    }
  }
  starts_ = PredecessorSet(std::move(starts));

  // Walking LF from the row of T[n] visits ISA[1], ISA[n], ISA[n-1], ...
  maxima_.assign(r, 0);
  Index row = sentinel_row;
  for (Index value = 1, step = 0; step < n_; ++step) {
    auto& best = maxima_[subarray_of(row) - 1];
    best = std::max(best, value);
    row = index.lf(row);
    value = n_ - step;
  }
  rmq_ = SparseTableMax(maxima_);
}

OpenCloseState OpenCloseState::initial(Index runs, Index n) {
  OpenCloseState s;
  s.threshold_ = n + 1;
  s.n_ = n;
  s.open_.assign(runs, Slot{-1, n + 1});
  s.close_.assign(runs, Slot{-1, 0});
  return s;
}

void OpenCloseState::admit(const PsaLayout& layout, Index row, Index value) {
  if (value + 1 != threshold_) {
    throw std::logic_error("admit: value " + std::to_string(value) + " at threshold " +
                           std::to_string(threshold_));
  }
  if (row < 1 || row > n_) throw std::logic_error("admit: row out of range");
  const Index p = layout.subarray_of(row);
  const Slot slot{static_cast<std::int64_t>(value), row};
  auto& open = open_[p - 1];
  auto& close = close_[p - 1];
  if (open.empty() || row < open.position) open = slot;
  if (close.empty() || row > close.position) close = slot;
  threshold_ = value;
}

Classification classify_interval(const PsaLayout& layout, Interval range) {
  Classification out;
  out.first = layout.subarray_of(range.begin);
  out.last = layout.subarray_of(range.end);
  const bool interior = out.first == out.last && range.begin > layout.start(out.first) &&
                        range.end < layout.start(out.first) + layout.length(out.first) - 1;
  out.kind = interior ? IntervalCase::interior : IntervalCase::boundary;
  return out;
}

std::optional<Index> rmtq_boundary(const PsaLayout& layout, const OpenCloseState& state,
                                   Interval range, const Classification& where) {
  const Slot& close = state.close(where.first);
  if (!close.empty() && range.contains(close.position)) return static_cast<Index>(close.value);
  const Slot& open = state.open(where.last);
  if (!open.empty() && range.contains(open.position)) return static_cast<Index>(open.value);
  if (where.first + 1 < where.last) {
    const Index middle = *layout.max_over(where.first + 1, where.last - 1);
    if (middle >= state.threshold()) return middle;
  }
  return std::nullopt;
}

Index rmtq_interior(std::optional<Index> previous) {
  if (!previous || *previous < 2) {
    throw std::logic_error("interior RMTQ without a previous right occurrence");
  }
  return *previous - 1;
}

}  // namespace rl2lz
