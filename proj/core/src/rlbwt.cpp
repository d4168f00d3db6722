#include "rl2lz/rlbwt.hpp"

#include <algorithm>
#include <string>

namespace rl2lz {

std::size_t Rlbwt::sigma() const {
  std::vector<Code> codes;
  codes.reserve(runs.size());
  for (const auto& run : runs) codes.push_back(run.code);
  std::sort(codes.begin(), codes.end());
  return static_cast<std::size_t>(std::unique(codes.begin(), codes.end()) - codes.begin());
}

void Rlbwt::validate() const {
  if (runs.empty() || n == 0) throw MalformedInput("RLBWT is empty");
  Index total = 0;
  for (std::size_t i = 0; i < runs.size(); ++i) {
    if (runs[i].length == 0) {
      throw MalformedInput("run " + std::to_string(i + 1) + " has length 0");
    }
    if (i > 0 && runs[i].code == runs[i - 1].code) {
      throw MalformedInput("runs " + std::to_string(i) + " and " + std::to_string(i + 1) +
                           " share code " + std::to_string(runs[i].code));
    }
    total += runs[i].length;
  }
  if (total != n) {
    throw MalformedInput("run lengths sum to " + std::to_string(total) + ", expected n = " +
                         std::to_string(n));
  }
  if (y < 1 || y > n) {
    throw MalformedInput("y = " + std::to_string(y) + " outside [1, " + std::to_string(n) + "]");
  }
  // L[y] = T[n] must be the unique smallest symbol.
  Index pos = 1;
  std::size_t at_y = 0;
  for (std::size_t i = 0; i < runs.size(); ++i) {
    if (pos <= y && y < pos + runs[i].length) at_y = i;
    pos += runs[i].length;
  }
  const Code sentinel = runs[at_y].code;
  if (runs[at_y].length != 1) throw MalformedInput("the symbol at row y occurs more than once");
  for (std::size_t i = 0; i < runs.size(); ++i) {
    if (i != at_y && runs[i].code <= sentinel) {
      throw MalformedInput("run " + std::to_string(i + 1) + " repeats or undercuts the symbol at row y");
    }
  }
}

OccIndex::OccIndex(const Rlbwt& rlbwt) : n_(rlbwt.n) {
  rlbwt.validate();
  const auto [lo, hi] = std::minmax_element(
      rlbwt.runs.begin(), rlbwt.runs.end(),
      [](const Run& a, const Run& b) { return a.code < b.code; });
  code_base_ = lo->code;
  code_limit_ = hi->code + 1;
  const std::size_t slots = code_limit_ - code_base_;

  std::vector<Index> occurrences(slots, 0);
  offset_.assign(slots + 1, 0);
  for (const auto& run : rlbwt.runs) {
    occurrences[run.code - code_base_] += run.length;
    ++offset_[run.code - code_base_ + 1];
  }
  less_.assign(slots + 1, 0);
  for (std::size_t s = 0; s < slots; ++s) {
    less_[s + 1] = less_[s] + occurrences[s];
    offset_[s + 1] += offset_[s];
  }

  const auto r = rlbwt.runs.size();
  code_starts_.resize(r);
  code_ranks_.resize(r + slots);
  std::vector<Index> filled(slots, 0);
  std::vector<Index> seen(slots, 0);
  std::vector<Index> starts;
  starts.reserve(r);
  heads_.reserve(r);

  Index pos = 1;
  for (const auto& run : rlbwt.runs) {
    const std::size_t s = run.code - code_base_;
    code_starts_[offset_[s] + filled[s]] = pos;
    code_ranks_[offset_[s] + s + filled[s]] = seen[s] + 1;
    ++filled[s];
    seen[s] += run.length;
    starts.push_back(pos);
    heads_.push_back(run.code);
    pos += run.length;
  }
  for (std::size_t s = 0; s < slots; ++s) code_ranks_[offset_[s + 1] + s] = seen[s] + 1;
  starts_ = PredecessorSet(std::move(starts));
}

Code OccIndex::access(Index i) const {
  if (i < 1 || i > n_) throw std::out_of_range("access position out of range");
  return heads_[starts_.pred(i) - 1];
}

std::span<const Index> OccIndex::code_run_starts(Code c) const {
  if (!present(c)) return {};
  const std::size_t s = c - code_base_;
  return std::span<const Index>(code_starts_).subspan(offset_[s], offset_[s + 1] - offset_[s]);
}

std::span<const Index> OccIndex::code_run_ranks(Code c) const {
  if (!present(c)) return {};
  const std::size_t s = c - code_base_;
  return std::span<const Index>(code_ranks_).subspan(offset_[s] + s, offset_[s + 1] - offset_[s] + 1);
}

Index OccIndex::count_less(Code c) const {
  if (c < code_base_) return 0;
  return c >= code_limit_ ? n_ : less_[c - code_base_];
}

Index OccIndex::rank(Code c, Index i) const {
  if (i > n_) throw std::out_of_range("rank position out of range");
  if (i == 0 || !present(c)) return 0;
  const auto run_starts = code_run_starts(c);
  const Index t = predecessor(run_starts, i);
  if (t == 0) return 0;
  const auto ranks = code_run_ranks(c);
  const Index run_length = ranks[t] - ranks[t - 1];
  const Index offset = i - run_starts[t - 1];
  return offset < run_length ? ranks[t - 1] + offset : ranks[t] - 1;
}

Index OccIndex::select(Code c, Index j) const {
  if (!present(c) || j == 0) return n_ + 1;
  const std::size_t s = c - code_base_;
  if (j > less_[s + 1] - less_[s]) return n_ + 1;
  const auto ranks = code_run_ranks(c);
  const Index t = predecessor(ranks.first(ranks.size() - 1), j);
  return code_run_starts(c)[t - 1] + j - ranks[t - 1];
}

Index OccIndex::lf(Index i) const {
  const Code c = access(i);
  return less_[c - code_base_] + rank(c, i);
}

std::optional<Interval> OccIndex::backward_search(Interval range, Code c) const {
  if (range.begin < 1 || range.begin > range.end || range.end > n_) {
    throw std::out_of_range("backward_search interval out of range");
  }
  if (!present(c)) return std::nullopt;
  const Index before = rank(c, range.begin - 1);
  const Index through = rank(c, range.end);
  if (before == through) return std::nullopt;
  // LF(select(c, k)) = C[c] + k.
  const Index less = less_[c - code_base_];
  return Interval{less + before + 1, less + through};
}

std::size_t OccIndex::element_count() const {
  return less_.size() + offset_.size() + code_starts_.size() + code_ranks_.size() +
         starts_.element_count() + heads_.size();
}

ShrunkRlbwt shrink_alphabet(const Rlbwt& rlbwt) {
  ShrunkRlbwt out;
  out.inverse.reserve(rlbwt.runs.size());
  for (const auto& run : rlbwt.runs) out.inverse.push_back(run.code);
  std::sort(out.inverse.begin(), out.inverse.end());
  out.inverse.erase(std::unique(out.inverse.begin(), out.inverse.end()), out.inverse.end());

  out.rlbwt.n = rlbwt.n;
  out.rlbwt.y = rlbwt.y;
  out.rlbwt.runs.reserve(rlbwt.runs.size());
  for (const auto& run : rlbwt.runs) {
    const auto rank = std::lower_bound(out.inverse.begin(), out.inverse.end(), run.code) -
                      out.inverse.begin() + 1;
    out.rlbwt.runs.push_back({static_cast<Code>(rank), run.length});
  }
  return out;
}

}  // namespace rl2lz
