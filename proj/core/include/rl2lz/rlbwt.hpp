#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "rl2lz/succinct.hpp"
#include "rl2lz/types.hpp"

namespace rl2lz {

// Run-length encoded BWT L of a text T: the compressed form, the text
// length n, and y, the row of L that holds T[n].
struct Rlbwt {
  std::vector<Run> runs;
  Index n = 0;
  Index y = 0;

  Index r() const { return runs.size(); }

  // Number of distinct codes present.
  std::size_t sigma() const;

  // Throws MalformedInput when run lengths do not sum to n, a run is empty,
  // adjacent runs share a code, y lies outside [1, n], or L[y] is not the
  // unique smallest symbol.
  void validate() const;

  friend bool operator==(const Rlbwt&, const Rlbwt&) = default;
};

/*
 * Run-length FM core. Supports access, rank, select, LF and backward
 * search with a constant number of predecessor queries each:
 *
 *   access(i)   = E[pred(B, i)]
 *   rank(c, i)  = V_c[t] + i - B_c[t]   if L[i] = c
 *               = V_c[t + 1] - 1        otherwise,    t = pred(B_c, i)
 *   select(c,j) = B_c[t] + j - V_c[t],                 t = pred(V_c, j)
 *
 * Per-code arrays B_c and V_c are stored back to back and located through
 * an offset table indexed by code (from the smallest code present), so the
 * structure holds O(r + sigma) words, sigma being the code span. Build it on
 * a shrunk RLBWT to keep that O(r).
 */
class OccIndex {
 public:
  explicit OccIndex(const Rlbwt& rlbwt);

  Index size() const { return n_; }
  Index runs() const { return heads_.size(); }
  // Codes present lie in [code_base(), code_limit()).
  Code code_base() const { return code_base_; }
  Code code_limit() const { return code_limit_; }

  // L[i]. Throws std::out_of_range unless 1 <= i <= n.
  Code access(Index i) const;
  // Occurrences of c in L[1..i], 0 <= i <= n. Absent codes give 0.
  Index rank(Code c, Index i) const;
  // Position of the j-th c in L, or n + 1 if there are fewer than j.
  Index select(Code c, Index j) const;
  // LF(i) = C[L[i]] + rank(L, L[i], i). Throws std::out_of_range outside [1, n].
  Index lf(Index i) const;
  // SA interval of cY from the SA interval of Y; std::nullopt when c does
  // not occur in L[range]. Matches are over rotations, so prepending the
  // sentinel to a prefix of T yields row 1.
  std::optional<Interval> backward_search(Interval range, Code c) const;

  // C[c]: occurrences of codes smaller than c.
  Index count_less(Code c) const;
  // Index of the run containing L-position i (pred(B, i)).
  Index run_of(Index i) const { return starts_.pred(i); }

  std::span<const Index> run_starts() const { return starts_.elements(); }
  std::span<const Code> run_heads() const { return heads_; }
  // B_c: sorted starting positions of the runs of c.
  std::span<const Index> code_run_starts(Code c) const;
  // V_c: rank(L, c, B_c[t]) for each run, then rank(L, c, n) + 1.
  std::span<const Index> code_run_ranks(Code c) const;

  std::size_t element_count() const;

 private:
  bool present(Code c) const { return c >= code_base_ && c < code_limit_; }

  Index n_ = 0;
  Code code_base_ = 0;   // smallest code present
  Code code_limit_ = 0;  // largest code present + 1
  // Slot s stands for code code_base_ + s.
  std::vector<Index> less_;        // slots + 1 entries
  std::vector<Index> offset_;      // slots + 1 entries
  std::vector<Index> code_starts_; // B_c, concatenated by slot
  std::vector<Index> code_ranks_;  // V_c, concatenated; slot s starts at offset_[s] + s
  PredecessorSet starts_;          // B
  std::vector<Code> heads_;        // E
};

// RLBWT of the shrunk text together with W, the inverse array.
struct ShrunkRlbwt {
  Rlbwt rlbwt;
  // inverse[rank - 1] = original code of that rank; ranks start at 1.
  std::vector<Code> inverse;

  Code original(Code rank) const { return inverse.at(rank - 1); }
};

// Replaces every code by its rank (1-based) among the distinct codes of L.
// Run boundaries, n and y are untouched. O(r log r).
ShrunkRlbwt shrink_alphabet(const Rlbwt& rlbwt);

}  // namespace rl2lz
