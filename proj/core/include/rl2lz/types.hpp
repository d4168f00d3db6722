#pragma once

#include <cstdint>
#include <stdexcept>

namespace rl2lz {

// Character codes. Byte input is shifted to 1..256 so that code 0 can serve
// as the sentinel.
using Code = std::uint32_t;

// Text positions and SA rows. All public positions are 1-based.
using Index = std::uint64_t;

inline constexpr Code kSentinel = 0;

struct Run {
  Code code = 0;
  Index length = 0;

  friend bool operator==(const Run&, const Run&) = default;
};

// Closed interval [begin, end] of SA rows, begin <= end.
struct Interval {
  Index begin = 0;
  Index end = 0;

  Index size() const { return end - begin + 1; }
  bool contains(Index i) const { return begin <= i && i <= end; }

  friend bool operator==(const Interval&, const Interval&) = default;
};

// Structurally invalid input (file or in-memory RLBWT).
class MalformedInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A parse whose copy sources fall outside the text.
class CorruptParse : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace rl2lz
