#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "rl2lz/lz77.hpp"
#include "rl2lz/rlbwt.hpp"
#include "rl2lz/rmtq.hpp"
#include "rl2lz/types.hpp"

namespace rl2lz {

// Array elements held by the converter's persistent structures.
struct Footprint {
  std::size_t runs = 0;        // r
  std::size_t occ_index = 0;
  std::size_t psa_layout = 0;
  std::size_t open_close = 0;
  std::size_t rmq_table = 0;   // sparse table, excluded from total()
  std::size_t inverse = 0;     // W

  std::size_t total() const { return occ_index + psa_layout + open_close + inverse; }
};

// One loop iteration, reported to an optional observer.
struct TraceStep {
  Index head = 0;            // x, the text position being prepended
  Index pattern_length = 0;  // length of T[x .. x + l - 1] searched this step
  Interval interval;         // its SA interval
  Index threshold = 0;       // x + 1
  IntervalCase kind = IntervalCase::boundary;
  std::optional<Index> answer;
};

struct ConversionResult {
  Lz77Parse parse;
  Footprint footprint;
  std::size_t iterations = 0;
};

using TraceObserver = std::function<void(const TraceStep&)>;

// RLBWT of T -> LZ77 of T reversed, in O(r) words besides the output.
// Throws MalformedInput if the RLBWT does not validate.
ConversionResult convert_detailed(const Rlbwt& rlbwt, const TraceObserver& observer = {});
Lz77Parse convert(const Rlbwt& rlbwt);

// Maps literal codes through the inverse array (inverse[rank - 1]); copies
// pass through. Throws MalformedInput for a literal outside [1, |inverse|].
Lz77Parse map_phrases(const Lz77Parse& parse, std::span<const Code> inverse);

// Rebuilds the text. Copies are resolved right to left so a source
// overlapping its own phrase reads already decoded symbols. Throws
// CorruptParse for a source that is not a right occurrence inside the text.
std::vector<Code> lz_decode(const Lz77Parse& parse);

}  // namespace rl2lz
