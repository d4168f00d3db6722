#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "rl2lz/lz77.hpp"
#include "rl2lz/rlbwt.hpp"
#include "rl2lz/types.hpp"

// Builder side: plaintext -> SA -> BWT -> RLBWT, plus the brute-force
// oracles the test suite checks the converter against. Nothing in here is
// used by the converter itself.
namespace rl2lz::textkit {

// A sentinel-terminated text: symbols.back() == kSentinel and every other
// symbol is > kSentinel.
struct Text {
  std::vector<Code> symbols;

  Index size() const { return symbols.size(); }
  // 1-based.
  Code operator[](Index i) const { return symbols[i - 1]; }
  std::size_t sigma() const;
};

// Shifts bytes to 1..256 and appends the sentinel.
Text text_from_bytes(std::span<const std::uint8_t> bytes);
Text text_from_string(std::string_view s);
// Appends the sentinel. Throws std::invalid_argument if any code is 0.
Text text_from_codes(std::vector<Code> codes);

// Inverse of text_from_bytes: drops a trailing sentinel and unshifts.
// Throws std::invalid_argument on codes that are not shifted bytes.
std::vector<std::uint8_t> bytes_from_codes(std::span<const Code> codes);

struct SuffixArray {
  std::vector<Index> sa;   // sa[i - 1] = SA[i]
  std::vector<Index> isa;  // isa[j - 1] = ISA[j]

  Index size() const { return sa.size(); }
  Index at(Index i) const { return sa[i - 1]; }
  Index rank_of(Index j) const { return isa[j - 1]; }
};

// Prefix doubling with radix sort, O(n log n). Works for any string (a
// suffix that is a prefix of another sorts first), codes of any width.
SuffixArray build_suffix_array(std::span<const Code> text);

struct Bwt {
  std::vector<Code> last;  // L
  Index sentinel_row = 0;  // y = ISA[1], the row of L holding T[n]
};

Bwt bwt_from_sa(std::span<const Code> text, const SuffixArray& sa);

std::vector<Run> rle_encode(std::span<const Code> s);
std::vector<Code> rle_decode(std::span<const Run> runs);

Rlbwt build_rlbwt(std::span<const Code> text);
inline Rlbwt build_rlbwt(const Text& text) { return build_rlbwt(text.symbols); }

// -- oracles ---------------------------------------------------------------

// LZ77 of the reversed text by brute force. Copy phrases use the smallest
// right occurrence.
Lz77Parse oracle_lz77(std::span<const Code> text);

// Leftmost SA[j] >= k with j in [b, e], if any.
std::optional<Index> oracle_rmtq(const SuffixArray& sa, Index b, Index e, Index k);

Index naive_rank(std::span<const Code> s, Code c, Index i);
Index naive_select(std::span<const Code> s, Code c, Index j);

// SA interval of `pattern` by scanning every suffix.
std::optional<Interval> naive_sa_interval(std::span<const Code> text, const SuffixArray& sa,
                                          std::span<const Code> pattern);

// True iff `ph` is a valid phrase starting at `start` in `text`: a copy
// needs source > start and text[source ..] == text[start ..] over its length.
bool copy_is_valid(std::span<const Code> text, Index start, const Phrase& ph);

// -- corpora ---------------------------------------------------------------

enum class Generator { fibonacci, repeat, random };

std::optional<Generator> parse_generator(std::string_view name);
std::string_view generator_name(Generator g);

// Fibonacci word over {a, b}, "ab" repeated, or uniform bytes over the
// first `alphabet` symbols (bytes 'a'.. for alphabet <= 26, 0.. otherwise).
// Truncated to exactly n bytes.
std::vector<std::uint8_t> generate_corpus(Generator g, std::size_t n, std::uint64_t seed = 1,
                                          unsigned alphabet = 256);

}  // namespace rl2lz::textkit
