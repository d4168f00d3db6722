#pragma once

#include <cstdint>
#include <ostream>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "rl2lz/lz77.hpp"
#include "rl2lz/textkit.hpp"

namespace rl2lz {

inline void PrintTo(const Phrase& ph, std::ostream* os) {
  if (ph.is_literal()) {
    *os << "lit(" << ph.code << ")";
  } else {
    *os << "<" << ph.source << "," << ph.length << ">";
  }
}

inline void PrintTo(const Lz77Parse& parse, std::ostream* os) {
  *os << "z=" << parse.z() << " [";
  for (const auto& ph : parse.phrases) {
    PrintTo(ph, os);
    *os << " ";
  }
  *os << "]";
}

}  // namespace rl2lz

namespace rl2lz::testing {

// '$' for the sentinel, the unshifted byte otherwise.
inline std::string render(std::span<const Code> codes) {
  std::string out;
  for (Code c : codes) out.push_back(c == kSentinel ? '$' : static_cast<char>(c - 1));
  return out;
}

// Raw codes of a string, no shift and no sentinel.
inline std::vector<Code> raw_codes(std::string_view s) {
  return {s.begin(), s.end()};
}

inline Code byte_code(char ch) { return static_cast<Code>(static_cast<unsigned char>(ch)) + 1; }

// Codes 1..sigma, sentinel appended.
inline textkit::Text random_text(std::mt19937_64& rng, std::size_t length, unsigned sigma) {
  std::uniform_int_distribution<Code> pick(1, sigma);
  std::vector<Code> codes(length);
  for (auto& c : codes) c = pick(rng);
  return textkit::text_from_codes(std::move(codes));
}

struct Fixture {
  textkit::Text text;
  textkit::SuffixArray sa;
  textkit::Bwt bwt;
  Rlbwt rlbwt;

  explicit Fixture(textkit::Text t) : text(std::move(t)) {
    sa = textkit::build_suffix_array(text.symbols);
    bwt = textkit::bwt_from_sa(text.symbols, sa);
    rlbwt = Rlbwt{textkit::rle_encode(bwt.last), text.size(), bwt.sentinel_row};
  }

  static Fixture of(std::string_view s) { return Fixture(textkit::text_from_string(s)); }

  Index n() const { return text.size(); }

  // LF through the suffix array: the row of suffix SA[i] - 1 (cyclic).
  Index lf_by_sa(Index i) const {
    const Index pos = sa.at(i);
    return sa.rank_of(pos > 1 ? pos - 1 : n());
  }
};

}  // namespace rl2lz::testing
