#pragma once

#include <cstddef>
#include <vector>

#include "rl2lz/types.hpp"

namespace rl2lz {

// One phrase of the LZ77 parse of the reversed text: either a fresh
// character or a copy <source, length> whose source is a right occurrence
// (source > phrase start, overlap allowed).
struct Phrase {
  enum class Kind : std::uint8_t { literal = 0, copy = 1 };

  Kind kind = Kind::literal;
  Code code = 0;
  Index source = 0;
  Index length = 1;

  static Phrase literal(Code c) { return {Kind::literal, c, 0, 1}; }
  static Phrase copy(Index source, Index length) {
    return {Kind::copy, 0, source, length};
  }

  bool is_literal() const { return kind == Kind::literal; }
  bool is_copy() const { return kind == Kind::copy; }

  friend bool operator==(const Phrase&, const Phrase&) = default;
};

// Phrases in emission order: phrases.front() is f_1, the rightmost phrase,
// phrases.back() is f_z, the phrase that starts at text position 1.
struct Lz77Parse {
  std::vector<Phrase> phrases;

  std::size_t z() const { return phrases.size(); }

  // Sum of phrase lengths.
  Index length() const {
    Index total = 0;
    for (const auto& ph : phrases) total += ph.length;
    return total;
  }

  // Starting text position of every phrase, aligned with `phrases`.
  std::vector<Index> starts() const {
    std::vector<Index> out(phrases.size());
    Index end = length();
    for (std::size_t i = 0; i < phrases.size(); ++i) {
      out[i] = end - phrases[i].length + 1;
      end -= phrases[i].length;
    }
    return out;
  }

  friend bool operator==(const Lz77Parse&, const Lz77Parse&) = default;
};

}  // namespace rl2lz
