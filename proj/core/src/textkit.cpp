#include "rl2lz/textkit.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>

namespace rl2lz::textkit {

std::size_t Text::sigma() const {
  std::vector<Code> codes = symbols;
  std::sort(codes.begin(), codes.end());
  return static_cast<std::size_t>(std::unique(codes.begin(), codes.end()) - codes.begin());
}

Text text_from_bytes(std::span<const std::uint8_t> bytes) {
  Text t;
  t.symbols.reserve(bytes.size() + 1);
  for (auto b : bytes) t.symbols.push_back(static_cast<Code>(b) + 1);
  t.symbols.push_back(kSentinel);
  return t;
}

Text text_from_string(std::string_view s) {
  return text_from_bytes({reinterpret_cast<const std::uint8_t*>(s.data()), s.size()});
}

Text text_from_codes(std::vector<Code> codes) {
  if (std::find(codes.begin(), codes.end(), kSentinel) != codes.end()) {
    throw std::invalid_argument("code 0 is reserved for the sentinel");
  }
  codes.push_back(kSentinel);
  return Text{std::move(codes)};
}

std::vector<std::uint8_t> bytes_from_codes(std::span<const Code> codes) {
  if (!codes.empty() && codes.back() == kSentinel) codes = codes.first(codes.size() - 1);
  std::vector<std::uint8_t> out;
  out.reserve(codes.size());
  for (Code c : codes) {
    if (c == kSentinel || c > 256) {
      throw std::invalid_argument("code " + std::to_string(c) + " is not a shifted byte");
    }
    out.push_back(static_cast<std::uint8_t>(c - 1));
  }
  return out;
}

SuffixArray build_suffix_array(std::span<const Code> text) {
  const std::size_t n = text.size();
  SuffixArray out;
  if (n == 0) return out;

  // Dense initial ranks 1..classes; 0 stands for "past the end".
  std::vector<Code> alphabet(text.begin(), text.end());
  std::sort(alphabet.begin(), alphabet.end());
  alphabet.erase(std::unique(alphabet.begin(), alphabet.end()), alphabet.end());

  std::vector<Index> rank(n);
  for (std::size_t i = 0; i < n; ++i) {
    rank[i] = static_cast<Index>(
        std::lower_bound(alphabet.begin(), alphabet.end(), text[i]) - alphabet.begin() + 1);
  }
  std::size_t classes = alphabet.size();

  std::vector<std::size_t> sa(n), by_second(n), count;
  auto counting_sort = [&](const std::vector<std::size_t>& order) {
    count.assign(classes + 2, 0);
    for (std::size_t i : order) ++count[rank[i] + 1];
    for (std::size_t c = 1; c < count.size(); ++c) count[c] += count[c - 1];
    for (std::size_t i : order) sa[count[rank[i]]++] = i;
  };

  for (std::size_t i = 0; i < n; ++i) by_second[i] = i;
  counting_sort(by_second);

  std::vector<Index> next(n);
  for (std::size_t h = 1; classes < n; h *= 2) {
    // Order by rank[i + h]: positions without a second half come first.
    std::size_t k = 0;
    for (std::size_t i = n - std::min(h, n); i < n; ++i) by_second[k++] = i;
    for (std::size_t j = 0; j < n; ++j) {
      if (sa[j] >= h) by_second[k++] = sa[j] - h;
    }
    counting_sort(by_second);

    auto second = [&](std::size_t i) { return i + h < n ? rank[i + h] : Index{0}; };
    next[sa[0]] = 1;
    for (std::size_t j = 1; j < n; ++j) {
      const bool same = rank[sa[j]] == rank[sa[j - 1]] && second(sa[j]) == second(sa[j - 1]);
      next[sa[j]] = next[sa[j - 1]] + (same ? 0 : 1);
    }
    rank.swap(next);
    classes = rank[sa[n - 1]];
  }

  out.sa.resize(n);
  out.isa.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    out.sa[j] = sa[j] + 1;
    out.isa[sa[j]] = j + 1;
  }
  return out;
}

Bwt bwt_from_sa(std::span<const Code> text, const SuffixArray& sa) {
  Bwt out;
  const Index n = text.size();
  out.last.resize(n);
  for (Index i = 1; i <= n; ++i) {
    const Index pos = sa.at(i);
    out.last[i - 1] = pos > 1 ? text[pos - 2] : text[n - 1];
  }
  out.sentinel_row = n == 0 ? 0 : sa.rank_of(1);
  return out;
}

std::vector<Run> rle_encode(std::span<const Code> s) {
  std::vector<Run> runs;
  for (Code c : s) {
    if (!runs.empty() && runs.back().code == c) {
      ++runs.back().length;
    } else {
      runs.push_back({c, 1});
    }
  }
  return runs;
}

std::vector<Code> rle_decode(std::span<const Run> runs) {
  std::vector<Code> out;
  for (const auto& run : runs) out.insert(out.end(), run.length, run.code);
  return out;
}

Rlbwt build_rlbwt(std::span<const Code> text) {
  const auto sa = build_suffix_array(text);
  const auto bwt = bwt_from_sa(text, sa);
  return Rlbwt{rle_encode(bwt.last), text.size(), bwt.sentinel_row};
}

Lz77Parse oracle_lz77(std::span<const Code> text) {
  const Index n = text.size();
  Lz77Parse parse;
  Index end = n;  // i', 1-based ending position of the next phrase
  while (end >= 1) {
    Index best = 0;
    Index best_end = 0;
    // A right occurrence of T[end - l + 1 .. end] ends at some j > end; its
    // length is bounded by the common suffix of T[..end] and T[..j].
    for (Index j = end + 1; j <= n && best < end; ++j) {
      Index l = 0;
      while (l < end && text[end - 1 - l] == text[j - 1 - l]) ++l;
      if (l > best) {
        best = l;
        best_end = j;
      }
    }
    if (best == 0) {
      parse.phrases.push_back(Phrase::literal(text[end - 1]));
      end -= 1;
    } else {
      parse.phrases.push_back(Phrase::copy(best_end - best + 1, best));
      end -= best;
    }
  }
  return parse;
}

std::optional<Index> oracle_rmtq(const SuffixArray& sa, Index b, Index e, Index k) {
  for (Index j = b; j <= e; ++j) {
    if (sa.at(j) >= k) return sa.at(j);
  }
  return std::nullopt;
}

Index naive_rank(std::span<const Code> s, Code c, Index i) {
  return static_cast<Index>(std::count(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(i), c));
}

Index naive_select(std::span<const Code> s, Code c, Index j) {
  Index seen = 0;
  for (Index i = 0; i < s.size(); ++i) {
    if (s[i] == c && ++seen == j) return i + 1;
  }
  return s.size() + 1;
}

std::optional<Interval> naive_sa_interval(std::span<const Code> text, const SuffixArray& sa,
                                          std::span<const Code> pattern) {
  const Index n = text.size();
  std::optional<Interval> out;
  for (Index row = 1; row <= n; ++row) {
    const Index pos = sa.at(row);
    if (n - pos + 1 < pattern.size()) continue;
    if (!std::equal(pattern.begin(), pattern.end(), text.begin() + static_cast<std::ptrdiff_t>(pos - 1))) {
      continue;
    }
    if (!out) {
      out = Interval{row, row};
    } else if (out->end + 1 != row) {
      throw std::logic_error("suffixes sharing a prefix are not contiguous");
    } else {
      out->end = row;
    }
  }
  return out;
}

bool copy_is_valid(std::span<const Code> text, Index start, const Phrase& ph) {
  const Index n = text.size();
  if (start < 1 || ph.length == 0 || start + ph.length - 1 > n) return false;
  if (ph.is_literal()) return ph.length == 1 && text[start - 1] == ph.code;
  if (ph.source <= start || ph.source + ph.length - 1 > n) return false;
  return std::equal(text.begin() + static_cast<std::ptrdiff_t>(start - 1),
                    text.begin() + static_cast<std::ptrdiff_t>(start - 1 + ph.length),
                    text.begin() + static_cast<std::ptrdiff_t>(ph.source - 1));
}

std::optional<Generator> parse_generator(std::string_view name) {
  if (name == "fibonacci") return Generator::fibonacci;
  if (name == "repeat") return Generator::repeat;
  if (name == "random") return Generator::random;
  return std::nullopt;
}

std::string_view generator_name(Generator g) {
  switch (g) {
    case Generator::fibonacci: return "fibonacci";
    case Generator::repeat: return "repeat";
    case Generator::random: return "random";
  }
  return "unknown";
}

std::vector<std::uint8_t> generate_corpus(Generator g, std::size_t n, std::uint64_t seed,
                                          unsigned alphabet) {
  std::vector<std::uint8_t> out;
  out.reserve(n);
  switch (g) {
    case Generator::fibonacci: {
      std::string prev = "a", cur = "ab";
      while (cur.size() < n) {
        std::string next = cur + prev;
        prev = std::move(cur);
        cur = std::move(next);
      }
      out.assign(cur.begin(), cur.begin() + static_cast<std::ptrdiff_t>(std::min(n, cur.size())));
      break;
    }
    case Generator::repeat:
      for (std::size_t i = 0; i < n; ++i) out.push_back(i % 2 == 0 ? 'a' : 'b');
      break;
    case Generator::random: {
      alphabet = std::clamp(alphabet, 1u, 256u);
      std::mt19937_64 rng(seed);
      std::uniform_int_distribution<unsigned> pick(0, alphabet - 1);
      const unsigned base = alphabet <= 26 ? 'a' : 0;
      for (std::size_t i = 0; i < n; ++i) out.push_back(static_cast<std::uint8_t>(base + pick(rng)));
      break;
    }
  }
  return out;
}

}  // namespace rl2lz::textkit
