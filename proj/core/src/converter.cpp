#include "rl2lz/converter.hpp"

#include <stdexcept>
#include <string>

namespace rl2lz {

ConversionResult convert_detailed(const Rlbwt& rlbwt, const TraceObserver& observer) {
  rlbwt.validate();
  const ShrunkRlbwt shrunk = shrink_alphabet(rlbwt);
  const OccIndex index(shrunk.rlbwt);
  const PsaLayout layout(index, shrunk.rlbwt.y);
  OpenCloseState state = OpenCloseState::initial(index.runs(), index.size());

  ConversionResult result;
  auto& phrases = result.parse.phrases;

  const Index n = index.size();
  const Interval everything{1, n};
  Interval current = everything;
  std::optional<Index> source;  // right occurrence of the current pattern
  Index length = 1;             // l: length of the pattern searched next
  Index head = n;               // x
  Index row = shrunk.rlbwt.y;   // L-row holding T[x]

  auto advance = [&] {
    const Index next_row = index.lf(row);
    // LF must be one cycle through all n rows.
    if (head > 1 && next_row == shrunk.rlbwt.y) throw MalformedInput("LF does not form a single cycle");
    state.admit(layout, next_row, head);
    --head;
    row = next_row;
  };

  while (head >= 1) {
    ++result.iterations;
    const Code c = index.access(row);
    const auto extended = index.backward_search(current, c);
    // cP occurs at x itself, so the interval is never empty.
    if (!extended) throw std::logic_error("backward search lost the text position");

    const Classification where = classify_interval(layout, *extended);
    const std::optional<Index> answer = where.kind == IntervalCase::interior
                                            ? std::optional<Index>(rmtq_interior(source))
                                            : rmtq_boundary(layout, state, *extended, where);
    if (observer) {
      observer(TraceStep{head, length, *extended, state.threshold(), where.kind, answer});
    }

    if (!answer) {
      if (length > 1) {
        phrases.push_back(Phrase::copy(*source, length - 1));
      } else {
        phrases.push_back(Phrase::literal(c));
        advance();
      }
      current = everything;
      source.reset();
      length = 1;
    } else {
      current = *extended;
      source = answer;
      ++length;
      advance();
    }
  }
  if (length > 1) phrases.push_back(Phrase::copy(*source, length - 1));

  result.parse = map_phrases(result.parse, shrunk.inverse);
  result.footprint.runs = index.runs();
  result.footprint.occ_index = index.element_count();
  result.footprint.psa_layout = layout.element_count();
  result.footprint.open_close = state.element_count();
  result.footprint.rmq_table = layout.rmq_element_count();
  result.footprint.inverse = shrunk.inverse.size();
  return result;
}

Lz77Parse convert(const Rlbwt& rlbwt) { return convert_detailed(rlbwt).parse; }

Lz77Parse map_phrases(const Lz77Parse& parse, std::span<const Code> inverse) {
  Lz77Parse out;
  out.phrases.reserve(parse.phrases.size());
  for (const auto& ph : parse.phrases) {
    if (ph.is_literal()) {
      if (ph.code < 1 || ph.code > inverse.size()) {
        throw MalformedInput("literal code " + std::to_string(ph.code) +
                             " outside the inverse array");
      }
      out.phrases.push_back(Phrase::literal(inverse[ph.code - 1]));
    } else {
      out.phrases.push_back(ph);
    }
  }
  return out;
}

std::vector<Code> lz_decode(const Lz77Parse& parse) {
  const Index n = parse.length();
  std::vector<Code> text(n);
  Index end = n;
  for (std::size_t k = 0; k < parse.phrases.size(); ++k) {
    const auto& ph = parse.phrases[k];
    if (ph.length == 0 || ph.length > end) {
      throw CorruptParse("phrase " + std::to_string(k + 1) + " has an invalid length");
    }
    const Index start = end - ph.length + 1;
    if (ph.is_literal()) {
      text[start - 1] = ph.code;
    } else {
      if (ph.source <= start || ph.source + ph.length - 1 > n) {
        throw CorruptParse("phrase " + std::to_string(k + 1) + " copies from outside the text");
      }
      for (Index j = ph.length; j-- > 0;) text[start - 1 + j] = text[ph.source - 1 + j];
    }
    end = start - 1;
  }
  return text;
}

}  // namespace rl2lz
