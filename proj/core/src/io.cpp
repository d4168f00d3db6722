#include "rl2lz/io.hpp"

#include <array>
#include <cstring>
#include <istream>
#include <iterator>
#include <limits>
#include <ostream>
#include <string>

#include "json.hpp"

namespace rl2lz::io {

namespace {

constexpr std::string_view kRlbwtMagic = "RLB1";
constexpr std::string_view kLz77Magic = "LZ71";

template <typename T>
void put_le(std::ostream& out, T value) {
  std::array<char, sizeof(T)> bytes{};
  for (std::size_t i = 0; i < sizeof(T); ++i) {
    bytes[i] = static_cast<char>((static_cast<std::uint64_t>(value) >> (8 * i)) & 0xff);
  }
  out.write(bytes.data(), bytes.size());
}

template <typename T>
T get_le(std::istream& in, const char* what) {
  std::array<unsigned char, sizeof(T)> bytes{};
  if (!in.read(reinterpret_cast<char*>(bytes.data()), bytes.size())) {
    throw MalformedInput(std::string("truncated input reading ") + what);
  }
  std::uint64_t value = 0;
  for (std::size_t i = 0; i < sizeof(T); ++i) value |= std::uint64_t{bytes[i]} << (8 * i);
  return static_cast<T>(value);
}

void expect_magic(std::istream& in, std::string_view magic) {
  std::array<char, 4> got{};
  if (!in.read(got.data(), got.size()) || std::string_view(got.data(), 4) != magic) {
    throw MalformedInput("bad magic, expected " + std::string(magic));
  }
  const auto version = get_le<std::uint8_t>(in, "version");
  if (version != kVersion) {
    throw MalformedInput("unsupported version " + std::to_string(version));
  }
}

bool looks_like_json(std::istream& in) {
  in >> std::ws;
  return in.peek() == '{';
}

nlohmann::json parse_json(std::istream& in, std::string_view magic) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  } catch (const nlohmann::json::exception& e) {
    throw MalformedInput(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || doc.value("format", "") != magic) {
    throw MalformedInput("JSON document is not " + std::string(magic));
  }
  if (doc.value("version", 0) != kVersion) throw MalformedInput("unsupported JSON version");
  return doc;
}

template <typename T>
T json_uint(const nlohmann::json& j, const char* what) {
  if (!j.is_number_unsigned()) throw MalformedInput(std::string(what) + " must be an unsigned integer");
  const auto v = j.get<std::uint64_t>();
  if (v > std::numeric_limits<T>::max()) throw MalformedInput(std::string(what) + " out of range");
  return static_cast<T>(v);
}

}  // namespace

std::optional<Format> parse_format(std::string_view name) {
  if (name == "bin" || name == "binary") return Format::binary;
  if (name == "json") return Format::json;
  return std::nullopt;
}

void write_rlbwt(std::ostream& out, const Rlbwt& rlbwt, Format format) {
  if (format == Format::json) {
    nlohmann::json runs = nlohmann::json::array();
    for (const auto& run : rlbwt.runs) runs.push_back({run.code, run.length});
    nlohmann::json doc = {{"format", kRlbwtMagic}, {"version", kVersion}, {"n", rlbwt.n},
                          {"r", rlbwt.r()},        {"y", rlbwt.y},        {"runs", runs}};
    out << doc.dump() << '\n';
    return;
  }
  out.write(kRlbwtMagic.data(), 4);
  put_le<std::uint8_t>(out, kVersion);
  put_le<std::uint64_t>(out, rlbwt.n);
  put_le<std::uint64_t>(out, rlbwt.r());
  put_le<std::uint64_t>(out, rlbwt.y);
  for (const auto& run : rlbwt.runs) {
    put_le<std::uint32_t>(out, run.code);
    put_le<std::uint64_t>(out, run.length);
  }
}

Rlbwt read_rlbwt(std::istream& in) {
  Rlbwt rlbwt;
  if (looks_like_json(in)) {
    const auto doc = parse_json(in, kRlbwtMagic);
    try {
      rlbwt.n = json_uint<Index>(doc.at("n"), "n");
      rlbwt.y = json_uint<Index>(doc.at("y"), "y");
      const auto r = json_uint<Index>(doc.at("r"), "r");
      const auto& runs = doc.at("runs");
      if (!runs.is_array() || runs.size() != r) throw MalformedInput("runs array does not hold r runs");
      for (const auto& run : runs) {
        if (!run.is_array() || run.size() != 2) throw MalformedInput("run must be [code, length]");
        rlbwt.runs.push_back({json_uint<Code>(run[0], "code"), json_uint<Index>(run[1], "length")});
      }
    } catch (const nlohmann::json::exception& e) {
      throw MalformedInput(std::string("invalid RLBWT JSON: ") + e.what());
    }
  } else {
    expect_magic(in, kRlbwtMagic);
    rlbwt.n = get_le<std::uint64_t>(in, "n");
    const auto r = get_le<std::uint64_t>(in, "r");
    rlbwt.y = get_le<std::uint64_t>(in, "y");
    if (r > rlbwt.n) throw MalformedInput("r exceeds n");
    rlbwt.runs.reserve(static_cast<std::size_t>(std::min<std::uint64_t>(r, 1u << 20)));
    for (std::uint64_t i = 0; i < r; ++i) {
      const auto code = get_le<std::uint32_t>(in, "run code");
      const auto length = get_le<std::uint64_t>(in, "run length");
      rlbwt.runs.push_back({code, length});
    }
    if (in.peek() != std::char_traits<char>::eof()) throw MalformedInput("trailing bytes after runs");
  }
  rlbwt.validate();
  return rlbwt;
}

void write_lz77(std::ostream& out, const Lz77Parse& parse, Format format) {
  if (format == Format::json) {
    nlohmann::json phrases = nlohmann::json::array();
    for (const auto& ph : parse.phrases) {
      if (ph.is_literal()) {
        phrases.push_back({{"literal", ph.code}});
      } else {
        phrases.push_back({{"copy", {ph.source, ph.length}}});
      }
    }
    nlohmann::json doc = {{"format", kLz77Magic}, {"version", kVersion}, {"z", parse.z()},
                          {"phrases", phrases}};
    out << doc.dump() << '\n';
    return;
  }
  out.write(kLz77Magic.data(), 4);
  put_le<std::uint8_t>(out, kVersion);
  put_le<std::uint64_t>(out, parse.z());
  for (const auto& ph : parse.phrases) {
    put_le<std::uint8_t>(out, static_cast<std::uint8_t>(ph.kind));
    if (ph.is_literal()) {
      put_le<std::uint32_t>(out, ph.code);
    } else {
      put_le<std::uint64_t>(out, ph.source);
      put_le<std::uint64_t>(out, ph.length);
    }
  }
}

Lz77Parse read_lz77(std::istream& in) {
  Lz77Parse parse;
  auto add_copy = [&](Index p, Index len) {
    if (len == 0) throw MalformedInput("copy phrase " + std::to_string(parse.z() + 1) + " has length 0");
    parse.phrases.push_back(Phrase::copy(p, len));
  };
  if (looks_like_json(in)) {
    const auto doc = parse_json(in, kLz77Magic);
    try {
      const auto z = json_uint<Index>(doc.at("z"), "z");
      const auto& phrases = doc.at("phrases");
      if (!phrases.is_array() || phrases.size() != z) throw MalformedInput("phrases array does not hold z phrases");
      for (const auto& ph : phrases) {
        if (ph.contains("literal")) {
          parse.phrases.push_back(Phrase::literal(json_uint<Code>(ph.at("literal"), "literal")));
        } else if (ph.contains("copy") && ph.at("copy").is_array() && ph.at("copy").size() == 2) {
          add_copy(json_uint<Index>(ph.at("copy")[0], "p"), json_uint<Index>(ph.at("copy")[1], "length"));
        } else {
          throw MalformedInput("phrase must be {\"literal\":c} or {\"copy\":[p,len]}");
        }
      }
    } catch (const nlohmann::json::exception& e) {
      throw MalformedInput(std::string("invalid LZ77 JSON: ") + e.what());
    }
    return parse;
  }
  expect_magic(in, kLz77Magic);
  const auto z = get_le<std::uint64_t>(in, "z");
  for (std::uint64_t i = 0; i < z; ++i) {
    const auto tag = get_le<std::uint8_t>(in, "phrase tag");
    if (tag == 0) {
      parse.phrases.push_back(Phrase::literal(get_le<std::uint32_t>(in, "literal code")));
    } else if (tag == 1) {
      const auto p = get_le<std::uint64_t>(in, "copy source");
      add_copy(p, get_le<std::uint64_t>(in, "copy length"));
    } else {
      throw MalformedInput("unknown phrase tag " + std::to_string(tag));
    }
  }
  if (in.peek() != std::char_traits<char>::eof()) throw MalformedInput("trailing bytes after phrases");
  return parse;
}

}  // namespace rl2lz::io
