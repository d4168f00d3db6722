#pragma once

#include <iosfwd>
#include <optional>
#include <string_view>

#include "rl2lz/lz77.hpp"
#include "rl2lz/rlbwt.hpp"

/*
 * On-disk formats. All integers little-endian, all positions 1-based.
 *
 *   RLBWT:  "RLB1" | u8 version=1 | u64 n | u64 r | u64 y
 *           then r x (u32 code | u64 run length)
 *
 *   LZ77:   "LZ71" | u8 version=1 | u64 z
 *           then z records in emission order (f_1 first):
 *             u8 0 | u32 code            literal
 *             u8 1 | u64 p | u64 length  copy
 *
 * The JSON alternative carries the same fields:
 *   {"format":"RLB1","version":1,"n":..,"r":..,"y":..,"runs":[[code,len],..]}
 *   {"format":"LZ71","version":1,"z":..,"phrases":[{"literal":c}|{"copy":[p,len]},..]}
 *
 * Readers detect the encoding from the first byte and throw MalformedInput
 * on anything that does not match.
 */
namespace rl2lz::io {

enum class Format { binary, json };

std::optional<Format> parse_format(std::string_view name);

inline constexpr std::uint8_t kVersion = 1;

void write_rlbwt(std::ostream& out, const Rlbwt& rlbwt, Format format = Format::binary);
Rlbwt read_rlbwt(std::istream& in);

void write_lz77(std::ostream& out, const Lz77Parse& parse, Format format = Format::binary);
Lz77Parse read_lz77(std::istream& in);

}  // namespace rl2lz::io
