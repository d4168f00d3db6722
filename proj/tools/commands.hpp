#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rl2lz/converter.hpp"
#include "rl2lz/io.hpp"
#include "rl2lz/textkit.hpp"

namespace rl2lz::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kMalformedInput = 2,
};

// Plaintext bytes -> RLBWT file. Logs n, r and r/n.
int cmd_build(std::span<const std::uint8_t> text, std::ostream& out, io::Format format,
              std::ostream& log);

// RLBWT file -> LZ77 file. Logs n, r, z and the conversion time.
int cmd_convert(std::istream& in, std::ostream& out, io::Format format, bool strip_sentinel,
                std::ostream& log);

// LZ77 file -> plaintext bytes (sentinel dropped, codes unshifted).
int cmd_decode(std::istream& in, std::ostream& out, std::ostream& log);

struct VerifyReport {
  bool passed = true;
  std::vector<std::string> lines;  // one "check=<name> result=<pass|fail> ..." per check
  std::optional<std::size_t> first_divergence;  // 1-based phrase index, emission order
  Index n = 0;
  Index r = 0;
  std::size_t z = 0;
};

// Runs build -> convert -> decode and the brute-force parse side by side.
VerifyReport verify_text(std::span<const std::uint8_t> text);
int cmd_verify(std::span<const std::uint8_t> text, std::ostream& report);

// Summary of an RLBWT or LZ77 file, detected from its header.
int cmd_stats(std::istream& in, std::ostream& out);

struct BenchReport {
  textkit::Generator generator = textkit::Generator::random;
  Index n = 0;  // includes the sentinel
  Index r = 0;
  std::size_t z = 0;
  double build_seconds = 0;
  double convert_seconds = 0;
  Footprint footprint;
  bool round_trip = false;
};

BenchReport run_bench(textkit::Generator generator, std::size_t length, std::uint64_t seed = 1,
                      unsigned alphabet = 256);
int cmd_bench(textkit::Generator generator, std::size_t length, std::uint64_t seed,
              unsigned trials, io::Format format, std::ostream& out);

// Entry point behind the rl2lz executable.
int run(int argc, char** argv);

}  // namespace rl2lz::cli
