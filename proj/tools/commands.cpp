#include "commands.hpp"

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

namespace rl2lz::cli {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::vector<std::uint8_t> read_all(std::istream& in) {
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::string pass_fail(bool ok) { return ok ? "pass" : "fail"; }

}  // namespace

int cmd_build(std::span<const std::uint8_t> text, std::ostream& out, io::Format format,
              std::ostream& log) {
  const auto t = textkit::text_from_bytes(text);
  const auto rlbwt = textkit::build_rlbwt(t);
  io::write_rlbwt(out, rlbwt, format);
  if (!out) {
    log << "error: failed to write RLBWT\n";
    return kMalformedInput;
  }
  log << "n=" << rlbwt.n << " r=" << rlbwt.r() << " r/n=" << std::setprecision(6)
      << static_cast<double>(rlbwt.r()) / static_cast<double>(rlbwt.n) << '\n';
  return kOk;
}

int cmd_convert(std::istream& in, std::ostream& out, io::Format format, bool strip_sentinel,
                std::ostream& log) {
  const auto rlbwt = io::read_rlbwt(in);
  const auto start = Clock::now();
  auto result = convert_detailed(rlbwt);
  const double elapsed = seconds_since(start);
  if (strip_sentinel && !result.parse.phrases.empty()) {
    result.parse.phrases.erase(result.parse.phrases.begin());
  }
  io::write_lz77(out, result.parse, format);
  if (!out) {
    log << "error: failed to write LZ77 parse\n";
    return kMalformedInput;
  }
  log << "n=" << rlbwt.n << " r=" << rlbwt.r() << " z=" << result.parse.z()
      << " seconds=" << elapsed << '\n';
  return kOk;
}

int cmd_decode(std::istream& in, std::ostream& out, std::ostream& log) {
  const auto parse = io::read_lz77(in);
  const auto codes = lz_decode(parse);
  std::vector<std::uint8_t> bytes;
  try {
    bytes = textkit::bytes_from_codes(codes);
  } catch (const std::invalid_argument& e) {
    log << "error: " << e.what() << '\n';
    return kMalformedInput;
  }
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  return out ? kOk : kMalformedInput;
}

VerifyReport verify_text(std::span<const std::uint8_t> bytes) {
  VerifyReport report;
  const auto text = textkit::text_from_bytes(bytes);
  const auto rlbwt = textkit::build_rlbwt(text);
  const auto parse = convert(rlbwt);
  const auto oracle = textkit::oracle_lz77(text.symbols);
  report.n = rlbwt.n;
  report.r = rlbwt.r();
  report.z = parse.z();

  auto record = [&](const std::string& name, bool ok, const std::string& detail = {}) {
    report.passed = report.passed && ok;
    report.lines.push_back("check=" + name + " result=" + pass_fail(ok) +
                           (detail.empty() ? "" : " " + detail));
  };

  bool decoded_ok = false;
  try {
    decoded_ok = lz_decode(parse) == text.symbols;
  } catch (const CorruptParse&) {
  }
  record("roundtrip", decoded_ok);

  record("phrase_count", parse.z() == oracle.z(),
         "z=" + std::to_string(parse.z()) + " oracle_z=" + std::to_string(oracle.z()));

  std::optional<std::size_t> divergence;
  for (std::size_t i = 0; i < std::min(parse.z(), oracle.z()); ++i) {
    const auto& a = parse.phrases[i];
    const auto& b = oracle.phrases[i];
    if (a.kind != b.kind || a.length != b.length || (a.is_literal() && a.code != b.code)) {
      divergence = i + 1;
      break;
    }
  }
  if (!divergence && parse.z() != oracle.z()) divergence = std::min(parse.z(), oracle.z()) + 1;
  record("boundaries", !divergence,
         divergence ? "first_divergent_phrase=" + std::to_string(*divergence) : "");

  const auto starts = parse.starts();
  std::optional<std::size_t> invalid;
  for (std::size_t i = 0; i < parse.z(); ++i) {
    if (!textkit::copy_is_valid(text.symbols, starts[i], parse.phrases[i])) {
      invalid = i + 1;
      break;
    }
  }
  record("copy_validity", !invalid, invalid ? "first_invalid_phrase=" + std::to_string(*invalid) : "");

  if (divergence) {
    report.first_divergence = divergence;
  } else if (invalid) {
    report.first_divergence = invalid;
  }
  return report;
}

int cmd_verify(std::span<const std::uint8_t> text, std::ostream& report_out) {
  const auto report = verify_text(text);
  for (const auto& line : report.lines) report_out << line << '\n';
  report_out << "verify result=" << pass_fail(report.passed) << " n=" << report.n
             << " r=" << report.r << " z=" << report.z
             << " z_stripped=" << (report.z > 0 ? report.z - 1 : 0);
  if (report.first_divergence) report_out << " first_divergent_phrase=" << *report.first_divergence;
  report_out << '\n';
  return report.passed ? kOk : kVerificationFailed;
}

int cmd_stats(std::istream& in, std::ostream& out) {
  const auto raw = read_all(in);
  std::string content(raw.begin(), raw.end());
  bool is_lz = content.rfind("LZ71", 0) == 0;
  if (const auto brace = content.find_first_not_of(" \t\r\n"); brace != std::string::npos && content[brace] == '{') {
    const auto doc = nlohmann::json::parse(content, nullptr, false);
    is_lz = doc.is_object() && doc.value("format", "") == "LZ71";
  }
  std::istringstream stream(content);
  if (is_lz) {
    const auto parse = io::read_lz77(stream);
    std::size_t literals = 0;
    Index longest = 0;
    for (const auto& ph : parse.phrases) {
      literals += ph.is_literal() ? 1 : 0;
      longest = std::max(longest, ph.length);
    }
    out << "kind=lz77 z=" << parse.z() << " n=" << parse.length() << " literals=" << literals
        << " copies=" << parse.z() - literals << " longest=" << longest << '\n';
    return kOk;
  }
  const auto rlbwt = io::read_rlbwt(stream);
  out << "kind=rlbwt n=" << rlbwt.n << " r=" << rlbwt.r() << " sigma=" << rlbwt.sigma()
      << " y=" << rlbwt.y << " r/n=" << static_cast<double>(rlbwt.r()) / static_cast<double>(rlbwt.n)
      << '\n';
  return kOk;
}

BenchReport run_bench(textkit::Generator generator, std::size_t length, std::uint64_t seed,
                      unsigned alphabet) {
  BenchReport report;
  report.generator = generator;
  const auto bytes = textkit::generate_corpus(generator, length, seed, alphabet);
  const auto text = textkit::text_from_bytes(bytes);

  auto start = Clock::now();
  const auto rlbwt = textkit::build_rlbwt(text);
  report.build_seconds = seconds_since(start);

  start = Clock::now();
  const auto result = convert_detailed(rlbwt);
  report.convert_seconds = seconds_since(start);

  report.n = rlbwt.n;
  report.r = rlbwt.r();
  report.z = result.parse.z();
  report.footprint = result.footprint;
  report.round_trip = lz_decode(result.parse) == text.symbols;
  return report;
}

int cmd_bench(textkit::Generator generator, std::size_t length, std::uint64_t seed, unsigned trials,
              io::Format format, std::ostream& out) {
  bool ok = true;
  for (unsigned trial = 0; trial < std::max(trials, 1u); ++trial) {
    const auto rep = run_bench(generator, length, seed + trial);
    ok = ok && rep.round_trip;
    const auto& fp = rep.footprint;
    if (format == io::Format::json) {
      nlohmann::json doc = {
          {"generator", textkit::generator_name(rep.generator)},
          {"trial", trial},
          {"n", rep.n},
          {"r", rep.r},
          {"z", rep.z},
          {"build_seconds", rep.build_seconds},
          {"convert_seconds", rep.convert_seconds},
          {"elements",
           {{"occ_index", fp.occ_index},
            {"psa_layout", fp.psa_layout},
            {"open_close", fp.open_close},
            {"inverse", fp.inverse},
            {"total", fp.total()},
            {"rmq_table", fp.rmq_table}}},
          {"round_trip", rep.round_trip},
      };
      out << doc.dump() << '\n';
    } else {
      out << "generator=" << textkit::generator_name(rep.generator) << " trial=" << trial
          << " n=" << rep.n << " r=" << rep.r << " z=" << rep.z << " build_seconds=" << rep.build_seconds
          << " convert_seconds=" << rep.convert_seconds << " elements=" << fp.total()
          << " elements_per_run=" << static_cast<double>(fp.total()) / static_cast<double>(rep.r)
          << " rmq_elements=" << fp.rmq_table << " round_trip=" << pass_fail(rep.round_trip) << '\n';
    }
  }
  return ok ? kOk : kVerificationFailed;
}

namespace {

// "-" means the standard stream.
std::vector<std::uint8_t> read_input(const std::string& path) {
  if (path == "-") return read_all(std::cin);
  std::ifstream file(path, std::ios::binary);
  if (!file) throw std::ios_base::failure("cannot open " + path);
  return read_all(file);
}

template <typename Fn>
int with_output(const std::string& path, Fn&& fn) {
  if (path == "-") return fn(std::cout);
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::ios_base::failure("cannot create " + path);
  const int status = fn(file);
  file.close();
  if (!file) throw std::ios_base::failure("failed writing " + path);
  return status;
}

io::Format format_of(const std::string& name) { return *io::parse_format(name); }

}  // namespace

int run(int argc, char** argv) {
  CLI::App app{"RLBWT to LZ77 conversion in compressed space"};
  app.require_subcommand(1);

  std::string input = "-";
  std::string output = "-";
  std::string format = "bin";
  bool strip_sentinel = false;
  std::optional<std::uint64_t> seed;
  std::size_t length = 1000;
  unsigned alphabet = 256;
  unsigned trials = 1;
  std::string generator = "fibonacci";

  const auto formats = CLI::IsMember({"bin", "binary", "json"});

  auto* build = app.add_subcommand("build", "Build the RLBWT of a plaintext file (sentinel appended)");
  build->add_option("input", input, "Plaintext file, - for stdin");
  build->add_option("-o,--output", output, "RLBWT file, - for stdout");
  build->add_option("--format", format, "bin or json")->check(formats);

  auto* conv = app.add_subcommand("convert", "Convert an RLBWT file into the LZ77 parse of the reversed text");
  conv->add_option("input", input, "RLBWT file, - for stdin");
  conv->add_option("-o,--output", output, "LZ77 file, - for stdout");
  conv->add_option("--format", format, "bin or json")->check(formats);
  conv->add_flag("--strip-sentinel", strip_sentinel, "Drop the sentinel phrase f_1");

  auto* dec = app.add_subcommand("decode", "Decode an LZ77 file back to plaintext");
  dec->add_option("input", input, "LZ77 file, - for stdin");
  dec->add_option("-o,--output", output, "Plaintext file, - for stdout");

  auto* ver = app.add_subcommand("verify", "Cross-check the converter against the brute-force parser");
  ver->add_option("input", input, "Plaintext file, - for stdin (ignored with --seed)");
  ver->add_option("--seed", seed, "Verify a random text generated from this seed instead");
  ver->add_option("--length", length, "Random text length");
  ver->add_option("--alphabet", alphabet, "Random text alphabet size")->check(CLI::Range(1, 256));

  auto* stats = app.add_subcommand("stats", "Summarize an RLBWT or LZ77 file");
  stats->add_option("input", input, "RLBWT or LZ77 file, - for stdin");

  auto* bench = app.add_subcommand("bench", "Time build and conversion on a generated corpus");
  bench->add_option("--generator", generator, "fibonacci, repeat or random")
      ->check(CLI::IsMember({"fibonacci", "repeat", "random"}));
  bench->add_option("--length", length, "Corpus length")->check(CLI::PositiveNumber);
  bench->add_option("--seed", seed, "Random seed");
  bench->add_option("--trials", trials, "Repetitions");
  bench->add_option("--format", format, "bin (key=value lines) or json")->check(formats);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int status = app.exit(e);
    return status == 0 ? kOk : kMalformedInput;
  }

  try {
    if (*build) {
      const auto text = read_input(input);
      return with_output(output, [&](std::ostream& out) {
        return cmd_build(text, out, format_of(format), std::cerr);
      });
    }
    if (*conv) {
      const auto raw = read_input(input);
      std::istringstream in(std::string(raw.begin(), raw.end()));
      return with_output(output, [&](std::ostream& out) {
        return cmd_convert(in, out, format_of(format), strip_sentinel, std::cerr);
      });
    }
    if (*dec) {
      const auto raw = read_input(input);
      std::istringstream in(std::string(raw.begin(), raw.end()));
      return with_output(output, [&](std::ostream& out) { return cmd_decode(in, out, std::cerr); });
    }
    if (*ver) {
      const auto text = seed ? textkit::generate_corpus(textkit::Generator::random, length, *seed, alphabet)
                             : read_input(input);
      return cmd_verify(text, std::cout);
    }
    if (*stats) {
      const auto raw = read_input(input);
      std::istringstream in(std::string(raw.begin(), raw.end()));
      return cmd_stats(in, std::cout);
    }
    if (*bench) {
      return cmd_bench(*textkit::parse_generator(generator), length, seed.value_or(1), trials,
                       format_of(format), std::cout);
    }
  } catch (const MalformedInput& e) {
    std::cerr << "error: malformed input: " << e.what() << '\n';
    return kMalformedInput;
  } catch (const CorruptParse& e) {
    std::cerr << "error: corrupt parse: " << e.what() << '\n';
    return kMalformedInput;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kMalformedInput;
  }
  return kOk;
}

}  // namespace rl2lz::cli
