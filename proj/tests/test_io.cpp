#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "rl2lz/converter.hpp"
#include "rl2lz/io.hpp"
#include "rl2lz/textkit.hpp"
#include "support.hpp"

namespace rl2lz {
namespace {

using io::Format;
using testing::Fixture;

std::string bytes(std::initializer_list<int> values) {
  std::string out;
  for (int v : values) out.push_back(static_cast<char>(v));
  return out;
}

Rlbwt reread(const Rlbwt& rlbwt, Format format) {
  std::stringstream buf;
  io::write_rlbwt(buf, rlbwt, format);
  return io::read_rlbwt(buf);
}

Lz77Parse reread(const Lz77Parse& parse, Format format) {
  std::stringstream buf;
  io::write_lz77(buf, parse, format);
  return io::read_lz77(buf);
}

TEST(Io, RlbwtHeaderBytes) {
  std::ostringstream out;
  io::write_rlbwt(out, Rlbwt{{{2, 1}, {0, 1}}, 2, 2});
  const std::string expected = "RLB1" + bytes({1}) +
                               bytes({2, 0, 0, 0, 0, 0, 0, 0}) +  // n
                               bytes({2, 0, 0, 0, 0, 0, 0, 0}) +  // r
                               bytes({2, 0, 0, 0, 0, 0, 0, 0}) +  // y
                               bytes({2, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0}) +
                               bytes({0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0});
  EXPECT_EQ(out.str(), expected);
}

TEST(Io, Lz77RecordBytes) {
  std::ostringstream out;
  io::write_lz77(out, Lz77Parse{{Phrase::literal(7), Phrase::copy(3, 2)}});
  const std::string expected = "LZ71" + bytes({1}) + bytes({2, 0, 0, 0, 0, 0, 0, 0}) +
                               bytes({0, 7, 0, 0, 0}) +
                               bytes({1, 3, 0, 0, 0, 0, 0, 0, 0, 2, 0, 0, 0, 0, 0, 0, 0});
  EXPECT_EQ(out.str(), expected);
}

TEST(Io, JsonShape) {
  std::ostringstream out;
  io::write_lz77(out, Lz77Parse{{Phrase::literal(0), Phrase::copy(3, 2)}}, Format::json);
  EXPECT_NE(out.str().find("\"format\":\"LZ71\""), std::string::npos);
  EXPECT_NE(out.str().find("{\"copy\":[3,2]}"), std::string::npos);
  EXPECT_EQ(io::parse_format("json"), Format::json);
  EXPECT_EQ(io::parse_format("bin"), Format::binary);
  EXPECT_EQ(io::parse_format("xml"), std::nullopt);
}

TEST(Io, RoundTripRandom) {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 100; ++trial) {
    const auto f = Fixture(testing::random_text(rng, rng() % 300, 1 + rng() % 8));
    const auto parse = convert(f.rlbwt);
    for (auto format : {Format::binary, Format::json}) {
      ASSERT_EQ(reread(f.rlbwt, format), f.rlbwt);
      ASSERT_EQ(reread(parse, format), parse);
    }
  }
  const Rlbwt wide{{{0xfffffffeu, 1}, {0, 1}, {0xffffffffu, 3}}, 5, 2};
  EXPECT_EQ(reread(wide, Format::binary), wide);
  EXPECT_EQ(reread(wide, Format::json), wide);
}

TEST(Io, RejectsMalformedRlbwt) {
  std::ostringstream good;
  io::write_rlbwt(good, Fixture::of("mississippi").rlbwt);
  const std::string s = good.str();

  const auto fails = [](const std::string& data) {
    std::istringstream in(data);
    EXPECT_THROW(io::read_rlbwt(in), MalformedInput) << data.size() << " bytes";
  };
  fails("");
  fails("RLB");
  fails("XLB1" + s.substr(4));
  fails(s.substr(0, 4) + bytes({2}) + s.substr(5));  // version
  fails(s.substr(0, s.size() - 1));                  // truncated
  fails(s + "x");                                    // trailing
  std::string bad_n = s;
  bad_n[5] = 13;
  fails(bad_n);
  fails("{\"format\":\"RLB1\",\"version\":1,\"n\":3,\"r\":1,\"y\":1,\"runs\":[[1,3]]}");
  fails("{\"format\":\"RLB1\",\"version\":1,\"n\":1,\"r\":2,\"y\":1,\"runs\":[[0,1]]}");
  fails("{\"format\":\"LZ71\",\"version\":1}");
  fails("{not json");

  std::istringstream ok("{\"format\":\"RLB1\",\"version\":1,\"n\":2,\"r\":2,\"y\":2,\"runs\":[[5,1],[0,1]]}");
  EXPECT_EQ(io::read_rlbwt(ok), (Rlbwt{{{5, 1}, {0, 1}}, 2, 2}));
}

TEST(Io, RejectsMalformedLz77) {
  const auto fails = [](const std::string& data) {
    std::istringstream in(data);
    EXPECT_THROW(io::read_lz77(in), MalformedInput) << data.size() << " bytes";
  };
  const std::string head = "LZ71" + bytes({1}) + bytes({1, 0, 0, 0, 0, 0, 0, 0});
  fails(head);                                           // no records
  fails(head + bytes({2, 0, 0, 0, 0}));                  // bad tag
  fails(head + bytes({1, 3, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}));  // zero length
  fails(head + bytes({0, 1, 0, 0, 0, 9}));               // trailing
  fails("RLB1" + bytes({1}));
  fails("{\"format\":\"LZ71\",\"version\":1,\"z\":1,\"phrases\":[{\"copy\":[1,0]}]}");
  fails("{\"format\":\"LZ71\",\"version\":1,\"z\":2,\"phrases\":[{\"literal\":1}]}");
  fails("{\"format\":\"LZ71\",\"version\":1,\"z\":1,\"phrases\":[{\"other\":1}]}");
}

}  // namespace
}  // namespace rl2lz
