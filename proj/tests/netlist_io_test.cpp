// Copyright 2026 The revram Authors. All rights reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "revram/error.hpp"
#include "revram/generators.hpp"
#include "revram/metrics.hpp"
#include "revram/netlist_io.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

namespace revram {
namespace {

const char *kHeader = ".version 2.0\n"
                      ".numvars 3\n"
                      ".variables a b c\n"
                      ".inputs a b c\n"
                      ".outputs a b c\n"
                      ".constants --0\n"
                      ".garbage ---\n";

std::string with_body(const std::string &body) {
  return std::string(kHeader) + ".begin\n" + body + ".end\n";
}

ParseError parse_error(const std::string &text) {
  try {
    parse(text);
  } catch (const ParseError &e) {
    return e;
  }
  ADD_FAILURE() << "no ParseError for:\n" << text;
  return ParseError(0, 0, "none");
}

TEST(NetlistIo, ParsesMinimalCircuit) {
  const auto nl = parse(with_body("t3 a b c  # and into c\n"));
  ASSERT_EQ(nl.gates().size(), 1u);
  EXPECT_EQ(nl.gates()[0].gate->name(), "TG");
  EXPECT_EQ(nl.lines()[2].role, LineRole::ConstantZero);
  EXPECT_EQ(nl.lines()[0].role, LineRole::PrimaryInput);
}

TEST(NetlistIo, RoundTripsEveryGenerator) {
  std::vector<Netlist> all{build_dff(), build_msdff_we(false),
                           build_msdff_we(true)};
  for (unsigned n = 1; n <= 4; ++n)
    all.push_back(build_decoder(n));
  for (unsigned n = 1; n <= 3; ++n)
    for (unsigned m = 1; m <= 4; ++m)
      for (auto v : {RamVariant::PaperFaithful, RamVariant::Functional})
        all.push_back(build_rram({n, m, v}));
  for (const auto &nl : all) {
    SCOPED_TRACE(nl.name());
    const auto text = serialize(nl);
    const auto back = parse(text);
    EXPECT_EQ(back, nl);
    EXPECT_EQ(serialize(back), text);
    EXPECT_EQ(measure(back), measure(nl));
  }
}

TEST(NetlistIo, FaninMnemonic) {
  const std::string text = ".version 2.0\n.numvars 4\n.variables a b c t\n"
                           ".inputs a b c t\n.outputs a b c t\n"
                           ".constants ---0\n.garbage ----\n"
                           ".begin\nfg4 a b c t\n.end\n";
  const auto nl = parse(text);
  EXPECT_EQ(nl.gates()[0].gate->width(), 4u);
  EXPECT_EQ(serialize(nl), text);
}

TEST(NetlistIo, ErrorsCarryPosition) {
  {
    const auto e = parse_error(with_body("t3 a b x\n"));
    EXPECT_EQ(e.line(), 9u);
    EXPECT_EQ(e.column(), 8u);
  }
  {
    const auto e = parse_error(with_body("zz a b c\n"));
    EXPECT_EQ(e.line(), 9u);
    EXPECT_EQ(e.column(), 1u);
  }
  {
    const auto e = parse_error(with_body("t3 a b\n"));
    EXPECT_EQ(e.line(), 9u);
  }
  {
    const auto e = parse_error(with_body("t3 a a b\n"));
    EXPECT_EQ(e.line(), 9u);
    EXPECT_EQ(e.column(), 6u);
  }
  {
    const auto e = parse_error(".version 2.0\n.bogus 1\n");
    EXPECT_EQ(e.line(), 2u);
  }
  {
    const auto e = parse_error(std::string(kHeader) + ".begin\n");
    EXPECT_NE(std::string(e.what()).find("missing .end"), std::string::npos);
  }
  {
    const auto e = parse_error(std::string(kHeader));
    EXPECT_NE(std::string(e.what()).find("missing .begin"), std::string::npos);
  }
  {
    const auto e = parse_error(with_body("") + "t3 a b c\n");
    EXPECT_EQ(e.line(), 10u);
  }
}

TEST(NetlistIo, HeaderErrors) {
  EXPECT_THROW(parse(".version 2.0\n.numvars 2\n.variables a\n.begin\n.end\n"),
               ParseError);
  EXPECT_THROW(parse(".version 2.0\n.numvars 1\n.variables a\n.inputs a\n"
                     ".outputs a\n.constants x\n.garbage -\n.begin\n.end\n"),
               ParseError);
  EXPECT_THROW(parse(".version 2.0\n.numvars 1\n.numvars 1\n"), ParseError);
  EXPECT_THROW(parse(".version 2.0\n.numvars 2\n.variables a a\n"),
               ParseError);
}

TEST(NetlistIo, FeedbackDirective) {
  const auto nl = build_dff();
  const auto text = serialize(nl);
  EXPECT_NE(text.find(".feedback c0>q"), std::string::npos);
  auto broken = text;
  broken.replace(broken.find("c0>q"), 4, "c0>c1");
  EXPECT_THROW(parse(broken), ParseError);
}

TEST(NetlistIo, LoadNetlist) {
  EXPECT_THROW(load_netlist("/nonexistent/x.rev"), Error);
  const auto path =
      std::filesystem::temp_directory_path() / "revram_io_test.rev";
  {
    std::ofstream out(path);
    out << serialize(build_decoder(3));
  }
  EXPECT_EQ(load_netlist(path.string()), build_decoder(3));
  std::filesystem::remove(path);
}

} // namespace
} // namespace revram
