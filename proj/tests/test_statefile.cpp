// Copyright 2026 The eofbound Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstring>
#include <string>

#include <gtest/gtest.h>

#include "eofbound/maps.hpp"
#include "eofbound/statefile.hpp"

namespace eofb {
namespace {

ErrorKind parse_error_kind(const std::string& text, bool pure = false) {
  try {
    parse_state_file(text, pure);
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error for: " << text;
  return ErrorKind::ConvergenceFailure;
}

TEST(FormatDouble, ShortestRoundTrip) {
  EXPECT_EQ(format_double(0.5), "0.5");
  EXPECT_EQ(format_double(1.0), "1");
  EXPECT_EQ(format_double(0.1), "0.1");
  for (double x : {1.0 / 3.0, 2.0 / 7.0, 1e-300, -12345.678901234567}) {
    EXPECT_EQ(std::stod(format_double(x)), x);
  }
}

TEST(StateFile, DensityRoundTripIsBitExact) {
  const StateData in{random_density_matrix({2, 3}, 4, 9)};
  const StateData out = parse_state_file(write_state_file(in));
  ASSERT_FALSE(out.is_pure());
  EXPECT_EQ(out.dims(), BipartiteDims(2, 3));
  EXPECT_EQ(std::memcmp(in.density().matrix().data(), out.density().matrix().data(),
                        sizeof(Complex) * 36),
            0);
}

TEST(StateFile, PureRoundTrip) {
  const StateData in{random_pure_state({3, 2}, 4)};
  const std::string text = write_state_file(in);
  EXPECT_NE(text.find("\"kind\":\"pure\""), std::string::npos);
  const StateData out = parse_state_file(text);
  ASSERT_TRUE(out.is_pure());
  EXPECT_TRUE(std::get<PureState>(out.state).amplitudes() ==
              std::get<PureState>(in.state).amplitudes());
}

TEST(StateFile, Layout) {
  const std::string text = write_state_file(StateData{make_werner_2x2(0.0)});
  EXPECT_EQ(text.rfind("{\"version\":1,\"kind\":\"density\",\"m\":2,\"n\":2,\"data\":[\n[0.25,0],\n", 0),
            0u);
}

TEST(StateFile, PureFlagAndMissingKind) {
  const std::string bell =
      R"({"version":1,"m":2,"n":2,"data":[[0.7071067811865476,0],[0,0],[0,0],[0.7071067811865476,0]]})";
  EXPECT_EQ(parse_error_kind(bell), ErrorKind::ParseError);  // read as density: 4 != 16 entries
  const StateData s = parse_state_file(bell, true);
  EXPECT_TRUE(s.is_pure());
  EXPECT_NEAR(ppt_norm(s.density()), 2.0, 1e-12);

  const std::string dens = write_state_file(StateData{make_werner_2x2(0.5)});
  EXPECT_EQ(parse_error_kind(dens, true), ErrorKind::ParseError);
}

TEST(StateFile, Errors) {
  EXPECT_EQ(parse_error_kind("{\"version\":1,"), ErrorKind::ParseError);
  EXPECT_EQ(parse_error_kind("[1,2]"), ErrorKind::ParseError);
  EXPECT_EQ(parse_error_kind(R"({"version":2,"m":1,"n":1,"data":[[1,0]]})"), ErrorKind::ParseError);
  EXPECT_EQ(parse_error_kind(R"({"version":1,"kind":"mixed","m":1,"n":1,"data":[[1,0]]})"),
            ErrorKind::ParseError);
  EXPECT_EQ(parse_error_kind(R"({"version":1,"m":0,"n":1,"data":[]})"), ErrorKind::ParseError);
  EXPECT_EQ(parse_error_kind(R"({"version":1,"m":1,"n":1,"data":[[1]]})"), ErrorKind::ParseError);
  EXPECT_EQ(parse_error_kind(R"({"version":1,"m":1,"n":1,"data":[[2,0]]})"),
            ErrorKind::InvariantViolation);
  EXPECT_EQ(parse_error_kind(R"({"version":1,"m":1,"n":2,"data":[[0.5,0],[0.3,0],[0,0],[0.5,0]]})"),
            ErrorKind::NotHermitian);
}

TEST(StateFile, ParseErrorReportsPosition) {
  try {
    parse_state_file("{\"version\":1,\n\"m\":2,\n\"n\": oops}");
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
  }
}

TEST(StateSpec, Parsing) {
  const StateSpec s = parse_state_spec("isotropic:d=3,F=0.8", 5);
  EXPECT_EQ(s.family, "isotropic");
  EXPECT_EQ(s.params.at("d"), "3");
  EXPECT_EQ(s.params.at("F"), "0.8");
  EXPECT_EQ(s.seed, 5u);
  EXPECT_EQ(parse_state_spec("random:m=2,n=2,seed=42").seed, 42u);
  EXPECT_EQ(parse_state_spec("werner2x2").params.size(), 0u);
  EXPECT_THROW(parse_state_spec("isotropic:d"), Error);
  EXPECT_THROW(parse_state_spec(":d=2"), Error);
}

TEST(StateSpec, Generation) {
  const DensityMatrix iso = generate_state(parse_state_spec("isotropic:d=3,F=0.5")).density();
  const ComplexVector phi = make_maximally_entangled(3, 3).amplitudes();
  EXPECT_NEAR((phi.adjoint() * iso.matrix() * phi)(0, 0).real(), 0.5, 1e-12);

  EXPECT_EQ(generate_state(parse_state_spec("random:m=3,n=3,rank=4,seed=7")).dims(),
            BipartiteDims(3, 3));
  EXPECT_TRUE(generate_state(parse_state_spec("maxent:m=2,n=3")).is_pure());
  EXPECT_TRUE(generate_state(parse_state_spec("random:m=2,n=3", 1, true)).is_pure());
  EXPECT_LE(ppt_norm(generate_state(parse_state_spec("horodecki_bes:a=0.3")).density()), 1 + 1e-8);

  auto kind = [](const std::string& text, bool pure = false) {
    try {
      generate_state(parse_state_spec(text, 1, pure));
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::ConvergenceFailure;
  };
  EXPECT_EQ(kind("ghz:n=3"), ErrorKind::UnknownFamily);
  EXPECT_EQ(kind("isotropic:d=3,F=1.5"), ErrorKind::ParameterOutOfRange);
  EXPECT_EQ(kind("isotropic:d=3"), ErrorKind::ParameterOutOfRange);
  EXPECT_EQ(kind("isotropic:d=3,F=0.5,x=1"), ErrorKind::ParameterOutOfRange);
  EXPECT_EQ(kind("isotropic:d=2.5,F=0.5"), ErrorKind::ParameterOutOfRange);
  EXPECT_EQ(kind("isotropic:d=3,F=abc"), ErrorKind::ParameterOutOfRange);
  EXPECT_EQ(kind("werner2x2:p=0.5", true), ErrorKind::ParameterOutOfRange);
}

TEST(StateSpec, BatchExpansion) {
  const auto specs = expand_batch(parse_state_spec("random:m=3,n=3,count=4,seed=10"));
  ASSERT_EQ(specs.size(), 4u);
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_EQ(specs[i].seed, 10u + i);
    EXPECT_EQ(specs[i].params.count("count"), 0u);
  }
  EXPECT_EQ(expand_batch(parse_state_spec("werner2x2:p=0.5")).size(), 1u);
  EXPECT_THROW(expand_batch(parse_state_spec("werner2x2:p=0.5,count=0")), Error);
}

}  // namespace
}  // namespace eofb
