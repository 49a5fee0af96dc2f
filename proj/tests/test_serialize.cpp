#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "hopfkit/builders.hpp"
#include "hopfkit/doubles.hpp"
#include "hopfkit/dual.hpp"
#include "hopfkit/pipelines.hpp"
#include "hopfkit/presented.hpp"
#include "hopfkit/serialize.hpp"

using namespace hopfkit;

namespace {

std::string corpus(const std::string& file) {
  std::ifstream in(std::string(HOPFKIT_CORPUS_DIR) + "/" + file);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// write -> parse -> write is byte-identical and the parsed structure equals the original.
void expect_round_trip(const HopfAlgebra& H) {
  const std::string a = write_hopf(H);
  HopfAlgebra P = parse_hopf(a);
  EXPECT_EQ(write_hopf(P), a) << H.name;
  EXPECT_TRUE(structures_equal(P.s, H.s)) << H.name;
  EXPECT_EQ(P.labels, H.labels);
  EXPECT_EQ(P.conductor, H.conductor);
  EXPECT_EQ(P.name, H.name);
  ASSERT_EQ(P.grouplikes.size(), H.grouplikes.size());
  for (std::size_t i = 0; i < H.grouplikes.size(); ++i) {
    EXPECT_EQ(P.grouplikes[i].label, H.grouplikes[i].label);
    EXPECT_TRUE(exact_ops(H).equal(to_element(P.grouplikes[i]), to_element(H.grouplikes[i])));
  }
  EXPECT_EQ(P.characters.size(), H.characters.size());
}

// Only the structure constants, labels and conductor.
std::string structure_text(HopfAlgebra H) {
  H.name.clear();
  H.grouplikes.clear();
  H.characters.clear();
  return write_hopf(H);
}

}  // namespace

TEST(HopfFormat, RoundTripGroupAlgebras) {
  expect_round_trip(group_algebra(cyclic_group(6, "g"), "kZ6"));
  expect_round_trip(group_algebra(metacyclic_group(7, 3, 2), "kG"));
  expect_round_trip(dual_group_algebra(metacyclic_group(7, 3, 2)));
}

TEST(HopfFormat, RoundTripTaftAndDuals) {
  for (long n : {2, 3, 4, 5}) {
    auto T = build_taft(n, CycNumber::root_of_unity(n, 1));
    expect_round_trip(T);
    expect_round_trip(dual_hopf(T));
    expect_round_trip(dual_hopf(T, DualVariant::Cop));
  }
}

TEST(HopfFormat, RoundTripScriptA) {
  for (std::int64_t l : {0, 1}) expect_round_trip(build_script_A({7, 3, 2, l}));
}

TEST(HopfFormat, RoundTripDoubleAndQuotient) {
  auto T = build_taft_pipeline(3);
  expect_round_trip(T.dd->D);
  expect_round_trip(T.K());
  expect_round_trip(build_group_double(cyclic_group(2, "g"), "kZ2")->D);
}

TEST(HopfFormat, RoundTripPresented) {
  expect_round_trip(realize_presentation(parse_presentation(corpus("rank1_u.halg"))));
  expect_round_trip(realize_presentation(parse_presentation(corpus("taft.halg"))));
}

TEST(HopfFormat, PresentedTaftIsByteIdenticalToDirectBuild) {
  for (long n : {2, 3, 4, 5}) {
    auto P = realize_presentation(parse_presentation(corpus("taft.halg"), {{"n", n}}));
    auto T = build_taft(n, CycNumber::root_of_unity(n, 1));
    EXPECT_EQ(structure_text(P), structure_text(T)) << "n=" << n;
  }
}

TEST(HopfFormat, LoadedAlgebraCertifies) {
  auto T = build_taft(3, CycNumber::root_of_unity(3, 1));
  HopfAlgebra P = parse_hopf(write_hopf(T));
  EXPECT_FALSE(P.certified);
  EXPECT_TRUE(certify(P).ok());
}

TEST(HopfFormat, CorruptedConstantFailsWithWitness) {
  auto T = build_taft(3, CycNumber::root_of_unity(3, 1));
  std::string text = write_hopf(T);
  // g * g = g^2 becomes 2 g^2.
  const std::string from = "[1, 1, 2, \"1\"]";
  auto pos = text.find(from);
  ASSERT_NE(pos, std::string::npos);
  text.replace(pos, from.size(), "[1, 1, 2, \"2\"]");
  HopfAlgebra P = parse_hopf(text);
  Report r = verify_hopf_axioms(P, VerifyOptions{Mode::Exact});
  EXPECT_FALSE(r.ok());
  bool witnessed = false;
  for (const auto& c : r.checks())
    if (c.status == Status::Fail && !c.witnesses.empty()) witnessed = true;
  EXPECT_TRUE(witnessed) << r.to_text();
}

TEST(HopfFormat, ParseErrors) {
  auto T = build_taft(2, CycNumber::root_of_unity(2, 1));
  const std::string good = write_hopf(T);
  auto expect_syntax = [](const std::string& text) {
    try {
      parse_hopf(text);
      ADD_FAILURE() << "no error for:\n" << text.substr(0, 200);
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::Syntax) << e.what();
    }
  };
  expect_syntax("{");
  expect_syntax("{\"dim\": 2}");
  std::string bad_index = good;
  bad_index.replace(bad_index.find("\"mult\": [\n    [0, 0,"), 19, "\"mult\": [\n    [9, 0,");
  expect_syntax(bad_index);
  std::string bad_literal = good;
  bad_literal.replace(bad_literal.find("\"counit\": [\n    \"1\""), 20, "\"counit\": [\n    \"1*\"");
  expect_syntax(bad_literal);
}

TEST(HopfFormat, LiteralsUseDocumentConductor) {
  auto T = build_taft(3, CycNumber::root_of_unity(3, 1));
  const std::string text = write_hopf(T);
  EXPECT_NE(text.find("\"conductor\": 3"), std::string::npos);
  EXPECT_NE(text.find("\"1*z^1\""), std::string::npos) << "expected a zeta_3 literal";
  // A zeta_9 literal is not a root in a conductor-3 document.
  std::string bad = text;
  bad.replace(bad.find("\"1*z^1\""), 7, "\"1*z_9\"");
  EXPECT_THROW(parse_hopf(bad), Error);
}

TEST(RmatFormat, RoundTripAndReload) {
  auto dd = build_group_double(cyclic_group(3, "g"), "kZ3");
  const auto dir = std::filesystem::temp_directory_path() / "hopfkit_rmat_test";
  std::filesystem::create_directories(dir);
  save_hopf((dir / "d.hopf").string(), dd->D);
  const std::string text = write_rmat("d.hopf", dd->D, dd->R.R);
  detail::write_file((dir / "d.rmat").string(), text);

  auto [H, R] = load_rmat((dir / "d.rmat").string());
  EXPECT_EQ(write_rmat("d.hopf", H, R), text);
  EXPECT_TRUE(exact_ops(H).equal(R, dd->R.R));
  H.certified = certify(H).ok();
  EXPECT_TRUE(verify_quasitriangular(H, R).verified);
  std::filesystem::remove_all(dir);
}

TEST(DatumFormat, ParseAndRoundTrip) {
  const std::string text = R"({"theta": 2, "cartan": [[2, -1], [-1, 2]], "group_orders": [10, 10],
                               "g": [[1, 0], [0, 1]], "chi": [[-3, 2], [1, -3]], "n": 10})";
  DatumFile D = parse_datum(text);
  EXPECT_EQ(D.theta, 2);
  ASSERT_TRUE(D.cartan.has_value());
  EXPECT_EQ(D.chi, (LongMatrix{{-3, 2}, {1, -3}}));
  EXPECT_FALSE(D.f.has_value());
  EXPECT_EQ(D.n, 10);
  const std::string w = write_datum(D);
  EXPECT_EQ(write_datum(parse_datum(w)), w);
  auto C = D.cartan_datum();
  EXPECT_EQ(C.cartan, (LongMatrix{{2, -1}, {-1, 2}}));
}

TEST(DatumFormat, ShapeErrors) {
  EXPECT_THROW(parse_datum(R"({"theta": 2, "group_orders": [5], "g": [[1]], "chi": [[1]]})"), Error);
  EXPECT_THROW(parse_datum(R"({"theta": 1, "group_orders": [5], "g": [[1, 0]], "chi": [[1]]})"), Error);
  EXPECT_THROW(parse_datum(R"({"theta": 1, "group_orders": [5], "g": [[1]]})"), Error);
  EXPECT_THROW(parse_datum(R"({"theta": "x", "group_orders": [5], "g": [[1]], "chi": [[1]]})"), Error);
  EXPECT_NO_THROW(parse_datum(R"({"theta": 1, "group_orders": [5], "g": [[1]], "chi": [[1]]})"));
}
