#include <doctest.h>

#include <functional>

#include <htg/certificate.hpp>
#include <htg/constructions.hpp>
#include <htg/factor.hpp>

using namespace htg;

namespace {

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& err) {
    return err.kind();
  }
  FAIL("expected an Error");
  return ErrorKind::Unsupported;
}

std::vector<std::pair<Vertex, Vertex>> column_cycles(int m, int n) {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) out.emplace_back(Vertex{i, j}, Vertex{i, (j + 1) % n});
  return out;
}

}  // namespace

TEST_CASE("two column cycles of HTG(2,6,0) form a valid factor") {
  HtgGraph g = build_graph(validate(2, 6, 0));
  TwoFactor f = verify_factor(g, column_cycles(2, 6));
  CHECK(f.cycle_count() == 2);
  CHECK(f.cycle_lengths() == std::vector<int>{6, 6});
  CHECK(separates(f, {0, 0}, {1, 3}));
  CHECK_FALSE(separates(f, {0, 0}, {0, 3}));
}

TEST_CASE("all vertical edges of HTG(1,8,3): a valid one-cycle factor, never separating") {
  HtgGraph g = build_graph(validate(1, 8, 3));
  TwoFactor f = verify_factor(g, column_cycles(1, 8));
  CHECK(f.cycle_count() == 1);
  CHECK(f.cycles[0].size() == 8);
  for (int j = 1; j < 8; ++j) CHECK_FALSE(separates(f, {0, 0}, {0, j}));
}

TEST_CASE("dropping an edge breaks spanning at its endpoints") {
  HtgGraph g = build_graph(validate(2, 6, 0));
  auto edges = column_cycles(2, 6);
  edges.pop_back();
  CHECK(kind_of([&] { verify_factor(g, edges); }) == ErrorKind::NotSpanning);
}

TEST_CASE("foreign edges are rejected") {
  HtgGraph g = build_graph(validate(2, 6, 0));
  auto edges = column_cycles(2, 6);
  edges.emplace_back(Vertex{0, 0}, Vertex{1, 3});
  CHECK(kind_of([&] { verify_factor(g, edges); }) == ErrorKind::MismatchedFactor);
}

TEST_CASE("separates demands distinct vertices") {
  HtgGraph g = build_graph(validate(2, 6, 0));
  TwoFactor f = verify_factor(g, column_cycles(2, 6));
  CHECK(kind_of([&] { separates(f, {0, 0}, {0, 0}); }) == ErrorKind::SameVertex);
}

TEST_CASE("separates is symmetric and matches the cycle decomposition") {
  HtgGraph g = build_graph(validate(1, 12, 3));
  SeparationCertificate cert = build_O3(12, {0, 0}, {0, 5});
  const TwoFactor& f = cert.factor;
  CHECK(separates(f, {0, 0}, {0, 5}));
  for (int a = 0; a < 12; ++a)
    for (int b = a + 1; b < 12; ++b)
      CHECK(separates(f, {0, a}, {0, b}) == separates(f, {0, b}, {0, a}));
  int sum = 0;
  for (int length : f.cycle_lengths()) sum += length;
  CHECK(sum == 12);
}

TEST_CASE("cycle decomposition is canonical") {
  HtgGraph g = build_graph(validate(2, 6, 0));
  TwoFactor f = verify_factor(g, column_cycles(2, 6));
  REQUIRE(f.cycle_count() == 2);
  CHECK(f.cycles[0].front() == 0);
  CHECK(f.cycles[1].front() == 6);
  // oriented toward the smaller neighbor: 0 -> 1, not 0 -> 5
  CHECK(f.cycles[0][1] == 1);
}

TEST_CASE("certificate encode/decode round-trips the three-column factor") {
  HtgParams p = validate(3, 12, 3);
  SeparationCertificate cert = separate(p, {0, 0}, {2, 5});
  std::string text = encode_certificate(cert);
  SeparationCertificate back = decode_certificate(text);
  CHECK(back.params == cert.params);
  CHECK(back.pair == cert.pair);
  CHECK(back.provenance == cert.provenance);
  REQUIRE(back.factor.edges.size() == cert.factor.edges.size());
  for (size_t e = 0; e < cert.factor.edges.size(); ++e)
    CHECK(back.factor.edges[e] == cert.factor.edges[e]);
  CHECK(encode_certificate(back) == text);
}

TEST_CASE("tampered certificates fail verification") {
  SeparationCertificate cert = build_O3(12, {0, 0}, {0, 5});

  // one edge removed
  SeparationCertificate truncated = cert;
  truncated.factor.edges.erase(truncated.factor.edges.begin());
  CHECK(kind_of([&] { decode_certificate(encode_certificate(truncated)); }) ==
        ErrorKind::VerificationFailed);

  // empty edge list
  SeparationCertificate empty = cert;
  empty.factor.edges.clear();
  CHECK(kind_of([&] { decode_certificate(encode_certificate(empty)); }) ==
        ErrorKind::VerificationFailed);

  // pair on one cycle
  SeparationCertificate same_cycle = cert;
  same_cycle.pair = {Vertex{0, 1}, Vertex{0, 2}};
  if (!separates(cert.factor, {0, 1}, {0, 2}))
    CHECK(kind_of([&] { decode_certificate(encode_certificate(same_cycle)); }) ==
          ErrorKind::VerificationFailed);

  // structurally broken documents
  CHECK(kind_of([] { decode_certificate("{"); }) == ErrorKind::SchemaError);
  CHECK(kind_of([] { decode_certificate("{\"params\":{\"m\":1}}"); }) == ErrorKind::SchemaError);
}

TEST_CASE("params JSON round-trip") {
  HtgParams p = validate(5, 14, 3);
  CHECK(params_from_json(params_to_json(p)) == p);
  CHECK(params_to_json(p) == "{\"ell\":3,\"m\":5,\"n\":14}");
}
