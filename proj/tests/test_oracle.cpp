#include <doctest.h>

#include <functional>
#include <set>

#include <htg/oracle.hpp>

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

}  // namespace

TEST_CASE("HTG(1,6,3): factors exist but none has two cycles") {
  HtgGraph g = build_graph(validate(1, 6, 3));
  auto factors = enumerate_two_factors(g);
  CHECK(!factors.empty());
  for (const TwoFactor& f : factors) CHECK(f.cycle_count() != 2);
}

TEST_CASE("HTG(2,4,0): the two column cycles appear in the enumeration") {
  HtgGraph g = build_graph(validate(2, 4, 0));
  bool found = false;
  for (const TwoFactor& f : enumerate_two_factors(g)) {
    if (f.cycle_count() != 2) continue;
    bool all_vertical = true;
    for (const Edge& e : f.edges) all_vertical &= (e.kind == EdgeKind::Vertical);
    found |= all_vertical;
  }
  CHECK(found);
}

TEST_CASE("cap exceeded reports TooLarge") {
  HtgGraph g = build_graph(validate(5, 10, 1));
  CHECK(kind_of([&] { enumerate_two_factors(g, 48); }) == ErrorKind::TooLarge);
  CHECK(kind_of([&] { decide_2sc(g, 48); }) == ErrorKind::TooLarge);
  CHECK(kind_of([&] { decide_pair(g, {0, 0}, {0, 1}, 48); }) == ErrorKind::TooLarge);
}

TEST_CASE("matching-factor duality: complements are factors, counts agree") {
  for (auto [m, n, ell] : {std::tuple{1, 8, 3}, {2, 6, 0}, {2, 6, 4}, {3, 8, 1}, {2, 10, 2}}) {
    HtgGraph g = build_graph(validate(m, n, ell));
    long long matchings = count_perfect_matchings(g);
    std::set<std::vector<int>> seen;
    long long factors = 0;
    for_each_two_factor(g, [&](const TwoFactor& f) {
      ++factors;
      int total = 0;
      for (int len : f.cycle_lengths()) {
        CHECK(len >= 3);
        total += len;
      }
      CHECK(total == g.order());
      CHECK(static_cast<int>(f.edges.size()) == g.order());
      std::vector<int> key;
      for (const Edge& e : f.edges) key.push_back(g.index(e.a) * g.order() + g.index(e.b));
      CHECK(seen.insert(key).second);  // each factor exactly once
    });
    CHECK(matchings == factors);
  }
}

TEST_CASE("decide_pair: negative instances from the small cases") {
  CHECK_FALSE(decide_pair(build_graph(validate(2, 10, 4)), {0, 0}, {0, 9}).separable);
  CHECK_FALSE(decide_pair(build_graph(validate(3, 6, 3)), {0, 0}, {0, 5}).separable);
  auto positive = decide_pair(build_graph(validate(1, 8, 3)), {0, 0}, {0, 7});
  CHECK(positive.separable);
  REQUIRE(positive.witness.has_value());
  CHECK(separates(*positive.witness, {0, 0}, {0, 7}));
}

TEST_CASE("decide_pair rejects equal vertices") {
  HtgGraph g = build_graph(validate(1, 8, 3));
  CHECK(kind_of([&] { decide_pair(g, {0, 3}, {0, 3}); }) == ErrorKind::SameVertex);
}

TEST_CASE("decide_2sc: known verdicts") {
  CHECK_FALSE(decide_2sc(build_graph(validate(1, 10, 5))).is_2sc);
  CHECK(decide_2sc(build_graph(validate(2, 4, 2))).is_2sc);

  DecisionReport r = decide_2sc(build_graph(validate(3, 4, 1)));
  CHECK_FALSE(r.is_2sc);
  REQUIRE(r.counterexample.has_value());
  CHECK(r.counterexample->first == Vertex{0, 0});
  CHECK(r.counterexample->second == Vertex{2, 3});
}

TEST_CASE("decide_2sc is deterministic and independent of the worker count") {
  HtgGraph g = build_graph(validate(1, 12, 3));
  DecisionReport seq = decide_2sc(g, kDefaultOracleCap, 1);
  DecisionReport par = decide_2sc(g, kDefaultOracleCap, 3);
  CHECK(seq.is_2sc == par.is_2sc);
  CHECK(seq.witness_count == par.witness_count);
  CHECK(seq.separable == par.separable);
  CHECK(seq.counterexample == par.counterexample);
  CHECK(report_to_json(seq) == report_to_json(par));
}

TEST_CASE("base-vertex reduction agrees with the all-pairs mode") {
  for (auto [m, n, ell] : {std::tuple{1, 8, 3}, {1, 12, 3}, {2, 6, 0}, {2, 8, 2}, {2, 10, 4},
                           {3, 6, 3}, {3, 8, 1}, {2, 8, 4}}) {
    HtgGraph g = build_graph(validate(m, n, ell));
    DecisionReport full = decide_2sc(g);
    DecisionReport reduced = decide_2sc_base_vertex(g);
    CHECK(full.is_2sc == reduced.is_2sc);
    CHECK(full.witness_count == reduced.witness_count);
    CHECK(full.separable == reduced.separable);
    CHECK(full.counterexample == reduced.counterexample);
  }
}

TEST_CASE("decide_2sc agrees with decide_pair on every pair") {
  HtgGraph g = build_graph(validate(2, 8, 2));
  DecisionReport r = decide_2sc(g);
  for (int a = 0; a < g.order(); ++a)
    for (int b = a + 1; b < g.order(); ++b)
      CHECK(r.pair_separable(g, g.vertex(a), g.vertex(b)) ==
            decide_pair(g, g.vertex(a), g.vertex(b)).separable);
}

TEST_CASE("survey tables") {
  SurveyTable three = survey(3, 1, 4, 20);
  std::set<int> yes;
  for (const SurveyRow& row : three.rows)
    if (row.status == SurveyStatus::Yes) yes.insert(row.n);
  CHECK(yes == std::set<int>{8, 12, 16, 20});
  // n = 4 with ell = 3 is the multigraph case and must appear as invalid
  CHECK(three.rows.front().n == 4);
  CHECK(three.rows.front().status == SurveyStatus::Invalid);

  SurveyTable four = survey(4, 2, 6, 14);
  std::set<int> no;
  for (const SurveyRow& row : four.rows)
    if (row.status == SurveyStatus::No) no.insert(row.n);
  CHECK(no == std::set<int>{6, 10});

  std::string text = survey_to_text(four);
  CHECK(text == survey_to_text(survey(4, 2, 6, 14)));
  std::string csv = survey_to_csv(four);
  CHECK(csv.find("n,order,status") == 0);
}
