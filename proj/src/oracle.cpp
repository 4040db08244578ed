#include <htg/oracle.hpp>

#include <algorithm>
#include <array>
#include <bit>
#include <sstream>
#include <thread>

#include <json.hpp>

#include <htg/symmetry.hpp>

namespace htg {

namespace {

struct Incidence {
  // per vertex: three (neighbor, edge id) pairs, neighbors ascending
  std::vector<std::array<std::pair<int, int>, 3>> at;

  explicit Incidence(const HtgGraph& g) {
    at.assign(g.order(), {});
    std::vector<int> deg(g.order(), 0);
    for (int eid = 0; eid < g.size(); ++eid) {
      const Edge& e = g.edges[eid];
      int ia = g.index(e.a), ib = g.index(e.b);
      at[ia][deg[ia]++] = {ib, eid};
      at[ib][deg[ib]++] = {ia, eid};
    }
    for (auto& row : at) std::sort(row.begin(), row.end());
  }
};

void check_cap(const HtgGraph& g, int cap) {
  if (cap > 64) cap = 64;  // covered-set is a 64-bit mask
  if (g.order() > cap)
    fail(ErrorKind::TooLarge, format_params(g.params) + " has order " +
                                  std::to_string(g.order()) + ", oracle cap is " +
                                  std::to_string(cap));
}

// Enumerates perfect matchings as sorted edge-id lists.  Branches on the
// least-index uncovered vertex; an uncovered vertex with no uncovered
// neighbor prunes the subtree when it becomes least.  Returns false if the
// visitor asked to stop.
bool enumerate_matchings(const Incidence& inc, int order, uint64_t covered,
                         std::vector<int>& matched,
                         const std::function<bool(const std::vector<int>&)>& visit) {
  const uint64_t full = order == 64 ? ~0ull : (1ull << order) - 1;
  if (covered == full) return visit(matched);
  int v = std::countr_one(covered);
  for (const auto& [w, eid] : inc.at[v]) {
    if (covered & (1ull << w)) continue;
    matched.push_back(eid);
    if (!enumerate_matchings(inc, order, covered | (1ull << v) | (1ull << w), matched, visit))
      return false;
    matched.pop_back();
  }
  return true;
}

TwoFactor complement_factor(const HtgGraph& g, const std::vector<int>& matched) {
  std::vector<bool> in_matching(g.size(), false);
  for (int eid : matched) in_matching[eid] = true;
  std::vector<Edge> edges;
  edges.reserve(g.size() - matched.size());
  for (int eid = 0; eid < g.size(); ++eid)
    if (!in_matching[eid]) edges.push_back(g.edges[eid]);
  return verify_factor(g, edges);
}

struct Accumulator {
  std::vector<uint64_t> pair_bits;
  long long two_cycle_factors = 0;
  long long total_factors = 0;

  explicit Accumulator(int order) : pair_bits((order * order + 63) / 64, 0) {}

  void absorb(const TwoFactor& f, int order) {
    ++total_factors;
    if (f.cycle_count() != 2) return;
    ++two_cycle_factors;
    for (int a : f.cycles[0]) {
      for (int b : f.cycles[1]) {
        int p = a * order + b;
        int q = b * order + a;
        pair_bits[p >> 6] |= 1ull << (p & 63);
        pair_bits[q >> 6] |= 1ull << (q & 63);
      }
    }
  }

  void merge(const Accumulator& other) {
    for (size_t i = 0; i < pair_bits.size(); ++i) pair_bits[i] |= other.pair_bits[i];
    two_cycle_factors += other.two_cycle_factors;
    total_factors += other.total_factors;
  }
};

}  // namespace

void for_each_two_factor(const HtgGraph& graph, const std::function<void(const TwoFactor&)>& fn,
                         int cap) {
  check_cap(graph, cap);
  Incidence inc(graph);
  std::vector<int> matched;
  enumerate_matchings(inc, graph.order(), 0, matched, [&](const std::vector<int>& pm) {
    fn(complement_factor(graph, pm));
    return true;
  });
}

std::vector<TwoFactor> enumerate_two_factors(const HtgGraph& graph, int cap) {
  std::vector<TwoFactor> out;
  for_each_two_factor(graph, [&](const TwoFactor& f) { out.push_back(f); }, cap);
  return out;
}

long long count_perfect_matchings(const HtgGraph& graph, int cap) {
  check_cap(graph, cap);
  Incidence inc(graph);
  long long count = 0;
  std::vector<int> matched;
  enumerate_matchings(inc, graph.order(), 0, matched, [&](const std::vector<int>&) {
    ++count;
    return true;
  });
  return count;
}

PairDecision decide_pair(const HtgGraph& graph, Vertex x, Vertex y, int cap) {
  if (x == y) fail(ErrorKind::SameVertex, "decide_pair requires two distinct vertices");
  check_cap(graph, cap);
  Incidence inc(graph);
  PairDecision result;
  std::vector<int> matched;
  enumerate_matchings(inc, graph.order(), 0, matched, [&](const std::vector<int>& pm) {
    TwoFactor f = complement_factor(graph, pm);
    if (separates(f, x, y)) {
      result.separable = true;
      result.witness = std::move(f);
      return false;  // canonical witness: first in enumeration order
    }
    return true;
  });
  return result;
}

DecisionReport decide_2sc(const HtgGraph& graph, int cap, int jobs) {
  check_cap(graph, cap);
  const int order = graph.order();
  Incidence inc(graph);
  Accumulator acc(order);

  if (jobs <= 1) {
    std::vector<int> matched;
    enumerate_matchings(inc, order, 0, matched, [&](const std::vector<int>& pm) {
      acc.absorb(complement_factor(graph, pm), order);
      return true;
    });
  } else {
    // Split on vertex 0's three branches; merging is commutative, so the
    // report does not depend on the schedule.
    std::vector<Accumulator> parts;
    std::vector<std::pair<uint64_t, std::vector<int>>> seeds;
    for (const auto& [w, eid] : inc.at[0]) {
      seeds.emplace_back((1ull << 0) | (1ull << w), std::vector<int>{eid});
      parts.emplace_back(order);
    }
    std::vector<std::thread> workers;
    for (size_t s = 0; s < seeds.size(); ++s) {
      workers.emplace_back([&, s]() {
        auto [covered, matched] = seeds[s];
        enumerate_matchings(inc, order, covered, matched, [&](const std::vector<int>& pm) {
          parts[s].absorb(complement_factor(graph, pm), order);
          return true;
        });
      });
    }
    for (auto& t : workers) t.join();
    for (const auto& part : parts) acc.merge(part);
  }

  DecisionReport report;
  report.params = graph.params;
  report.pairs_checked = order * (order - 1) / 2;
  report.witness_count = acc.two_cycle_factors;
  report.separable.assign(order * order, false);
  report.is_2sc = true;
  for (int p = 0; p < order; ++p) {
    for (int q = p + 1; q < order; ++q) {
      bool sep = (acc.pair_bits[(p * order + q) >> 6] >> ((p * order + q) & 63)) & 1;
      report.separable[p * order + q] = sep;
      report.separable[q * order + p] = sep;
      if (!sep && report.is_2sc) {
        report.is_2sc = false;
        report.counterexample = {graph.vertex(p), graph.vertex(q)};
      }
    }
  }
  return report;
}

DecisionReport decide_2sc_base_vertex(const HtgGraph& graph, int cap) {
  check_cap(graph, cap);
  const int order = graph.order();
  const HtgParams& params = graph.params;
  const int base_even = graph.index({0, 0});
  const int base_odd = graph.index({0, 1});

  Incidence inc(graph);
  std::vector<bool> row_even(order, false), row_odd(order, false);
  long long two_cycle = 0;
  std::vector<int> matched;
  enumerate_matchings(inc, order, 0, matched, [&](const std::vector<int>& pm) {
    TwoFactor f = complement_factor(graph, pm);
    if (f.cycle_count() != 2) return true;
    ++two_cycle;
    for (int v = 0; v < order; ++v) {
      if (f.cycle_of[v] != f.cycle_of[base_even]) row_even[v] = true;
      if (f.cycle_of[v] != f.cycle_of[base_odd]) row_odd[v] = true;
    }
    return true;
  });

  DecisionReport report;
  report.params = params;
  report.pairs_checked = order * (order - 1) / 2;
  report.witness_count = two_cycle;
  report.separable.assign(order * order, false);
  report.is_2sc = true;
  for (int p = 0; p < order; ++p) {
    for (int q = p + 1; q < order; ++q) {
      Vertex x = graph.vertex(p), y = graph.vertex(q);
      bool sep;
      if ((x.i + x.j) % 2 == 0) {
        GroupElement g = *transporter(params, x, {0, 0});
        sep = row_even[graph.index(apply(params, g, y))];
      } else if ((y.i + y.j) % 2 == 0) {
        GroupElement g = *transporter(params, y, {0, 0});
        sep = row_even[graph.index(apply(params, g, x))];
      } else {
        GroupElement g = *transporter(params, x, {0, 1});
        sep = row_odd[graph.index(apply(params, g, y))];
      }
      report.separable[p * order + q] = sep;
      report.separable[q * order + p] = sep;
      if (!sep && report.is_2sc) {
        report.is_2sc = false;
        report.counterexample = {x, y};
      }
    }
  }
  return report;
}

std::string report_to_json(const DecisionReport& report) {
  nlohmann::json doc{
      {"params",
       {{"m", report.params.m}, {"n", report.params.n}, {"ell", report.params.ell}}},
      {"is_2sc", report.is_2sc},
      {"pairs_checked", report.pairs_checked},
      {"witness_count", report.witness_count}};
  if (report.counterexample) {
    doc["counterexample"] = nlohmann::json::array(
        {{report.counterexample->first.i, report.counterexample->first.j},
         {report.counterexample->second.i, report.counterexample->second.j}});
  } else {
    doc["counterexample"] = nullptr;
  }
  return doc.dump(2) + "\n";
}

SurveyTable survey(int ell, int m, int n_lo, int n_hi, int cap, int jobs) {
  SurveyTable table;
  table.ell = ell;
  table.m = m;
  for (int n = n_lo; n <= n_hi; ++n) {
    if (n % 2 != 0) continue;
    SurveyRow row;
    row.n = n;
    row.order = m * n;
    try {
      HtgParams params = validate(m, n, ell);
      HtgGraph graph = build_graph(params);
      DecisionReport report = decide_2sc(graph, cap, jobs);
      row.status = report.is_2sc ? SurveyStatus::Yes : SurveyStatus::No;
      row.counterexample = report.counterexample;
      row.witness_count = report.witness_count;
    } catch (const Error& err) {
      row.status = err.kind() == ErrorKind::TooLarge ? SurveyStatus::TooLarge
                                                     : SurveyStatus::Invalid;
      row.note = err.what();
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

namespace {

const char* status_name(SurveyStatus s) {
  switch (s) {
    case SurveyStatus::Yes: return "yes";
    case SurveyStatus::No: return "no";
    case SurveyStatus::Invalid: return "invalid";
    case SurveyStatus::TooLarge: return "too-large";
  }
  return "?";
}

std::string counterexample_text(const SurveyRow& row) {
  if (!row.counterexample) return "-";
  return format_vertex(row.counterexample->first) + "," +
         format_vertex(row.counterexample->second);
}

}  // namespace

std::string survey_to_text(const SurveyTable& table) {
  std::ostringstream out;
  out << "2-spanning cyclability of HTG(" << table.m << ", n, " << table.ell << ")\n";
  out << "   n  order  2sc        counterexample          two-cycle factors\n";
  for (const SurveyRow& row : table.rows) {
    char line[128];
    std::snprintf(line, sizeof(line), "%4d  %5d  %-9s  %-22s  %lld\n", row.n, row.order,
                  status_name(row.status), counterexample_text(row).c_str(),
                  row.witness_count);
    out << line;
  }
  return out.str();
}

std::string survey_to_csv(const SurveyTable& table) {
  std::ostringstream out;
  out << "n,order,status,counterexample,two_cycle_factors\n";
  for (const SurveyRow& row : table.rows) {
    out << row.n << ',' << row.order << ',' << status_name(row.status) << ',';
    if (row.counterexample)
      out << '"' << counterexample_text(row) << '"';
    out << ',' << row.witness_count << '\n';
  }
  return out.str();
}

}  // namespace htg
