#include <htg/cli.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include <htg/certificate.hpp>
#include <htg/constructions.hpp>
#include <htg/dot.hpp>
#include <htg/oracle.hpp>

namespace htg {

namespace {

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::TooLarge:
      return 4;
    case ErrorKind::MismatchedFactor:
    case ErrorKind::NotSpanning:
    case ErrorKind::SchemaError:
    case ErrorKind::VerificationFailed:
    case ErrorKind::InternalVerificationFailed:
      return 3;
    default:
      return 2;
  }
}

Vertex parse_vertex(const std::string& text) {
  int i = 0, j = 0;
  char comma = 0;
  std::istringstream in(text);
  if (!(in >> i >> comma >> j) || comma != ',' || !in.eof())
    throw CLI::ValidationError("pair", "expected i,j with 0-based indices, got '" + text + "'");
  return Vertex{i, j};
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorKind::SchemaError, "cannot open " + path + " for writing");
  out << content;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::SchemaError, "cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string graph_summary(const HtgGraph& g) {
  int vertical = 0, flat = 0, jump = 0;
  for (const Edge& e : g.edges) {
    if (e.kind == EdgeKind::Vertical) ++vertical;
    if (e.kind == EdgeKind::Flat) ++flat;
    if (e.kind == EdgeKind::Jump) ++jump;
  }
  std::ostringstream out;
  out << format_params(g.params) << ": " << g.order() << " vertices, " << g.size()
      << " edges (" << vertical << " vertical, " << flat << " flat, " << jump << " jump)\n";
  return out.str();
}

std::string graph_json(const HtgGraph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (const Edge& e : g.edges)
    edges.push_back({{e.a.i, e.a.j}, {e.b.i, e.b.j}});
  nlohmann::json doc{
      {"params", {{"m", g.params.m}, {"n", g.params.n}, {"ell", g.params.ell}}},
      {"order", g.order()},
      {"size", g.size()},
      {"edges", edges}};
  return doc.dump(2) + "\n";
}

struct ParamFlags {
  int m = 0, n = 0, ell = 0;

  void attach(CLI::App* cmd) {
    cmd->add_option("-m", m, "column count")->required();
    cmd->add_option("-n", n, "column length (even, >= 4)")->required();
    cmd->add_option("-l,--ell", ell, "jump offset")->required();
  }
  HtgParams validated() const { return validate(m, n, ell); }
};

}  // namespace

int run_cli(const std::vector<std::string>& args) {
  CLI::App app{"honeycomb toroidal graphs: construction, 2-factor certificates, exact "
               "2-spanning-cyclability decisions"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "construct HTG(m,n,ell) and print it");
  ParamFlags gen_params;
  gen_params.attach(gen);
  bool gen_dot = false, gen_json = false;
  gen->add_flag("--dot", gen_dot, "emit Graphviz text");
  gen->add_flag("--json", gen_json, "emit JSON");
  std::string gen_out;
  gen->add_option("-o,--output", gen_out, "output file (default stdout)");

  // construct
  auto* construct = app.add_subcommand("construct", "emit a separation certificate for a pair");
  ParamFlags con_params;
  con_params.attach(construct);
  std::vector<std::string> con_pair;
  construct->add_option("--pair", con_pair, "the two vertices, each as i,j")
      ->expected(2)
      ->required();
  std::string con_theorem = "auto";
  construct->add_option("--theorem", con_theorem,
                        "auto|O3|alpha|zero|beta|L1|L3|oddgen|L0|L2|evengen");
  std::string con_out;
  construct->add_option("-o,--output", con_out, "output file (default stdout)");
  int con_cap = kDefaultOracleCap;
  construct->add_option("--max-order", con_cap, "oracle fallback cap (vertices)");

  // verify
  auto* verify = app.add_subcommand("verify", "check a certificate file");
  std::string verify_file;
  verify->add_option("file", verify_file, "certificate JSON")->required();

  // decide
  auto* decide = app.add_subcommand("decide", "exact oracle decision");
  ParamFlags dec_params;
  dec_params.attach(decide);
  std::vector<std::string> dec_pair;
  decide->add_option("--pair", dec_pair, "decide one pair instead of all")->expected(2);
  int dec_cap = kDefaultOracleCap;
  decide->add_option("--max-order", dec_cap, "size cap (vertices, <= 64)");
  int dec_jobs = 1;
  decide->add_option("--jobs", dec_jobs, "worker threads for the all-pairs decision");
  bool dec_json = false;
  decide->add_flag("--json", dec_json, "emit the report as JSON");

  // survey
  auto* survey_cmd = app.add_subcommand("survey", "classify a range of n");
  int survey_ell = 0, survey_m = 0;
  survey_cmd->add_option("--ell", survey_ell, "jump offset")->required();
  survey_cmd->add_option("--m", survey_m, "column count")->required();
  std::string survey_range;
  survey_cmd->add_option("--n-range", survey_range, "inclusive range A..B")->required();
  bool survey_csv = false;
  survey_cmd->add_flag("--csv", survey_csv, "emit CSV instead of the aligned table");
  int survey_cap = kDefaultOracleCap;
  survey_cmd->add_option("--max-order", survey_cap, "size cap (vertices, <= 64)");
  int survey_jobs = 1;
  survey_cmd->add_option("--jobs", survey_jobs, "worker threads");

  // export-dot
  auto* exp = app.add_subcommand("export-dot", "render the graph, optionally with a factor");
  ParamFlags exp_params;
  exp_params.attach(exp);
  std::string exp_factor, exp_out;
  exp->add_option("--factor", exp_factor, "certificate JSON whose factor gets highlighted");
  exp->add_option("-o,--output", exp_out, "output file (default stdout)");

  std::vector<char*> argv;
  std::vector<std::string> storage = args;
  std::string program = "htg";
  argv.push_back(program.data());
  for (auto& arg : storage) argv.push_back(arg.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& help) {
    std::cout << app.help();
    return 0;
  } catch (const CLI::ParseError& err) {
    std::cerr << err.what() << "\n";
    return 1;
  }

  try {
    if (gen->parsed()) {
      HtgGraph g = build_graph(gen_params.validated());
      if (gen_dot)
        write_output(gen_out, export_dot(g));
      else if (gen_json)
        write_output(gen_out, graph_json(g));
      else
        write_output(gen_out, graph_summary(g));
      return 0;
    }

    if (construct->parsed()) {
      auto id = theorem_from_name(con_theorem);
      if (!id) {
        std::cerr << "unknown theorem '" << con_theorem << "'\n";
        return 1;
      }
      HtgParams params = con_params.validated();
      Vertex x = parse_vertex(con_pair[0]);
      Vertex y = parse_vertex(con_pair[1]);
      try {
        SeparationCertificate cert = separate(params, x, y, *id, con_cap);
        write_output(con_out, encode_certificate(cert));
        return 0;
      } catch (const Error& err) {
        if (err.kind() == ErrorKind::Unsupported || err.kind() == ErrorKind::NoDecomposition) {
          std::cout << err.what() << "\n";
          return 2;
        }
        throw;
      }
    }

    if (verify->parsed()) {
      SeparationCertificate cert = decode_certificate(read_file(verify_file));
      std::cout << "valid certificate: " << format_params(cert.params) << " separates "
                << format_vertex(cert.pair.first) << " and " << format_vertex(cert.pair.second)
                << " (" << cert.provenance << ")\n";
      return 0;
    }

    if (decide->parsed()) {
      HtgGraph g = build_graph(dec_params.validated());
      if (!dec_pair.empty()) {
        Vertex x = parse_vertex(dec_pair[0]);
        Vertex y = parse_vertex(dec_pair[1]);
        if (!g.contains(x) || !g.contains(y))
          fail(ErrorKind::OutOfRange, "pair vertex out of range for " + format_params(g.params));
        PairDecision d = decide_pair(g, x, y, dec_cap);
        std::cout << "pair " << format_vertex(x) << "," << format_vertex(y) << ": "
                  << (d.separable ? "separable" : "not separable") << "\n";
        return 0;
      }
      DecisionReport report = decide_2sc(g, dec_cap, dec_jobs);
      if (dec_json) {
        std::cout << report_to_json(report);
      } else {
        std::cout << format_params(report.params) << ": "
                  << (report.is_2sc ? "2-spanning cyclable" : "not 2-spanning cyclable") << " ("
                  << report.witness_count << " two-cycle 2-factors, " << report.pairs_checked
                  << " pairs)\n";
        if (report.counterexample)
          std::cout << "first non-separable pair: " << format_vertex(report.counterexample->first)
                    << "," << format_vertex(report.counterexample->second) << "\n";
      }
      return 0;
    }

    if (survey_cmd->parsed()) {
      auto sep = survey_range.find("..");
      if (sep == std::string::npos) {
        std::cerr << "expected --n-range A..B\n";
        return 1;
      }
      int lo = std::stoi(survey_range.substr(0, sep));
      int hi = std::stoi(survey_range.substr(sep + 2));
      SurveyTable table = survey(survey_ell, survey_m, lo, hi, survey_cap, survey_jobs);
      std::cout << (survey_csv ? survey_to_csv(table) : survey_to_text(table));
      return 0;
    }

    if (exp->parsed()) {
      HtgGraph g = build_graph(exp_params.validated());
      if (exp_factor.empty()) {
        write_output(exp_out, export_dot(g));
      } else {
        SeparationCertificate cert = decode_certificate(read_file(exp_factor));
        write_output(exp_out, export_dot(g, &cert.factor));
      }
      return 0;
    }
  } catch (const Error& err) {
    std::cerr << err.what() << "\n";
    return exit_code_for(err.kind());
  } catch (const std::exception& err) {
    std::cerr << err.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace htg
