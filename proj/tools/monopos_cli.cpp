#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "monopos/errors.hpp"
#include "monopos/families.hpp"
#include "monopos/graph_io.hpp"
#include "monopos/harness.hpp"
#include "monopos/mono_paths.hpp"
#include "monopos/position.hpp"
#include "monopos/reduction.hpp"
#include "monopos/version.hpp"

using namespace monopos;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kChecksFailed = 1, kBadInput = 2, kCap = 3, kInternal = 4 };

struct Common {
  std::string input;
  std::string spec;
  std::string format = "text";
  int cap = kMaxVertices;
};

void add_graph_source(CLI::App* sub, Common& c) {
  sub->add_option("input", c.input, "graph file (graph6 or edge list), '-' for stdin");
  sub->add_option("--family", c.spec, "generate the graph from a family spec instead");
  sub->add_option("--cap", c.cap, "largest accepted order")->check(CLI::Range(1, kMaxVertices));
}

void add_format(CLI::App* sub, Common& c) {
  sub->add_option("--format", c.format, "output format")->check(CLI::IsMember({"json", "text"}));
}

Graph load_graph(const Common& c) {
  if (c.input.empty() == c.spec.empty()) throw DomainError("give exactly one of an input file or --family");
  Graph g(0);
  if (!c.spec.empty()) {
    g = generate(c.spec);
  } else if (c.input == "-") {
    std::string text(std::istreambuf_iterator<char>(std::cin), {});
    const auto first = text.find_first_not_of(" \t\r\n");
    const auto eol = text.find('\n', first);
    const std::string line = first == std::string::npos ? "" : text.substr(first, eol - first);
    g = line.find(' ') != std::string::npos || line.starts_with("#") ? parse_edge_list(text) : parse_graph6(line);
  } else {
    g = read_graph_file(c.input);
  }
  if (g.order() > c.cap) {
    throw CapExceeded("graph has " + std::to_string(g.order()) + " vertices, cap is " + std::to_string(c.cap));
  }
  return g;
}

std::string graph_id(const Common& c) { return c.spec.empty() ? c.input : c.spec; }

json to_json(const ParameterReport& r) {
  json j{{"graph", r.graph_id},  {"parameter", r.parameter}, {"value", r.value},     {"witness", r.witness.to_vector()},
         {"method", to_string(r.method)}, {"expansions", r.expansions}, {"ms", r.ms}};
  if (!r.skipped.empty()) j["skipped"] = r.skipped;
  return j;
}

std::string to_text(const ParameterReport& r) {
  if (!r.skipped.empty()) return r.parameter + " = ? (skipped: " + r.skipped + ")";
  return r.parameter + " = " + std::to_string(r.value) + "  " + r.witness.to_string();
}

void print_reports(const std::vector<ParameterReport>& reports, const std::string& format) {
  if (format == "json") {
    json arr = json::array();
    for (const auto& r : reports) arr.push_back(to_json(r));
    std::cout << (arr.size() == 1 ? arr[0] : arr).dump(2) << "\n";
    return;
  }
  for (const auto& r : reports) std::cout << to_text(r) << "\n";
}

json predictions_json(const std::vector<PredictedValue>& preds) {
  json j = json::array();
  for (const auto& p : preds) {
    j.push_back({{"parameter", p.parameter}, {"value", p.value}, {"rule", p.rule}, {"applicability", p.applicability}});
  }
  return j;
}

std::vector<Vertex> parse_vertices(const std::string& text, int n) {
  std::vector<Vertex> out;
  std::stringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    std::size_t used = 0;
    int v = -1;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size() || v < 0 || v >= n) throw DomainError("bad vertex '" + tok + "' for a graph of order " + std::to_string(n));
    out.push_back(v);
  }
  if (out.empty()) throw DomainError("empty vertex list");
  return out;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw DomainError("cannot write " + path);
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"monophonic position toolkit"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  // compute
  Common compute;
  std::vector<std::string> params;
  std::string mode_text;
  bool independent = false;
  std::uint64_t node_limit = kDefaultNodeLimit;
  auto* c_compute = app.add_subcommand("compute", "exact parameters with witnesses");
  add_graph_source(c_compute, compute);
  add_format(c_compute, compute);
  c_compute->add_option("--param", params, "parameter names (default: all)");
  c_compute->add_option("--mode", mode_text, "position number in this path mode")->check(CLI::IsMember({"mono", "geo", "geo2"}));
  c_compute->add_flag("--independent", independent, "require the position set to be independent (with --mode)");
  c_compute->add_option("--node-limit", node_limit, "branch and bound node budget");

  // family
  std::string family_spec;
  std::optional<std::uint64_t> family_seed;
  std::string family_out;
  std::string family_format = "text";
  auto* c_family = app.add_subcommand("family", "generate a family member with its predicted values");
  c_family->add_option("spec", family_spec, "family spec, e.g. half_wheel:4 or random_tree:12:seed=3")->required();
  c_family->add_option("--seed", family_seed, "seed for random families");
  c_family->add_option("--out", family_out, "write PREFIX.g6 and PREFIX.json instead of stdout");
  c_family->add_option("--format", family_format, "stdout format")->check(CLI::IsMember({"json", "text"}));

  // verify
  std::vector<std::string> checks;
  std::vector<std::uint64_t> seeds;
  std::string verify_format = "text";
  std::string verify_out;
  int threads = 0;
  bool no_timing = false;
  bool list = false;
  auto* c_verify = app.add_subcommand("verify", "run the check suite");
  c_verify->add_option("--check", checks, "check ids (default: all)");
  c_verify->add_option("--seed", seeds, "corpus seeds (default: 1)");
  c_verify->add_option("--threads", threads, "worker threads (0: hardware)")->check(CLI::NonNegativeNumber);
  c_verify->add_option("--format", verify_format, "output format")->check(CLI::IsMember({"json", "text"}));
  c_verify->add_option("--out", verify_out, "also write the JSON report here");
  c_verify->add_flag("--no-timing", no_timing, "drop timing fields from JSON");
  c_verify->add_flag("--list", list, "print the check manifest and exit");

  // reduce
  Common reduce;
  int k = 0;
  bool reduce_verify = true;
  auto* c_reduce = app.add_subcommand("reduce", "map a clique instance (G, k) to a position instance");
  add_graph_source(c_reduce, reduce);
  add_format(c_reduce, reduce);
  reduce.format = "json";
  c_reduce->add_option("--k", k, "clique size")->required();
  c_reduce->add_flag("!--no-verify", reduce_verify, "skip solving both sides");

  // oracle
  Common oracle;
  std::string oracle_mode = "mono";
  bool oracle_independent = false;
  auto* c_oracle = app.add_subcommand("oracle", "position number by subset enumeration (small graphs)");
  add_graph_source(c_oracle, oracle);
  add_format(c_oracle, oracle);
  c_oracle->add_option("--mode", oracle_mode, "path mode")->check(CLI::IsMember({"mono", "geo", "geo2"}));
  c_oracle->add_flag("--independent", oracle_independent, "require independence");

  // paths
  Common paths;
  std::string interval;
  std::string hull;
  auto* c_paths = app.add_subcommand("paths", "monophonic intervals and hulls");
  add_graph_source(c_paths, paths);
  add_format(c_paths, paths);
  c_paths->add_option("--interval", interval, "u,v: print K[u,v]");
  c_paths->add_option("--hull", hull, "comma-separated set: print its closure and hull");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kBadInput;
  }

  try {
    if (c_compute->parsed()) {
      Graph g = load_graph(compute);
      std::vector<ParameterReport> out;
      if (!mode_text.empty()) {
        SolverOptions opts;
        opts.require_independent = independent;
        opts.node_limit = node_limit;
        auto r = position_number(g, parse_path_mode(mode_text), opts);
        r.graph_id = graph_id(compute);
        out.push_back(r);
      }
      for (const auto& p : params) out.push_back(compute_parameter(g, p, graph_id(compute)));
      if (mode_text.empty() && params.empty()) out = parameter_suite(g, graph_id(compute));
      print_reports(out, compute.format);
      return kOk;
    }

    if (c_family->parsed()) {
      FamilySpec spec = parse_family_spec(family_spec);
      if (family_seed) spec.seed = family_seed;
      Generated gen = generate(spec);
      const std::string g6 = emit_graph6(gen.graph);
      json meta{{"spec", gen.spec.to_string()},
                {"family", to_string(gen.spec.family)},
                {"order", gen.graph.order()},
                {"size", gen.graph.size()},
                {"graph6", g6},
                {"predictions", predictions_json(predictions_for(gen))},
                {"version", kVersion}};
      if (!family_out.empty()) {
        write_file(family_out + ".g6", g6 + "\n");
        write_file(family_out + ".json", meta.dump(2) + "\n");
      } else if (family_format == "json") {
        std::cout << meta.dump(2) << "\n";
      } else {
        std::cout << g6 << "\n";
        for (const auto& p : predictions_for(gen)) std::cerr << p.parameter << " = " << p.value << "  (" << p.rule << ")\n";
      }
      return kOk;
    }

    if (c_verify->parsed()) {
      if (list) {
        for (const auto& info : check_manifest()) {
          std::cout << info.id << "  [" << to_string(info.kind) << "]  " << info.description << "\n";
        }
        return kOk;
      }
      SuiteOptions opts;
      if (!seeds.empty()) opts.seeds = seeds;
      opts.threads = threads;
      RunReport report = run_suite(checks, opts);
      if (!verify_out.empty()) write_file(verify_out, report_json(report, !no_timing));
      std::cout << (verify_format == "json" ? report_json(report, !no_timing) : report_text(report));
      return report.failed > 0 ? kChecksFailed : kOk;
    }

    if (c_reduce->parsed()) {
      Graph g = load_graph(reduce);
      if (g.order() > kReductionCap && reduce_verify) {
        throw CapExceeded("verification needs n <= " + std::to_string(kReductionCap) + "; pass --no-verify");
      }
      auto inst = reduce_clique_to_mp(g, k);
      json j{{"source", emit_graph6(inst.source)},
             {"k", inst.k},
             {"product", emit_graph6(inst.product)},
             {"k_prime", inst.k_prime}};
      if (reduce_verify) {
        auto v = verify_reduction(inst);
        j["verification"] = {{"omega_source", v.omega_source}, {"omega_product", v.omega_product},
                             {"mp_product", v.mp_product},     {"mp_witness", v.mp_witness.to_vector()},
                             {"clique_yes", v.clique_yes},     {"mp_yes", v.mp_yes},
                             {"mp_identity", v.mp_identity},   {"omega_identity", v.omega_identity},
                             {"answers_agree", v.answers_agree}, {"ok", v.ok()}};
      }
      if (reduce.format == "json") {
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << j["product"].get<std::string>() << "\nk' = " << inst.k_prime << "\n";
        if (reduce_verify) std::cout << (j["verification"]["ok"].get<bool>() ? "verified" : "MISMATCH") << "\n";
      }
      return kOk;
    }

    if (c_oracle->parsed()) {
      Graph g = load_graph(oracle);
      SolverOptions opts;
      opts.require_independent = oracle_independent;
      auto r = brute_force_position(g, parse_path_mode(oracle_mode), opts);
      r.graph_id = graph_id(oracle);
      print_reports({r}, oracle.format);
      return kOk;
    }

    if (c_paths->parsed()) {
      Graph g = load_graph(paths);
      if (interval.empty() == hull.empty()) throw DomainError("give exactly one of --interval or --hull");
      json j;
      if (!interval.empty()) {
        auto uv = parse_vertices(interval, g.order());
        if (uv.size() != 2) throw DomainError("--interval takes two vertices");
        j = {{"u", uv[0]}, {"v", uv[1]}, {"interval", monophonic_interval(g, uv[0], uv[1]).to_vector()}};
      } else {
        auto members = parse_vertices(hull, g.order());
        VertexSet m(g.order());
        for (Vertex v : members) m.insert(v);
        auto h = monophonic_hull(g, m);
        j = {{"set", m.to_vector()},
             {"closure", monophonic_closure(g, m).to_vector()},
             {"hull", h.hull.to_vector()},
             {"iterations", h.iterations}};
      }
      if (paths.format == "json") {
        std::cout << j.dump(2) << "\n";
      } else {
        for (const auto& [key, val] : j.items()) std::cout << key << ": " << val.dump() << "\n";
      }
      return kOk;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kBadInput;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kBadInput;
  } catch (const CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return kCap;
  } catch (const LimitExceeded& e) {
    std::cerr << "limit exceeded: " << e.what() << "\n";
    return kCap;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kInternal;
}
