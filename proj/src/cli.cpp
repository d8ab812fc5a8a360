#include "pathideal/cli.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "pathideal/classify.hpp"
#include "pathideal/error.hpp"
#include "pathideal/rng.hpp"
#include "pathideal/serialize.hpp"

namespace pathideal {

// ------------------------------------------------------------------- fuzz

FuzzReport run_fuzz(const FuzzConfig& config) {
  if (config.count == 0) throw Error(ErrorCode::InvalidArgument, "--count must be at least 1");
  if (config.min_vertices > config.max_vertices || config.min_n > config.max_n) {
    throw Error(ErrorCode::InvalidArgument, "empty vertex or n range");
  }
  if (config.min_vertices < 2) throw Error(ErrorCode::InvalidArgument, "trees need 2+ vertices");
  const std::size_t lowest_n = config.legacy_n23 ? 2 : 4;
  if (config.min_n < lowest_n) {
    throw Error(ErrorCode::NUnsupported, "fuzzing needs n >= " + std::to_string(lowest_n));
  }

  struct Job {
    std::size_t vertices, n, index;
    std::uint64_t seed;
  };
  struct Outcome {
    std::string tally;
    bool homology = false;
    std::optional<FuzzDisagreement> disagreement;
  };
  std::vector<Job> jobs;
  for (std::size_t v = config.min_vertices; v <= config.max_vertices; ++v) {
    for (std::size_t n = config.min_n; n <= config.max_n; ++n) {
      for (std::size_t i = 0; i < config.count; ++i) {
        jobs.push_back({v, n, i, derive_seed(config.seed, v, n, i)});
      }
    }
  }

  const auto start = std::chrono::steady_clock::now();
  std::vector<Outcome> outcomes(jobs.size());
  auto run_one = [&](const Job& job) {
    Outcome out;
    const Tree tree = random_tree(job.vertices, job.seed);
    auto fail = [&](const std::string& message) {
      out.tally = "disagreement";
      out.disagreement =
          FuzzDisagreement{job.vertices, job.n, job.index, job.seed,
                           format_edge_list(tree.graph()), message};
    };
    try {
      const auto result =
          classify_verified(tree, job.n, config.lq_cap, config.hom_cap, config.legacy_n23);
      out.tally = verdict_name(result.classification.verdict);
      out.homology = result.linear_resolution.has_value();
    } catch (const Error& e) {
      if (e.code() == ErrorCode::TooManyGenerators) {
        out.tally = "skipped_cap";
      } else {
        fail(e.what());
      }
    } catch (const std::exception& e) {
      fail(e.what());
    }
    return out;
  };

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) outcomes[i] = run_one(jobs[i]);
  };
  const std::size_t workers = std::max<std::size_t>(1, std::min(config.jobs, jobs.size()));
  std::vector<std::thread> pool;
  for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  FuzzReport report;
  report.instances = jobs.size();
  for (auto name : {"LinearQuotients", "NotLinearQuotients", "ZeroIdeal", "skipped_cap",
                    "homology_checked", "disagreement"}) {
    report.tallies[name] = 0;
  }
  for (auto& o : outcomes) {
    ++report.tallies[o.tally];
    if (o.homology) ++report.tallies["homology_checked"];
    if (o.disagreement) report.disagreements.push_back(std::move(*o.disagreement));
  }
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

namespace {

// ---------------------------------------------------------------- helpers

struct Options {
  std::string file;
  std::string family;
  std::string n;
  bool json = false;
  std::uint64_t seed = 42;
  std::size_t count = 100;
  std::string vertices = "6..9";
  std::size_t lq_cap = kDefaultLinearQuotientsCap;
  std::size_t hom_cap = kDefaultBettiGeneratorCap;
  std::size_t jobs = 0;
  bool legacy_n23 = false;
};

std::size_t parse_count(const std::string& text, const char* what) {
  std::size_t pos = 0;
  unsigned long long value = 0;
  try {
    value = std::stoull(text, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos == 0 || pos != text.size() || text.front() == '-') {
    throw Error(ErrorCode::InvalidArgument, std::string(what) + ": '" + text + "' is not a count");
  }
  return static_cast<std::size_t>(value);
}

std::pair<std::size_t, std::size_t> parse_range(const std::string& text, const char* what) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const auto v = parse_count(text, what);
    return {v, v};
  }
  return {parse_count(text.substr(0, dots), what), parse_count(text.substr(dots + 2), what)};
}

std::string read_input(const std::string& file) {
  if (file == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(file);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open '" + file + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

SimpleGraph load_graph(const Options& o) {
  if (o.file.empty() == o.family.empty()) {
    throw Error(ErrorCode::InvalidArgument, "give exactly one of FILE or --family");
  }
  if (!o.family.empty()) return make_family(parse_family_spec(o.family));
  return parse_graph(read_input(o.file));
}

Tree load_tree(const Options& o) {
  if (!o.family.empty() && o.file.empty()) return make_family_tree(parse_family_spec(o.family));
  if (!o.family.empty()) throw Error(ErrorCode::InvalidArgument, "give exactly one of FILE or --family");
  if (o.file.empty()) throw Error(ErrorCode::InvalidArgument, "give exactly one of FILE or --family");
  return parse_tree(read_input(o.file));
}

std::size_t require_n(const Options& o) {
  if (o.n.empty()) throw Error(ErrorCode::InvalidArgument, "--n is required");
  return parse_count(o.n, "--n");
}

std::string joined(const std::vector<Vertex>& vs, const std::vector<std::string>& labels) {
  std::string out;
  for (Vertex v : vs) {
    if (!out.empty()) out += ' ';
    out += labels.at(v);
  }
  return out;
}

std::string monomial_text(SquarefreeMonomial m, const std::vector<std::string>& labels) {
  std::string out;
  for (Vertex v : m.vertices()) out += labels.at(v);
  return out.empty() ? "1" : out;
}

void print_order(std::ostream& out, const QuotientOrder& q, const std::vector<std::string>& labels) {
  for (std::size_t i = 0; i < q.order.size(); ++i) {
    out << "  " << i + 1 << ". " << monomial_text(q.order[i], labels);
    if (i > 0) {
      std::string vars;
      for (Vertex v : q.certificates[i].vertices()) vars += (vars.empty() ? "" : ", ") + labels.at(v);
      out << "  colon: (" << vars << ")";
    }
    out << '\n';
  }
}

Classification run_classifier(const Tree& tree, std::size_t n, const Options& o) {
  if (n < 4 && o.legacy_n23) return classify_legacy_n23(tree, n, o.lq_cap);
  return classify(tree, n);
}

// --------------------------------------------------------------- commands

int cmd_classify(const Options& o, std::ostream& out) {
  const Tree tree = load_tree(o);
  const auto c = run_classifier(tree, require_n(o), o);
  const auto& labels = tree.labels();
  if (o.json) {
    out << to_json(c, labels).dump(2) << '\n';
  } else {
    out << "verdict: " << verdict_name(c.verdict) << (c.experimental ? " (experimental)" : "")
        << '\n';
    out << "n: " << c.n << '\n';
    out << "diameter: " << c.diameter << '\n';
    out << "criterion: " << c.criterion_clause << '\n';
    if (const auto* q = std::get_if<QuotientOrder>(&c.witness)) {
      if (!c.trimmed_vertices.empty()) {
        out << "trimmed vertices: " << joined(c.trimmed_vertices, labels) << '\n';
      }
      out << "order:\n";
      print_order(out, *q, labels);
    } else if (const auto* w = std::get_if<ForbiddenWitness>(&c.witness)) {
      out << "witness: " << format_family_spec(w->family()) << " on " << joined(w->vertices, labels)
          << '\n';
      for (const auto& [name, v] : w->mapping) out << "  " << name << " -> " << labels.at(v) << '\n';
    } else {
      const auto& b = std::get<DiameterBound>(c.witness);
      out << "witness: diameter " << b.diameter << " < n-1 = " << b.n - 1 << '\n';
    }
  }
  return c.verdict == Verdict::NotLinearQuotients ? kExitNotLinear : kExitOk;
}

int cmd_gens(const Options& o, std::ostream& out) {
  const auto ideal = path_ideal(load_graph(o), require_n(o));
  if (o.json) {
    out << to_json(ideal).dump() << '\n';
  } else {
    for (auto g : ideal.generators()) out << ideal.format(g) << '\n';
  }
  return kExitOk;
}

int cmd_trim(const Options& o, std::ostream& out) {
  const Tree tree = load_tree(o);
  const auto kept = trim_vertices(tree);
  const Tree trimmed(induced_subgraph(tree.graph(), kept));
  if (o.json) {
    Json j;
    j["vertices"] = trimmed.labels();
    Json edges = Json::array();
    for (auto [u, v] : trimmed.edges()) edges.push_back({trimmed.label(u), trimmed.label(v)});
    j["edges"] = std::move(edges);
    out << j.dump() << '\n';
  } else {
    out << "# vertices: " << joined(kept, tree.labels()) << '\n';
    out << format_edge_list(trimmed.graph());
  }
  return kExitOk;
}

int cmd_order(const Options& o, std::ostream& out, std::ostream& err) {
  const Tree tree = load_tree(o);
  const auto c = run_classifier(tree, require_n(o), o);
  if (c.verdict == Verdict::NotLinearQuotients) {
    err << "no linear-quotients order: " << c.criterion_clause << '\n';
    return kExitNotLinear;
  }
  QuotientOrder q;
  if (const auto* found = std::get_if<QuotientOrder>(&c.witness)) q = *found;
  if (o.json) {
    out << to_json(q, tree.labels()).dump() << '\n';
  } else {
    print_order(out, q, tree.labels());
  }
  return kExitOk;
}

int cmd_reg(const Options& o, std::ostream& out) {
  const auto ideal = path_ideal(load_graph(o), require_n(o));
  if (ideal.is_zero()) throw Error(ErrorCode::ZeroIdeal, "J_n is the zero ideal");
  const auto table = betti_table(ideal, o.hom_cap);
  if (o.json) {
    out << to_json(table).dump() << '\n';
  } else {
    out << "regularity: " << table.regularity() << '\n';
    for (const auto& [ij, count] : table.entries) {
      out << "beta_{" << ij.first << "," << ij.second << "} = " << count << '\n';
    }
  }
  return kExitOk;
}

int cmd_fuzz(const Options& o, std::ostream& out) {
  FuzzConfig config;
  std::tie(config.min_vertices, config.max_vertices) = parse_range(o.vertices, "--vertices");
  if (o.n.empty()) {
    config.min_n = 4;
    config.max_n = 6;
  } else {
    std::tie(config.min_n, config.max_n) = parse_range(o.n, "--n");
  }
  config.count = o.count;
  config.seed = o.seed;
  config.lq_cap = o.lq_cap;
  config.hom_cap = o.hom_cap;
  config.jobs = o.jobs != 0 ? o.jobs : std::max(1U, std::thread::hardware_concurrency());
  config.legacy_n23 = o.legacy_n23;
  const auto report = run_fuzz(config);

  if (o.json) {
    Json j;
    j["config"] = {{"vertices", {config.min_vertices, config.max_vertices}},
                   {"n", {config.min_n, config.max_n}},
                   {"count", config.count},
                   {"seed", config.seed},
                   {"lq_cap", config.lq_cap},
                   {"hom_cap", config.hom_cap}};
    j["instances"] = report.instances;
    j["tallies"] = report.tallies;
    Json list = Json::array();
    for (const auto& d : report.disagreements) {
      list.push_back({{"vertices", d.vertices}, {"n", d.n}, {"index", d.index}, {"seed", d.seed},
                      {"edges", d.edges}, {"message", d.message}});
    }
    j["disagreements"] = std::move(list);
    j["wall_time_seconds"] = report.wall_seconds;
    out << j.dump(2) << '\n';
  } else {
    out << "instances: " << report.instances << '\n';
    for (const auto& [name, count] : report.tallies) out << name << ": " << count << '\n';
    for (const auto& d : report.disagreements) {
      out << "DISAGREEMENT vertices=" << d.vertices << " n=" << d.n << " index=" << d.index
          << " seed=" << d.seed << "\n" << d.message << "\nedges:\n" << d.edges;
    }
    out << "wall time: " << report.wall_seconds << " s\n";
  }
  return report.disagreements.empty() ? kExitOk : kExitDisagreement;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Path ideals of trees: linear quotients with certificates", "pathideal"};
  app.require_subcommand(1);
  Options o;

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("FILE", o.file, "edge-list file ('-' for stdin)");
    sub->add_option("--family", o.family, "family spec, e.g. Lnk:5,3 or caterpillar:4,2,0,1");
    sub->add_flag("--json", o.json, "JSON output");
  };
  auto add_n = [&](CLI::App* sub) { sub->add_option("--n", o.n, "path size n"); };
  auto add_legacy = [&](CLI::App* sub) {
    sub->add_flag("--legacy-n23", o.legacy_n23, "experimental n = 2, 3 check (P_n+P_n only)");
    sub->add_option("--lq-cap", o.lq_cap, "generator cap for the exhaustive order search");
  };

  auto* classify_cmd = app.add_subcommand("classify", "decide linear quotients with a witness");
  add_input(classify_cmd);
  add_n(classify_cmd);
  add_legacy(classify_cmd);
  auto* gens_cmd = app.add_subcommand("gens", "minimal generators of J_n");
  add_input(gens_cmd);
  add_n(gens_cmd);
  auto* trim_cmd = app.add_subcommand("trim", "trimmed tree");
  add_input(trim_cmd);
  auto* order_cmd = app.add_subcommand("order", "linear-quotients order of J_n");
  add_input(order_cmd);
  add_n(order_cmd);
  add_legacy(order_cmd);
  auto* reg_cmd = app.add_subcommand("reg", "Betti table and regularity of J_n");
  add_input(reg_cmd);
  add_n(reg_cmd);
  reg_cmd->add_option("--hom-cap", o.hom_cap, "generator cap for the Betti computation");
  auto* fuzz_cmd = app.add_subcommand("fuzz", "cross-check the classifier on random trees");
  fuzz_cmd->add_option("--n", o.n, "n or range A..B (default 4..6)");
  fuzz_cmd->add_option("--vertices", o.vertices, "vertex count range A..B");
  fuzz_cmd->add_option("--count", o.count, "instances per (vertices, n) cell");
  fuzz_cmd->add_option("--seed", o.seed, "64-bit seed");
  fuzz_cmd->add_option("--lq-cap", o.lq_cap, "generator cap for the order search");
  fuzz_cmd->add_option("--hom-cap", o.hom_cap, "generator cap for the Betti computation");
  fuzz_cmd->add_option("--jobs", o.jobs, "worker threads (default: hardware threads)");
  fuzz_cmd->add_flag("--legacy-n23", o.legacy_n23, "allow n = 2, 3 (experimental)");
  fuzz_cmd->add_flag("--json", o.json, "JSON report");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (classify_cmd->parsed()) return cmd_classify(o, out);
    if (gens_cmd->parsed()) return cmd_gens(o, out);
    if (trim_cmd->parsed()) return cmd_trim(o, out);
    if (order_cmd->parsed()) return cmd_order(o, out, err);
    if (reg_cmd->parsed()) return cmd_reg(o, out);
    if (fuzz_cmd->parsed()) return cmd_fuzz(o, out);
  } catch (const Error& e) {
    err << "pathideal: " << e.what() << '\n';
    const bool internal = e.code() == ErrorCode::InternalContradiction ||
                          e.code() == ErrorCode::OracleDisagreement;
    return internal ? kExitDisagreement : kExitInputError;
  } catch (const std::exception& e) {
    err << "pathideal: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace pathideal
