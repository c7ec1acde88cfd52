#include "cli.hpp"

#include <algorithm>
#include <functional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "arrayldpc/arraycode.hpp"
#include "arrayldpc/cyclegraph.hpp"
#include "arrayldpc/distance.hpp"
#include "arrayldpc/error.hpp"
#include "arrayldpc/io.hpp"
#include "arrayldpc/support.hpp"
#include "arrayldpc/template.hpp"
#include "arrayldpc/verify.hpp"

namespace arrayldpc::cli {

namespace {

using io::json;

struct Globals {
  bool pretty = false;
  unsigned threads = 1;
};

struct Context {
  Globals g;
  std::ostream& out;
  std::ostream& err;
  int status = kExitOk;

  void emit(const json& j) const { out << (g.pretty ? j.dump(2) : j.dump()) << '\n'; }
};

std::string format_bound(const DistanceResult& r) {
  switch (r.kind) {
    case DistanceKind::exact: return std::to_string(r.value);
    case DistanceKind::upper_bound: return "<=" + std::to_string(r.value);
    case DistanceKind::lower_bound: return ">=" + std::to_string(r.value);
  }
  return {};
}

json distance_json(const ArrayCode& code, const DistanceResult& r, const char* key) {
  json j = io::to_json(r);
  j[key] = r.value;
  j["q"] = code.q();
  j["m"] = code.m();
  return j;
}

/// d(q,m): exact enumeration up to `max_dim`, information-set search beyond.
DistanceResult table_distance(const ArrayCode& code, std::size_t max_dim, const SearchOptions& search) {
  if (code.dimension() <= max_dim) {
    return exact_min_distance(code, MinDistanceOptions{std::nullopt, max_dim, search.threads});
  }
  return heuristic_low_weight_search(code, search);
}

void render_report(std::ostream& out, const VerificationReport& r) {
  out << "template m=" << r.m << " w=" << r.w << " mode=" << to_string(r.mode) << "\n";
  out << "symbolic row multiplicities: " << (r.symbolic_multiplicities ? "ok" : "FAIL") << "\n";
  out << "row thresholds (2*lambda + mu):\n";
  for (const RowThreshold& t : r.thresholds) {
    out << "  row " << t.row << ": lambda=" << t.lambda << " mu=" << t.mu << " -> " << t.t << "\n";
  }
  out << "exceptional primes (column collisions or denominators):";
  for (const Int p : r.exceptional_primes) out << ' ' << p;
  out << "\nnumeric sweep up to " << r.numeric_sweep_max << ": " << r.outcomes.size() << " primes checked\n";
  for (const PrimeOutcome& o : r.outcomes) {
    if (o.status == PrimeStatus::clean) continue;
    out << "  q=" << o.q << ": " << to_string(o.status) << ", " << o.distinct_columns << " distinct columns, weight "
        << o.effective_weight << (o.reason.empty() ? "" : " (" + o.reason + ")") << "\n";
  }
  if (r.valid()) {
    out << "every instance is clean (weight " << r.w << ") for primes q >= " << *r.q0 << "\n";
    out << "every instance yields a valid support for primes q >= " << *r.bound_from << "\n";
  } else {
    out << "template is NOT valid for large primes\n";
  }
}

void add_code_flags(CLI::App* sub, Int& q, Int& m) {
  sub->add_option("--q", q, "odd prime q")->required();
  sub->add_option("--m", m, "number of block rows, 1 <= m <= q")->required();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Array LDPC code toolkit: construction, distances, template inference and verification", "arrayldpc"};
  app.require_subcommand(1);
  Context ctx{{}, out, err};
  app.add_flag("--pretty", ctx.g.pretty, "human-readable output");
  app.add_option("--threads", ctx.g.threads, "worker threads for parallel searches")
      ->check(CLI::Range(1U, 1024U));

  std::function<void()> action;
  Int q = 0, m = 0;

  // construct
  std::string alist_out;
  auto* construct = app.add_subcommand("construct", "build C(q,m) and report its parameters");
  add_code_flags(construct, q, m);
  construct->add_option("--alist", alist_out, "write the expanded parity-check matrix in alist format");
  construct->callback([&] {
    action = [&] {
      const ArrayCode code = build_code(q, m);
      json j = {{"q", q},
                {"m", m},
                {"length", code.length()},
                {"check_rows", code.check_rows()},
                {"rank", code.rank()},
                {"dimension", code.dimension()}};
      if (code.length() <= ArrayCode::kDefaultColumnCap) j["computed_rank"] = code.computed_rank();
      if (!alist_out.empty()) {
        io::write_file(alist_out, code.export_alist());
        j["alist"] = alist_out;
      }
      ctx.emit(j);
    };
  });

  // distance
  std::optional<std::size_t> cap;
  std::size_t max_dim = 32;
  auto* distance = app.add_subcommand("distance", "exact minimum distance d(q,m)");
  add_code_flags(distance, q, m);
  distance->add_option("--cap", cap, "only decide whether a codeword of weight <= cap exists");
  distance->add_option("--max-dim", max_dim, "largest dimension enumerated exhaustively")->capture_default_str();
  distance->callback([&] {
    action = [&] {
      const ArrayCode code = build_code(q, m);
      const DistanceResult r = exact_min_distance(code, MinDistanceOptions{cap, max_dim, ctx.g.threads});
      json j = distance_json(code, r, "d");
      if (r.kind == DistanceKind::exact && code.length() <= ArrayCode::kDefaultColumnCap) {
        j["even_weight_code"] = is_even_weight_code(code);
      }
      ctx.emit(j);
    };
  });

  // stopping
  std::size_t size_cap = 0;
  std::optional<std::uint64_t> node_limit;
  auto* stopping = app.add_subcommand("stopping", "exact stopping distance h(q,m) up to a size cap");
  add_code_flags(stopping, q, m);
  stopping->add_option("--cap", size_cap, "largest stopping-set size searched")->required()->check(CLI::PositiveNumber);
  stopping->add_option("--node-limit", node_limit, "give up after this many search nodes");
  stopping->callback([&] {
    action = [&] {
      const ArrayCode code = build_code(q, m);
      const DistanceResult r = exact_stopping_distance(code, size_cap, StoppingOptions{ctx.g.threads, node_limit});
      ctx.emit(distance_json(code, r, "h"));
    };
  });

  // search
  SearchOptions search_opts;
  auto* search = app.add_subcommand("search", "randomized low-weight codeword search (upper bound on d)");
  add_code_flags(search, q, m);
  search->add_option("--budget", search_opts.budget, "iterations")->capture_default_str()->check(CLI::PositiveNumber);
  search->add_option("--seed", search_opts.seed, "random seed")->capture_default_str();
  search->add_option("--info-weight", search_opts.max_info_weight, "information positions combined (1-3)")
      ->capture_default_str()
      ->check(CLI::Range(1U, 3U));
  search->callback([&] {
    action = [&] {
      const ArrayCode code = build_code(q, m);
      search_opts.threads = ctx.g.threads;
      ctx.emit(distance_json(code, heuristic_low_weight_search(code, search_opts), "d"));
    };
  });

  // graph
  std::string support_path, dot_out;
  std::optional<Int> in_q, in_m;
  Int gi = 0, gj = 1;
  auto* graph = app.add_subcommand("graph", "support-matrix graph G^(i,j) and cycles through its designated edges");
  graph->add_option("--support", support_path, "support matrix JSON or index list")->required();
  graph->add_option("--i", gi, "first row")->capture_default_str();
  graph->add_option("--j", gj, "second row")->capture_default_str();
  graph->add_option("--q", in_q, "q for index-list input");
  graph->add_option("--m", in_m, "m for index-list input");
  graph->add_option("--dot", dot_out, "write the graph in DOT format");
  graph->callback([&] {
    action = [&] {
      const SupportMatrix sm = io::read_support(support_path, in_q, in_m);
      const SupportGraph g(sm, gi, gj);
      json edges = json::array();
      for (const auto& e : g.edges()) edges.push_back({{"left", e.left}, {"right", e.right}, {"columns", e.columns}});
      json j = {{"i", gi}, {"j", gj}, {"left", g.left()}, {"right", g.right()}, {"edges", edges}};
      json designated = json::array();
      for (const DesignatedEdge& e : designated_edges(sm.q(), gi, gj)) {
        json entry = {{"left", e.left}, {"right", e.right}, {"present", g.find_edge(e.left, e.right) != nullptr}};
        if (entry["present"]) {
          json cycles = json::array();
          for (const Cycle& c : cycles_through_edge(g, e.left, e.right)) cycles.push_back(io::to_json(c));
          entry["cycles"] = cycles;
        }
        designated.push_back(entry);
      }
      j["designated_edges"] = designated;
      if (!dot_out.empty()) {
        io::write_file(dot_out, g.to_dot());
        j["dot"] = dot_out;
      }
      ctx.emit(j);
    };
  });

  // compare
  std::string a_path, b_path;
  std::optional<Int> a_q, b_q;
  bool relaxed = false;
  auto* compare = app.add_subcommand("compare", "compare the graphical cycle structure of two support matrices");
  compare->add_option("--a", a_path, "first support matrix")->required();
  compare->add_option("--b", b_path, "second support matrix")->required();
  compare->add_option("--qa", a_q, "q of the first matrix for index-list input");
  compare->add_option("--qb", b_q, "q of the second matrix for index-list input");
  compare->add_option("--m", in_m, "m for index-list input");
  compare->add_flag("--relaxed", relaxed, "compare minimum cycle lengths only");
  compare->callback([&] {
    action = [&] {
      const SupportMatrix a = io::read_support(a_path, a_q, in_m);
      const SupportMatrix b = io::read_support(b_path, b_q, in_m);
      const bool strict = same_cycle_structure(a, b);
      const bool loose = relaxed_structure_match(a, b);
      ctx.emit({{"strict", strict}, {"relaxed", loose}, {"match", relaxed ? loose : strict}});
    };
  });

  // infer
  std::string template_out;
  InferenceConfig icfg;
  bool no_backtrack = false;
  auto* infer = app.add_subcommand("infer", "infer a template support matrix from two support matrices");
  infer->add_option("--a", a_path, "support matrix at the smaller prime")->required();
  infer->add_option("--b", b_path, "support matrix at the larger prime")->required();
  infer->add_option("--qa", a_q, "q of the first matrix for index-list input");
  infer->add_option("--qb", b_q, "q of the second matrix for index-list input");
  infer->add_option("--m", in_m, "m for index-list input");
  infer->add_option("--I", icfg.I, "largest CRT multiplier (default m-1)")->check(CLI::NonNegativeNumber);
  infer->add_flag("--relaxed", icfg.relaxed, "match minimum cycle lengths only");
  infer->add_flag("--no-backtrack", no_backtrack, "fail on the first conflicting cycle pairing");
  infer->add_option("--out", template_out, "template JSON output path")->required();
  infer->callback([&] {
    action = [&] {
      const SupportMatrix a = io::read_support(a_path, a_q, in_m);
      const SupportMatrix b = io::read_support(b_path, b_q, in_m);
      icfg.backtrack = !no_backtrack;
      const InferenceResult r = infer_template(a, b, icfg);
      io::write_file(template_out, io::to_json(r.matrix).dump(1) + "\n");
      ctx.emit({{"template", io::to_json(r.matrix)},
                {"permutation", io::to_json(r.permutation)},
                {"nodes", r.nodes},
                {"out", template_out}});
    };
  });

  // instantiate
  std::string template_path;
  auto* inst = app.add_subcommand("instantiate", "evaluate a template at a prime");
  inst->add_option("--template", template_path, "template JSON")->required();
  inst->add_option("--q", q, "odd prime")->required();
  inst->callback([&] {
    action = [&] {
      const TemplateSupportMatrix t = io::read_template(template_path);
      const SupportMatrix sm = instantiate(t, q);
      json j = io::to_json(sm);
      j["indices"] = sm.indices();
      j["canonical_order"] = canonical_order_check(sm);
      ctx.emit(j);
    };
  });

  // verify
  std::string mode_text = "codeword";
  Int sweep = 1000;
  auto* verify = app.add_subcommand("verify", "verify a template for all primes");
  verify->add_option("--template", template_path, "template JSON")->required();
  verify->add_option("--mode", mode_text, "codeword or stopping")
      ->check(CLI::IsMember({"codeword", "stopping"}))
      ->capture_default_str();
  verify->add_option("--sweep", sweep, "largest prime checked numerically")->capture_default_str();
  verify->callback([&] {
    action = [&] {
      const TemplateSupportMatrix t = io::read_template(template_path);
      const VerificationReport r = verify_template(t, parse_verify_mode(mode_text), sweep);
      if (ctx.g.pretty) {
        render_report(ctx.out, r);
      } else {
        ctx.emit(io::to_json(r));
      }
      if (!r.valid()) ctx.status = kExitVerification;
    };
  });

  // table
  Int qmax = 7;
  SearchOptions table_search;
  std::size_t table_max_dim = 32;
  std::uint64_t table_nodes = 20'000'000;
  auto* table = app.add_subcommand("table", "minimum and stopping distances for primes 7..qmax as CSV");
  table->add_option("--qmax", qmax, "largest prime")->required();
  table->add_option("--budget", table_search.budget, "search iterations where enumeration is too large")
      ->capture_default_str();
  table->add_option("--seed", table_search.seed, "search seed")->capture_default_str();
  table->add_option("--max-dim", table_max_dim, "largest dimension enumerated exhaustively")->capture_default_str();
  table->add_option("--node-limit", table_nodes, "stopping-set search node limit")->capture_default_str();
  table->callback([&] {
    action = [&] {
      table_search.threads = ctx.g.threads;
      ctx.out << "q,d(q,7),d(q,6),h(q,5),d(q,5),h(q,4),d(q,4)\n";
      for (const Int p : primes_between(7, qmax)) {
        auto d = [&](Int mm) { return format_bound(table_distance(ArrayCode(p, mm), table_max_dim, table_search)); };
        auto h = [&](Int mm) {
          const ArrayCode code(p, mm);
          const DistanceResult up = table_distance(code, table_max_dim, table_search);
          return format_bound(exact_stopping_distance(code, up.value, StoppingOptions{ctx.g.threads, table_nodes}));
        };
        ctx.out << p << ',' << d(7) << ',' << d(6) << ',' << h(5) << ',' << d(5) << ',' << h(4) << ',' << d(4) << '\n';
      }
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (action) action();
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.code() == Errc::invalid_parameter || e.code() == Errc::parse_error ? kExitUsage : kExitError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  return ctx.status;
}

}  // namespace arrayldpc::cli
