// Command-line front end: ex, construct, check, cube, product, report.
#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include "daisy/constructions.hpp"
#include "daisy/daisy_model.hpp"
#include "daisy/density_report.hpp"
#include "daisy/errors.hpp"
#include "daisy/family_io.hpp"
#include "daisy/hypercube.hpp"
#include "daisy/products.hpp"
#include "daisy/solver.hpp"

using namespace daisy;

namespace {

constexpr int kExitInvalid = 2;
constexpr int kExitBoundViolation = 3;
constexpr int kExitRefused = 4;

struct Globals {
  std::string output;
  std::string format;
  std::optional<std::uint64_t> node_limit;
  unsigned workers = 1;
  std::string symmetry = "off";
  bool seedless = false;
};

class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw InvalidInput("cannot open output file " + path);
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

SolverConfig solver_config(const Globals& g) {
  SolverConfig cfg = SolverConfig::from_environment();
  if (g.node_limit) cfg.node_limit = *g.node_limit;
  cfg.workers = g.workers;
  cfg.symmetry = g.symmetry == "on";
  return cfg;
}

void write_family(const Globals& g, const SetFamily& f) {
  Sink sink(g.output);
  if (g.format == "json")
    write_family_json(sink.stream(), f);
  else
    write_family_text(sink.stream(), f);
}

std::string join(std::span<const Element> xs) {
  std::string out = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + std::to_string(xs[i]);
  return out + "}";
}

std::string vertex_string(Vertex v, unsigned n) {
  std::string out;
  for (unsigned i = 0; i < n; ++i) out += (v >> i & 1u) ? '1' : '0';
  return out;
}

void print_records(const Globals& g, const std::vector<DensityRecord>& records) {
  Sink sink(g.output);
  if (g.format == "json" || g.format == "csv") {
    export_records(sink.stream(), records, parse_export_format(g.format));
    return;
  }
  for (const auto& row : records)
    sink.stream() << row.problem << " n=" << row.n << " value" << (row.is_exact ? "=" : ">=") << row.value
                  << " ratio=" << rational_string(row.ratio) << " (" << decimal_string(row.ratio) << ")"
                  << (row.is_exact ? "" : " [node limit]") << '\n';
}

DaisyPattern pattern_from(const std::string& pattern, unsigned daisy_r) {
  if (!pattern.empty()) return DaisyPattern::parse(pattern);
  if (daisy_r > 0) return DaisyPattern::plain(daisy_r);
  throw InvalidInput("give --pattern r,s,t or --daisy r");
}

int run(int argc, char** argv) {
  CLI::App app{"Daisy-free families, hypercube transversals and exact extremal numbers"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--output", g.output, "Write results to this file instead of stdout");
  app.add_option("--format", g.format, "json | csv for tables; json for families")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--node-limit", g.node_limit, "Solver node limit (default 1e9, or DAISY_NODE_LIMIT)");
  app.add_option("--workers", g.workers, "Solver worker threads")->check(CLI::PositiveNumber);
  app.add_option("--symmetry", g.symmetry, "Root orbit branching")->check(CLI::IsMember({"on", "off"}));
  app.add_flag("--seedless", g.seedless, "Reserved: the solver is always deterministic (greedy incumbent, no randomness)");

  // ex
  auto* ex = app.add_subcommand("ex", "Exact ex(n, F)");
  std::string ex_pattern;
  unsigned ex_daisy = 0;
  std::string ex_forbidden;
  std::optional<unsigned> ex_n;
  unsigned ex_from = 0, ex_to = 0;
  ex->add_option("--pattern", ex_pattern, "Daisy pattern r,s,t");
  ex->add_option("--daisy", ex_daisy, "Plain daisy D_r(4,2)");
  ex->add_option("--forbidden", ex_forbidden, "Forbidden hypergraph file (generic copy route)");
  ex->add_option("--n", ex_n, "Ground size");
  ex->add_option("--n-from", ex_from, "First ground size of a table");
  ex->add_option("--n-to", ex_to, "Last ground size of a table");

  // construct
  auto* construct = app.add_subcommand("construct", "Emit an explicit family");
  construct->require_subcommand(1);
  auto* c_fano = construct->add_subcommand("fano-complement", "The 28 non-line triples of the Fano plane");
  auto* c_iter = construct->add_subcommand("iterated-fano", "Iterated Fano blow-up on 7^k points");
  unsigned c_k = 1;
  c_iter->add_option("--k", c_k)->required();
  auto* c_multi = construct->add_subcommand("multipartite", "Complete r-partite r-graph");
  unsigned c_n = 0, c_r = 0, c_classes = 2, c_delta = 1, c_d = 0, c_offset = 0;
  c_multi->add_option("--n", c_n)->required();
  c_multi->add_option("--r", c_r)->required();
  auto* c_parity = construct->add_subcommand("parity", "Parity-constrained family");
  c_parity->add_option("--n", c_n)->required();
  c_parity->add_option("--k", c_classes)->required();
  c_parity->add_option("--r", c_r)->required();
  c_parity->add_option("--delta", c_delta)->required();
  auto* c_layers = construct->add_subcommand("layers", "Every (d+1)-st layer of Q_n");
  c_layers->add_option("--n", c_n)->required();
  c_layers->add_option("--d", c_d)->required();
  c_layers->add_option("--offset", c_offset);

  // check
  auto* check = app.add_subcommand("check", "Check a family file");
  std::string check_input, check_pattern;
  unsigned check_daisy = 0;
  std::optional<unsigned> check_window;
  check->add_option("--input", check_input)->required();
  check->add_option("--pattern", check_pattern);
  check->add_option("--daisy", check_daisy);
  check->add_option("--window", check_window, "Most members inside one window of this size");

  // cube
  auto* cube = app.add_subcommand("cube", "Hypercube transversals");
  cube->require_subcommand(1);
  auto* q_trans = cube->add_subcommand("transversal", "Exact minimum subcube transversal");
  unsigned q_n = 0, q_d = 0, q_nmax = 0;
  bool q_middle = false, q_layer = false;
  q_trans->add_option("--n", q_n)->required();
  q_trans->add_option("--d", q_d, "Subcube dimension")->required();
  q_trans->add_flag("--middle", q_middle, "Only middle subcubes");
  q_trans->add_flag("--middle-layer-only", q_layer, "Only middle-layer vertices may be used");
  auto* q_jt = cube->add_subcommand("jt-check", "Most points of a vertex set in one d-cube");
  std::string q_input;
  q_jt->add_option("--d", q_d)->required();
  q_jt->add_option("--input", q_input)->required();
  auto* q_td = cube->add_subcommand("td-table", "Exact d-cube transversal densities");
  q_td->add_option("--d", q_d)->required();
  q_td->add_option("--n-max", q_nmax)->required();
  auto* q_corr = cube->add_subcommand("correspondence", "Middle-cube transversal vs daisy-free complement");
  unsigned q_dim = 4;
  q_corr->add_option("--n", q_n)->required();
  q_corr->add_option("--dim", q_dim);

  // product
  auto* product = app.add_subcommand("product", "Star products of hypergraphs");
  product->require_subcommand(1);
  auto* p_star = product->add_subcommand("star", "F * G");
  std::string p_f, p_g;
  unsigned p_d = 1;
  p_star->add_option("--f", p_f)->required();
  p_star->add_option("--g", p_g)->required();
  auto* p_power = product->add_subcommand("power", "F^d");
  p_power->add_option("--f", p_f)->required();
  p_power->add_option("--d", p_d)->required();

  // report
  auto* report = app.add_subcommand("report", "ex table with closed-form bound verification");
  std::string r_pattern;
  std::string r_verify;
  unsigned r_daisy = 0, r_from = 0, r_to = 0;
  report->add_option("--pattern", r_pattern);
  report->add_option("--daisy", r_daisy);
  report->add_option("--n-from", r_from);
  report->add_option("--n-to", r_to);
  report->add_option("--verify", r_verify, "Re-check the bounds stored in a JSON table instead of solving");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInvalid;
  }
  const SolverConfig cfg = solver_config(g);

  if (*ex) {
    const ExProblem problem = ex_forbidden.empty() ? ExProblem::daisy(pattern_from(ex_pattern, ex_daisy))
                                                   : ExProblem::forbidden(UniformHypergraph{load_family(ex_forbidden)});
    unsigned from = ex_from, to = ex_to;
    if (ex_n) from = to = *ex_n;
    if (from == 0 && to == 0) throw InvalidInput("give --n or --n-from/--n-to");
    const auto table = ex_table(problem, from, to, cfg);
    for (const auto& note : table.notes) std::cerr << "note: " << note << '\n';
    if (table.records.empty() && to > 0) {
      std::cerr << "no row within desk limits\n";
      return kExitRefused;
    }
    print_records(g, table.records);
    return 0;
  }

  if (*construct) {
    if (*c_fano) write_family(g, fano_complement());
    if (*c_iter) write_family(g, iterated_fano(c_k));
    if (*c_multi) write_family(g, complete_multipartite(c_n, c_r));
    if (*c_parity) write_family(g, parity_family(c_n, c_classes, c_r, c_delta));
    if (*c_layers) {
      Sink sink(g.output);
      write_vertex_set(sink.stream(), layered_transversal(c_n, c_d, c_offset));
    }
    return 0;
  }

  if (*check) {
    const SetFamily f = load_family(check_input);
    Sink sink(g.output);
    if (check_window) {
      const auto best = max_members_in_window(f, *check_window);
      sink.stream() << "max members in a " << *check_window << "-window: " << best.count << " window "
                    << join(best.window) << '\n';
      return 0;
    }
    const auto pattern = pattern_from(check_pattern, check_daisy);
    const auto hit = find_daisy(f, pattern);
    if (!hit) {
      sink.stream() << pattern_id(pattern) << "-free (" << f.size() << " members)\n";
      return 0;
    }
    sink.stream() << "contains " << pattern_id(pattern) << ": stem " << join(hit->stem) << " free "
                  << join(hit->free_set) << "; " << daisy_count(f, pattern) << " instances in total\n";
    return 0;
  }

  if (*cube) {
    Sink sink(g.output);
    if (*q_trans) {
      const auto inst = transversal_instance(q_n, q_d, q_middle || q_layer, q_layer);
      const auto result = solve_min_transversal(inst.system, cfg);
      CubeVertexSet vs(q_n);
      for (Item i : result.witness) vs.insert(inst.item_vertices[i]);
      std::cerr << "minimum transversal " << (result.status == SearchStatus::exact ? "= " : "<= ") << result.objective
                << " of " << inst.system.item_count() << " allowed vertices (" << result.nodes_explored
                << " nodes)\n";
      write_vertex_set(sink.stream(), vs);
      return 0;
    }
    if (*q_jt) {
      const auto vs = load_vertex_set(q_input);
      const auto best = max_points_in_some_dcube(vs, q_d);
      sink.stream() << "max points in a " << q_d << "-cube: " << best.count << " (fixed "
                    << vertex_string(best.cube.fixed_ones, vs.n()) << " free " << vertex_string(best.cube.free, vs.n())
                    << ")\n";
      return 0;
    }
    if (*q_td) {
      const auto table = td_evidence_table(q_d, q_nmax, cfg);
      for (const auto& note : table.notes) std::cerr << "note: " << note << '\n';
      if (table.small_cube)
        std::cerr << "small cube Q_" << q_d + 2 << ": exact minimum " << table.small_cube->exact_minimum
                  << " vs ceil(log2 d) = " << table.small_cube->log_bound << '\n';
      print_records(g, table.records);
      verify_bounds(table.records);
      return 0;
    }
    if (*q_corr) {
      const auto rep = transversal_daisy_correspondence(q_n, q_dim, cfg);
      sink.stream() << "middle " << q_dim << "-cubes: " << rep.cube_count << ", daisies: " << rep.daisy_count
                    << ", slices equal petals: " << (rep.slices_match ? "yes" : "no") << '\n'
                    << "min transversal " << rep.min_transversal << " + ex " << rep.ex_value << " = "
                    << rep.min_transversal + rep.ex_value << " (layer " << rep.layer_size << ")\n"
                    << "families checked: " << rep.families_checked << (rep.exhaustive ? " (all)" : " (sampled)")
                    << ", equivalence " << (rep.bijection_holds ? "holds" : "FAILS") << '\n';
      return rep.identity_holds && rep.slices_match && rep.bijection_holds ? 0 : 1;
    }
  }

  if (*product) {
    const UniformHypergraph f{load_family(p_f)};
    if (*p_star) write_family(g, star_product(f, UniformHypergraph{load_family(p_g)}).edges);
    if (*p_power) write_family(g, power(f, p_d).edges);
    return 0;
  }

  if (*report) {
    if (!r_verify.empty()) {
      std::ifstream in(r_verify);
      if (!in) throw InvalidInput("cannot open table " + r_verify);
      const auto records = read_records_json(in);
      const auto checked = verify_bounds(records);
      std::cerr << checked.checks << " bound checks passed\n";
      return 0;
    }
    if (r_to == 0 || r_from > r_to) throw InvalidInput("give --n-from and --n-to");
    const auto pattern = pattern_from(r_pattern, r_daisy);
    const auto table = ex_table(ExProblem::daisy(pattern), r_from, r_to, cfg);
    for (const auto& note : table.notes) std::cerr << "note: " << note << '\n';
    print_records(g, table.records);
    const auto checked = verify_bounds(table.records);
    Rational best_exact(1);
    for (const auto& row : table.records)
      if (row.is_exact && row.ratio < best_exact) best_exact = row.ratio;
    for (const auto& b : closed_form_bounds(pattern, r_to))
      if (b.kind == BoundKind::density_lower_asymptotic)
        std::cerr << "bracket [" << rational_string(b.value) << ", " << rational_string(best_exact) << "]\n";
    std::cerr << checked.checks << " bound checks passed; ratios " << (table.monotone ? "nonincreasing" : "NOT monotone")
              << '\n';
    return 0;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const BoundViolation& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBoundViolation;
  } catch (const ResourceRefusal& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitRefused;
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const Infeasible& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
