// gbs: command-line front end for the GBS toolkit.
// Exit codes: 0 positive decision or success, 1 negative decision, 2 error.
#include <fstream>
#include <iostream>
#include <limits>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "gbs/commensurability.hpp"
#include "gbs/covering.hpp"
#include "gbs/io.hpp"
#include "gbs/iso.hpp"
#include "gbs/modular.hpp"
#include "gbs/moves.hpp"
#include "gbs/normalform.hpp"
#include "gbs/sweep.hpp"

using namespace gbs;

namespace {

constexpr int kPositive = 0;
constexpr int kNegative = 1;
constexpr int kError = 2;

struct Options {
  bool json = false;
  bool parallel = false;
  bool witness = false;
};

BigInt number(const std::string& text, const std::string& what) {
  try {
    return parse_bigint(text);
  } catch (const std::invalid_argument&) {
    throw ParseError(what + ": '" + text + "' is not an integer");
  }
}

std::size_t small_number(const std::string& text, const std::string& what) {
  const BigInt v = number(text, what);
  if (v < 0 || v > BigInt(std::numeric_limits<std::uint32_t>::max())) throw ParseError(what + " out of range");
  return static_cast<std::size_t>(v);
}

void print(const Json& j) { std::cout << j.dump(2) << "\n"; }

int run_comm(const Options& opt, const std::vector<std::string>& args, const std::string& grid) {
  if (!grid.empty()) {
    const auto pairs = normalized_grid(static_cast<std::int64_t>(small_number(grid, "--grid")));
    const auto matrix = opt.parallel ? verdict_matrix_parallel(pairs) : verdict_matrix_serial(pairs);
    std::vector<int> cls(pairs.size(), -1);
    std::vector<std::vector<std::size_t>> classes;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if (cls[i] >= 0) continue;
      cls[i] = static_cast<int>(classes.size());
      classes.push_back({i});
      for (std::size_t j = i + 1; j < pairs.size(); ++j) {
        if (cls[j] < 0 && matrix.positive(i, j)) {
          cls[j] = cls[i];
          classes.back().push_back(j);
        }
      }
    }
    auto label = [&](std::size_t i) { return "BS(" + to_string(pairs[i].m) + "," + to_string(pairs[i].n) + ")"; };
    if (opt.json) {
      Json out = Json::array();
      for (const auto& c : classes) {
        Json members = Json::array();
        for (auto i : c) members.push_back(label(i));
        out.push_back(std::move(members));
      }
      print(out);
    } else {
      for (const auto& c : classes) {
        std::string line;
        for (auto i : c) line += (line.empty() ? "" : " ") + label(i);
        std::cout << line << "\n";
      }
      std::cout << classes.size() << " classes over " << pairs.size() << " groups\n";
    }
    return kPositive;
  }
  if (args.size() != 4) throw ParseError("comm needs four integers m1 n1 m2 n2 (or --grid N)");
  const BigInt m1 = number(args[0], "m1"), n1 = number(args[1], "n1"), m2 = number(args[2], "m2"),
               n2 = number(args[3], "n2");
  const CommVerdict v = opt.witness ? commensurable_with_witness(m1, n1, m2, n2) : commensurable(m1, n1, m2, n2);
  if (opt.json) {
    print(verdict_to_json(v));
  } else {
    std::cout << (v.commensurable ? "commensurable" : "not commensurable") << " (" << case_name(v.tag) << ")\n";
    if (v.witness) {
      for (const auto& step : v.witness->steps) std::cout << "  " << describe(step) << "\n";
    }
  }
  return v.commensurable ? kPositive : kNegative;
}

int run_iso(const Options& opt, const std::vector<std::string>& covers, const std::string& n1s, const std::string& n2s) {
  if (covers.size() != 2) throw ParseError("iso needs two cover files");
  const CoveringGraph c1 = cover_from_json(read_json_file(covers[0]));
  const CoveringGraph c2 = cover_from_json(read_json_file(covers[1]));
  const BigInt n1 = number(n1s, "--n1"), n2 = number(n2s, "--n2");
  const NormalForm f1 = normal_form_of_cover(c1, n1);
  const NormalForm f2 = normal_form_of_cover(c2, n2);
  const IsoResult r = iso_normal_forms(f1, f2);
  if (opt.json) {
    Json j{{"isomorphic", r.isomorphic}, {"first", normal_form_to_json(f1)}, {"second", normal_form_to_json(f2)}};
    if (r.certificate) j["certificate"] = Json{{"shift", r.certificate->shift}, {"sigma", r.certificate->sigma}};
    print(j);
  } else {
    std::cout << (r.isomorphic ? "isomorphic" : "not isomorphic") << "\n";
    if (opt.witness) {
      std::cout << "  " << render(f1) << "\n  " << render(f2) << "\n";
      if (r.certificate) {
        std::cout << "  shift " << r.certificate->shift << ", sigma [";
        for (std::size_t i = 0; i < r.certificate->sigma.size(); ++i) {
          std::cout << (i ? "," : "") << r.certificate->sigma[i];
        }
        std::cout << "]\n";
      }
    }
  }
  return r.isomorphic ? kPositive : kNegative;
}

int run_normalize(const Options& opt, const std::string& path, const std::string& ns) {
  const CoveringGraph c = cover_from_json(read_json_file(path));
  const BigInt n = number(ns, "--n");
  const NormalForm nf = normal_form_of_cover(c, n);
  std::vector<Move> moves;
  if (opt.witness) {
    moves = tree_collapse_moves(c, positive_spanning_tree(c));
    const Graph collapsed = apply_all(lift_labels(c, 1, n), moves);
    std::vector<std::string> ids;
    for (const auto& e : collapsed.edges()) ids.push_back(e.id);
    const auto slides = normalize_bouquet(collapse_to_bouquet(c, n), ids).moves;
    moves.insert(moves.end(), slides.begin(), slides.end());
  }
  if (opt.json) {
    Json j = normal_form_to_json(nf);
    if (opt.witness) {
      Json log = Json::array();
      for (const auto& mv : moves) log.push_back(move_to_json(mv));
      j["moves"] = std::move(log);
    }
    print(j);
  } else {
    std::cout << render(nf) << "\n";
    if (opt.witness) std::cout << moves_to_json_lines(moves);
  }
  return kPositive;
}

int run_modular(const Options& opt, const std::string& path) {
  const ModularImage img = modular_image(graph_from_json(read_json_file(path)));
  if (opt.json) {
    print(modular_image_to_json(img));
  } else {
    std::cout << to_string(img) << "\n";
  }
  return kPositive;
}

int run_deform(const Options& opt, const std::string& path, std::size_t steps, std::uint64_t seed, bool keep_reduced,
               const std::string& log_path) {
  const Graph g = graph_from_json(read_json_file(path));
  const Deformation d = random_deform(g, steps, seed, keep_reduced);
  if (!log_path.empty()) {
    std::ofstream out(log_path);
    if (!out) throw ParseError("cannot write '" + log_path + "'");
    out << moves_to_json_lines(d.log);
  }
  if (opt.json) {
    Json log = Json::array();
    for (const auto& mv : d.log) log.push_back(move_to_json(mv));
    print(Json{{"graph", graph_to_json(d.graph)}, {"moves", std::move(log)}});
  } else {
    print(graph_to_json(d.graph));
    if (opt.witness) std::cout << moves_to_json_lines(d.log);
  }
  return kPositive;
}

int run_replay(const std::string& path, const std::string& log_path) {
  const Graph g = graph_from_json(read_json_file(path));
  std::ifstream in(log_path);
  if (!in) throw ParseError("cannot open '" + log_path + "'");
  print(graph_to_json(apply_all(g, moves_from_json_lines(in))));
  return kPositive;
}

int run_lift(const std::string& path, const std::string& p, const std::string& q) {
  const CoveringGraph c = cover_from_json(read_json_file(path));
  print(graph_to_json(lift_labels(c, number(p, "--p"), number(q, "--q"))));
  return kPositive;
}

int run_hmn(const Options& opt, const std::string& ms, const std::string& ns) {
  const BigInt m = number(ms, "m"), n = number(ns, "n");
  const StandardSubgroup h = standard_subgroup(m, n);
  const auto& g = h.group;
  if (opt.json) {
    print(Json{{"index", to_string(h.index)},
               {"d", to_string(g.d)},
               {"p", to_string(g.p)},
               {"q", to_string(g.q)},
               {"gcd_pq", to_string(g.gcd_pq)},
               {"graph", graph_to_json(descriptor_graph(g))}});
  } else {
    std::cout << "index " << h.index << ", G^" << g.d << "_{" << g.p << "," << g.q << "}\n";
  }
  return kPositive;
}

int run_gammak(const std::string& ks) {
  print(cover_to_json(gamma_k(small_number(ks, "k"))));
  return kPositive;
}

int run_validate(const Options& opt, const std::string& path) {
  const RawGraph raw = raw_graph_from_json(read_json_file(path));
  const auto violations = Graph::violations(raw);
  if (!violations.empty()) {
    if (opt.json) {
      print(Json{{"valid", false}, {"violations", violations_to_json(violations)}});
    } else {
      std::cout << "invalid\n";
      for (const auto& v : violations) {
        std::cout << "  " << violation_name(v.kind) << (v.subject.empty() ? "" : " '" + v.subject + "'")
                  << (v.detail.empty() ? "" : ": " + v.detail) << "\n";
      }
    }
    return kNegative;
  }
  const Graph g = Graph::validate(raw);
  const auto plateau = find_proper_plateau(g);
  if (opt.json) {
    Json j{{"valid", true}, {"reduced", is_reduced(g)}, {"betti", betti_number(g)}};
    if (plateau) j["proper_plateau"] = Json{{"prime", to_string(plateau->prime)}, {"vertices", plateau->vertices}};
    print(j);
  } else {
    std::cout << "valid\n  reduced: " << (is_reduced(g) ? "yes" : "no") << "\n  betti: " << betti_number(g) << "\n";
    std::cout << "  proper plateau: " << (plateau ? "prime " + to_string(plateau->prime) : std::string("none")) << "\n";
  }
  return kPositive;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decision procedures for generalized Baumslag-Solitar groups"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand
  Options opt;
  app.add_flag("--json", opt.json, "Machine-readable output");
  app.add_flag("--parallel", opt.parallel, "Parallelize grid sweeps");
  app.add_flag("--witness", opt.witness, "Print certificates and move sequences");

  std::vector<std::string> comm_args;
  std::string grid;
  auto* comm = app.add_subcommand("comm", "Decide commensurability of BS(m1,n1) and BS(m2,n2)");
  comm->add_option("values", comm_args, "m1 n1 m2 n2")->expected(0, 4);
  comm->add_option("--grid", grid, "Classify all normalized BS(m,n) with 1 <= |m| <= n <= N");

  std::vector<std::string> iso_covers;
  std::string n1, n2;
  auto* iso = app.add_subcommand("iso", "Decide isomorphism of two finite-index subgroups of G^d_{1,n}");
  iso->add_option("covers", iso_covers, "cover1.json cover2.json")->expected(2);
  iso->add_option("--n1", n1, "n for the first cover")->required();
  iso->add_option("--n2", n2, "n for the second cover")->required();

  std::string cover_path, n;
  auto* normalize = app.add_subcommand("normalize", "Normal form of a cover of G^d_{1,n}");
  normalize->add_option("cover", cover_path, "cover.json")->required();
  normalize->add_option("--n", n, "label n")->required();

  std::string graph_path;
  auto* modular = app.add_subcommand("modular", "Image of the modular homomorphism");
  modular->add_option("graph", graph_path, "graph.json")->required();

  std::size_t steps = 10;
  std::uint64_t seed = 0;
  bool keep_reduced = false;
  std::string log_path;
  auto* deform = app.add_subcommand("deform", "Random deformation by legal moves");
  deform->add_option("graph", graph_path, "graph.json")->required();
  deform->add_option("--steps", steps, "number of moves");
  deform->add_option("--seed", seed, "random seed");
  deform->add_flag("--keep-reduced", keep_reduced, "only moves that keep the graph reduced");
  deform->add_option("--log", log_path, "write the move log (JSON lines)");

  std::string replay_log;
  auto* replay = app.add_subcommand("replay", "Apply a move log to a graph");
  replay->add_option("graph", graph_path, "graph.json")->required();
  replay->add_option("log", replay_log, "moves.jsonl")->required();

  std::string p, q;
  auto* cover = app.add_subcommand("cover", "Covering graphs");
  cover->require_subcommand(1);
  cover->fallthrough();
  auto* lift = cover->add_subcommand("lift", "Lift labels (p,q) to a cover");
  lift->add_option("cover", cover_path, "cover.json")->required();
  lift->add_option("--p", p, "label at the source")->required();
  lift->add_option("--q", q, "label at the target")->required();

  std::string hm, hn;
  auto* subgroup = app.add_subcommand("subgroup", "Standard subgroups");
  subgroup->require_subcommand(1);
  subgroup->fallthrough();
  auto* hmn = subgroup->add_subcommand("hmn", "Standard subgroup H_{m,n} of BS(m,n)");
  hmn->add_option("m", hm, "m")->required();
  hmn->add_option("n", hn, "n")->required();

  std::string k;
  auto* gammak = app.add_subcommand("gammak", "Cover realising G^k_{1,n} inside G^2_{1,n}");
  gammak->add_option("k", k, "k >= 3")->required();

  auto* validate = app.add_subcommand("validate", "Validate a graph file");
  validate->add_option("graph", graph_path, "graph.json")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kError;
  }

  try {
    if (*comm) return run_comm(opt, comm_args, grid);
    if (*iso) return run_iso(opt, iso_covers, n1, n2);
    if (*normalize) return run_normalize(opt, cover_path, n);
    if (*modular) return run_modular(opt, graph_path);
    if (*deform) return run_deform(opt, graph_path, steps, seed, keep_reduced, log_path);
    if (*replay) return run_replay(graph_path, replay_log);
    if (*lift) return run_lift(cover_path, p, q);
    if (*hmn) return run_hmn(opt, hm, hn);
    if (*gammak) return run_gammak(k);
    if (*validate) return run_validate(opt, graph_path);
  } catch (const ParseError& e) {
    std::cerr << "error: parse: " << e.what() << "\n";
  } catch (const InvalidGraph& e) {
    std::cerr << "error: invalid graph: " << e.what() << "\n";
  } catch (const InvalidCover& e) {
    std::cerr << "error: invalid cover: " << e.what() << "\n";
  } catch (const IllegalMove& e) {
    std::cerr << "error: illegal move: " << e.what() << "\n";
  } catch (const NormalFormError& e) {
    std::cerr << "error: normal form: " << e.what() << "\n";
  } catch (const PreconditionFailed& e) {
    std::cerr << "error: precondition failed: " << e.what() << "\n";
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return kError;
}
