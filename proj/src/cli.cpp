#include "quiverlab/cli.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "quiverlab/barcode.hpp"
#include "quiverlab/service.hpp"
#include "quiverlab/stability.hpp"

namespace quiverlab {

namespace {

struct QuiverInput {
  std::string quiver;
  std::string type;
  std::string orientation = "linear";

  void attach(CLI::App* app) {
    auto* q = app->add_option("--quiver,-q", quiver, "quiver JSON, matrix JSON or arrow list \"2->1,3->1\"");
    auto* t = app->add_option("--type,-t", type, "named quiver: A<n> or K<m>");
    app->add_option("--orientation,-o", orientation, "linear, fan, alternating or an arrow list")->needs(t);
    q->excludes(t);
  }

  Quiver get() const {
    if (!type.empty()) return named_quiver(type, orientation);
    if (quiver.empty()) throw CLI::RequiredError("--quiver or --type");
    return parse_quiver(quiver);
  }
};

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw Error(ErrorKind::InvalidArgument, "cannot write " + path);
  f << text;
}

RatVector parse_theta(const std::string& text, int n) {
  std::vector<Rational> xs;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      xs.emplace_back(item);
    } catch (const std::exception&) {
      throw ParseError(0, "bad stability coordinate '" + item + "'");
    }
  }
  if (static_cast<int>(xs.size()) != n)
    throw Error(ErrorKind::DimensionMismatch, "theta needs " + std::to_string(n) + " coordinates");
  RatVector theta(n);
  for (int i = 0; i < n; ++i) theta(i) = xs[static_cast<std::size_t>(i)];
  return theta;
}

IntVector parse_dims(const std::string& text) {
  std::vector<std::int64_t> xs;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    std::int64_t x = 0;
    try {
      x = std::stoll(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || item.find_first_not_of(" \t", used) != std::string::npos)
      throw ParseError(0, "bad dimension entry '" + item + "'");
    xs.push_back(x);
  }
  if (xs.empty()) throw ParseError(0, "empty dimension vector");
  IntVector v(static_cast<Eigen::Index>(xs.size()));
  for (std::size_t i = 0; i < xs.size(); ++i) v(static_cast<Eigen::Index>(i)) = xs[i];
  return v;
}

std::string join(const std::vector<int>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? " " : "") + std::to_string(xs[i]);
  return s;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"quiverlab: cluster algebras and quiver representations"};
  app.require_subcommand(1);
  std::function<void()> action;

  QuiverInput input;
  std::vector<int> at;

  auto* mutate_cmd = app.add_subcommand("mutate", "mutate a quiver or exchange matrix");
  std::string matrix;
  input.attach(mutate_cmd);
  mutate_cmd->add_option("--matrix,-m", matrix, "skew-symmetric matrix JSON");
  mutate_cmd->add_option("--at", at, "mutation directions, in order")->required();
  mutate_cmd->callback([&] {
    action = [&] {
      if (!matrix.empty()) {
        IntMatrix b = matrix_from_json(Json::parse(matrix));
        if (!is_skew_symmetric(b)) throw Error(ErrorKind::NotSkewSymmetric, "exchange matrix");
        for (int k : at) {
          if (k < 1 || k > b.cols()) throw Error(ErrorKind::BadDirection, "direction " + std::to_string(k));
          b = mutate_matrix(b, k);
        }
        out << matrix_to_json(b).dump() << '\n';
        return;
      }
      Quiver q = input.get();
      for (int k : at) q = mutate(q, k);
      out << to_json(q).dump() << '\n';
    };
  });

  auto* walk_cmd = app.add_subcommand("seed-walk", "mutate the initial seed, print the final cluster");
  input.attach(walk_cmd);
  bool flat = false;
  walk_cmd->add_option("--at", at, "mutation directions, in order");
  walk_cmd->add_flag("--flat", flat, "print Laurent monomial sums instead of fractions");
  walk_cmd->callback([&] {
    action = [&] {
      Seed s = initial_seed(input.get());
      for (int k : at) s = mutate(s, k);
      for (const auto& x : s.cluster) out << render(x, flat ? RenderStyle::Flat : RenderStyle::Display) << '\n';
    };
  });

  auto* graph_cmd = app.add_subcommand("exchange-graph", "breadth-first exchange graph");
  input.attach(graph_cmd);
  ExchangeGraphBudget budget;
  std::string dot_path, json_path;
  bool labeled = false;
  graph_cmd->add_option("--max-nodes", budget.max_nodes)->check(CLI::PositiveNumber);
  graph_cmd->add_option("--max-depth", budget.max_depth)->check(CLI::NonNegativeNumber);
  graph_cmd->add_flag("--labeled", labeled, "labeled seeds instead of unordered clusters");
  graph_cmd->add_option("--dot", dot_path, "write Graphviz dot here");
  graph_cmd->add_option("--json", json_path, "write the edge list JSON here");
  graph_cmd->callback([&] {
    action = [&] {
      const auto g = exchange_graph(input.get(), budget, labeled ? ClusterIdentity::Labeled : ClusterIdentity::Unordered);
      out << "clusters: " << g.nodes.size() << '\n'
          << "variables: " << g.variables.size() << '\n'
          << "edges: " << g.edges.size() << '\n'
          << "complete: " << (g.complete ? "yes" : "no") << '\n';
      if (!dot_path.empty()) write_file(dot_path, g.to_dot());
      if (!json_path.empty()) write_file(json_path, to_json(g).dump(2) + "\n");
    };
  });

  auto* char_cmd = app.add_subcommand("char", "cluster character of a module");
  input.attach(char_cmd);
  std::string module;
  bool table = false;
  std::string method = "submodule";
  char_cmd->add_option("--module", module, "M[a,b], P[i], I[i], S[i] or P[i][1]");
  char_cmd->add_flag("--table", table, "JSON table of every indecomposable");
  char_cmd->add_option("--method", method, "submodule, frieze or recursion")
      ->check(CLI::IsMember({"submodule", "frieze", "recursion"}));
  char_cmd->callback([&] {
    action = [&] {
      const Quiver q = input.get();
      if (table) {
        const TypeAQuiver a(q);
        out << to_json(method == "frieze" ? char_frieze(a) : char_table(a)).dump(2) << '\n';
        return;
      }
      if (module.empty()) throw CLI::RequiredError("--module or --table");
      // Projectives and injectives of any acyclic quiver go through the recursion.
      int vertex = 0;
      char kind = module.empty() ? 0 : module[0];
      if ((kind == 'P' || kind == 'I') && module.size() > 3 && module[1] == '[' && module.back() == ']') {
        const auto* first = module.data() + 2;
        const auto* last = module.data() + module.size() - 1;
        const auto [ptr, ec] = std::from_chars(first, last, vertex);
        if (ec != std::errc() || ptr != last) vertex = 0;
      }
      bool type_a = true;
      try {
        TypeAQuiver check(q);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::NotTypeA) throw;
        type_a = false;
      }
      if (vertex != 0 && (method == "recursion" || !type_a)) {
        out << render(kind == 'P' ? char_projective(q, vertex) : char_injective(q, vertex)) << '\n';
        return;
      }
      const TypeAQuiver a(q);
      const ModuleDesc m = parse_module(a, module);
      if (method == "frieze") out << render(char_frieze(a).at(m)) << '\n';
      else out << render(char_submodule(a, m)) << '\n';
    };
  });

  auto* silting_cmd = app.add_subcommand("silting", "silting pairs, one per line");
  input.attach(silting_cmd);
  bool count_only = false, tilting = false, with_cluster = false;
  silting_cmd->add_flag("--count", count_only);
  silting_cmd->add_flag("--tilting", tilting, "only the tilting modules");
  silting_cmd->add_flag("--cluster", with_cluster, "append the cluster of each pair");
  silting_cmd->callback([&] {
    action = [&] {
      const TypeAQuiver a(input.get());
      const auto pairs = tilting ? tilting_modules(a) : silting_pairs(a);
      if (count_only) {
        out << pairs.size() << '\n';
        return;
      }
      const auto chars = with_cluster ? char_table(a) : CharacterTable{};
      for (const auto& p : pairs) {
        out << to_literal(p);
        if (with_cluster) {
          out << "  ->";
          for (const auto& x : silting_to_cluster(p, chars)) out << "  " << render(x);
        }
        out << '\n';
      }
    };
  });

  auto* chambers_cmd = app.add_subcommand("chambers", "chamber count and membership queries");
  input.attach(chambers_cmd);
  std::vector<std::string> thetas;
  int radius = 0;
  chambers_cmd->add_option("--theta", thetas, "stability condition \"1,-2,1/2\"; repeatable");
  chambers_cmd->add_option("--sample", radius, "check the integer grid [-r, r]^n")->check(CLI::PositiveNumber);
  chambers_cmd->callback([&] {
    action = [&] {
      const TypeAQuiver a(input.get());
      out << "chambers: " << chambers(a).size() << '\n';
      for (const auto& text : thetas) {
        const auto hit = chamber_of(a, parse_theta(text, a.size()));
        out << text << ": ";
        if (const auto* c = std::get_if<Chamber>(&hit)) {
          out << to_literal(c->silting) << '\n';
        } else {
          out << "wall";
          for (const auto& m : std::get<WallHit>(hit).semistable) out << ' ' << to_literal(m);
          out << '\n';
        }
      }
      if (radius > 0) {
        const auto r = sample_chambers(a, radius);
        out << "sampled: " << r.directions << " generic: " << r.generic << " on walls: " << r.on_walls
            << " overlaps: " << r.overlaps << " uncovered: " << r.uncovered << '\n';
        if (!r.ok()) throw Error(ErrorKind::Internal, "chambers do not tile the sample");
      }
    };
  });

  auto* svg_cmd = app.add_subcommand("stability-svg", "wall-and-chamber picture for rank 2 or 3");
  input.attach(svg_cmd);
  std::string output;
  bool no_labels = false;
  SvgOptions svg_options;
  svg_cmd->add_option("--output", output, "file to write; stdout otherwise");
  svg_cmd->add_flag("--no-labels", no_labels);
  svg_cmd->add_option("--segments", svg_options.min_arc_segments, "minimum points per arc")->check(CLI::Range(8, 4096));
  svg_cmd->callback([&] {
    action = [&] {
      svg_options.labels = !no_labels;
      const auto svg = render_svg(TypeAQuiver(input.get()), svg_options);
      if (output.empty()) out << svg;
      else write_file(output, svg);
    };
  });

  auto* mgs_cmd = app.add_subcommand("mgs", "maximal green sequences, one per line");
  input.attach(mgs_cmd);
  MgsBudget mgs_budget;
  bool trace_chain = false;
  mgs_cmd->add_option("--matrix,-m", matrix, "skew-symmetric matrix JSON");
  mgs_cmd->add_option("--max-depth", mgs_budget.max_depth)->check(CLI::PositiveNumber);
  mgs_cmd->add_option("--max-states", mgs_budget.max_states)->check(CLI::PositiveNumber);
  mgs_cmd->add_flag("--trace", trace_chain, "print the framed matrices after each sequence");
  mgs_cmd->callback([&] {
    action = [&] {
      const IntMatrix b = matrix.empty() ? exchange_matrix(input.get()) : parse_exchange_matrix(matrix);
      const auto r = find_mgs(b, mgs_budget);
      for (const auto& s : r.sequences) {
        out << join(s.directions) << '\n';
        if (trace_chain)
          for (const auto& f : s.matrices) out << "  " << matrix_to_json(f).dump() << '\n';
      }
      if (!r.complete) err << "search budget exhausted after " << r.states << " states; list may be partial\n";
    };
  });

  auto* barcode_cmd = app.add_subcommand("barcode", "stable barcode of a dimension vector on linear A_n");
  std::string dims, svg_path;
  barcode_cmd->add_option("dims", dims, "comma-separated dimension vector, e.g. 3,4,2")->required();
  barcode_cmd->add_option("--svg", svg_path, "write the bar picture here");
  barcode_cmd->callback([&] {
    action = [&] {
      const auto code = stable_barcode(parse_dims(dims));
      out << render_text(code) << '\n';
      if (!svg_path.empty()) write_file(svg_path, render_svg(code));
    };
  });

  auto* serve_cmd = app.add_subcommand("serve", "start the session service");
  ServeOptions serve;
  serve_cmd->add_option("--host", serve.host);
  serve_cmd->add_option("--port", serve.port)->check(CLI::Range(0, 65535));
  serve_cmd->add_option("--static", serve.static_dir, "directory served at /");
  serve_cmd->callback([&] {
    action = [&] {
      ExplorerService service;
      HttpServer server(service, serve);
      const int port = server.start();
      out << "listening on " << serve.host << ':' << port << std::endl;
      server.run();
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    if (auto* sub = app.get_subcommands().empty() ? nullptr : app.get_subcommands().front()) err << sub->help();
    return 2;
  }
  try {
    action();
  } catch (const CLI::RequiredError& e) {
    err << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << e.what() << '\n';
    return 1;
  } catch (const Json::exception& e) {
    err << "ParseError: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace quiverlab
