#include "fmc/cli.hpp"

#include <CLI11.hpp>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#include "fmc/assoc.hpp"
#include "fmc/canonical.hpp"
#include "fmc/errors.hpp"
#include "fmc/functorial.hpp"
#include "fmc/io.hpp"
#include "fmc/simplicial.hpp"

namespace fmc::cli {

namespace {

using io::Json;

struct Options {
  std::string in;
  std::string out;
  std::string tree;
  std::string map;
  std::string assoc;
  std::string params;
  std::string variant;
  std::string format;
  std::string manifold = "euclidean";
  std::string to;
  std::string edges;
  std::string labels;
  std::string triple;
  double tol = kDefaultTol;
  double eps = 0.0;
  std::uint64_t seed = 0;
  int n = 0;
  int m = 2;
  int index = 1;
  int k = 1;
  int steps = 40;
  bool trunk = false;
};

struct Result {
  std::string text;
  int status = 0;
};

using Handler = std::function<Result(const Options&)>;

struct Command {
  CommandInfo info;
  std::vector<std::string> flags;  // "name" optional, "name!" required
  Handler handler;
};

Json load(const std::string& path) { return io::parse(io::read_file(path)); }

std::vector<int> parse_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw DomainError("parse_error", "'" + item + "' is not an integer");
    }
  }
  return out;
}

Manifold manifold_of(const Options& o, int m) {
  if (o.manifold == "sphere") return Manifold::sphere(m - 1);
  return Manifold::euclidean(m);
}

std::string csv_double(double v) {
  if (std::isinf(v)) return "inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

Result json_result(const Json& j) { return {io::dump(j), 0}; }

Result verdict_result(const Verdict& v) { return {io::dump(io::to_json(v)), v.pass() ? 0 : 1}; }

std::string variant_or(const Options& o, const std::string& fallback) {
  return o.variant.empty() ? fallback : o.variant;
}

// --- trees -------------------------------------------------------------------

Result trees_enumerate(const Options& o) {
  const auto trees = enumerate_trees(o.n, parse_tree_variant(variant_or(o, "full")));
  if (o.format == "dot") {
    std::string text;
    for (const auto& t : trees) text += to_dot(t);
    return {text, 0};
  }
  Json list = Json::array();
  for (const auto& t : trees) {
    Json e = io::to_json(t);
    e["codim"] = codim(t);
    e["sets"] = io::to_json(t.paren())["sets"];
    list.push_back(e);
  }
  Json j;
  j["n"] = o.n;
  j["variant"] = variant_or(o, "full");
  j["count"] = trees.size();
  j["trees"] = list;
  return json_result(j);
}

Result trees_contract(const Options& o) {
  const FTree t = io::tree_from_json(load(o.in));
  const auto edges = parse_list(o.edges);
  const FTree c = contract(t, edges);
  if (o.format == "dot") return {to_dot(c), 0};
  return json_result(io::to_json(c));
}

Result trees_prune(const Options& o) {
  const FTree t = io::tree_from_json(load(o.in));
  const SetMap sigma = io::setmap_from_json(load(o.map));
  const FTree p = prune(t, sigma);
  if (o.format == "dot") return {to_dot(p), 0};
  return json_result(io::to_json(p));
}

Result trees_poset(const Options& o) {
  const auto trees = enumerate_trees(o.n, parse_tree_variant(variant_or(o, "full")));
  if (o.format != "json") return {hasse_dot(trees), 0};
  Json list = Json::array();
  for (const auto& t : trees) list.push_back(io::to_json(t.paren())["sets"]);
  Json covers = Json::array();
  for (std::size_t a = 0; a < trees.size(); ++a)
    for (std::size_t b = 0; b < trees.size(); ++b)
      if (codim(trees[a]) == codim(trees[b]) + 1 && leq(trees[a], trees[b])) {
        covers.push_back(Json::array({a, b}));
      }
  Json j;
  j["n"] = o.n;
  j["trees"] = list;
  j["covers"] = covers;
  return json_result(j);
}

Result trees_convert(const Options& o) {
  const Json j = load(o.in);
  if (j.contains("parents")) {
    const FTree t = io::tree_from_json(j);
    if (o.to == "exclusion") return json_result(io::to_json(exclusion_of_tree(t)));
    if (o.to == "tree") return json_result(io::to_json(t));
    return json_result(io::to_json(paren_of_tree(t)));
  }
  FTree t = FTree::corolla(1);
  if (j.contains("triples")) {
    t = tree_of_exclusion(io::exclusion_from_json(j), o.trunk);
  } else if (j.contains("sets")) {
    t = tree_of_paren(io::paren_from_json(j));
  } else {
    throw DomainError("parse_error", "input is not a tree, parenthesization or "
                                     "exclusion relation");
  }
  if (o.to == "paren") return json_result(io::to_json(t.paren()));
  if (o.to == "exclusion") return json_result(io::to_json(exclusion_of_tree(t)));
  return json_result(io::to_json(t));
}

Result trees_join(const Options& o) {
  const FTree t = io::tree_from_json(load(o.in));
  const auto labels = parse_list(o.labels);
  const int v = join(t, labels);
  Json j;
  j["vertex"] = v;
  j["leaves"] = labels_of(t.leaves_over(v));
  return json_result(j);
}

Result trees_info(const Options& o) {
  const FTree t = io::tree_from_json(load(o.in));
  Json j;
  j["n"] = t.leaf_count();
  j["codim"] = codim(t);
  j["trunk"] = t.has_trunk();
  j["internal_vertices"] = t.internal_vertices();
  j["sets"] = io::to_json(t.paren())["sets"];
  return json_result(j);
}

// --- point -------------------------------------------------------------------

Result point_alpha(const Options& o) {
  return json_result(io::to_json(alpha(io::configuration_from_json(load(o.in)))));
}

Result point_normalize(const Options& o) {
  return json_result(io::to_json(normalize(io::configuration_from_json(load(o.in)))));
}

Result point_classify(const Options& o) {
  return json_result(io::to_json(tree_of(io::ambient_from_json(load(o.in)), o.tol)));
}

Result point_membership(const Options& o) {
  const Json j = load(o.in);
  if (variant_or(o, "canonical") == "simplicial") {
    const SimplicialPoint p = io::simplicial_from_json(j);
    return verdict_result(membership_simplicial(p, manifold_of(o, p.m), o.tol));
  }
  if (variant_or(o, "canonical") != "canonical") {
    throw DomainError("invalid_argument", "variant must be canonical or simplicial");
  }
  const AmbientPoint a = io::ambient_from_json(j);
  return verdict_result(membership_canonical(a, manifold_of(o, a.m), o.tol));
}

Result point_project(const Options& o) {
  return json_result(
      io::to_json(base_configuration(io::simplicial_from_json(load(o.in)))));
}

Result point_ratio(const Options& o) {
  const SimplicialPoint p = io::simplicial_from_json(load(o.in));
  const auto t = parse_list(o.triple);
  if (t.size() != 3) throw DomainError("parse_error", "--triple needs three indices");
  for (int i : t) {
    if (i < 1 || i > p.n()) throw DomainError("out_of_range", "index out of range");
  }
  if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2]) {
    throw DomainError("not_distinct", "indices must be distinct");
  }
  const RatioEstimate r = ratio_from_directions(p, t[0] - 1, t[1] - 1, t[2] - 1, o.tol);
  Json j;
  j["determined"] = r.determined;
  if (r.determined) j["value"] = r.value;
  return json_result(j);
}

Result point_permute(const Options& o) {
  const AmbientPoint a = io::ambient_from_json(load(o.in));
  return json_result(io::to_json(permute(io::setmap_from_json(load(o.map)), a)));
}

// --- chart -------------------------------------------------------------------

Result chart_expand(const Options& o) {
  return json_result(io::to_json(expand_chart(io::stratum_from_json(load(o.in)))));
}

Result chart_invert(const Options& o) {
  const AmbientPoint a = io::ambient_from_json(load(o.in));
  const FTree t = io::tree_from_json(load(o.tree));
  return json_result(io::to_json(invert_chart(t, a, o.tol)));
}

Result chart_sample(const Options& o) {
  const FTree t = io::tree_from_json(load(o.in));
  return json_result(io::to_json(stratum_sample(t, o.m, o.seed)));
}

// --- simplicial --------------------------------------------------------------

Result simplicial_project(const Options& o) {
  return json_result(io::to_json(project_Q(io::ambient_from_json(load(o.in)))));
}

Result simplicial_membership(const Options& o) {
  const SimplicialPoint p = io::simplicial_from_json(load(o.in));
  return verdict_result(membership_simplicial(p, manifold_of(o, p.m), o.tol));
}

Result simplicial_classify(const Options& o) {
  return json_result(
      io::to_json(tree_of_directions(io::simplicial_from_json(load(o.in)), o.tol)));
}

Result simplicial_reconstruct(const Options& o) {
  return json_result(
      io::to_json(reconstruct_rho(io::simplicial_from_json(load(o.in)), o.tol)));
}

Result simplicial_approx(const Options& o) {
  return json_result(
      io::to_json(approx_family(io::simplicial_from_json(load(o.in)), o.eps, o.tol)));
}

std::string probe_label(const Vec& v) {
  // Recover the lattice composition from the normalized probe.
  const double scale = 3.0 / v.sum();
  std::string s;
  for (Eigen::Index c = 0; c < v.size(); ++c) {
    if (!s.empty()) s += " ";
    s += std::to_string(static_cast<int>(std::lround(v[c] * scale)));
  }
  return s;
}

Result simplicial_residuals(const Options& o) {
  const SimplicialPoint p = io::simplicial_from_json(load(o.in));
  const int n = p.n();
  std::string text = "kind,indices,v,w,residual,ok\n";
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        const Vec& a = p.dir(i, j);
        const Vec& b = p.dir(j, k);
        const Vec& c = p.dir(k, i);
        text += "three_dependence," + std::to_string(i + 1) + " " +
                std::to_string(j + 1) + " " + std::to_string(k + 1) + ",,," +
                csv_double(dependence_gap(a, b, c)) + "," +
                (three_dependent(a, b, c, o.tol) ? "true" : "false") + "\n";
      }
  const auto probes = four_consistency_probes(p.m);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        for (int l = k + 1; l < n; ++l) {
          const auto f = FourDirections::from_point(p, {i, j, k, l});
          const std::string idx = std::to_string(i + 1) + " " + std::to_string(j + 1) +
                                  " " + std::to_string(k + 1) + " " +
                                  std::to_string(l + 1);
          for (const auto& v : probes)
            for (const auto& w : probes) {
              const double r = four_consistency_residual(f, v, w);
              text += "four_consistency," + idx + "," + probe_label(v) + "," +
                      probe_label(w) + "," + csv_double(r) + "," +
                      (std::abs(r) <= o.tol ? "true" : "false") + "\n";
            }
        }
  return {text, 0};
}

// --- maps --------------------------------------------------------------------

Result maps_project(const Options& o) {
  const Json j = load(o.in);
  const SetMap sigma = io::setmap_from_json(load(o.map));
  if (j.contains("d")) {
    return json_result(io::to_json(project_sigma(sigma, io::ambient_from_json(j))));
  }
  return json_result(io::to_json(project_sigma(sigma, io::simplicial_from_json(j))));
}

Result maps_pullback(const Options& o) {
  const SimplicialPoint p = io::simplicial_from_json(load(o.in));
  return json_result(io::to_json(F_sigma(io::setmap_from_json(load(o.map)), p)));
}

Result maps_diagonal(const Options& o) {
  const AmbientPoint p = io::ambient_from_json(load(o.in));
  std::optional<AmbientPoint> assoc;
  if (!o.assoc.empty()) assoc = io::ambient_from_json(load(o.assoc));
  return json_result(io::to_json(diagonal(p, o.index - 1, o.k, assoc, o.tol)));
}

Result maps_cosimplicial(const Options& o) {
  const SimplicialPoint p = io::simplicial_from_json(load(o.in));
  const SetMap sigma = io::setmap_from_json(load(o.map));
  return json_result(io::to_json(cosimplicial_map(sigma, p, o.tol)));
}

// --- assoc -------------------------------------------------------------------

Result assoc_faces(const Options& o) {
  const FacePoset poset = face_poset(o.n);
  if (o.format == "dot") return {poset.to_dot(), 0};
  return json_result(io::to_json(poset));
}

Result assoc_fvector(const Options& o) {
  const auto f = f_vector(o.n);
  if (o.format == "json") {
    Json j;
    j["n"] = o.n;
    j["f_vector"] = f;
    return json_result(j);
  }
  std::string text;
  for (std::size_t q = 0; q < f.size(); ++q) {
    text += (q ? "," : "") + std::to_string(f[q]);
  }
  return {text + "\n", 0};
}

Result assoc_realize(const Options& o) {
  const FTree t = io::tree_from_json(load(o.in));
  const FaceParams params =
      o.params.empty() ? default_face_params(t) : io::face_params_from_json(load(o.params));
  return json_result(io::to_json(realize_face(t, params)));
}

// --- degenerate --------------------------------------------------------------

Result degenerate(const Options& o) {
  StratumPoint s = io::stratum_from_json(load(o.in));
  if (o.steps < 0) throw DomainError("out_of_range", "--steps must be non-negative");
  const auto base = s.scales;
  const int n = s.tree.leaf_count();
  std::string text = "k,factor";
  for (int i = 0; i < n; ++i)
    for (int c = 0; c < s.m; ++c) text += ",x" + std::to_string(i + 1) + "_" + std::to_string(c + 1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j)
        for (int c = 0; c < s.m; ++c)
          text += ",u" + std::to_string(i + 1) + "_" + std::to_string(j + 1) + "_" +
                  std::to_string(c + 1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (i != j && j != k && i != k)
          text += ",d" + std::to_string(i + 1) + "_" + std::to_string(j + 1) + "_" +
                  std::to_string(k + 1);
  text += "\n";
  auto row = [&](const std::string& label, double factor) {
    for (std::size_t q = 0; q < base.size(); ++q) s.scales[q] = factor * base[q];
    const AmbientPoint a = expand_chart(s);
    text += label + "," + csv_double(factor);
    for (int i = 0; i < n; ++i)
      for (int c = 0; c < s.m; ++c) text += "," + csv_double(a.x[static_cast<std::size_t>(i)][c]);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j)
          for (int c = 0; c < s.m; ++c) text += "," + csv_double(a.dir(i, j)[c]);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
          if (i != j && j != k && i != k) text += "," + csv_double(a.ratio(i, j, k));
    text += "\n";
  };
  for (int k = 0; k <= o.steps; ++k) row(std::to_string(k), std::ldexp(1.0, -k));
  row("limit", 0.0);
  return {text, 0};
}

// -----------------------------------------------------------------------------

const std::vector<Command>& commands() {
  static const std::vector<Command> table = {
      {{"trees", "enumerate", {"enumerate_trees"}, "list all trees on n leaves"},
       {"n!", "variant", "format"}, trees_enumerate},
      {{"trees", "contract", {"contract"}, "contract internal edges (by terminal vertex id)"},
       {"in!", "edges", "format"}, trees_contract},
      {{"trees", "prune", {"prune"}, "prune a tree along an injective map"},
       {"in!", "map!", "format"}, trees_prune},
      {{"trees", "poset", {"leq"}, "Hasse diagram of the contraction order"},
       {"n!", "variant", "format"}, trees_poset},
      {{"trees", "convert",
        {"paren_of_tree", "tree_of_paren", "exclusion_of_tree", "tree_of_exclusion"},
        "convert between trees, parenthesizations and exclusion relations"},
       {"in!", "to", "trunk"}, trees_convert},
      {{"trees", "join", {"join"}, "deepest vertex under the given leaves"},
       {"in!", "labels!"}, trees_join},
      {{"trees", "info", {"codim"}, "codimension and internal vertices"},
       {"in!"}, trees_info},
      {{"point", "alpha", {"alpha"}, "coordinates of a configuration"},
       {"in!"}, point_alpha},
      {{"point", "normalize", {"normalize"}, "centre and rescale a configuration"},
       {"in!"}, point_normalize},
      {{"point", "classify", {"tree_of"}, "stratum of an ambient point"},
       {"in!", "tol"}, point_classify},
      {{"point", "membership", {"membership_canonical"}, "membership verdict"},
       {"in!", "tol", "variant", "manifold"}, point_membership},
      {{"point", "project", {"base_configuration"}, "underlying points"},
       {"in!"}, point_project},
      {{"point", "ratio", {"ratio_from_directions"}, "ratio forced by directions"},
       {"in!", "triple!", "tol"}, point_ratio},
      {{"point", "permute", {"permute"}, "relabel indices by a permutation"},
       {"in!", "map!"}, point_permute},
      {{"chart", "expand", {"expand_chart"}, "ambient point of a stratum point"},
       {"in!"}, chart_expand},
      {{"chart", "invert", {"invert_chart"}, "stratum point of an ambient point"},
       {"in!", "tree!", "tol"}, chart_invert},
      {{"chart", "sample", {"stratum_sample"}, "random stratum point for a tree"},
       {"in!", "m", "seed"}, chart_sample},
      {{"simplicial", "project", {"project_Q"}, "forget the ratios"},
       {"in!"}, simplicial_project},
      {{"simplicial", "membership", {"membership_simplicial"}, "membership verdict"},
       {"in!", "tol", "manifold"}, simplicial_membership},
      {{"simplicial", "classify", {"tree_of_directions"}, "stratum from directions"},
       {"in!", "tol"}, simplicial_classify},
      {{"simplicial", "reconstruct", {"reconstruct_rho"}, "configuration from directions"},
       {"in!", "tol"}, simplicial_reconstruct},
      {{"simplicial", "approx", {"approx_family"}, "open configuration near a point"},
       {"in!", "eps!", "tol"}, simplicial_approx},
      {{"simplicial", "residuals", {"three_dependent", "four_consistency_residual"},
        "CSV report of dependence and four-consistency residuals"},
       {"in!", "tol"}, simplicial_residuals},
      {{"maps", "project", {"project_sigma"}, "projection along an injective map"},
       {"in!", "map!"}, maps_project},
      {{"maps", "pullback", {"F_sigma"}, "pull back a framed point along a map"},
       {"in!", "map!"}, maps_pullback},
      {{"maps", "diagonal", {"diagonal"}, "replace an index by coincident copies"},
       {"in!", "index!", "k", "assoc", "tol"}, maps_diagonal},
      {{"maps", "cosimplicial", {"cosimplicial_map"}, "cosimplicial structure map"},
       {"in!", "map!", "tol"}, maps_cosimplicial},
      {{"assoc", "faces", {"face_poset"}, "face poset of the associahedron"},
       {"n!", "format"}, assoc_faces},
      {{"assoc", "fvector", {"f_vector"}, "face counts by dimension"},
       {"n!", "format"}, assoc_fvector},
      {{"assoc", "realize", {"realize_face"}, "point on a face"},
       {"in!", "params"}, assoc_realize},
      {{"", "degenerate", {}, "CSV trajectory as all scales shrink by powers of 2"},
       {"in!", "steps"}, degenerate},
  };
  return table;
}

void add_flags(CLI::App* sub, Options& o, const std::vector<std::string>& flags) {
  for (std::string f : flags) {
    const bool required = !f.empty() && f.back() == '!';
    if (required) f.pop_back();
    CLI::Option* opt = nullptr;
    if (f == "in") opt = sub->add_option("--in", o.in, "input JSON file");
    if (f == "tree") opt = sub->add_option("--tree", o.tree, "tree JSON file");
    if (f == "map") opt = sub->add_option("--map", o.map, "map JSON file");
    if (f == "assoc") opt = sub->add_option("--assoc", o.assoc, "ordered parameter point");
    if (f == "params") opt = sub->add_option("--params", o.params, "face parameter JSON");
    if (f == "variant") opt = sub->add_option("--variant", o.variant, "variant");
    if (f == "format") {
      opt = sub->add_option("--format", o.format, "output format")
                ->check(CLI::IsMember({"json", "dot", "csv"}));
    }
    if (f == "manifold") {
      opt = sub->add_option("--manifold", o.manifold, "euclidean or sphere")
                ->check(CLI::IsMember({"euclidean", "sphere"}));
    }
    if (f == "to") {
      opt = sub->add_option("--to", o.to, "target form")
                ->check(CLI::IsMember({"tree", "paren", "exclusion"}));
    }
    if (f == "edges") opt = sub->add_option("--edges", o.edges, "comma-separated vertex ids");
    if (f == "labels") opt = sub->add_option("--labels", o.labels, "comma-separated labels");
    if (f == "triple") opt = sub->add_option("--triple", o.triple, "three indices i,j,k");
    if (f == "tol") {
      opt = sub->add_option("--tol", o.tol, "tolerance")->check(CLI::PositiveNumber);
    }
    if (f == "eps") opt = sub->add_option("--eps", o.eps, "family parameter in (0,1)");
    if (f == "seed") opt = sub->add_option("--seed", o.seed, "random seed");
    if (f == "n") opt = sub->add_option("--n", o.n, "size");
    if (f == "m") opt = sub->add_option("--m", o.m, "ambient dimension");
    if (f == "index") opt = sub->add_option("--index", o.index, "index to double (1-based)");
    if (f == "k") opt = sub->add_option("--k", o.k, "number of extra copies");
    if (f == "steps") opt = sub->add_option("--steps", o.steps, "number of halvings");
    if (f == "trunk") opt = sub->add_flag("--trunk", o.trunk, "add the full set");
    if (opt != nullptr && required) opt->required();
  }
  sub->add_option("--out", o.out, "output file (default: standard output)");
}

}  // namespace

const std::vector<CommandInfo>& command_table() {
  static const std::vector<CommandInfo> infos = [] {
    std::vector<CommandInfo> out;
    for (const auto& c : commands()) out.push_back(c.info);
    out.back().operations = {};
    return out;
  }();
  return infos;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Compactified configuration spaces: coordinates, strata, charts"};
  app.name("fmc");
  app.require_subcommand(1, 1);
  std::map<std::string, CLI::App*> groups;
  std::vector<std::pair<CLI::App*, const Command*>> leaves;
  for (const auto& c : commands()) {
    CLI::App* parent = &app;
    if (!c.info.group.empty()) {
      auto it = groups.find(c.info.group);
      if (it == groups.end()) {
        CLI::App* g = app.add_subcommand(c.info.group, c.info.group + " commands");
        g->require_subcommand(1, 1);
        it = groups.emplace(c.info.group, g).first;
      }
      parent = it->second;
    }
    CLI::App* sub = parent->add_subcommand(c.info.name, c.info.summary);
    add_flags(sub, o, c.flags);
    leaves.emplace_back(sub, &c);
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  const Command* chosen = nullptr;
  for (const auto& [sub, cmd] : leaves) {
    if (sub->parsed()) chosen = cmd;
  }
  if (chosen == nullptr) {
    err << "no command given\n";
    return 2;
  }
  try {
    const Result r = chosen->handler(o);
    if (o.out.empty()) {
      out << r.text;
    } else {
      io::write_file(o.out, r.text);
    }
    return r.status;
  } catch (const DomainError& e) {
    Json j;
    j["error"] = e.what();
    j["kind"] = e.kind();
    err << j.dump() << "\n";
    return 1;
  } catch (const nlohmann::json::exception& e) {
    Json j;
    j["error"] = e.what();
    j["kind"] = "parse_error";
    err << j.dump() << "\n";
    return 1;
  }
}

}  // namespace fmc::cli
