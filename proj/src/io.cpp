#include "fmc/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "fmc/errors.hpp"

namespace fmc::io {

namespace {

std::size_t sz(int i) { return static_cast<std::size_t>(i); }

[[noreturn]] void malformed(const std::string& what) {
  throw DomainError("parse_error", what);
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    malformed(std::string("missing field '") + key + "'");
  }
  return j.at(key);
}

int get_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) malformed(std::string(what) + " must be an integer");
  return j.get<int>();
}

double get_number(const Json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "inf" || s == "Infinity") return kInf;
  }
  malformed("expected a number");
}

Json vec_json(const Vec& v) {
  Json out = Json::array();
  for (Eigen::Index c = 0; c < v.size(); ++c) out.push_back(v[c]);
  return out;
}

Vec vec_from(const Json& j, int m) {
  if (!j.is_array() || static_cast<int>(j.size()) != m) {
    malformed("vector of length " + std::to_string(m) + " expected");
  }
  Vec v(m);
  for (int c = 0; c < m; ++c) {
    v[c] = get_number(j[sz(c)]);
    if (!std::isfinite(v[c])) malformed("coordinates must be finite");
  }
  return v;
}

std::vector<Vec> vecs_from(const Json& j, int m) {
  if (!j.is_array()) malformed("list of vectors expected");
  std::vector<Vec> out;
  for (const auto& e : j) out.push_back(vec_from(e, m));
  return out;
}

Json vecs_json(const std::vector<Vec>& vs) {
  Json out = Json::array();
  for (const auto& v : vs) out.push_back(vec_json(v));
  return out;
}

Json ratio_json(double v) {
  if (std::isinf(v)) return "inf";
  return v;
}

std::string key(std::initializer_list<int> zero_based) {
  std::string s;
  for (int i : zero_based) {
    if (!s.empty()) s += ",";
    s += std::to_string(i + 1);
  }
  return s;
}

bool is_scalar(const Json& j) { return !j.is_array() && !j.is_object(); }

void dump_into(const Json& j, std::string& out, int indent) {
  const std::string pad(sz(indent), ' ');
  const std::string inner(sz(indent + 2), ' ');
  switch (j.type()) {
    case Json::value_t::number_float:
      out += format_double(j.get<double>());
      return;
    case Json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      const bool flat = std::all_of(j.begin(), j.end(), is_scalar);
      out += "[";
      bool first = true;
      for (const auto& e : j) {
        if (!first) out += flat ? ", " : ",";
        first = false;
        if (!flat) out += "\n" + inner;
        dump_into(e, out, indent + 2);
      }
      if (!flat) out += "\n" + pad;
      out += "]";
      return;
    }
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{";
      bool first = true;
      for (const auto& [k, v] : j.items()) {
        if (!first) out += ",";
        first = false;
        out += "\n" + inner + Json(k).dump() + ": ";
        dump_into(v, out, indent + 2);
      }
      out += "\n" + pad + "}";
      return;
    }
    default:
      out += j.dump();
      return;
  }
}

}  // namespace

std::string format_double(double v) {
  if (std::isinf(v)) return v > 0 ? "\"inf\"" : "\"-inf\"";
  if (std::isnan(v)) return "\"nan\"";
  if (v == 0.0) v = 0.0;  // drop the sign of negative zero
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  std::string s(buf);
  // Keep a marker of floating type so integral values read back as floats.
  if (s.find_first_of(".eE") == std::string::npos) s += ".0";
  return s;
}

std::string dump(const Json& j) {
  std::string out;
  dump_into(j, out, 0);
  out += "\n";
  return out;
}

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw DomainError("parse_error", e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("io", "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DomainError("io", "cannot write '" + path + "'");
  out << text;
}

// ---------------------------------------------------------------------------

Json to_json(const FTree& t) {
  Json j;
  j["n"] = t.leaf_count();
  j["parents"] = t.parents();
  j["labels"] = t.labels();
  return j;
}

FTree tree_from_json(const Json& j) {
  const auto parents = field(j, "parents").get<std::vector<int>>();
  const auto labels = field(j, "labels").get<std::vector<int>>();
  FTree t = FTree::from_parents(parents, labels);
  if (j.contains("n") && get_int(j.at("n"), "n") != t.leaf_count()) {
    malformed("'n' disagrees with the labels");
  }
  return t;
}

Json to_json(const Parenthesization& p) {
  Json sets = Json::array();
  for (LeafSet s : p.sets) sets.push_back(labels_of(s));
  Json j;
  j["n"] = p.n;
  j["sets"] = sets;
  return j;
}

Parenthesization paren_from_json(const Json& j) {
  const int n = get_int(field(j, "n"), "n");
  std::vector<LeafSet> sets;
  for (const auto& s : field(j, "sets")) {
    LeafSet mask = 0;
    for (const auto& l : s) {
      const int label = get_int(l, "label");
      if (label < 1 || label > n) malformed("label out of range");
      mask |= leaf_bit(label);
    }
    sets.push_back(mask);
  }
  return make_parenthesization(n, std::move(sets));
}

Json to_json(const ExclusionRelation& r) {
  Json j;
  j["n"] = r.size();
  j["triples"] = r.triples();
  return j;
}

ExclusionRelation exclusion_from_json(const Json& j) {
  ExclusionRelation r(get_int(field(j, "n"), "n"));
  for (const auto& t : field(j, "triples")) {
    if (!t.is_array() || t.size() != 3) malformed("triples need three labels");
    r.insert(get_int(t[0], "label"), get_int(t[1], "label"), get_int(t[2], "label"));
  }
  return r;
}

Json to_json(const SetMap& s) {
  Json map = Json::array();
  for (int v : s.values) map.push_back(v + 1);
  Json j;
  j["m"] = s.domain;
  j["n"] = s.codomain;
  j["map"] = map;
  return j;
}

SetMap setmap_from_json(const Json& j) {
  const int n = get_int(field(j, "n"), "n");
  std::vector<int> vals;
  for (const auto& v : field(j, "map")) vals.push_back(get_int(v, "map value") - 1);
  if (j.contains("m") && get_int(j.at("m"), "m") != static_cast<int>(vals.size())) {
    malformed("'m' disagrees with the map length");
  }
  return SetMap::from_values(n, std::move(vals));
}

Json to_json(const Configuration& c) {
  Json j;
  j["m"] = c.m;
  j["points"] = vecs_json(c.points);
  return j;
}

Configuration configuration_from_json(const Json& j) {
  const int m = get_int(field(j, "m"), "m");
  if (m < 1) malformed("'m' must be positive");
  return make_configuration(m, vecs_from(field(j, "points"), m));
}

namespace {

void simplicial_fields(const SimplicialPoint& p, Json& j) {
  j["m"] = p.m;
  j["x"] = vecs_json(p.x);
  Json u = Json::object();
  for (int i = 0; i < p.n(); ++i)
    for (int k = 0; k < p.n(); ++k)
      if (i != k) u[key({i, k})] = vec_json(p.dir(i, k));
  j["u"] = u;
}

void read_simplicial(const Json& j, SimplicialPoint& p) {
  const int m = get_int(field(j, "m"), "m");
  if (m < 1) malformed("'m' must be positive");
  const auto x = vecs_from(field(j, "x"), m);
  const int n = static_cast<int>(x.size());
  p = SimplicialPoint::zeros(n, m);
  p.x = x;
  const Json& u = field(j, "u");
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      if (i == k) continue;
      const std::string name = key({i, k});
      if (!u.contains(name)) malformed("missing direction " + name);
      p.dir(i, k) = vec_from(u.at(name), m);
    }
  if (j.contains("frames")) {
    p.frames = vecs_from(j.at("frames"), m);
    if (static_cast<int>(p.frames.size()) != n) malformed("one frame per point expected");
  }
  p.renormalize();
}

}  // namespace

Json to_json(const SimplicialPoint& p) {
  Json j;
  simplicial_fields(p, j);
  if (p.framed()) j["frames"] = vecs_json(p.frames);
  return j;
}

SimplicialPoint simplicial_from_json(const Json& j) {
  SimplicialPoint p;
  read_simplicial(j, p);
  return p;
}

Json to_json(const AmbientPoint& a) {
  Json j;
  simplicial_fields(a, j);
  Json d = Json::object();
  for (int i = 0; i < a.n(); ++i)
    for (int k = 0; k < a.n(); ++k)
      for (int l = 0; l < a.n(); ++l)
        if (i != k && k != l && i != l) d[key({i, k, l})] = ratio_json(a.ratio(i, k, l));
  j["d"] = d;
  if (a.framed()) j["frames"] = vecs_json(a.frames);
  return j;
}

AmbientPoint ambient_from_json(const Json& j) {
  AmbientPoint a;
  read_simplicial(j, a);
  const int n = a.n();
  a.d.assign(sz(n) * sz(n) * sz(n), 0.0);
  const Json& d = field(j, "d");
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      for (int l = 0; l < n; ++l) {
        if (i == k || k == l || i == l) continue;
        const std::string name = key({i, k, l});
        if (!d.contains(name)) malformed("missing ratio " + name);
        const double v = get_number(d.at(name));
        if (!(v >= 0.0)) malformed("ratio " + name + " must be non-negative");
        a.ratio(i, k, l) = v;
      }
  return a;
}

Json to_json(const StratumPoint& s) {
  Json j;
  j["tree"] = to_json(s.tree);
  j["m"] = s.m;
  j["root"] = vecs_json(s.root);
  Json vs = Json::array();
  for (const auto& cfg : s.vertex_configs) vs.push_back(vecs_json(cfg));
  j["vertices"] = vs;
  j["t"] = s.scales;
  return j;
}

StratumPoint stratum_from_json(const Json& j) {
  StratumPoint s;
  s.tree = tree_from_json(field(j, "tree"));
  s.m = get_int(field(j, "m"), "m");
  if (s.m < 1) malformed("'m' must be positive");
  s.root = vecs_from(field(j, "root"), s.m);
  for (const auto& cfg : field(j, "vertices")) s.vertex_configs.push_back(vecs_from(cfg, s.m));
  for (const auto& t : field(j, "t")) s.scales.push_back(get_number(t));
  return s;
}

Json to_json(const Verdict& v) {
  Json j;
  j["pass"] = v.pass();
  j["max_residual"] = v.max_residual;
  Json list = Json::array();
  for (const auto& viol : v.violations) {
    Json e;
    e["condition"] = static_cast<int>(viol.condition);
    e["name"] = condition_name(viol.condition);
    e["indices"] = viol.indices;
    e["residual"] = ratio_json(viol.residual);
    list.push_back(e);
  }
  j["violations"] = list;
  return j;
}

Json to_json(const FacePoset& p) {
  Json j;
  j["n"] = p.n;
  Json faces = Json::array();
  for (const auto& f : p.faces) {
    Json e;
    e["dim"] = f.dim;
    e["sets"] = to_json(f.tree.paren())["sets"];
    e["tree"] = to_json(f.tree);
    faces.push_back(e);
  }
  j["faces"] = faces;
  Json covers = Json::array();
  for (const auto& [a, b] : p.covers) covers.push_back(Json::array({a, b}));
  j["covers"] = covers;
  return j;
}

Json to_json(const FaceParams& p) {
  Json j;
  j["root"] = p.root_interior;
  j["vertices"] = p.vertex_configs;
  return j;
}

FaceParams face_params_from_json(const Json& j) {
  FaceParams p;
  for (const auto& v : field(j, "root")) p.root_interior.push_back(get_number(v));
  for (const auto& cfg : field(j, "vertices")) {
    std::vector<double> c;
    for (const auto& v : cfg) c.push_back(get_number(v));
    p.vertex_configs.push_back(std::move(c));
  }
  return p;
}

}  // namespace fmc::io
