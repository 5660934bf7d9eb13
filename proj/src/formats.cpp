#include "icdraw/formats.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace icdraw {

using json = nlohmann::ordered_json;

namespace {

std::string rational_str(const Rational& r) {
  std::ostringstream os;
  os << boost::multiprecision::numerator(r) << "/" << boost::multiprecision::denominator(r);
  return os.str();
}

Rational rational_parse(const std::string& s) {
  auto slash = s.find('/');
  using boost::multiprecision::cpp_int;
  if (slash == std::string::npos) return Rational(cpp_int(s));
  return Rational(cpp_int(s.substr(0, slash)), cpp_int(s.substr(slash + 1)));
}

json edges_json(const std::vector<std::pair<int, int>>& edges) {
  json a = json::array();
  for (auto [u, v] : edges) a.push_back(json::array({u, v}));
  return a;
}

std::vector<std::pair<int, int>> edges_parse(const json& a) {
  std::vector<std::pair<int, int>> out;
  for (const auto& e : a) out.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
  return out;
}

const char* status_name(PairStatus s) {
  switch (s) {
    case PairStatus::witnessed: return "witnessed";
    case PairStatus::exhausted_no_path: return "exhausted_no_path";
    default: return "budget_exceeded";
  }
}

PairStatus status_parse(const std::string& s) {
  if (s == "witnessed") return PairStatus::witnessed;
  if (s == "exhausted_no_path") return PairStatus::exhausted_no_path;
  if (s == "budget_exceeded") return PairStatus::budget_exceeded;
  throw std::runtime_error("unknown pair status: " + s);
}

}  // namespace

std::string property_name(PathProperty p) {
  switch (p) {
    case PathProperty::SA: return "sa";
    case PathProperty::IC: return "ic";
    case PathProperty::greedy: return "greedy";
    case PathProperty::monotone: return "monotone";
    default: return "strongly-monotone";
  }
}

PathProperty property_from_name(const std::string& name) {
  if (name == "sa") return PathProperty::SA;
  if (name == "ic") return PathProperty::IC;
  if (name == "greedy") return PathProperty::greedy;
  if (name == "monotone") return PathProperty::monotone;
  if (name == "strongly-monotone") return PathProperty::strongly_monotone;
  throw std::runtime_error("unknown property: " + name);
}

std::string content_hash(const std::string& text) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

// ---------------------------------------------------------------------------

std::string graph_to_json(const GraphFile& f) {
  json j;
  j["version"] = f.version;
  j["n"] = f.g.n;
  j["edges"] = edges_json(f.g.edges);
  if (f.g.rotation) j["rotation_system"] = *f.g.rotation;
  if (f.outer_face) j["outer_face"] = json::array({(*f.outer_face)[0], (*f.outer_face)[1], (*f.outer_face)[2]});
  return j.dump(2) + "\n";
}

GraphFile graph_from_json(const std::string& text) {
  json j = json::parse(text);
  GraphFile f;
  f.version = j.at("version").get<int>();
  int n = j.at("n").get<int>();
  if (n < 0) throw std::runtime_error("graph file: negative n");
  f.g = Graph(n);
  for (auto [u, v] : edges_parse(j.at("edges"))) f.g.add_edge(u, v);
  if (j.contains("rotation_system"))
    f.g.rotation = j.at("rotation_system").get<std::vector<std::vector<int>>>();
  if (j.contains("outer_face")) {
    auto a = j.at("outer_face");
    f.outer_face = {{a.at(0).get<int>(), a.at(1).get<int>(), a.at(2).get<int>()}};
  }
  return f;
}

// ---------------------------------------------------------------------------

LabelingFile labeling_to_file(const SchnyderLabeling& L) {
  LabelingFile f;
  f.outer = {L.r, L.g, L.b};
  for (int v = 0; v < int(L.parent.size()); ++v) {
    if (L.is_outer(v)) continue;
    for (int c = 0; c < 3; ++c) f.edges.push_back({v, L.parent[v][c], c});
  }
  return f;
}

SchnyderLabeling labeling_from_file(const LabelingFile& f, int n) {
  SchnyderLabeling L;
  L.r = f.outer[0];
  L.g = f.outer[1];
  L.b = f.outer[2];
  L.parent.assign(n, {-1, -1, -1});
  for (const auto& e : f.edges) L.parent[e[0]][e[2]] = e[1];
  return L;
}

std::string drawing_to_json(const DrawingFile& f) {
  json j;
  j["version"] = f.version;
  j["model"] = f.model;
  j["backend"] = f.backend;
  if (f.model == "poincare") {
    if (!f.hyp) throw std::runtime_error("drawing file: poincare model without hyp data");
    json h;
    h["orig_n"] = f.hyp->orig_n;
    h["n"] = f.hyp->g.n;
    h["edges"] = edges_json(f.hyp->g.edges);
    json cs = json::array();
    for (const auto& p : f.hyp->coords) cs.push_back(json::array({p.x, p.y}));
    h["coords"] = cs;
    json em = json::array();
    for (const auto& m : f.hyp->edge_mid) em.push_back(json::array({m[0], m[1], m[2]}));
    h["edge_mid"] = em;
    h["closing_arcs"] = edges_json(f.hyp->closing_arcs);
    j["poincare"] = h;
  } else if (f.backend == "rational") {
    json cs = json::array();
    for (const auto& p : f.coords_q)
      cs.push_back(json::array({rational_str(p.x), rational_str(p.y)}));
    j["coords"] = cs;
  } else {
    json cs = json::array();
    for (const auto& p : f.coords_f) cs.push_back(json::array({p.x, p.y}));
    j["coords"] = cs;
  }
  if (f.labeling) {
    json l;
    l["outer"] = json::array({f.labeling->outer[0], f.labeling->outer[1], f.labeling->outer[2]});
    json le = json::array();
    for (const auto& e : f.labeling->edges) le.push_back(json::array({e[0], e[1], e[2]}));
    l["edges"] = le;
    j["schnyder"] = l;
  }
  if (f.witnesses) {
    json w = json::array();
    for (const auto& [key, path] : *f.witnesses)
      w.push_back(json::array({key.first, key.second, json(path)}));
    j["witnesses"] = w;
  }
  return j.dump(2) + "\n";
}

DrawingFile drawing_from_json(const std::string& text) {
  json j = json::parse(text);
  DrawingFile f;
  f.version = j.at("version").get<int>();
  f.model = j.at("model").get<std::string>();
  f.backend = j.at("backend").get<std::string>();
  if (f.model == "poincare") {
    const json& h = j.at("poincare");
    HypDrawing d;
    d.orig_n = h.at("orig_n").get<int>();
    d.g = Graph(h.at("n").get<int>());
    for (auto [u, v] : edges_parse(h.at("edges"))) d.g.add_edge(u, v);
    for (const auto& p : h.at("coords"))
      d.coords.push_back(HPoint(p.at(0).get<double>(), p.at(1).get<double>()));
    for (const auto& m : h.at("edge_mid"))
      d.edge_mid.push_back({m.at(0).get<int>(), m.at(1).get<int>(), m.at(2).get<int>()});
    d.closing_arcs = edges_parse(h.at("closing_arcs"));
    f.hyp = std::move(d);
  } else if (f.backend == "rational") {
    for (const auto& p : j.at("coords"))
      f.coords_q.push_back({rational_parse(p.at(0).get<std::string>()),
                            rational_parse(p.at(1).get<std::string>())});
  } else {
    for (const auto& p : j.at("coords"))
      f.coords_f.push_back({p.at(0).get<double>(), p.at(1).get<double>()});
  }
  if (j.contains("schnyder")) {
    LabelingFile l;
    auto a = j.at("schnyder").at("outer");
    l.outer = {a.at(0).get<int>(), a.at(1).get<int>(), a.at(2).get<int>()};
    for (const auto& e : j.at("schnyder").at("edges"))
      l.edges.push_back({e.at(0).get<int>(), e.at(1).get<int>(), e.at(2).get<int>()});
    f.labeling = std::move(l);
  }
  if (j.contains("witnesses")) {
    WitnessMap w;
    for (const auto& e : j.at("witnesses"))
      w[{e.at(0).get<int>(), e.at(1).get<int>()}] = e.at(2).get<std::vector<int>>();
    f.witnesses = std::move(w);
  }
  return f;
}

// ---------------------------------------------------------------------------

static const char* kToolVersion = "icdraw 1.0.0";

std::string report_to_json(const ReportFile& f) {
  json j;
  j["version"] = f.version;
  j["property"] = f.property;
  j["tool_version"] = f.tool_version;
  j["graph_hash"] = f.graph_hash;
  j["drawing_hash"] = f.drawing_hash;
  json ps = json::array();
  for (const auto& p : f.pairs) {
    json e;
    e["s"] = p.s;
    e["t"] = p.t;
    e["status"] = status_name(p.status);
    e["witness"] = p.witness;
    ps.push_back(e);
  }
  j["pairs"] = ps;
  json m;
  m["max_detour"] = f.max_detour;
  m["resolution"] = f.resolution;
  m["planar"] = f.planar;
  if (f.angle_budget_max) m["angle_budget_max"] = *f.angle_budget_max;
  j["metrics"] = m;
  j["all_witnessed"] = f.all_witnessed;
  return j.dump(2) + "\n";
}

ReportFile report_from_json(const std::string& text) {
  json j = json::parse(text);
  ReportFile f;
  f.version = j.at("version").get<int>();
  f.property = j.at("property").get<std::string>();
  f.tool_version = j.at("tool_version").get<std::string>();
  f.graph_hash = j.at("graph_hash").get<std::string>();
  f.drawing_hash = j.at("drawing_hash").get<std::string>();
  for (const auto& e : j.at("pairs")) {
    PairResult p;
    p.s = e.at("s").get<int>();
    p.t = e.at("t").get<int>();
    p.status = status_parse(e.at("status").get<std::string>());
    p.witness = e.at("witness").get<std::vector<int>>();
    f.pairs.push_back(std::move(p));
  }
  const json& m = j.at("metrics");
  f.max_detour = m.at("max_detour").get<double>();
  f.resolution = m.at("resolution").get<double>();
  f.planar = m.at("planar").get<bool>();
  if (m.contains("angle_budget_max")) f.angle_budget_max = m.at("angle_budget_max").get<double>();
  f.all_witnessed = j.at("all_witnessed").get<bool>();
  return f;
}

ReportFile make_report(const Certificate& cert, const std::string& graph_text,
                       const std::string& drawing_text) {
  ReportFile f;
  f.property = property_name(cert.property);
  f.tool_version = kToolVersion;
  f.graph_hash = content_hash(graph_text);
  f.drawing_hash = content_hash(drawing_text);
  f.pairs = cert.pairs;
  f.max_detour = cert.max_detour;
  f.resolution = cert.resolution;
  f.planar = cert.planar;
  f.all_witnessed = cert.all_witnessed();
  return f;
}

}  // namespace icdraw
