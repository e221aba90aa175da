// seplab: a workbench for minimal separators of (theta, pyramid, prism,
// turtle)-free graphs. Subcommands cover family generation, forbidden
// structure detection, separator enumeration, hole analysis, frame and
// butterfly inspection, separator reconstruction, and corpus-wide
// property verification.

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "seplab/forbidden.hpp"
#include "seplab/frames.hpp"
#include "seplab/generators.hpp"
#include "seplab/graph.hpp"
#include "seplab/holes.hpp"
#include "seplab/reconstruct.hpp"
#include "seplab/separators.hpp"

using json = nlohmann::ordered_json;
using namespace seplab;

namespace {

struct Caps {
  int oracle = 16;
  long holes = 200000;
};

Caps caps_from_env() {
  Caps caps;
  const char* raw = std::getenv("SEPLAB_CAPS");
  if (!raw) return caps;
  std::stringstream in(raw);
  std::string item;
  while (std::getline(in, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) continue;
    std::string key = item.substr(0, eq);
    long value = std::stol(item.substr(eq + 1));
    if (key == "oracle") caps.oracle = static_cast<int>(value);
    if (key == "holes") caps.holes = value;
  }
  return caps;
}

struct NamedGraph {
  std::string name;
  Graph graph;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string basename_of(const std::string& path) {
  auto slash = path.find_last_of('/');
  return slash == std::string::npos ? path : path.substr(slash + 1);
}

std::vector<NamedGraph> load_graphs(const std::vector<std::string>& paths,
                                    const std::string& format) {
  std::vector<NamedGraph> out;
  for (const auto& path : paths) {
    std::string text = read_file(path);
    if (format == "graph6") {
      std::istringstream in(text);
      std::string line;
      int lineno = 0;
      while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        out.push_back({basename_of(path) + ":" + std::to_string(lineno),
                       parse_graph(line, GraphFormat::Graph6)});
      }
    } else {
      out.push_back({basename_of(path), parse_graph(text, GraphFormat::EdgeList)});
    }
  }
  return out;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::runtime_error("cannot write file: " + out_path);
  out << text;
}

json set_json(const VertexSet& s) { return json(s.ids()); }

json frame_json(const Frame& f) {
  auto t = f.tuple();
  return json(std::vector<int>(t.begin(), t.end()));
}

json witness_json(const ForbiddenWitness& w) {
  json roles = json::object();
  for (const auto& [name, ids] : w.roles) roles[name] = ids;
  return json{{"kind", kind_name(w.kind)},
              {"vertices", w.vertices.ids()},
              {"roles", roles}};
}

json butterfly_json(const Butterfly& b) {
  std::vector<std::string> positions;
  if (b.l_end) positions.push_back("L_end");
  if (b.l_adjacent) positions.push_back("L_adjacent");
  if (b.r_end) positions.push_back("R_end");
  if (b.r_adjacent) positions.push_back("R_adjacent");
  if (b.central) positions.push_back("central");
  return json{{"center", b.center},
              {"left_wing", b.left_wing},
              {"right_wing", b.right_wing},
              {"positions", positions}};
}

VertexSet parse_id_list(const std::string& csv) {
  std::vector<int> ids;
  std::stringstream in(csv);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) ids.push_back(std::stoi(item));
  }
  return VertexSet(std::move(ids));
}

std::vector<int> parse_id_sequence(const std::string& csv) {
  std::vector<int> ids;
  std::stringstream in(csv);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) ids.push_back(std::stoi(item));
  }
  return ids;
}

std::string family_key(std::string name) {
  for (char& c : name) {
    if (c == '-') c = '_';
  }
  return name;
}

// ---------------------------------------------------------------------
// Builtin verification corpus: named fixtures plus fixed-seed members.

std::vector<NamedGraph> builtin_corpus() {
  std::vector<NamedGraph> corpus;
  auto add = [&](const std::string& name, Graph g) {
    corpus.push_back({name, std::move(g)});
  };
  for (int n = 5; n <= 10; ++n) add("cycle(" + std::to_string(n) + ")", cycle(n));
  for (int n = 4; n <= 6; ++n) {
    add("complete(" + std::to_string(n) + ")", complete(n));
  }
  {
    Graph p6(6);
    for (int i = 0; i < 5; ++i) p6.add_edge(i, i + 1);
    add("path(6)", p6);
  }
  {
    Graph tt(4);
    tt.add_edge(0, 1);
    tt.add_edge(0, 2);
    tt.add_edge(1, 2);
    tt.add_edge(1, 3);
    tt.add_edge(2, 3);
    add("two_triangles", tt);
  }
  for (int k = 2; k <= 4; ++k) {
    add("k_theta(" + std::to_string(k) + ")", k_theta(k));
    add("k_pyramid(" + std::to_string(k) + ")", k_pyramid(k));
    add("k_prism(" + std::to_string(k) + ")", k_prism(k));
  }
  add("k_turtle(1)", k_turtle(1));
  add("k_turtle(2)", k_turtle(2));
  add("k_ladder(2)", k_ladder(2));
  add("cube", cube());
  add("min_theta", min_theta());
  add("min_pyramid", min_pyramid());
  add("min_prism", min_prism());
  add("min_turtle", min_turtle());
  add("g_tc", g_tc());
  add("g_hub", g_hub());
  for (int k = 7; k <= 9; ++k) {
    Graph clone(k + 1);
    for (int i = 0; i < k; ++i) clone.add_edge(i, (i + 1) % k);
    clone.add_edge(k, 0);
    clone.add_edge(k, 1);
    clone.add_edge(k, 2);
    add("cycle(" + std::to_string(k) + ")+clone", clone);
    // A major (independent triple) plus a far pendant on the same cycle.
    Graph tp(k + 2);
    for (int i = 0; i < k; ++i) tp.add_edge(i, (i + 1) % k);
    tp.add_edge(k, 0);
    tp.add_edge(k, 2);
    tp.add_edge(k, 4);
    tp.add_edge(k + 1, k - 2);
    add("cycle(" + std::to_string(k) + ")+triple+pendant", tp);
  }
  for (int i = 0; i < 6; ++i) {
    auto g = random_class_member(10, 0.22, 500 + static_cast<uint64_t>(i), 60);
    if (g) add("member(10,0.22," + std::to_string(500 + i) + ")", *g);
  }
  return corpus;
}

// ---------------------------------------------------------------------
// verify-lemmas: the bundled corpus property suites.

struct LemmaRecord {
  std::string graph;
  std::string property;
  std::string status;  // ok / violated / skipped
  long checked = 0;
  json violations = json::array();
  std::string reason;
};

json record_json(const LemmaRecord& r) {
  json j{{"graph", r.graph},
         {"property", r.property},
         {"status", r.status},
         {"checked", r.checked}};
  if (!r.violations.empty()) j["violations"] = r.violations;
  if (!r.reason.empty()) j["reason"] = r.reason;
  return j;
}

void verify_one_graph(const NamedGraph& ng, const Caps& caps,
                      std::vector<LemmaRecord>* records) {
  const Graph& g = ng.graph;
  auto verdict = is_class_member(g, caps.holes);
  bool member = verdict.status == MemberStatus::Member;
  auto push = [&](LemmaRecord r) {
    r.graph = ng.name;
    records->push_back(std::move(r));
  };
  if (!member) {
    LemmaRecord r;
    r.property = "all";
    r.status = "skipped";
    r.reason = verdict.status == MemberStatus::NonMember
                   ? "non-member (" + kind_name(verdict.witness->kind) + " found)"
                   : "membership unknown (search truncated)";
    push(std::move(r));
    return;
  }

  auto separators = expand_enumerate(g);
  std::vector<VertexSet> propers;
  for (const auto& c : separators) {
    if (classify_separator(g, c).is_proper) propers.push_back(c);
  }
  auto holes = enumerate_holes(g, 4, 1 << 30, caps.holes);

  {
    LemmaRecord r;
    r.property = "two-full-components";
    for (const auto& c : propers) {
      ++r.checked;
      if (full_components(g, c).size() != 2) r.violations.push_back(set_json(c));
    }
    r.status = r.violations.empty() ? "ok" : "violated";
    push(std::move(r));
  }

  {
    LemmaRecord major_rec, ext_rec, mnc_rec;
    major_rec.property = "major-minor-classification";
    ext_rec.property = "extended-neighborhood-containment";
    mnc_rec.property = "mnc-totality";
    for (const Hole& h : holes.holes) {
      std::vector<int> majors;
      for (int v = 0; v < g.vertex_count(); ++v) {
        if (h.contains(v)) continue;
        HoleRole role = classify_vertex(g, h, v);
        if (role.kind == RoleKind::NoNeighbor) continue;
        ++major_rec.checked;
        bool clean = role.kind != RoleKind::NonadjacentPairMinor;
        if (role.kind == RoleKind::Major) {
          majors.push_back(v);
          if (role.hole_neighbors.size() == 3) {
            for (std::size_t a = 0; a < 3 && clean; ++a) {
              for (std::size_t b = a + 1; b < 3; ++b) {
                if (g.adjacent(role.hole_neighbors[a], role.hole_neighbors[b])) {
                  clean = false;
                }
              }
            }
          }
        }
        if (!clean) {
          major_rec.violations.push_back(json{{"hole", h.cycle}, {"vertex", v}});
        }
      }
      if (h.length() > 6) {
        for (int w : majors) {
          auto exts = extended_neighborhoods(g, h, w);
          for (int v = 0; v < g.vertex_count(); ++v) {
            if (v == w || h.contains(v) || g.adjacent(v, w)) continue;
            std::vector<int> nh;
            for (int i = 0; i < h.length(); ++i) {
              int hv = h.cycle[static_cast<std::size_t>(i)];
              if (g.adjacent(v, hv)) nh.push_back(hv);
            }
            if (nh.empty()) continue;
            ++ext_rec.checked;
            bool contained = false;
            for (const Path& e : exts) {
              bool all = true;
              for (int x : nh) {
                if (std::find(e.begin(), e.end(), x) == e.end()) all = false;
              }
              if (all) contained = true;
            }
            if (!contained) {
              bool ok = false;
              if (classify_vertex(g, h, v).kind == RoleKind::Major) {
                auto cfg = mnc_classify(g, h, w, v);
                ok = cfg && cfg->config_id == 6;
              }
              if (!ok) {
                ext_rec.violations.push_back(
                    json{{"hole", h.cycle}, {"w", w}, {"vertex", v}});
              }
            }
          }
        }
      }
      for (std::size_t i = 0; i < majors.size(); ++i) {
        for (std::size_t j = i + 1; j < majors.size(); ++j) {
          int u = majors[i], v = majors[j];
          if (g.adjacent(u, v)) continue;
          if (nesting(g, h, u, v) != Nesting::Cross) continue;
          ++mnc_rec.checked;
          if (!mnc_classify(g, h, u, v)) {
            mnc_rec.violations.push_back(json{{"hole", h.cycle}, {"u", u}, {"v", v}});
          }
        }
      }
    }
    major_rec.status = major_rec.violations.empty() ? "ok" : "violated";
    ext_rec.status = ext_rec.violations.empty() ? "ok" : "violated";
    mnc_rec.status = mnc_rec.violations.empty() ? "ok" : "violated";
    push(std::move(major_rec));
    push(std::move(ext_rec));
    push(std::move(mnc_rec));
  }

  {
    LemmaRecord thm, star;
    thm.property = "major-neighbor-theorem";
    star.property = "star-cutset-corollary";
    for (const Hole& h : holes.holes) {
      if (h.length() <= 6) continue;
      auto report = verify_major_neighbor_theorem_all(g, h, true);
      thm.checked += report.pairs_checked;
      for (auto [a, b] : report.violations) {
        thm.violations.push_back(json{{"hole", h.cycle}, {"a", a}, {"b", b}});
      }
      std::vector<int> majors;
      for (int v = 0; v < g.vertex_count(); ++v) {
        if (!h.contains(v) && classify_vertex(g, h, v).kind == RoleKind::Major) {
          majors.push_back(v);
        }
      }
      for (int w : majors) {
        HoleRole role = classify_vertex(g, h, w);
        if (static_cast<int>(role.hole_neighbors.size()) == h.length()) continue;
        if (role.is_gem_center) continue;
        bool eligible = !role.is_hub;
        if (!eligible) {
          eligible = true;
          for (int m : majors) {
            if (!classify_vertex(g, h, m).is_hub) eligible = false;
          }
        }
        if (!eligible) continue;
        ++star.checked;
        if (!star_cutset_witness(g, w)) {
          star.violations.push_back(json{{"hole", h.cycle}, {"w", w}});
        }
      }
    }
    thm.status = thm.violations.empty() ? "ok" : "violated";
    star.status = star.violations.empty() ? "ok" : "violated";
    push(std::move(thm));
    push(std::move(star));
  }

  {
    LemmaRecord butterfly, roundtrip;
    butterfly.property = "butterfly-non-centrality";
    roundtrip.property = "separator-roundtrip";
    for (const auto& c : propers) {
      ++roundtrip.checked;
      RoundtripReport report;
      try {
        report = verify_roundtrip(g, c);
      } catch (const std::exception& e) {
        roundtrip.violations.push_back(
            json{{"separator", c.ids()}, {"error", e.what()}});
        continue;
      }
      if (!report.equal) {
        roundtrip.violations.push_back(
            json{{"separator", c.ids()},
                 {"reconstructed", set_json(report.trace.result)}});
      }
      const FramedHole& fh = report.trace.hole;
      auto comps = full_components(g, c);
      const VertexSet* l = nullptr;
      const VertexSet* r = nullptr;
      for (const auto& comp : comps) {
        if (comp.contains(fh.left_interior().front())) l = &comp;
        if (comp.contains(fh.right_interior().front())) r = &comp;
      }
      if (!l || !r || l == r) continue;
      Hole hole = fh.to_hole(g);
      for (int c3 : c) {
        if (c3 == fh.c1() || c3 == fh.c2()) continue;
        if (is_heavy(g, hole, fh.c1(), fh.c2(), c3)) continue;
        ++butterfly.checked;
        Butterfly b = build_butterfly(g, c, *l, *r, fh, c3);
        if (b.central) {
          butterfly.violations.push_back(json{{"separator", c.ids()}, {"c3", c3}});
        }
      }
    }
    butterfly.status = butterfly.violations.empty() ? "ok" : "violated";
    roundtrip.status = roundtrip.violations.empty() ? "ok" : "violated";
    push(std::move(butterfly));
    push(std::move(roundtrip));
  }
}

// ---------------------------------------------------------------------

int cmd_gen(const std::string& family, int k, const std::vector<int>& extras, int n,
            double p, uint64_t seed, int attempts, const std::string& format,
            const std::string& out_path) {
  Graph g(0);
  std::string key = family_key(family);
  if (key == "random") {
    g = random_graph(n, p, seed);
  } else if (key == "random_member") {
    auto found = random_class_member(n, p, seed, attempts);
    if (!found) {
      std::cerr << "no class member found in " << attempts << " attempts\n";
      return 1;
    }
    g = *found;
  } else {
    g = generate({key, k, extras});
  }
  emit(format == "graph6" ? write_graph6(g) + "\n" : write_edge_list(g), out_path);
  return 0;
}

int cmd_detect(const NamedGraph& ng, const std::string& kind, int k, const Caps& caps,
               const std::string& out_path) {
  json out = json::array();
  auto run_kind = [&](StructureKind sk) {
    SearchResult res;
    if (sk == StructureKind::Creature3) {
      res = find_3creature(ng.graph);
    } else if (sk == StructureKind::ImmatureCreature) {
      res = find_immature_kcreature(ng.graph, k);
    } else {
      res = find_structure(ng.graph, sk, caps.holes);
    }
    json j{{"graph", ng.name},
           {"kind", kind_name(sk)},
           {"found", res.witness.has_value()},
           {"exhaustive", res.exhaustive}};
    if (res.witness) {
      j["vertices"] = res.witness->vertices.ids();
      j["witness"] = witness_json(*res.witness);
    }
    out.push_back(j);
  };
  if (kind == "all") {
    for (StructureKind sk : {StructureKind::Theta, StructureKind::Pyramid,
                             StructureKind::Prism, StructureKind::Turtle,
                             StructureKind::Cube}) {
      run_kind(sk);
    }
    auto verdict = is_class_member(ng.graph, caps.holes);
    json member{{"graph", ng.name},
                {"kind", "class-membership"},
                {"status", verdict.status == MemberStatus::Member      ? "member"
                           : verdict.status == MemberStatus::NonMember ? "non-member"
                                                                       : "unknown"}};
    out.push_back(member);
  } else {
    std::map<std::string, StructureKind> kinds{
        {"theta", StructureKind::Theta},
        {"pyramid", StructureKind::Pyramid},
        {"prism", StructureKind::Prism},
        {"turtle", StructureKind::Turtle},
        {"cube", StructureKind::Cube},
        {"creature3", StructureKind::Creature3},
        {"immature", StructureKind::ImmatureCreature}};
    auto it = kinds.find(kind);
    if (it == kinds.end()) throw ContractError("unknown kind: " + kind);
    run_kind(it->second);
  }
  emit(out.dump(2) + "\n", out_path);
  return 0;
}

int cmd_seps(const NamedGraph& ng, const std::string& method, int k, const Caps& caps,
             const std::string& out_path) {
  std::vector<VertexSet> seps;
  if (method == "oracle") {
    seps = oracle_enumerate(ng.graph, caps.oracle);
  } else if (method == "expand") {
    seps = expand_enumerate(ng.graph);
  } else if (method == "clique") {
    seps = clique_minimal_separators(ng.graph);
  } else if (method == "creature") {
    seps = creature_bound_enumerate(ng.graph, k);
  } else {
    throw ContractError("unknown method: " + method);
  }
  json arr = json::array();
  for (const auto& s : seps) arr.push_back(s.ids());
  json out{{"graph", ng.name},
           {"method", method},
           {"separators", arr},
           {"count", seps.size()}};
  emit(out.dump(2) + "\n", out_path);
  return 0;
}

int cmd_analyze_hole(const NamedGraph& ng, const std::string& hole_csv,
                     const std::string& out_path) {
  const Graph& g = ng.graph;
  Hole h = make_hole(g, parse_id_sequence(hole_csv));
  json verts = json::array();
  json majors = json::array();
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (h.contains(v)) continue;
    HoleRole role = classify_vertex(g, h, v);
    json j{{"vertex", v},
           {"role", role_name(role.kind)},
           {"hole_neighbors", role.hole_neighbors}};
    if (role.anchor >= 0) j["anchor"] = role.anchor;
    if (role.kind == RoleKind::Major) {
      j["is_hub"] = role.is_hub;
      j["is_gem_center"] = role.is_gem_center;
      json sects = json::array();
      for (const Path& s : sectors(g, h, v)) sects.push_back(s);
      json exts = json::array();
      for (const Path& e : extended_neighborhoods(g, h, v)) exts.push_back(e);
      majors.push_back(json{{"vertex", v},
                            {"sectors", sects},
                            {"extended_neighborhoods", exts}});
    }
    verts.push_back(j);
  }
  json out{{"graph", ng.name},
           {"hole", h.cycle},
           {"vertices", verts},
           {"majors", majors}};
  emit(out.dump(2) + "\n", out_path);
  return 0;
}

int cmd_frames(const NamedGraph& ng, const std::string& sep_csv,
               const std::string& out_path) {
  const Graph& g = ng.graph;
  VertexSet c = parse_id_list(sep_csv);
  auto rec = classify_separator(g, c);
  json out{{"graph", ng.name}, {"separator", c.ids()}};
  out["minimal"] = rec.is_minimal;
  out["clique"] = rec.is_clique;
  out["proper"] = rec.is_proper;
  if (!rec.is_proper) {
    emit(out.dump(2) + "\n", out_path);
    return 0;
  }
  const VertexSet& l = rec.full_components[0];
  const VertexSet& r = rec.full_components[1];
  Richness rich = classify_richness(g, c);
  json rj{{"rich", rich.rich}};
  json pairs = json::array();
  for (auto [a, b] : rich.long_pairs) pairs.push_back(json::array({a, b}));
  rj["long_pairs"] = pairs;
  rj["best_pair"] = json::array({rich.best_pair.first, rich.best_pair.second});
  rj["best_distance"] = rich.best_distance;
  out["richness"] = rj;
  json frames = json::array();
  if (rich.rich) {
    for (auto [a, b] : rich.long_pairs) {
      for (auto [c1, c2] : {std::pair{a, b}, std::pair{b, a}}) {
        for (const Frame& f : enumerate_feasible_frames(g, c, l, r, c1, c2)) {
          frames.push_back(json{{"frame", frame_json(f)},
                                {"potential", potential_within(g, f, l, r)}});
        }
      }
    }
  }
  out["long_frames"] = frames;
  Frame best = optimal_frame(g, c);
  out["optimal_frame"] = frame_json(best);
  VertexSet w = candidate_heavy_W(g, best);
  FramedHole fh = construct_F_hole(g, best, w);
  out["heavy_set"] = set_json(w);
  out["hole"] = fh.to_hole(g).cycle;
  const VertexSet* lp = nullptr;
  const VertexSet* rp = nullptr;
  for (const auto& comp : rec.full_components) {
    if (comp.contains(fh.left_interior().front())) lp = &comp;
    if (comp.contains(fh.right_interior().front())) rp = &comp;
  }
  json flies = json::array();
  if (lp && rp && lp != rp) {
    Hole hole = fh.to_hole(g);
    for (int c3 : c) {
      if (c3 == fh.c1() || c3 == fh.c2()) continue;
      if (is_heavy(g, hole, fh.c1(), fh.c2(), c3)) continue;
      flies.push_back(butterfly_json(build_butterfly(g, c, *lp, *rp, fh, c3)));
    }
  }
  out["butterflies"] = flies;
  emit(out.dump(2) + "\n", out_path);
  return 0;
}

int cmd_reconstruct(const NamedGraph& ng, const std::string& sep_csv, bool all,
                    const std::string& out_path) {
  const Graph& g = ng.graph;
  std::vector<VertexSet> targets;
  if (all) {
    for (const auto& c : expand_enumerate(g)) {
      if (classify_separator(g, c).is_proper) targets.push_back(c);
    }
  } else {
    targets.push_back(parse_id_list(sep_csv));
  }
  json out = json::array();
  bool any_failure = false;
  for (const auto& c : targets) {
    json j{{"graph", ng.name}, {"separator", c.ids()}};
    try {
      RoundtripReport report = verify_roundtrip(g, c);
      const ReconstructionTrace& t = report.trace;
      j["frame"] = frame_json(t.frame);
      j["w"] = set_json(t.w);
      j["hole"] = t.hole.to_hole(g).cycle;
      j["m1"] = json{{"x", t.m1.x}, {"y", t.m1.y}};
      j["m2"] = json{{"l", t.m2.l}, {"r", t.m2.r}};
      j["c_l"] = set_json(t.sides.c_l);
      j["c_r"] = set_json(t.sides.c_r);
      j["c1"] = set_json(t.sides.c1_set);
      j["c2"] = set_json(t.c2_set);
      j["c3"] = set_json(t.c3_set);
      j["reconstructed"] = set_json(t.result);
      j["equal"] = report.equal;
      if (!report.equal) any_failure = true;
    } catch (const std::exception& e) {
      j["error"] = e.what();
      any_failure = true;
    }
    out.push_back(j);
  }
  emit(out.dump(2) + "\n", out_path);
  return any_failure ? 1 : 0;
}

int cmd_verify(const std::vector<NamedGraph>& graphs, const Caps& caps,
               const std::string& out_path) {
  std::vector<LemmaRecord> records;
  for (const auto& ng : graphs) verify_one_graph(ng, caps, &records);
  long violations = 0;
  json arr = json::array();
  for (const auto& r : records) {
    if (r.status == "violated") ++violations;
    arr.push_back(record_json(r));
  }
  json out{{"records", arr}, {"violations", violations}};
  emit(out.dump(2) + "\n", out_path);
  return violations > 0 ? 1 : 0;
}

int cmd_stats(const std::vector<NamedGraph>& graphs, const Caps& caps,
              const std::string& out_path) {
  std::ostringstream csv;
  csv << "graph,n,m,member,min_seps,proper,clique,max_exponent_estimate\n";
  for (const auto& ng : graphs) {
    const Graph& g = ng.graph;
    auto verdict = is_class_member(g, caps.holes);
    std::string member = verdict.status == MemberStatus::Member      ? "member"
                         : verdict.status == MemberStatus::NonMember ? "non-member"
                                                                     : "unknown";
    auto seps = expand_enumerate(g);
    long proper = 0, cliques = 0;
    for (const auto& c : seps) {
      auto rec = classify_separator(g, c);
      if (rec.is_proper) ++proper;
      if (rec.is_clique) ++cliques;
    }
    double exponent = 0.0;
    if (seps.size() > 1 && g.vertex_count() > 2) {
      exponent = std::log(static_cast<double>(seps.size())) /
                 std::log(static_cast<double>(g.vertex_count()));
    }
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4f", exponent);
    csv << ng.name << ',' << g.vertex_count() << ',' << g.edge_count() << ','
        << member << ',' << seps.size() << ',' << proper << ',' << cliques << ','
        << buf << '\n';
  }
  emit(csv.str(), out_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"separator laboratory for (theta, pyramid, prism, turtle)-free graphs"};
  app.require_subcommand(1);
  app.fallthrough();
  Caps caps = caps_from_env();

  std::string out_path;
  app.add_option("--out", out_path, "write output to a file instead of stdout");

  auto* gen = app.add_subcommand("gen", "generate a named family graph");
  std::string gen_family;
  int gen_k = 0, gen_n = 8, gen_attempts = 100;
  double gen_p = 0.3;
  uint64_t gen_seed = 0;
  std::vector<int> gen_extras;
  std::string gen_format = "edge-list";
  gen->add_option("family", gen_family,
                  "k-theta|k-pyramid|k-prism|k-turtle|k-ladder|cube|cycle|"
                  "complete|min-*|g-tc|g-hub|random|random-member")
      ->required();
  gen->add_option("k", gen_k, "family parameter");
  gen->add_option("--extras", gen_extras, "extra path lengths (k-turtle)");
  gen->add_option("--n", gen_n, "order for random graphs");
  gen->add_option("--p", gen_p, "edge probability for random graphs");
  gen->add_option("--seed", gen_seed, "random seed");
  gen->add_option("--attempts", gen_attempts, "rejection attempts for random-member");
  gen->add_option("--format", gen_format, "edge-list|graph6");

  std::string in_format = "edge-list";
  std::vector<std::string> files;
  auto add_input = [&](CLI::App* cmd, bool many) {
    cmd->add_option("files", files, "input graph file(s)")
        ->required(!many)
        ->expected(many ? -1 : 1);
    cmd->add_option("--format", in_format, "edge-list|graph6");
  };

  auto* detect = app.add_subcommand("detect", "search for forbidden structures");
  std::string detect_kind = "all";
  int detect_k = 2;
  add_input(detect, false);
  detect->add_option("--kind", detect_kind,
                     "all|theta|pyramid|prism|turtle|cube|creature3|immature");
  detect->add_option("--k", detect_k, "k for immature creature search");

  auto* seps = app.add_subcommand("seps", "enumerate minimal separators");
  std::string seps_method = "expand";
  int seps_k = 2;
  add_input(seps, false);
  seps->add_option("--method", seps_method, "oracle|expand|clique|creature");
  seps->add_option("--k", seps_k, "k for the creature method");

  auto* analyze = app.add_subcommand("analyze-hole", "classify vertices against a hole");
  std::string hole_csv;
  add_input(analyze, false);
  analyze->add_option("--hole", hole_csv, "comma-separated cyclic vertex list")
      ->required();

  auto* frames = app.add_subcommand("frames", "frames and butterflies of a separator");
  std::string frames_sep;
  add_input(frames, false);
  frames->add_option("--separator", frames_sep, "comma-separated separator")
      ->required();

  auto* rec = app.add_subcommand("reconstruct", "rebuild separators from their tuples");
  std::string rec_sep;
  bool rec_all = false;
  add_input(rec, false);
  rec->add_option("--separator", rec_sep, "comma-separated separator");
  rec->add_flag("--all", rec_all, "verify every proper separator");

  auto* verify = app.add_subcommand("verify-lemmas", "run the corpus property suites");
  bool verify_builtin = false;
  add_input(verify, true);
  verify->add_flag("--builtin", verify_builtin, "include the builtin corpus");

  auto* stats = app.add_subcommand("stats", "per-graph separator statistics as CSV");
  bool stats_builtin = false;
  add_input(stats, true);
  stats->add_flag("--builtin", stats_builtin, "include the builtin corpus");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (gen->parsed()) {
      return cmd_gen(gen_family, gen_k, gen_extras, gen_n, gen_p, gen_seed,
                     gen_attempts, gen_format, out_path);
    }
    if (detect->parsed()) {
      return cmd_detect(load_graphs(files, in_format).at(0), detect_kind, detect_k,
                        caps, out_path);
    }
    if (seps->parsed()) {
      return cmd_seps(load_graphs(files, in_format).at(0), seps_method, seps_k, caps,
                      out_path);
    }
    if (analyze->parsed()) {
      return cmd_analyze_hole(load_graphs(files, in_format).at(0), hole_csv, out_path);
    }
    if (frames->parsed()) {
      return cmd_frames(load_graphs(files, in_format).at(0), frames_sep, out_path);
    }
    if (rec->parsed()) {
      if (!rec_all && rec_sep.empty()) {
        std::cerr << "reconstruct: need --separator or --all\n";
        return 2;
      }
      return cmd_reconstruct(load_graphs(files, in_format).at(0), rec_sep, rec_all,
                             out_path);
    }
    if (verify->parsed()) {
      auto graphs = load_graphs(files, in_format);
      if (verify_builtin || graphs.empty()) {
        auto builtin = builtin_corpus();
        graphs.insert(graphs.end(), builtin.begin(), builtin.end());
      }
      return cmd_verify(graphs, caps, out_path);
    }
    if (stats->parsed()) {
      auto graphs = load_graphs(files, in_format);
      if (stats_builtin || graphs.empty()) {
        auto builtin = builtin_corpus();
        graphs.insert(graphs.end(), builtin.begin(), builtin.end());
      }
      return cmd_stats(graphs, caps, out_path);
    }
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const ContractError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
