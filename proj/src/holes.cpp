#include "seplab/holes.hpp"

#include <algorithm>
#include <functional>
#include <queue>

#include "seplab/forbidden.hpp"

namespace seplab {

bool Hole::contains(int v) const {
  return std::find(cycle.begin(), cycle.end(), v) != cycle.end();
}

int Hole::position_of(int v) const {
  auto it = std::find(cycle.begin(), cycle.end(), v);
  return it == cycle.end() ? -1 : static_cast<int>(it - cycle.begin());
}

namespace {

std::vector<int> canonical_rotation(std::vector<int> cycle) {
  auto k = cycle.size();
  auto mn = std::min_element(cycle.begin(), cycle.end());
  std::rotate(cycle.begin(), mn, cycle.end());
  if (cycle[1] > cycle[k - 1]) {
    std::reverse(cycle.begin() + 1, cycle.end());
  }
  return cycle;
}

}  // namespace

Hole make_hole(const Graph& g, std::vector<int> cycle) {
  if (!is_induced_cycle(g, cycle)) {
    throw ContractError("vertex sequence is not an induced cycle");
  }
  return Hole{canonical_rotation(std::move(cycle))};
}

HoleList enumerate_holes(const Graph& g, int min_len, int max_len, long limit) {
  if (min_len < 4) throw ContractError("enumerate_holes requires min_len >= 4");
  if (min_len > max_len) throw ContractError("enumerate_holes: empty length window");
  HoleList out;
  int n = g.vertex_count();
  std::vector<char> in_path(static_cast<std::size_t>(n), 0);
  std::vector<int> path;

  std::function<void()> grow = [&]() {
    if (out.truncated) return;
    int last = path.back();
    int anchor = path[0];
    auto sz = static_cast<int>(path.size());
    for (int w : g.neighbors(last)) {
      if (out.truncated) return;
      if (w <= anchor || in_path[static_cast<std::size_t>(w)]) continue;
      bool chord = false;
      for (int i = 1; i + 1 < sz; ++i) {
        if (g.adjacent(w, path[static_cast<std::size_t>(i)])) {
          chord = true;
          break;
        }
      }
      if (chord) continue;
      if (sz >= 2 && g.adjacent(w, anchor)) {
        int cycle_len = sz + 1;
        if (cycle_len >= 4 && cycle_len >= min_len && cycle_len <= max_len &&
            path[1] < w) {
          if (static_cast<long>(out.holes.size()) >= limit) {
            out.truncated = true;
            return;
          }
          std::vector<int> cyc = path;
          cyc.push_back(w);
          out.holes.push_back(Hole{std::move(cyc)});
        }
        continue;
      }
      if (sz + 2 > max_len) continue;
      in_path[static_cast<std::size_t>(w)] = 1;
      path.push_back(w);
      grow();
      path.pop_back();
      in_path[static_cast<std::size_t>(w)] = 0;
    }
  };

  for (int v = 0; v < n && !out.truncated; ++v) {
    path.assign(1, v);
    in_path[static_cast<std::size_t>(v)] = 1;
    grow();
    in_path[static_cast<std::size_t>(v)] = 0;
  }
  return out;
}

std::string role_name(RoleKind kind) {
  switch (kind) {
    case RoleKind::NoNeighbor: return "no_neighbor";
    case RoleKind::Pendant: return "pendant";
    case RoleKind::Cap: return "cap";
    case RoleKind::Clone: return "clone";
    case RoleKind::NonadjacentPairMinor: return "nonadjacent_pair_minor";
    case RoleKind::Major: return "major";
  }
  return "unknown";
}

namespace {

std::vector<int> neighbor_positions(const Graph& g, const Hole& h, int v) {
  std::vector<int> pos;
  for (int i = 0; i < h.length(); ++i) {
    if (g.adjacent(v, h.cycle[static_cast<std::size_t>(i)])) pos.push_back(i);
  }
  return pos;
}

// Length in edges of the shortest arc of the hole covering all positions.
int covering_span(const std::vector<int>& pos, int k) {
  auto m = static_cast<int>(pos.size());
  if (m == 0) return 0;
  int max_gap = pos[0] + k - pos[m - 1];
  for (int i = 0; i + 1 < m; ++i) max_gap = std::max(max_gap, pos[i + 1] - pos[i]);
  return k - max_gap;
}

}  // namespace

HoleRole classify_vertex(const Graph& g, const Hole& h, int v) {
  if (h.contains(v)) throw ContractError("classify_vertex: vertex lies on the hole");
  HoleRole role;
  int k = h.length();
  std::vector<int> pos = neighbor_positions(g, h, v);
  for (int p : pos) role.hole_neighbors.push_back(h.cycle[static_cast<std::size_t>(p)]);
  std::sort(role.hole_neighbors.begin(), role.hole_neighbors.end());
  auto m = static_cast<int>(pos.size());
  if (m == 0) {
    role.kind = RoleKind::NoNeighbor;
    return role;
  }
  int span = covering_span(pos, k);
  if (m <= 3 && span <= 2) {
    if (m == 1) {
      role.kind = RoleKind::Pendant;
      role.anchor = h.cycle[static_cast<std::size_t>(pos[0])];
    } else if (m == 2 && span == 1) {
      role.kind = RoleKind::Cap;
    } else if (m == 2) {
      role.kind = RoleKind::NonadjacentPairMinor;
    } else {
      role.kind = RoleKind::Clone;
      for (int p : pos) {
        int prev = (p + k - 1) % k, next = (p + 1) % k;
        bool has_prev = std::find(pos.begin(), pos.end(), prev) != pos.end();
        bool has_next = std::find(pos.begin(), pos.end(), next) != pos.end();
        if (has_prev && has_next) role.anchor = h.cycle[static_cast<std::size_t>(p)];
      }
    }
    return role;
  }
  role.kind = RoleKind::Major;
  if (m == 4) {
    bool adj[4];
    for (int i = 0; i < 4; ++i) {
      adj[i] = ((pos[(i + 1) % 4] - pos[i] + k) % k) == 1;
    }
    role.is_hub = (adj[0] && adj[2] && !adj[1] && !adj[3]) ||
                  (adj[1] && adj[3] && !adj[0] && !adj[2]);
    role.is_gem_center = (k >= 5) && span == 3;
  }
  return role;
}

std::vector<Path> sectors(const Graph& g, const Hole& h, int u) {
  if (h.contains(u)) throw ContractError("sectors: vertex lies on the hole");
  std::vector<int> pos = neighbor_positions(g, h, u);
  if (pos.size() < 2) throw ContractError("sectors: vertex needs >= 2 hole neighbors");
  int k = h.length();
  auto m = static_cast<int>(pos.size());
  // Start from the smallest-id neighbor.
  int start = 0;
  for (int i = 1; i < m; ++i) {
    if (h.cycle[static_cast<std::size_t>(pos[i])] <
        h.cycle[static_cast<std::size_t>(pos[start])]) {
      start = i;
    }
  }
  std::vector<Path> out;
  for (int s = 0; s < m; ++s) {
    int a = pos[(start + s) % m];
    int b = pos[(start + s + 1) % m];
    Path sector;
    for (int p = a;; p = (p + 1) % k) {
      sector.push_back(h.cycle[static_cast<std::size_t>(p)]);
      if (p == b) break;
    }
    out.push_back(std::move(sector));
  }
  return out;
}

std::vector<Path> extended_neighborhoods(const Graph& g, const Hole& h, int w) {
  HoleRole role = classify_vertex(g, h, w);
  if (role.kind != RoleKind::Major) {
    throw ContractError("extended_neighborhoods: vertex is not major for the hole");
  }
  int k = h.length();
  std::vector<Path> out;
  for (const Path& sector : sectors(g, h, w)) {
    int pa = h.position_of(sector.front());
    int pb = h.position_of(sector.back());
    int xp = h.cycle[static_cast<std::size_t>((pa + k - 1) % k)];
    int yp = h.cycle[static_cast<std::size_t>((pb + 1) % k)];
    Path ext;
    if (g.adjacent(w, xp)) ext.push_back(xp);
    ext.insert(ext.end(), sector.begin(), sector.end());
    if (g.adjacent(w, yp)) ext.push_back(yp);
    out.push_back(std::move(ext));
  }
  return out;
}

bool are_distant(const Graph& g, const Hole& h, int w, int a, int b) {
  if (h.position_of(a) < 0 || h.position_of(b) < 0) {
    throw ContractError("are_distant: endpoints must lie on the hole");
  }
  for (const Path& ext : extended_neighborhoods(g, h, w)) {
    bool has_a = std::find(ext.begin(), ext.end(), a) != ext.end();
    bool has_b = std::find(ext.begin(), ext.end(), b) != ext.end();
    if (has_a && has_b) return false;
  }
  return true;
}

Nesting nesting(const Graph& g, const Hole& h, int u, int v) {
  if (h.contains(u) || h.contains(v)) {
    throw ContractError("nesting: vertices must lie outside the hole");
  }
  int k = h.length();
  std::vector<int> pu = neighbor_positions(g, h, u);
  std::vector<int> pv = neighbor_positions(g, h, v);
  auto on_arc = [&](int p, int a, int b) {  // forward arc a..b inclusive
    return ((p - a + k) % k) <= ((b - a + k) % k);
  };
  bool nested = false;
  for (int a = 0; a < k && !nested; ++a) {
    for (int b = 0; b < k; ++b) {
      if (a == b) continue;
      bool ok = true;
      for (int p : pu) {
        if (!on_arc(p, a, b)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      for (int p : pv) {
        if (!on_arc(p, b, a)) {
          ok = false;
          break;
        }
      }
      if (ok) {
        nested = true;
        break;
      }
    }
  }
  if (!nested) return Nesting::Cross;
  std::vector<int> common;
  std::set_intersection(pu.begin(), pu.end(), pv.begin(), pv.end(),
                        std::back_inserter(common));
  return common.empty() ? Nesting::StrictlyNested : Nesting::Nested;
}

namespace {

struct Labeling {
  // h(j), 1-based, as vertex ids plus adjacency indicators for u and v.
  std::vector<int> order;
  std::vector<char> nu, nv;  // size k+1, 1-based
  int count_u = 0, count_v = 0;
};

Labeling build_labeling(const Graph& g, const Hole& h, int rot, int dir, int u, int v) {
  int k = h.length();
  Labeling lab;
  lab.order.resize(static_cast<std::size_t>(k));
  lab.nu.assign(static_cast<std::size_t>(k + 1), 0);
  lab.nv.assign(static_cast<std::size_t>(k + 1), 0);
  for (int j = 1; j <= k; ++j) {
    int idx = ((rot + dir * (j - 1)) % k + k) % k;
    int vert = h.cycle[static_cast<std::size_t>(idx)];
    lab.order[static_cast<std::size_t>(j - 1)] = vert;
    lab.nu[static_cast<std::size_t>(j)] = g.adjacent(u, vert);
    lab.nv[static_cast<std::size_t>(j)] = g.adjacent(v, vert);
    lab.count_u += lab.nu[static_cast<std::size_t>(j)];
    lab.count_v += lab.nv[static_cast<std::size_t>(j)];
  }
  return lab;
}

}  // namespace

std::optional<MncConfig> mnc_classify(const Graph& g, const Hole& h, int u, int v) {
  if (h.contains(u) || h.contains(v)) {
    throw ContractError("mnc_classify: vertices must lie outside the hole");
  }
  if (g.adjacent(u, v)) throw ContractError("mnc_classify: vertices must be non-adjacent");
  if (classify_vertex(g, h, u).kind != RoleKind::Major ||
      classify_vertex(g, h, v).kind != RoleKind::Major) {
    throw ContractError("mnc_classify: both vertices must be major");
  }
  int k = h.length();

  // For a labeling and role order (a plays u's part), test configuration cfg.
  auto match = [&](int cfg, const Labeling& lab, bool swapped,
                   int* split) -> bool {
    const auto& nu = swapped ? lab.nv : lab.nu;
    const auto& nv = swapped ? lab.nu : lab.nv;
    int cu = swapped ? lab.count_v : lab.count_u;
    int cv = swapped ? lab.count_u : lab.count_v;
    auto all_of_hole = [&](int c) { return c == k; };
    *split = -1;
    switch (cfg) {
      case 1:
        return k == 4 && all_of_hole(cu) && all_of_hole(cv);
      case 2:
        return k == 5 && all_of_hole(cu) && all_of_hole(cv);
      case 3:
        return k == 6 && cu == 3 && cv == 3 && nu[1] && nu[3] && nu[5] && nv[2] &&
               nv[4] && nv[6];
      case 4:
        return k >= 5 && nu[1] && nu[2] && nu[3] && nu[4] && nv[1] && nv[2] &&
               nv[3] && nv[4] && cv == 4 && cu > 4;
      default:
        break;
    }
    // Configurations 5..8 are parameterized by a split index i with
    // 3 < i < k-1. H1 = {h1} u {h_{i+1}..h_k}, H2 = {h2..h_i}.
    for (int i = 4; i <= k - 2; ++i) {
      auto in_h1 = [&](int j) { return j == 1 || j >= i + 1; };
      auto in_h2 = [&](int j) { return j >= 2 && j <= i; };
      auto in_h1_int = [&](int j) { return j >= i + 2; };
      auto in_h2_int = [&](int j) { return j >= 3 && j <= i - 1; };
      bool ok = false;
      switch (cfg) {
        case 5: {
          if (!(nu[1] && nu[2] && nu[i] && nu[i + 1] && nv[1] && nv[2] && nv[i] &&
                nv[i + 1])) {
            break;
          }
          if (cu <= 4 || cv <= 4) break;
          ok = true;
          for (int j = 1; j <= k && ok; ++j) {
            if (nu[j] && !(in_h1(j) || j == 2 || j == i)) ok = false;
            if (nv[j] && !(in_h2(j) || j == 1 || j == i + 1)) ok = false;
          }
          break;
        }
        case 6: {
          if (!(nu[1] && nu[2] && nu[i] && nu[i + 1] && nv[1] && nv[2] && nv[i] &&
                nv[i + 1])) {
            break;
          }
          if (cv != 4) break;
          bool u_in_1 = false, u_in_2 = false;
          for (int j = 1; j <= k; ++j) {
            if (nu[j] && in_h1_int(j)) u_in_1 = true;
            if (nu[j] && in_h2_int(j)) u_in_2 = true;
          }
          ok = u_in_1 && u_in_2;
          break;
        }
        case 7: {
          if (!(nu[1] && nu[2] && nu[i] && nv[1] && nv[2] && nv[i])) break;
          bool u_other = false, v_other = false;
          ok = true;
          for (int j = 1; j <= k && ok; ++j) {
            if (nu[j] && !(j == 1 || j == 2 || j == i)) u_other = true;
            if (nv[j] && !(j == 1 || j == 2 || j == i)) v_other = true;
            if (nu[j] && !(in_h1(j) || j == 2 || j == i)) ok = false;
            if (nv[j] && !(in_h2(j) || j == 1)) ok = false;
          }
          ok = ok && u_other && v_other;
          break;
        }
        case 8: {
          if (!(nu[1] && nu[2] && nv[1] && nv[2])) break;
          bool u_other = false, v_other = false;
          ok = true;
          for (int j = 1; j <= k && ok; ++j) {
            if (nu[j] && !(j == 1 || j == 2)) u_other = true;
            if (nv[j] && !(j == 1 || j == 2)) v_other = true;
            if (nu[j] && !(in_h1(j) || j == 2)) ok = false;
            if (nv[j] && !(in_h2(j) || j == 1)) ok = false;
          }
          ok = ok && u_other && v_other;
          break;
        }
        default:
          break;
      }
      if (ok) {
        *split = i;
        return true;
      }
    }
    return false;
  };

  for (int cfg = 1; cfg <= 8; ++cfg) {
    for (int swapped = 0; swapped < 2; ++swapped) {
      for (int rot = 0; rot < k; ++rot) {
        for (int dir : {1, -1}) {
          Labeling lab = build_labeling(g, h, rot, dir, u, v);
          int split = -1;
          if (match(cfg, lab, swapped != 0, &split)) {
            MncConfig out;
            out.config_id = cfg;
            out.u = swapped ? v : u;
            out.v = swapped ? u : v;
            out.hole_order = lab.order;
            out.split_index = split;
            return out;
          }
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<std::pair<int, int>> significant_witness(const Graph& g, const Hole& h,
                                                       int w, const Path& p) {
  if (p.empty()) return std::nullopt;
  if (classify_vertex(g, h, w).kind != RoleKind::Major) {
    throw ContractError("significant_witness: w must be major for the hole");
  }
  std::vector<int> first_att, last_att;
  for (int i = 0; i < h.length(); ++i) {
    int hv = h.cycle[static_cast<std::size_t>(i)];
    if (g.adjacent(p.front(), hv) && !g.adjacent(w, hv)) first_att.push_back(hv);
    if (g.adjacent(p.back(), hv)) last_att.push_back(hv);
  }
  std::sort(first_att.begin(), first_att.end());
  std::sort(last_att.begin(), last_att.end());
  for (int a : first_att) {
    for (int b : last_att) {
      if (a != b && are_distant(g, h, w, a, b)) return std::make_pair(a, b);
    }
  }
  return std::nullopt;
}

namespace {

// Violation test for one distant pair: are the attachment sets connected
// inside G \ N[w]?
bool pair_violated(const Graph& g, int w, int a, int b) {
  VertexSet nw = closed_neighborhood(g, VertexSet{w});
  VertexSet universe = set_difference(VertexSet::range(g.vertex_count()), nw);
  VertexSet att_a, att_b;
  for (int x : g.neighbors(a)) {
    if (universe.contains(x)) att_a.insert(x);
  }
  for (int x : g.neighbors(b)) {
    if (universe.contains(x)) att_b.insert(x);
  }
  if (att_a.empty() || att_b.empty()) return false;
  if (!set_intersection(att_a, att_b).empty()) return true;
  for (const auto& comp : components(g, universe)) {
    bool hits_a = !set_intersection(comp, att_a).empty();
    bool hits_b = !set_intersection(comp, att_b).empty();
    if (hits_a && hits_b) return true;
  }
  return false;
}

bool hub_side_condition(const Graph& g, const Hole& h, int w,
                        const std::vector<int>& majors) {
  HoleRole role = classify_vertex(g, h, w);
  if (!role.is_hub) return true;
  for (int m : majors) {
    if (!classify_vertex(g, h, m).is_hub) return false;
  }
  return true;
}

std::vector<int> major_vertices(const Graph& g, const Hole& h) {
  std::vector<int> majors;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (h.contains(v)) continue;
    if (classify_vertex(g, h, v).kind == RoleKind::Major) majors.push_back(v);
  }
  return majors;
}

void check_pairs(const Graph& g, const Hole& h, int w, TheoremReport* report) {
  int k = h.length();
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      int a = h.cycle[static_cast<std::size_t>(i)];
      int b = h.cycle[static_cast<std::size_t>(j)];
      bool a_free = !g.adjacent(w, a);
      bool b_free = !g.adjacent(w, b);
      if (!a_free && !b_free) continue;
      if (!a_free) std::swap(a, b);
      if (!are_distant(g, h, w, a, b)) continue;
      ++report->pairs_checked;
      if (pair_violated(g, w, a, b)) report->violations.emplace_back(a, b);
    }
  }
}

}  // namespace

TheoremReport verify_major_neighbor_theorem(const Graph& g, const Hole& h, int w,
                                            std::optional<bool> member_hint,
                                            int member_cap) {
  TheoremReport report;
  if (h.length() <= 6) {
    report.skip_reason = "hole length <= 6";
    return report;
  }
  if (h.contains(w) || classify_vertex(g, h, w).kind != RoleKind::Major) {
    report.skip_reason = "w is not a major vertex for the hole";
    return report;
  }
  if (!hub_side_condition(g, h, w, major_vertices(g, h))) {
    report.skip_reason = "w is a hub but not every major vertex is";
    return report;
  }
  bool member = member_hint.has_value()
                    ? *member_hint
                    : is_class_member(g, member_cap).status == MemberStatus::Member;
  if (!member) {
    report.skip_reason = "graph is not a verified class member";
    return report;
  }
  report.applicable = true;
  check_pairs(g, h, w, &report);
  return report;
}

TheoremReport verify_major_neighbor_theorem_all(const Graph& g, const Hole& h,
                                                std::optional<bool> member_hint,
                                                int member_cap) {
  TheoremReport report;
  if (h.length() <= 6) {
    report.skip_reason = "hole length <= 6";
    return report;
  }
  bool member = member_hint.has_value()
                    ? *member_hint
                    : is_class_member(g, member_cap).status == MemberStatus::Member;
  if (!member) {
    report.skip_reason = "graph is not a verified class member";
    return report;
  }
  report.applicable = true;
  std::vector<int> majors = major_vertices(g, h);
  for (int w : majors) {
    if (!hub_side_condition(g, h, w, majors)) continue;
    check_pairs(g, h, w, &report);
  }
  return report;
}

std::optional<StarCutsetWitness> star_cutset_witness(const Graph& g, int w) {
  int n = g.vertex_count();
  if (w < 0 || w >= n) throw ContractError("star_cutset_witness: center out of range");
  VertexSet closed = closed_neighborhood(g, VertexSet{w});
  for (int u = 0; u < n; ++u) {
    if (u == w) continue;
    for (int v = u + 1; v < n; ++v) {
      if (v == w) continue;
      VertexSet x = closed;
      x.erase(u);
      x.erase(v);
      VertexSet rest = set_difference(VertexSet::range(n), x);
      int cu = -1, cv = -1, idx = 0;
      for (const auto& comp : components(g, rest)) {
        if (comp.contains(u)) cu = idx;
        if (comp.contains(v)) cv = idx;
        ++idx;
      }
      if (cu >= 0 && cv >= 0 && cu != cv) {
        return StarCutsetWitness{x, w, u, v};
      }
    }
  }
  return std::nullopt;
}

}  // namespace seplab
