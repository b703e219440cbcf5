#include "shk/combinatorial.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>
#include <unordered_set>

#include "shk/errors.hpp"
#include "shk/homology.hpp"

namespace shk {

namespace {

constexpr int kMaxOrderSearchFacets = 40;

struct BudgetExhausted {};

struct Tracker {
  long long nodes = 0;
  std::optional<long long> cap;
  void tick() {
    ++nodes;
    if (cap && nodes > *cap) throw BudgetExhausted{};
  }
};

std::string masks_key(const std::vector<Face>& facets) {
  std::string key;
  key.reserve(facets.size() * 8);
  for (Face f : facets)
    for (int i = 0; i < 8; ++i) key.push_back(static_cast<char>((f >> (8 * i)) & 0xff));
  return key;
}

bool shedding_on_masks(const std::vector<Face>& facets, int x) {
  Face b = face_bit(x);
  for (Face f : facets) {
    if (!(f & b)) continue;
    Face need = f & ~b;
    bool covered = false;
    for (Face g : facets) {
      if (g & b) continue;
      if (face_subset(need, g)) {
        covered = true;
        break;
      }
    }
    if (!covered) return false;
  }
  return true;
}

bool dismissing_on_masks(const std::vector<Face>& facets, int x) {
  return mdim_of_facets(deletion_facets(facets, x)) >= mdim_of_facets(facets);
}

// Candidate order for the decomposition searches: support vertices by
// descending degree in the pure mdim-skeleton, ties by id.
std::vector<int> candidate_vertices(const std::vector<Face>& facets) {
  Face support = 0;
  for (Face f : facets) support |= f;
  std::vector<Face> skel = pure_skeleton_facets(facets, mdim_of_facets(facets));
  std::vector<std::pair<int, int>> scored;  // (-degree, id)
  for (int id : face_ids(support)) {
    int deg = 0;
    for (Face f : skel)
      if (face_has(f, id)) ++deg;
    scored.emplace_back(-deg, id);
  }
  std::sort(scored.begin(), scored.end());
  std::vector<int> out;
  out.reserve(scored.size());
  for (auto& [negdeg, id] : scored) out.push_back(id);
  return out;
}

// Shared recursion for vertex decomposability (shedding vertices) and vertex
// dismissibility (dismissing vertices). Works on raw facet masks over a fixed
// universe; ghost vertices never appear among candidates.
struct DecompositionSearch {
  bool use_shedding;
  const VertexSet& labels;
  Tracker& tracker;
  std::unordered_map<std::string, std::optional<Json>> memo;  // key -> tree when true

  std::optional<Json> run(const std::vector<Face>& facets) {
    tracker.tick();
    if (facets.size() == 1) return Json{{"leaf", "simplex"}};
    std::string key = masks_key(facets);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    std::optional<Json> result;
    for (int x : candidate_vertices(facets)) {
      bool admissible = use_shedding ? shedding_on_masks(facets, x) : dismissing_on_masks(facets, x);
      if (!admissible) continue;
      auto del = run(deletion_facets(facets, x));
      if (!del) continue;
      auto lk = run(link_facets(facets, face_bit(x)));
      if (!lk) continue;
      result = Json{{"vertex", labels.label(x)}, {"del", *del}, {"link", *lk}};
      break;
    }
    memo[key] = result;
    return result;
  }
};

Decision run_decomposition(const SimplicialComplex& c, bool use_shedding,
                           const SearchOptions& opts) {
  if (c.is_void()) throw input_error("decider on the void complex");
  Tracker tracker{0, opts.node_budget};
  Decision d;
  d.exact = !opts.node_budget.has_value();
  try {
    DecompositionSearch search{use_shedding, c.vertices(), tracker, {}};
    auto tree = search.run(c.facets());
    d.value = tree.has_value();
    if (tree)
      d.certificate = Certificate{use_shedding ? "shedding-tree" : "dismissing-tree", *tree};
  } catch (const BudgetExhausted&) {
    d.value = std::nullopt;
  }
  d.nodes = tracker.nodes;
  return d;
}

// Maximal pairwise intersections of `f` with the placed facets; this is the
// facet list of ⟨F_j⟩ ∩ ⋃ placed.
std::vector<Face> step_intersections(const std::vector<Face>& facets, std::uint64_t placed, Face f) {
  std::vector<Face> inter;
  for (std::size_t i = 0; i < facets.size(); ++i)
    if ((placed >> i) & 1) inter.push_back(f & facets[i]);
  return antichain_maximal(std::move(inter));
}

bool shelling_step_ok(const std::vector<Face>& facets, std::uint64_t placed, Face f) {
  int want = face_card(f) - 1;
  for (Face m : step_intersections(facets, placed, f))
    if (face_card(m) != want) return false;
  return true;
}

// Classical order search over all facets; dead placed-sets are memoized
// because the viability of a completion depends only on the placed set.
Decision run_shelling_search(const SimplicialComplex& c, const SearchOptions& opts) {
  if (c.is_void()) throw input_error("decider on the void complex");
  const std::vector<Face>& facets = c.facets();
  const int q = static_cast<int>(facets.size());
  Decision d;
  d.exact = !opts.node_budget.has_value();
  auto make_cert = [&](const std::vector<int>& order) {
    Json list = Json::array();
    for (int idx : order) list.push_back(c.vertices().labels_of(facets[static_cast<std::size_t>(idx)]));
    return Certificate{"shelling-order", Json{{"order", list}}};
  };
  if (q == 1) {
    d.value = true;
    d.certificate = make_cert({0});
    d.nodes = 1;
    return d;
  }
  if (q > kMaxOrderSearchFacets)
    throw capacity_error("facet order search limited to " +
                         std::to_string(kMaxOrderSearchFacets) + " facets");
  const std::uint64_t target = (std::uint64_t{1} << q) - 1;

  // A pure shellable complex is strongly connected: consecutive facets in a
  // shelling meet in codimension one, so if the codimension-one facet graph
  // is disconnected the search cannot succeed.
  if (c.is_pure()) {
    const int want = face_card(facets[0]) - 1;
    std::vector<int> parent(static_cast<std::size_t>(q));
    for (int i = 0; i < q; ++i) parent[static_cast<std::size_t>(i)] = i;
    auto find = [&](int v) {
      while (parent[static_cast<std::size_t>(v)] != v)
        v = parent[static_cast<std::size_t>(v)] =
            parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
      return v;
    };
    int components = q;
    for (int i = 0; i < q && components > 1; ++i)
      for (int j = i + 1; j < q; ++j)
        if (face_card(facets[static_cast<std::size_t>(i)] & facets[static_cast<std::size_t>(j)]) == want) {
          int ri = find(i), rj = find(j);
          if (ri != rj) {
            parent[static_cast<std::size_t>(ri)] = rj;
            --components;
          }
        }
    if (components > 1) {
      d.value = false;
      d.nodes = 1;
      return d;
    }
  }

  // Descending size accelerates positive searches; exhaustive either way.
  std::vector<int> try_order(static_cast<std::size_t>(q));
  for (int i = 0; i < q; ++i) try_order[static_cast<std::size_t>(i)] = i;
  std::sort(try_order.begin(), try_order.end(), [&](int a, int b) {
    return face_card(facets[static_cast<std::size_t>(a)]) > face_card(facets[static_cast<std::size_t>(b)]);
  });

  Tracker tracker{0, opts.node_budget};
  std::unordered_set<std::uint64_t> dead;
  std::vector<int> order;
  auto dfs = [&](auto&& self, std::uint64_t placed) -> bool {
    tracker.tick();
    if (placed == target) return true;
    if (dead.contains(placed)) return false;
    for (int idx : try_order) {
      if ((placed >> idx) & 1) continue;
      Face f = facets[static_cast<std::size_t>(idx)];
      if (placed != 0 && !shelling_step_ok(facets, placed, f)) continue;
      order.push_back(idx);
      if (self(self, placed | (std::uint64_t{1} << idx))) return true;
      order.pop_back();
    }
    dead.insert(placed);
    return false;
  };
  try {
    bool found = dfs(dfs, 0);
    d.value = found;
    if (found) d.certificate = make_cert(order);
  } catch (const BudgetExhausted&) {
    d.value = std::nullopt;
  }
  d.nodes = tracker.nodes;
  return d;
}

// Orders a block of equal-size faces so that each attaches to the growing
// pure complex along a pure codimension-one intersection. `present` holds
// the faces already built; the very first face of the whole order is
// unconstrained. Returns the order found, or nothing.
std::optional<std::vector<Face>> shell_block(const std::vector<Face>& block,
                                             const std::vector<Face>& present,
                                             Tracker& tracker) {
  const int q = static_cast<int>(block.size());
  if (q == 0) return std::vector<Face>{};
  if (q > kMaxOrderSearchFacets)
    throw capacity_error("skeleton block search limited to " +
                         std::to_string(kMaxOrderSearchFacets) + " faces");
  const std::uint64_t target = (std::uint64_t{1} << q) - 1;
  auto attach_ok = [&](Face g, std::uint64_t added) {
    if (present.empty() && added == 0) return true;  // first face overall
    std::vector<Face> inter;
    for (Face u : present) inter.push_back(g & u);
    for (int i = 0; i < q; ++i)
      if ((added >> i) & 1) inter.push_back(g & block[static_cast<std::size_t>(i)]);
    int want = face_card(g) - 1;
    for (Face m : antichain_maximal(std::move(inter)))
      if (face_card(m) != want) return false;
    return true;
  };
  std::unordered_set<std::uint64_t> dead;
  std::vector<Face> order;
  auto dfs = [&](auto&& self, std::uint64_t added) -> bool {
    tracker.tick();
    if (added == target) return true;
    if (dead.contains(added)) return false;
    for (int i = 0; i < q; ++i) {
      if ((added >> i) & 1) continue;
      if (!attach_ok(block[static_cast<std::size_t>(i)], added)) continue;
      order.push_back(block[static_cast<std::size_t>(i)]);
      if (self(self, added | (std::uint64_t{1} << i))) return true;
      order.pop_back();
    }
    dead.insert(added);
    return false;
  };
  if (!dfs(dfs, 0)) return std::nullopt;
  return order;
}

// Scaling-order search. A facet step is admissible when the facet's new
// mdim-faces can be shelled onto the pure-skeleton union built so far; the
// blocks concatenate into a shelling of the initial-dimension skeleton, so a
// found order certifies skeleton shellability, and conversely a skeleton
// shelling induces such an order facet by facet.
Decision run_scaling_search(const SimplicialComplex& c, const SearchOptions& opts) {
  if (c.is_void()) throw input_error("decider on the void complex");
  const std::vector<Face>& facets = c.facets();
  const int q = static_cast<int>(facets.size());
  Decision d;
  d.exact = !opts.node_budget.has_value();
  auto face_labels = [&](Face f) { return c.vertices().labels_of(f); };
  auto make_cert = [&](const std::vector<int>& order,
                       const std::vector<std::vector<Face>>& refinements) {
    Json order_json = Json::array();
    for (int idx : order) order_json.push_back(face_labels(facets[static_cast<std::size_t>(idx)]));
    Json refine_json = Json::array();
    for (const auto& block : refinements) {
      Json faces = Json::array();
      for (Face g : block) faces.push_back(face_labels(g));
      refine_json.push_back(faces);
    }
    return Certificate{"scaling-order", Json{{"order", order_json}, {"refinements", refine_json}}};
  };
  if (q == 1) {
    d.value = true;
    std::vector<Face> block = pure_skeleton_facets({facets[0]}, face_dim(facets[0]));
    d.certificate = make_cert({0}, {block});
    d.nodes = 1;
    return d;
  }
  if (q > kMaxOrderSearchFacets)
    throw capacity_error("facet order search limited to " +
                         std::to_string(kMaxOrderSearchFacets) + " facets");
  const int b = c.mdim();
  const std::uint64_t target = (std::uint64_t{1} << q) - 1;

  std::vector<std::vector<Face>> b_faces(static_cast<std::size_t>(q));
  for (int i = 0; i < q; ++i)
    b_faces[static_cast<std::size_t>(i)] = pure_skeleton_facets({facets[static_cast<std::size_t>(i)]}, b);

  std::vector<int> try_order(static_cast<std::size_t>(q));
  for (int i = 0; i < q; ++i) try_order[static_cast<std::size_t>(i)] = i;
  std::sort(try_order.begin(), try_order.end(), [&](int lhs, int rhs) {
    return face_card(facets[static_cast<std::size_t>(lhs)]) > face_card(facets[static_cast<std::size_t>(rhs)]);
  });

  Tracker tracker{0, opts.node_budget};
  std::unordered_set<std::uint64_t> dead;
  std::vector<int> order;
  std::vector<std::vector<Face>> refinements;
  std::vector<Face> present;
  std::unordered_set<Face> present_set;
  auto dfs = [&](auto&& self, std::uint64_t placed) -> bool {
    tracker.tick();
    if (placed == target) return true;
    if (dead.contains(placed)) return false;
    for (int idx : try_order) {
      if ((placed >> idx) & 1) continue;
      std::vector<Face> block;
      for (Face g : b_faces[static_cast<std::size_t>(idx)])
        if (!present_set.contains(g)) block.push_back(g);
      auto refined = shell_block(block, present, tracker);
      if (!refined) continue;
      order.push_back(idx);
      refinements.push_back(*refined);
      for (Face g : *refined) {
        present.push_back(g);
        present_set.insert(g);
      }
      if (self(self, placed | (std::uint64_t{1} << idx))) return true;
      for (Face g : *refined) {
        present.pop_back();
        present_set.erase(g);
      }
      refinements.pop_back();
      order.pop_back();
    }
    dead.insert(placed);
    return false;
  };
  try {
    bool found = dfs(dfs, 0);
    d.value = found;
    if (found) d.certificate = make_cert(order, refinements);
  } catch (const BudgetExhausted&) {
    d.value = std::nullopt;
  }
  d.nodes = tracker.nodes;
  return d;
}

}  // namespace

bool is_shedding_vertex(const SimplicialComplex& c, int vertex_id) {
  if (c.is_void()) throw input_error("shedding test on the void complex");
  if (vertex_id < 0 || vertex_id >= c.vertices().size())
    throw input_error("shedding test: vertex id out of range");
  return shedding_on_masks(c.facets(), vertex_id);
}

bool is_dismissing_vertex(const SimplicialComplex& c, int vertex_id) {
  if (c.is_void()) throw input_error("dismissing test on the void complex");
  if (vertex_id < 0 || vertex_id >= c.vertices().size())
    throw input_error("dismissing test: vertex id out of range");
  return dismissing_on_masks(c.facets(), vertex_id);
}

Decision is_vertex_decomposable(const SimplicialComplex& c, const SearchOptions& opts) {
  return run_decomposition(c, /*use_shedding=*/true, opts);
}

Decision is_vertex_dismissible(const SimplicialComplex& c, const SearchOptions& opts) {
  return run_decomposition(c, /*use_shedding=*/false, opts);
}

Decision is_shellable(const SimplicialComplex& c, const SearchOptions& opts) {
  return run_shelling_search(c, opts);
}

Decision is_scalable(const SimplicialComplex& c, const SearchOptions& opts) {
  return run_scaling_search(c, opts);
}

namespace {

// Spanning edges of the facet graph under |F ∩ G| ≥ mdim, or empty when the
// graph is disconnected.
std::optional<std::vector<std::array<int, 2>>> facet_spanning_edges(const SimplicialComplex& c) {
  if (c.is_void()) throw input_error("weak connectedness of the void complex");
  const std::vector<Face>& facets = c.facets();
  const int q = static_cast<int>(facets.size());
  const int need = c.mdim();
  std::vector<int> parent(static_cast<std::size_t>(q));
  for (int i = 0; i < q; ++i) parent[static_cast<std::size_t>(i)] = i;
  auto find = [&](int v) {
    while (parent[static_cast<std::size_t>(v)] != v) {
      parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
      v = parent[static_cast<std::size_t>(v)];
    }
    return v;
  };
  std::vector<std::array<int, 2>> edges;
  for (int i = 0; i < q; ++i)
    for (int j = i + 1; j < q; ++j) {
      if (face_card(facets[static_cast<std::size_t>(i)] & facets[static_cast<std::size_t>(j)]) < need) continue;
      int ri = find(i), rj = find(j);
      if (ri != rj) {
        parent[static_cast<std::size_t>(ri)] = rj;
        edges.push_back({i, j});
      }
    }
  if (static_cast<int>(edges.size()) != q - 1) return std::nullopt;
  return edges;
}

}  // namespace

bool is_weakly_connected(const SimplicialComplex& c) {
  return facet_spanning_edges(c).has_value();
}

std::optional<Certificate> weak_connection_certificate(const SimplicialComplex& c) {
  auto edges = facet_spanning_edges(c);
  if (!edges) return std::nullopt;
  Json list = Json::array();
  for (auto [i, j] : *edges) {
    list.push_back(Json{
        {"a", c.vertices().labels_of(c.facets()[static_cast<std::size_t>(i)])},
        {"b", c.vertices().labels_of(c.facets()[static_cast<std::size_t>(j)])}});
  }
  return Certificate{"facet-path-set", Json{{"edges", list}}};
}

Decision has_k_property(const SimplicialComplex& c, int k, SkeletalProp prop,
                        const std::optional<FieldSpec>& field, const SearchOptions& opts) {
  if (c.is_void()) throw input_error("k-property test on the void complex");
  if (k < -1 || k > c.dim()) throw input_error("k-property index out of range");
  if ((prop == SkeletalProp::cohen_macaulay) != field.has_value())
    throw input_error("field is required exactly for the Cohen-Macaulay property");
  Decision d;
  d.exact = !opts.node_budget.has_value();
  Json ladder = Json::array();
  bool any_unknown = false;
  for (int j = 0; j <= k; ++j) {
    SimplicialComplex skel = c.skeleton(j, SkeletonMode::pure);
    if (prop == SkeletalProp::cohen_macaulay) {
      bool ok = is_cohen_macaulay(skel, *field);
      if (!ok) {
        d.value = false;
        return d;
      }
      ladder.push_back(Json{{"skeleton", j}, {"cohen_macaulay", true}, {"field", field->name()}});
      continue;
    }
    Decision sub = (prop == SkeletalProp::vertex_decomposable) ? is_vertex_decomposable(skel, opts)
                                                               : is_shellable(skel, opts);
    d.nodes += sub.nodes;
    if (sub.is_false()) {
      d.value = false;
      return d;
    }
    if (sub.is_unknown()) {
      any_unknown = true;
      continue;
    }
    ladder.push_back(Json{{"skeleton", j},
                          {"kind", sub.certificate->kind},
                          {"payload", sub.certificate->payload}});
  }
  if (any_unknown) {
    d.value = std::nullopt;
    return d;
  }
  d.value = true;
  Json payload{{"k", k}, {"steps", ladder}};
  payload["prop"] = prop == SkeletalProp::vertex_decomposable ? "vertex-decomposable"
                    : prop == SkeletalProp::shellable         ? "shellable"
                                                              : "cohen-macaulay";
  if (field) payload["field"] = field->name();
  d.certificate = Certificate{"skeleton-ladder", payload};
  return d;
}

}  // namespace shk
