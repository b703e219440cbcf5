#include "shk/certify.hpp"

#include <algorithm>
#include <set>

#include "shk/combinatorial.hpp"
#include "shk/homology.hpp"
#include "shk/ideal_properties.hpp"
#include "shk/io.hpp"

namespace shk {

namespace {

struct Reject {
  std::string reason;
};

void require(bool cond, const std::string& reason) {
  if (!cond) throw Reject{reason};
}

Face face_from_labels(const SimplicialComplex& c, const Json& labels) {
  Face f = 0;
  for (const auto& l : labels) f |= face_bit(c.vertices().id(l.get<std::string>()));
  return f;
}

// --- shedding / dismissing trees ------------------------------------------

void check_decomposition_tree(const SimplicialComplex& c, const Json& node, bool shedding) {
  if (node.contains("leaf")) {
    require(node["leaf"] == "simplex", "unknown leaf kind in decomposition tree");
    require(c.is_simplex(), "leaf claims a simplex but the complex has " +
                                std::to_string(c.facets().size()) + " facets");
    return;
  }
  require(node.contains("vertex") && node.contains("del") && node.contains("link"),
          "malformed decomposition tree node");
  int x = c.vertices().id(node["vertex"].get<std::string>());
  require(face_has(c.support(), x), "chosen vertex is not in the support");
  if (shedding)
    require(is_shedding_vertex(c, x), "vertex " + node["vertex"].get<std::string>() + " is not shedding");
  else
    require(is_dismissing_vertex(c, x), "vertex " + node["vertex"].get<std::string>() + " is not dismissing");
  check_decomposition_tree(c.deletion(x), node["del"], shedding);
  check_decomposition_tree(c.link(face_bit(x)), node["link"], shedding);
}

// --- facet orders -----------------------------------------------------------

// The subcomplex ⟨f⟩ ∩ ⋃⟨placed⟩ computed by raw subset enumeration, kept
// deliberately close to the definition.
std::vector<Face> order_step_facets(Face f, const std::vector<Face>& placed) {
  std::vector<Face> shared;
  Face sub = f;
  while (true) {
    for (Face p : placed)
      if (face_subset(sub, p)) {
        shared.push_back(sub);
        break;
      }
    if (sub == 0) break;
    sub = (sub - 1) & f;
  }
  return antichain_maximal(std::move(shared));
}

void check_shelling_order(const SimplicialComplex& c, const Json& payload) {
  require(payload.contains("order"), "order certificate without an order");
  std::vector<Face> listed;
  for (const auto& entry : payload["order"]) listed.push_back(face_from_labels(c, entry));
  std::vector<Face> sorted = listed;
  std::sort(sorted.begin(), sorted.end(), face_canon_less);
  require(sorted == c.facets(), "order does not list each facet exactly once");
  std::vector<Face> placed;
  for (std::size_t j = 0; j < listed.size(); ++j) {
    Face f = listed[j];
    if (j > 0) {
      std::vector<Face> inter = order_step_facets(f, placed);
      require(!inter.empty(), "empty step intersection");
      for (Face m : inter)
        require(face_dim(m) == face_dim(f) - 1,
                "step " + std::to_string(j + 1) + " intersection is not pure of codimension one");
    }
    placed.push_back(f);
  }
}

// A scaling order carries per-facet refinements: each facet's new mdim-faces
// must attach one at a time along pure codimension-one intersections, which
// concatenates into a shelling of the initial-dimension skeleton.
void check_scaling_order(const SimplicialComplex& c, const Json& payload) {
  require(payload.contains("order") && payload.contains("refinements"),
          "scaling certificate needs an order and refinements");
  std::vector<Face> listed;
  for (const auto& entry : payload["order"]) listed.push_back(face_from_labels(c, entry));
  std::vector<Face> sorted = listed;
  std::sort(sorted.begin(), sorted.end(), face_canon_less);
  require(sorted == c.facets(), "order does not list each facet exactly once");
  require(payload["refinements"].size() == listed.size(),
          "one refinement block per facet is required");
  const int b = c.mdim();
  std::vector<Face> present;
  for (std::size_t j = 0; j < listed.size(); ++j) {
    Face f = listed[j];
    std::vector<Face> block;
    for (const auto& entry : payload["refinements"][j])
      block.push_back(face_from_labels(c, entry));
    // Coverage: the block is exactly the missing b-faces of this facet.
    std::vector<Face> expected = pure_skeleton_facets({f}, b);
    std::erase_if(expected, [&](Face g) {
      return std::find(present.begin(), present.end(), g) != present.end();
    });
    std::vector<Face> block_sorted = block;
    std::sort(block_sorted.begin(), block_sorted.end(), face_canon_less);
    std::sort(expected.begin(), expected.end(), face_canon_less);
    require(block_sorted == expected,
            "refinement block " + std::to_string(j + 1) +
                " does not list the facet's new skeleton faces exactly once");
    for (Face g : block) {
      if (!present.empty()) {
        std::vector<Face> inter = order_step_facets(g, present);
        for (Face m : inter)
          require(face_dim(m) == face_dim(g) - 1,
                  "skeleton face attaches impurely in block " + std::to_string(j + 1));
      }
      present.push_back(g);
    }
  }
}

// --- facet path set ---------------------------------------------------------

void check_facet_paths(const SimplicialComplex& c, const Json& payload) {
  require(payload.contains("edges"), "facet-path-set without edges");
  const auto& facets = c.facets();
  const int q = static_cast<int>(facets.size());
  int need = c.mdim();
  std::vector<int> parent(static_cast<std::size_t>(q));
  for (int i = 0; i < q; ++i) parent[static_cast<std::size_t>(i)] = i;
  auto find = [&](auto&& self, int v) -> int {
    return parent[static_cast<std::size_t>(v)] == v ? v : self(self, parent[static_cast<std::size_t>(v)]);
  };
  auto facet_index = [&](const Json& labels) {
    Face f = face_from_labels(c, labels);
    auto it = std::find(facets.begin(), facets.end(), f);
    require(it != facets.end(), "path edge endpoint is not a facet");
    return static_cast<int>(it - facets.begin());
  };
  for (const auto& edge : payload["edges"]) {
    int i = facet_index(edge["a"]), j = facet_index(edge["b"]);
    require(face_card(facets[static_cast<std::size_t>(i)] & facets[static_cast<std::size_t>(j)]) >= need,
            "path edge intersection below the initial dimension");
    parent[static_cast<std::size_t>(find(find, i))] = find(find, j);
  }
  for (int i = 1; i < q; ++i)
    require(find(find, i) == find(find, 0), "path edges do not connect all facets");
}

// --- ideal decomposition trees ----------------------------------------------

int degree_unit_as_zero(const MonomialIdeal& ideal) {
  return ideal.is_unit() ? 0 : ideal.degree();
}

void check_division_tree(const MonomialIdeal& ideal, const Json& node) {
  if (node.contains("leaf")) {
    std::string kind = node["leaf"].get<std::string>();
    if (kind == "zero") {
      require(ideal.is_zero(), "leaf claims the zero ideal");
    } else if (kind == "unit") {
      require(ideal.is_unit(), "leaf claims the unit ideal");
    } else if (kind == "principal") {
      require(ideal.is_principal(), "leaf claims a principal ideal");
    } else {
      throw Reject{"unknown leaf kind in division tree"};
    }
    return;
  }
  require(node.contains("variable") && node.contains("colon") && node.contains("restriction"),
          "malformed division tree node");
  require(ideal.is_proper_nonzero(), "interior node on a base-case ideal");
  int x = ideal.ring().id(node["variable"].get<std::string>());
  MonomialIdeal colon = ideal.colon_variable(x);
  for (const Monomial& g : colon.generators())
    require(g.exponent(x) == 0, "colon ideal keeps the chosen variable");
  require(degree_unit_as_zero(colon) + 1 <= ideal.degree(), "chosen variable is not dividing");
  MonomialIdeal restriction = ideal.restriction_without(x);
  for (const Monomial& g : restriction.generators())
    require(colon.contains(g), "restriction is not contained in the colon ideal");
  check_division_tree(colon.rering_drop(x), node["colon"]);
  check_division_tree(restriction.rering_drop(x), node["restriction"]);
}

void check_splitting_tree(const MonomialIdeal& ideal, const Json& node) {
  if (node.contains("leaf")) {
    std::string kind = node["leaf"].get<std::string>();
    if (kind == "zero") {
      require(ideal.is_zero(), "leaf claims the zero ideal");
    } else if (kind == "unit") {
      require(ideal.is_unit(), "leaf claims the unit ideal");
    } else if (kind == "principal") {
      require(ideal.is_principal(), "leaf claims a principal ideal");
    } else {
      throw Reject{"unknown leaf kind in splitting tree"};
    }
    return;
  }
  require(node.contains("variable") && node.contains("colon") && node.contains("restriction"),
          "malformed splitting tree node");
  int x = ideal.ring().id(node["variable"].get<std::string>());
  std::vector<Monomial> j_part, k_part;
  for (const Monomial& g : ideal.generators()) {
    require(g.exponent(x) <= 1, "split variable has exponent above one");
    if (g.exponent(x) == 1)
      j_part.push_back(g.colon_by_variable(x));
    else
      k_part.push_back(g);
  }
  require(!j_part.empty(), "split variable divides no generator");
  for (const Monomial& k : k_part) {
    bool inside = false;
    for (const Monomial& j : j_part)
      if (j.divides(k)) {
        inside = true;
        break;
      }
    require(inside, "split restriction is not contained in the colon part");
  }
  check_splitting_tree(MonomialIdeal::make(ideal.ring(), j_part).rering_drop(x), node["colon"]);
  check_splitting_tree(MonomialIdeal::make(ideal.ring(), k_part).rering_drop(x), node["restriction"]);
}

// --- quotient orders ---------------------------------------------------------

Monomial parse_monomial_text(const VertexSet& ring, const std::string& text) {
  if (text == "1") return Monomial::one(ring.size());
  std::vector<int> exps(static_cast<std::size_t>(ring.size()), 0);
  std::string token;
  auto flush = [&]() {
    if (token.empty()) return;
    auto caret = token.find('^');
    std::string var = caret == std::string::npos ? token : token.substr(0, caret);
    int e = caret == std::string::npos ? 1 : std::stoi(token.substr(caret + 1));
    exps[static_cast<std::size_t>(ring.id(var))] += e;
    token.clear();
  };
  for (char ch : text) {
    if (ch == ' ' || ch == '*')
      flush();
    else
      token.push_back(ch);
  }
  flush();
  return Monomial(std::move(exps));
}

std::vector<Monomial> minimal_colon(const std::vector<Monomial>& earlier, const Monomial& f) {
  std::vector<Monomial> colon;
  for (const Monomial& g : earlier) colon.push_back(g.colon_by(f));
  std::sort(colon.begin(), colon.end(), Monomial::canon_less);
  std::vector<Monomial> minimal;
  for (const Monomial& m : colon) {
    bool redundant = false;
    for (const Monomial& kept : minimal)
      if (kept.divides(m)) {
        redundant = true;
        break;
      }
    if (!redundant) minimal.push_back(m);
  }
  return minimal;
}

void verify_recorded_step(const VertexSet& ring, const Json& step,
                          const std::vector<Monomial>& minimal, std::size_t index) {
  int deg_colon = 0;
  for (const Monomial& m : minimal) deg_colon = std::max(deg_colon, m.degree());
  require(step["colon_degree"].get<int>() == deg_colon,
          "recorded colon degree is wrong at step " + std::to_string(index + 1));
  std::vector<Monomial> recorded;
  for (const auto& t : step["colon"])
    recorded.push_back(parse_monomial_text(ring, t.get<std::string>()));
  std::sort(recorded.begin(), recorded.end(), Monomial::canon_less);
  require(recorded == minimal,
          "recorded colon generators are wrong at step " + std::to_string(index + 1));
}

void check_linear_quotient_order(const MonomialIdeal& ideal, const Json& payload) {
  require(payload.contains("order"), "quotient certificate without an order");
  std::vector<Monomial> listed;
  for (const auto& entry : payload["order"])
    listed.push_back(parse_monomial_text(ideal.ring(), entry.get<std::string>()));
  std::vector<Monomial> sorted = listed;
  std::sort(sorted.begin(), sorted.end(), Monomial::canon_less);
  require(sorted == ideal.generators(), "order does not list each generator exactly once");
  for (std::size_t j = 1; j < listed.size(); ++j) {
    std::vector<Monomial> earlier(listed.begin(), listed.begin() + static_cast<long>(j));
    std::vector<Monomial> minimal = minimal_colon(earlier, listed[j]);
    for (const Monomial& m : minimal)
      require(m.degree() == 1,
              "step " + std::to_string(j + 1) + " colon is not generated by variables");
    if (payload.contains("steps"))
      verify_recorded_step(ideal.ring(), payload["steps"][j - 1], minimal, j - 1);
  }
}

// Degree-quotient orders mirror scaling orders: after polarization, each
// generator's new degree-deg(I) squarefree multiples must attach with
// variable-generated colons onto the multiples built so far. The classical
// per-step colon bound deg J_j ≤ deg I - deg f_j + 1 is re-checked as well.
void check_degree_quotient_order(const MonomialIdeal& subject, const Json& payload) {
  require(payload.contains("order") && payload.contains("refinements"),
          "degree quotient certificate needs an order and refinements");
  MonomialIdeal ideal = subject;
  if (payload.contains("polarized") && payload["polarized"].get<bool>()) {
    require(!subject.is_squarefree(), "polarized flag on a squarefree subject");
    ideal = polarize(subject);
  }
  const VertexSet& ring = ideal.ring();
  const int n = ring.size();
  const int k = ideal.degree();
  std::vector<Monomial> listed;
  for (const auto& entry : payload["order"])
    listed.push_back(parse_monomial_text(ring, entry.get<std::string>()));
  std::vector<Monomial> sorted = listed;
  std::sort(sorted.begin(), sorted.end(), Monomial::canon_less);
  require(sorted == ideal.generators(), "order does not list each generator exactly once");
  require(payload["refinements"].size() == listed.size(),
          "one refinement block per generator is required");

  std::vector<Monomial> present;
  for (std::size_t j = 0; j < listed.size(); ++j) {
    const Monomial& f = listed[j];
    // Classical bound on the recorded colon data.
    if (j > 0) {
      std::vector<Monomial> earlier(listed.begin(), listed.begin() + static_cast<long>(j));
      std::vector<Monomial> minimal = minimal_colon(earlier, f);
      int deg_colon = 0;
      for (const Monomial& m : minimal) deg_colon = std::max(deg_colon, m.degree());
      require(deg_colon <= k - f.degree() + 1,
              "step " + std::to_string(j + 1) + " violates the degree bound");
      if (payload.contains("steps"))
        verify_recorded_step(ring, payload["steps"][j - 1], minimal, j - 1);
    }
    // Block coverage: exactly the new degree-k squarefree multiples of f.
    std::vector<Monomial> block;
    for (const auto& entry : payload["refinements"][j])
      block.push_back(parse_monomial_text(ring, entry.get<std::string>()));
    std::vector<Monomial> expected;
    for_each_subset_of_size(ring.full_mask() & ~f.support(), k - f.degree(), [&](Face extra) {
      Monomial m = Monomial::from_support(f.support() | extra, n);
      bool already = false;
      for (const Monomial& u : present)
        if (u == m) {
          already = true;
          break;
        }
      if (!already) expected.push_back(m);
    });
    std::vector<Monomial> block_sorted = block;
    std::sort(block_sorted.begin(), block_sorted.end(), Monomial::canon_less);
    std::sort(expected.begin(), expected.end(), Monomial::canon_less);
    require(block_sorted == expected,
            "refinement block " + std::to_string(j + 1) +
                " does not list the generator's new multiples exactly once");
    for (const Monomial& m : block) {
      if (!present.empty()) {
        std::vector<Monomial> minimal = minimal_colon(present, m);
        for (const Monomial& u : minimal)
          require(u.degree() == 1,
                  "multiple attaches with a non-variable colon in block " + std::to_string(j + 1));
      }
      present.push_back(m);
    }
  }
}

// --- skeleton ladder ----------------------------------------------------------

void check_skeleton_ladder(const SimplicialComplex& c, const Json& payload) {
  require(payload.contains("k") && payload.contains("prop") && payload.contains("steps"),
          "malformed skeleton ladder");
  int k = payload["k"].get<int>();
  require(k >= -1 && k <= c.dim(), "ladder bound out of range");
  std::string prop = payload["prop"].get<std::string>();
  const Json& steps = payload["steps"];
  require(static_cast<int>(steps.size()) == k + 1, "ladder does not cover every skeleton");
  for (int j = 0; j <= k; ++j) {
    const Json& step = steps[static_cast<std::size_t>(j)];
    require(step["skeleton"].get<int>() == j, "ladder steps out of order");
    SimplicialComplex skel = c.skeleton(j, SkeletonMode::pure);
    if (prop == "cohen-macaulay") {
      auto field = FieldSpec::parse(payload["field"].get<std::string>());
      require(field.has_value(), "unknown field in ladder");
      require(is_cohen_macaulay(skel, *field),
              "skeleton " + std::to_string(j) + " is not Cohen-Macaulay");
    } else if (prop == "vertex-decomposable") {
      check_decomposition_tree(skel, step["payload"], /*shedding=*/true);
    } else if (prop == "shellable") {
      check_shelling_order(skel, step["payload"]);
    } else {
      throw Reject{"unknown ladder property"};
    }
  }
}

}  // namespace

Json certificate_with_subject(const Certificate& cert, const std::string& property,
                              const SimplicialComplex& subject) {
  return Json{{"kind", cert.kind},
              {"property", property},
              {"subject", Json{{"type", "complex"}, {"text", write_complex(subject)}}},
              {"payload", cert.payload}};
}

Json certificate_with_subject(const Certificate& cert, const std::string& property,
                              const MonomialIdeal& subject) {
  return Json{{"kind", cert.kind},
              {"property", property},
              {"subject", Json{{"type", "ideal"}, {"text", write_ideal(subject)}}},
              {"payload", cert.payload}};
}

ReplayResult check_certificate(const Json& cert) {
  try {
    if (!cert.contains("kind") || !cert.contains("subject") || !cert.contains("payload"))
      return {false, "certificate needs kind, subject, and payload"};
    std::string kind = cert["kind"].get<std::string>();
    const Json& subject = cert["subject"];
    std::string type = subject["type"].get<std::string>();
    if (type == "complex") {
      SimplicialComplex c = parse_complex(subject["text"].get<std::string>());
      if (kind == "shedding-tree")
        check_decomposition_tree(c, cert["payload"], true);
      else if (kind == "dismissing-tree")
        check_decomposition_tree(c, cert["payload"], false);
      else if (kind == "shelling-order")
        check_shelling_order(c, cert["payload"]);
      else if (kind == "scaling-order")
        check_scaling_order(c, cert["payload"]);
      else if (kind == "facet-path-set")
        check_facet_paths(c, cert["payload"]);
      else if (kind == "skeleton-ladder")
        check_skeleton_ladder(c, cert["payload"]);
      else
        return {false, "unknown certificate kind for a complex: " + kind};
    } else if (type == "ideal") {
      MonomialIdeal ideal = parse_ideal(subject["text"].get<std::string>());
      if (kind == "division-tree") {
        const Json& payload = cert["payload"];
        if (payload.contains("polarized") && payload["polarized"].get<bool>())
          check_division_tree(polarize(ideal), payload["tree"]);
        else
          check_division_tree(ideal, payload);
      } else if (kind == "splitting-tree")
        check_splitting_tree(ideal, cert["payload"]);
      else if (kind == "linear-quotient-order")
        check_linear_quotient_order(ideal, cert["payload"]);
      else if (kind == "degree-quotient-order")
        check_degree_quotient_order(ideal, cert["payload"]);
      else
        return {false, "unknown certificate kind for an ideal: " + kind};
    } else {
      return {false, "unknown subject type: " + type};
    }
    return {true, ""};
  } catch (const Reject& r) {
    return {false, r.reason};
  } catch (const std::exception& e) {
    return {false, std::string("certificate replay error: ") + e.what()};
  }
}

}  // namespace shk
