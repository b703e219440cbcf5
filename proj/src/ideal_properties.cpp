#include "shk/ideal_properties.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "shk/errors.hpp"
#include "shk/homology.hpp"

namespace shk {

namespace {

constexpr int kMaxOrderSearchGens = 40;
constexpr std::size_t kLatticeCap = std::size_t{1} << 20;

struct BudgetExhausted {};

struct Tracker {
  long long nodes = 0;
  std::optional<long long> cap;
  void tick() {
    ++nodes;
    if (cap && nodes > *cap) throw BudgetExhausted{};
  }
};

std::string gens_key(const std::vector<Monomial>& gens) {
  std::string key;
  for (const Monomial& g : gens) {
    for (int v = 0; v < g.nvars(); ++v) {
      key += std::to_string(g.exponent(v));
      key.push_back(',');
    }
    key.push_back('|');
  }
  return key;
}

std::vector<Monomial> minimal_monomials(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), Monomial::canon_less);
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> out;
  for (const Monomial& g : gens) {
    bool redundant = false;
    for (const Monomial& kept : out)
      if (kept.divides(g)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(g);
  }
  return out;
}

int max_degree(const std::vector<Monomial>& gens) {
  int d = 0;
  for (const Monomial& g : gens) d = std::max(d, g.degree());
  return d;
}

Face support_of(const std::vector<Monomial>& gens) {
  Face s = 0;
  for (const Monomial& g : gens) s |= g.support();
  return s;
}

// Recursive search for the two ideal decompositions, over a fixed ring.
// `exact_split` toggles between the disjoint generator split and the
// colon-based decomposition with a dividing variable.
struct IdealDecompositionSearch {
  bool exact_split;
  const VertexSet& ring;
  Tracker& tracker;
  std::unordered_map<std::string, std::optional<Json>> memo;

  std::optional<Json> run(const std::vector<Monomial>& gens) {
    tracker.tick();
    if (gens.empty()) return Json{{"leaf", "zero"}};
    if (gens.size() == 1)
      return Json{{"leaf", gens[0].is_one() ? "unit" : "principal"}};
    std::string key = gens_key(gens);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    std::optional<Json> result;
    for (int x : face_ids(support_of(gens))) {
      std::optional<std::pair<std::vector<Monomial>, std::vector<Monomial>>> split =
          exact_split ? try_exact_split(gens, x) : try_division(gens, x);
      if (!split) continue;
      auto j_tree = run(split->first);
      if (!j_tree) continue;
      auto k_tree = run(split->second);
      if (!k_tree) continue;
      result = Json{{"variable", ring.label(x)},
                    {"colon", *j_tree},
                    {"restriction", *k_tree}};
      break;
    }
    memo[key] = result;
    return result;
  }

  // J = {g/x : x | g}, K = {g : x ∤ g}; admissible when x never exceeds
  // exponent 1, divides at least one generator, and K ⊆ J. The containment
  // forces J = (I : x), which is what the duality with shedding vertices
  // needs; without it the split would not even imply linear quotients.
  static std::optional<std::pair<std::vector<Monomial>, std::vector<Monomial>>> try_exact_split(
      const std::vector<Monomial>& gens, int x) {
    std::vector<Monomial> j_part, k_part;
    for (const Monomial& g : gens) {
      int e = g.exponent(x);
      if (e > 1) return std::nullopt;
      if (e == 1)
        j_part.push_back(g.colon_by_variable(x));
      else
        k_part.push_back(g);
    }
    if (j_part.empty()) return std::nullopt;
    for (const Monomial& k : k_part) {
      bool inside = false;
      for (const Monomial& j : j_part)
        if (j.divides(k)) {
          inside = true;
          break;
        }
      if (!inside) return std::nullopt;
    }
    return std::make_pair(std::move(j_part), std::move(k_part));
  }

  // J = (I : x) minimalized, K the x-free restriction; x must be dividing
  // (unit colon counts as degree 0) and J must avoid x entirely.
  static std::optional<std::pair<std::vector<Monomial>, std::vector<Monomial>>> try_division(
      const std::vector<Monomial>& gens, int x) {
    std::vector<Monomial> colon;
    colon.reserve(gens.size());
    for (const Monomial& g : gens) colon.push_back(g.colon_by_variable(x));
    colon = minimal_monomials(std::move(colon));
    for (const Monomial& g : colon)
      if (g.exponent(x) > 0) return std::nullopt;
    bool colon_is_unit = colon.size() == 1 && colon[0].is_one();
    int deg_i = max_degree(gens);
    int deg_j = colon_is_unit ? 0 : max_degree(colon);
    if (deg_j + 1 > deg_i) return std::nullopt;
    std::vector<Monomial> restriction;
    for (const Monomial& g : gens)
      if (g.exponent(x) == 0) restriction.push_back(g);
    return std::make_pair(std::move(colon), std::move(restriction));
  }
};

Decision run_ideal_decomposition(const MonomialIdeal& ideal, bool exact_split,
                                 const SearchOptions& opts) {
  // The division recursion requires J = (I : x) to avoid x, which exponents
  // above one can never satisfy; the decomposition theory lives in squarefree
  // land, so non-squarefree input is polarized first (degrees, colons, and
  // the division structure are preserved).
  const MonomialIdeal* subject = &ideal;
  MonomialIdeal polarized;
  bool was_polarized = false;
  if (!exact_split && ideal.is_proper_nonzero() && !ideal.is_squarefree()) {
    polarized = polarize(ideal);
    subject = &polarized;
    was_polarized = true;
  }
  Tracker tracker{0, opts.node_budget};
  Decision d;
  d.exact = !opts.node_budget.has_value();
  try {
    IdealDecompositionSearch search{exact_split, subject->ring(), tracker, {}};
    auto tree = search.run(subject->generators());
    d.value = tree.has_value();
    if (tree) {
      Json payload = *tree;
      if (was_polarized) payload = Json{{"polarized", true}, {"tree", *tree}};
      d.certificate = Certificate{exact_split ? "splitting-tree" : "division-tree", payload};
    }
  } catch (const BudgetExhausted&) {
    d.value = std::nullopt;
  }
  d.nodes = tracker.nodes;
  return d;
}

// Minimal generators of (f_placed) : f.
std::vector<Monomial> step_colon(const std::vector<Monomial>& gens, std::uint64_t placed, const Monomial& f) {
  std::vector<Monomial> colon;
  for (std::size_t i = 0; i < gens.size(); ++i)
    if ((placed >> i) & 1) colon.push_back(gens[i].colon_by(f));
  return minimal_monomials(std::move(colon));
}

Decision run_linear_quotient_search(const MonomialIdeal& ideal, const SearchOptions& opts) {
  if (!ideal.is_proper_nonzero())
    throw input_error("quotient order search needs a proper nonzero ideal");
  const std::vector<Monomial>& gens = ideal.generators();
  const int q = static_cast<int>(gens.size());
  Decision d;
  d.exact = !opts.node_budget.has_value();
  auto make_cert = [&](const std::vector<int>& order, const std::vector<Json>& steps) {
    Json order_json = Json::array();
    for (int idx : order) order_json.push_back(gens[static_cast<std::size_t>(idx)].to_string(ideal.ring()));
    Json steps_json = Json::array();
    for (const Json& s : steps) steps_json.push_back(s);
    return Certificate{"linear-quotient-order", Json{{"order", order_json}, {"steps", steps_json}}};
  };
  if (q == 1) {
    d.value = true;
    d.certificate = make_cert({0}, {});
    d.nodes = 1;
    return d;
  }
  if (q > kMaxOrderSearchGens)
    throw capacity_error("generator order search limited to " +
                         std::to_string(kMaxOrderSearchGens) + " generators");
  const std::uint64_t target = (std::uint64_t{1} << q) - 1;
  Tracker tracker{0, opts.node_budget};
  std::unordered_set<std::uint64_t> dead;
  std::vector<int> order;
  std::vector<Json> steps;
  auto dfs = [&](auto&& self, std::uint64_t placed) -> bool {
    tracker.tick();
    if (placed == target) return true;
    if (dead.contains(placed)) return false;
    for (int idx = 0; idx < q; ++idx) {
      if ((placed >> idx) & 1) continue;
      const Monomial& f = gens[static_cast<std::size_t>(idx)];
      Json step;
      if (placed != 0) {
        std::vector<Monomial> colon = step_colon(gens, placed, f);
        if (!std::all_of(colon.begin(), colon.end(),
                         [](const Monomial& m) { return m.degree() == 1; }))
          continue;
        Json colon_json = Json::array();
        for (const Monomial& m : colon) colon_json.push_back(m.to_string(ideal.ring()));
        step = Json{{"generator", f.to_string(ideal.ring())},
                    {"colon", colon_json},
                    {"colon_degree", max_degree(colon)}};
      }
      order.push_back(idx);
      if (placed != 0) steps.push_back(step);
      if (self(self, placed | (std::uint64_t{1} << idx))) return true;
      order.pop_back();
      if (placed != 0) steps.pop_back();
    }
    dead.insert(placed);
    return false;
  };
  try {
    bool found = dfs(dfs, 0);
    d.value = found;
    if (found) d.certificate = make_cert(order, steps);
  } catch (const BudgetExhausted&) {
    d.value = std::nullopt;
  }
  d.nodes = tracker.nodes;
  return d;
}

// Degree-quotient search, dual to the scaling-order search: polarize, then
// order the generators so that each one's new squarefree degree-deg(I)
// multiples admit a linear-quotient attachment onto those built so far.
// Equigenerated squarefree input degenerates to the classical linear
// quotients test (each block is the generator itself).
Decision run_degree_quotient_search(const MonomialIdeal& ideal, const SearchOptions& opts) {
  if (!ideal.is_proper_nonzero())
    throw input_error("quotient order search needs a proper nonzero ideal");
  const MonomialIdeal p = ideal.is_squarefree() ? ideal : polarize(ideal);
  const std::vector<Monomial>& gens = p.generators();
  const int q = static_cast<int>(gens.size());
  const int k = p.degree();
  const int n = p.ring().size();
  const Face universe = p.ring().full_mask();
  Decision d;
  d.exact = !opts.node_budget.has_value();
  auto mono_str = [&](Face support) { return Monomial::from_support(support, n).to_string(p.ring()); };
  auto make_cert = [&](const std::vector<int>& order,
                       const std::vector<std::vector<Face>>& refinements,
                       const std::vector<Json>& steps) {
    Json order_json = Json::array();
    for (int idx : order) order_json.push_back(gens[static_cast<std::size_t>(idx)].to_string(p.ring()));
    Json refine_json = Json::array();
    for (const auto& block : refinements) {
      Json monos = Json::array();
      for (Face m : block) monos.push_back(mono_str(m));
      refine_json.push_back(monos);
    }
    Json steps_json = Json::array();
    for (const Json& s : steps) steps_json.push_back(s);
    return Certificate{"degree-quotient-order",
                       Json{{"order", order_json},
                            {"refinements", refine_json},
                            {"polarized", !ideal.is_squarefree()},
                            {"steps", steps_json}}};
  };
  if (q > kMaxOrderSearchGens)
    throw capacity_error("generator order search limited to " +
                         std::to_string(kMaxOrderSearchGens) + " generators");
  const std::uint64_t target = (std::uint64_t{1} << q) - 1;

  // A generator's degree-k squarefree multiples, as support masks.
  std::vector<std::vector<Face>> multiples(static_cast<std::size_t>(q));
  for (int i = 0; i < q; ++i) {
    Face fixed = gens[static_cast<std::size_t>(i)].support();
    for_each_subset_of_size(universe & ~fixed, k - gens[static_cast<std::size_t>(i)].degree(),
                            [&](Face extra) {
                              multiples[static_cast<std::size_t>(i)].push_back(fixed | extra);
                            });
    if (multiples[static_cast<std::size_t>(i)].size() > 64)
      throw capacity_error("degree quotient block exceeds 64 multiples");
  }

  Tracker tracker{0, opts.node_budget};
  std::unordered_set<std::uint64_t> dead;
  std::vector<int> order;
  std::vector<std::vector<Face>> refinements;
  std::vector<Json> steps;
  std::vector<Face> present;
  std::unordered_set<Face> present_set;

  // Attachment test: the colon of the present multiples by m is generated by
  // variables, i.e. the minimal difference sets supp(u) \ supp(m) are
  // singletons. The first multiple overall is unconstrained.
  auto attach_ok = [&](Face m, const std::vector<Face>& added) {
    if (present.empty() && added.empty()) return true;
    std::vector<Face> diffs;
    for (Face u : present) diffs.push_back(u & ~m);
    for (Face u : added) diffs.push_back(u & ~m);
    std::sort(diffs.begin(), diffs.end(), face_canon_less);
    for (Face delta : diffs) {
      bool covered = false;
      for (Face other : diffs)
        if (face_card(other) == 1 && face_subset(other, delta)) {
          covered = true;
          break;
        }
      if (!covered) return false;
    }
    return true;
  };
  auto shell_ideal_block = [&](const std::vector<Face>& block) -> std::optional<std::vector<Face>> {
    const int bq = static_cast<int>(block.size());
    if (bq == 0) return std::vector<Face>{};
    const std::uint64_t btarget = (std::uint64_t{1} << bq) - 1;
    std::unordered_set<std::uint64_t> bdead;
    std::vector<Face> border;
    auto bdfs = [&](auto&& self, std::uint64_t added) -> bool {
      tracker.tick();
      if (added == btarget) return true;
      if (bdead.contains(added)) return false;
      for (int i = 0; i < bq; ++i) {
        if ((added >> i) & 1) continue;
        if (!attach_ok(block[static_cast<std::size_t>(i)], border)) continue;
        border.push_back(block[static_cast<std::size_t>(i)]);
        if (self(self, added | (std::uint64_t{1} << i))) return true;
        border.pop_back();
      }
      bdead.insert(added);
      return false;
    };
    if (!bdfs(bdfs, 0)) return std::nullopt;
    return border;
  };

  auto dfs = [&](auto&& self, std::uint64_t placed) -> bool {
    tracker.tick();
    if (placed == target) return true;
    if (dead.contains(placed)) return false;
    for (int idx = 0; idx < q; ++idx) {
      if ((placed >> idx) & 1) continue;
      std::vector<Face> block;  // multiples not already provided by placed generators
      for (Face m : multiples[static_cast<std::size_t>(idx)])
        if (!present_set.contains(m)) block.push_back(m);
      auto refined = shell_ideal_block(block);
      if (!refined) continue;
      // Step data in the classical colon form, for the certificate.
      Json step;
      if (placed != 0) {
        const Monomial& f = gens[static_cast<std::size_t>(idx)];
        std::vector<Monomial> colon = step_colon(gens, placed, f);
        Json colon_json = Json::array();
        for (const Monomial& m : colon) colon_json.push_back(m.to_string(p.ring()));
        step = Json{{"generator", f.to_string(p.ring())},
                    {"colon", colon_json},
                    {"colon_degree", max_degree(colon)}};
      }
      order.push_back(idx);
      refinements.push_back(*refined);
      if (placed != 0) steps.push_back(step);
      for (Face m : *refined) {
        present.push_back(m);
        present_set.insert(m);
      }
      if (self(self, placed | (std::uint64_t{1} << idx))) return true;
      for (Face m : *refined) {
        present.pop_back();
        present_set.erase(m);
      }
      if (placed != 0) steps.pop_back();
      refinements.pop_back();
      order.pop_back();
    }
    dead.insert(placed);
    return false;
  };
  try {
    bool found = dfs(dfs, 0);
    d.value = found;
    if (found) d.certificate = make_cert(order, refinements, steps);
  } catch (const BudgetExhausted&) {
    d.value = std::nullopt;
  }
  d.nodes = tracker.nodes;
  return d;
}

}  // namespace

bool is_dividing_variable(const MonomialIdeal& ideal, int var) {
  if (!ideal.is_proper_nonzero())
    throw input_error("dividing-variable test needs a proper nonzero ideal");
  if (var < 0 || var >= ideal.ring().size())
    throw input_error("dividing-variable test: variable out of range");
  MonomialIdeal colon = ideal.colon_variable(var);
  if (colon.is_unit()) return false;  // convention: degree undefined
  return colon.degree() + 1 <= ideal.degree();
}

Decision is_vertex_divisible(const MonomialIdeal& ideal, const SearchOptions& opts) {
  return run_ideal_decomposition(ideal, /*exact_split=*/false, opts);
}

Decision is_vertex_splittable(const MonomialIdeal& ideal, const SearchOptions& opts) {
  return run_ideal_decomposition(ideal, /*exact_split=*/true, opts);
}

Decision has_linear_quotients(const MonomialIdeal& ideal, const SearchOptions& opts) {
  return run_linear_quotient_search(ideal, opts);
}

Decision has_degree_quotients(const MonomialIdeal& ideal, const SearchOptions& opts) {
  return run_degree_quotient_search(ideal, opts);
}

long long BettiTable::entry(int i, int j) const {
  auto it = entries.find({i, j});
  return it == entries.end() ? 0 : it->second;
}

long long BettiTable::total(int i) const {
  long long sum = 0;
  for (const auto& [key, count] : entries)
    if (key.first == i) sum += count;
  return sum;
}

int BettiTable::regularity() const {
  int reg = 0;
  for (const auto& [key, count] : entries)
    if (count > 0) reg = std::max(reg, key.second - key.first);
  return reg;
}

int BettiTable::projective_dimension() const {
  int pd = 0;
  for (const auto& [key, count] : entries)
    if (count > 0) pd = std::max(pd, key.first);
  return pd;
}

namespace {

// Hochster route for squarefree ideals with small variable support:
// β_{i,σ}(I_Γ) = dim h̃_{|σ|-i-2}(Γ|_σ) with Γ the non-multiple complex and
// σ ranging over unions of generator supports.
BettiTable betti_hochster(const MonomialIdeal& ideal, const FieldSpec& field) {
  SimplicialComplex gamma = complex_of_ideal(ideal, IdealView::stanley_reisner);
  std::set<Face> lattice;
  std::vector<Face> supports;
  for (const Monomial& g : ideal.generators()) supports.push_back(g.support());
  std::vector<Face> frontier(supports);
  for (Face s : supports) lattice.insert(s);
  while (!frontier.empty()) {
    std::vector<Face> next;
    for (Face f : frontier)
      for (Face s : supports) {
        Face u = f | s;
        if (lattice.insert(u).second) next.push_back(u);
        if (lattice.size() > kLatticeCap) throw capacity_error("lcm lattice exceeds size bound");
      }
    frontier = std::move(next);
  }

  BettiTable table;
  table.field = field;
  HomologyCache cache;
  for (Face sigma : lattice) {
    std::vector<Face> induced;
    induced.reserve(gamma.facets().size());
    for (Face f : gamma.facets()) induced.push_back(f & sigma);
    induced = antichain_maximal(std::move(induced));
    HomologyProfile prof = reduced_homology_of_facets(induced, field, &cache);
    int size = face_card(sigma);
    for (int i = 0; i <= size - 1; ++i) {
      long long r = prof.rank_at(size - i - 2);
      if (r > 0) table.entries[{i, size}] += r;
    }
  }
  return table;
}

struct ExponentLess {
  bool operator()(const std::vector<int>& a, const std::vector<int>& b) const { return a < b; }
};

std::vector<int> lcm_exponents(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
  return out;
}

bool exponents_divide(const std::vector<int>& a, const std::vector<int>& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

// lcm-Taylor route, valid for arbitrary monomial ideals: for m in the lcm
// lattice, β_{i,m}(I) = dim h̃_{i-1} of the complex of generator subsets
// whose lcm strictly divides m. Cost scales with the generator count, not
// the ring size, so polarized ideals stay cheap.
BettiTable betti_lcm_taylor(const MonomialIdeal& ideal, const FieldSpec& field) {
  const std::vector<Monomial>& gens = ideal.generators();
  const int q = static_cast<int>(gens.size());
  if (q > kMaxVertices) throw capacity_error("Betti computation limited to 64 generators");
  std::vector<std::vector<int>> gen_exps;
  for (const Monomial& g : gens) {
    std::vector<int> e(static_cast<std::size_t>(g.nvars()));
    for (int v = 0; v < g.nvars(); ++v) e[static_cast<std::size_t>(v)] = g.exponent(v);
    gen_exps.push_back(std::move(e));
  }
  std::set<std::vector<int>, ExponentLess> lattice(gen_exps.begin(), gen_exps.end());
  std::vector<std::vector<int>> frontier(gen_exps);
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& m : frontier)
      for (const auto& g : gen_exps) {
        auto u = lcm_exponents(m, g);
        if (lattice.insert(u).second) next.push_back(u);
        if (lattice.size() > kLatticeCap) throw capacity_error("lcm lattice exceeds size bound");
      }
    frontier = std::move(next);
  }

  BettiTable table;
  table.field = field;
  HomologyCache cache;
  for (const auto& m : lattice) {
    // Facets of the strictly-below complex: maximal D_p over lattice
    // elements p properly dividing m, with D_p the generators dividing p.
    std::vector<Face> cand;
    for (const auto& p : lattice) {
      if (!(p != m && exponents_divide(p, m))) continue;
      Face d_p = 0;
      for (int g = 0; g < q; ++g)
        if (exponents_divide(gen_exps[static_cast<std::size_t>(g)], p)) d_p |= face_bit(g);
      cand.push_back(d_p);
    }
    cand.push_back(0);  // the empty subset is always a face
    std::vector<Face> facets = antichain_maximal(std::move(cand));
    HomologyProfile prof = reduced_homology_of_facets(facets, field, &cache);
    int total = 0;
    for (int x : m) total += x;
    for (int i = 0; i <= q; ++i) {
      long long r = prof.rank_at(i - 1);
      if (r > 0) table.entries[{i, total}] += r;
    }
  }
  return table;
}

}  // namespace

BettiTable graded_betti_numbers(const MonomialIdeal& ideal, const FieldSpec& field) {
  if (!ideal.is_proper_nonzero())
    throw input_error("Betti table needs a proper nonzero ideal");
  if (ideal.is_squarefree() && face_card(ideal.support()) <= 14)
    return betti_hochster(ideal, field);
  return betti_lcm_taylor(ideal, field);
}

ResolutionProfile resolution_profile(const MonomialIdeal& ideal, const FieldSpec& field) {
  if (!ideal.is_proper_nonzero())
    throw input_error("resolution profile needs a proper nonzero ideal");
  BettiTable table = graded_betti_numbers(ideal, field);
  ResolutionProfile prof;
  prof.reg = table.regularity();
  prof.deg = ideal.degree();
  prof.degree_resolution = prof.reg == prof.deg;
  bool equigenerated = ideal.min_degree() == prof.deg;
  prof.linear_resolution = equigenerated && prof.degree_resolution;

  // A squarefree ideal is componentwise linear when each degree component
  // (squarefree part) has a linear resolution; non-squarefree input is
  // polarized first.
  MonomialIdeal p = ideal.is_squarefree() ? ideal : polarize(ideal);
  prof.componentwise_linear = true;
  for (int d = p.min_degree(); d <= p.ring().size(); ++d) {
    MonomialIdeal component = squarefree_truncation(p, d, TruncationMode::exactly);
    if (component.is_zero()) continue;
    BettiTable ct = graded_betti_numbers(component, field);
    if (ct.regularity() != d) {
      prof.componentwise_linear = false;
      break;
    }
  }
  return prof;
}

}  // namespace shk
