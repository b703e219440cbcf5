#include "shk/ideal.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

#include "shk/errors.hpp"

namespace shk {

namespace {

constexpr long long kIdealWorkCap = 1LL << 22;

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), Monomial::canon_less);
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> out;
  for (const Monomial& g : gens) {
    bool redundant = false;
    for (const Monomial& kept : out) {
      if (kept.divides(g)) {  // kept has smaller or equal degree: sorted order
        redundant = true;
        break;
      }
    }
    if (!redundant) out.push_back(g);
  }
  return out;
}

}  // namespace

MonomialIdeal MonomialIdeal::make(VertexSet ring, std::vector<Monomial> generators) {
  for (const Monomial& g : generators)
    if (g.nvars() != ring.size())
      throw input_error("generator does not match the ring's variable count");
  MonomialIdeal ideal;
  ideal.ring_ = std::move(ring);
  ideal.gens_ = minimalize(std::move(generators));
  return ideal;
}

MonomialIdeal MonomialIdeal::zero(VertexSet ring) {
  MonomialIdeal ideal;
  ideal.ring_ = std::move(ring);
  return ideal;
}

MonomialIdeal MonomialIdeal::unit(VertexSet ring) {
  MonomialIdeal ideal;
  int n = ring.size();
  ideal.ring_ = std::move(ring);
  ideal.gens_.push_back(Monomial::one(n));
  return ideal;
}

bool MonomialIdeal::is_squarefree() const {
  return std::all_of(gens_.begin(), gens_.end(),
                     [](const Monomial& g) { return g.is_squarefree(); });
}

int MonomialIdeal::degree() const {
  if (is_zero()) throw input_error("degree of the zero ideal");
  if (is_unit()) throw input_error("degree of the unit ideal");
  int d = 0;
  for (const Monomial& g : gens_) d = std::max(d, g.degree());
  return d;
}

int MonomialIdeal::degree_unit_zero() const {
  if (is_zero()) throw input_error("degree of the zero ideal");
  if (is_unit()) return 0;
  return degree();
}

int MonomialIdeal::min_degree() const {
  if (!is_proper_nonzero()) throw input_error("min degree needs a proper nonzero ideal");
  return gens_.front().degree();  // canonical order is degree-ascending
}

Face MonomialIdeal::support() const {
  Face s = 0;
  for (const Monomial& g : gens_) s |= g.support();
  return s;
}

bool MonomialIdeal::contains(const Monomial& m) const {
  for (const Monomial& g : gens_)
    if (g.divides(m)) return true;
  return false;
}

MonomialIdeal MonomialIdeal::colon_variable(int var) const {
  if (var < 0 || var >= ring_.size()) throw input_error("colon: variable out of range");
  std::vector<Monomial> gens;
  gens.reserve(gens_.size());
  for (const Monomial& g : gens_) gens.push_back(g.colon_by_variable(var));
  return make(ring_, std::move(gens));
}

MonomialIdeal MonomialIdeal::colon_monomial(const Monomial& f) const {
  std::vector<Monomial> gens;
  gens.reserve(gens_.size());
  for (const Monomial& g : gens_) gens.push_back(g.colon_by(f));
  return make(ring_, std::move(gens));
}

MonomialIdeal MonomialIdeal::restriction_without(int var) const {
  if (var < 0 || var >= ring_.size()) throw input_error("restriction: variable out of range");
  std::vector<Monomial> gens;
  for (const Monomial& g : gens_)
    if (g.exponent(var) == 0) gens.push_back(g);
  return make(ring_, std::move(gens));
}

MonomialIdeal MonomialIdeal::rering_drop(int var) const {
  Face dropped = face_bit(var);
  std::vector<Monomial> gens;
  gens.reserve(gens_.size());
  for (const Monomial& g : gens_) gens.push_back(g.drop_variables(dropped));
  MonomialIdeal out;
  out.ring_ = ring_.drop(dropped);
  out.gens_ = std::move(gens);  // minimality and order are preserved
  return out;
}

std::pair<MonomialIdeal, MonomialIdeal> MonomialIdeal::variable_split(int var) const {
  MonomialIdeal colon = colon_variable(var);
  for (const Monomial& g : colon.generators())
    if (g.exponent(var) > 0)
      throw input_error("variable split: colon ideal is not free of the variable");
  MonomialIdeal restriction = restriction_without(var);
  return {colon.rering_drop(var), restriction.rering_drop(var)};
}

std::string MonomialIdeal::canonical_key() const {
  std::string key;
  key += std::to_string(ring_.size());
  for (const Monomial& g : gens_) {
    key += "|";
    for (int v = 0; v < g.nvars(); ++v) {
      key += std::to_string(g.exponent(v));
      key += ",";
    }
  }
  return key;
}

BridgePair stanley_reisner_bridge(const SimplicialComplex& c) {
  if (c.is_void()) throw input_error("bridge: void complex");
  const VertexSet& vs = c.vertices();
  const int n = vs.size();
  if (n == 0) throw input_error("bridge: empty ambient set");
  Face ambient = c.ambient_mask();

  std::vector<Monomial> dual_gens;
  for (Face f : c.facets())
    dual_gens.push_back(Monomial::from_support(ambient & ~f, n));
  MonomialIdeal dual = MonomialIdeal::make(vs, std::move(dual_gens));

  // Minimal non-faces: by increasing cardinality, a k-set is a minimal
  // non-face when it is not a face but all its (k-1)-subsets are.
  std::vector<Monomial> sr_gens;
  long long work = 0;
  for (int k = 1; k <= std::min(n, c.dim() + 2); ++k) {
    for_each_subset_of_size(ambient, k, [&](Face s) {
      work += k;
      if (work > kIdealWorkCap) throw capacity_error("non-face enumeration exceeds work bound");
      if (c.contains_face(s)) return;
      bool minimal = true;
      for (int id : face_ids(s)) {
        if (!c.contains_face(s & ~face_bit(id))) {
          minimal = false;
          break;
        }
      }
      if (minimal) sr_gens.push_back(Monomial::from_support(s, n));
    });
  }
  MonomialIdeal sr = MonomialIdeal::make(vs, std::move(sr_gens));
  return {std::move(sr), std::move(dual)};
}

namespace {

// Minimal vertex covers of the hypergraph of generator supports; the
// complements of these are the facets of the non-multiple complex.
std::vector<Face> minimal_covers(const std::vector<Face>& supports, Face universe) {
  std::vector<Face> covers;
  long long work = 0;
  auto rec = [&](auto&& self, std::size_t edge, Face chosen) -> void {
    if (++work > kIdealWorkCap) throw capacity_error("cover enumeration exceeds work bound");
    while (edge < supports.size() && (supports[edge] & chosen) != 0) ++edge;
    if (edge == supports.size()) {
      covers.push_back(chosen);
      return;
    }
    for (int id : face_ids(supports[edge])) self(self, edge + 1, chosen | face_bit(id));
  };
  rec(rec, 0, 0);
  // The branching can emit non-minimal covers; keep the inclusion-minimal ones.
  std::sort(covers.begin(), covers.end(),
            [](Face a, Face b) { return face_card(a) < face_card(b); });
  std::vector<Face> minimal;
  for (Face c : covers) {
    bool dominated = false;
    for (Face m : minimal)
      if (face_subset(m, c)) {
        dominated = true;
        break;
      }
    if (!dominated) minimal.push_back(c);
  }
  (void)universe;
  return minimal;
}

}  // namespace

SimplicialComplex complex_of_ideal(const MonomialIdeal& ideal, IdealView view) {
  if (!ideal.is_proper_nonzero())
    throw input_error("complex of ideal needs a proper nonzero ideal");
  if (!ideal.is_squarefree())
    throw input_error("complex of ideal needs a squarefree ideal (polarize first)");
  const VertexSet& ring = ideal.ring();
  Face universe = ring.full_mask();
  std::vector<Face> facets;
  if (view == IdealView::alexander_dual) {
    for (const Monomial& g : ideal.generators()) facets.push_back(universe & ~g.support());
  } else {
    std::vector<Face> supports;
    for (const Monomial& g : ideal.generators()) supports.push_back(g.support());
    for (Face cover : minimal_covers(supports, universe)) facets.push_back(universe & ~cover);
  }
  return SimplicialComplex::from_faces(ring, std::move(facets));
}

MonomialIdeal squarefree_truncation(const MonomialIdeal& ideal, int k, TruncationMode mode) {
  if (!ideal.is_squarefree()) throw input_error("truncation needs a squarefree ideal");
  if (k < 0) throw input_error("truncation degree must be nonnegative");
  if (ideal.is_zero() || ideal.is_unit()) {
    if (mode == TruncationMode::at_least && ideal.is_unit() && k == 0) return ideal;
    // Degree-k squarefree members of (1) are all k-subsets; keep the
    // well-used proper case simple and reject the degenerate ones.
    throw input_error("truncation of the zero or unit ideal");
  }
  const int n = ideal.ring().size();
  Face universe = ideal.ring().full_mask();
  std::vector<Monomial> gens;
  long long work = 0;
  for (const Monomial& g : ideal.generators()) {
    int d = g.degree();
    if (mode == TruncationMode::at_least && d >= k) {
      gens.push_back(g);
      continue;
    }
    if (d > k) continue;  // cannot reach degree exactly k from a larger generator
    Face fixed = g.support();
    Face free_vars = universe & ~fixed;
    for_each_subset_of_size(free_vars, k - d, [&](Face extra) {
      if (++work > kIdealWorkCap) throw capacity_error("truncation exceeds work bound");
      gens.push_back(Monomial::from_support(fixed | extra, n));
    });
  }
  return MonomialIdeal::make(ideal.ring(), std::move(gens));
}

MonomialIdeal polarize(const MonomialIdeal& ideal) {
  if (ideal.is_zero() || ideal.is_unit())
    throw input_error("polarization needs a proper nonzero ideal");
  if (ideal.is_squarefree()) return ideal;
  const VertexSet& ring = ideal.ring();
  const int n = ring.size();
  std::vector<int> max_exp(static_cast<std::size_t>(n), 0);
  for (const Monomial& g : ideal.generators())
    for (int v = 0; v < n; ++v)
      max_exp[static_cast<std::size_t>(v)] = std::max(max_exp[static_cast<std::size_t>(v)], g.exponent(v));

  std::vector<std::string> labels;
  std::vector<std::vector<std::string>> copies(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    int e = max_exp[static_cast<std::size_t>(v)];
    if (e <= 1) {
      copies[static_cast<std::size_t>(v)] = {ring.label(v)};
    } else {
      for (int i = 1; i <= e; ++i)
        copies[static_cast<std::size_t>(v)].push_back(ring.label(v) + "~" + std::to_string(i));
    }
    for (const auto& l : copies[static_cast<std::size_t>(v)]) labels.push_back(l);
  }
  VertexSet pol_ring = VertexSet::from_labels(labels);  // rejects name collisions

  std::vector<Monomial> gens;
  for (const Monomial& g : ideal.generators()) {
    std::vector<int> e(static_cast<std::size_t>(pol_ring.size()), 0);
    for (int v = 0; v < n; ++v)
      for (int i = 0; i < g.exponent(v); ++i)
        e[static_cast<std::size_t>(pol_ring.id(copies[static_cast<std::size_t>(v)][static_cast<std::size_t>(i)]))] = 1;
    gens.emplace_back(std::move(e));
  }
  return MonomialIdeal::make(std::move(pol_ring), std::move(gens));
}

}  // namespace shk
