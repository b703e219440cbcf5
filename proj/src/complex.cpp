#include "shk/complex.hpp"

#include <algorithm>
#include <unordered_set>

#include "shk/errors.hpp"

namespace shk {

namespace {
constexpr long long kFaceWorkCap = 1LL << 22;
}

std::vector<Face> antichain_maximal(std::vector<Face> faces) {
  std::sort(faces.begin(), faces.end(),
            [](Face a, Face b) { return face_card(a) > face_card(b); });
  std::vector<Face> out;
  for (Face f : faces) {
    bool dominated = false;
    for (Face g : out) {
      if (face_subset(f, g)) {  // covers duplicates too
        dominated = true;
        break;
      }
    }
    if (!dominated) out.push_back(f);
  }
  std::sort(out.begin(), out.end(), face_canon_less);
  return out;
}

int dim_of_facets(const std::vector<Face>& facets) {
  int d = -1;
  bool any = false;
  for (Face f : facets) {
    d = std::max(d, face_dim(f));
    any = true;
  }
  if (!any) throw input_error("void complex has no dimensions");
  return d;
}

int mdim_of_facets(const std::vector<Face>& facets) {
  int d = kMaxVertices + 1;
  bool any = false;
  for (Face f : facets) {
    d = std::min(d, face_dim(f));
    any = true;
  }
  if (!any) throw input_error("void complex has no dimensions");
  return d;
}

std::vector<Face> deletion_facets(const std::vector<Face>& facets, int vertex) {
  std::vector<Face> cand;
  cand.reserve(facets.size());
  Face b = face_bit(vertex);
  for (Face f : facets) cand.push_back(f & ~b);
  return antichain_maximal(std::move(cand));
}

std::vector<Face> link_facets(const std::vector<Face>& facets, Face sigma) {
  // {F \ σ : σ ⊆ F ∈ F(Δ)} is automatically an antichain.
  std::vector<Face> out;
  for (Face f : facets)
    if (face_subset(sigma, f)) out.push_back(f & ~sigma);
  std::sort(out.begin(), out.end(), face_canon_less);
  return out;
}

std::vector<Face> pure_skeleton_facets(const std::vector<Face>& facets, int k) {
  if (k == -1) return {Face{0}};
  std::unordered_set<Face> distinct;
  for (Face f : facets) {
    if (face_card(f) < k + 1) continue;
    for_each_subset_of_size(f, k + 1, [&](Face s) { distinct.insert(s); });
  }
  std::vector<Face> out(distinct.begin(), distinct.end());
  std::sort(out.begin(), out.end(), face_canon_less);
  return out;
}

std::vector<Face> all_faces_of(const std::vector<Face>& facets) {
  long long work = 0;
  for (Face f : facets) {
    work += 1LL << std::min(face_card(f), 62);
    if (work > kFaceWorkCap)
      throw capacity_error("face enumeration exceeds work bound");
  }
  std::unordered_set<Face> distinct;
  for (Face f : facets) {
    Face sub = f;
    while (true) {
      distinct.insert(sub);
      if (sub == 0) break;
      sub = (sub - 1) & f;
    }
  }
  std::vector<Face> out(distinct.begin(), distinct.end());
  std::sort(out.begin(), out.end(), face_canon_less);
  return out;
}

SimplicialComplex SimplicialComplex::build(
    const std::vector<std::vector<std::string>>& raw_facets,
    const std::optional<std::vector<std::string>>& ambient) {
  VertexSet vs;
  if (ambient) {
    vs = VertexSet::from_labels(*ambient);
    for (const auto& facet : raw_facets)
      for (const auto& label : facet)
        if (!vs.try_id(label))
          throw input_error("facet vertex not in ambient set: " + label);
  } else {
    std::vector<std::string> labels;
    for (const auto& facet : raw_facets)
      for (const auto& label : facet) labels.push_back(label);
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    vs = VertexSet::from_labels(std::move(labels));
  }
  std::vector<Face> faces;
  faces.reserve(raw_facets.size());
  for (const auto& facet : raw_facets) {
    Face f = 0;
    for (const auto& label : facet) f |= face_bit(vs.id(label));
    faces.push_back(f);
  }
  return from_faces(std::move(vs), std::move(faces));
}

SimplicialComplex SimplicialComplex::from_faces(VertexSet vertices,
                                                std::vector<Face> faces) {
  SimplicialComplex c;
  c.vertices_ = std::move(vertices);
  c.facets_ = antichain_maximal(std::move(faces));
  return c;
}

int SimplicialComplex::dim() const { return dim_of_facets(facets_); }
int SimplicialComplex::mdim() const { return mdim_of_facets(facets_); }

bool SimplicialComplex::is_pure() const { return dim() == mdim(); }

Face SimplicialComplex::support() const {
  Face s = 0;
  for (Face f : facets_) s |= f;
  return s;
}

bool SimplicialComplex::contains_face(Face f) const {
  for (Face g : facets_)
    if (face_subset(f, g)) return true;
  return false;
}

std::vector<long long> SimplicialComplex::f_vector() const {
  int d = dim();  // rejects the void complex
  std::vector<long long> fv(static_cast<std::size_t>(d + 1), 0);
  for (Face f : all_faces())
    if (f != 0) ++fv[static_cast<std::size_t>(face_dim(f))];
  return fv;
}

SimplicialComplex SimplicialComplex::deletion(int vertex_id) const {
  if (vertex_id < 0 || vertex_id >= vertices_.size())
    throw input_error("deletion: vertex id out of range");
  Face dropped = face_bit(vertex_id);
  std::vector<Face> del = deletion_facets(facets_, vertex_id);
  for (Face& f : del) f = remap_after_drop(f, dropped);
  return from_faces(vertices_.drop(dropped), std::move(del));
}

SimplicialComplex SimplicialComplex::link(Face sigma) const {
  if (!face_subset(sigma, ambient_mask()))
    throw input_error("link: face not within the ambient set");
  if (!contains_face(sigma)) throw input_error("link: not a face of the complex");
  std::vector<Face> lk = link_facets(facets_, sigma);
  for (Face& f : lk) f = remap_after_drop(f, sigma);
  return from_faces(vertices_.drop(sigma), std::move(lk));
}

SimplicialComplex SimplicialComplex::skeleton(int k, SkeletonMode mode) const {
  int d = dim();  // rejects the void complex
  if (k < -1 || k > d) throw input_error("skeleton index out of range");
  if (mode == SkeletonMode::pure)
    return from_faces(vertices_, pure_skeleton_facets(facets_, k));
  // Full k-skeleton: all faces of dimension ≤ k; facets are the maximal ones.
  std::vector<Face> cand;
  for (Face f : facets_) {
    if (face_card(f) <= k + 1)
      cand.push_back(f);
    else
      for_each_subset_of_size(f, k + 1, [&](Face s) { cand.push_back(s); });
  }
  if (k == -1) cand.push_back(0);
  return from_faces(vertices_, std::move(cand));
}

SimplicialComplex SimplicialComplex::join(const SimplicialComplex& a,
                                          const SimplicialComplex& b) {
  if (a.is_void() || b.is_void()) throw input_error("join of a void complex");
  VertexSet merged = VertexSet::merge_disjoint(a.vertices_, b.vertices_);
  auto translate = [&merged](const VertexSet& side, Face f) {
    Face out = 0;
    for (int id : face_ids(f)) out |= face_bit(merged.id(side.label(id)));
    return out;
  };
  std::vector<Face> prod;
  prod.reserve(a.facets_.size() * b.facets_.size());
  for (Face fa : a.facets_)
    for (Face fb : b.facets_)
      prod.push_back(translate(a.vertices_, fa) | translate(b.vertices_, fb));
  return from_faces(std::move(merged), std::move(prod));
}

std::string SimplicialComplex::canonical_key() const {
  std::string key;
  key.reserve(facets_.size() * 9 + 4);
  auto push_u32 = [&key](std::uint64_t v, int bytes) {
    for (int i = 0; i < bytes; ++i) key.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
  };
  push_u32(static_cast<std::uint64_t>(vertices_.size()), 2);
  for (Face f : facets_) push_u32(f, 8);
  return key;
}

}  // namespace shk
