#include "shk/vertex_set.hpp"

#include <algorithm>

#include "shk/errors.hpp"

namespace shk {

bool face_canon_less(Face a, Face b) {
  int ca = face_card(a), cb = face_card(b);
  if (ca != cb) return ca < cb;
  Face d = a ^ b;
  if (d == 0) return false;
  Face low = d & (~d + 1);
  return (a & low) != 0;
}

std::vector<int> face_ids(Face f) {
  std::vector<int> ids;
  while (f) {
    ids.push_back(std::countr_zero(f));
    f &= f - 1;
  }
  return ids;
}

Face face_of_ids(const std::vector<int>& ids) {
  Face f = 0;
  for (int id : ids) f |= face_bit(id);
  return f;
}

Face remap_after_drop(Face f, Face dropped) {
  Face out = 0;
  for (int id : face_ids(f)) {
    int shift = std::popcount(dropped & (face_bit(id) - 1));
    out |= face_bit(id - shift);
  }
  return out;
}

VertexSet VertexSet::from_labels(std::vector<std::string> labels) {
  for (const auto& l : labels) {
    if (l.empty()) throw input_error("empty vertex label");
  }
  std::sort(labels.begin(), labels.end());
  auto dup = std::adjacent_find(labels.begin(), labels.end());
  if (dup != labels.end()) throw input_error("duplicate vertex label: " + *dup);
  if (labels.size() > static_cast<std::size_t>(kMaxVertices))
    throw capacity_error("vertex set exceeds " + std::to_string(kMaxVertices) + " labels");
  VertexSet vs;
  vs.labels_ = std::move(labels);
  return vs;
}

std::optional<int> VertexSet::try_id(const std::string& label) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
  if (it == labels_.end() || *it != label) return std::nullopt;
  return static_cast<int>(it - labels_.begin());
}

int VertexSet::id(const std::string& label) const {
  auto found = try_id(label);
  if (!found) throw input_error("unknown vertex: " + label);
  return *found;
}

std::vector<std::string> VertexSet::labels_of(Face f) const {
  std::vector<std::string> out;
  for (int id : face_ids(f)) out.push_back(label(id));
  return out;
}

Face VertexSet::mask_of(const std::vector<std::string>& labels) const {
  Face f = 0;
  for (const auto& l : labels) f |= face_bit(id(l));
  return f;
}

VertexSet VertexSet::drop(Face dropped) const {
  std::vector<std::string> kept;
  for (int i = 0; i < size(); ++i)
    if (!face_has(dropped, i)) kept.push_back(labels_[static_cast<std::size_t>(i)]);
  VertexSet vs;
  vs.labels_ = std::move(kept);  // still sorted and unique
  return vs;
}

VertexSet VertexSet::merge_disjoint(const VertexSet& a, const VertexSet& b) {
  std::vector<std::string> all = a.labels_;
  all.insert(all.end(), b.labels_.begin(), b.labels_.end());
  std::sort(all.begin(), all.end());
  auto dup = std::adjacent_find(all.begin(), all.end());
  if (dup != all.end())
    throw input_error("overlapping vertex label in join: " + *dup);
  return from_labels(std::move(all));
}

}  // namespace shk
