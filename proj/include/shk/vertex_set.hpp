#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace shk {

// A face is a set of vertex ids encoded as a bitmask; ids are dense indices
// into a VertexSet. Everything downstream (complexes, ideals, graphs) works
// on these masks.
using Face = std::uint64_t;

constexpr int kMaxVertices = 64;

inline int face_card(Face f) { return std::popcount(f); }
inline int face_dim(Face f) { return face_card(f) - 1; }
inline Face face_bit(int id) { return Face{1} << id; }
inline bool face_has(Face f, int id) { return (f >> id) & 1; }
inline bool face_subset(Face a, Face b) { return (a & ~b) == 0; }

// Canonical face order: by cardinality, then lexicographically as increasing
// id sequences (the face containing the smallest differing id comes first).
bool face_canon_less(Face a, Face b);

std::vector<int> face_ids(Face f);
Face face_of_ids(const std::vector<int>& ids);

// Compresses a mask after the ids in `dropped` are removed from the ambient
// set; `f` must be disjoint from `dropped`.
Face remap_after_drop(Face f, Face dropped);

// Calls fn(subset) for every subset of `f` of cardinality `k`.
template <typename Fn>
void for_each_subset_of_size(Face f, int k, Fn&& fn) {
  std::vector<int> ids = face_ids(f);
  const int n = static_cast<int>(ids.size());
  if (k < 0 || k > n) return;
  std::vector<int> pick(static_cast<std::size_t>(k));
  auto rec = [&](auto&& self, int start, int depth) -> void {
    if (depth == k) {
      Face s = 0;
      for (int i = 0; i < k; ++i) s |= face_bit(pick[static_cast<std::size_t>(i)]);
      fn(s);
      return;
    }
    for (int i = start; i <= n - (k - depth); ++i) {
      pick[static_cast<std::size_t>(depth)] = ids[static_cast<std::size_t>(i)];
      self(self, i + 1, depth + 1);
    }
  };
  rec(rec, 0, 0);
}

// An interned, lexicographically ordered vertex (or variable) universe.
// Labels are unique nonempty tokens; id i is the i-th label in sorted order.
class VertexSet {
 public:
  VertexSet() = default;
  static VertexSet from_labels(std::vector<std::string> labels);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::string& label(int id) const { return labels_[static_cast<std::size_t>(id)]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<int> try_id(const std::string& label) const;
  int id(const std::string& label) const;  // throws input_error if unknown
  Face full_mask() const {
    return labels_.empty() ? 0 : (~Face{0} >> (kMaxVertices - size()));
  }

  std::vector<std::string> labels_of(Face f) const;
  Face mask_of(const std::vector<std::string>& labels) const;

  // The universe with the ids in `dropped` removed.
  VertexSet drop(Face dropped) const;
  // Disjoint union; throws input_error when a label appears on both sides.
  static VertexSet merge_disjoint(const VertexSet& a, const VertexSet& b);

  bool operator==(const VertexSet&) const = default;

 private:
  std::vector<std::string> labels_;
};

}  // namespace shk
