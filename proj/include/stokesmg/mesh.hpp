// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 The stokesmg authors

#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace stokesmg {

/// Nested uniform Cartesian meshes of the unit hypercube. Level 0 is one
/// cell refined once (2 cells per direction); each refinement doubles the
/// cell count per direction.
struct MeshHierarchy {
  int dim = 0;
  int max_level = 0;

  int levels() const { return max_level + 1; }
  int cells_per_dir(int level) const { return 2 << level; }
  double h(int level) const { return 1.0 / cells_per_dir(level); }
  std::int64_t n_cells(int level) const {
    std::int64_t n = 1;
    for (int i = 0; i < dim; ++i) n *= cells_per_dir(level);
    return n;
  }
};

inline MeshHierarchy build_hierarchy(int dim, int max_level) {
  if (dim != 2 && dim != 3)
    throw std::invalid_argument("build_hierarchy: dim must be 2 or 3");
  if (max_level < 0)
    throw std::invalid_argument("build_hierarchy: max_level must be >= 0");
  return MeshHierarchy{dim, max_level};
}

/// The 2^d cells sharing one interior mesh vertex.
struct VertexPatch {
  int level = 0;
  std::array<int, 3> vertex{};          // lattice coordinates, 1..m-1 per dir
  std::array<std::int64_t, 8> cells{};  // lexicographic cell ids
  int n_cells = 0;
  int color = 0;
};

namespace detail {

inline std::int64_t cell_lex(int dim, int m, const std::array<int, 3>& c) {
  std::int64_t id = 0;
  for (int i = dim - 1; i >= 0; --i) id = id * m + c[i];
  return id;
}

}  // namespace detail

/// One patch per interior vertex, ordered lexicographically (x fastest).
/// Colors are assigned by the parity of the vertex lattice coordinates,
/// giving 2^dim classes of cell-disjoint patches.
inline std::vector<VertexPatch> enumerate_patches(const MeshHierarchy& mesh,
                                                  int level) {
  if (level < 0 || level > mesh.max_level)
    throw std::invalid_argument("enumerate_patches: invalid level");
  const int m = mesh.cells_per_dir(level);
  const int dim = mesh.dim;
  const int nv = m - 1;
  std::vector<VertexPatch> patches;
  if (nv <= 0) return patches;
  std::int64_t total = 1;
  for (int i = 0; i < dim; ++i) total *= nv;
  patches.reserve(total);
  std::array<int, 3> v{1, 1, 1};
  for (std::int64_t flat = 0; flat < total; ++flat) {
    std::int64_t rest = flat;
    for (int i = 0; i < dim; ++i) {
      v[i] = 1 + static_cast<int>(rest % nv);
      rest /= nv;
    }
    VertexPatch p;
    p.level = level;
    p.vertex = v;
    p.n_cells = 1 << dim;
    int color = 0;
    for (int i = 0; i < dim; ++i) color |= (v[i] % 2) << i;
    p.color = color;
    for (int corner = 0; corner < p.n_cells; ++corner) {
      std::array<int, 3> c{0, 0, 0};
      for (int i = 0; i < dim; ++i) c[i] = v[i] - 1 + ((corner >> i) & 1);
      p.cells[corner] = detail::cell_lex(dim, m, c);
    }
    patches.push_back(p);
  }
  return patches;
}

/// Groups patch indices by color; returns 2^dim buckets (possibly empty).
inline std::vector<std::vector<int>> color_patches(
    const std::vector<VertexPatch>& patches, int dim) {
  std::vector<std::vector<int>> colors(1 << dim);
  for (int i = 0; i < static_cast<int>(patches.size()); ++i)
    colors[patches[i].color].push_back(i);
  return colors;
}

}  // namespace stokesmg
