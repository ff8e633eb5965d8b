#include "oramsey/canonical.hpp"

#include <algorithm>
#include <array>
#include <vector>

namespace oramsey {

namespace {

// 0 = non-edge, 1 = red, 2 = blue, 3 = green.
using Matrix = std::vector<uint8_t>;  // n*n dense

struct CanonSearch {
  int n;
  const Matrix& m;
  std::string best;
  bool have_best = false;

  uint8_t at(int i, int j) const { return m[static_cast<size_t>(i) * n + j]; }

  // Splits cells by (own cell, multiset of neighbor cells per color) until
  // stable. Cells are kept in a deterministic order so the refinement is
  // equivariant under relabeling.
  void refine(std::vector<std::vector<int>>& cells) const {
    bool changed = true;
    while (changed) {
      changed = false;
      std::vector<int> cell_of(n);
      for (size_t ci = 0; ci < cells.size(); ++ci)
        for (int v : cells[ci]) cell_of[v] = static_cast<int>(ci);
      std::vector<std::vector<int>> next;
      for (const auto& cell : cells) {
        if (cell.size() == 1) {
          next.push_back(cell);
          continue;
        }
        // Signature: per color, sorted list of neighbor cell indices.
        std::vector<std::pair<std::vector<int>, int>> sigs;
        sigs.reserve(cell.size());
        for (int v : cell) {
          std::vector<int> sig;
          for (int c = 1; c <= 3; ++c) {
            std::vector<int> nb;
            for (int w = 0; w < n; ++w)
              if (at(v, w) == c) nb.push_back(cell_of[w]);
            std::sort(nb.begin(), nb.end());
            sig.push_back(static_cast<int>(nb.size()));
            sig.insert(sig.end(), nb.begin(), nb.end());
          }
          sigs.push_back({std::move(sig), v});
        }
        std::stable_sort(sigs.begin(), sigs.end(),
                         [](const auto& a, const auto& b) { return a.first < b.first; });
        size_t i = 0;
        while (i < sigs.size()) {
          size_t j = i;
          std::vector<int> group;
          while (j < sigs.size() && sigs[j].first == sigs[i].first)
            group.push_back(sigs[j++].second);
          std::sort(group.begin(), group.end());
          if (group.size() != cell.size()) changed = true;
          next.push_back(std::move(group));
          i = j;
        }
      }
      cells = std::move(next);
    }
  }

  std::string encode(const std::vector<int>& perm) const {
    // perm[pos] = original vertex placed at canonical position pos.
    std::string out;
    out.reserve(1 + static_cast<size_t>(n) * (n - 1) / 4 + 1);
    out.push_back(static_cast<char>(n));
    uint8_t acc = 0;
    int bits = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        acc = static_cast<uint8_t>((acc << 2) | at(perm[i], perm[j]));
        bits += 2;
        if (bits == 8) {
          out.push_back(static_cast<char>(acc));
          acc = 0;
          bits = 0;
        }
      }
    if (bits > 0) out.push_back(static_cast<char>(acc << (8 - bits)));
    return out;
  }

  void search(std::vector<std::vector<int>> cells) {
    refine(cells);
    size_t split = cells.size();
    for (size_t i = 0; i < cells.size(); ++i)
      if (cells[i].size() > 1) {
        split = i;
        break;
      }
    if (split == cells.size()) {
      std::vector<int> perm;
      perm.reserve(n);
      for (const auto& cell : cells) perm.push_back(cell[0]);
      std::string enc = encode(perm);
      if (!have_best || enc < best) {
        best = std::move(enc);
        have_best = true;
      }
      return;
    }
    for (int v : cells[split]) {
      std::vector<std::vector<int>> branched;
      branched.reserve(cells.size() + 1);
      for (size_t i = 0; i < split; ++i) branched.push_back(cells[i]);
      branched.push_back({v});
      std::vector<int> rest;
      for (int w : cells[split])
        if (w != v) rest.push_back(w);
      branched.push_back(std::move(rest));
      for (size_t i = split + 1; i < cells.size(); ++i) branched.push_back(cells[i]);
      search(std::move(branched));
    }
  }
};

}  // namespace

CanonicalKey canonical_key(const ColoredGraph& g, int cap) {
  std::vector<int> keep;
  int isolated = 0;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) > 0)
      keep.push_back(v);
    else
      ++isolated;
  }
  int n = static_cast<int>(keep.size()) + (isolated > 0 ? 1 : 0);
  if (n > cap) throw TooLargeError{};
  if (n == 0) return std::string(1, '\0');

  Matrix m(static_cast<size_t>(n) * n, 0);
  for (int i = 0; i < static_cast<int>(keep.size()); ++i)
    for (int j = 0; j < static_cast<int>(keep.size()); ++j) {
      if (i == j) continue;
      if (auto c = g.edge_color(keep[i], keep[j]))
        m[static_cast<size_t>(i) * n + j] = static_cast<uint8_t>(static_cast<int>(*c) + 1);
    }

  CanonSearch s{n, m, {}, false};

  // Initial cells by color-degree invariant.
  std::vector<std::pair<std::array<int, 3>, int>> inv;
  inv.reserve(n);
  for (int i = 0; i < n; ++i) {
    std::array<int, 3> deg{0, 0, 0};
    for (int j = 0; j < n; ++j)
      if (m[static_cast<size_t>(i) * n + j]) ++deg[m[static_cast<size_t>(i) * n + j] - 1];
    inv.push_back({deg, i});
  }
  std::sort(inv.begin(), inv.end());
  std::vector<std::vector<int>> cells;
  size_t i = 0;
  while (i < inv.size()) {
    size_t j = i;
    std::vector<int> cell;
    while (j < inv.size() && inv[j].first == inv[i].first) cell.push_back(inv[j++].second);
    cells.push_back(std::move(cell));
    i = j;
  }

  s.search(std::move(cells));
  return s.best;
}

}  // namespace oramsey
