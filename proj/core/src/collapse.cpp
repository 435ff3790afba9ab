#include "fintop/collapse.hpp"

#include <queue>
#include <vector>

namespace fintop {

CollapseResult collapse_run(const SimplicialComplex& K) {
  const auto& simp = K.simplices();
  const int n = K.simplex_count();

  // Immediate (codimension-1) coface lists.
  std::vector<std::vector<int>> cofaces(static_cast<std::size_t>(n));
  std::vector<int> coface_count(static_cast<std::size_t>(n), 0);
  std::vector<int> face;
  for (int i = 0; i < n; ++i) {
    const auto& s = simp[static_cast<std::size_t>(i)];
    if (s.size() < 2) continue;
    for (std::size_t j = 0; j < s.size(); ++j) {
      face.assign(s.begin(), s.end());
      face.erase(face.begin() + static_cast<long>(j));
      int fi = K.simplex_index(face);
      cofaces[static_cast<std::size_t>(fi)].push_back(i);
      ++coface_count[static_cast<std::size_t>(fi)];
    }
  }

  std::vector<char> alive(static_cast<std::size_t>(n), 1);
  auto is_free = [&](int i) {
    if (!alive[static_cast<std::size_t>(i)] || coface_count[static_cast<std::size_t>(i)] != 1)
      return false;
    for (int c : cofaces[static_cast<std::size_t>(i)])
      if (alive[static_cast<std::size_t>(c)])
        return coface_count[static_cast<std::size_t>(c)] == 0;
    return false;
  };
  auto the_coface = [&](int i) {
    for (int c : cofaces[static_cast<std::size_t>(i)])
      if (alive[static_cast<std::size_t>(c)]) return c;
    return -1;
  };

  // Min-heap over simplex indices (canonical order = smallest free face).
  std::priority_queue<int, std::vector<int>, std::greater<int>> heap;
  for (int i = 0; i < n; ++i)
    if (is_free(i)) heap.push(i);

  CollapseResult res;
  while (!heap.empty()) {
    int i = heap.top();
    heap.pop();
    if (!is_free(i)) continue;
    int c = the_coface(i);
    alive[static_cast<std::size_t>(i)] = 0;
    alive[static_cast<std::size_t>(c)] = 0;
    ++res.steps;
    // Faces of the removed pair lose cofaces; recheck them and their faces.
    const auto& s = simp[static_cast<std::size_t>(c)];
    std::vector<int> f2;
    for (std::size_t j = 0; j < s.size(); ++j) {
      f2.assign(s.begin(), s.end());
      f2.erase(f2.begin() + static_cast<long>(j));
      int fi = K.simplex_index(f2);
      --coface_count[static_cast<std::size_t>(fi)];
      if (is_free(fi)) heap.push(fi);
    }
    const auto& si = simp[static_cast<std::size_t>(i)];
    if (si.size() >= 2) {
      for (std::size_t j = 0; j < si.size(); ++j) {
        f2.assign(si.begin(), si.end());
        f2.erase(f2.begin() + static_cast<long>(j));
        int fi = K.simplex_index(f2);
        --coface_count[static_cast<std::size_t>(fi)];
        if (is_free(fi)) heap.push(fi);
      }
    }
  }

  for (int i = 0; i < n; ++i)
    if (alive[static_cast<std::size_t>(i)]) res.surviving.push_back(i);
  res.collapsed_to_point =
      res.surviving.size() == 1 &&
      simp[static_cast<std::size_t>(res.surviving[0])].size() == 1;
  return res;
}

bool collapse(const SimplicialComplex& K) { return collapse_run(K).collapsed_to_point; }

}  // namespace fintop
