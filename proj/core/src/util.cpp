#include "fintop/util.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace fintop {

bool is_permutation(const Perm& p) {
  std::vector<char> seen(p.size(), 0);
  for (int x : p) {
    if (x < 0 || x >= static_cast<int>(p.size()) || seen[x]) return false;
    seen[x] = 1;
  }
  return true;
}

std::vector<Perm> generated_subgroup(const std::vector<Perm>& gens, int n) {
  std::set<Perm> elems;
  elems.insert(perm_identity(n));
  std::vector<Perm> frontier(elems.begin(), elems.end());
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const Perm& f : frontier) {
      for (const Perm& g : gens) {
        Perm h = perm_compose(g, f);
        if (elems.insert(h).second) next.push_back(h);
      }
    }
    frontier = std::move(next);
  }
  return {elems.begin(), elems.end()};
}

std::vector<std::vector<int>> all_subgroups(const std::vector<Perm>& elements) {
  // BFS over subgroups: extend each known subgroup by one outside element and
  // close.  Elements are referenced by index into `elements`.
  std::map<Perm, int> index;
  for (std::size_t i = 0; i < elements.size(); ++i) index[elements[i]] = static_cast<int>(i);
  const int n = elements.empty() ? 0 : static_cast<int>(elements[0].size());

  auto closure_of = [&](std::vector<Perm> gens) {
    std::vector<Perm> sub = generated_subgroup(gens, n);
    std::vector<int> ids;
    ids.reserve(sub.size());
    for (const Perm& p : sub) {
      auto it = index.find(p);
      if (it == index.end()) return std::vector<int>{};  // escaped the group
      ids.push_back(it->second);
    }
    std::sort(ids.begin(), ids.end());
    return ids;
  };

  std::set<std::vector<int>> found;
  std::vector<std::vector<int>> queue;
  std::vector<int> trivial = closure_of({});
  found.insert(trivial);
  queue.push_back(trivial);
  while (!queue.empty()) {
    std::vector<int> sub = queue.back();
    queue.pop_back();
    for (std::size_t gi = 0; gi < elements.size(); ++gi) {
      if (std::binary_search(sub.begin(), sub.end(), static_cast<int>(gi))) continue;
      std::vector<Perm> gens;
      for (int id : sub) gens.push_back(elements[id]);
      gens.push_back(elements[gi]);
      std::vector<int> bigger = closure_of(gens);
      if (!bigger.empty() && found.insert(bigger).second) queue.push_back(bigger);
    }
  }
  return {found.begin(), found.end()};
}

std::vector<Perm> symmetric_group(int n) {
  Perm p = perm_identity(n);
  std::vector<Perm> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace fintop
