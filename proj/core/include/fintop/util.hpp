#ifndef FINTOP_UTIL_HPP
#define FINTOP_UTIL_HPP

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

namespace fintop {

// FNV-1a, used for content hashes in pipeline reports.  Stable across
// platforms and runs.
inline std::uint64_t fnv64(const void* data, std::size_t len,
                           std::uint64_t seed = 14695981039346656037ULL) {
  const unsigned char* p = static_cast<const unsigned char*>(data);
  std::uint64_t h = seed;
  for (std::size_t i = 0; i < len; ++i) {
    h ^= p[i];
    h *= 1099511628211ULL;
  }
  return h;
}

inline std::uint64_t fnv64(const std::string& s, std::uint64_t seed = 14695981039346656037ULL) {
  return fnv64(s.data(), s.size(), seed);
}

inline std::uint64_t hash_mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t hash_combine(std::uint64_t a, std::uint64_t b) {
  return hash_mix(a + 0x9e3779b97f4a7c15ULL * (b + 1));
}

struct VecIntHash {
  std::size_t operator()(const std::vector<int>& v) const {
    std::uint64_t h = 1469598103934665603ULL;
    for (int x : v) h = hash_combine(h, static_cast<std::uint64_t>(x) + 0x100);
    return static_cast<std::size_t>(h);
  }
};

// Permutations on {0..n-1} as image vectors.
using Perm = std::vector<int>;

inline Perm perm_identity(int n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

// (a*b)(x) = a(b(x)); b is applied first.
inline Perm perm_compose(const Perm& a, const Perm& b) {
  Perm c(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) c[i] = a[b[i]];
  return c;
}

inline Perm perm_inverse(const Perm& a) {
  Perm c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[a[i]] = static_cast<int>(i);
  return c;
}

bool is_permutation(const Perm& p);

// Closure of a set of permutations under composition.
std::vector<Perm> generated_subgroup(const std::vector<Perm>& gens, int n);

// All subgroups (as sorted element lists of indices into `elements`) of the
// group formed by `elements`, which must be closed under composition.
std::vector<std::vector<int>> all_subgroups(const std::vector<Perm>& elements);

// All n! permutations of {0..n-1}, lexicographically.
std::vector<Perm> symmetric_group(int n);

}  // namespace fintop

#endif
