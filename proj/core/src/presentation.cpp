#include "fintop/presentation.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace fintop {

Word Word::inverse() const {
  Word w;
  w.letters.reserve(letters.size());
  for (auto it = letters.rbegin(); it != letters.rend(); ++it)
    w.letters.push_back({it->generator, -it->exponent});
  return w;
}

Word Word::one_letter(int generator, int exponent) {
  Word w;
  w.letters.push_back({generator, exponent});
  return w;
}

Word free_reduce(const Word& w) {
  Word out;
  for (const Letter& l : w.letters) {
    if (!out.letters.empty() && out.letters.back().generator == l.generator &&
        out.letters.back().exponent == -l.exponent)
      out.letters.pop_back();
    else
      out.letters.push_back(l);
  }
  return out;
}

Word parse_word(const std::string& text, const std::vector<std::string>& generators) {
  std::unordered_map<std::string, int> idx;
  for (std::size_t i = 0; i < generators.size(); ++i) idx[generators[i]] = static_cast<int>(i);
  Word w;
  std::istringstream is(text);
  std::string tok;
  while (is >> tok) {
    int exp = 1;
    std::string name = tok;
    auto caret = tok.find('^');
    if (caret != std::string::npos) {
      name = tok.substr(0, caret);
      try {
        exp = std::stoi(tok.substr(caret + 1));
      } catch (const std::exception&) {
        throw std::invalid_argument("bad exponent in word token: " + tok);
      }
    }
    auto it = idx.find(name);
    if (it == idx.end()) throw std::invalid_argument("unknown generator in word: " + name);
    int sign = exp < 0 ? -1 : 1;
    for (int k = 0; k < std::abs(exp); ++k) w.letters.push_back({it->second, sign});
  }
  return free_reduce(w);
}

std::string word_to_string(const Word& w, const std::vector<std::string>& generators) {
  std::string out;
  for (const Letter& l : w.letters) {
    if (!out.empty()) out += " ";
    out += generators[static_cast<std::size_t>(l.generator)];
    if (l.exponent < 0) out += "^-1";
  }
  return out;
}

void Presentation::validate() const {
  std::unordered_map<std::string, int> seen;
  for (const auto& g : generators) {
    if (g.empty()) throw std::invalid_argument("empty generator name");
    if (!seen.emplace(g, 0).second) throw std::invalid_argument("duplicate generator: " + g);
  }
  for (const Word& w : relators)
    for (const Letter& l : w.letters) {
      if (l.generator < 0 || l.generator >= static_cast<int>(generators.size()))
        throw std::invalid_argument("relator references unknown generator index");
      if (l.exponent != 1 && l.exponent != -1)
        throw std::invalid_argument("relator letter exponent must be +-1");
    }
}

IntMatrix Presentation::relator_matrix_transposed() const {
  IntMatrix A(static_cast<int>(generators.size()), static_cast<int>(relators.size()));
  for (std::size_t j = 0; j < relators.size(); ++j)
    for (const Letter& l : relators[j].letters)
      A.at(l.generator, static_cast<int>(j)) += l.exponent;
  return A;
}

AbelianGroup abelianization(const Presentation& p) {
  p.validate();
  SmithResult snf = smith_normal_form(p.relator_matrix_transposed());
  AbelianGroup H;
  H.rank = static_cast<long long>(p.generators.size()) - snf.rank();
  H.torsion = snf.torsion();
  return H;
}

FiniteGroup::FiniteGroup(std::vector<std::string> elements, int identity,
                         std::vector<std::vector<int>> table)
    : elements_(std::move(elements)), identity_(identity), table_(std::move(table)) {
  const int n = static_cast<int>(elements_.size());
  if (n == 0) throw std::invalid_argument("group must be non-empty");
  {
    std::unordered_map<std::string, int> seen;
    for (const auto& e : elements_)
      if (e.empty() || !seen.emplace(e, 0).second)
        throw std::invalid_argument("group element names must be unique and non-empty");
  }
  if (identity_ < 0 || identity_ >= n) throw std::invalid_argument("identity index out of range");
  if (static_cast<int>(table_.size()) != n) throw std::invalid_argument("table has wrong shape");
  for (const auto& row : table_) {
    if (static_cast<int>(row.size()) != n) throw std::invalid_argument("table has wrong shape");
    for (int x : row)
      if (x < 0 || x >= n) throw std::invalid_argument("table entry out of range");
  }
  for (int a = 0; a < n; ++a)
    if (mul(identity_, a) != a || mul(a, identity_) != a)
      throw std::invalid_argument("identity element does not act as identity");
  inverse_.assign(static_cast<std::size_t>(n), -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b)
      if (mul(a, b) == identity_ && mul(b, a) == identity_) {
        inverse_[static_cast<std::size_t>(a)] = b;
        break;
      }
    if (inverse_[static_cast<std::size_t>(a)] < 0)
      throw std::invalid_argument("element without inverse: " + elements_[static_cast<std::size_t>(a)]);
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
          throw std::invalid_argument("multiplication table is not associative");
}

int FiniteGroup::index_of(const std::string& name) const {
  for (int i = 0; i < order(); ++i)
    if (elements_[static_cast<std::size_t>(i)] == name) return i;
  throw std::invalid_argument("unknown group element: " + name);
}

FiniteGroup FiniteGroup::cyclic(int n) {
  if (n < 1) throw std::invalid_argument("cyclic group order must be >= 1");
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back(i == 0 ? "e" : "g" + std::to_string(i));
  std::vector<std::vector<int>> table(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = (a + b) % n;
  return FiniteGroup(std::move(names), 0, std::move(table));
}

FiniteGroup FiniteGroup::trivial() { return cyclic(1); }

void GroupAction::validate() const {
  target.validate();
  const int n = static_cast<int>(target.generators.size());
  if (static_cast<int>(images.size()) != group.order())
    throw std::invalid_argument("action must provide images for every group element");
  for (const auto& row : images) {
    if (static_cast<int>(row.size()) != n)
      throw std::invalid_argument("action must provide an image word for every generator");
    for (const Word& w : row)
      for (const Letter& l : w.letters)
        if (l.generator < 0 || l.generator >= n || (l.exponent != 1 && l.exponent != -1))
          throw std::invalid_argument("action image word is malformed");
  }
  const auto& id_row = images[static_cast<std::size_t>(group.identity())];
  for (int i = 0; i < n; ++i)
    if (!(id_row[static_cast<std::size_t>(i)] == Word::one_letter(i)))
      throw std::invalid_argument("identity element must map each generator to itself");

  // Group law on the abelianization: A_{gh} = A_g A_h.
  std::vector<IntMatrix> A;
  A.reserve(static_cast<std::size_t>(group.order()));
  for (int g = 0; g < group.order(); ++g) A.push_back(abelianized_matrix(g));
  for (int g = 0; g < group.order(); ++g)
    for (int h = 0; h < group.order(); ++h)
      if (!(A[static_cast<std::size_t>(group.mul(g, h))] ==
            A[static_cast<std::size_t>(g)] * A[static_cast<std::size_t>(h)]))
        throw std::invalid_argument(
            "action is inconsistent on the abelianization: A(gh) != A(g) A(h) for g=" +
            group.name(g) + ", h=" + group.name(h));
}

IntMatrix GroupAction::abelianized_matrix(int g) const {
  const int n = static_cast<int>(target.generators.size());
  IntMatrix A(n, n);
  for (int i = 0; i < n; ++i)
    for (const Letter& l : images[static_cast<std::size_t>(g)][static_cast<std::size_t>(i)].letters)
      A.at(l.generator, i) += l.exponent;
  return A;
}

void SymmetricPresentation::verify() const {
  presentation.validate();
  const int G = group.order();
  if (static_cast<int>(xi.size()) != G || static_cast<int>(rho.size()) != G)
    throw std::invalid_argument("xi/rho must have one permutation per group element");
  for (const Perm& p : xi)
    if (static_cast<int>(p.size()) != static_cast<int>(presentation.generators.size()) ||
        !is_permutation(p))
      throw std::invalid_argument("xi is not a permutation representation");
  for (const Perm& p : rho)
    if (static_cast<int>(p.size()) != static_cast<int>(presentation.relators.size()) ||
        !is_permutation(p))
      throw std::invalid_argument("rho is not a permutation representation");
  for (int g = 0; g < G; ++g)
    for (int h = 0; h < G; ++h) {
      if (perm_compose(xi[static_cast<std::size_t>(g)], xi[static_cast<std::size_t>(h)]) !=
          xi[static_cast<std::size_t>(group.mul(g, h))])
        throw std::invalid_argument("xi is not a homomorphism");
      if (perm_compose(rho[static_cast<std::size_t>(g)], rho[static_cast<std::size_t>(h)]) !=
          rho[static_cast<std::size_t>(group.mul(g, h))])
        throw std::invalid_argument("rho is not a homomorphism");
    }
  // Condition (ii), letter for letter.
  for (int g = 0; g < G; ++g)
    for (std::size_t j = 0; j < presentation.relators.size(); ++j) {
      Word permuted;
      for (const Letter& l : presentation.relators[j].letters)
        permuted.letters.push_back({xi[static_cast<std::size_t>(g)][static_cast<std::size_t>(l.generator)], l.exponent});
      const Word& expected =
          presentation.relators[static_cast<std::size_t>(rho[static_cast<std::size_t>(g)][j])];
      if (!(permuted == expected))
        throw std::invalid_argument(
            "symmetric presentation fails condition (ii): inconsistent input action");
    }
}

SymmetricPresentation symmetrize(const GroupAction& action) {
  action.validate();
  const FiniteGroup& G = action.group;
  const int n = static_cast<int>(action.target.generators.size());
  const int ord = G.order();

  SymmetricPresentation sp;
  sp.group = G;
  sp.original_generators = n;
  // Generators x_{i,g}, ordered by (i, g); names "<gen>@<element>".
  for (int i = 0; i < n; ++i)
    for (int g = 0; g < ord; ++g)
      sp.presentation.generators.push_back(action.target.generators[static_cast<std::size_t>(i)] +
                                           "@" + G.name(g));

  auto gen_at = [&](int i, int g) { return i * ord + g; };

  // Type A: each original relator instantiated in the generators x_{., g}.
  std::vector<std::vector<int>> rel_a(action.target.relators.size(), std::vector<int>(static_cast<std::size_t>(ord)));
  for (std::size_t j = 0; j < action.target.relators.size(); ++j)
    for (int g = 0; g < ord; ++g) {
      Word w;
      for (const Letter& l : action.target.relators[j].letters)
        w.letters.push_back({gen_at(l.generator, g), l.exponent});
      rel_a[j][static_cast<std::size_t>(g)] = static_cast<int>(sp.presentation.relators.size());
      sp.presentation.relators.push_back(std::move(w));
    }
  // Type B: w~_{i,g}(x_{1,h},...) x_{i,hg}^{-1}, kept verbatim.
  std::vector<std::vector<std::vector<int>>> rel_b(
      static_cast<std::size_t>(n),
      std::vector<std::vector<int>>(static_cast<std::size_t>(ord), std::vector<int>(static_cast<std::size_t>(ord))));
  for (int i = 0; i < n; ++i)
    for (int g = 0; g < ord; ++g)
      for (int h = 0; h < ord; ++h) {
        Word w;
        for (const Letter& l : action.images[static_cast<std::size_t>(g)][static_cast<std::size_t>(i)].letters)
          w.letters.push_back({gen_at(l.generator, h), l.exponent});
        w.letters.push_back({gen_at(i, G.mul(h, g)), -1});
        rel_b[static_cast<std::size_t>(i)][static_cast<std::size_t>(g)][static_cast<std::size_t>(h)] =
            static_cast<int>(sp.presentation.relators.size());
        sp.presentation.relators.push_back(std::move(w));
      }

  // xi(g): x_{i,h} -> x_{i,gh}; rho(g) permutes relators the same way in h.
  for (int g = 0; g < ord; ++g) {
    Perm px(static_cast<std::size_t>(n * ord));
    for (int i = 0; i < n; ++i)
      for (int h = 0; h < ord; ++h)
        px[static_cast<std::size_t>(gen_at(i, h))] = gen_at(i, G.mul(g, h));
    sp.xi.push_back(std::move(px));

    Perm pr(sp.presentation.relators.size());
    for (std::size_t j = 0; j < action.target.relators.size(); ++j)
      for (int h = 0; h < ord; ++h)
        pr[static_cast<std::size_t>(rel_a[j][static_cast<std::size_t>(h)])] =
            rel_a[j][static_cast<std::size_t>(G.mul(g, h))];
    for (int i = 0; i < n; ++i)
      for (int g0 = 0; g0 < ord; ++g0)
        for (int h = 0; h < ord; ++h)
          pr[static_cast<std::size_t>(rel_b[static_cast<std::size_t>(i)][static_cast<std::size_t>(g0)][static_cast<std::size_t>(h)])] =
              rel_b[static_cast<std::size_t>(i)][static_cast<std::size_t>(g0)][static_cast<std::size_t>(G.mul(g, h))];
    sp.rho.push_back(std::move(pr));
  }

  sp.verify();
  return sp;
}

}  // namespace fintop
