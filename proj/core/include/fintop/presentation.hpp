#ifndef FINTOP_PRESENTATION_HPP
#define FINTOP_PRESENTATION_HPP

#include <string>
#include <vector>

#include "fintop/integer_matrix.hpp"
#include "fintop/util.hpp"

namespace fintop {

/// Letter of a word: generator index and exponent +1/-1.
struct Letter {
  int generator = 0;
  int exponent = 1;
  bool operator==(const Letter& o) const = default;
};

/// Word in a free group, all exponents normalized to +-1.
struct Word {
  std::vector<Letter> letters;

  bool operator==(const Word& o) const = default;
  bool empty() const { return letters.empty(); }
  int length() const { return static_cast<int>(letters.size()); }
  Word inverse() const;
  static Word one_letter(int generator, int exponent = 1);
};

// Parses whitespace-separated letters "x", "x^-1", "x^3"; exponents are
// expanded to +-1 and the word is freely reduced.
Word parse_word(const std::string& text, const std::vector<std::string>& generators);
std::string word_to_string(const Word& w, const std::vector<std::string>& generators);
Word free_reduce(const Word& w);

/// Finitely presented group (generators and relators).
struct Presentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;

  void validate() const;
  // Column e_i = exponent sums of relator i.
  IntMatrix relator_matrix_transposed() const;  // generators x relators
};

// Smith normal form of the relator exponent-sum matrix: rank plus torsion.
AbelianGroup abelianization(const Presentation& p);

/// Finite group by multiplication table; group laws checked exhaustively.
class FiniteGroup {
 public:
  FiniteGroup() : FiniteGroup({"e"}, 0, {{0}}) {}  // trivial group
  FiniteGroup(std::vector<std::string> elements, int identity,
              std::vector<std::vector<int>> table);

  int order() const { return static_cast<int>(elements_.size()); }
  int identity() const { return identity_; }
  int mul(int a, int b) const { return table_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; }
  int inverse(int a) const { return inverse_[static_cast<std::size_t>(a)]; }
  const std::string& name(int a) const { return elements_[static_cast<std::size_t>(a)]; }
  const std::vector<std::string>& elements() const { return elements_; }
  int index_of(const std::string& name) const;

  static FiniteGroup cyclic(int n);
  static FiniteGroup trivial();

 private:
  std::vector<std::string> elements_;
  int identity_ = 0;
  std::vector<std::vector<int>> table_;
  std::vector<int> inverse_;
};

/**
 * Action of a finite group on a finitely presented group, given by a word
 * image for every (group element, generator) pair.  The identity must map
 * each generator to itself; the group law is checked on the abelianization
 * (full verification would need the word problem).
 */
struct GroupAction {
  FiniteGroup group;
  Presentation target;
  std::vector<std::vector<Word>> images;  // images[g][i] = word for g(x_i)

  void validate() const;
  IntMatrix abelianized_matrix(int g) const;  // n x n exponent-sum matrix
};

/**
 * G-symmetric presentation: generators x_{i,g}, ordered by (i, g); xi and rho
 * are the permutation representations on generator and relator indices.
 */
struct SymmetricPresentation {
  Presentation presentation;
  FiniteGroup group;
  int original_generators = 0;
  std::vector<Perm> xi;   // xi[g] on generator indices
  std::vector<Perm> rho;  // rho[g] on relator indices

  int generator_index(int i, int g) const { return i * group.order() + g; }

  // Conditions (i)/(ii): xi and rho are homomorphisms and permuting the
  // letters of relator j by xi(g) gives relator rho(g)(j) letter-for-letter.
  void verify() const;
};

// Builds the symmetric presentation: for every g an instance of each original
// relator in the generators x_{.,g}, plus for every (i, g, h) the relator
// w~_{i,g}(x_{1,h},...,x_{n,h}) * x_{i,hg}^{-1}.  Constructed relators are
// kept verbatim (not freely reduced).
SymmetricPresentation symmetrize(const GroupAction& action);

}  // namespace fintop

#endif
