#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace braidtrace {

enum class Sign { positive, negative };

/// Bijection of {1..n}, stored as the image sequence. Composition is
/// left-to-right throughout: (p.then(r))(i) = r(p(i)).
class Permutation {
 public:
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int n);

  int size() const { return static_cast<int>(images_.size()); }
  int image(int i) const { return images_[i - 1]; }
  bool fixes(int i) const { return image(i) == i; }
  bool is_identity() const;

  Permutation then(const Permutation& next) const;
  Permutation inverse() const;

  /// Right multiplication by the adjacent transposition s_i: swaps the
  /// values i and i+1 wherever they occur.
  Permutation right_mul_s(int i) const;

  /// True iff right multiplication by s_i increases the inversion count,
  /// i.e. the value i occurs before the value i+1.
  bool length_increases_by_s(int i) const;

  /// Inversion count; equals the length of any reduced word.
  int inversions() const;

  /// Drop the top point (requires fixes(size())).
  Permutation restricted() const;
  /// Add a fixed top point.
  Permutation extended() const;

  std::string one_line() const;  // "[2 1 3]"

  friend auto operator<=>(const Permutation& lhs, const Permutation& rhs) = default;

 private:
  std::vector<int> images_;
};

/// A braid word: rank n and signed generator letters, letter e standing for
/// the generator with index |e| and crossing sign sgn(e). Letters apply left
/// to right (bottom to top of the diagram).
struct BraidWord {
  int rank = 1;
  std::vector<int> letters;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

/// Validating constructor: rank >= 1, every |letter| in 1..rank-1.
BraidWord make_braid_word(int rank, std::vector<int> letters);

/// Grammar: signed nonzero integers separated by whitespace and/or commas.
/// Without a hint the rank is max|letter|+1 (1 for the empty word).
BraidWord parse_braid_word(std::string_view text, std::optional<int> rank_hint = {});

std::string braid_word_text(const BraidWord& w);

/// The positive word s_1 s_2 ... s_{n-1}; closes to the unknot. n >= 1.
BraidWord coxeter(int n);

/// Coxeter word on the first n-1 strands followed by a full positive loop
/// of the last strand around them: [1..n-2, n-1, n-2, ..., 1, 1, 2, ..., n-1].
/// 3n-4 letters, closure has two components. n >= 2.
BraidWord looped_coxeter(int n);

int writhe(const BraidWord& w);

/// Underlying permutation: transpositions applied left to right, signs ignored.
Permutation braid_permutation(const BraidWord& w);

/// Number of cycles of the underlying permutation = number of link
/// components of the closure.
int closure_component_count(const BraidWord& w);

/// [g] + w + [-g]; |g| must be a valid generator index for w's rank.
BraidWord conjugate(const BraidWord& w, int g);

/// w + [±n] at rank n+1 (Markov stabilization).
BraidWord stabilize(const BraidWord& w, Sign sign);

/// Same letters at rank n+1; the closure gains a split unknot component.
BraidWord shift_disjoint(const BraidWord& w);

/// Cancel adjacent inverse pairs to a fixed point.
BraidWord free_reduce(const BraidWord& w);

/// Deterministic pseudo-random word with the given rank and letter count.
/// Rank 1 yields the empty word.
BraidWord random_braid(std::uint64_t seed, int rank, int length);

/// Rewrite the word at one uniformly chosen applicable site using a braid
/// group relation: swap adjacent letters with far-apart indices, or replace
/// a same-sign (i, j, i) pattern with |i-j| = 1 by (j, i, j). nullopt when
/// no site applies. The closure and the braid group element are unchanged.
std::optional<BraidWord> random_relation_rewrite(const BraidWord& w, std::mt19937_64& rng);

}  // namespace braidtrace
