#include "braidtrace/braid.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <numeric>
#include <sstream>

#include "braidtrace/errors.hpp"

namespace braidtrace {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = size();
  if (n < 1) throw DomainError("permutation needs at least one point");
  std::vector<bool> seen(n, false);
  for (int v : images_) {
    if (v < 1 || v > n || seen[v - 1]) throw DomainError("not a bijection of 1..n");
    seen[v - 1] = true;
  }
}

Permutation Permutation::identity(int n) {
  if (n < 1) throw DomainError("permutation needs at least one point");
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 1);
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const {
  for (int i = 1; i <= size(); ++i)
    if (image(i) != i) return false;
  return true;
}

Permutation Permutation::then(const Permutation& next) const {
  if (size() != next.size()) throw RankError("permutation size mismatch");
  std::vector<int> images(size());
  for (int i = 1; i <= size(); ++i) images[i - 1] = next.image(image(i));
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<int> images(size());
  for (int i = 1; i <= size(); ++i) images[image(i) - 1] = i;
  return Permutation(std::move(images));
}

Permutation Permutation::right_mul_s(int i) const {
  if (i < 1 || i >= size()) throw RankError("transposition index out of range");
  std::vector<int> images = images_;
  for (int& v : images) {
    if (v == i)
      v = i + 1;
    else if (v == i + 1)
      v = i;
  }
  return Permutation(std::move(images));
}

bool Permutation::length_increases_by_s(int i) const {
  if (i < 1 || i >= size()) throw RankError("transposition index out of range");
  for (int v : images_) {
    if (v == i) return true;
    if (v == i + 1) return false;
  }
  return true;  // unreachable
}

int Permutation::inversions() const {
  int count = 0;
  for (int i = 0; i < size(); ++i)
    for (int j = i + 1; j < size(); ++j)
      if (images_[i] > images_[j]) ++count;
  return count;
}

Permutation Permutation::restricted() const {
  if (size() < 2 || !fixes(size())) throw DomainError("top point is not fixed");
  return Permutation(std::vector<int>(images_.begin(), images_.end() - 1));
}

Permutation Permutation::extended() const {
  std::vector<int> images = images_;
  images.push_back(size() + 1);
  return Permutation(std::move(images));
}

std::string Permutation::one_line() const {
  std::string out = "[";
  for (int i = 0; i < size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(images_[i]);
  }
  out += ']';
  return out;
}

BraidWord make_braid_word(int rank, std::vector<int> letters) {
  if (rank < 1) throw DomainError("rank must be at least 1");
  for (int e : letters) {
    if (e == 0) throw ParseError("zero letter");
    if (std::abs(e) > rank - 1)
      throw RankError("letter " + std::to_string(e) + " out of range for rank " +
                      std::to_string(rank));
  }
  return BraidWord{rank, std::move(letters)};
}

BraidWord parse_braid_word(std::string_view text, std::optional<int> rank_hint) {
  if (rank_hint && *rank_hint < 1) throw DomainError("rank hint must be at least 1");
  std::vector<int> letters;
  int max_index = 0;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    size_t used = 0;
    long v = 0;
    try {
      v = std::stol(token, &used);
    } catch (const std::exception&) {
      throw ParseError("malformed token '" + token + "'");
    }
    if (used != token.size()) throw ParseError("malformed token '" + token + "'");
    if (v == 0) throw ParseError("zero letter");
    if (std::labs(v) > 1000000) throw ParseError("letter out of range");
    letters.push_back(static_cast<int>(v));
    max_index = std::max(max_index, static_cast<int>(std::labs(v)));
    token.clear();
  };
  for (char ch : text) {
    if (ch == ',' || std::isspace(static_cast<unsigned char>(ch))) {
      flush();
    } else {
      token += ch;
    }
  }
  flush();
  const int rank = rank_hint ? *rank_hint : (letters.empty() ? 1 : max_index + 1);
  return make_braid_word(rank, std::move(letters));
}

std::string braid_word_text(const BraidWord& w) {
  std::string out;
  for (size_t i = 0; i < w.letters.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(w.letters[i]);
  }
  return out;
}

BraidWord coxeter(int n) {
  if (n < 1) throw DomainError("coxeter braid needs rank >= 1");
  std::vector<int> letters;
  for (int i = 1; i < n; ++i) letters.push_back(i);
  return BraidWord{n, std::move(letters)};
}

BraidWord looped_coxeter(int n) {
  if (n < 2) throw DomainError("looped coxeter braid needs rank >= 2");
  std::vector<int> letters;
  for (int i = 1; i <= n - 2; ++i) letters.push_back(i);
  for (int i = n - 1; i >= 1; --i) letters.push_back(i);
  for (int i = 1; i <= n - 1; ++i) letters.push_back(i);
  return BraidWord{n, std::move(letters)};
}

int writhe(const BraidWord& w) {
  int total = 0;
  for (int e : w.letters) total += e > 0 ? 1 : -1;
  return total;
}

Permutation braid_permutation(const BraidWord& w) {
  Permutation p = Permutation::identity(w.rank);
  for (int e : w.letters) p = p.right_mul_s(std::abs(e));
  return p;
}

int closure_component_count(const BraidWord& w) {
  const Permutation p = braid_permutation(w);
  std::vector<bool> seen(w.rank, false);
  int cycles = 0;
  for (int i = 1; i <= w.rank; ++i) {
    if (seen[i - 1]) continue;
    ++cycles;
    for (int j = i; !seen[j - 1]; j = p.image(j)) seen[j - 1] = true;
  }
  return cycles;
}

BraidWord conjugate(const BraidWord& w, int g) {
  if (g == 0 || std::abs(g) > w.rank - 1) throw RankError("conjugating letter out of range");
  std::vector<int> letters;
  letters.reserve(w.letters.size() + 2);
  letters.push_back(g);
  letters.insert(letters.end(), w.letters.begin(), w.letters.end());
  letters.push_back(-g);
  return BraidWord{w.rank, std::move(letters)};
}

BraidWord stabilize(const BraidWord& w, Sign sign) {
  std::vector<int> letters = w.letters;
  letters.push_back(sign == Sign::positive ? w.rank : -w.rank);
  return BraidWord{w.rank + 1, std::move(letters)};
}

BraidWord shift_disjoint(const BraidWord& w) { return BraidWord{w.rank + 1, w.letters}; }

BraidWord free_reduce(const BraidWord& w) {
  std::vector<int> out;
  for (int e : w.letters) {
    if (!out.empty() && out.back() == -e)
      out.pop_back();
    else
      out.push_back(e);
  }
  return BraidWord{w.rank, std::move(out)};
}

BraidWord random_braid(std::uint64_t seed, int rank, int length) {
  if (rank < 1) throw DomainError("rank must be at least 1");
  if (length < 0) throw DomainError("length must be nonnegative");
  if (rank == 1) return BraidWord{1, {}};
  std::mt19937_64 rng(seed);
  std::vector<int> letters;
  letters.reserve(length);
  for (int i = 0; i < length; ++i) {
    // modulo draws keep the stream identical across standard libraries
    const int index = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(rank - 1));
    const bool negative = (rng() & 1) != 0;
    letters.push_back(negative ? -index : index);
  }
  return BraidWord{rank, std::move(letters)};
}

std::optional<BraidWord> random_relation_rewrite(const BraidWord& w, std::mt19937_64& rng) {
  struct Site {
    size_t pos;
    bool braid_move;  // false: far commutation
  };
  std::vector<Site> sites;
  const auto& ls = w.letters;
  for (size_t p = 0; p + 1 < ls.size(); ++p) {
    if (std::abs(std::abs(ls[p]) - std::abs(ls[p + 1])) >= 2) sites.push_back({p, false});
  }
  for (size_t p = 0; p + 2 < ls.size(); ++p) {
    const int x = ls[p], y = ls[p + 1], z = ls[p + 2];
    const bool same_sign = (x > 0) == (y > 0) && (y > 0) == (z > 0);
    if (same_sign && std::abs(x) == std::abs(z) && std::abs(std::abs(x) - std::abs(y)) == 1)
      sites.push_back({p, true});
  }
  if (sites.empty()) return std::nullopt;
  const Site site = sites[rng() % sites.size()];
  std::vector<int> letters = ls;
  if (site.braid_move) {
    std::swap(letters[site.pos], letters[site.pos + 1]);
    letters[site.pos + 2] = letters[site.pos];
  } else {
    std::swap(letters[site.pos], letters[site.pos + 1]);
  }
  return BraidWord{w.rank, std::move(letters)};
}

}  // namespace braidtrace
