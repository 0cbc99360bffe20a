#pragma once

#include <map>
#include <string>
#include <vector>

#include "braidtrace/braid.hpp"
#include "braidtrace/laurent.hpp"

namespace braidtrace {

/// Element of the rank-n algebra generated by braids over Laurent
/// polynomials, held in the permutation basis {T_w : w a permutation of
/// 1..n}. The defining relations make T_i invertible with
/// T_i^{-1} = T_i - (q - q^{-1}), equivalently T_i^2 = (q - q^{-1}) T_i + 1,
/// and make T_w well defined over reduced words.
class HeckeElement {
 public:
  using Combo = std::map<Permutation, LaurentPoly>;

  explicit HeckeElement(int rank);

  int rank() const { return rank_; }
  const Combo& combo() const { return combo_; }
  bool is_zero() const { return combo_.empty(); }

  void add_term(const Permutation& w, const LaurentPoly& c);

  HeckeElement& operator+=(const HeckeElement& rhs);
  friend HeckeElement operator+(HeckeElement lhs, const HeckeElement& rhs) {
    lhs += rhs;
    return lhs;
  }

  HeckeElement scaled(const LaurentPoly& c) const;

  /// Image under the rank inclusion: every basis permutation gains a fixed
  /// top point.
  HeckeElement included() const;

  friend bool operator==(const HeckeElement&, const HeckeElement&) = default;

  /// One line per basis term, canonical order: "[2 1] : 1*q^-1".
  std::string debug_text() const;

 private:
  int rank_;
  Combo combo_;
};

HeckeElement hecke_identity(int n);

/// T_{s_i} for the positive generator; T_{s_i} - (q - q^{-1}) T_e for the
/// negative one.
HeckeElement hecke_generator(int n, int i, Sign sign);

/// Right multiplication by T_{s_i}:
///   T_w T_{s_i} = T_{w s_i}                        if the length goes up,
///   T_w T_{s_i} = (q - q^{-1}) T_w + T_{w s_i}     otherwise.
HeckeElement mul_by_generator(const HeckeElement& x, int i);

/// Bilinear product; the right factor is expanded through reduced words of
/// its basis permutations. Ranks must agree.
HeckeElement hecke_mul(const HeckeElement& x, const HeckeElement& y);

inline HeckeElement operator*(const HeckeElement& x, const HeckeElement& y) {
  return hecke_mul(x, y);
}

/// Image of a braid word: fold generators left to right, eliminating
/// negative letters through the inverse formula.
HeckeElement from_braid_word(const BraidWord& w);

/// Deterministic reduced word: repeatedly peel the smallest position i with
/// p(i) > p(i+1) as a left factor s_i. Length equals the inversion count.
std::vector<int> reduced_word(const Permutation& p);

int perm_length(const Permutation& p);

}  // namespace braidtrace
