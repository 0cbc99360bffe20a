#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "braidtrace/braid.hpp"
#include "braidtrace/laurent.hpp"
#include "braidtrace/report.hpp"
#include "braidtrace/trace.hpp"

namespace braidtrace {

/// Normalization metadata fixed once at first use and then frozen:
/// epsilon is the sign on the writhe exponent of the unit prefactor, chosen
/// as the one invariant under both stabilizations; mirror_branch selects the
/// one-variable substitution ('A': a = t, q = t^{-1/2}; 'B': a = t^{-1},
/// q = t^{1/2}), chosen to match the pinned Hopf link value on [1, 1].
struct Calibration {
  int epsilon = 0;
  char mirror_branch = 0;
};

const Calibration& calibration();

/// The two-variable invariant of the closure together with the braid it was
/// computed from. Different presentations of one link agree in value but not
/// in metadata, so the type carries no equality; compare .value.
struct HomflyValue {
  TraceValue value;
  BraidWord source_word;
  int strands = 0;
  int writhe = 0;
};

/// (q a^{-1})^n (-a)^{epsilon w} Tr(w); the prefactor is a unit monomial and
/// lands on the numerator.
HomflyValue homfly_of_braid(const BraidWord& w);

/// Laurent polynomial in t^{1/2} with integer coefficients; keys are doubled
/// exponents of t, so key 5 stands for t^{5/2}. Zero coefficients are never
/// stored and equality is structural.
class JonesValue {
 public:
  using TermMap = std::map<int, BigInt>;

  JonesValue() = default;  // zero
  JonesValue(long value);  // NOLINT: integers embed in the ring
  static JonesValue t_half_pow(BigInt coeff, int doubled_exp);

  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }

  JonesValue& operator+=(const JonesValue& rhs);
  JonesValue& operator-=(const JonesValue& rhs);
  JonesValue& operator*=(const JonesValue& rhs);
  JonesValue operator-() const;

  friend JonesValue operator+(JonesValue lhs, const JonesValue& rhs) {
    lhs += rhs;
    return lhs;
  }
  friend JonesValue operator-(JonesValue lhs, const JonesValue& rhs) {
    lhs -= rhs;
    return lhs;
  }
  friend JonesValue operator*(JonesValue lhs, const JonesValue& rhs) {
    lhs *= rhs;
    return lhs;
  }

  friend bool operator==(const JonesValue&, const JonesValue&) = default;

  int min_exp2() const;  // require nonzero
  int max_exp2() const;

  /// Ascending exponents: "-t^1/2 - t^5/2", "1", "t^-1 + 3".
  std::string pretty_text() const;

 private:
  void add_term(int doubled_exp, const BigInt& c);

  TermMap terms_;
};

JonesValue pow(const JonesValue& base, unsigned exp);

/// Exact division in Z[t^{±1/2}]; nullopt when x is not a multiple of d.
std::optional<JonesValue> div_exact(const JonesValue& x, const JonesValue& d);

/// One-variable invariant normalized to 1 on the unknot: the calibrated
/// substitution of homfly_of_braid divided by the substituted unknot value.
/// Throws NotDivisibleError if the quotient is inexact, which a braid
/// closure cannot trigger.
JonesValue jones_of_braid(const BraidWord& w);

/// Trace of looped_coxeter(n), memoized across n. n >= 2.
TraceValue lcb_trace(int n);

/// Exact check of Tr(LCB_n) = (-q - q^{-3}) Tr(LCB_{n-1}) - q^{-2} Tr(LCB_{n-2})
/// for each n in [n_min, n_max]. n_min >= 4: the two-step recursion needs
/// both predecessors strictly above the directly computed seeds.
Report verify_lcb_recursion(int n_min, int n_max);

/// Exact check of homfly_of_braid(looped_coxeter(n)) against
/// (q a^{-1})^n (-a)^{epsilon (3n-4)} Tr(LCB_n). n >= 2.
Report lcb_homfly_check(int n);

/// Randomized exact invariance of the two-variable invariant under
/// conjugation, both stabilizations, free reduction, and braid relation
/// rewrites. Ranks up to 5, lengths up to 10.
Report markov_invariance_report(int samples, std::uint64_t seed);

/// Randomized exact split-union law: a disjoint unknot multiplies the trace
/// by delta and the one-variable invariant by -(t^{1/2} + t^{-1/2}).
Report split_union_report(int samples, std::uint64_t seed);

}  // namespace braidtrace
