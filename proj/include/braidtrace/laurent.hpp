#pragma once

#include <gmpxx.h>

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace braidtrace {

using BigInt = mpz_class;

// Exponent pair of a monomial q^eq * a^ea. The (ea, eq) ordering below is
// the canonical term order used for display, serialization, and leading
// terms; map iteration follows it.
struct Exponents {
  int eq = 0;
  int ea = 0;

  friend constexpr std::strong_ordering operator<=>(const Exponents& lhs,
                                                    const Exponents& rhs) {
    if (auto c = lhs.ea <=> rhs.ea; c != 0) return c;
    return lhs.eq <=> rhs.eq;
  }
  friend constexpr bool operator==(const Exponents&, const Exponents&) = default;
};

/// Laurent polynomial in q^{±1}, a^{±1} with arbitrary-precision integer
/// coefficients. Zero coefficients are never stored, so structural equality
/// of the term maps is ring equality.
class LaurentPoly {
 public:
  using TermMap = std::map<Exponents, BigInt>;

  LaurentPoly() = default;
  LaurentPoly(long value);  // NOLINT: integers embed in the ring
  LaurentPoly(BigInt value);

  static LaurentPoly monomial(BigInt coeff, int eq, int ea);
  static LaurentPoly q(int exp = 1);
  static LaurentPoly a(int exp = 1);

  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }

  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const LaurentPoly& rhs);
  LaurentPoly operator-() const;

  friend LaurentPoly operator+(LaurentPoly lhs, const LaurentPoly& rhs) {
    lhs += rhs;
    return lhs;
  }
  friend LaurentPoly operator-(LaurentPoly lhs, const LaurentPoly& rhs) {
    lhs -= rhs;
    return lhs;
  }
  friend LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs);

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  // Support bounds per variable; both require a nonzero polynomial.
  int min_eq() const;
  int max_eq() const;
  int min_ea() const;
  int max_ea() const;

  // Machine-readable canonical form; grammar in the README. Example:
  // "1*q^-1 + -1*q^-1*a^2". parse_canonical accepts exactly this form.
  std::string canonical_text() const;
  static LaurentPoly parse_canonical(std::string_view text);

  // Human-readable form, same term order: "q^-1 - q^-1*a^2".
  std::string pretty_text() const;

 private:
  void add_term(const Exponents& e, const BigInt& c);

  TermMap terms_;
};

LaurentPoly pow(const LaurentPoly& base, unsigned exp);

/// Exact division in the Laurent ring; nullopt when x is not a multiple of d.
/// d must be nonzero.
std::optional<LaurentPoly> div_exact(const LaurentPoly& x, const LaurentPoly& d);

/// The denominator base 1 - q^2 of TraceValue.
const LaurentPoly& one_minus_q_squared();

/// A Laurent polynomial divided by a power of (1 - q^2), kept canonical:
/// the numerator of a nonzero value with positive denominator exponent is
/// never divisible by (1 - q^2), and the zero value has exponent 0.
/// Canonical forms are unique, so structural equality is field equality.
class TraceValue {
 public:
  TraceValue() = default;  // zero
  explicit TraceValue(LaurentPoly num, int denom_exp = 0);

  const LaurentPoly& num() const { return num_; }
  int denom_exp() const { return denom_exp_; }
  bool is_zero() const { return num_.is_zero(); }

  TraceValue& operator+=(const TraceValue& rhs);
  TraceValue& operator-=(const TraceValue& rhs);
  TraceValue& operator*=(const TraceValue& rhs);
  TraceValue operator-() const;

  friend TraceValue operator+(TraceValue lhs, const TraceValue& rhs) {
    lhs += rhs;
    return lhs;
  }
  friend TraceValue operator-(TraceValue lhs, const TraceValue& rhs) {
    lhs -= rhs;
    return lhs;
  }
  friend TraceValue operator*(TraceValue lhs, const TraceValue& rhs) {
    lhs *= rhs;
    return lhs;
  }

  friend bool operator==(const TraceValue&, const TraceValue&) = default;

  /// "(1 - a^2) / (1 - q^2)^1"; a value with denominator exponent 0 prints
  /// as the bare numerator.
  std::string pretty_text() const;

 private:
  void canonicalize();

  LaurentPoly num_;
  int denom_exp_ = 0;
};

TraceValue scale(const TraceValue& x, const LaurentPoly& c);

}  // namespace braidtrace
