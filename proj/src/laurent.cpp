#include "braidtrace/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>
#include <vector>

#include "braidtrace/errors.hpp"

namespace braidtrace {

LaurentPoly::LaurentPoly(long value) {
  if (value != 0) terms_[Exponents{}] = BigInt(value);
}

LaurentPoly::LaurentPoly(BigInt value) {
  if (value != 0) terms_[Exponents{}] = std::move(value);
}

LaurentPoly LaurentPoly::monomial(BigInt coeff, int eq, int ea) {
  LaurentPoly p;
  if (coeff != 0) p.terms_[Exponents{eq, ea}] = std::move(coeff);
  return p;
}

LaurentPoly LaurentPoly::q(int exp) { return monomial(1, exp, 0); }

LaurentPoly LaurentPoly::a(int exp) { return monomial(1, 0, exp); }

void LaurentPoly::add_term(const Exponents& e, const BigInt& c) {
  if (c == 0) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs) {
  LaurentPoly out;
  for (const auto& [el, cl] : lhs.terms_) {
    for (const auto& [er, cr] : rhs.terms_) {
      out.add_term(Exponents{el.eq + er.eq, el.ea + er.ea}, cl * cr);
    }
  }
  return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) {
  *this = *this * rhs;
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_[e] = -c;
  return out;
}

namespace {

int range_of(const LaurentPoly::TermMap& terms, bool use_q, bool want_max) {
  if (terms.empty()) throw DomainError("support range of zero polynomial");
  bool first = true;
  int best = 0;
  for (const auto& [e, c] : terms) {
    int v = use_q ? e.eq : e.ea;
    if (first || (want_max ? v > best : v < best)) best = v;
    first = false;
  }
  return best;
}

}  // namespace

int LaurentPoly::min_eq() const { return range_of(terms_, true, false); }
int LaurentPoly::max_eq() const { return range_of(terms_, true, true); }
int LaurentPoly::min_ea() const { return range_of(terms_, false, false); }
int LaurentPoly::max_ea() const { return range_of(terms_, false, true); }

LaurentPoly pow(const LaurentPoly& base, unsigned exp) {
  LaurentPoly out(1);
  for (unsigned i = 0; i < exp; ++i) out *= base;
  return out;
}

std::optional<LaurentPoly> div_exact(const LaurentPoly& x, const LaurentPoly& d) {
  if (d.is_zero()) throw DomainError("div_exact: divisor is zero");
  if (x.is_zero()) return LaurentPoly{};

  // Exponent box of any exact quotient: min/max degrees of a product add
  // per variable over an integral domain.
  const int qlo = x.min_eq() - d.min_eq();
  const int qhi = x.max_eq() - d.max_eq();
  const int alo = x.min_ea() - d.min_ea();
  const int ahi = x.max_ea() - d.max_ea();
  if (qlo > qhi || alo > ahi) return std::nullopt;

  const auto& [dexp, dcoef] = *d.terms().rbegin();
  LaurentPoly rem = x;
  LaurentPoly quot;
  while (!rem.is_zero()) {
    // Leading-term reduction; each step cancels the current leading
    // monomial, so quotient exponents strictly decrease and stay distinct.
    const Exponents rexp = rem.terms().rbegin()->first;
    const BigInt rcoef = rem.terms().rbegin()->second;
    const Exponents e{rexp.eq - dexp.eq, rexp.ea - dexp.ea};
    if (e.eq < qlo || e.eq > qhi || e.ea < alo || e.ea > ahi) return std::nullopt;
    if (!mpz_divisible_p(rcoef.get_mpz_t(), dcoef.get_mpz_t())) return std::nullopt;
    BigInt c;
    mpz_divexact(c.get_mpz_t(), rcoef.get_mpz_t(), dcoef.get_mpz_t());
    const LaurentPoly m = LaurentPoly::monomial(c, e.eq, e.ea);
    quot += m;
    rem -= m * d;
  }
  return quot;
}

namespace {

void append_factor(std::string& out, const char* name, int exp, bool pretty) {
  out += name;
  if (pretty && exp == 1) return;
  out += '^';
  out += std::to_string(exp);
}

std::string term_body(const BigInt& c, const Exponents& e, bool pretty) {
  std::string out;
  const bool has_factors = e.eq != 0 || e.ea != 0;
  if (!has_factors) return c.get_str();
  if (!pretty || c != 1) {
    out += c.get_str();
    out += '*';
  }
  if (e.eq != 0) {
    append_factor(out, "q", e.eq, pretty);
    if (e.ea != 0) out += '*';
  }
  if (e.ea != 0) append_factor(out, "a", e.ea, pretty);
  return out;
}

}  // namespace

std::string LaurentPoly::canonical_text() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) out += " + ";
    out += term_body(c, e, false);
    first = false;
  }
  return out;
}

std::string LaurentPoly::pretty_text() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool neg = c < 0;
    if (first) {
      if (neg) out += '-';
    } else {
      out += neg ? " - " : " + ";
    }
    out += term_body(neg ? BigInt(-c) : c, e, true);
    first = false;
  }
  return out;
}

namespace {

// Token scanner for the canonical grammar:
//   poly   := "0" | term (" + " term)*
//   term   := int | int "*" factor ("*" factor)*
//   factor := ("q" | "a") "^" int
struct Scanner {
  std::string_view text;
  size_t pos = 0;

  bool done() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }

  bool consume(std::string_view lit) {
    if (text.substr(pos, lit.size()) != lit) return false;
    pos += lit.size();
    return true;
  }

  std::string_view integer() {
    size_t start = pos;
    if (!done() && (peek() == '-' || peek() == '+')) ++pos;
    while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos;
    if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(text[start]))))
      throw ParseError("expected integer at offset " + std::to_string(start));
    return text.substr(start, pos - start);
  }
};

int parse_exponent(std::string_view digits) {
  try {
    size_t used = 0;
    int v = std::stoi(std::string(digits), &used);
    if (used != digits.size()) throw ParseError("bad exponent");
    return v;
  } catch (const std::exception&) {
    throw ParseError("bad exponent '" + std::string(digits) + "'");
  }
}

}  // namespace

LaurentPoly LaurentPoly::parse_canonical(std::string_view text) {
  if (text == "0") return LaurentPoly{};
  Scanner sc{text};
  LaurentPoly out;
  while (true) {
    BigInt coeff(std::string(sc.integer()), 10);
    Exponents e;
    bool saw_q = false;
    bool saw_a = false;
    while (sc.consume("*")) {
      if (sc.consume("q^")) {
        if (saw_q || saw_a) throw ParseError("factors out of order");
        e.eq = parse_exponent(sc.integer());
        saw_q = true;
      } else if (sc.consume("a^")) {
        if (saw_a) throw ParseError("duplicate a factor");
        e.ea = parse_exponent(sc.integer());
        saw_a = true;
      } else {
        throw ParseError("expected factor at offset " + std::to_string(sc.pos));
      }
    }
    if (coeff == 0) throw ParseError("zero coefficient term");
    if (out.terms_.count(e)) throw ParseError("duplicate exponent pair");
    out.terms_[e] = std::move(coeff);
    if (sc.done()) break;
    if (!sc.consume(" + ")) throw ParseError("expected ' + ' at offset " + std::to_string(sc.pos));
  }
  // Reject inputs whose term order is not canonical.
  LaurentPoly reparsed = out;
  if (reparsed.canonical_text() != text) throw ParseError("non-canonical term order");
  return out;
}

const LaurentPoly& one_minus_q_squared() {
  static const LaurentPoly d = LaurentPoly(1) - LaurentPoly::q(2);
  return d;
}

TraceValue::TraceValue(LaurentPoly num, int denom_exp)
    : num_(std::move(num)), denom_exp_(denom_exp) {
  if (denom_exp < 0) throw DomainError("negative denominator exponent");
  canonicalize();
}

void TraceValue::canonicalize() {
  if (num_.is_zero()) {
    denom_exp_ = 0;
    return;
  }
  while (denom_exp_ > 0) {
    auto quot = div_exact(num_, one_minus_q_squared());
    if (!quot) break;
    num_ = std::move(*quot);
    --denom_exp_;
  }
}

TraceValue& TraceValue::operator+=(const TraceValue& rhs) {
  const int k = std::max(denom_exp_, rhs.denom_exp_);
  LaurentPoly sum = num_ * pow(one_minus_q_squared(), k - denom_exp_) +
                    rhs.num_ * pow(one_minus_q_squared(), k - rhs.denom_exp_);
  num_ = std::move(sum);
  denom_exp_ = k;
  canonicalize();
  return *this;
}

TraceValue& TraceValue::operator-=(const TraceValue& rhs) {
  *this += -rhs;
  return *this;
}

TraceValue& TraceValue::operator*=(const TraceValue& rhs) {
  num_ *= rhs.num_;
  denom_exp_ += rhs.denom_exp_;
  canonicalize();
  return *this;
}

TraceValue TraceValue::operator-() const {
  TraceValue out = *this;
  out.num_ = -out.num_;
  return out;
}

TraceValue scale(const TraceValue& x, const LaurentPoly& c) {
  return TraceValue(x.num() * c, x.denom_exp());
}

std::string TraceValue::pretty_text() const {
  if (denom_exp_ == 0) return num_.pretty_text();
  return "(" + num_.pretty_text() + ") / (1 - q^2)^" + std::to_string(denom_exp_);
}

}  // namespace braidtrace
