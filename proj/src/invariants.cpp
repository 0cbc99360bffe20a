#include "braidtrace/invariants.hpp"

#include <mutex>
#include <random>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "braidtrace/errors.hpp"
#include "braidtrace/hecke.hpp"

namespace braidtrace {

namespace {

/// (q a^{-1})^n (-a)^{eps w} Tr(w) under an explicitly supplied exponent
/// sign; the frozen-calibration entry points wrap this.
TraceValue homfly_value_eps(const BraidWord& w, int eps) {
  int n = w.rank;
  int wr = writhe(w);
  BigInt sign = (wr % 2 == 0) ? 1 : -1;
  LaurentPoly unit = LaurentPoly::monomial(sign, n, -n + eps * wr);
  return scale(trace_of_braid(w), unit);
}

JonesValue substitute(const LaurentPoly& p, char branch) {
  JonesValue out;
  for (const auto& [e, c] : p.terms()) {
    int e2 = 2 * e.ea - e.eq;  // a = t, q = t^{-1/2}
    if (branch == 'B') e2 = -e2;
    out += JonesValue::t_half_pow(c, e2);
  }
  return out;
}

std::optional<JonesValue> jones_value_for(const BraidWord& w, int eps, char branch) {
  TraceValue h = homfly_value_eps(w, eps);
  TraceValue u = homfly_value_eps(BraidWord{1, {}}, eps);
  JonesValue base = substitute(one_minus_q_squared(), branch);
  JonesValue num =
      substitute(h.num(), branch) * pow(base, static_cast<unsigned>(u.denom_exp()));
  JonesValue den =
      substitute(u.num(), branch) * pow(base, static_cast<unsigned>(h.denom_exp()));
  return div_exact(num, den);
}

Calibration compute_calibration() {
  // Exponent sign: the unknot as the empty word and as either one-letter
  // stabilization must agree. Exactly one sign survives.
  BraidWord unknot{1, {}};
  BraidWord stab_pos{2, {1}};
  BraidWord stab_neg{2, {-1}};
  int eps = 0;
  for (int cand : {+1, -1}) {
    TraceValue base = homfly_value_eps(unknot, cand);
    if (base == homfly_value_eps(stab_pos, cand) &&
        base == homfly_value_eps(stab_neg, cand)) {
      if (eps != 0) throw std::logic_error("writhe-exponent sign is ambiguous");
      eps = cand;
    }
  }
  if (eps == 0)
    throw std::logic_error("no writhe-exponent sign is stabilization invariant");

  // Mirror branch: pinned Hopf link value -t^{5/2} - t^{1/2} on [1, 1].
  JonesValue hopf =
      JonesValue::t_half_pow(-1, 5) + JonesValue::t_half_pow(-1, 1);
  char branch = 0;
  for (char cand : {'A', 'B'}) {
    auto value = jones_value_for(BraidWord{2, {1, 1}}, eps, cand);
    if (value.has_value() && *value == hopf) {
      if (branch != 0) throw std::logic_error("substitution branch is ambiguous");
      branch = cand;
    }
  }
  if (branch == 0)
    throw std::logic_error("no substitution branch matches the pinned Hopf value");
  return Calibration{eps, branch};
}

}  // namespace

const Calibration& calibration() {
  static const Calibration c = compute_calibration();
  return c;
}

HomflyValue homfly_of_braid(const BraidWord& w) {
  HomflyValue out;
  out.value = homfly_value_eps(w, calibration().epsilon);
  out.source_word = w;
  out.strands = w.rank;
  out.writhe = writhe(w);
  return out;
}

JonesValue::JonesValue(long value) {
  if (value != 0) terms_.emplace(0, BigInt(value));
}

JonesValue JonesValue::t_half_pow(BigInt coeff, int doubled_exp) {
  JonesValue out;
  if (coeff != 0) out.terms_.emplace(doubled_exp, std::move(coeff));
  return out;
}

void JonesValue::add_term(int doubled_exp, const BigInt& c) {
  if (c == 0) return;
  auto it = terms_.find(doubled_exp);
  if (it == terms_.end()) {
    terms_.emplace(doubled_exp, c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

JonesValue& JonesValue::operator+=(const JonesValue& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

JonesValue& JonesValue::operator-=(const JonesValue& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

JonesValue& JonesValue::operator*=(const JonesValue& rhs) {
  JonesValue out;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : rhs.terms_) out.add_term(e1 + e2, c1 * c2);
  terms_ = std::move(out.terms_);
  return *this;
}

JonesValue JonesValue::operator-() const {
  JonesValue out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

int JonesValue::min_exp2() const {
  if (terms_.empty()) throw DomainError("zero value has no support");
  return terms_.begin()->first;
}

int JonesValue::max_exp2() const {
  if (terms_.empty()) throw DomainError("zero value has no support");
  return terms_.rbegin()->first;
}

std::string JonesValue::pretty_text() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (e == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << "*";
    if (e == 2)
      os << "t";
    else if (e % 2 == 0)
      os << "t^" << e / 2;
    else
      os << "t^" << e << "/2";
  }
  return os.str();
}

JonesValue pow(const JonesValue& base, unsigned exp) {
  JonesValue out(1);
  for (unsigned i = 0; i < exp; ++i) out *= base;
  return out;
}

std::optional<JonesValue> div_exact(const JonesValue& x, const JonesValue& d) {
  if (d.is_zero()) throw DomainError("division by zero");
  if (x.is_zero()) return JonesValue();
  // Any exact quotient has support inside [min_x - min_d, max_x - max_d];
  // stepping outside it proves inexactness and bounds the loop.
  int qlo = x.min_exp2() - d.min_exp2();
  int qhi = x.max_exp2() - d.max_exp2();
  if (qlo > qhi) return std::nullopt;
  const auto& dlead = *d.terms().rbegin();
  JonesValue rem = x;
  JonesValue quot;
  while (!rem.is_zero()) {
    const auto& rlead = *rem.terms().rbegin();
    int e = rlead.first - dlead.first;
    if (e < qlo || e > qhi) return std::nullopt;
    if (!mpz_divisible_p(rlead.second.get_mpz_t(), dlead.second.get_mpz_t()))
      return std::nullopt;
    BigInt c;
    mpz_divexact(c.get_mpz_t(), rlead.second.get_mpz_t(), dlead.second.get_mpz_t());
    JonesValue qt = JonesValue::t_half_pow(std::move(c), e);
    rem -= qt * d;
    quot += qt;
  }
  return quot;
}

JonesValue jones_of_braid(const BraidWord& w) {
  const Calibration& cal = calibration();
  auto value = jones_value_for(w, cal.epsilon, cal.mirror_branch);
  if (!value.has_value())
    throw NotDivisibleError("substituted unknot value does not divide this one");
  return *value;
}

TraceValue lcb_trace(int n) {
  if (n < 2) throw DomainError("looped coxeter braids start at rank 2");
  static std::map<int, TraceValue> memo;
  static std::mutex memo_mutex;
  {
    std::lock_guard<std::mutex> lock(memo_mutex);
    auto it = memo.find(n);
    if (it != memo.end()) return it->second;
  }
  TraceValue value = trace_of_braid(looped_coxeter(n));
  std::lock_guard<std::mutex> lock(memo_mutex);
  memo.emplace(n, value);
  return value;
}

Report verify_lcb_recursion(int n_min, int n_max) {
  if (n_min < 4) throw DomainError("the recursion is stated for rank at least 4");
  if (n_max < n_min) throw DomainError("empty rank range");
  LaurentPoly c1 = -(LaurentPoly::q(1) + LaurentPoly::q(-3));
  LaurentPoly c2 = LaurentPoly::q(-2);
  Report report;
  report.title = "looped coxeter recursion";
  for (int n = n_min; n <= n_max; ++n) {
    CheckResult c;
    c.name = "recursion";
    c.n = n;
    TraceValue lhs = lcb_trace(n);
    TraceValue rhs = scale(lcb_trace(n - 1), c1) - scale(lcb_trace(n - 2), c2);
    c.lhs = lhs.pretty_text();
    c.rhs = rhs.pretty_text();
    c.pass = lhs == rhs;
    report.checks.push_back(std::move(c));
  }
  return report;
}

Report lcb_homfly_check(int n) {
  if (n < 2) throw DomainError("looped coxeter braids start at rank 2");
  int eps = calibration().epsilon;
  int wr = 3 * n - 4;
  BigInt sign = (wr % 2 == 0) ? 1 : -1;
  LaurentPoly unit = LaurentPoly::monomial(sign, n, -n + eps * wr);
  Report report;
  report.title = "looped coxeter normalization";
  report.epsilon = eps;
  CheckResult c;
  c.name = "closed form";
  c.n = n;
  TraceValue lhs = homfly_of_braid(looped_coxeter(n)).value;
  TraceValue rhs = scale(lcb_trace(n), unit);
  c.lhs = lhs.pretty_text();
  c.rhs = rhs.pretty_text();
  c.pass = lhs == rhs;
  report.checks.push_back(std::move(c));
  return report;
}

Report markov_invariance_report(int samples, std::uint64_t seed) {
  if (samples < 0) throw DomainError("sample count must be nonnegative");
  Report report;
  report.title = "markov invariance";
  report.epsilon = calibration().epsilon;
  std::mt19937_64 rng(seed);
  for (int s = 0; s < samples; ++s) {
    int rank = 2 + static_cast<int>(rng() % 4);
    int len = static_cast<int>(rng() % 11);
    BraidWord w = random_braid(rng(), rank, len);
    int gi = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(rank - 1));
    int g = (rng() & 1) ? gi : -gi;
    BraidWord rewritten = w;
    for (int pass = 0; pass < 3; ++pass) {
      auto next = random_relation_rewrite(rewritten, rng);
      if (!next.has_value()) break;
      rewritten = *next;
    }
    TraceValue base = homfly_of_braid(w).value;
    const BraidWord variants[] = {conjugate(w, g), stabilize(w, Sign::positive),
                                  stabilize(w, Sign::negative), free_reduce(w),
                                  rewritten};
    CheckResult c;
    c.name = "markov moves";
    c.n = rank;
    c.lhs = base.pretty_text();
    c.rhs = c.lhs;
    c.pass = true;
    for (const BraidWord& v : variants) {
      TraceValue moved = homfly_of_braid(v).value;
      if (moved != base) {
        c.pass = false;
        c.rhs = moved.pretty_text();
        break;
      }
    }
    report.checks.push_back(std::move(c));
  }
  return report;
}

Report split_union_report(int samples, std::uint64_t seed) {
  if (samples < 0) throw DomainError("sample count must be nonnegative");
  const TraceConstants& tc = trace_constants();
  // (t - t^{-1}) / (t^{-1/2} - t^{1/2}) = -(t^{1/2} + t^{-1/2}).
  JonesValue numer = JonesValue::t_half_pow(1, 2) + JonesValue::t_half_pow(-1, -2);
  JonesValue denom = JonesValue::t_half_pow(1, -1) + JonesValue::t_half_pow(-1, 1);
  auto factor = div_exact(numer, denom);
  if (!factor.has_value()) throw std::logic_error("split-union factor is inexact");

  Report report;
  report.title = "split union";
  report.epsilon = calibration().epsilon;
  report.mirror_branch = calibration().mirror_branch;
  std::mt19937_64 rng(seed);
  for (int s = 0; s < samples; ++s) {
    int rank = 1 + static_cast<int>(rng() % 4);
    int len = static_cast<int>(rng() % 9);
    BraidWord w = random_braid(rng(), rank, len);
    BraidWord wider = shift_disjoint(w);

    CheckResult ct;
    ct.name = "split union trace";
    ct.n = rank + 1;
    TraceValue tl = trace_of_braid(wider);
    TraceValue tr = tc.delta * trace_of_braid(w);
    ct.lhs = tl.pretty_text();
    ct.rhs = tr.pretty_text();
    ct.pass = tl == tr;
    report.checks.push_back(std::move(ct));

    CheckResult cj;
    cj.name = "split union jones";
    cj.n = rank + 1;
    JonesValue jl = jones_of_braid(wider);
    JonesValue jr = *factor * jones_of_braid(w);
    cj.lhs = jl.pretty_text();
    cj.rhs = jr.pretty_text();
    cj.pass = jl == jr;
    report.checks.push_back(std::move(cj));
  }
  return report;
}

}  // namespace braidtrace
