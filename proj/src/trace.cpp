#include "braidtrace/trace.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

#include "braidtrace/errors.hpp"

namespace braidtrace {

namespace {

const LaurentPoly& q_minus_qinv() {
  static const LaurentPoly v =
      LaurentPoly::q(1) + LaurentPoly(-1) * LaurentPoly::q(-1);
  return v;
}

TraceConstants build_constants() {
  TraceConstants c;
  c.delta = TraceValue(LaurentPoly(1) - LaurentPoly::a(2), 1);
  c.z_pos = LaurentPoly::monomial(-1, -1, 0);
  c.z_neg = LaurentPoly::monomial(-1, -1, 2);
  // The two stabilization factors and delta are not independent; refuse to
  // run if the cross-multiplied identity fails.
  LaurentPoly lhs = (c.z_pos - c.z_neg) * one_minus_q_squared();
  LaurentPoly rhs = q_minus_qinv() * (LaurentPoly(1) - LaurentPoly::a(2));
  if (lhs != rhs) throw std::logic_error("trace weights are inconsistent");
  return c;
}

}  // namespace

const TraceConstants& trace_constants() {
  static const TraceConstants c = build_constants();
  return c;
}

NormalForm normal_form_decompose(const Permutation& w) {
  int n = w.size();
  int k = w.image(n);
  Permutation c = Permutation::identity(n);
  for (int i = n - 1; i >= k; --i) c = c.right_mul_s(i);
  Permutation u = w.then(c.inverse());
  if (!u.fixes(n) || u.inversions() + (n - k) != w.inversions())
    throw std::logic_error("coset split violated length additivity");
  return NormalForm{std::move(u), k};
}

TraceValue ocneanu_trace(const Permutation& w) {
  static std::map<Permutation, TraceValue> memo;
  static std::mutex memo_mutex;
  {
    std::lock_guard<std::mutex> lock(memo_mutex);
    auto it = memo.find(w);
    if (it != memo.end()) return it->second;
  }

  const TraceConstants& tc = trace_constants();
  int n = w.size();
  TraceValue result;
  if (n == 1) {
    result = tc.delta;
  } else {
    NormalForm nf = normal_form_decompose(w);
    if (nf.k == n) {
      result = tc.delta * ocneanu_trace(w.restricted());
    } else {
      // T_w = T_u T_{n-1} T_{n-2} ... T_k; the trace eats the single T_{n-1}
      // and leaves the rest of the cycle in the smaller algebra.
      HeckeElement rest(n - 1);
      rest.add_term(nf.u.restricted(), LaurentPoly(1));
      for (int i = n - 2; i >= nf.k; --i) rest = mul_by_generator(rest, i);
      result = scale(trace_element(rest), tc.z_pos);
    }
  }

  std::lock_guard<std::mutex> lock(memo_mutex);
  memo.emplace(w, result);
  return result;
}

TraceValue trace_element(const HeckeElement& x) {
  TraceValue acc;
  for (const auto& [w, c] : x.combo()) acc += scale(ocneanu_trace(w), c);
  return acc;
}

TraceValue trace_of_braid(const BraidWord& w) {
  return trace_element(from_braid_word(w));
}

Report trace_axiom_report(int n_max, int samples, std::uint64_t seed) {
  if (n_max < 2) throw DomainError("axiom checks need a rank bound of at least 2");
  if (samples < 0) throw DomainError("sample count must be nonnegative");
  const TraceConstants& tc = trace_constants();

  Report report;
  report.title = "trace axioms";

  {
    CheckResult c;
    c.name = "weight identity";
    c.n = 1;
    TraceValue lhs(tc.z_pos - tc.z_neg, 0);
    TraceValue rhs = scale(tc.delta, q_minus_qinv());
    c.lhs = lhs.pretty_text();
    c.rhs = rhs.pretty_text();
    c.pass = lhs == rhs;
    report.checks.push_back(std::move(c));
  }

  std::mt19937_64 rng(seed);
  auto random_len = [&](int rank) {
    return static_cast<int>(rng() % static_cast<std::uint64_t>(2 * rank + 1));
  };

  for (int s = 0; s < samples; ++s) {
    CheckResult c;
    switch (s % 4) {
      case 0: {
        int n = 2 + static_cast<int>(rng() % static_cast<std::uint64_t>(n_max - 1));
        BraidWord v = random_braid(rng(), n, random_len(n));
        BraidWord w = random_braid(rng(), n, random_len(n));
        BraidWord vw = v;
        vw.letters.insert(vw.letters.end(), w.letters.begin(), w.letters.end());
        BraidWord wv = w;
        wv.letters.insert(wv.letters.end(), v.letters.begin(), v.letters.end());
        c.name = "commutativity";
        c.n = n;
        TraceValue lhs = trace_of_braid(vw);
        TraceValue rhs = trace_of_braid(wv);
        c.lhs = lhs.pretty_text();
        c.rhs = rhs.pretty_text();
        c.pass = lhs == rhs;
        break;
      }
      case 1:
      case 2: {
        Sign sign = (s % 4 == 1) ? Sign::positive : Sign::negative;
        int nb = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n_max - 1));
        BraidWord w = random_braid(rng(), nb, random_len(nb));
        c.name = sign == Sign::positive ? "markov positive" : "markov negative";
        c.n = nb + 1;
        TraceValue lhs = trace_of_braid(stabilize(w, sign));
        TraceValue rhs = scale(trace_of_braid(w),
                               sign == Sign::positive ? tc.z_pos : tc.z_neg);
        c.lhs = lhs.pretty_text();
        c.rhs = rhs.pretty_text();
        c.pass = lhs == rhs;
        break;
      }
      default: {
        int nb = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n_max - 1));
        BraidWord w = random_braid(rng(), nb, random_len(nb));
        BraidWord wider = w;
        wider.rank = nb + 1;
        c.name = "inclusion";
        c.n = nb + 1;
        TraceValue lhs = trace_of_braid(wider);
        TraceValue rhs = tc.delta * trace_of_braid(w);
        c.lhs = lhs.pretty_text();
        c.rhs = rhs.pretty_text();
        c.pass = lhs == rhs;
        break;
      }
    }
    report.checks.push_back(std::move(c));
  }
  return report;
}

}  // namespace braidtrace
