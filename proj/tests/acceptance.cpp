// Eight exact end-to-end checks, one line each. Exit 0 only if all pass.
#include <cstdio>
#include <vector>

#include "braidtrace/braid.hpp"
#include "braidtrace/invariants.hpp"
#include "braidtrace/laurent.hpp"
#include "braidtrace/trace.hpp"

using namespace braidtrace;

namespace {

bool all_ok = true;

void criterion(int index, const char* name, bool pass) {
  std::printf("[%s] %d %s\n", pass ? "PASS" : "FAIL", index, name);
  if (!pass) all_ok = false;
}

JonesValue jones_terms(std::initializer_list<std::pair<int, long>> terms) {
  JonesValue out;
  for (const auto& [e2, c] : terms) out += JonesValue::t_half_pow(c, e2);
  return out;
}

}  // namespace

int main() {
  // 1: hopf link value -t^{1/2} - t^{5/2}
  criterion(1, "hopf link jones value",
            jones_of_braid(make_braid_word(2, {1, 1})) ==
                jones_terms({{1, -1}, {5, -1}}));

  // 2: unknot normalization, both invariants; the two-variable value is
  // (a^-1 - a) / (q^-1 - q), checked by cross multiplication
  {
    BraidWord unknot = make_braid_word(1, {});
    TraceValue h = homfly_of_braid(unknot).value;
    LaurentPoly lhs = h.num() * (LaurentPoly::q(-1) - LaurentPoly::q(1));
    LaurentPoly rhs = (LaurentPoly::a(-1) - LaurentPoly::a(1)) *
                      pow(one_minus_q_squared(), static_cast<unsigned>(h.denom_exp()));
    criterion(2, "unknot normalization",
              jones_of_braid(unknot) == JonesValue(1) && lhs == rhs);
  }

  // 3: looped coxeter trace recursion, ranks 4..8
  criterion(3, "looped coxeter recursion", verify_lcb_recursion(4, 8).all_pass());

  // 4: looped coxeter closed form under the one calibrated sign, ranks 2..8
  {
    bool ok = true;
    for (int n = 2; n <= 8; ++n) {
      Report r = lcb_homfly_check(n);
      ok = ok && r.all_pass() && r.epsilon && *r.epsilon == calibration().epsilon;
    }
    criterion(4, "looped coxeter closed form", ok);
  }

  // 5: invariance under all five word moves, 200 seeded samples
  criterion(5, "markov move invariance",
            markov_invariance_report(200, 12345).all_pass());

  // 6: trace laws and the weight identity, 200 seeded samples
  {
    const TraceConstants& tc = trace_constants();
    bool weights = TraceValue(tc.z_pos - tc.z_neg) ==
                   scale(tc.delta, LaurentPoly::q(1) - LaurentPoly::q(-1));
    criterion(6, "trace axioms",
              weights && trace_axiom_report(5, 200, 12345).all_pass());
  }

  // 7: split union law at trace and jones level, 50 seeded samples
  criterion(7, "split union law", split_union_report(50, 12345).all_pass());

  // 8: coxeter closures are unknots
  {
    bool ok = true;
    for (int n = 1; n <= 7; ++n) {
      BraidWord w = coxeter(n);
      ok = ok && closure_component_count(w) == 1 &&
           jones_of_braid(w) == JonesValue(1);
    }
    criterion(8, "coxeter closure sanity", ok);
  }

  return all_ok ? 0 : 1;
}
