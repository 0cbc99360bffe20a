#pragma once

#include <cstdint>
#include <optional>

#include "braidtrace/braid.hpp"
#include "braidtrace/hecke.hpp"
#include "braidtrace/laurent.hpp"
#include "braidtrace/report.hpp"

namespace braidtrace {

/// Weights of the Markov trace. delta is the value of the identity at each
/// rank step, zPos and zNeg the positive and negative stabilization factors.
/// They satisfy zPos - zNeg = (q - q^{-1}) delta, which pins delta to
/// (1 - a^2) / (1 - q^2) once zPos = -q^{-1} and zNeg = -q^{-1} a^2.
struct TraceConstants {
  TraceValue delta;
  LaurentPoly z_pos;
  LaurentPoly z_neg;
};

const TraceConstants& trace_constants();

/// Coset split w = u . c with u fixing the top point n and c the cycle
/// s_{n-1} s_{n-2} ... s_k, where k = w(n). k == n means c is empty.
struct NormalForm {
  Permutation u;
  int k = 0;
};

NormalForm normal_form_decompose(const Permutation& w);

/// Trace of a single basis element T_w, computed by peeling the top strand:
///   w fixes n:  delta * tr(u restricted),
///   otherwise:  zPos * tr(T_u T_{s_{n-2} ... s_k} in rank n-1).
/// Values live in Z[q^{±1}, a^{±1}] / (1 - q^2)^k and are memoized.
TraceValue ocneanu_trace(const Permutation& w);

TraceValue trace_element(const HeckeElement& x);

TraceValue trace_of_braid(const BraidWord& w);

/// Randomized checks of the defining trace laws (commutativity, the two
/// stabilization factors, invariance under the rank inclusion) on braid word
/// images, plus the weight identity itself.
Report trace_axiom_report(int n_max, int samples, std::uint64_t seed);

}  // namespace braidtrace
