#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "braidtrace/errors.hpp"
#include "braidtrace/laurent.hpp"

using namespace braidtrace;

namespace {

LaurentPoly q(int e = 1) { return LaurentPoly::q(e); }
LaurentPoly a(int e = 1) { return LaurentPoly::a(e); }

LaurentPoly random_poly(std::mt19937_64& rng) {
  LaurentPoly p;
  int terms = static_cast<int>(rng() % 4);
  for (int i = 0; i < terms; ++i) {
    long c = static_cast<long>(rng() % 11) - 5;
    int eq = static_cast<int>(rng() % 7) - 3;
    int ea = static_cast<int>(rng() % 7) - 3;
    p += LaurentPoly::monomial(c, eq, ea);
  }
  return p;
}

TraceValue random_trace_value(std::mt19937_64& rng) {
  return TraceValue(random_poly(rng), static_cast<int>(rng() % 3));
}

const TraceValue& delta() {
  static const TraceValue d(LaurentPoly(1) - a(2), 1);
  return d;
}

}  // namespace

TEST_CASE("addition") {
  CHECK((q() + (-q())).is_zero());
  CHECK(q() + a() + q() == LaurentPoly(2) * q() + a());
  CHECK((LaurentPoly(1) - q(2)) + q(2) == LaurentPoly(1));
}

TEST_CASE("multiplication") {
  CHECK((q() + q(-1)) * (q() - q(-1)) == q(2) - q(-2));
  LaurentPoly x = q(3) - a(-2) + LaurentPoly(7);
  CHECK(x * LaurentPoly(1) == x);
  LaurentPoly s = q() - q(-1);
  CHECK(s * s == q(2) - LaurentPoly(2) + q(-2));
}

TEST_CASE("exact division") {
  LaurentPoly d = LaurentPoly(1) - q(2);
  LaurentPoly n = LaurentPoly(1) - a(2);
  auto quot = div_exact(d * n, d);
  REQUIRE(quot.has_value());
  CHECK(*quot == n);
  CHECK(!div_exact(n, d).has_value());
  auto zero = div_exact(LaurentPoly(), d);
  REQUIRE(zero.has_value());
  CHECK(zero->is_zero());
  CHECK_THROWS_AS(div_exact(n, LaurentPoly()), DomainError);
}

TEST_CASE("exact division round-trips random products") {
  std::mt19937_64 rng(2024);
  int done = 0;
  while (done < 60) {
    LaurentPoly p = random_poly(rng);
    LaurentPoly d = random_poly(rng);
    if (d.is_zero()) continue;
    auto quot = div_exact(p * d, d);
    REQUIRE(quot.has_value());
    CHECK(*quot == p);
    ++done;
  }
}

TEST_CASE("ring axioms on random triples") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 50; ++i) {
    LaurentPoly x = random_poly(rng);
    LaurentPoly y = random_poly(rng);
    LaurentPoly z = random_poly(rng);
    CHECK((x + y) + z == x + (y + z));
    CHECK(x + y == y + x);
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * y == y * x);
    CHECK(x * (y + z) == x * y + x * z);
  }
}

TEST_CASE("trace value addition") {
  TraceValue two_delta = delta() + delta();
  CHECK(two_delta == TraceValue(LaurentPoly(2) - LaurentPoly(2) * a(2), 1));
  std::mt19937_64 rng(5);
  TraceValue x = random_trace_value(rng);
  CHECK(x + TraceValue() == x);
  TraceValue cancel = delta() + (-delta());
  CHECK(cancel.is_zero());
  CHECK(cancel.denom_exp() == 0);
}

TEST_CASE("trace value multiplication and scaling") {
  LaurentPoly n = LaurentPoly(1) - a(2);
  CHECK(delta() * delta() == TraceValue(n * n, 2));
  CHECK(scale(delta(), -q(-1)) == TraceValue(-q(-1) + q(-1) * a(2), 1));
  CHECK(delta() * TraceValue(LaurentPoly(1)) == delta());
}

TEST_CASE("canonicalization") {
  LaurentPoly d = LaurentPoly(1) - q(2);
  LaurentPoly n = LaurentPoly(1) - a(2);
  TraceValue reduced(d * n, 2);
  CHECK(reduced.denom_exp() == 1);
  CHECK(reduced.num() == n);
  TraceValue stable(n, 1);
  CHECK(stable.denom_exp() == 1);
  CHECK(stable.num() == n);
  TraceValue zero(LaurentPoly(), 3);
  CHECK(zero.denom_exp() == 0);
  CHECK(zero.is_zero());
  CHECK_THROWS_AS(TraceValue(n, -1), DomainError);
}

TEST_CASE("operations keep values canonical") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 40; ++i) {
    TraceValue x = random_trace_value(rng);
    TraceValue y = random_trace_value(rng);
    for (const TraceValue& v : {x + y, x * y, x - y}) {
      // re-canonicalizing a canonical value must be the identity
      CHECK(TraceValue(v.num(), v.denom_exp()) == v);
      if (!v.is_zero() && v.denom_exp() > 0)
        CHECK(!div_exact(v.num(), one_minus_q_squared()).has_value());
      if (v.is_zero()) CHECK(v.denom_exp() == 0);
    }
  }
}

TEST_CASE("equality agrees with cross multiplication") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 60; ++i) {
    TraceValue x = random_trace_value(rng);
    TraceValue y = random_trace_value(rng);
    bool cross = x.num() * pow(one_minus_q_squared(), y.denom_exp()) ==
                 y.num() * pow(one_minus_q_squared(), x.denom_exp());
    CHECK((x == y) == cross);
    // same field element fed in non-reduced form
    TraceValue inflated(x.num() * one_minus_q_squared(), x.denom_exp() + 1);
    CHECK(inflated == x);
  }
}

TEST_CASE("canonical text") {
  LaurentPoly p = q(-1) - q(-1) * a(2);
  CHECK(p.canonical_text() == "1*q^-1 + -1*q^-1*a^2");
  CHECK(LaurentPoly().canonical_text() == "0");
  CHECK(LaurentPoly(-3).canonical_text() == "-3");
  CHECK((q(2) + a()).canonical_text() == "1*q^2 + 1*a^1");
  CHECK(LaurentPoly::parse_canonical("1*q^-1 + -1*q^-1*a^2") == p);
  CHECK(LaurentPoly::parse_canonical("0").is_zero());
}

TEST_CASE("canonical text round-trips") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 50; ++i) {
    LaurentPoly p = random_poly(rng);
    CHECK(LaurentPoly::parse_canonical(p.canonical_text()) == p);
  }
}

TEST_CASE("parse rejects malformed text") {
  CHECK_THROWS_AS(LaurentPoly::parse_canonical("q^2"), ParseError);
  CHECK_THROWS_AS(LaurentPoly::parse_canonical("1*q^2 +2"), ParseError);
  CHECK_THROWS_AS(LaurentPoly::parse_canonical("0*q^1"), ParseError);
  CHECK_THROWS_AS(LaurentPoly::parse_canonical("1*a^2*q^1"), ParseError);
  // well-formed terms in non-canonical order
  CHECK_THROWS_AS(LaurentPoly::parse_canonical("1*a^2 + 1*q^1"), ParseError);
  CHECK_THROWS_AS(LaurentPoly::parse_canonical("1*q^1 + 2*q^1"), ParseError);
}

TEST_CASE("pretty text") {
  CHECK((LaurentPoly(1) - a(2)).pretty_text() == "1 - a^2");
  CHECK((-q(-1) + q(-1) * a(2)).pretty_text() == "-q^-1 + q^-1*a^2");
  CHECK((q() * a(-1)).pretty_text() == "q*a^-1");
  CHECK(LaurentPoly().pretty_text() == "0");
  CHECK(delta().pretty_text() == "(1 - a^2) / (1 - q^2)^1");
  CHECK(TraceValue(q(2)).pretty_text() == "q^2");
}

TEST_CASE("support bounds") {
  LaurentPoly p = q(-3) * a(2) + q(5) - a(-1);
  CHECK(p.min_eq() == -3);
  CHECK(p.max_eq() == 5);
  CHECK(p.min_ea() == -1);
  CHECK(p.max_ea() == 2);
  CHECK_THROWS_AS(LaurentPoly().min_eq(), DomainError);
}
