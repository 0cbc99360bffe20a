#include "braidtrace/hecke.hpp"

#include <sstream>
#include <utility>

#include "braidtrace/errors.hpp"

namespace braidtrace {

namespace {

const LaurentPoly& q_minus_qinv() {
  static const LaurentPoly v =
      LaurentPoly::q(1) + LaurentPoly(-1) * LaurentPoly::q(-1);
  return v;
}

}  // namespace

HeckeElement::HeckeElement(int rank) : rank_(rank) {
  if (rank < 1) throw RankError("algebra rank must be at least 1");
}

void HeckeElement::add_term(const Permutation& w, const LaurentPoly& c) {
  if (w.size() != rank_) throw RankError("basis permutation rank mismatch");
  if (c.is_zero()) return;
  auto it = combo_.find(w);
  if (it == combo_.end()) {
    combo_.emplace(w, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) combo_.erase(it);
}

HeckeElement& HeckeElement::operator+=(const HeckeElement& rhs) {
  if (rhs.rank_ != rank_) throw RankError("algebra rank mismatch");
  for (const auto& [w, c] : rhs.combo_) add_term(w, c);
  return *this;
}

HeckeElement HeckeElement::scaled(const LaurentPoly& c) const {
  HeckeElement out(rank_);
  if (c.is_zero()) return out;
  for (const auto& [w, coeff] : combo_) out.add_term(w, coeff * c);
  return out;
}

HeckeElement HeckeElement::included() const {
  HeckeElement out(rank_ + 1);
  for (const auto& [w, coeff] : combo_) out.add_term(w.extended(), coeff);
  return out;
}

std::string HeckeElement::debug_text() const {
  if (combo_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, coeff] : combo_) {
    if (!first) os << "\n";
    first = false;
    os << w.one_line() << " : " << coeff.canonical_text();
  }
  return os.str();
}

HeckeElement hecke_identity(int n) {
  HeckeElement e(n);
  e.add_term(Permutation::identity(n), LaurentPoly(1));
  return e;
}

HeckeElement hecke_generator(int n, int i, Sign sign) {
  if (i < 1 || i >= n) throw RankError("generator index out of range");
  HeckeElement out(n);
  out.add_term(Permutation::identity(n).right_mul_s(i), LaurentPoly(1));
  if (sign == Sign::negative)
    out.add_term(Permutation::identity(n), LaurentPoly(-1) * q_minus_qinv());
  return out;
}

HeckeElement mul_by_generator(const HeckeElement& x, int i) {
  if (i < 1 || i >= x.rank()) throw RankError("generator index out of range");
  HeckeElement out(x.rank());
  for (const auto& [w, c] : x.combo()) {
    if (w.length_increases_by_s(i)) {
      out.add_term(w.right_mul_s(i), c);
    } else {
      out.add_term(w, c * q_minus_qinv());
      out.add_term(w.right_mul_s(i), c);
    }
  }
  return out;
}

HeckeElement hecke_mul(const HeckeElement& x, const HeckeElement& y) {
  if (x.rank() != y.rank()) throw RankError("algebra rank mismatch");
  HeckeElement out(x.rank());
  for (const auto& [w, c] : y.combo()) {
    HeckeElement part = x;
    for (int i : reduced_word(w)) part = mul_by_generator(part, i);
    out += part.scaled(c);
  }
  return out;
}

HeckeElement from_braid_word(const BraidWord& w) {
  HeckeElement acc = hecke_identity(w.rank);
  for (int letter : w.letters) {
    int i = letter > 0 ? letter : -letter;
    HeckeElement next = mul_by_generator(acc, i);
    if (letter < 0) {
      // x T_i^{-1} = x T_i - (q - q^{-1}) x.
      next += acc.scaled(LaurentPoly(-1) * q_minus_qinv());
    }
    acc = std::move(next);
  }
  return acc;
}

std::vector<int> reduced_word(const Permutation& p) {
  std::vector<int> imgs(p.size());
  for (int i = 1; i <= p.size(); ++i) imgs[i - 1] = p.image(i);
  std::vector<int> word;
  for (;;) {
    int j = 0;
    for (int i = 0; i + 1 < static_cast<int>(imgs.size()); ++i) {
      if (imgs[i] > imgs[i + 1]) {
        j = i + 1;
        break;
      }
    }
    if (j == 0) break;
    std::swap(imgs[j - 1], imgs[j]);
    word.push_back(j);
  }
  return word;
}

int perm_length(const Permutation& p) { return p.inversions(); }

}  // namespace braidtrace
