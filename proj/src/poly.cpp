#include "primeveil/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace primeveil {

namespace {

void mul_pow(Nat& acc, const Nat& base, unsigned exp) {
  if (exp == 0) return;
  Nat t;
  mpz_pow_ui(t.get_mpz_t(), base.get_mpz_t(), exp);
  acc *= t;
}

}  // namespace

Polynomial Polynomial::from_terms(TermMap terms) {
  if (terms.empty()) throw std::invalid_argument("polynomial must have at least one term");
  Polynomial p;
  for (const auto& [exps, coeff] : terms) {
    if (exps.first == 0 && exps.second == 0)
      throw std::invalid_argument("constant term is not allowed");
    if (exps.first > kMaxExponent || exps.second > kMaxExponent)
      throw std::invalid_argument("exponent exceeds limit");
    if (coeff <= 0) throw std::invalid_argument("coefficients must be positive");
    p.d1_ = std::max(p.d1_, exps.first);
    p.d2_ = std::max(p.d2_, exps.second);
  }
  p.terms_ = std::move(terms);
  return p;
}

Nat Polynomial::eval(const Nat& x, const Nat& y) const {
  // f = sum_i x^i * g_i(y), inner and outer sums both in Horner form over the
  // exponents actually present
  Nat acc = 0;
  bool outer_first = true;
  unsigned prev_i = 0;

  auto it = terms_.rbegin();
  while (it != terms_.rend()) {
    unsigned i = it->first.first;

    Nat g = 0;
    bool inner_first = true;
    unsigned prev_j = 0;
    for (; it != terms_.rend() && it->first.first == i; ++it) {
      unsigned j = it->first.second;
      if (inner_first) {
        g = it->second;
        inner_first = false;
      } else {
        mul_pow(g, y, prev_j - j);
        g += it->second;
      }
      prev_j = j;
    }
    mul_pow(g, y, prev_j);

    if (outer_first) {
      acc = g;
      outer_first = false;
    } else {
      mul_pow(acc, x, prev_i - i);
      acc += g;
    }
    prev_i = i;
  }
  mul_pow(acc, x, prev_i);
  return acc;
}

Nat eval(const Polynomial& p, EvalPoint at) {
  return p.eval(Nat(static_cast<unsigned long>(at.x)), Nat(static_cast<unsigned long>(at.y)));
}

std::string to_canonical_string(const Polynomial& p) {
  std::vector<std::pair<Polynomial::Exponents, Nat>> terms(p.terms().begin(), p.terms().end());
  std::sort(terms.begin(), terms.end(), [](const auto& lhs, const auto& rhs) {
    unsigned lt = lhs.first.first + lhs.first.second;
    unsigned rt = rhs.first.first + rhs.first.second;
    if (lt != rt) return lt > rt;
    return lhs.first.first > rhs.first.first;
  });

  std::string out;
  for (const auto& [exps, coeff] : terms) {
    if (!out.empty()) out += " + ";
    bool need_star = false;
    if (coeff != 1) {
      out += coeff.get_str();
      need_star = true;
    }
    auto factor = [&](char name, unsigned e) {
      if (e == 0) return;
      if (need_star) out += '*';
      out += name;
      if (e >= 2) out += '^' + std::to_string(e);
      need_star = true;
    };
    factor('x', exps.first);
    factor('y', exps.second);
  }
  return out;
}

Polynomial specialize(const Polynomial& p, Var variable, const Nat& value) {
  if (value < 1) throw std::invalid_argument("substituted value must be positive");
  Polynomial::TermMap out;
  for (const auto& [exps, coeff] : p.terms()) {
    Nat c = coeff;
    Polynomial::Exponents key = exps;
    if (variable == Var::X) {
      mul_pow(c, value, exps.first);
      key.first = 0;
    } else {
      mul_pow(c, value, exps.second);
      key.second = 0;
    }
    if (key.first == 0 && key.second == 0)
      throw ConstantTermError("substitution produces a constant term");
    out[key] += c;
  }
  return Polynomial::from_terms(std::move(out));
}

std::vector<ValueWitness> points_upto(const Polynomial& p, const Nat& cap,
                                      const Limits& limits) {
  if (cap < 1) throw std::invalid_argument("cap must be >= 1");
  std::vector<ValueWitness> out;
  std::uint64_t probes = 0;
  auto probe = [&] {
    if (++probes > limits.max_points)
      throw ResourceLimitError("value enumeration exceeded the point guard");
  };

  Nat xv = 1;
  for (std::uint64_t x = 1;; ++x, ++xv) {
    if (!p.depends_on_x() && x > 1) break;
    probe();
    Nat row_min = p.eval(xv, 1);
    if (row_min > cap) break;  // rows only grow from here when f depends on x

    if (!p.depends_on_y()) {
      out.push_back({{x, 1}, row_min});
      continue;
    }
    out.push_back({{x, 1}, row_min});
    Nat yv = 2;
    for (std::uint64_t y = 2;; ++y, ++yv) {
      probe();
      Nat v = p.eval(xv, yv);
      if (v > cap) break;
      out.push_back({{x, y}, v});
    }
  }
  return out;
}

std::vector<ValueWitness> values_upto(const Polynomial& p, const Nat& cap,
                                      const Limits& limits) {
  std::map<Nat, EvalPoint> first_witness;
  for (const ValueWitness& w : points_upto(p, cap, limits)) {
    first_witness.emplace(w.value, w.point);  // lex scan order: first wins
  }
  std::vector<ValueWitness> out;
  out.reserve(first_witness.size());
  for (auto& [value, point] : first_witness) out.push_back({point, value});
  return out;
}

Nat shift_quotient(const Polynomial& p, const Nat& x, const Nat& y, const Nat& a) {
  if (x < 1 || y < 1 || a < 1) throw std::invalid_argument("arguments must be positive");
  Nat num = p.eval(x, y + a) - p.eval(x, y);
  Nat q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), a.get_mpz_t());
  if (r != 0)
    throw InternalError("shift difference not divisible by the shift");
  return q;
}

}  // namespace primeveil
