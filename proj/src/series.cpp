#include "fishburn/series.hpp"

#include <stdexcept>
#include <vector>

namespace fishburn::series {

namespace {

constexpr int kMaxOrder = 60;  // keeps exponent sums far from any overflow

void check_order(int order) {
  if (order < 0 || order > kMaxOrder)
    throw std::invalid_argument("series order out of range");
}

}  // namespace

Series::Series(int order) : order_(order) { check_order(order); }

Series Series::constant(int order, Int c) {
  Series s(order);
  s.insert_term(Exponents{0, 0, 0, 0, 0}, c);
  return s;
}

Series Series::monomial(int order, const Exponents& e, Int c) {
  Series s(order);
  for (int i = 0; i < kVarCount; ++i)
    if (e[i] < 0) throw std::invalid_argument("negative exponent");
  s.insert_term(e, c);
  return s;
}

Series Series::variable(int order, Var v) {
  Exponents e{0, 0, 0, 0, 0};
  e[static_cast<int>(v)] = 1;
  return monomial(order, e, 1);
}

Int Series::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Int(0) : it->second;
}

void Series::insert_term(const Exponents& e, const Int& c) {
  if (c == 0) return;
  for (int i = 0; i < kVarCount; ++i)
    if (e[i] > order_) return;  // truncated away
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void Series::require_same_order(const Series& o, const char* op) const {
  if (order_ != o.order_)
    throw std::invalid_argument(std::string("order mismatch in ") + op);
}

Series Series::operator-() const {
  Series r(order_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

Series& Series::operator+=(const Series& o) {
  require_same_order(o, "add");
  for (const auto& [e, c] : o.terms_) insert_term(e, c);
  return *this;
}

Series& Series::operator-=(const Series& o) {
  require_same_order(o, "sub");
  for (const auto& [e, c] : o.terms_) insert_term(e, -c);
  return *this;
}

Series operator*(const Series& a, const Series& b) {
  a.require_same_order(b, "mul");
  Series r(a.order_);
  const int order = a.order_;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Exponents e;
      bool keep = true;
      for (int i = 0; i < kVarCount; ++i) {
        e[i] = ea[i] + eb[i];
        if (e[i] > order) {
          keep = false;
          break;
        }
      }
      if (!keep) continue;
      auto [it, inserted] = r.terms_.emplace(e, Int(0));
      it->second += ca * cb;
    }
  }
  for (auto it = r.terms_.begin(); it != r.terms_.end();)
    it = it->second == 0 ? r.terms_.erase(it) : std::next(it);
  return r;
}

Series operator*(const Int& c, const Series& a) {
  Series r(a.order_);
  if (c == 0) return r;
  for (const auto& [e, coef] : a.terms_) r.terms_.emplace(e, c * coef);
  return r;
}

Series operator+(const Series& a, const Int& c) {
  Series r = a;
  r.insert_term(Exponents{0, 0, 0, 0, 0}, c);
  return r;
}

Series operator-(const Series& a, const Int& c) { return a + Int(-c); }

Series Series::pow(int k) const {
  if (k < 0) throw std::invalid_argument("negative power");
  Series result = one(order_);
  Series base = *this;
  while (k > 0) {
    if (k & 1) result = result * base;
    base = k > 1 ? base * base : base;
    k >>= 1;
  }
  return result;
}

Series Series::inverse() const {
  // Unit check: the t-degree-0 slice must be exactly the constant 1.
  bool const_one = false;
  for (const auto& [e, c] : terms_) {
    if (e[0] != 0) continue;
    const bool is_const = e == Exponents{0, 0, 0, 0, 0};
    if (!is_const || c != 1)
      throw std::invalid_argument("inverse requires t-degree-0 part == 1");
    const_one = true;
  }
  if (!const_one)
    throw std::invalid_argument("inverse requires t-degree-0 part == 1");

  // 1/(1-g) = sum g^k; g = 1 - *this has t-adic valuation >= 1, so the
  // sum below is exhaustive at joint truncation order_.
  Series g = one(order_) - *this;
  Series result = one(order_);
  Series power = one(order_);
  for (int k = 1; k <= order_; ++k) {
    power = power * g;
    if (power.is_zero()) break;
    result += power;
  }
  return result;
}

Series Series::substitute(Var var, const Series& s) const {
  require_same_order(s, "substitute");
  const int vi = static_cast<int>(var);

  // Guard: t-degree-0 slice of s empty, or one monomial of degree <= 1
  // in the substituted variable.
  int t0_terms = 0;
  for (const auto& [e, c] : s.terms_) {
    if (e[0] != 0) continue;
    ++t0_terms;
    if (t0_terms > 1 || e[vi] > 1)
      throw std::invalid_argument("unsupported substitution shape");
  }

  int max_k = 0;
  for (const auto& [e, c] : terms_) max_k = std::max(max_k, e[vi]);
  std::vector<Series> powers;
  powers.reserve(max_k + 1);
  powers.push_back(one(order_));
  for (int k = 1; k <= max_k; ++k) powers.push_back(powers.back() * s);

  Series result(order_);
  for (const auto& [e, c] : terms_) {
    Exponents rest = e;
    const int k = rest[vi];
    rest[vi] = 0;
    result += monomial(order_, rest, c) * powers[k];
  }
  return result;
}

Series Series::partial_z_at_zero() const {
  Series r(order_);
  const int zi = static_cast<int>(Var::z);
  for (const auto& [e, c] : terms_) {
    if (e[zi] != 1) continue;
    Exponents out = e;
    out[zi] = 0;
    r.terms_.emplace(out, c);
  }
  return r;
}

Series Series::shifted_down_t() const {
  Series r(order_);
  for (const auto& [e, c] : terms_) {
    if (e[0] < 1) throw std::invalid_argument("series not divisible by t");
    Exponents out = e;
    --out[0];
    r.terms_.emplace(out, c);
  }
  return r;
}

Series Series::truncated_to(int order) const {
  if (order > order_)
    throw std::invalid_argument("cannot extend truncation order");
  Series r(order);
  for (const auto& [e, c] : terms_) r.insert_term(e, c);
  return r;
}

std::optional<Exponents> Series::first_difference(const Series& o) const {
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() && b != o.terms_.end()) {
    if (a->first < b->first) return a->first;
    if (b->first < a->first) return b->first;
    if (a->second != b->second) return a->first;
    ++a;
    ++b;
  }
  if (a != terms_.end()) return a->first;
  if (b != o.terms_.end()) return b->first;
  return std::nullopt;
}

}  // namespace fishburn::series
