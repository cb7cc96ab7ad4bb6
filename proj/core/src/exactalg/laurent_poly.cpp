#include "spp/exactalg/laurent_poly.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>
#include <vector>

#include "spp/exactalg/errors.hpp"

namespace spp::exactalg {

LaurentPoly::LaurentPoly(std::int64_t c) {
  if (c != 0) terms_.emplace(Monomial{}, Integer(c));
}

LaurentPoly LaurentPoly::constant(Integer c) { return term(Monomial{}, std::move(c)); }

LaurentPoly LaurentPoly::term(Monomial m, Integer c) {
  LaurentPoly p;
  if (c != 0) p.terms_.emplace(std::move(m), std::move(c));
  return p;
}

Integer LaurentPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Integer(0) : it->second;
}

int LaurentPoly::min_exponent(Var v) const {
  int r = terms_.begin()->first.exponent(v);
  for (const auto& [m, c] : terms_) r = std::min(r, m.exponent(v));
  return r;
}

int LaurentPoly::max_exponent(Var v) const {
  int r = terms_.begin()->first.exponent(v);
  for (const auto& [m, c] : terms_) r = std::max(r, m.exponent(v));
  return r;
}

void LaurentPoly::add_term(const Monomial& m, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  *this = *this * o;
  return *this;
}

LaurentPoly& LaurentPoly::mul_term(const Monomial& m, const Integer& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  // Multiplying by a monomial is order-preserving, so the map can be rebuilt
  // in sequence with end hints.
  TermMap out;
  for (const auto& [mono, coeff] : terms_) out.emplace_hint(out.end(), mono * m, coeff * c);
  terms_ = std::move(out);
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.size() == 1) return LaurentPoly(b).mul_term(a.terms_.begin()->first, a.terms_.begin()->second);
  if (b.size() == 1) return LaurentPoly(a).mul_term(b.terms_.begin()->first, b.terms_.begin()->second);
  LaurentPoly r;
  const LaurentPoly& outer = a.size() <= b.size() ? a : b;
  const LaurentPoly& inner = a.size() <= b.size() ? b : a;
  for (const auto& [ma, ca] : outer.terms_) {
    for (const auto& [mb, cb] : inner.terms_) {
      Monomial m = ma * mb;
      auto it = r.terms_.lower_bound(m);
      if (it != r.terms_.end() && it->first == m) {
        it->second += ca * cb;
      } else {
        r.terms_.emplace_hint(it, std::move(m), ca * cb);
      }
    }
  }
  std::erase_if(r.terms_, [](const auto& kv) { return kv.second == 0; });
  return r;
}

LaurentPoly LaurentPoly::pow(unsigned k) const {
  LaurentPoly result(1);
  LaurentPoly base = *this;
  while (k != 0) {
    if (k & 1U) result *= base;
    k >>= 1U;
    if (k != 0) base *= base;
  }
  return result;
}

Integer LaurentPoly::coefficient_sum() const {
  Integer s = 0;
  for (const auto& [m, c] : terms_) s += c;
  return s;
}

LaurentPoly poly_arith(const LaurentPoly& a, const LaurentPoly& b, ArithOp op) {
  switch (op) {
    case ArithOp::add:
      return a + b;
    case ArithOp::sub:
      return a - b;
    case ArithOp::mul:
      return a * b;
  }
  return {};
}

// ---------------------------------------------------------------------------
// Canonical text format

std::string to_string(const Monomial& m) {
  std::string out;
  for (const auto& [v, e] : m.entries()) {
    if (!out.empty()) out += '*';
    out += v.name();
    if (e != 1) out += '^' + std::to_string(e);
  }
  return out.empty() ? "1" : out;
}

std::string to_string(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    bool negative = c < 0;
    Integer magnitude = negative ? Integer(-c) : c;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (m.is_one()) {
      out += magnitude.str();
    } else {
      if (magnitude != 1) out += magnitude.str() + '*';
      out += to_string(m);
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << to_string(p); }
std::ostream& operator<<(std::ostream& os, const Monomial& m) { return os << to_string(m); }

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  LaurentPoly parse() {
    skip_space();
    if (at_end()) fail("empty input");
    LaurentPoly result;
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = next() == '-' ? -1 : 1;
        skip_space();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      auto [m, c] = parse_term();
      result.add_term(m, sign * c);
      skip_space();
    }
    return result;
  }

 private:
  std::pair<Monomial, Integer> parse_term() {
    Monomial m;
    Integer c = 1;
    while (true) {
      skip_space();
      if (at_end()) fail("expected a factor");
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        c *= Integer(parse_digits());
      } else {
        std::size_t start = pos_;
        while (!at_end() && std::isalnum(static_cast<unsigned char>(peek()))) ++pos_;
        auto v = Var::from_name(text_.substr(start, pos_ - start));
        if (!v) fail("unknown variable '" + std::string(text_.substr(start, pos_ - start)) + "'");
        int e = 1;
        skip_space();
        if (!at_end() && peek() == '^') {
          ++pos_;
          skip_space();
          int sign = 1;
          if (!at_end() && (peek() == '-' || peek() == '+')) sign = next() == '-' ? -1 : 1;
          std::string digits = parse_digits();
          if (digits.size() > 9) fail("exponent too large");
          e = sign * std::stoi(digits);
        }
        m = m * Monomial::of(*v, e);
      }
      skip_space();
      if (at_end() || peek() != '*') break;
      ++pos_;
    }
    return {m, c};
  }

  std::string parse_digits() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(text_.substr(start, pos_ - start));
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  char next() { return text_[pos_++]; }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("polynomial parse error at offset " + std::to_string(pos_) + ": " + what);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentPoly parse_poly(std::string_view text) { return PolyParser(text).parse(); }

}  // namespace spp::exactalg
