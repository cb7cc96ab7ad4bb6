#include "spp/exactalg/monomial.hpp"

#include <algorithm>

namespace spp::exactalg {

Monomial::Monomial(std::initializer_list<Entry> entries) {
  for (const auto& [v, e] : entries) *this = *this * of(v, e);
}

Monomial Monomial::of(Var v, int exponent) {
  Monomial m;
  if (exponent != 0) m.entries_.emplace_back(v, exponent);
  return m;
}

int Monomial::exponent(Var v) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), v,
                             [](const Entry& e, Var key) { return e.first < key; });
  return (it != entries_.end() && it->first == v) ? it->second : 0;
}

int Monomial::degree() const {
  int d = 0;
  for (const auto& e : entries_) d += e.second;
  return d;
}

bool Monomial::is_polynomial() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Entry& e) { return e.second > 0; });
}

Monomial Monomial::inverse() const {
  Monomial r = *this;
  for (auto& e : r.entries_) e.second = -e.second;
  return r;
}

Monomial Monomial::pow(int k) const {
  if (k == 0) return {};
  Monomial r = *this;
  for (auto& e : r.entries_) e.second *= k;
  return r;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r;
  r.entries_.reserve(a.entries_.size() + b.entries_.size());
  auto ia = a.entries_.begin();
  auto ib = b.entries_.begin();
  while (ia != a.entries_.end() && ib != b.entries_.end()) {
    if (ia->first < ib->first) {
      r.entries_.push_back(*ia++);
    } else if (ib->first < ia->first) {
      r.entries_.push_back(*ib++);
    } else {
      int e = ia->second + ib->second;
      if (e != 0) r.entries_.emplace_back(ia->first, e);
      ++ia;
      ++ib;
    }
  }
  r.entries_.insert(r.entries_.end(), ia, a.entries_.end());
  r.entries_.insert(r.entries_.end(), ib, b.entries_.end());
  return r;
}

Monomial Monomial::min_exponents(const Monomial& a, const Monomial& b) {
  Monomial r;
  auto ia = a.entries_.begin();
  auto ib = b.entries_.begin();
  auto keep = [&r](Var v, int e) {
    if (e != 0) r.entries_.emplace_back(v, e);
  };
  while (ia != a.entries_.end() || ib != b.entries_.end()) {
    if (ib == b.entries_.end() || (ia != a.entries_.end() && ia->first < ib->first)) {
      keep(ia->first, std::min(ia->second, 0));
      ++ia;
    } else if (ia == a.entries_.end() || ib->first < ia->first) {
      keep(ib->first, std::min(ib->second, 0));
      ++ib;
    } else {
      keep(ia->first, std::min(ia->second, ib->second));
      ++ia;
      ++ib;
    }
  }
  return r;
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
  int da = a.degree();
  int db = b.degree();
  if (da != db) return da < db;
  auto ea = a.entries();
  auto eb = b.entries();
  auto ia = ea.begin();
  auto ib = eb.begin();
  while (ia != ea.end() || ib != eb.end()) {
    Var v = (ib == eb.end() || (ia != ea.end() && ia->first < ib->first)) ? ia->first : ib->first;
    int xa = (ia != ea.end() && ia->first == v) ? (ia++)->second : 0;
    int xb = (ib != eb.end() && ib->first == v) ? (ib++)->second : 0;
    if (xa != xb) return xa > xb;
  }
  return false;
}

}  // namespace spp::exactalg
