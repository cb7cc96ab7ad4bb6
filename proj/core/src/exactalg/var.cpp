#include "spp/exactalg/var.hpp"

#include <charconv>
#include <stdexcept>

namespace spp::exactalg {

namespace {

void check_index(int index) {
  if (index < 1 || index > Var::kMaxIndex) {
    throw std::out_of_range("variable index " + std::to_string(index) +
                            " outside 1.." + std::to_string(Var::kMaxIndex));
  }
}

}  // namespace

Var Var::x(int index) {
  check_index(index);
  return Var(static_cast<std::uint16_t>(index));
}

Var Var::t(int index) {
  check_index(index);
  return Var(static_cast<std::uint16_t>(kTBase + index));
}

std::optional<Var> Var::from_name(std::string_view name) {
  if (name == "q") return q();
  if (name.size() < 2 || (name[0] != 'x' && name[0] != 't')) return std::nullopt;
  int index = 0;
  auto digits = name.substr(1);
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), index);
  if (ec != std::errc{} || ptr != digits.data() + digits.size()) return std::nullopt;
  if (digits[0] == '0' || index < 1 || index > kMaxIndex) return std::nullopt;
  return name[0] == 'x' ? x(index) : t(index);
}

Var::Kind Var::kind() const {
  if (id_ == 0) return Kind::q;
  return id_ < kTBase ? Kind::x : Kind::t;
}

int Var::index() const {
  switch (kind()) {
    case Kind::q:
      return 0;
    case Kind::x:
      return id_;
    case Kind::t:
      return id_ - kTBase;
  }
  return 0;
}

std::string Var::name() const {
  switch (kind()) {
    case Kind::q:
      return "q";
    case Kind::x:
      return "x" + std::to_string(index());
    case Kind::t:
      return "t" + std::to_string(index());
  }
  return {};
}

}  // namespace spp::exactalg
