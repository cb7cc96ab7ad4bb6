#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace spp::exactalg {

// A variable of the polynomial ring. Every computation shares one registry:
// the specialisation variable q, the box variables x1..x255 and the auxiliary
// variables t1..t255. Ids are ordered q < x1 < x2 < ... < t1 < t2 < ..., which
// is also the order factors are printed in.
class Var {
 public:
  static constexpr int kMaxIndex = 255;

  enum class Kind : std::uint8_t { q, x, t };

  static constexpr Var q() { return Var(0); }
  static Var x(int index);
  static Var t(int index);

  // Parses "q", "x<k>" or "t<k>"; nullopt for anything else.
  static std::optional<Var> from_name(std::string_view name);

  Kind kind() const;
  // 1-based index for x and t, 0 for q.
  int index() const;
  std::string name() const;
  std::uint16_t id() const { return id_; }

  friend constexpr auto operator<=>(Var, Var) = default;

 private:
  constexpr explicit Var(std::uint16_t id) : id_(id) {}

  static constexpr std::uint16_t kTBase = 256;

  std::uint16_t id_ = 0;
};

}  // namespace spp::exactalg
