#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "g4uip/formula.hpp"


namespace g4uip {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::string message, std::size_t position)
      : std::runtime_error(message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

enum class Format { Text, Latex, Json };

// Grammar (loosest to tightest): `->` (right assoc), `|`, `&` (left assoc),
// then prefix `~`, `[]`, `<>`. Atoms are `false`, `true`, identifiers
// `[a-z][a-zA-Z0-9_]*` and parenthesised formulas.
Formula parse_formula(std::string_view text);

std::string render(Formula phi, Format fmt = Format::Text);
std::string to_text(Formula phi);
std::string to_latex(Formula phi);

nlohmann::json to_json(Formula phi);
Formula formula_from_json(const nlohmann::json& j);

}  // namespace g4uip
