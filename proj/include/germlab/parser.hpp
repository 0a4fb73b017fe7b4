#pragma once

#include "germlab/polynomial.hpp"

#include <string>
#include <string_view>

namespace germlab {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

struct ParseOptions {
  /// Square-free d (not 0 or 1) enables the symbol `r` = sqrt(d); 0 disables it.
  long radicand = 0;
  /// Extra names accepted as variables (appended after the form variables).
  std::vector<std::string> parameters;
};

/// Parses a form in {x, y[, z]} or {z1, z2[, z3]}. The variable list is
/// inferred: two variables unless the third one occurs.
Polynomial parse_form(std::string_view text, const ParseOptions& options = {});

/// Parses over a fixed variable list.
Polynomial parse_polynomial(std::string_view text, const Variables& variables, const ParseOptions& options = {});

/// Parses "Q" or "Q(d)"; d may be negative.
long parse_field(std::string_view text);

}  // namespace germlab
