#pragma once

#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dharm {

/// Real arithmetic expression over named variables: numbers, + - * / ^
/// (right-associative), unary minus, parentheses, the constant pi and the
/// functions sqrt, abs, exp, log, sin, cos.
class Expression {
 public:
  /// Throws std::invalid_argument (with the offending position) on syntax
  /// errors and unknown names.
  static Expression parse(std::string_view text, std::vector<std::string> variables = {});

  /// `values` follows the order of the variable list given to parse().
  double operator()(std::span<const double> values) const;
  double operator()(std::initializer_list<double> values) const {
    return (*this)(std::span<const double>(values.begin(), values.size()));
  }

  const std::string& text() const { return text_; }
  const std::vector<std::string>& variables() const { return variables_; }

  struct Node;

 private:
  std::string text_;
  std::vector<std::string> variables_;
  std::shared_ptr<const Node> root_;
};

}  // namespace dharm
