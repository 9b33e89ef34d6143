#include "dharm/expression.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <stdexcept>

namespace dharm {

struct Expression::Node {
  enum class Kind { number, variable, negate, add, subtract, multiply, divide, power, function };
  enum class Func { sqrt, abs, exp, log, sin, cos };

  Kind kind = Kind::number;
  double value = 0.0;
  std::size_t variable = 0;
  Func func = Func::sqrt;
  std::shared_ptr<const Node> lhs;
  std::shared_ptr<const Node> rhs;

  double eval(std::span<const double> vars) const {
    switch (kind) {
      case Kind::number:
        return value;
      case Kind::variable:
        return vars[variable];
      case Kind::negate:
        return -lhs->eval(vars);
      case Kind::add:
        return lhs->eval(vars) + rhs->eval(vars);
      case Kind::subtract:
        return lhs->eval(vars) - rhs->eval(vars);
      case Kind::multiply:
        return lhs->eval(vars) * rhs->eval(vars);
      case Kind::divide:
        return lhs->eval(vars) / rhs->eval(vars);
      case Kind::power: {
        const double e = rhs->eval(vars);
        const double b = lhs->eval(vars);
        // Small integer exponents stay exact for negative bases.
        if (e == std::round(e) && std::abs(e) <= 64) {
          double out = 1.0;
          for (int i = 0; i < static_cast<int>(std::abs(e)); ++i) out *= b;
          return e < 0 ? 1.0 / out : out;
        }
        return std::pow(b, e);
      }
      case Kind::function: {
        const double x = lhs->eval(vars);
        switch (func) {
          case Func::sqrt:
            return std::sqrt(x);
          case Func::abs:
            return std::abs(x);
          case Func::exp:
            return std::exp(x);
          case Func::log:
            return std::log(x);
          case Func::sin:
            return std::sin(x);
          case Func::cos:
            return std::cos(x);
        }
      }
    }
    return 0.0;
  }
};

namespace {

using Node = Expression::Node;
using NodePtr = std::shared_ptr<const Node>;

class Parser {
 public:
  Parser(std::string_view text, const std::vector<std::string>& vars) : text_(text), vars_(vars) {}

  NodePtr parse() {
    NodePtr out = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character");
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("expression \"" + std::string(text_) + "\": " + what + " at position " +
                                std::to_string(pos_));
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  static NodePtr binary(Node::Kind kind, NodePtr a, NodePtr b) {
    auto n = std::make_shared<Node>();
    n->kind = kind;
    n->lhs = std::move(a);
    n->rhs = std::move(b);
    return n;
  }

  NodePtr expr() {
    NodePtr lhs = term();
    for (;;) {
      if (accept('+'))
        lhs = binary(Node::Kind::add, lhs, term());
      else if (accept('-'))
        lhs = binary(Node::Kind::subtract, lhs, term());
      else
        return lhs;
    }
  }

  NodePtr term() {
    NodePtr lhs = unary();
    for (;;) {
      if (accept('*'))
        lhs = binary(Node::Kind::multiply, lhs, unary());
      else if (accept('/'))
        lhs = binary(Node::Kind::divide, lhs, unary());
      else
        return lhs;
    }
  }

  NodePtr unary() {
    if (accept('-')) {
      auto n = std::make_shared<Node>();
      n->kind = Node::Kind::negate;
      n->lhs = unary();
      return n;
    }
    if (accept('+')) return unary();
    return power();
  }

  NodePtr power() {
    NodePtr base = primary();
    if (accept('^')) return binary(Node::Kind::power, base, unary());
    return base;
  }

  NodePtr primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    if (accept('(')) {
      NodePtr inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      const std::string rest(text_.substr(pos_));
      char* end = nullptr;
      const double v = std::strtod(rest.c_str(), &end);
      if (end == rest.c_str()) fail("malformed number");
      pos_ += static_cast<std::size_t>(end - rest.c_str());
      auto n = std::make_shared<Node>();
      n->value = v;
      return n;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
      const std::string name(text_.substr(start, pos_ - start));
      for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (vars_[i] == name) {
          auto n = std::make_shared<Node>();
          n->kind = Node::Kind::variable;
          n->variable = i;
          return n;
        }
      }
      if (name == "pi") {
        auto n = std::make_shared<Node>();
        n->value = std::numbers::pi;
        return n;
      }
      static const std::pair<const char*, Node::Func> funcs[] = {{"sqrt", Node::Func::sqrt}, {"abs", Node::Func::abs},
                                                                 {"exp", Node::Func::exp},   {"log", Node::Func::log},
                                                                 {"sin", Node::Func::sin},   {"cos", Node::Func::cos}};
      for (const auto& [fname, f] : funcs) {
        if (name == fname) {
          if (!accept('(')) fail("expected '(' after " + name);
          auto n = std::make_shared<Node>();
          n->kind = Node::Kind::function;
          n->func = f;
          n->lhs = expr();
          if (!accept(')')) fail("expected ')'");
          return n;
        }
      }
      pos_ = start;
      fail("unknown name \"" + name + "\"");
    }
    fail("unexpected character");
  }

  std::string_view text_;
  const std::vector<std::string>& vars_;
  std::size_t pos_ = 0;
};

}  // namespace

Expression Expression::parse(std::string_view text, std::vector<std::string> variables) {
  Expression e;
  e.text_ = std::string(text);
  e.variables_ = std::move(variables);
  e.root_ = Parser(e.text_, e.variables_).parse();
  return e;
}

double Expression::operator()(std::span<const double> values) const {
  if (values.size() != variables_.size())
    throw std::invalid_argument("expression \"" + text_ + "\": expected " + std::to_string(variables_.size()) + " values");
  return root_->eval(values);
}

}  // namespace dharm
