// Copyright (c) 2026 The diffent authors
// SPDX-License-Identifier: Apache-2.0

#include "diffent/expression.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace diffent {

class ExpressionParser {
 public:
  explicit ExpressionParser(const std::string& src) : src_(src) {}

  Expression run() {
    Expression e;
    e.source_ = src_;
    out_ = &e;
    pos_ = 0;
    parse_sum();
    skip_ws();
    if (pos_ != src_.size()) fail("unexpected trailing input");
    return e;
  }

 private:
  using Op = Expression::Op;

  [[noreturn]] void fail(const std::string& msg) const {
    throw std::invalid_argument("expression error at position " + std::to_string(pos_) +
                                " in \"" + src_ + "\": " + msg);
  }

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < src_.size() ? src_[pos_] : '\0';
  }

  void emit(Op op) { out_->code_.push_back(op); }
  void emit_const(double v) {
    out_->code_.push_back(Op::push_const);
    out_->constants_.push_back(v);
  }

  void parse_sum() {
    parse_product();
    for (;;) {
      if (eat('+')) {
        parse_product();
        emit(Op::add);
      } else if (eat('-')) {
        parse_product();
        emit(Op::sub);
      } else {
        return;
      }
    }
  }

  void parse_product() {
    parse_unary();
    for (;;) {
      if (eat('*')) {
        parse_unary();
        emit(Op::mul);
      } else if (eat('/')) {
        parse_unary();
        emit(Op::div);
      } else {
        return;
      }
    }
  }

  void parse_unary() {
    if (eat('-')) {
      parse_unary();
      emit(Op::neg);
      return;
    }
    (void)eat('+');
    parse_power();
  }

  void parse_power() {
    parse_atom();
    if (eat('^')) {
      parse_unary();  // right associative, allows 2^-3
      emit(Op::pow);
    }
  }

  void parse_atom() {
    skip_ws();
    if (pos_ >= src_.size()) fail("expected a value");
    const char c = src_[pos_];
    if (c == '(') {
      ++pos_;
      parse_sum();
      if (!eat(')')) fail("expected ')'");
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      const char* begin = src_.c_str() + pos_;
      char* end = nullptr;
      const double v = std::strtod(begin, &end);
      if (end == begin) fail("malformed number");
      pos_ += static_cast<std::size_t>(end - begin);
      emit_const(v);
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < src_.size() && std::isalnum(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      const std::string name = src_.substr(start, pos_ - start);
      if (name == "x") {
        emit(Op::push_x);
        return;
      }
      if (name == "pi") {
        emit_const(3.14159265358979323846);
        return;
      }
      if (name == "e") {
        emit_const(2.71828182845904523536);
        return;
      }
      Op call;
      if (name == "exp") call = Op::call_exp;
      else if (name == "log") call = Op::call_log;
      else if (name == "sqrt") call = Op::call_sqrt;
      else if (name == "abs") call = Op::call_abs;
      else fail("unknown identifier '" + name + "'");
      if (!eat('(')) fail("expected '(' after function name");
      parse_sum();
      if (!eat(')')) fail("expected ')'");
      emit(call);
      return;
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  const std::string& src_;
  std::size_t pos_ = 0;
  Expression* out_ = nullptr;
};

Expression Expression::parse(const std::string& source) {
  return ExpressionParser(source).run();
}

double Expression::operator()(double x) const {
  double stack[64];
  int top = -1;
  std::size_t const_idx = 0;
  for (Op op : code_) {
    switch (op) {
      case Op::push_const:
        stack[++top] = constants_[const_idx++];
        break;
      case Op::push_x:
        stack[++top] = x;
        break;
      case Op::add:
        --top;
        stack[top] += stack[top + 1];
        break;
      case Op::sub:
        --top;
        stack[top] -= stack[top + 1];
        break;
      case Op::mul:
        --top;
        stack[top] *= stack[top + 1];
        break;
      case Op::div:
        --top;
        stack[top] /= stack[top + 1];
        break;
      case Op::pow:
        --top;
        stack[top] = std::pow(stack[top], stack[top + 1]);
        break;
      case Op::neg:
        stack[top] = -stack[top];
        break;
      case Op::call_exp:
        stack[top] = std::exp(stack[top]);
        break;
      case Op::call_log:
        stack[top] = std::log(stack[top]);
        break;
      case Op::call_sqrt:
        stack[top] = std::sqrt(stack[top]);
        break;
      case Op::call_abs:
        stack[top] = std::fabs(stack[top]);
        break;
    }
  }
  return stack[0];
}

}  // namespace diffent
