// Copyright (c) 2026 The diffent authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

namespace diffent {

/// A compiled arithmetic expression in one variable x. The grammar is
/// deliberately minimal and total: numbers, x, pi, parentheses, + - * / ^
/// (right associative), unary minus, and exp, log, sqrt, abs.
/// Parse errors throw std::invalid_argument with the offending position.
class Expression {
 public:
  static Expression parse(const std::string& source);

  double operator()(double x) const;

  const std::string& source() const { return source_; }

 private:
  enum class Op : unsigned char {
    push_const,
    push_x,
    add,
    sub,
    mul,
    div,
    pow,
    neg,
    call_exp,
    call_log,
    call_sqrt,
    call_abs,
  };

  std::string source_;
  std::vector<Op> code_;
  std::vector<double> constants_;

  friend class ExpressionParser;
};

}  // namespace diffent
