#pragma once

#include <functional>

#include "singlap/vec2.hpp"

namespace singlap {

enum class FieldProvenance { kClosedForm, kFiniteDifference };

// A scalar function on the plane with value/gradient/Hessian access. Closed
// forms are preferred; the finite-difference factory derives both derivative
// evaluators from the value alone.
class ScalarField {
public:
  static ScalarField closed_form(std::function<double(Vec2)> value,
                                 std::function<Vec2(Vec2)> gradient,
                                 std::function<Sym2(Vec2)> hessian);
  static ScalarField finite_difference(std::function<double(Vec2)> value, double step = 1e-5);
  static ScalarField constant(double c);

  double value(Vec2 p) const { return value_(p); }
  Vec2 gradient(Vec2 p) const { return gradient_(p); }
  Sym2 hessian(Vec2 p) const { return hessian_(p); }
  FieldProvenance provenance() const { return provenance_; }

private:
  ScalarField() = default;
  std::function<double(Vec2)> value_;
  std::function<Vec2(Vec2)> gradient_;
  std::function<Sym2(Vec2)> hessian_;
  FieldProvenance provenance_ = FieldProvenance::kClosedForm;
};

}  // namespace singlap
