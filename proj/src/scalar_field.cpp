#include "singlap/scalar_field.hpp"

#include "singlap/errors.hpp"

namespace singlap {

ScalarField ScalarField::closed_form(std::function<double(Vec2)> value,
                                     std::function<Vec2(Vec2)> gradient,
                                     std::function<Sym2(Vec2)> hessian) {
  if (!value || !gradient || !hessian)
    throw ArgumentError("ScalarField: all three evaluators must be set");
  ScalarField f;
  f.value_ = std::move(value);
  f.gradient_ = std::move(gradient);
  f.hessian_ = std::move(hessian);
  f.provenance_ = FieldProvenance::kClosedForm;
  return f;
}

ScalarField ScalarField::finite_difference(std::function<double(Vec2)> value, double step) {
  if (!value) throw ArgumentError("ScalarField: value evaluator must be set");
  if (!(step > 0.0)) throw ArgumentError("ScalarField: step must be > 0");
  ScalarField f;
  auto v = std::move(value);
  f.value_ = v;
  f.gradient_ = [v, step](Vec2 p) -> Vec2 {
    return {(v({p.x + step, p.y}) - v({p.x - step, p.y})) / (2.0 * step),
            (v({p.x, p.y + step}) - v({p.x, p.y - step})) / (2.0 * step)};
  };
  f.hessian_ = [v, step](Vec2 p) -> Sym2 {
    const double f0 = v(p);
    Sym2 h;
    h.xx = (v({p.x + step, p.y}) - 2.0 * f0 + v({p.x - step, p.y})) / (step * step);
    h.yy = (v({p.x, p.y + step}) - 2.0 * f0 + v({p.x, p.y - step})) / (step * step);
    h.xy = (v({p.x + step, p.y + step}) - v({p.x + step, p.y - step}) -
            v({p.x - step, p.y + step}) + v({p.x - step, p.y - step})) /
           (4.0 * step * step);
    return h;
  };
  f.provenance_ = FieldProvenance::kFiniteDifference;
  return f;
}

ScalarField ScalarField::constant(double c) {
  return closed_form([c](Vec2) { return c; }, [](Vec2) -> Vec2 { return {0.0, 0.0}; },
                     [](Vec2) -> Sym2 { return {}; });
}

}  // namespace singlap
