#include "lefsig/homology.hpp"

#include "lefsig/errors.hpp"

namespace lefsig {

GenusContext::GenusContext(int genus) : genus(genus) {
  if (genus < 1) {
    throw ValidationError("genus must be at least 1, got " + std::to_string(genus));
  }
}

HomologyClass::HomologyClass(GenusContext ctx, std::vector<Integer> coeffs)
    : ctx_(ctx), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != ctx_.dim()) {
    throw ValidationError("homology class has " + std::to_string(coeffs_.size()) +
                          " coefficients, genus " + std::to_string(ctx_.genus) +
                          " needs " + std::to_string(ctx_.dim()));
  }
}

HomologyClass HomologyClass::zero(GenusContext ctx) {
  return HomologyClass(ctx, std::vector<Integer>(ctx.dim(), Integer(0)));
}

HomologyClass HomologyClass::basis(GenusContext ctx, std::size_t index) {
  if (index >= ctx.dim()) {
    throw ValidationError("basis index out of range");
  }
  std::vector<Integer> c(ctx.dim(), Integer(0));
  c[index] = 1;
  return HomologyClass(ctx, std::move(c));
}

bool HomologyClass::is_zero() const {
  for (const Integer& x : coeffs_) {
    if (x != 0) return false;
  }
  return true;
}

HomologyClass HomologyClass::operator-() const {
  std::vector<Integer> c(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] = -coeffs_[i];
  return HomologyClass(ctx_, std::move(c));
}

static void require_same_ctx(const HomologyClass& x, const HomologyClass& y) {
  if (!(x.ctx() == y.ctx())) {
    throw ValidationError("genus context mismatch between homology classes");
  }
}

HomologyClass HomologyClass::operator+(const HomologyClass& rhs) const {
  require_same_ctx(*this, rhs);
  std::vector<Integer> c(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] = coeffs_[i] + rhs.coeffs_[i];
  return HomologyClass(ctx_, std::move(c));
}

HomologyClass HomologyClass::operator-(const HomologyClass& rhs) const {
  require_same_ctx(*this, rhs);
  std::vector<Integer> c(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] = coeffs_[i] - rhs.coeffs_[i];
  return HomologyClass(ctx_, std::move(c));
}

Integer pairing(const HomologyClass& x, const HomologyClass& y) {
  require_same_ctx(x, y);
  // pairing(a_i, b_i) = -1: per handle the contribution is x_b y_a - x_a y_b.
  Integer acc = 0;
  const std::size_t dim = x.ctx().dim();
  for (std::size_t i = 0; i < dim; i += 2) {
    acc += x[i + 1] * y[i] - x[i] * y[i + 1];
  }
  return acc;
}

bool is_primitive(const HomologyClass& x) {
  Integer g = 0;
  for (const Integer& c : x.coeffs()) {
    g = gcd(g, c);
    if (g == 1) return true;
  }
  return g == 1;
}

}  // namespace lefsig
