#include "lpcert/gegenbauer.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>

namespace lpcert {

namespace {

void require_dim(int dim) {
  if (dim < 3) throw std::domain_error("dimension must be >= 3, got " + std::to_string(dim));
}

}  // namespace

GegenbauerBasis::GegenbauerBasis(int dim, int max_degree) : dim_(dim) {
  require_dim(dim);
  if (max_degree < 0) throw std::domain_error("degree must be >= 0");
  const RationalPoly t = RationalPoly::identity();
  polys_.reserve(static_cast<std::size_t>(max_degree) + 1);
  polys_.push_back(RationalPoly::constant(1));
  if (max_degree >= 1) polys_.push_back(t);
  for (int i = 2; i <= max_degree; ++i) {
    const Rational a(2 * i + dim - 4, i + dim - 3);
    const Rational b(i - 1, i + dim - 3);
    polys_.push_back(t * polys_[i - 1] * a - polys_[i - 2] * b);
  }
}

const GegenbauerBasis& gegenbauer_basis(int dim, int max_degree) {
  require_dim(dim);
  static std::mutex mu;
  // Older, smaller bases stay alive so references handed out remain valid.
  static std::map<int, std::vector<std::unique_ptr<GegenbauerBasis>>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[dim];
  if (slot.empty() || slot.back()->max_degree() < max_degree) {
    const int grow = slot.empty() ? kCachedGegenbauerDegree : 2 * slot.back()->max_degree();
    slot.push_back(std::make_unique<GegenbauerBasis>(dim, std::max(max_degree, grow)));
  }
  return *slot.back();
}

RationalPoly gegenbauer_poly(int dim, int i) {
  if (i < 0) throw std::domain_error("degree must be >= 0, got " + std::to_string(i));
  return gegenbauer_basis(dim, i)[i];
}

Rational weight_moment(int dim, int k) {
  require_dim(dim);
  if (k < 0) throw std::domain_error("moment order must be >= 0");
  if (k % 2 != 0) return Rational(0);
  Rational mu(1);
  for (int m = 1; 2 * m <= k; ++m) mu *= Rational(2 * m - 1, dim + 2 * m - 2);
  return mu;
}

Rational weight_average(const RationalPoly& p, int dim) {
  Rational acc(0);
  const auto& c = p.coeffs();
  for (std::size_t k = 0; k < c.size(); k += 2) acc += c[k] * weight_moment(dim, static_cast<int>(k));
  return acc;
}

Rational orthogonality_residual(int dim, int i, int j) {
  return weight_average(gegenbauer_poly(dim, i) * gegenbauer_poly(dim, j), dim);
}

}  // namespace lpcert
