#include "lpcert/designs.hpp"

#include <algorithm>
#include <set>

namespace lpcert {

DistanceDistribution::DistanceDistribution(std::int64_t cardinality, std::map<Rational, std::int64_t> entries,
                                           bool antipodal)
    : cardinality_(cardinality), entries_(std::move(entries)), antipodal_(antipodal) {
  if (cardinality_ < 2) throw DistributionError("cardinality must be at least 2");
  if (entries_.empty()) throw DistributionError("distribution has no inner products");
  std::int64_t total = 0;
  for (const auto& [t, count] : entries_) {
    if (t < -1 || t >= 1) throw DistributionError("inner product " + to_string(t) + " outside [-1, 1)");
    if (count < 0) throw DistributionError("negative count at t = " + to_string(t));
    total += count;
  }
  if (total != cardinality_ - 1)
    throw DistributionError("counts sum to " + std::to_string(total) + ", expected N - 1 = " +
                            std::to_string(cardinality_ - 1));
  if (antipodal_) {
    const auto minus_one = entries_.find(Rational(-1));
    if (minus_one == entries_.end() || minus_one->second != 1)
      throw DistributionError("antipodal distribution needs A_{-1} = 1");
    for (const auto& [t, count] : entries_) {
      if (t == -1) continue;
      const auto mirror = entries_.find(Rational(-t));
      if (mirror == entries_.end() || mirror->second != count)
        throw DistributionError("antipodal distribution needs A_t = A_{-t} at t = " + to_string(t));
    }
  }
}

DistanceDistribution DistanceDistribution::p48() {
  return DistanceDistribution(kP48Cardinality,
                              {{Rational(-1), 1},
                               {Rational(-1, 2), 36'848},
                               {Rational(-1, 3), 1'678'887},
                               {Rational(-1, 6), 12'608'784},
                               {Rational(0), 23'766'960},
                               {Rational(1, 6), 12'608'784},
                               {Rational(1, 3), 1'678'887},
                               {Rational(1, 2), 36'848}},
                              true);
}

Rational moment(const DistanceDistribution& d, int i, int dim) {
  if (i < 0) throw std::domain_error("moment index must be >= 0");
  const RationalPoly& p = gegenbauer_basis(dim, i)[i];
  return design_energy(d, p) + p(Rational(1));
}

QuadratureRule quadrature_from(const DistanceDistribution& d, int dim) {
  QuadratureRule q;
  q.dim = dim;
  const Rational n(d.cardinality());
  for (const auto& [t, count] : d.entries()) q.weights[t] = Rational(count) / n;
  q.weights[Rational(1)] = Rational(1) / n;

  // A rule on k nodes cannot be exact beyond degree 2k - 1.
  const int cap = 2 * static_cast<int>(q.weights.size());
  while (q.exactness < cap && moment(d, q.exactness + 1, dim) == 0) ++q.exactness;
  if (q.exactness == 0) throw QuadratureError("not a design distribution");
  return q;
}

Rational quadrature_residual(const QuadratureRule& q, const RationalPoly& p) {
  const Rational f0 = p.is_zero() ? Rational(0) : expand(p, q.dim).coeffs.front();
  return q.apply(p) - f0;
}

DistributionSolution solve_distribution(const std::vector<Rational>& inner_products, std::int64_t cardinality,
                                        int strength, bool antipodal, int dim) {
  if (strength < 0) throw DistributionError("design strength must be >= 0");
  if (cardinality < 2) throw DistributionError("cardinality must be at least 2");
  const std::set<Rational> support(inner_products.begin(), inner_products.end());
  if (support.size() != inner_products.size()) throw DistributionError("inner products must be distinct");
  for (const auto& t : support)
    if (t < -1 || t >= 1) throw DistributionError("inner product " + to_string(t) + " outside [-1, 1)");

  // Unknowns are classes of inner products sharing one count.
  std::vector<std::vector<Rational>> classes;
  if (antipodal) {
    if (!support.contains(Rational(-1))) throw DistributionError("antipodal support must contain -1");
    for (const auto& t : support) {
      if (t == -1 || t == 0) {
        classes.push_back({t});
        continue;
      }
      if (!support.contains(Rational(-t)))
        throw DistributionError("antipodal support must be symmetric; missing " + to_string(Rational(-t)));
      if (t > 0) classes.push_back({Rational(-t), t});
    }
  } else {
    for (const auto& t : support) classes.push_back({t});
  }

  std::vector<int> indices;
  for (int i = 1; i <= strength; ++i)
    if (!antipodal || i % 2 == 0) indices.push_back(i);

  const std::size_t cols = classes.size();
  std::vector<std::vector<Rational>> rows;
  {
    std::vector<Rational> row;
    for (const auto& c : classes) row.emplace_back(static_cast<long>(c.size()));
    row.emplace_back(cardinality - 1);
    rows.push_back(std::move(row));
  }
  const GegenbauerBasis& basis = gegenbauer_basis(dim, std::max(strength, 1));
  for (int i : indices) {
    std::vector<Rational> row;
    for (const auto& c : classes) {
      Rational s(0);
      for (const auto& t : c) s += basis[i](t);
      row.push_back(s);
    }
    row.emplace_back(-1);
    rows.push_back(std::move(row));
  }

  // Gauss-Jordan elimination over the rationals.
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    const Rational inv = Rational(1) / rows[rank][col];
    for (auto& v : rows[rank]) v *= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      const Rational factor = rows[r][col];
      for (std::size_t k = col; k <= cols; ++k) rows[r][k] -= factor * rows[rank][k];
    }
    ++rank;
  }
  if (rank < cols)
    throw SingularSystemError("design constraints do not determine the distribution (rank " + std::to_string(rank) +
                              " < " + std::to_string(cols) + " unknowns)");
  for (std::size_t r = rank; r < rows.size(); ++r)
    if (rows[r][cols] != 0) throw InconsistentSystemError("design constraints are inconsistent");

  DistributionSolution out;
  out.nonnegative = true;
  out.integral = true;
  for (std::size_t c = 0; c < cols; ++c) {
    const Rational& value = rows[c][cols];
    for (const auto& t : classes[c]) out.raw[t] = value;
    if (value < 0) out.nonnegative = false;
    if (boost::multiprecision::denominator(value) != 1) out.integral = false;
  }

  // Check every constraint up to the strength, including odd indices that
  // the antipodal reduction omitted.
  out.consistent = true;
  for (int i = 1; i <= strength; ++i) {
    Rational s = basis[i](Rational(1));
    for (const auto& [t, a] : out.raw) s += a * basis[i](t);
    if (s != 0) out.consistent = false;
  }

  if (out.nonnegative && out.integral && out.consistent) {
    std::map<Rational, std::int64_t> counts;
    for (const auto& [t, a] : out.raw) counts[t] = boost::multiprecision::numerator(a).convert_to<std::int64_t>();
    out.distribution = DistanceDistribution(cardinality, std::move(counts), antipodal);
  }
  return out;
}

}  // namespace lpcert
