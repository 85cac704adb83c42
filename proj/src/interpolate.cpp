#include "lpcert/interpolate.hpp"

#include <algorithm>
#include <map>

namespace lpcert {

namespace {

std::vector<Rational> rationals(std::initializer_list<std::pair<int, int>> xs) {
  std::vector<Rational> out;
  for (const auto& [p, q] : xs) out.emplace_back(p, q);
  return out;
}

}  // namespace

NodeMultiset::NodeMultiset(std::vector<Rational> nodes) : nodes_(std::move(nodes)) {
  if (nodes_.empty()) throw NodeMultisetError("node multiset is empty");
  if (nodes_.size() > kMaxNodes)
    throw NodeMultisetError("node multiset has " + std::to_string(nodes_.size()) + " entries, limit is " +
                            std::to_string(kMaxNodes));
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    for (std::size_t j = i + 2; j < nodes_.size(); ++j) {
      if (nodes_[i] == nodes_[j] && nodes_[j - 1] != nodes_[i])
        throw NodeMultisetError("repeated node " + to_string(nodes_[i]) + " is not contiguous");
    }
  }
}

NodeMultiset NodeMultiset::lower_t1() {
  return NodeMultiset(rationals(
      {{-1, 1}, {-1, 1}, {-1, 2}, {-1, 2}, {-1, 3}, {-1, 6}, {0, 1}, {0, 1}, {1, 6}, {1, 3}, {1, 2}, {1, 2}}));
}

NodeMultiset NodeMultiset::lower_t2() {
  return NodeMultiset(rationals(
      {{-1, 1}, {-1, 1}, {-1, 2}, {-1, 3}, {-1, 6}, {-1, 6}, {0, 1}, {0, 1}, {1, 6}, {1, 6}, {1, 3}, {1, 2}}));
}

NodeMultiset NodeMultiset::upper_t1() {
  return NodeMultiset(rationals(
      {{-1, 1}, {-1, 2}, {-1, 2}, {-1, 3}, {-1, 6}, {0, 1}, {0, 1}, {1, 6}, {1, 3}, {1, 2}, {1, 2}, {1, 1}}));
}

std::vector<NodeMultiset::Node> NodeMultiset::distinct() const {
  std::vector<Node> out;
  for (const auto& v : nodes_) {
    if (!out.empty() && out.back().value == v)
      ++out.back().multiplicity;
    else
      out.push_back({v, 1});
  }
  return out;
}

int NodeMultiset::max_multiplicity() const {
  int best = 0;
  for (const auto& node : distinct()) best = std::max(best, node.multiplicity);
  return best;
}

AvoidSet AvoidSet::t1() {
  return AvoidSet(AvoidId::T1, {{Rational(-1, 3), Rational(-1, 6)}, {Rational(1, 6), Rational(1, 3)}});
}

AvoidSet AvoidSet::t2() {
  return AvoidSet(AvoidId::T2, {{Rational(-1, 2), Rational(-1, 3)}, {Rational(1, 3), Rational(1, 2)}});
}

AvoidSet AvoidSet::parse(std::string_view name) {
  if (name == "T1") return t1();
  if (name == "T2") return t2();
  throw std::invalid_argument("unknown avoid set '" + std::string(name) + "' (expected T1 or T2)");
}

std::vector<std::pair<Rational, Rational>> AvoidSet::complement() const {
  std::vector<std::pair<Rational, Rational>> out;
  Rational cursor(-1);
  for (const auto& iv : intervals_) {
    out.emplace_back(cursor, iv.lo);
    cursor = iv.hi;
  }
  out.emplace_back(cursor, Rational(1));
  return out;
}

std::vector<PartialProduct> partial_products(const NodeMultiset& m, int dim) {
  std::vector<PartialProduct> out;
  RationalPoly prefix = RationalPoly::constant(1);
  for (std::size_t r = 1; r < m.size(); ++r) {
    prefix = prefix * RationalPoly({-m[r - 1], Rational(1)});
    out.push_back({static_cast<int>(r), prefix, expand(prefix, dim)});
  }
  return out;
}

std::string to_string(SignVerdict v) {
  switch (v) {
    case SignVerdict::nonnegative:
      return "nonnegative";
    case SignVerdict::nonpositive:
      return "nonpositive";
    case SignVerdict::mixed:
      return "mixed";
  }
  return "mixed";
}

SignPattern remainder_sign(const NodeMultiset& m, const std::vector<Rational>& extra_roots, const AvoidSet& avoid) {
  std::map<Rational, int> multiplicity;
  for (const auto& v : m.values()) ++multiplicity[v];
  for (const auto& v : extra_roots) ++multiplicity[v];

  // Away from roots, sign R(x) = (-1)^(total multiplicity of roots above x);
  // roots at x itself have even multiplicity inside the pieces examined.
  const auto sign_at = [&](const Rational& x) {
    int above = 0;
    for (const auto& [r, k] : multiplicity)
      if (r > x) above += k;
    return above % 2 == 0 ? 1 : -1;
  };

  SignPattern out;
  bool all_nonneg = true;
  bool all_nonpos = true;
  for (const auto& [lo, hi] : avoid.complement()) {
    std::vector<Rational> cuts{lo};
    for (const auto& [r, k] : multiplicity)
      if (k % 2 == 1 && r > lo && r < hi) cuts.push_back(r);
    cuts.push_back(hi);
    int sign = 0;
    bool mixed = false;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
      const int s = sign_at((cuts[i] + cuts[i + 1]) / 2);
      if (sign == 0)
        sign = s;
      else if (s != sign)
        mixed = true;
    }
    if (mixed) sign = 0;
    all_nonneg = all_nonneg && sign > 0;
    all_nonpos = all_nonpos && sign < 0;
    out.intervals.push_back({lo, hi, sign});
  }
  out.verdict = all_nonneg ? SignVerdict::nonnegative : (all_nonpos ? SignVerdict::nonpositive : SignVerdict::mixed);
  return out;
}

}  // namespace lpcert
