#include "lpcert/reproduce.hpp"

#include "lpcert/certify.hpp"
#include "lpcert/designs.hpp"
#include "lpcert/interpolate.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

namespace lpcert {

namespace {

std::vector<std::string> words(const char* text) {
  std::istringstream in(text);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

}  // namespace

ReferenceTables ReferenceTables::builtin() {
  ReferenceTables t;
  t.partial_products[{"T1", 9}] = words(
      "107/336960 9559/1684800 1457/31104 662371/2818800 793877/1002240 109123049/58631040 2444141/808704 "
      "1873655/582552 296429/150336 296429/575360");
  t.partial_products[{"T1", 10}] = words(
      "37/2995200 337/1123200 984415/281428992 1712633/67651200 96599993/781747200 584962/1374165 "
      "1598663969/1504189440 5878243/3106944 651254513/288645120 889287/575360 3260719/7364608");
  t.partial_products[{"T1", 11}] = words(
      "1/13478400 3961/1758931200 47/8794656 -118957/811814400 122059/1563494400 376856011/32716120320 "
      "231656467/3008378880 399983395/1342199808 439011349/577290240 3260719/2589120 16303595/14729216 "
      "2075003/5523456");
  t.partial_products[{"T2", 9}] = words(
      "7903/40435200 371/105300 47705/1617408 15341599/101476800 51317749/97718400 677167211/527679360 "
      "743869/336960 12041729/4660416 296429/167040 296429/575360");
  t.partial_products[{"T2", 10}] = words(
      "1981/48522240 3983/5054400 680701/93809664 25583369/608860800 79510417/469048320 1585405927/3166076160 "
      "331592191/300837888 49704991/27962496 118868029/57729024 5039293/3452160 3260719/7364608");
  t.partial_products[{"T2", 11}] = words(
      "511/181958400 40103/586310400 328013/422143488 40304803/7306329600 391174091/14071449600 "
      "30641555483/294445082880 32981921/111421440 98632555/149133312 209575303/192430080 296429/215760 "
      "16303595/14729216 2075003/5523456");
  t.cardinality = 52'416'000;
  t.distribution = {{Rational(-1), 1},
                    {Rational(-1, 2), 36'848},
                    {Rational(1, 2), 36'848},
                    {Rational(-1, 3), 1'678'887},
                    {Rational(1, 3), 1'678'887},
                    {Rational(-1, 6), 12'608'784},
                    {Rational(1, 6), 12'608'784},
                    {Rational(0), 23'766'960}};
  return t;
}

void ReferenceTables::corrupt(const std::string& key) {
  if (key.starts_with("A:")) {
    const auto it = distribution.find(parse_rational(key.substr(2)));
    if (it == distribution.end()) throw std::invalid_argument("no reference count for '" + key + "'");
    it->second += 1;
    return;
  }
  std::istringstream in(key);
  std::string avoid, r_text, i_text;
  if (std::getline(in, avoid, ':') && std::getline(in, r_text, ':') && std::getline(in, i_text)) {
    try {
      const auto it = partial_products.find({avoid, std::stoi(r_text)});
      const auto index = static_cast<std::size_t>(std::stoi(i_text));
      if (it != partial_products.end() && index < it->second.size()) {
        it->second[index] = to_string(parse_rational(it->second[index]) + 1);
        return;
      }
    } catch (const std::logic_error&) {
    }
  }
  throw std::invalid_argument("unknown reference entry '" + key + "'");
}

bool Checklist::passed() const {
  return std::all_of(items.begin(), items.end(), [](const ChecklistItem& i) { return i.passed; });
}

std::vector<std::string> builtin_potential_suite() {
  return {"riesz:s=2",       "riesz:s=4",     "poly:[0,0,0,0,0,0,0,0,0,0,0,0,1]",
          "gauss:sigma=1/2", "gauss:sigma=1", "gauss:sigma=2"};
}

Checklist reproduce_reference(const ReferenceTables& tables, unsigned precision_digits) {
  const auto start = std::chrono::steady_clock::now();
  Checklist list;
  const auto add = [&](std::string name, bool ok, std::string detail = {}) {
    list.items.push_back({std::move(name), ok, std::move(detail)});
  };

  // Partial-product coefficient tables.
  for (const auto& [avoid, nodes] : {std::pair{std::string("T1"), NodeMultiset::lower_t1()},
                                     std::pair{std::string("T2"), NodeMultiset::lower_t2()}}) {
    const auto products = partial_products(nodes, 48);
    for (const auto& pp : products) {
      const auto it = tables.partial_products.find({avoid, pp.r});
      if (it == tables.partial_products.end()) continue;
      const auto& expected = it->second;
      for (std::size_t i = 0; i < std::max(expected.size(), pp.expansion.coeffs.size()); ++i) {
        const std::string got = i < pp.expansion.coeffs.size() ? to_string(pp.expansion.coeffs[i]) : "(absent)";
        const std::string want = i < expected.size() ? expected[i] : "(absent)";
        add(avoid + " PP_" + std::to_string(pp.r) + " g_" + std::to_string(i), got == want,
            "computed " + got + ", reference " + want);
      }
    }
    bool prefix_positive = true;
    for (const auto& pp : products)
      if (pp.r <= 10 && !sign_report(pp.expansion).negative.empty()) prefix_positive = false;
    add(avoid + " PP_1..PP_10 positive definite", prefix_positive);
    const SignReport last = sign_report(products.back().expansion, avoid == "T1" ? std::set<int>{3} : std::set<int>{});
    std::string negatives;
    for (int i : last.negative) negatives += " " + std::to_string(i);
    const bool expected_pattern = avoid == "T1" ? last.negative == std::vector<int>{3} : last.negative.empty();
    add(avoid + " PP_11 sign pattern", expected_pattern && last.admissible,
        "negative indices:" + (negatives.empty() ? std::string(" none") : negatives));
  }

  // Distance distribution from the design constraints.
  std::vector<Rational> support;
  for (const auto& [t, a] : tables.distribution) support.push_back(t);
  std::optional<DistanceDistribution> p48;
  try {
    const DistributionSolution sol = solve_distribution(support, tables.cardinality, 11, true);
    bool match = sol.feasible();
    std::string detail;
    for (const auto& [t, a] : tables.distribution) {
      const auto it = sol.raw.find(t);
      const bool ok = it != sol.raw.end() && it->second == Rational(a);
      match = match && ok;
      if (!ok) detail += "A_" + to_string(t) + " computed " + (it == sol.raw.end() ? "?" : to_string(it->second)) +
                         " vs reference " + std::to_string(a) + "; ";
    }
    add("distance distribution solve", match, detail.empty() ? "all counts reproduced" : detail);
    if (sol.distribution) p48 = *sol.distribution;
  } catch (const std::exception& e) {
    add("distance distribution solve", false, e.what());
  }
  if (!p48) p48 = DistanceDistribution::p48();

  // Moments.
  for (int i = 1; i <= 14; ++i) {
    const Rational m = moment(*p48, i);
    if (i == 12)
      add("moment M_12 != 0 (computed)", m != 0, "M_12/N = " + to_string(m));
    else
      add("moment M_" + std::to_string(i) + " = 0", m == 0, "M/N = " + to_string(m));
  }

  // Quadrature.
  try {
    const QuadratureRule q = quadrature_from(*p48);
    Rational total(0);
    for (const auto& [t, w] : q.weights) total += w;
    add("quadrature weights sum to 1", total == 1, to_string(total));
    add("quadrature exactness 11", q.exactness == 11, std::to_string(q.exactness));
    for (int k = 0; k <= 12; ++k) {
      const Rational r = quadrature_residual(q, RationalPoly::monomial(Rational(1), static_cast<std::size_t>(k)));
      if (k <= 11)
        add("quadrature residual t^" + std::to_string(k) + " = 0", r == 0, to_string(r));
      else
        add("quadrature residual t^12 != 0", r != 0, to_string(r));
    }
    add("quadrature residual P_14 = 0", quadrature_residual(q, gegenbauer_poly(48, 14)) == 0);
  } catch (const std::exception& e) {
    add("quadrature rule", false, e.what());
  }

  // Bound sandwich.
  CertifyOptions opts;
  opts.reference = *p48;
  opts.precision_digits = precision_digits;
  for (const auto& spec : builtin_potential_suite()) {
    try {
      const Potential h = parse_potential(spec);
      const SandwichReport s = sandwich_report(h, opts);
      const auto cert_item = [&](const std::string& label, const BoundCertificate& c) {
        std::string failed;
        for (const auto& check : c.checks)
          if (!check.passed) failed += check.name + " ";
        const auto gap = c.gap();
        add(spec + " " + label + " certificate", c.valid(),
            (failed.empty() ? "valid" : "failed: " + failed) + ", gap " + (gap ? to_string(*gap) : "n/a"));
      };
      cert_item("lower T1", s.lower_t1);
      cert_item("lower T2", s.lower_t2);
      if (s.upper_t1) cert_item("upper T1", *s.upper_t1);
      add(spec + " sandwich equality", s.all_equal,
          "design energy " + (s.design_energy ? to_string(*s.design_energy) : std::string("n/a")));
    } catch (const std::exception& e) {
      add(spec + " sandwich", false, e.what());
    }
  }

  list.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return list;
}

}  // namespace lpcert
