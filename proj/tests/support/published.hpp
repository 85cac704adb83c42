#pragma once

// Published Gegenbauer coefficients g_{0,r}..g_{r,r} of the partial node
// products for the two lower multisets in dimension 48.

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace published {

inline const std::map<std::pair<std::string, int>, std::vector<std::string>>& partial_products() {
  static const std::map<std::pair<std::string, int>, std::vector<std::string>> table = {
      {{"T1", 9},
       {"107/336960", "9559/1684800", "1457/31104", "662371/2818800", "793877/1002240", "109123049/58631040",
        "2444141/808704", "1873655/582552", "296429/150336", "296429/575360"}},
      {{"T1", 10},
       {"37/2995200", "337/1123200", "984415/281428992", "1712633/67651200", "96599993/781747200",
        "584962/1374165", "1598663969/1504189440", "5878243/3106944", "651254513/288645120", "889287/575360",
        "3260719/7364608"}},
      {{"T1", 11},
       {"1/13478400", "3961/1758931200", "47/8794656", "-118957/811814400", "122059/1563494400",
        "376856011/32716120320", "231656467/3008378880", "399983395/1342199808", "439011349/577290240",
        "3260719/2589120", "16303595/14729216", "2075003/5523456"}},
      {{"T2", 9},
       {"7903/40435200", "371/105300", "47705/1617408", "15341599/101476800", "51317749/97718400",
        "677167211/527679360", "743869/336960", "12041729/4660416", "296429/167040", "296429/575360"}},
      {{"T2", 10},
       {"1981/48522240", "3983/5054400", "680701/93809664", "25583369/608860800", "79510417/469048320",
        "1585405927/3166076160", "331592191/300837888", "49704991/27962496", "118868029/57729024",
        "5039293/3452160", "3260719/7364608"}},
      {{"T2", 11},
       {"511/181958400", "40103/586310400", "328013/422143488", "40304803/7306329600",
        "391174091/14071449600", "30641555483/294445082880", "32981921/111421440", "98632555/149133312",
        "209575303/192430080", "296429/215760", "16303595/14729216", "2075003/5523456"}},
  };
  return table;
}

/// Distance distribution of the 48-dimensional extremal 11-designs, as
/// (numerator, denominator, count).
struct Count {
  long num;
  long den;
  std::int64_t count;
};

inline constexpr std::int64_t kCardinality = 52'416'000;

inline const std::vector<Count>& distribution() {
  static const std::vector<Count> counts = {{-1, 1, 1},          {-1, 2, 36'848},     {1, 2, 36'848},
                                            {-1, 3, 1'678'887},  {1, 3, 1'678'887},   {-1, 6, 12'608'784},
                                            {1, 6, 12'608'784},  {0, 1, 23'766'960}};
  return counts;
}

}  // namespace published
