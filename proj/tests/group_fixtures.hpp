#pragma once

#include <algorithm>
#include <array>
#include <vector>

#include "subshift/group.hpp"

namespace fixtures {

using subshift::FiniteGroup;
using subshift::GroupChain;

/// S_3 as permutations of {0,1,2} in lexicographic order, composed as
/// (a*b)(x) = a(b(x)). Index 0 is the identity and index 1 is the
/// transposition (1 2).
inline FiniteGroup symmetric3() {
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> p{0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  FiniteGroup g{"S3", std::vector<std::vector<std::size_t>>(6, std::vector<std::size_t>(6))};
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = 0; b < 6; ++b) {
      std::array<int, 3> c{};
      for (int x = 0; x < 3; ++x) c[x] = perms[a][perms[b][x]];
      g.cayley[a][b] = static_cast<std::size_t>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  return g;
}

inline GroupChain z2_z4_z8() {
  return {{subshift::cyclic_group(2), subshift::cyclic_group(4), subshift::cyclic_group(8)},
          {{0, 2}, {0, 2, 4, 6}}};
}

/// Z2 = {id, (1 2)} inside S3: not normal, so left and right cosets differ.
inline GroupChain z2_s3() { return {{subshift::cyclic_group(2), symmetric3()}, {{0, 1}}}; }

}  // namespace fixtures
