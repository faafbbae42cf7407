#pragma once

#include <complex>
#include <initializer_list>
#include <numbers>
#include <vector>

#include "normsim/group.hpp"

namespace normsim::test {

inline AbelianGroup group_of(std::initializer_list<long> moduli) {
  std::vector<Integer> d;
  for (long v : moduli) d.emplace_back(v);
  return AbelianGroup(std::move(d));
}

inline GroupElement elem(const AbelianGroup& group, std::initializer_list<long> residues) {
  std::vector<Integer> r;
  for (long v : residues) r.emplace_back(v);
  return GroupElement(group, std::move(r));
}

inline std::vector<GroupElement> all_elements(const AbelianGroup& group) {
  std::vector<GroupElement> out;
  for_each_element(group, [&](const GroupElement& g) { out.push_back(g); });
  return out;
}

/// exp(2 pi i sum g_i h_i / d_i) straight from the definition.
inline std::complex<double> character_value(const GroupElement& g, const GroupElement& h) {
  double angle = 0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const Integer& d = g.group().modulus(i);
    const Integer r = mod_floor(g[i] * h[i], d);
    angle += r.get_d() / d.get_d();
  }
  return std::polar(1.0, 2 * std::numbers::pi * angle);
}

}  // namespace normsim::test
