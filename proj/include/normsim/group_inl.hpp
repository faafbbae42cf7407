#pragma once

namespace normsim {

template <typename Fn>
void for_each_element(const AbelianGroup& group, Fn&& fn, std::uint64_t bound) {
  const std::uint64_t order = group.checked_order(bound);
  const std::size_t m = group.rank();
  std::vector<Integer> residues(m, Integer(0));
  for (std::uint64_t n = 0; n < order; ++n) {
    fn(group.reduce(residues));
    for (std::size_t i = m; i-- > 0;) {
      residues[i] += 1;
      if (residues[i] < group.modulus(i)) break;
      residues[i] = 0;
    }
  }
}

}  // namespace normsim
