#pragma once

#include <cstdint>
#include <vector>

namespace nlqam {

/// Binary-reflected Gray code for `bits`-bit labels: 2^bits entries where
/// consecutive entries differ in exactly one bit. Accepts 1 <= bits <= 8.
std::vector<std::uint32_t> gray_labeling(int bits);

}  // namespace nlqam
