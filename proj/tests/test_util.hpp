#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "isect/setcore.hpp"
#include "oracles.hpp"

inline oracle::Bits to_bits(const isect::Family& f) {
  oracle::Bits out;
  for (isect::SetMask m : f) out.push_back(m.bits());
  std::sort(out.begin(), out.end());
  return out;
}

inline isect::Family from_bits(int n, int k, const oracle::Bits& b) {
  return isect::Family::from_bits(n, k, b);
}
