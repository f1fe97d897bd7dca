#ifndef HOPSET_ACKERMANN_HPP
#define HOPSET_ACKERMANN_HPP

#include <cstdint>

#include "hopset/types.hpp"

namespace hopset {

// A(0,j)=2j, A(i,0)=1, A(i,j)=A(i-1,A(i,j-1)); saturates at kInfinity.
Weight ackermann_a(unsigned i, std::uint64_t j);
// B(0,j)=j^2, B(i,0)=2, B(i,j)=B(i-1,B(i,j-1)); saturates at kInfinity.
Weight ackermann_b(unsigned i, std::uint64_t j);

// λ_{2i}(n) = min{j : A(i,j) >= n}, λ_{2i+1}(n) = min{j : B(i,j) >= n}.
std::uint64_t lambda(unsigned k, std::uint64_t n);
// α(n) = min{j : A(j,j) >= n}.
std::uint64_t inv_ackermann(std::uint64_t n);

}  // namespace hopset

#endif  // HOPSET_ACKERMANN_HPP
