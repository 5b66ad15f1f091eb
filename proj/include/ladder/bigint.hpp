#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace ladder {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

BigInt factorial(unsigned n);

// binomial(n, k) with the usual convention: 0 whenever k < 0 or k > n.
BigInt binomial(long long n, long long k);

} // namespace ladder
