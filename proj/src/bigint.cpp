#include "ladder/bigint.hpp"

namespace ladder {

BigInt factorial(unsigned n) {
    BigInt f = 1;
    for (unsigned i = 2; i <= n; ++i) f *= i;
    return f;
}

BigInt binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt num = 1;
    for (long long i = 1; i <= k; ++i) {
        num *= n - k + i;
        num /= i; // exact at every step: num is binomial(n-k+i, i)
    }
    return num;
}

} // namespace ladder
