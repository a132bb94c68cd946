#include "dynamo/dynatomic.hpp"

namespace dynamo {

long dynatomic_degree(int d, int n) {
    long total = 0;
    for (long e : divisors(n)) {
        long pw = 1;
        for (long i = 0; i < e; ++i) pw *= d;
        total += moebius(n / e) * (pw + 1);
    }
    return total;
}

} // namespace dynamo
