#include "popav/numbers.hpp"

#include <stdexcept>

namespace popav {

BigInt fibonacci(int n) {
    if (n < 0) throw std::invalid_argument("fibonacci needs n >= 0");
    BigInt a = 0, b = 1;
    for (int i = 0; i < n; ++i) {
        BigInt c = a + b;
        a = b;
        b = c;
    }
    return a;
}

BigInt factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial needs n >= 0");
    BigInt r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

BigInt int_pow(const BigInt& base, int exp) {
    if (exp < 0) throw std::invalid_argument("int_pow needs exp >= 0");
    BigInt r = 1, b = base;
    while (exp > 0) {
        if (exp & 1) r *= b;
        b *= b;
        exp >>= 1;
    }
    return r;
}

} // namespace popav
