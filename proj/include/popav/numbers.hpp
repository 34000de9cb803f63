#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace popav {

using BigInt = boost::multiprecision::cpp_int;

// Fib(0) = 0, Fib(1) = Fib(2) = 1. This indexing is used everywhere.
BigInt fibonacci(int n);

BigInt factorial(int n);

BigInt int_pow(const BigInt& base, int exp);

} // namespace popav
