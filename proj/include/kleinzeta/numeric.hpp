#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

namespace kleinzeta {

namespace mp = boost::multiprecision;

// expression templates off: Eigen and auto don't mix well with them
using BigInt = mp::number<mp::gmp_int, mp::et_off>;
using Rational = mp::number<mp::gmp_rational, mp::et_off>;

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

bool is_prime(std::uint64_t n);
std::vector<std::uint64_t> prime_factors(std::uint64_t n);  // distinct, ascending
std::vector<long> primes_up_to(long bound);

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m);
std::int64_t mod_floor(std::int64_t a, std::int64_t m);

BigInt ipow(const BigInt& base, unsigned e);
BigInt ipow(long base, unsigned e);

// p-adic valuation; zero input throws
int valuation(const BigInt& n, long p);
int valuation(const Rational& x, long p);

std::string to_string(const BigInt& n);
std::string to_string(const Rational& x);

}  // namespace kleinzeta
