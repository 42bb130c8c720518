#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace hamext {

using BigInt = boost::multiprecision::cpp_int;

/// Counts for a minimum-genus embedding of the d-cube Q_d.
struct CubeReport {
  std::uint32_t d = 0;
  BigInt p;      // 2^d
  BigInt q;      // d 2^(d-1)
  BigInt genus;  // 1 + (d-4) 2^(d-3)
  BigInt r;      // from Euler's formula; equals d 2^(d-2)
  bool klee = false;
};

/// Throws std::invalid_argument for d < 2, and std::logic_error if the
/// region count from Euler's formula disagrees with d 2^(d-2).
CubeReport cube_report(std::uint32_t d);

/// 2^d - d 2^(d-1) + d 2^(d-2) == 2 - 2 (1 + (d-4) 2^(d-3)), evaluated
/// exactly (both sides doubled to stay integral at d = 2).
bool cube_euler_identity(std::uint32_t d);

BigInt binomial(std::uint32_t n, std::uint32_t k);

/// Number of ways to join a new vertex to at least `min_attach` of `b`
/// boundary vertices: sum_{j >= min_attach} C(b, j).
BigInt connection_patterns(std::uint32_t b, std::uint32_t min_attach);

/// sum_{k = s_min}^{s_max} C(r_total, k) patterns^k.
BigInt klee_count(std::uint32_t r_total, std::uint32_t s_min, std::uint32_t s_max, const BigInt& patterns);

/// Decimal scientific form rounded half-up to `digits` significant figures,
/// e.g. "1.45e43".
std::string scientific(const BigInt& x, unsigned digits);

}  // namespace hamext
