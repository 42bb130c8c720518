#include "hamext/cube.hpp"

#include <stdexcept>

namespace hamext {

namespace {

BigInt pow2(std::uint32_t k) { return BigInt(1) << k; }

}  // namespace

CubeReport cube_report(std::uint32_t d) {
  if (d < 2) throw std::invalid_argument("cube_report needs d >= 2");
  CubeReport rep;
  rep.d = d;
  rep.p = pow2(d);
  rep.q = BigInt(d) * pow2(d - 1);
  // 1 + (d-4) 2^(d-3), written over 2 so that d = 2 stays integral.
  rep.genus = (BigInt(2) + (BigInt(d) - 4) * pow2(d - 2)) / 2;
  rep.r = 2 - 2 * rep.genus - rep.p + rep.q;
  if (rep.r != BigInt(d) * pow2(d - 2)) throw std::logic_error("Euler's formula disagrees with d 2^(d-2)");
  rep.klee = rep.r > rep.p;
  return rep;
}

bool cube_euler_identity(std::uint32_t d) {
  if (d < 2) throw std::invalid_argument("cube_euler_identity needs d >= 2");
  BigInt lhs = 2 * (pow2(d) - BigInt(d) * pow2(d - 1) + BigInt(d) * pow2(d - 2));
  BigInt rhs = 4 - 2 * (2 + (BigInt(d) - 4) * pow2(d - 2));
  return lhs == rhs;
}

BigInt binomial(std::uint32_t n, std::uint32_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt c = 1;
  for (std::uint32_t i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

BigInt connection_patterns(std::uint32_t b, std::uint32_t min_attach) {
  BigInt total = 0;
  for (std::uint32_t j = min_attach; j <= b; ++j) total += binomial(b, j);
  return total;
}

BigInt klee_count(std::uint32_t r_total, std::uint32_t s_min, std::uint32_t s_max, const BigInt& patterns) {
  if (s_min > s_max || s_max > r_total) throw std::invalid_argument("klee_count needs s_min <= s_max <= r_total");
  BigInt total = 0;
  BigInt power = boost::multiprecision::pow(patterns, s_min);
  for (std::uint32_t k = s_min; k <= s_max; ++k) {
    total += binomial(r_total, k) * power;
    power *= patterns;
  }
  return total;
}

std::string scientific(const BigInt& x, unsigned digits) {
  if (digits == 0) throw std::invalid_argument("need at least one significant digit");
  if (x < 0) return "-" + scientific(-x, digits);
  if (x == 0) return "0e0";
  std::string s = x.str();
  auto exponent = s.size() - 1;
  std::string head = s.substr(0, std::min<std::size_t>(digits, s.size()));
  head.resize(digits, '0');
  if (s.size() > digits && s[digits] >= '5') {
    int i = static_cast<int>(digits) - 1;
    while (i >= 0 && head[i] == '9') head[i--] = '0';
    if (i < 0) {
      head.insert(head.begin(), '1');
      head.pop_back();
      ++exponent;
    } else {
      ++head[i];
    }
  }
  std::string out(1, head[0]);
  if (digits > 1) out += "." + head.substr(1);
  return out + "e" + std::to_string(exponent);
}

}  // namespace hamext
