#pragma once

#include "agrarian/ratfun.hpp"

#include <cstdint>
#include <optional>
#include <vector>

// Word-size prime field helpers used for fast certificates (coprimality,
// nonsingularity) and for the multi-modular gcd.
namespace agrarian::modular {

// p = 1 mod 4, p < 2^31, and i * i = -1 mod p.
struct Prime {
    std::uint64_t p;
    std::uint64_t i;
};

// 256 such primes, descending from 2^31.
const std::vector<Prime>& primes();

std::uint64_t pow(std::uint64_t b, std::uint64_t e, std::uint64_t p);
std::uint64_t inv(std::uint64_t x, std::uint64_t p);

// nullopt when p divides a denominator.
std::optional<std::uint64_t> reduce(const mpq_class& q, std::uint64_t p);
// Image under Q(i) -> F_p sending i to sign * P.i.
std::optional<std::uint64_t> reduce(const Gaussian& g, const Prime& P, bool conjugate = false);

// Value at a point of (F_p^*)^rank; nullopt if some coefficient does not reduce.
std::optional<std::uint64_t> evaluate(const LaurentPoly& f, const std::vector<std::uint64_t>& point, const Prime& P);
// Also nullopt at a pole.
std::optional<std::uint64_t> evaluate(const RatFun& f, const std::vector<std::uint64_t>& point, const Prime& P);

// Rank of a dense matrix over F_p (rows of equal length).
std::size_t rank(std::vector<std::vector<std::uint64_t>> m, std::uint64_t p);

}  // namespace agrarian::modular
