#pragma once

#include <cstdint>
#include <span>
#include <utility>

#include "cantor/digits.hpp"
#include "cantor/rational.hpp"

namespace cantor {

/// D_n (1-based).
const DigitSet& digit_at(const DigitSequence& seq, std::uint64_t n);

/// Span N = max_n (1 + max D_n - min D_n). Always >= 1; the max is attained
/// within preperiod and one period.
std::int64_t span(const CantorSystem& system);

/// (min_n min D_n, max_n max D_n).
std::pair<Digit, Digit> global_bounds(const CantorSystem& system);

struct NormalizedSystem {
  CantorSystem system;  // digit sets D_n - min D_n (every set starts at 0)
  Rational shift;       // sum_n (min D_n) beta^n; original set = normalized + shift
};

/// Positionwise min-0 normalization. The normalized value set is the original
/// one translated by -shift.
NormalizedSystem normalize(const CantorSystem& system);

/// True iff min D_n = 0 for every n.
bool is_normalized(const CantorSystem& system);

/// Exact value of sum_{n>=1} d_n beta^n for an eventually periodic digit
/// stream (finite prefix plus geometric series for the repeating block).
Rational eventually_periodic_sum(std::span<const Digit> preperiod,
                                 std::span<const Digit> period, const Rational& beta);

/// Value of the coding map: sum d_n beta^n, exact.
Rational pi_value(const Code& code, const Rational& beta);

/// Exact bounds on any tail sum_{m>n} d_m beta^m with d_m in D_m:
/// (sum_{m>n} min D_m beta^m, sum_{m>n} max D_m beta^m).
std::pair<Rational, Rational> tail_bounds(const CantorSystem& system, std::size_t n);

/// tail_bounds divided by beta^n, i.e. bounds on sum_{j>=1} d_{n+j} beta^j.
/// Depends on n only through the position phase, so it stays cheap for any n.
std::pair<Rational, Rational> scaled_tail_bounds(const CantorSystem& system, std::uint64_t n);

/// True iff d_n in D_n for all n >= 1. Decided over the joint horizon
/// max(preperiod lengths) + lcm(period lengths), after which both sequences
/// repeat in lockstep.
bool validate_code(const CantorSystem& system, const Code& code);

/// Digitwise min (resp. max) code of the sequence.
Code min_code(const DigitSequence& seq);
Code max_code(const DigitSequence& seq);

}  // namespace cantor
