#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <vector>

#include "cantor/rational.hpp"

namespace cantor {

using Digit = std::int64_t;

/// Finite nonempty set of integer digits, stored strictly increasing.
class DigitSet {
 public:
  explicit DigitSet(std::vector<Digit> digits);
  DigitSet(std::initializer_list<Digit> digits)
      : DigitSet(std::vector<Digit>(digits)) {}

  const std::vector<Digit>& digits() const { return digits_; }
  std::size_t size() const { return digits_.size(); }
  Digit min() const { return digits_.front(); }
  Digit max() const { return digits_.back(); }
  /// 1 + max - min: the width of the digit window.
  Digit window() const { return 1 + max() - min(); }
  bool contains(Digit d) const;

  DigitSet shifted(Digit c) const;

  bool operator==(const DigitSet&) const = default;

 private:
  std::vector<Digit> digits_;
};

DigitSet sumset(const DigitSet& a, const DigitSet& b);
/// Empty intersection has no DigitSet representation, hence optional.
std::optional<DigitSet> intersection(const DigitSet& a, const DigitSet& b);
/// {d - d' : d, d' in s}.
DigitSet self_difference(const DigitSet& s);

/// Eventually periodic sequence of digit sets: D_1, D_2, ... given by a
/// (possibly empty) preperiod followed by a nonempty block repeated forever.
class DigitSequence {
 public:
  DigitSequence(std::vector<DigitSet> preperiod, std::vector<DigitSet> period);

  const std::vector<DigitSet>& preperiod() const { return preperiod_; }
  const std::vector<DigitSet>& period() const { return period_; }
  std::size_t preperiod_length() const { return preperiod_.size(); }
  std::size_t period_length() const { return period_.size(); }

  /// D_n, 1-based.
  const DigitSet& at(std::uint64_t n) const;

  /// The sequence D_{k+1}, D_{k+2}, ... (first k entries removed).
  DigitSequence drop_front(std::uint64_t k) const;

  bool operator==(const DigitSequence&) const = default;

 private:
  std::vector<DigitSet> preperiod_;
  std::vector<DigitSet> period_;
};

/// Eventually periodic integer sequence: a digit expansion d_1, d_2, ...
class Code {
 public:
  Code(std::vector<Digit> preperiod, std::vector<Digit> period);

  const std::vector<Digit>& preperiod() const { return preperiod_; }
  const std::vector<Digit>& period() const { return period_; }

  /// d_n, 1-based.
  Digit at(std::uint64_t n) const;

  bool operator==(const Code&) const = default;

 private:
  std::vector<Digit> preperiod_;
  std::vector<Digit> period_;
};

/// A contraction ratio beta in (0,1) plus the digit sequence: all values of
/// the form sum d_n beta^n with d_n drawn from the n-th digit set.
class CantorSystem {
 public:
  CantorSystem(Rational beta, DigitSequence digits);

  const Rational& beta() const { return beta_; }
  const DigitSequence& digits() const { return digits_; }

  bool operator==(const CantorSystem&) const = default;

 private:
  Rational beta_;
  DigitSequence digits_;
};

}  // namespace cantor
