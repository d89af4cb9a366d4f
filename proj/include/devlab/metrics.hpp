#pragma once

#include <cstdint>
#include <memory>
#include <string>

#include "devlab/term.hpp"

namespace devlab {

// Arbitrary-precision natural number. Development lengths grow doubly
// exponentially in the term size, so a fixed-width integer would silently
// wrap on quite small inputs.
class Count {
 public:
  Count();                   // zero
  Count(std::uint64_t v);    // NOLINT: implicit on purpose, `Count c = 3` reads well
  Count(const Count& other);
  Count(Count&& other) noexcept;
  Count& operator=(const Count& other);
  Count& operator=(Count&& other) noexcept;
  ~Count();

  Count& operator+=(const Count& rhs);
  Count& operator-=(const Count& rhs);  // requires *this >= rhs
  Count& operator*=(const Count& rhs);

  friend Count operator+(Count lhs, const Count& rhs) { return lhs += rhs; }
  friend Count operator-(Count lhs, const Count& rhs) { return lhs -= rhs; }
  friend Count operator*(Count lhs, const Count& rhs) { return lhs *= rhs; }

  bool operator==(const Count& rhs) const;
  std::strong_ordering operator<=>(const Count& rhs) const;

  bool is_zero() const;
  std::string str() const;  // decimal

  // Value as uint64_t if it fits, otherwise throws Error(BadArgument).
  std::uint64_t to_u64() const;

  static Count from_string(const std::string& decimal);

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

Count count_min(const Count& a, const Count& b);
Count count_max(const Count& a, const Count& b);

// min_copies(x, M) is the number of copies of N whose redexes a shortest
// complete development of M[x:=N] still has to contract; max_copies(x, M) is
// the same number for a longest complete development. They obey
//   shortest_dev_length(M[x:=N])
//     = shortest_dev_length(M) + shortest_dev_length(N) * min_copies(x, M)
// and the max analogue, and both are 0 when x is not free in M.
Count min_copies(const VarName& x, const Term& term);
Count max_copies(const VarName& x, const Term& term);

// Length of a shortest complete development of the term (0 iff normal form).
Count shortest_dev_length(const Term& term);

// Length of a longest complete development of the term (0 iff normal form).
Count longest_dev_length(const Term& term);

}  // namespace devlab
