#include "devlab/metrics.hpp"

#include <gmpxx.h>

#include <cctype>
#include <utility>

#include "devlab/error.hpp"

namespace devlab {

struct Count::Impl {
  mpz_class v;
};

Count::Count() : impl_(std::make_unique<Impl>()) {}

Count::Count(std::uint64_t v) : impl_(std::make_unique<Impl>()) {
  // mpz has no uint64 constructor on all ABIs; go through halves to be safe.
  impl_->v = static_cast<unsigned long>(v >> 32);
  impl_->v <<= 32;
  impl_->v += static_cast<unsigned long>(v & 0xffffffffu);
}

Count::Count(const Count& other) : impl_(std::make_unique<Impl>(*other.impl_)) {}

Count::Count(Count&& other) noexcept = default;

Count& Count::operator=(const Count& other) {
  if (this != &other) impl_->v = other.impl_->v;
  return *this;
}

Count& Count::operator=(Count&& other) noexcept = default;

Count::~Count() = default;

Count& Count::operator+=(const Count& rhs) {
  impl_->v += rhs.impl_->v;
  return *this;
}

Count& Count::operator-=(const Count& rhs) {
  if (impl_->v < rhs.impl_->v)
    throw Error(ErrorCode::Internal, "count underflow");
  impl_->v -= rhs.impl_->v;
  return *this;
}

Count& Count::operator*=(const Count& rhs) {
  impl_->v *= rhs.impl_->v;
  return *this;
}

bool Count::operator==(const Count& rhs) const {
  return impl_->v == rhs.impl_->v;
}

std::strong_ordering Count::operator<=>(const Count& rhs) const {
  const int c = cmp(impl_->v, rhs.impl_->v);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

bool Count::is_zero() const {
  return sgn(impl_->v) == 0;
}

std::string Count::str() const {
  return impl_->v.get_str();
}

std::uint64_t Count::to_u64() const {
  // Compare against 2^64 - 1 rather than relying on fits_ulong_p, which is
  // about unsigned long and not a fixed width.
  static const mpz_class kMax = (mpz_class(1) << 64) - 1;
  if (impl_->v > kMax)
    throw Error(ErrorCode::BadArgument, "count does not fit in 64 bits");
  std::uint64_t out = 0;
  mpz_class rest = impl_->v;
  out = mpz_class(rest & 0xffffffffu).get_ui();
  rest >>= 32;
  out |= static_cast<std::uint64_t>(rest.get_ui()) << 32;
  return out;
}

Count Count::from_string(const std::string& decimal) {
  if (decimal.empty())
    throw Error(ErrorCode::BadArgument, "empty count literal");
  for (char c : decimal)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw Error(ErrorCode::BadArgument, "count literal is not a decimal number: " + decimal);
  Count out;
  out.impl_->v = mpz_class(decimal, 10);
  return out;
}

Count count_min(const Count& a, const Count& b) {
  return a <= b ? a : b;
}

Count count_max(const Count& a, const Count& b) {
  return a >= b ? a : b;
}

namespace {

// The two measure families differ only in how the copy multiplier of a redex
// is clamped: the shortest development reduces each needed argument once
// (clamp to at most 1) while the longest reduces every copy, at least one
// even if the binder erases it (clamp to at least 1).
enum class Clamp { AtMostOne, AtLeastOne };

Count copies(const VarName& x, const Term& t, Clamp clamp);

Count redex_multiplier(const Term& red, Clamp clamp) {
  Count binder_copies = copies(red.name(), red.body(), clamp);
  if (clamp == Clamp::AtMostOne)
    return binder_copies.is_zero() ? Count(0) : Count(1);
  return binder_copies.is_zero() ? Count(1) : binder_copies;
}

Count copies(const VarName& x, const Term& t, Clamp clamp) {
  switch (t.kind()) {
    case Kind::Var:
      return t.name() == x ? Count(1) : Count(0);
    case Kind::Lam:
      // A binder equal to x shadows it: the body has no free x.
      return t.name() == x ? Count(0) : copies(x, t.body(), clamp);
    case Kind::App:
      return copies(x, t.fun(), clamp) + copies(x, t.arg(), clamp);
    case Kind::Red: {
      Count from_body = t.name() == x ? Count(0) : copies(x, t.body(), clamp);
      return from_body + copies(x, t.arg(), clamp) * redex_multiplier(t, clamp);
    }
  }
  throw Error(ErrorCode::Internal, "unreachable term kind");
}

Count dev_length(const Term& t, Clamp clamp) {
  switch (t.kind()) {
    case Kind::Var:
      return Count(0);
    case Kind::Lam:
      return dev_length(t.body(), clamp);
    case Kind::App:
      return dev_length(t.fun(), clamp) + dev_length(t.arg(), clamp);
    case Kind::Red:
      return dev_length(t.body(), clamp) +
             dev_length(t.arg(), clamp) * redex_multiplier(t, clamp) + Count(1);
  }
  throw Error(ErrorCode::Internal, "unreachable term kind");
}

}  // namespace

Count min_copies(const VarName& x, const Term& term) {
  return copies(x, term, Clamp::AtMostOne);
}

Count max_copies(const VarName& x, const Term& term) {
  return copies(x, term, Clamp::AtLeastOne);
}

Count shortest_dev_length(const Term& term) {
  return dev_length(term, Clamp::AtMostOne);
}

Count longest_dev_length(const Term& term) {
  return dev_length(term, Clamp::AtLeastOne);
}

}  // namespace devlab
