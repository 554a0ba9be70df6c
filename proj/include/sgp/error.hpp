#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace sgp {

enum class Errc {
  gcd_not_one,
  overflow,
  not_closed,
  not_member,
  no_second_generator,
  bad_parameters,
  divides,
  cap_exceeded,
  unknown_theorem,
  unknown_predicate,
  malformed_input,
};

const char* errc_name(Errc code) noexcept;

/// Every failure raised by the library. The code is stable and is what the
/// command line front end maps onto exit status 2.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

/// Raised by from_gaps when a, b are elements whose sum a+b is a listed gap.
class NotClosedError : public Error {
 public:
  NotClosedError(std::int64_t a, std::int64_t b);

  std::int64_t a() const noexcept { return a_; }
  std::int64_t b() const noexcept { return b_; }

 private:
  std::int64_t a_;
  std::int64_t b_;
};

}  // namespace sgp
