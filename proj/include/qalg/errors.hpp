#pragma once

#include <stdexcept>
#include <string>

namespace qalg {

enum class ErrCode {
  index_out_of_range,
  size_mismatch,
  division_by_zero,
  not_divisible,
  syntax_error,
  negative_power_of_generator,
  not_coinvariant,
  inconsistent_convention,
  bad_argument,
};

class Error : public std::runtime_error {
public:
  Error(ErrCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrCode code() const { return code_; }

private:
  ErrCode code_;
};

[[noreturn]] inline void fail(ErrCode c, const std::string& msg) {
  throw Error(c, msg);
}

}  // namespace qalg
