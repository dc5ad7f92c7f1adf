#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace schurpar {

enum class Errc {
  invalid_argument,
  overflow,
  not_prime,
  not_squarefree,
  wrong_residue,
  outside_s,
  memory_cap,
  io,
  unknown_suite,
};

std::string_view errc_name(Errc code) noexcept;

// Thrown for every precondition violation and arithmetic overflow in the
// library. The code is stable; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace schurpar
