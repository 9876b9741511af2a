#pragma once

#include <stdexcept>
#include <string>

namespace ineq {

enum class Err {
  parse,
  invalid_argument,
  empty_set,
  nested_pair,
  not_a_cover,
  not_uniform_cover,
  not_comparable,
  not_in_sumset,
  c_not_contained,
  unordered_context,
  instance_too_large,
  overflow,
  io,
};

class Error : public std::runtime_error {
public:
  Error(Err code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Err code() const noexcept { return code_; }

private:
  Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& what) { throw Error(code, what); }

}  // namespace ineq
