#pragma once

#include <stdexcept>
#include <string>

namespace dist2 {

enum class Errc {
  cap_exceeded,
  bad_edge,
  empty_set,
  disconnected,
  diameter_too_small,
  invalid_spindle,
  hypothesis_failed,
  bad_char,
  bad_length,
  bad_padding,
  invalid_input,
  io_error,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace dist2
