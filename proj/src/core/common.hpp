#pragma once

#include <stdexcept>
#include <string>

namespace ortholab {

// Error categories mirrored 1:1 by the C API status codes.
enum class errc {
  ok = 0,
  invalid_argument,
  domain,
  bad_index,
  unsupported,
  insufficient_weights,
  not_absolutely_continuous,
  degenerate,
  parse,
  io,
  internal,
};

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

inline void require(bool ok, errc code, const std::string& what) {
  if (!ok) fail(code, what);
}

}  // namespace ortholab
