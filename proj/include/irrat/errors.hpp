#pragma once

#include <stdexcept>
#include <string>

namespace irrat {

// Root of every error raised by the library. Each derived type names one
// failure kind so callers (and the CLI) can dispatch on it.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class not_prime : public error {
 public:
  using error::error;
};

class square_radicand : public error {
 public:
  using error::error;
};

class bad_parity : public error {
 public:
  using error::error;
};

class bad_index : public error {
 public:
  using error::error;
};

class degenerate_denominator : public error {
 public:
  using error::error;
};

// Input pair outside the open window where a construction has both overlap
// and blank regions. what() names the violated inequality.
class out_of_window : public error {
 public:
  out_of_window(const std::string& violated)
      : error("input outside validity window: violated " + violated),
        violated_(violated) {}
  const std::string& violated() const noexcept { return violated_; }

 private:
  std::string violated_;
};

class basis_mismatch : public error {
 public:
  using error::error;
};

class depth_exceeded : public error {
 public:
  using error::error;
};

}  // namespace irrat
