#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace antinef {

// Domain failures carry a stable machine-readable kind (e.g. "NotAntiNef")
// next to the human-readable message. The CLI reports the kind verbatim and
// maps any Error to exit code 1.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

[[noreturn]] inline void fail(const char* kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace antinef
