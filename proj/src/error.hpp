#pragma once

#include <stdexcept>
#include <string>

namespace fairslot {

class Error : public std::runtime_error {
 public:
  enum class Kind {
    invalid_argument,
    io,
    config,
    oracle_refused,
    internal,
  };

  Error(Kind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

[[noreturn]] inline void fail(Error::Kind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace fairslot
