#pragma once

#include <stdexcept>
#include <string>

namespace megan {

// Category is machine-parsable: the CLI prints "error: <category>: <message>".
class Error : public std::runtime_error {
 public:
  Error(std::string category, const std::string& message)
      : std::runtime_error(category + ": " + message), category_(std::move(category)) {}
  const std::string& category() const { return category_; }

 private:
  std::string category_;
};

inline Error shape_error(const std::string& msg) { return Error("shape", msg); }
inline Error parse_error(const std::string& msg) { return Error("parse", msg); }
inline Error dimension_error(const std::string& msg) { return Error("dimension", msg); }
inline Error io_error(const std::string& msg) { return Error("io", msg); }
inline Error numeric_error(const std::string& msg) { return Error("numeric", msg); }
inline Error usage_error(const std::string& msg) { return Error("usage", msg); }
inline Error digest_error(const std::string& msg) { return Error("digest-mismatch", msg); }

}  // namespace megan
