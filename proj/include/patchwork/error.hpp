#pragma once

#include <stdexcept>
#include <string>

namespace patchwork {

/// Base class for every error raised by the library. The `kind()` string is
/// stable and is what the CLI and the service report to callers.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

struct InvalidDegree : Error {
  explicit InvalidDegree(const std::string& w) : Error("invalid-degree", w) {}
};
struct OutOfRange : Error {
  explicit OutOfRange(const std::string& w) : Error("out-of-range", w) {}
};
struct NotFlippable : Error {
  explicit NotFlippable(const std::string& w) : Error("not-flippable", w) {}
};
struct CatalogError : Error {
  explicit CatalogError(const std::string& w) : Error("catalog", w) {}
};
struct InputError : Error {
  explicit InputError(const std::string& w) : Error("input", w) {}
};
struct UnsupportedDegree : Error {
  explicit UnsupportedDegree(const std::string& w) : Error("unsupported-degree", w) {}
};
struct NoLifting : Error {
  explicit NoLifting(const std::string& w) : Error("no-lifting", w) {}
};

class ParseError : public Error {
 public:
  ParseError(const std::string& w, std::size_t pos)
      : Error("parse", w + " at position " + std::to_string(pos)), pos_(pos) {}
  std::size_t position() const noexcept { return pos_; }

 private:
  std::size_t pos_;
};

}  // namespace patchwork
