#pragma once

#include <stdexcept>
#include <string>

namespace plclique {

/// Rejected input: bad parameters, malformed files, violated preconditions.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A file could not be opened, read or written.
class IoError : public std::runtime_error {
 public:
  IoError(const std::string& path, const std::string& what)
      : std::runtime_error(path + ": " + what), path_(path) {}

  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

/// A search or sampling budget was exhausted before completion.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline void require(bool ok, const char* message) {
  if (!ok) throw ValidationError(message);
}

}  // namespace detail
}  // namespace plclique
