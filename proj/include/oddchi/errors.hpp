#pragma once

#include <stdexcept>
#include <string>

namespace oddchi {

// Input outside an operation's admissible domain (bad alpha, lo >= hi,
// non-finite integrand value, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A configured resource cap (series terms, vertex count) would be exceeded.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The r-scan found no negative eigenvalue, or the bound is degenerate.
class ScanError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Reading or writing a file failed.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace oddchi
