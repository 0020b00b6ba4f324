#pragma once

#include <stdexcept>
#include <string>

namespace fk {

enum class ErrorKind { input = 2, unsupported = 3, verification = 4, internal = 5 };

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

inline Error input_error(const std::string& m) { return Error(ErrorKind::input, m); }
inline Error unsupported(const std::string& m) { return Error(ErrorKind::unsupported, m); }
inline Error internal_error(const std::string& m) { return Error(ErrorKind::internal, m); }

}  // namespace fk
