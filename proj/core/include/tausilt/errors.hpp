#pragma once

#include <stdexcept>
#include <string>

namespace tausilt {

struct NotUnimodular : std::runtime_error {
  explicit NotUnimodular(const std::string& what) : std::runtime_error(what) {}
};

struct NotFiniteDimensional : std::runtime_error {
  explicit NotFiniteDimensional(const std::string& what) : std::runtime_error(what) {}
};

struct IdempotentSearchExhausted : std::runtime_error {
  explicit IdempotentSearchExhausted(const std::string& what) : std::runtime_error(what) {}
};

struct NotMinimal : std::runtime_error {
  explicit NotMinimal(const std::string& what) : std::runtime_error(what) {}
};

struct MutationFailed : std::runtime_error {
  explicit MutationFailed(const std::string& what) : std::runtime_error(what) {}
};

struct NotFinite : std::runtime_error {
  explicit NotFinite(const std::string& what) : std::runtime_error(what) {}
};

struct EmptyPool : std::runtime_error {
  explicit EmptyPool(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace tausilt
