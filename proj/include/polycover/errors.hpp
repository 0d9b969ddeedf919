#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace polycover {

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

struct InvalidPolygon : std::runtime_error {
  explicit InvalidPolygon(const std::string& what) : std::runtime_error(what) {}
};

struct DegenerateHull : std::runtime_error {
  explicit DegenerateHull(const std::string& what) : std::runtime_error(what) {}
};

struct ArrangementTooLarge : std::runtime_error {
  std::size_t count;
  ArrangementTooLarge(const std::string& what, std::size_t n)
      : std::runtime_error(what), count(n) {}
};

struct UncoveredWitness : std::runtime_error {
  std::size_t witness_index;
  UncoveredWitness(const std::string& what, std::size_t idx)
      : std::runtime_error(what), witness_index(idx) {}
};

}  // namespace polycover
