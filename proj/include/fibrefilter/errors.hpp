#ifndef FIBREFILTER_ERRORS_HPP
#define FIBREFILTER_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace fibrefilter {

/// Raised when an input leaves the domain of the model. `symbol()` names the
/// offending quantity (e.g. "solidity_alpha") so front-ends can report it.
class DomainError : public std::invalid_argument {
public:
  DomainError(std::string symbol, const std::string& message)
      : std::invalid_argument(message), symbol_(std::move(symbol)) {}

  const std::string& symbol() const noexcept { return symbol_; }

private:
  std::string symbol_;
};

/// A sweep grid point produced an invalid scenario.
class GridPointError : public DomainError {
public:
  GridPointError(std::size_t index, double value, const DomainError& cause);

  std::size_t index() const noexcept { return index_; }
  double value() const noexcept { return value_; }

private:
  std::size_t index_;
  double value_;
};

} // namespace fibrefilter

#endif
