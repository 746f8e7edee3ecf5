#pragma once

#include <stdexcept>
#include <string>

namespace claimforge {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Bad user input: unknown tokenizer, unreadable manifest, invalid flag combos.
class ConfigError : public Error {
  public:
    using Error::Error;
};

// Model-provider failures: auth, exhausted retries, oversized responses.
class ProviderError : public Error {
  public:
    using Error::Error;
};

// Retryable provider failure (transport errors, 5xx-class responses).
class TransientProviderError : public ProviderError {
  public:
    using ProviderError::ProviderError;
};

// A sampling stratum does not hold enough records to satisfy a request.
class ShortfallError : public Error {
  public:
    ShortfallError(std::string stratum, size_t needed, size_t available)
        : Error("stratum '" + stratum + "' short: need " + std::to_string(needed) +
                ", have " + std::to_string(available)),
          stratum_(std::move(stratum)), needed_(needed), available_(available) {}

    const std::string & stratum() const { return stratum_; }
    size_t needed() const { return needed_; }
    size_t available() const { return available_; }

  private:
    std::string stratum_;
    size_t needed_;
    size_t available_;
};

}  // namespace claimforge
