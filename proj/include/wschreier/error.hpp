#ifndef WSCHREIER_ERROR_HPP
#define WSCHREIER_ERROR_HPP

#include <stdexcept>
#include <string>
#include <utility>

namespace wschreier {

// Domain error with a stable machine-readable kind, e.g. "AssociativityViolation".
// The message carries the witnessing elements.
class Error : public std::runtime_error {
public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(kind + ": " + message), kind_(std::move(kind)) {}

  const std::string& kind() const { return kind_; }

private:
  std::string kind_;
};

}  // namespace wschreier

#endif
