#ifndef AHE_ERRORS_HPP
#define AHE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ahe {

// Error taxonomy shared by all modules. The CLI maps these onto exit codes.
struct domain_error : std::runtime_error {
  explicit domain_error(const std::string& msg) : std::runtime_error(msg) {}
};

struct invalid_metric_error : std::runtime_error {
  explicit invalid_metric_error(const std::string& msg) : std::runtime_error(msg) {}
};

struct type_error : std::runtime_error {
  explicit type_error(const std::string& msg) : std::runtime_error(msg) {}
};

struct numerical_error : std::runtime_error {
  explicit numerical_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Raised when two internal computation paths that must agree do not.
struct consistency_error : std::runtime_error {
  explicit consistency_error(const std::string& msg) : std::runtime_error(msg) {}
};

struct no_solution_error : std::runtime_error {
  explicit no_solution_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace ahe

#endif
