#ifndef TOLLWALK_ERRORS_HPP
#define TOLLWALK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tollwalk {

// Malformed input text (edge lists, graph6, transit-function files).
// Messages name the offending line where one exists.
class parse_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An operation was invoked outside its contract, e.g. a toll interval of a
// disconnected graph or a mismatched vertex id.
class contract_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// The game solver refused to start because its estimated state count
// exceeded the configured budget.
class budget_error : public std::runtime_error {
public:
    explicit budget_error(const std::string& msg, double estimate, double budget)
        : std::runtime_error(msg), estimate(estimate), budget(budget) {}
    double estimate;
    double budget;
};

}  // namespace tollwalk

#endif
