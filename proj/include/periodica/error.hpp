#pragma once

#include <stdexcept>
#include <string>

namespace periodica {

/* Any precondition violation or unattainable computation throws this.
   Callers that can continue (CLI, report builders) catch it at the top. */
class error : public std::runtime_error {
public:
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw error(msg);
}

}  // namespace periodica
