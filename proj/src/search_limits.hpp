#pragma once

#include <chrono>
#include <optional>

namespace tg {

// Budget knobs shared by the exponential solvers. A zero maxVertices means
// "use the solver's default". The deadline, when set, is polled at coarse
// granularity inside enumeration loops; expiry raises BudgetError.
struct SearchLimits {
    int maxVertices = 0;
    std::optional<std::chrono::steady_clock::time_point> deadline;

    bool expired() const {
        return deadline && std::chrono::steady_clock::now() >= *deadline;
    }
};

inline constexpr int kDefaultToughnessBudget = 20;  // 2^n subset scan
inline constexpr int kDefaultTutteBudget = 12;      // 3^n pair scan

}  // namespace tg
