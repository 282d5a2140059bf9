#pragma once

#include <chrono>
#include <optional>
#include <stdexcept>

namespace sic {

/// Thrown by exhaustive searches when their wall-clock budget runs out.
/// Callers must report "undecided"; no partial answer is returned.
class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded()
        : std::runtime_error("search budget exhausted")
    {
    }
};

/// Optional wall-clock deadline shared by every search in one computation.
class Budget {
public:
    using clock = std::chrono::steady_clock;

    Budget() = default;

    static Budget unlimited() { return {}; }
    static Budget seconds(double s)
    {
        Budget b;
        b.deadline_ = clock::now() + std::chrono::duration_cast<clock::duration>(std::chrono::duration<double>(s));
        return b;
    }

    bool expired() const { return deadline_ && clock::now() >= *deadline_; }

    void check() const
    {
        if (expired())
            throw BudgetExceeded();
    }

private:
    std::optional<clock::time_point> deadline_;
};

} // namespace sic
