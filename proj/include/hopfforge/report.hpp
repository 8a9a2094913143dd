#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hopfforge {

/// Outcome of a named check.
struct CheckEntry {
    std::string name;
    bool passed = true;
    std::string detail;
};

/// Ordered list of check outcomes. A report passes iff every entry passes.
class Report {
public:
    void add(std::string name, bool passed, std::string detail = {})
    {
        entries_.push_back({std::move(name), passed, std::move(detail)});
    }
    void fail(std::string name, std::string detail) { add(std::move(name), false, std::move(detail)); }
    void merge(const Report& other, const std::string& prefix = {})
    {
        for (const auto& e : other.entries_)
            entries_.push_back({prefix + e.name, e.passed, e.detail});
    }

    [[nodiscard]] bool passed() const
    {
        for (const auto& e : entries_)
            if (!e.passed)
                return false;
        return true;
    }
    [[nodiscard]] const std::vector<CheckEntry>& entries() const { return entries_; }
    [[nodiscard]] std::vector<CheckEntry> failures() const
    {
        std::vector<CheckEntry> out;
        for (const auto& e : entries_)
            if (!e.passed)
                out.push_back(e);
        return out;
    }

    friend std::ostream& operator<<(std::ostream& os, const Report& r)
    {
        for (const auto& e : r.entries_) {
            os << (e.passed ? "PASS " : "FAIL ") << e.name;
            if (!e.detail.empty())
                os << "  (" << e.detail << ")";
            os << '\n';
        }
        return os;
    }

private:
    std::vector<CheckEntry> entries_;
};

} // namespace hopfforge
