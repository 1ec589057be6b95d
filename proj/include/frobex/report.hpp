#ifndef FROBEX_REPORT_HPP
#define FROBEX_REPORT_HPP

#include <algorithm>
#include <string>
#include <string_view>
#include <vector>

#include "frobex/error.hpp"

namespace frobex {

/// Outcome of one named check.
struct CheckItem {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Ordered list of named pass/fail results.
class Report {
public:
    void add(std::string name, bool passed, std::string detail = {})
    {
        items_.push_back({std::move(name), passed, std::move(detail)});
    }

    /// Append another report's items, prefixing their names.
    void merge(const Report& other, const std::string& prefix = {})
    {
        for (const auto& it : other.items_)
            items_.push_back({prefix + it.name, it.passed, it.detail});
    }

    bool passed() const
    {
        return std::all_of(items_.begin(), items_.end(), [](const CheckItem& c) { return c.passed; });
    }

    const CheckItem* find(std::string_view name) const
    {
        for (const auto& it : items_)
            if (it.name == name)
                return &it;
        return nullptr;
    }

    bool passed(std::string_view name) const
    {
        const CheckItem* c = find(name);
        if (c == nullptr)
            throw Error("report has no item named " + std::string(name));
        return c->passed;
    }

    std::vector<std::string> failures() const
    {
        std::vector<std::string> out;
        for (const auto& it : items_)
            if (!it.passed)
                out.push_back(it.name);
        return out;
    }

    const std::vector<CheckItem>& items() const { return items_; }

private:
    std::vector<CheckItem> items_;
};

} // namespace frobex

#endif // FROBEX_REPORT_HPP
