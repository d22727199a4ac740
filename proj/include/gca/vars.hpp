#pragma once

#include <initializer_list>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gca/error.hpp"

namespace gca {

// An immutable, ordered table of variable names. Every polynomial
// carries a shared pointer to its table; exponent vectors are indexed
// by table position. The declared order is also the lexicographic
// monomial order used for normalization.
class VarTable {
public:
    explicit VarTable(std::vector<std::string> names) : names_(std::move(names)) {
        for (int i = 0; i < static_cast<int>(names_.size()); ++i) {
            if (names_[i].empty()) throw InvalidInput("empty variable name");
            auto [it, fresh] = index_.emplace(names_[i], i);
            (void)it;
            if (!fresh) throw InvalidInput("duplicate variable name: " + names_[i]);
        }
    }

    int arity() const { return static_cast<int>(names_.size()); }
    const std::string& name(int i) const { return names_.at(i); }
    const std::vector<std::string>& names() const { return names_; }

    std::optional<int> find(const std::string& n) const {
        auto it = index_.find(n);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    int index_of(const std::string& n) const {
        auto i = find(n);
        if (!i) throw InvalidInput("unknown variable: " + n);
        return *i;
    }

private:
    std::vector<std::string> names_;
    std::map<std::string, int> index_;
};

using VarsPtr = std::shared_ptr<const VarTable>;

inline VarsPtr make_vars(std::vector<std::string> names) {
    return std::make_shared<const VarTable>(std::move(names));
}

inline VarsPtr make_vars(std::initializer_list<const char*> names) {
    std::vector<std::string> v(names.begin(), names.end());
    return make_vars(std::move(v));
}

} // namespace gca
