// Symbol registry for the commuting formal symbols (h1, pi, xi_k, K, ...).
// A registry is immutable once built; polynomials hold a shared pointer to
// theirs and refuse to mix registries.
#pragma once

#include "wrescalc/errors.hpp"

#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

namespace wrescalc {

struct SymbolId {
    int index = -1;
    bool valid() const { return index >= 0; }
    bool operator==(const SymbolId& o) const { return index == o.index; }
};

class SymbolRegistry {
public:
    static std::shared_ptr<const SymbolRegistry> make(std::vector<std::string> names);

    // h1, pi, K, gradV2, xi_1 .. xi_{n-1} (plus any extras), in that order.
    static std::shared_ptr<const SymbolRegistry> standard(int n,
                                                          std::vector<std::string> extra = {});

    std::size_t size() const { return names_.size(); }
    const std::string& name(int index) const { return names_.at(static_cast<std::size_t>(index)); }

    SymbolId find(const std::string& name) const;          // invalid id if absent
    SymbolId require(const std::string& name) const;       // throws UnboundSymbolError

    SymbolId h1() const { return require("h1"); }
    SymbolId pi() const { return require("pi"); }
    SymbolId xi(int k) const { return require("xi_" + std::to_string(k)); }

private:
    explicit SymbolRegistry(std::vector<std::string> names);
    std::vector<std::string> names_;
    std::unordered_map<std::string, int> by_name_;
};

using RegistryPtr = std::shared_ptr<const SymbolRegistry>;

}  // namespace wrescalc
