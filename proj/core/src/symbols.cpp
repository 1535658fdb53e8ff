#include "wrescalc/symbols.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace wrescalc {

SymbolRegistry::SymbolRegistry(std::vector<std::string> names) : names_(std::move(names)) {
    for (std::size_t k = 0; k < names_.size(); ++k) {
        auto [it, inserted] = by_name_.emplace(names_[k], static_cast<int>(k));
        if (!inserted) throw std::invalid_argument("duplicate symbol name: " + names_[k]);
    }
}

std::shared_ptr<const SymbolRegistry> SymbolRegistry::make(std::vector<std::string> names) {
    return std::shared_ptr<const SymbolRegistry>(new SymbolRegistry(std::move(names)));
}

std::shared_ptr<const SymbolRegistry> SymbolRegistry::standard(int n,
                                                               std::vector<std::string> extra) {
    std::vector<std::string> names = {"h1", "pi", "K", "gradV2"};
    for (int k = 1; k < n; ++k) names.push_back("xi_" + std::to_string(k));
    // The extra-free standard registries are interned so polynomials built by
    // independent pipelines compare against each other.
    if (extra.empty()) {
        static std::mutex mu;
        static std::map<int, std::shared_ptr<const SymbolRegistry>> cache;
        std::lock_guard<std::mutex> lock(mu);
        auto& slot = cache[n];
        if (!slot) slot = make(std::move(names));
        return slot;
    }
    for (auto& e : extra) names.push_back(std::move(e));
    return make(std::move(names));
}

SymbolId SymbolRegistry::find(const std::string& name) const {
    auto it = by_name_.find(name);
    if (it == by_name_.end()) return SymbolId{};
    return SymbolId{it->second};
}

SymbolId SymbolRegistry::require(const std::string& name) const {
    SymbolId id = find(name);
    if (!id.valid()) throw UnboundSymbolError("symbol not registered: " + name);
    return id;
}

}  // namespace wrescalc
