#ifndef PRGFL_ALPHABET_HPP
#define PRGFL_ALPHABET_HPP

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "prgfl/errors.hpp"

namespace prgfl {

/// Interned symbol names. Ids are dense and stable in insertion order.
class Alphabet {
public:
    int intern(const std::string& name) {
        auto it = index_.find(name);
        if (it != index_.end()) return it->second;
        int id = static_cast<int>(names_.size());
        names_.push_back(name);
        index_.emplace(name, id);
        return id;
    }

    std::optional<int> find(const std::string& name) const {
        auto it = index_.find(name);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    int require(const std::string& name) const {
        auto id = find(name);
        if (!id) throw AlphabetError("unknown symbol '" + name + "'");
        return *id;
    }

    const std::string& name(int id) const {
        if (id < 0 || id >= size()) throw AlphabetError("symbol id out of range");
        return names_[static_cast<std::size_t>(id)];
    }

    int size() const { return static_cast<int>(names_.size()); }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, int> index_;
};

} // namespace prgfl

#endif
