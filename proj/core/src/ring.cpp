#include "cremona/ring.hpp"

#include <unordered_set>

namespace cremona {

Ring::Ring(std::vector<std::string> names) : names_(std::move(names)) {}

std::shared_ptr<const Ring> Ring::create(std::vector<std::string> names) {
    if (names.empty()) throw std::invalid_argument("Ring: needs at least one variable");
    if (names.size() > max_vars)
        throw std::invalid_argument("Ring: at most 12 variables supported");
    std::unordered_set<std::string> seen;
    for (const auto& n : names) {
        if (n.empty()) throw std::invalid_argument("Ring: empty variable name");
        if (!seen.insert(n).second)
            throw std::invalid_argument("Ring: duplicate variable name '" + n + "'");
    }
    return std::shared_ptr<const Ring>(new Ring(std::move(names)));
}

std::optional<std::size_t> Ring::index(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return i;
    return std::nullopt;
}

std::size_t Ring::require_index(const std::string& name) const {
    auto i = index(name);
    if (!i) throw std::invalid_argument("Ring: unknown variable '" + name + "'");
    return *i;
}

namespace rings {

RingPtr coords() {
    static RingPtr r = Ring::create({"x0", "x1", "x2", "x3", "x4"});
    return r;
}

RingPtr coords_t() {
    static RingPtr r = Ring::create({"x0", "x1", "x2", "x3", "x4", "t"});
    return r;
}

RingPtr coords_ts() {
    static RingPtr r = Ring::create({"x0", "x1", "x2", "x3", "x4", "t", "s"});
    return r;
}

RingPtr coords_u() {
    static RingPtr r = Ring::create({"x0", "x1", "x2", "x3", "x4", "u"});
    return r;
}

RingPtr coords_abcd() {
    static RingPtr r = Ring::create({"x0", "x1", "x2", "x3", "x4", "a", "b", "c", "d"});
    return r;
}

RingPtr univariate(const std::string& name) {
    if (name == "u") {
        static RingPtr r = Ring::create({"u"});
        return r;
    }
    return Ring::create({name});
}

} // namespace rings

} // namespace cremona
