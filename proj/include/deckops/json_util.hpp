#pragma once

#include <json.hpp>

#include <gmpxx.h>

namespace deckops {

// Insertion-ordered JSON keeps CLI output byte-stable across runs.
using ordered_json = nlohmann::ordered_json;

// Exact integers render as JSON numbers while they fit the double-safe
// range, and as decimal strings beyond it.
inline ordered_json json_int(const mpz_class& v) {
    static const mpz_class bound = mpz_class(1) << 53;
    if (v > -bound && v < bound) return ordered_json(static_cast<long>(v.get_si()));
    return ordered_json(v.get_str());
}

inline mpz_class json_to_int(const ordered_json& j) {
    if (j.is_string()) return mpz_class(j.get<std::string>());
    return mpz_class(j.get<long>());
}

}  // namespace deckops
