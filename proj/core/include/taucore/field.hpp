#ifndef TAUCORE_FIELD_HPP
#define TAUCORE_FIELD_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace tauv {

/// Coefficient field for homology: GF(p) for a prime p, or the rationals.
struct FieldSpec {
    enum class Kind { prime, rationals };
    Kind kind = Kind::prime;
    std::uint64_t p = 2;

    static FieldSpec fp(std::uint64_t prime) {
        if (prime < 2) throw std::invalid_argument("field characteristic must be >= 2");
        for (std::uint64_t d = 2; d * d <= prime; ++d)
            if (prime % d == 0) throw std::invalid_argument("field characteristic must be prime");
        return {Kind::prime, prime};
    }
    static FieldSpec rationals() { return {Kind::rationals, 0}; }

    bool is_rational() const { return kind == Kind::rationals; }

    /// Accepts "fp:<p>" or "q".
    static FieldSpec parse(const std::string& s) {
        if (s == "q" || s == "Q") return rationals();
        if (s.rfind("fp:", 0) == 0) return fp(std::stoull(s.substr(3)));
        throw std::invalid_argument("bad field spec '" + s + "' (want fp:<p> or q)");
    }
    std::string to_string() const {
        return is_rational() ? "q" : "fp:" + std::to_string(p);
    }

    bool operator==(const FieldSpec&) const = default;
};

}  // namespace tauv

#endif
