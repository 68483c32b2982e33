#pragma once

#include <cstddef>
#include <string>

namespace simcolor {

enum class Algorithm { sqrt_split, pair_factor, trivial_union, vizing_single, exact };

inline std::string to_string(Algorithm a)
{
    switch (a) {
    case Algorithm::sqrt_split: return "sqrt";
    case Algorithm::pair_factor: return "pair";
    case Algorithm::trivial_union: return "trivial";
    case Algorithm::vizing_single: return "vizing";
    case Algorithm::exact: return "exact";
    }
    return "unknown";
}

/// Palette claim attached to a coloring. palette_bound is the integer bound the
/// algorithm guarantees for this instance; closed_form_bound is the ceiling of
/// the headline formula (equal to palette_bound where the formula is already
/// an integer).
struct BoundCertificate {
    Algorithm algorithm = Algorithm::trivial_union;
    std::size_t palette_used = 0;
    std::size_t palette_bound = 0;
    std::size_t closed_form_bound = 0;
    std::size_t ell = 0;
    std::size_t delta = 0;
    double k = 0.0;   // multiplicity threshold; 0 when not applicable

    [[nodiscard]] bool holds() const noexcept { return palette_used <= palette_bound; }
};

} // namespace simcolor
