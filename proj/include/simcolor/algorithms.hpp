#pragma once

#include "simcolor/certificate.hpp"
#include "simcolor/graph.hpp"
#include "simcolor/pair_coloring.hpp"
#include "simcolor/sqrt_coloring.hpp"

#include <string>

namespace simcolor {

/// Parses a colorer name as used on the command line.
[[nodiscard]] inline Algorithm parse_colorer(const std::string& name)
{
    if (name == "sqrt")
        return Algorithm::sqrt_split;
    if (name == "pair")
        return Algorithm::pair_factor;
    if (name == "trivial")
        return Algorithm::trivial_union;
    if (name == "vizing")
        return Algorithm::vizing_single;
    throw invalid_parameter("unknown algorithm \"" + name + "\" (expected sqrt, pair, trivial or vizing)");
}

[[nodiscard]] inline bool applicable(Algorithm algo, const GraphFamily& family)
{
    switch (algo) {
    case Algorithm::pair_factor: return family.size() == 2;
    case Algorithm::vizing_single: return family.size() == 1;
    default: return true;
    }
}

/// Dispatches to one of the colorers. Throws wrong_arity for pair/vizing on
/// families of the wrong size.
[[nodiscard]] inline ColoringResult color_family(Algorithm algo, const GraphFamily& family, SqrtOptions sqrt = {})
{
    switch (algo) {
    case Algorithm::sqrt_split: return color_union_sqrt(family, sqrt);
    case Algorithm::pair_factor: return color_pair(family);
    case Algorithm::trivial_union: return color_union_trivial(family);
    case Algorithm::vizing_single: return color_single(family);
    case Algorithm::exact: break;
    }
    throw invalid_parameter("exact is not a colorer; use exact_chi");
}

} // namespace simcolor
