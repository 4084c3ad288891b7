#pragma once

#include <string>

#include "core/permutation.hpp"

namespace invfact {

/// Parses the image form: a JSON array of 0-based images, e.g. [1,2,0,4,5,3].
Permutation parse_images_json(const std::string& text);

/// Parses cycle notation such as "(1,2,3)(4,5,6)". With one_based, labels are
/// 1-based and are shifted down on ingest. The degree is the largest label
/// seen (plus one when 0-based), or min_degree if that is larger; unmentioned
/// points are fixed. "()" denotes the identity.
Permutation parse_cycle_string(const std::string& text, bool one_based,
                               std::size_t min_degree = 0);

/// Cycle notation with fixed points omitted; "()" for the identity. Cycles
/// start at their minimum point and are sorted by minimum point.
std::string format_cycles(const Permutation& p, bool one_based);

std::string format_images_json(const Permutation& p);

/// Parses a cycle-type spec "k:c,k:c,...", e.g. "1:4" or "2:1,3:2".
CycleType parse_cycle_type_spec(const std::string& text);

}  // namespace invfact
