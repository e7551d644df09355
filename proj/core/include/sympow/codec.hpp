#ifndef SYMPOW_CODEC_HPP
#define SYMPOW_CODEC_HPP

#include <span>
#include <string>
#include <vector>

namespace sympow {

// Deterministic, collision-free encodings for derived simplex identifiers.
// Components are escaped so that arbitrary loaded ids cannot create ambiguity.
std::string codec_escape(const std::string& s);
std::string encode_pair(const std::string& a, const std::string& b);
std::string encode_tuple(std::span<const std::string> parts);
// parts must already be sorted; the multiset encoding is the canonical orbit id
std::string encode_multiset(std::span<const std::string> sorted_parts);

}  // namespace sympow

#endif
