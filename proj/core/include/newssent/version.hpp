#ifndef NEWSSENT_VERSION_HPP_
#define NEWSSENT_VERSION_HPP_

#include <string_view>

namespace newssent {

inline constexpr std::string_view kToolName = "newssent";
inline constexpr std::string_view kVersion = "0.1.0";

}  // namespace newssent

#endif  // NEWSSENT_VERSION_HPP_
