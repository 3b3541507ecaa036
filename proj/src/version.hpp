#ifndef SPECRANGE_VERSION_HPP
#define SPECRANGE_VERSION_HPP

namespace specrange {

inline constexpr const char* kCodeVersion = "specrange 1.0.0";
inline constexpr const char* kCsvSchemaComment = "# specrange-schema v1";

}  // namespace specrange

#endif
