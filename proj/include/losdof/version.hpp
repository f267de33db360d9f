#ifndef LOSDOF_VERSION_HPP
#define LOSDOF_VERSION_HPP

namespace losdof {

inline constexpr const char* kVersion = "0.1.0";

}

#endif
