#pragma once

#define SVMA_VERSION_STRING "0.1.0"

namespace svma {
inline const char* version() { return SVMA_VERSION_STRING; }
}
