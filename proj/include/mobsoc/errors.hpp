#pragma once

#include <stdexcept>

namespace mobsoc {

// Bad arguments or malformed configuration. The CLI maps this to exit code 2.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Unusable input data, I/O failure, or an analysis that is undefined on the
// given data (e.g. modularity of an edgeless graph). CLI exit code 3.
struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace mobsoc
