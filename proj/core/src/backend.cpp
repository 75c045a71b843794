#include "mobilicast/backend.hpp"

#include <cmath>

#include "mobilicast/errors.hpp"

namespace mobilicast
{

void validate_decoding(const DecodingConfig& d)
{
    if (!std::isfinite(d.temperature) || d.temperature < 0.0) {
        throw InvalidConfig("temperature must be finite and >= 0");
    }
    if (d.top_k && *d.top_k < 1) {
        throw InvalidConfig("top_k must be >= 1 when set");
    }
    if (d.max_tokens < 1) {
        throw InvalidConfig("max_tokens must be >= 1");
    }
}

} // namespace mobilicast
