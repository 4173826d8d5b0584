#include "cgg/errors.hpp"

namespace cgg {

namespace {

std::string join(const std::vector<std::string>& parts) {
    std::string out = "seed violates constraints:";
    for (const auto& p : parts) out += " [" + p + "]";
    return out;
}

}  // namespace

SeedViolation::SeedViolation(std::vector<std::string> reasons)
    : Error(join(reasons)), reasons_(std::move(reasons)) {}

}  // namespace cgg
