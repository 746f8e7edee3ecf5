#pragma once

namespace claimforge {

inline constexpr const char * kPipelineVersion = "0.1.0";

}  // namespace claimforge
