// SPDX-License-Identifier: Apache-2.0

#pragma once

namespace fsolink {

inline constexpr const char *kToolName = "fsolink";
inline constexpr const char *kToolVersion = "0.1.0";

} // namespace fsolink
