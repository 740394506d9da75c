/*
 * Copyright (c) 2026 the qdmi-stack developers
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include "qdmi/core/result.hpp"
#include "qdmi/core/status.hpp"

#include <string_view>

namespace qdmi::plugin {

/**
 * @brief Maps a native backend job state onto the coarse interface status.
 *
 * The native vocabulary is finer-grained than the interface one, so many
 * in-flight states collapse onto RUNNING. Strings outside the known
 * vocabulary are a protocol error, not a job failure.
 */
[[nodiscard]] auto mapNativeStatus(std::string_view native)
    -> Result<JobStatus>;

} // namespace qdmi::plugin
